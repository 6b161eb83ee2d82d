#include "hyperchrom/budget.hpp"

#include <cstdlib>
#include <string>

#include "hyperchrom/errors.hpp"

namespace hyperchrom {

namespace {

long double parse_number(std::string_view key, std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  long double v = std::strtold(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !(v > 0))
    throw InvalidInput("HYPERCHROM_BUDGET: bad value for '" + std::string(key) + "': '" + s + "'");
  return v;
}

}  // namespace

Budget Budget::parse(std::string_view spec) {
  Budget b;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("HYPERCHROM_BUDGET: expected key=value, got '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    auto value = parse_number(key, item.substr(eq + 1));
    if (key == "edges") {
      if (value > 64) throw InvalidInput("HYPERCHROM_BUDGET: edges cap cannot exceed 64");
      b.max_edges = static_cast<int>(value);
    } else if (key == "colorings") {
      b.max_colorings = static_cast<std::uint64_t>(value);
    } else if (key == "slots") {
      b.max_slots = static_cast<int>(value);
    } else {
      throw InvalidInput("HYPERCHROM_BUDGET: unknown key '" + std::string(key) + "'");
    }
  }
  return b;
}

Budget Budget::from_env() {
  const char* env = std::getenv("HYPERCHROM_BUDGET");
  return env ? parse(env) : Budget{};
}

}  // namespace hyperchrom
