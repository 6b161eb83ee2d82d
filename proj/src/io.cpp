#include "hyperchrom/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hyperchrom/errors.hpp"

namespace hyperchrom {

namespace {

using json = nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidInput(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> as_int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InvalidInput("hypergraph must be an object with fields \"n\" and \"edges\"");
  const int n = as_int(j["n"], "n");
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (!j["edges"].is_array()) throw InvalidInput("edges must be an array");
  std::vector<std::vector<int>> edges;
  for (const auto& e : j["edges"]) edges.push_back(as_int_array(e, "edge"));
  return make_hypergraph(n, std::move(edges));
}

Hypergraph load_hypergraph(const std::filesystem::path& path) { return parse_hypergraph(read_text_file(path)); }

std::string to_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.vertex_count();
  j["edges"] = h.edges();
  return j.dump();
}

ListAssignment parse_list_assignment(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("k") || !j.contains("lists"))
    throw InvalidInput("assignment must be an object with fields \"k\" and \"lists\"");
  const int k = as_int(j["k"], "k");
  const auto& lists = j["lists"];
  std::vector<std::vector<int>> out;
  if (lists.is_array()) {
    for (const auto& l : lists) out.push_back(as_int_array(l, "list"));
  } else if (lists.is_object()) {
    out.resize(lists.size());
    for (const auto& [key, value] : lists.items()) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || v < 1 || v > static_cast<int>(lists.size()))
        throw InvalidInput("list keys must be the vertices 1..n, got \"" + key + "\"");
      out[static_cast<std::size_t>(v - 1)] = as_int_array(value, "list");
    }
  } else {
    throw InvalidInput("lists must be an object or an array");
  }
  return ListAssignment(k, std::move(out));
}

ListAssignment load_list_assignment(const std::filesystem::path& path) {
  return parse_list_assignment(read_text_file(path));
}

nlohmann::ordered_json to_json_value(const ListAssignment& l) {
  nlohmann::ordered_json j;
  j["k"] = l.k();
  nlohmann::ordered_json lists = nlohmann::ordered_json::object();
  for (int v = 1; v <= l.vertex_count(); ++v) lists[std::to_string(v)] = l.list(v);
  j["lists"] = std::move(lists);
  return j;
}

std::string to_json(const ListAssignment& l) { return to_json_value(l).dump(); }

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::ordered_json to_json_value(const IntPolynomial& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, big_to_json(c)});
  return arr;
}

std::string format_subset(EdgeSubset s) {
  std::string out = "[";
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  });
  return out + "]";
}

std::string format_real(Real v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << static_cast<double>(v);
  return os.str();
}

std::string report_csv_header() { return "name,m,r,rho,k,lhs,rhs,verdict"; }

std::string to_csv_row(const BoundReport& r) {
  auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream os;
  os << r.name << ',' << opt(r.m) << ',' << opt(r.r) << ',' << opt(r.rho) << ',' << opt(r.k) << ','
     << format_real(r.lhs) << ',' << format_real(r.rhs) << ',' << to_string(r.verdict);
  return os.str();
}

nlohmann::ordered_json to_json_value(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  if (r.m) inputs["m"] = *r.m;
  if (r.r) inputs["r"] = *r.r;
  if (r.rho) inputs["rho"] = *r.rho;
  if (r.k) inputs["k"] = *r.k;
  if (r.n) inputs["n"] = *r.n;
  j["inputs"] = std::move(inputs);
  j["lhs"] = format_real(r.lhs);
  j["relation"] = r.relation;
  j["rhs"] = format_real(r.rhs);
  j["verdict"] = std::string(to_string(r.verdict));
  j["applicability"] = r.applicability;
  j["detail"] = r.detail;
  return j;
}

}  // namespace hyperchrom
