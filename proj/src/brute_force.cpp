#include "brute_force.hpp"

#include <string>

#include "hyperchrom/errors.hpp"

namespace hyperchrom::detail {

namespace {

class Backtracker {
 public:
  Backtracker(const Hypergraph& h, const std::vector<std::vector<int>>& lists)
      : lists_(lists), closing_(static_cast<std::size_t>(h.vertex_count())), colors_(lists.size(), 0) {
    for (const auto& e : h.edges()) {
      if (e.empty()) continue;
      std::vector<int> others;
      for (std::size_t i = 0; i + 1 < e.size(); ++i) others.push_back(e[i] - 1);
      closing_[e.back() - 1].push_back(std::move(others));
    }
  }

  std::uint64_t run() {
    count_ = 0;
    descend(0);
    return count_;
  }

 private:
  void descend(std::size_t v) {
    if (v == lists_.size()) {
      ++count_;
      return;
    }
    for (int c : lists_[v]) {
      if (closes_monochromatic(v, c)) continue;
      colors_[v] = c;
      descend(v + 1);
    }
  }

  bool closes_monochromatic(std::size_t v, int c) const {
    for (const auto& others : closing_[v]) {
      bool mono = true;
      for (int u : others) {
        if (colors_[u] != c) {
          mono = false;
          break;
        }
      }
      if (mono) return true;
    }
    return false;
  }

  const std::vector<std::vector<int>>& lists_;
  // closing_[v]: for each edge whose largest vertex is v, its other vertices
  std::vector<std::vector<std::vector<int>>> closing_;
  std::vector<int> colors_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t count_list_colorings_brute_force(const Hypergraph& h, const std::vector<std::vector<int>>& lists,
                                               const Budget& budget, const char* what) {
  if (static_cast<int>(lists.size()) != h.vertex_count())
    throw InvalidInput("list count does not match vertex count");
  long double space = 1;
  for (const auto& l : lists) space *= static_cast<long double>(l.size());
  if (space > static_cast<long double>(budget.max_colorings))
    throw BudgetExceeded(std::string(what) + " (coloring space)", space,
                         static_cast<long double>(budget.max_colorings));
  return Backtracker(h, lists).run();
}

}  // namespace hyperchrom::detail
