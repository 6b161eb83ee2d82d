#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "hyperchrom/errors.hpp"
#include "hyperchrom/listcolor.hpp"

namespace hyperchrom {

namespace {

std::vector<int> covered_vertices(const Hypergraph& h) {
  std::vector<bool> in_edge(static_cast<std::size_t>(h.vertex_count()), false);
  for (const auto& e : h.edges())
    for (int v : e) in_edge[v - 1] = true;
  std::vector<int> out;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (in_edge[v]) out.push_back(v);
  return out;
}

ListAssignment assignment_from_masks(const std::vector<std::uint64_t>& masks, int k) {
  std::vector<std::vector<int>> lists;
  lists.reserve(masks.size());
  for (auto m : masks) {
    std::vector<int> l;
    for (auto w = m; w != 0; w &= w - 1) l.push_back(std::countr_zero(w) + 1);
    lists.push_back(std::move(l));
  }
  return ListAssignment(k, std::move(lists));
}

std::uint64_t low_bits(int count) { return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1; }

/// Keeps the minimum value and, among ties, the smallest canonical form.
class Incumbent {
 public:
  void offer(const BigInt& value, const std::vector<std::uint64_t>& masks, int k) {
    if (has_ && value > best_.value) return;
    ListAssignment canon = canonical_form(assignment_from_masks(masks, k));
    if (!has_ || value < best_.value || canon < best_.witness) {
      best_.value = value;
      best_.witness = std::move(canon);
      has_ = true;
    }
  }
  void offer(const BigInt& value, const ListAssignment& l) {
    if (has_ && value > best_.value) return;
    ListAssignment canon = canonical_form(l);
    if (!has_ || value < best_.value || canon < best_.witness) {
      best_.value = value;
      best_.witness = std::move(canon);
      has_ = true;
    }
  }
  ListColorResult& result() { return best_; }

 private:
  bool has_ = false;
  ListColorResult best_;
};

class ClassEnumerator {
 public:
  ClassEnumerator(const Hypergraph& h, const ListColoringCounter& counter, int k, int max_colors)
      : counter_(counter),
        k_(k),
        max_colors_(max_colors),
        active_(covered_vertices(h)),
        masks_(static_cast<std::size_t>(h.vertex_count()), low_bits(k)),
        fast_(counter.uses_expansion() && counter.masks_fit(k)) {}

  ListColorResult run() {
    vertex_step(0, {}, 0);
    auto& r = incumbent_.result();
    r.assignments_examined = examined_;
    return r;
  }

 private:
  using Cells = std::vector<std::vector<int>>;

  void vertex_step(std::size_t i, const Cells& cells, int used) {
    if (i == active_.size()) {
      leaf();
      return;
    }
    std::vector<int> take(cells.size(), 0);
    std::vector<int> suffix(cells.size() + 1, 0);
    for (std::size_t c = cells.size(); c-- > 0;) suffix[c] = suffix[c + 1] + static_cast<int>(cells[c].size());
    cell_step(i, cells, suffix, used, 0, k_, take);
  }

  void cell_step(std::size_t i, const Cells& cells, const std::vector<int>& suffix, int used, std::size_t ci,
                 int remaining, std::vector<int>& take) {
    // whatever the remaining cells cannot supply must be fresh colors
    if (remaining - suffix[ci] > max_colors_ - used) return;
    if (ci == cells.size()) {
      const int fresh = remaining;
      std::uint64_t mask = 0;
      Cells next;
      next.reserve(cells.size() * 2 + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        const auto t = static_cast<std::size_t>(take[c]);
        for (std::size_t j = 0; j < t; ++j) mask |= std::uint64_t{1} << cell[j];
        if (t > 0) next.emplace_back(cell.begin(), cell.begin() + static_cast<std::ptrdiff_t>(t));
        if (t < cell.size()) next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(t), cell.end());
      }
      if (fresh > 0) {
        std::vector<int> fresh_cell;
        for (int j = 0; j < fresh; ++j) {
          fresh_cell.push_back(used + j);
          mask |= std::uint64_t{1} << (used + j);
        }
        next.push_back(std::move(fresh_cell));
      }
      masks_[active_[i]] = mask;
      vertex_step(i + 1, next, used + fresh);
      return;
    }
    const int limit = std::min(remaining, static_cast<int>(cells[ci].size()));
    for (int t = 0; t <= limit; ++t) {
      take[ci] = t;
      cell_step(i, cells, suffix, used, ci + 1, remaining - t, take);
    }
    take[ci] = 0;
  }

  void leaf() {
    ++examined_;
    if (fast_) {
      incumbent_.offer(BigInt(counter_.count_masks(masks_, k_)), masks_, k_);
    } else {
      auto l = assignment_from_masks(masks_, k_);
      incumbent_.offer(counter_.count(l), l);
    }
  }

  const ListColoringCounter& counter_;
  int k_;
  int max_colors_;
  std::vector<int> active_;
  std::vector<std::uint64_t> masks_;
  bool fast_;
  Incumbent incumbent_;
  std::uint64_t examined_ = 0;
};

}  // namespace

ListColorResult list_color_function_exact(const Hypergraph& h, int k, const Budget& budget,
                                          std::optional<int> max_colors) {
  if (k < 0) throw DomainError("list size k must be non-negative");
  const int slots = static_cast<int>(covered_vertices(h).size()) * k;
  if (!max_colors && slots > budget.max_slots)
    throw BudgetExceeded("exact list-color function (list slots)", slots, budget.max_slots);
  const int colors = std::min(max_colors.value_or(slots), slots);
  if (colors < k && slots > 0) throw InvalidInput("color universe smaller than list size");
  if (colors > 64) throw BudgetExceeded("exact list-color function (colors)", colors, 64);

  ListColoringCounter counter(h, EdgeLabelling::identity(h.edge_count()), budget);
  ListColorResult result = ClassEnumerator(h, counter, k, std::max(colors, k)).run();
  result.exhaustive = colors >= slots;
  return result;
}

ListColorResult list_color_function_search(const Hypergraph& h, int k, std::uint64_t iterations,
                                           std::uint64_t seed, const Budget& budget) {
  if (k < 0) throw DomainError("list size k must be non-negative");
  const int n = h.vertex_count();
  const int universe = 2 * k;
  if (universe > 64) throw BudgetExceeded("list-color search (colors)", universe, 64);

  ListColoringCounter counter(h, EdgeLabelling::identity(h.edge_count()), budget);
  const bool fast = counter.uses_expansion() && counter.masks_fit(k);
  auto evaluate = [&](const std::vector<std::uint64_t>& masks) {
    return fast ? BigInt(counter.count_masks(masks, k)) : counter.count(assignment_from_masks(masks, k));
  };

  std::vector<std::uint64_t> current(static_cast<std::size_t>(n), low_bits(k));
  Incumbent incumbent;
  BigInt current_value = evaluate(current);
  incumbent.offer(current_value, current, k);

  const auto active = covered_vertices(h);
  std::uint64_t examined = 1;
  if (!active.empty() && k > 0) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng); };
    auto nth_bit = [](std::uint64_t mask, std::uint64_t index) {
      for (; index > 0; --index) mask &= mask - 1;
      return std::countr_zero(mask);
    };
    auto randomize = [&] {
      std::vector<int> palette(static_cast<std::size_t>(universe));
      for (int c = 0; c < universe; ++c) palette[c] = c;
      for (int v : active) {
        for (int j = 0; j < k; ++j) std::swap(palette[j], palette[j + static_cast<int>(pick(universe - j))]);
        std::uint64_t mask = 0;
        for (int j = 0; j < k; ++j) mask |= std::uint64_t{1} << palette[j];
        current[v] = mask;
      }
      current_value = evaluate(current);
      ++examined;
      incumbent.offer(current_value, current, k);
    };

    const std::uint64_t restart_after = 20 * static_cast<std::uint64_t>(active.size() * k) + 20;
    std::uint64_t stall = 0;
    const std::uint64_t all = low_bits(universe);
    for (std::uint64_t it = 0; it < iterations; ++it) {
      const int v = active[pick(active.size())];
      const std::uint64_t old = current[v];
      const int out = nth_bit(old, pick(static_cast<std::uint64_t>(k)));
      const int in = nth_bit(all & ~old, pick(static_cast<std::uint64_t>(universe - k)));
      current[v] = (old & ~(std::uint64_t{1} << out)) | (std::uint64_t{1} << in);
      BigInt value = evaluate(current);
      ++examined;
      if (value <= current_value) {
        stall = value < current_value ? 0 : stall + 1;
        current_value = std::move(value);
        incumbent.offer(current_value, current, k);
      } else {
        current[v] = old;
        ++stall;
      }
      if (stall >= restart_after) {
        randomize();
        stall = 0;
      }
    }
  }
  auto result = std::move(incumbent.result());
  result.exhaustive = false;
  result.assignments_examined = examined;
  return result;
}

}  // namespace hyperchrom
