#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace hyperchrom {

/// Union-find with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }
  int set_count() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

/// Union-find without path compression, so merges can be undone in LIFO order.
/// Used by depth-first subset enumeration.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    history_.push_back(b);
    return true;
  }
  /// Current position in the merge history.
  std::size_t checkpoint() const noexcept { return history_.size(); }
  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      int b = history_.back();
      history_.pop_back();
      int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
      ++sets_;
    }
  }
  int set_count() const noexcept { return sets_; }
  int element_count() const noexcept { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int sets_;
};

}  // namespace hyperchrom
