#pragma once

#include <numeric>
#include <vector>

namespace fibcat {

// Plain union–find with path halving; used for quotienting zigzag relations
// (cocomma cross homs, gamut composites) and pi0. The test suites recompute
// the same quotients by fixpoint iteration to keep this honest.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as the root so representatives are minima.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace fibcat
