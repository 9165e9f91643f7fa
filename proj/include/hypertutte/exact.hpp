#ifndef HYPERTUTTE_EXACT_HPP
#define HYPERTUTTE_EXACT_HPP

#include <vector>

namespace hypertutte {

/// Exact integer determinant via Bareiss fraction-free elimination.
/// Throws std::overflow_error if an intermediate value leaves 64 bits.
long long integer_determinant(std::vector<std::vector<long long>> m);

/// Simple union-find over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), count_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --count_;
    return true;
  }
  int components() const { return count_; }

 private:
  std::vector<int> parent_;
  int count_;
};

}  // namespace hypertutte

#endif
