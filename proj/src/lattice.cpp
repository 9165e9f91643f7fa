#include "hypertutte/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hypertutte {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<int> order_positions(const std::vector<std::string>& ground,
                                 const GroundOrder& order) {
  require(order.size() == ground.size(), "order size mismatch");
  std::vector<int> pos(ground.size(), -1);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    auto it = std::find(ground.begin(), ground.end(), order[rank]);
    require(it != ground.end(), "order element not in ground set");
    std::size_t idx = static_cast<std::size_t>(it - ground.begin());
    require(pos[idx] == -1, "order repeats an element");
    pos[idx] = static_cast<int>(rank);
  }
  return pos;
}

}  // namespace

LatticePointSet::LatticePointSet(std::vector<std::string> ground,
                                 std::set<Point> points)
    : ground_(std::move(ground)), points_(std::move(points)) {
  require(!points_.empty(), "empty point set");
  bool first = true;
  for (const auto& p : points_) {
    require(p.size() == ground_.size(), "point arity mismatch");
    long long s = std::accumulate(p.begin(), p.end(), 0LL);
    if (first) {
      rank_ = s;
      first = false;
    } else {
      require(s == rank_, "points have unequal coordinate sums");
    }
  }
}

int LatticePointSet::ground_index(const std::string& id) const {
  for (std::size_t i = 0; i < ground_.size(); ++i)
    if (ground_[i] == id) return static_cast<int>(i);
  return -1;
}

std::optional<Point> transfer(const LatticePointSet& set, const Point& x,
                              int from, int to) {
  if (from == to) return std::nullopt;
  Point y = x;
  y[static_cast<std::size_t>(from)] -= 1;
  y[static_cast<std::size_t>(to)] += 1;
  if (set.contains(y)) return y;
  return std::nullopt;
}

ActivityProfile activity_profile(const LatticePointSet& set,
                                 const GroundOrder& order, const Point& x) {
  require(set.contains(x), "point not in set");
  const auto pos = order_positions(set.ground(), order);
  const std::size_t n = set.ground().size();
  ActivityProfile out;
  out.point = x;
  out.internally_active.assign(n, true);
  out.externally_active.assign(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pos[j] >= pos[i]) continue;
      if (out.internally_active[i] &&
          transfer(set, x, static_cast<int>(i), static_cast<int>(j)))
        out.internally_active[i] = false;
      if (out.externally_active[i] &&
          transfer(set, x, static_cast<int>(j), static_cast<int>(i)))
        out.externally_active[i] = false;
    }
    if (!out.internally_active[i]) ++out.internal_inactive;
    if (!out.externally_active[i]) ++out.external_inactive;
  }
  return out;
}

UniPolynomial interior_poly(const LatticePointSet& set, const GroundOrder& order) {
  UniPolynomial p;
  for (const auto& x : set.points())
    p.add_term(activity_profile(set, order, x).internal_inactive, 1);
  return p;
}

UniPolynomial exterior_poly(const LatticePointSet& set, const GroundOrder& order) {
  UniPolynomial p;
  for (const auto& x : set.points())
    p.add_term(activity_profile(set, order, x).external_inactive, 1);
  return p;
}

OrderIndependenceReport order_independence_probe(const LatticePointSet& set,
                                                 int trials,
                                                 std::uint64_t seed) {
  require(trials >= 0, "negative trial count");
  OrderIndependenceReport report;
  std::mt19937_64 rng(seed);
  GroundOrder order = set.ground();
  for (int t = 0; t <= trials; ++t) {
    if (t > 0) std::shuffle(order.begin(), order.end(), rng);
    report.orders_tried.push_back(order);
    report.interior_values.push_back(interior_poly(set, order));
    report.exterior_values.push_back(exterior_poly(set, order));
    if (report.interior_values.back() != report.interior_values.front())
      report.interior_independent = false;
    if (report.exterior_values.back() != report.exterior_values.front())
      report.exterior_independent = false;
  }
  return report;
}

SetFunctionTable::SetFunctionTable(std::vector<std::string> ground,
                                   std::vector<long long> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  require(ground_.size() <= 20, "ground set too large");
  require(std::is_sorted(ground_.begin(), ground_.end()) &&
              std::adjacent_find(ground_.begin(), ground_.end()) == ground_.end(),
          "ground set must be sorted and duplicate-free");
  require(values_.size() == (std::size_t{1} << ground_.size()),
          "value table must cover all subsets");
  require(values_[0] == 0, "value of the empty set must be 0");
}

long long SetFunctionTable::value(std::uint64_t subset_mask) const {
  return values_.at(static_cast<std::size_t>(subset_mask));
}

bool is_submodular(const SetFunctionTable& f) {
  // Local criterion: f(U+a) + f(U+b) >= f(U) + f(U+a+b) for a,b outside U.
  const std::size_t n = f.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t u = 0; u <= full; ++u) {
    for (std::size_t a = 0; a < n; ++a) {
      if (u & (std::uint64_t{1} << a)) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (u & (std::uint64_t{1} << b)) continue;
        std::uint64_t ua = u | (std::uint64_t{1} << a);
        std::uint64_t ub = u | (std::uint64_t{1} << b);
        if (f.value(ua) + f.value(ub) < f.value(u) + f.value(ua | ub))
          return false;
      }
    }
  }
  return true;
}

bool is_nondecreasing(const SetFunctionTable& f) {
  const std::size_t n = f.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t u = 0; u <= full; ++u)
    for (std::size_t a = 0; a < n; ++a) {
      if (u & (std::uint64_t{1} << a)) continue;
      if (f.value(u | (std::uint64_t{1} << a)) < f.value(u)) return false;
    }
  return true;
}

namespace {

void base_points_rec(const SetFunctionTable& f, std::size_t k, Point& x,
                     long long sum, std::set<Point>& out) {
  const std::size_t n = f.n();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (k == n) {
    if (sum == f.value(full)) out.insert(x);
    return;
  }
  // Remaining coordinates can add at most the sum of their singleton caps.
  long long slack = 0;
  for (std::size_t j = k + 1; j < n; ++j)
    slack += f.value(std::uint64_t{1} << j);
  // Upper bound on x_k from every constraint whose maximal element is k.
  long long cap = f.value(std::uint64_t{1} << k);
  const std::uint64_t below = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t u = below;; u = (u - 1) & below) {
    long long partial = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (u & (std::uint64_t{1} << j)) partial += x[j];
    cap = std::min(cap, f.value(u | (std::uint64_t{1} << k)) - partial);
    if (u == 0) break;
  }
  for (long long v = 0; v <= cap; ++v) {
    if (sum + v + slack < f.value(full)) continue;
    x[k] = static_cast<int>(v);
    base_points_rec(f, k + 1, x, sum + v, out);
  }
  x[k] = 0;
}

}  // namespace

LatticePointSet base_points(const SetFunctionTable& f) {
  require(f.value(0) == 0, "f(empty) must be 0");
  require(is_nondecreasing(f), "f must be non-decreasing");
  require(is_submodular(f), "f must be submodular");
  std::set<Point> out;
  Point x(f.n(), 0);
  base_points_rec(f, 0, x, 0, out);
  return LatticePointSet(f.ground(), std::move(out));
}

Point greedy_base(const SetFunctionTable& f, const GroundOrder& order) {
  const auto pos = order_positions(f.ground(), order);
  Point x(f.n(), 0);
  std::uint64_t prefix = 0;
  long long prev = 0;
  for (std::size_t rank = 0; rank < f.n(); ++rank) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < f.n(); ++i)
      if (pos[i] == static_cast<int>(rank)) idx = i;
    prefix |= std::uint64_t{1} << idx;
    long long cur = f.value(prefix);
    x[idx] = static_cast<int>(cur - prev);
    prev = cur;
  }
  return x;
}

bool tightness_closure_check(const SetFunctionTable& f, const Point& x) {
  require(x.size() == f.n(), "point arity mismatch");
  const std::uint64_t full = (std::uint64_t{1} << f.n()) - 1;
  auto weight = [&](std::uint64_t u) {
    long long s = 0;
    for (std::size_t i = 0; i < f.n(); ++i)
      if (u & (std::uint64_t{1} << i)) s += x[i];
    return s;
  };
  std::vector<std::uint64_t> tight;
  for (std::uint64_t u = 0; u <= full; ++u)
    if (weight(u) == f.value(u)) tight.push_back(u);
  std::set<std::uint64_t> tight_set(tight.begin(), tight.end());
  for (std::uint64_t a : tight)
    for (std::uint64_t b : tight)
      if (!tight_set.count(a | b) || !tight_set.count(a & b)) return false;
  return true;
}

}  // namespace hypertutte
