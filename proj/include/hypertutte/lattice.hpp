#ifndef HYPERTUTTE_LATTICE_HPP
#define HYPERTUTTE_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypertutte/poly.hpp"

namespace hypertutte {

using Point = std::vector<int>;
/// A permutation of the ground set; position = rank (earlier = smaller).
using GroundOrder = std::vector<std::string>;

/// Finite set of integer points with equal coordinate sums, indexed by a
/// named ground set. The common sum is the "rank" of the set.
class LatticePointSet {
 public:
  LatticePointSet(std::vector<std::string> ground, std::set<Point> points);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::set<Point>& points() const { return points_; }
  bool contains(const Point& p) const { return points_.count(p) > 0; }
  long long rank() const { return rank_; }
  std::size_t size() const { return points_.size(); }

  int ground_index(const std::string& id) const;  // -1 if absent

  bool operator==(const LatticePointSet& o) const {
    return ground_ == o.ground_ && points_ == o.points_;
  }

 private:
  std::vector<std::string> ground_;
  std::set<Point> points_;
  long long rank_ = 0;
};

/// x - unit(from) + unit(to) if that lies in the set, otherwise nullopt.
std::optional<Point> transfer(const LatticePointSet& set, const Point& x,
                              int from, int to);

struct ActivityProfile {
  Point point;
  /// Per ground element (set indexing, not order indexing).
  std::vector<bool> internally_active;
  std::vector<bool> externally_active;
  int internal_inactive = 0;
  int external_inactive = 0;
};

/// Activities of `x` in `set` with respect to `order` (a permutation of the
/// ground set). An element is internally active when no transfer from it to
/// a smaller element stays in the set; externally active when no transfer
/// from a smaller element to it stays in the set.
ActivityProfile activity_profile(const LatticePointSet& set,
                                 const GroundOrder& order, const Point& x);

/// Generating function of internal inactivity counts over all points.
UniPolynomial interior_poly(const LatticePointSet& set, const GroundOrder& order);
/// Generating function of external inactivity counts over all points.
UniPolynomial exterior_poly(const LatticePointSet& set, const GroundOrder& order);

struct OrderIndependenceReport {
  bool interior_independent = true;
  bool exterior_independent = true;
  std::vector<GroundOrder> orders_tried;
  std::vector<UniPolynomial> interior_values;  // parallel to orders_tried
  std::vector<UniPolynomial> exterior_values;
};

/// Evaluates both polynomials under `trials` random orders (plus the
/// canonical one) and reports whether they agree. Evidence only; callers
/// must not treat a positive report as proof.
OrderIndependenceReport order_independence_probe(const LatticePointSet& set,
                                                 int trials,
                                                 std::uint64_t seed);

/// Integer set function on subsets of a named ground set, tabulated over
/// all 2^n subsets (bitmask indexing along the sorted ground order).
class SetFunctionTable {
 public:
  SetFunctionTable(std::vector<std::string> ground, std::vector<long long> values);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t n() const { return ground_.size(); }
  long long value(std::uint64_t subset_mask) const;

 private:
  std::vector<std::string> ground_;
  std::vector<long long> values_;
};

/// Submodularity via the local criterion on pairs above a common subset.
bool is_submodular(const SetFunctionTable& f);
bool is_nondecreasing(const SetFunctionTable& f);

/// All non-negative integer points x with x(U) <= f(U) for every U and
/// x(ground) = f(ground). Requires f submodular, non-decreasing, f(empty)=0.
LatticePointSet base_points(const SetFunctionTable& f);

/// The greedy vertex of the base polytope for the given ground order.
Point greedy_base(const SetFunctionTable& f, const GroundOrder& order);

/// Whether the family of subsets tight at x is closed under union and
/// intersection.
bool tightness_closure_check(const SetFunctionTable& f, const Point& x);

}  // namespace hypertutte

#endif
