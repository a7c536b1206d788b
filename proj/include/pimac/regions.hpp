#ifndef PIMAC_REGIONS_HPP
#define PIMAC_REGIONS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pimac/errors.hpp"
#include "pimac/model.hpp"

namespace pimac {

template <typename Scalar>
using Rates = Eigen::Matrix<Scalar, 3, 1>;

// Absolute tolerance in bits for feasibility and equality tests.
inline constexpr double kFeasibilityTol = 1e-9;
// Vertices closer than this (Euclidean) are the same vertex.
inline constexpr double kVertexDedupDistance = 1e-7;

// sum_{i in mask} R_i <= rhs
template <typename Scalar>
struct RateConstraint {
  Subset mask;
  Scalar rhs{0};

  Rates<Scalar> coeffs() const {
    Rates<Scalar> a;
    for (int i = 0; i < 3; ++i) a(i) = mask.contains(i + 1) ? Scalar(1) : Scalar(0);
    return a;
  }

  Scalar lhs(const Rates<Scalar>& r) const { return coeffs().dot(r); }

  bool operator==(const RateConstraint&) const = default;
};

// A region of nonnegative rate triples cut out by subset-sum constraints.
// Constraints are kept canonical: at most one per mask (the tightest) and
// sorted by mask string. A rate that appears in no constraint is unbounded.
template <typename Scalar>
class RatePolytope {
 public:
  using Constraint = RateConstraint<Scalar>;

  RatePolytope() = default;

  explicit RatePolytope(std::vector<Constraint> constraints) {
    for (const auto& c : constraints) {
      if (c.mask.empty()) throw std::domain_error("rate constraint must involve at least one rate");
      if (!std::isfinite(c.rhs) || c.rhs < 0)
        throw std::domain_error("rate constraint rhs must be finite and nonnegative");
    }
    std::sort(constraints.begin(), constraints.end(), [](const Constraint& a, const Constraint& b) {
      const auto sa = a.mask.str(), sb = b.mask.str();
      return sa != sb ? sa < sb : a.rhs < b.rhs;
    });
    for (const auto& c : constraints)
      if (constraints_.empty() || !(constraints_.back().mask == c.mask)) constraints_.push_back(c);
  }

  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }

  // Rates limited by at least one constraint.
  Subset bounded_rates() const {
    Subset s;
    for (const auto& c : constraints_) s = s | c.mask;
    return s;
  }

  bool bounded() const { return bounded_rates() == Subset::all(); }

  std::optional<Scalar> rhs(Subset mask) const {
    for (const auto& c : constraints_)
      if (c.mask == mask) return c.rhs;
    return std::nullopt;
  }

  RatePolytope without(Subset mask) const {
    std::vector<Constraint> kept;
    for (const auto& c : constraints_)
      if (!(c.mask == mask)) kept.push_back(c);
    return RatePolytope(std::move(kept));
  }

  bool operator==(const RatePolytope&) const = default;

 private:
  std::vector<Constraint> constraints_;
};

using VertexSet = std::vector<Rates<double>>;

namespace detail {

template <typename Scalar>
Scalar violation(const std::vector<RateConstraint<Scalar>>& cs, const Rates<Scalar>& r) {
  Scalar worst = std::max(Scalar(0), -r.minCoeff());
  for (const auto& c : cs) worst = std::max(worst, c.lhs(r) - c.rhs);
  return worst;
}

// Pins every rate that no constraint limits to zero.
template <typename Scalar>
std::vector<RateConstraint<Scalar>> pin_free_rates(std::vector<RateConstraint<Scalar>> cs) {
  Subset covered;
  for (const auto& c : cs) covered = covered | c.mask;
  for (int i = 1; i <= 3; ++i)
    if (!covered.contains(i)) cs.push_back({Subset{i}, Scalar(0)});
  return cs;
}

// Every feasible point where three independent planes from
// {constraint planes} ∪ {R_i = 0} meet. Requires every rate to be bounded.
template <typename Scalar>
std::vector<Rates<Scalar>> enumerate_vertices(const std::vector<RateConstraint<Scalar>>& cs, Scalar tol,
                                              Scalar dedup) {
  const std::size_t n = cs.size() + 3;
  std::vector<Rates<Scalar>> normals(n);
  std::vector<Scalar> offsets(n);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    normals[k] = cs[k].coeffs();
    offsets[k] = cs[k].rhs;
  }
  for (int i = 0; i < 3; ++i) {
    normals[cs.size() + i] = Rates<Scalar>::Unit(i);
    offsets[cs.size() + i] = Scalar(0);
  }

  std::vector<Rates<Scalar>> out;
  Eigen::Matrix<Scalar, 3, 3> m;
  Rates<Scalar> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        m.row(0) = normals[i].transpose();
        m.row(1) = normals[j].transpose();
        m.row(2) = normals[k].transpose();
        // 0/1 matrices have integer determinants.
        if (std::abs(m.determinant()) < Scalar(0.5)) continue;
        b << offsets[i], offsets[j], offsets[k];
        Rates<Scalar> x = m.inverse() * b;
        for (int c = 0; c < 3; ++c)
          if (std::abs(x(c)) <= tol) x(c) = Scalar(0);
        if (violation(cs, x) > tol) continue;
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const Rates<Scalar>& v) { return (v - x).norm() < dedup; });
        if (!seen) out.push_back(x);
      }

  std::sort(out.begin(), out.end(), [](const Rates<Scalar>& a, const Rates<Scalar>& b) {
    return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
  });
  return out;
}

// max w·R over the region; +inf when a positively weighted rate is free.
template <typename Scalar>
Scalar support(const std::vector<RateConstraint<Scalar>>& cs, const Rates<Scalar>& w, Scalar tol) {
  Subset covered;
  for (const auto& c : cs) covered = covered | c.mask;
  for (int i = 1; i <= 3; ++i)
    if (w(i - 1) > 0 && !covered.contains(i)) return std::numeric_limits<Scalar>::infinity();
  const auto vs = enumerate_vertices(pin_free_rates(cs), tol, Scalar(kVertexDedupDistance));
  Scalar best = -std::numeric_limits<Scalar>::infinity();
  for (const auto& v : vs) best = std::max(best, w.dot(v));
  return best;
}

}  // namespace detail

// C^M(S, j): sum_{i in T} R_i <= C(sum_{i in T} g(i,j)^2 P_i) for every
// nonempty T ⊆ S. Rates outside S are left free.
template <typename Scalar>
RatePolytope<Scalar> mac_region(const BasicChannelParams<Scalar>& params, Subset subset, Receiver rx) {
  if (subset.empty()) throw std::domain_error("mac_region: transmitter subset must be nonempty");
  std::vector<RateConstraint<Scalar>> cs;
  for_each_nonempty_subset(subset, [&](Subset t) { cs.push_back({t, cap(effective_snr(params, t, rx))}); });
  return RatePolytope<Scalar>(std::move(cs));
}

// Constraint union with per-mask minimum; no redundancy removal.
template <typename Scalar>
RatePolytope<Scalar> merge(const RatePolytope<Scalar>& a, const RatePolytope<Scalar>& b) {
  auto cs = a.constraints();
  cs.insert(cs.end(), b.constraints().begin(), b.constraints().end());
  return RatePolytope<Scalar>(std::move(cs));
}

// Drops each constraint whose bound is already implied by the constraints
// still kept. Wider masks are tried first, so on ties the constraint on
// fewer rates survives.
template <typename Scalar>
RatePolytope<Scalar> eliminate_redundant(const RatePolytope<Scalar>& p, Scalar tol = Scalar(kFeasibilityTol)) {
  std::vector<RateConstraint<Scalar>> order = p.constraints();
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.mask.size() > b.mask.size(); });
  std::vector<bool> dropped(order.size(), false);
  std::vector<RateConstraint<Scalar>> others;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    others.clear();
    for (std::size_t k = 0; k < order.size(); ++k)
      if (k != idx && !dropped[k]) others.push_back(order[k]);
    if (detail::support(others, order[idx].coeffs(), tol) <= order[idx].rhs + tol) dropped[idx] = true;
  }
  std::vector<RateConstraint<Scalar>> kept;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (!dropped[k]) kept.push_back(order[k]);
  return RatePolytope<Scalar>(std::move(kept));
}

template <typename Scalar>
RatePolytope<Scalar> intersect(const RatePolytope<Scalar>& a, const RatePolytope<Scalar>& b,
                               Scalar tol = Scalar(kFeasibilityTol)) {
  return eliminate_redundant(merge(a, b), tol);
}

template <typename Scalar>
std::vector<Rates<Scalar>> vertices(const RatePolytope<Scalar>& p, Scalar tol = Scalar(kFeasibilityTol),
                                    Scalar dedup = Scalar(kVertexDedupDistance)) {
  const Subset covered = p.bounded_rates();
  for (int i = 1; i <= 3; ++i)
    if (!covered.contains(i)) throw UnboundedRegion(i);
  return detail::enumerate_vertices(p.constraints(), tol, dedup);
}

template <typename Scalar>
bool contains(const RatePolytope<Scalar>& p, const Rates<Scalar>& point, Scalar tol = Scalar(kFeasibilityTol)) {
  return detail::violation(p.constraints(), point) <= tol;
}

// Largest amount by which a vertex of one region violates the other.
template <typename Scalar>
Scalar region_distance(const RatePolytope<Scalar>& a, const RatePolytope<Scalar>& b) {
  Scalar worst{0};
  for (const auto& v : vertices(a)) worst = std::max(worst, detail::violation(b.constraints(), v));
  for (const auto& v : vertices(b)) worst = std::max(worst, detail::violation(a.constraints(), v));
  return worst;
}

template <typename Scalar>
bool region_equal(const RatePolytope<Scalar>& a, const RatePolytope<Scalar>& b,
                  Scalar tol = Scalar(kFeasibilityTol)) {
  return region_distance(a, b) <= tol;
}

// a ⊆ b, checked on the vertices of a.
template <typename Scalar>
bool region_subset(const RatePolytope<Scalar>& a, const RatePolytope<Scalar>& b,
                   Scalar tol = Scalar(kFeasibilityTol)) {
  for (const auto& v : vertices(a))
    if (!contains(b, v, tol)) return false;
  return true;
}

template <typename Scalar>
Scalar max_weighted_sum(const RatePolytope<Scalar>& p, const Rates<Scalar>& weights,
                        Scalar tol = Scalar(kFeasibilityTol)) {
  if (weights.minCoeff() < 0) throw std::domain_error("max_weighted_sum: weights must be nonnegative");
  const Subset covered = p.bounded_rates();
  for (int i = 1; i <= 3; ++i)
    if (weights(i - 1) > 0 && !covered.contains(i)) throw UnboundedRegion(i);
  return detail::support(p.constraints(), weights, tol);
}

template <typename Scalar>
Scalar max_sum_rate(const RatePolytope<Scalar>& p) {
  return max_weighted_sum(p, Rates<Scalar>::Ones().eval());
}

}  // namespace pimac

#endif  // PIMAC_REGIONS_HPP
