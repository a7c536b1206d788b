#ifndef PIMAC_BOUNDS_HPP
#define PIMAC_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pimac/model.hpp"
#include "pimac/regions.hpp"

namespace pimac {

using Polytope = RatePolytope<double>;

enum class Regime { strong_capacity, vsi_tx1, vsi_tx2, vsi_tx3, full_vsi, unclassified };

std::string_view to_string(Regime r);

// One interference-regime inequality lhs >= rhs, compared exactly.
struct Condition {
  std::string id;
  std::string expression;
  double lhs = 0;
  double rhs = 0;

  double margin() const { return lhs - rhs; }
  bool satisfied() const { return lhs >= rhs; }
};

struct RegimeReport {
  std::vector<Condition> conditions;
  std::vector<Regime> satisfied;
  // Construction capacity_region() hands back; empty when unclassified.
  std::optional<Regime> construction;

  bool has(Regime r) const;
  const Condition& condition(std::string_view id) const;
  bool capacity_known() const { return construction.has_value(); }
};

// Condition ids making up a capacity regime.
std::vector<std::string_view> regime_conditions(Regime r);

RegimeReport classify(const ChannelParams& params);

// Sato-type outer bound: R3 <= C(P3) and (R1,R2) in C^M({1,2},1), plus
// C^M({1,3},2) if h12^2 >= 1, C^M({2,3},2) if h22^2 >= 1 and
// C^M({1,2,3},1) if h31^2 >= 1.
Polytope outer_bound(const ChannelParams& params);

// Both receivers decode all three messages: C^M({1,2,3},1) ∩ C^M({1,2,3},2).
Polytope inner_bound(const ChannelParams& params);

// Region built by the capacity construction of `r`, regardless of whether
// the regime conditions hold. `r` must not be unclassified.
Polytope regime_region(const ChannelParams& params, Regime r);

// Capacity region when at least one regime applies. All applicable
// constructions are cross-checked; disagreement raises ConsistencyError.
std::optional<Polytope> capacity_region(const ChannelParams& params, double tol = kFeasibilityTol);

struct ClaimCheck {
  std::string id;
  bool holds = false;
  // Scalar claims: lhs - rhs in bits. Region claims: minus the largest
  // vertex violation between the two regions (0 when they coincide).
  double margin = 0;
};

// Checks the coincidence and redundancy statements attached to every regime
// that holds at `params`. Claims whose regime does not hold are omitted.
std::vector<ClaimCheck> verify_redundancy_claims(const ChannelParams& params, double tol = kFeasibilityTol);

}  // namespace pimac

#endif  // PIMAC_BOUNDS_HPP
