#include "pimac/bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "pimac/errors.hpp"

namespace pimac {
namespace {

// Preferred construction first when several regimes hold.
constexpr std::array<Regime, 5> kConstructionOrder = {Regime::full_vsi, Regime::vsi_tx3, Regime::vsi_tx1,
                                                      Regime::vsi_tx2, Regime::strong_capacity};

Polytope mac(const ChannelParams& p, Subset s, int rx) { return mac_region(p, s, receiver_from_id(rx)); }

Polytope single(Subset mask, double rhs) { return Polytope({{mask, rhs}}); }

Polytope intersect_all(std::initializer_list<Polytope> parts) {
  Polytope merged;
  for (const auto& part : parts) merged = merge(merged, part);
  return eliminate_redundant(merged);
}

ClaimCheck scalar_claim(std::string id, double lhs, double rhs) { return {std::move(id), lhs >= rhs, lhs - rhs}; }

ClaimCheck region_claim(std::string id, const Polytope& a, const Polytope& b, double tol) {
  const double d = region_distance(a, b);
  return {std::move(id), d <= tol, -d};
}

// Rx2 decodes X1 treating X2, X3 as noise, then C^M({2,3},2); rx1 decodes
// everything.
Polytope vsi_tx1_achievable(const ChannelParams& p) {
  const double x1_first = cap(p.h12 * p.h12 * p.p1 / (1 + p.p3 + p.h22 * p.h22 * p.p2));
  return intersect_all({single(Subset{1}, x1_first), mac(p, {2, 3}, 2), mac(p, {1, 2, 3}, 1)});
}

Polytope vsi_tx2_achievable(const ChannelParams& p) {
  const double x2_first = cap(p.h22 * p.h22 * p.p2 / (1 + p.p3 + p.h12 * p.h12 * p.p1));
  return intersect_all({single(Subset{2}, x2_first), mac(p, {1, 3}, 2), mac(p, {1, 2, 3}, 1)});
}

// Rx1 decodes X3 treating X1, X2 as noise, then C^M({1,2},1); rx2 decodes
// everything.
Polytope vsi_tx3_achievable(const ChannelParams& p) {
  const double x3_first = cap(p.h31 * p.h31 * p.p3 / (1 + p.p1 + p.p2));
  return intersect_all({single(Subset{3}, x3_first), mac(p, {1, 2}, 1), mac(p, {1, 2, 3}, 2)});
}

// Each receiver decodes the interference first, treating its own signal as
// noise, then decodes its own messages interference-free.
Polytope full_vsi_achievable(const ChannelParams& p) {
  const double x3_at_rx1 = cap(p.h31 * p.h31 * p.p3 / (1 + p.p1 + p.p2));
  std::vector<RateConstraint<double>> mac_at_rx2;
  for_each_nonempty_subset(Subset{1, 2}, [&](Subset t) {
    mac_at_rx2.push_back({t, cap(effective_snr(p, t, Receiver::two) / (1 + p.p3))});
  });
  return intersect_all({single(Subset{3}, x3_at_rx1), mac(p, {1, 2}, 1), Polytope(mac_at_rx2),
                        single(Subset{3}, cap(p.p3))});
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::strong_capacity: return "STRONG_CAPACITY";
    case Regime::vsi_tx1: return "VSI_TX1";
    case Regime::vsi_tx2: return "VSI_TX2";
    case Regime::vsi_tx3: return "VSI_TX3";
    case Regime::full_vsi: return "FULL_VSI";
    case Regime::unclassified: return "UNCLASSIFIED";
  }
  return "UNKNOWN";
}

bool RegimeReport::has(Regime r) const { return std::find(satisfied.begin(), satisfied.end(), r) != satisfied.end(); }

const Condition& RegimeReport::condition(std::string_view id) const {
  for (const auto& c : conditions)
    if (c.id == id) return c;
  throw std::out_of_range("unknown condition id: " + std::string(id));
}

std::vector<std::string_view> regime_conditions(Regime r) {
  switch (r) {
    case Regime::strong_capacity: return {"h12_strong", "h22_strong", "h31_strong", "strong_sum"};
    case Regime::vsi_tx1: return {"h12_very_strong_tx1", "h22_strong", "h31_strong"};
    case Regime::vsi_tx2: return {"h22_very_strong_tx2", "h12_strong", "h31_strong"};
    case Regime::vsi_tx3: return {"h12_strong", "h22_strong", "h31_very_strong", "rx2_sum_redundant"};
    case Regime::full_vsi: return {"h12_very_strong", "h22_very_strong", "h31_very_strong"};
    case Regime::unclassified: return {};
  }
  return {};
}

RegimeReport classify(const ChannelParams& params) {
  params.validate();
  const auto& [p1, p2, p3, h12, h22, h31] = params;
  const double g12 = h12 * h12, g22 = h22 * h22, g31 = h31 * h31;

  RegimeReport report;
  report.conditions = {
      {"h12_strong", "h12^2 >= 1", g12, 1},
      {"h22_strong", "h22^2 >= 1", g22, 1},
      {"h31_strong", "h31^2 >= 1", g31, 1},
      {"strong_sum", "h12^2 P1 + h22^2 P2 + P3 >= P1 + P2 + h31^2 P3", g12 * p1 + g22 * p2 + p3,
       p1 + p2 + g31 * p3},
      {"h12_very_strong_tx1", "h12^2 >= 1 + P3 + h22^2 P2", g12, 1 + p3 + g22 * p2},
      {"h22_very_strong_tx2", "h22^2 >= 1 + P3 + h12^2 P1", g22, 1 + p3 + g12 * p1},
      {"h31_very_strong", "h31^2 >= 1 + P1 + P2", g31, 1 + p1 + p2},
      {"rx2_sum_redundant", "h12^2 P1 + h22^2 P2 >= (P1 + P2)(1 + P3)", g12 * p1 + g22 * p2, (p1 + p2) * (1 + p3)},
      {"h12_very_strong", "h12^2 >= 1 + P3", g12, 1 + p3},
      {"h22_very_strong", "h22^2 >= 1 + P3", g22, 1 + p3},
  };

  for (Regime r : {Regime::strong_capacity, Regime::vsi_tx1, Regime::vsi_tx2, Regime::vsi_tx3, Regime::full_vsi}) {
    const auto ids = regime_conditions(r);
    if (std::all_of(ids.begin(), ids.end(), [&](std::string_view id) { return report.condition(id).satisfied(); }))
      report.satisfied.push_back(r);
  }
  for (Regime r : kConstructionOrder)
    if (report.has(r)) {
      report.construction = r;
      break;
    }
  if (report.satisfied.empty()) report.satisfied.push_back(Regime::unclassified);
  return report;
}

Polytope outer_bound(const ChannelParams& params) {
  params.validate();
  Polytope merged = merge(single(Subset{3}, cap(params.p3)), mac(params, {1, 2}, 1));
  if (params.h12 * params.h12 >= 1) merged = merge(merged, mac(params, {1, 3}, 2));
  if (params.h22 * params.h22 >= 1) merged = merge(merged, mac(params, {2, 3}, 2));
  if (params.h31 * params.h31 >= 1) merged = merge(merged, mac(params, {1, 2, 3}, 1));
  return eliminate_redundant(merged);
}

Polytope inner_bound(const ChannelParams& params) {
  params.validate();
  return intersect(mac(params, {1, 2, 3}, 1), mac(params, {1, 2, 3}, 2));
}

Polytope regime_region(const ChannelParams& params, Regime r) {
  params.validate();
  switch (r) {
    case Regime::strong_capacity:
      return inner_bound(params);
    case Regime::vsi_tx1:
      return intersect(mac(params, {2, 3}, 2), mac(params, {1, 2, 3}, 1));
    case Regime::vsi_tx2:
      return intersect(mac(params, {1, 3}, 2), mac(params, {1, 2, 3}, 1));
    case Regime::vsi_tx3:
      return intersect_all({mac(params, {1, 3}, 2), mac(params, {2, 3}, 2), mac(params, {1, 2}, 1)});
    case Regime::full_vsi:
      return intersect(single(Subset{3}, cap(params.p3)), mac(params, {1, 2}, 1));
    case Regime::unclassified:
      break;
  }
  throw std::domain_error("regime_region: no capacity construction for UNCLASSIFIED");
}

std::optional<Polytope> capacity_region(const ChannelParams& params, double tol) {
  const RegimeReport report = classify(params);
  if (!report.construction) return std::nullopt;

  const Polytope chosen = regime_region(params, *report.construction);
  for (Regime r : report.satisfied) {
    if (r == *report.construction) continue;
    const double d = region_distance(chosen, regime_region(params, r));
    if (d > tol)
      throw ConsistencyError("capacity constructions " + std::string(to_string(*report.construction)) + " and " +
                             std::string(to_string(r)) + " disagree by " + std::to_string(d) + " bits");
  }
  return chosen;
}

std::vector<ClaimCheck> verify_redundancy_claims(const ChannelParams& params, double tol) {
  const RegimeReport report = classify(params);
  const auto& [p1, p2, p3, h12, h22, h31] = params;
  const double g12 = h12 * h12, g22 = h22 * h22, g31 = h31 * h31;
  std::vector<ClaimCheck> claims;

  if (report.has(Regime::strong_capacity))
    claims.push_back(region_claim("strong.inner_equals_outer", inner_bound(params), outer_bound(params), tol));

  if (report.has(Regime::vsi_tx1)) {
    claims.push_back(scalar_claim("vsi_tx1.decode_x1_first", cap(g12 * p1 / (1 + p3 + g22 * p2)), cap(p1)));
    claims.push_back(region_claim(
        "vsi_tx1.mac13_rx2_redundant",
        intersect_all({mac(params, {1, 3}, 2), mac(params, {2, 3}, 2), mac(params, {1, 2, 3}, 1)}),
        intersect_all({mac(params, {2, 3}, 2), mac(params, {1, 2, 3}, 1)}), tol));
    const Polytope capacity = regime_region(params, Regime::vsi_tx1);
    claims.push_back(region_claim("vsi_tx1.outer_equals_capacity", outer_bound(params), capacity, tol));
    claims.push_back(region_claim("vsi_tx1.achievable_equals_capacity", vsi_tx1_achievable(params), capacity, tol));
  }

  if (report.has(Regime::vsi_tx2)) {
    claims.push_back(scalar_claim("vsi_tx2.decode_x2_first", cap(g22 * p2 / (1 + p3 + g12 * p1)), cap(p2)));
    claims.push_back(region_claim(
        "vsi_tx2.mac23_rx2_redundant",
        intersect_all({mac(params, {1, 3}, 2), mac(params, {2, 3}, 2), mac(params, {1, 2, 3}, 1)}),
        intersect_all({mac(params, {1, 3}, 2), mac(params, {1, 2, 3}, 1)}), tol));
    const Polytope capacity = regime_region(params, Regime::vsi_tx2);
    claims.push_back(region_claim("vsi_tx2.outer_equals_capacity", outer_bound(params), capacity, tol));
    claims.push_back(region_claim("vsi_tx2.achievable_equals_capacity", vsi_tx2_achievable(params), capacity, tol));
  }

  if (report.has(Regime::vsi_tx3)) {
    claims.push_back(scalar_claim("vsi_tx3.decode_x3_first", cap(g31 * p3 / (1 + p1 + p2)), cap(p3)));
    claims.push_back(region_claim(
        "vsi_tx3.mac123_rx1_replaced",
        intersect_all({mac(params, {1, 3}, 2), mac(params, {2, 3}, 2), mac(params, {1, 2, 3}, 1)}),
        intersect_all({mac(params, {1, 3}, 2), mac(params, {2, 3}, 2), mac(params, {1, 2}, 1)}), tol));
    claims.push_back(scalar_claim("vsi_tx3.rx2_sum_implication", cap(g12 * p1 + g22 * p2 + p3),
                                  cap(p1 + p2) + cap(p3)));
    const Polytope rx2_all = mac(params, {1, 2, 3}, 2);
    const Polytope rx1_mac = mac(params, {1, 2}, 1);
    claims.push_back(region_claim("vsi_tx3.rx2_sum_redundant", merge(rx2_all, rx1_mac),
                                  merge(rx2_all.without(Subset::all()), rx1_mac), tol));
    const Polytope capacity = regime_region(params, Regime::vsi_tx3);
    claims.push_back(region_claim("vsi_tx3.outer_equals_capacity", outer_bound(params), capacity, tol));
    claims.push_back(region_claim("vsi_tx3.achievable_equals_capacity", vsi_tx3_achievable(params), capacity, tol));
  }

  if (report.has(Regime::full_vsi)) {
    claims.push_back(scalar_claim("full_vsi.rx1_decodes_interference", cap(g31 * p3 / (1 + p1 + p2)), cap(p3)));
    double worst = std::numeric_limits<double>::infinity();
    for_each_nonempty_subset(Subset{1, 2}, [&](Subset t) {
      const double decodable = cap(effective_snr(params, t, Receiver::two) / (1 + p3));
      worst = std::min(worst, decodable - cap(effective_snr(params, t, Receiver::one)));
    });
    claims.push_back({"full_vsi.rx2_decodes_interference", worst >= 0, worst});
    const Polytope capacity = regime_region(params, Regime::full_vsi);
    claims.push_back(region_claim("full_vsi.outer_equals_capacity", outer_bound(params), capacity, tol));
    claims.push_back(region_claim("full_vsi.achievable_equals_capacity", full_vsi_achievable(params), capacity, tol));
  }

  return claims;
}

}  // namespace pimac
