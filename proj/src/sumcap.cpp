#include "pimac/sumcap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "pimac/bounds.hpp"
#include "pimac/errors.hpp"

namespace pimac {
namespace {

double objective_unchecked(const ChannelParams& p, const Genie& g) {
  const double signal1 = p.h12 * p.h12 * p.p1 + p.h22 * p.h22 * p.p2;
  const double signal2 = p.h31 * p.h31 * p.p3;
  return genie_information(receiver1_covariances(p, g), signal1, g.eta1, g.rho1) +
         genie_information(receiver2_covariances(p, g), signal2, g.eta2, g.rho2);
}

// Search coordinates (rho1, rho2, t1, t2) live on a box; t_i places eta_i
// inside its feasible interval [floor, sqrt(1 - rho_other^2)].
class GenieBox {
 public:
  explicit GenieBox(double eta_floor) : floor_(eta_floor), rho_max_(std::sqrt(1 - eta_floor * eta_floor)) {}

  double lower(int axis) const { return axis < 2 ? -rho_max_ : 0.0; }
  double upper(int axis) const { return axis < 2 ? rho_max_ : 1.0; }

  Genie genie(const std::array<double, 4>& x) const {
    Genie g;
    g.rho1 = x[0];
    g.rho2 = x[1];
    g.eta1 = floor_ + x[2] * (std::sqrt(1 - x[1] * x[1]) - floor_);
    g.eta2 = floor_ + x[3] * (std::sqrt(1 - x[0] * x[0]) - floor_);
    return g;
  }

 private:
  double floor_;
  double rho_max_;
};

bool better(double fa, const Genie& a, double fb, const Genie& b) {
  return std::tie(fa, a.rho1, a.rho2, a.eta1, a.eta2) < std::tie(fb, b.rho1, b.rho2, b.eta1, b.eta2);
}

}  // namespace

double genie_objective(const ChannelParams& params, const Genie& genie) {
  params.validate();
  if (!genie.feasible()) throw std::domain_error("genie_objective: infeasible genie parameters");
  if (genie.eta1 < 0 || genie.eta2 < 0) throw std::domain_error("genie_objective: eta must be nonnegative");
  return objective_unchecked(params, genie);
}

GeniePoint genie_upper_bound(const ChannelParams& params, const GenieSearchConfig& config) {
  params.validate();
  if (config.grid_points < 2) throw std::domain_error("genie search needs at least two grid points per axis");
  if (!(config.eta_floor > 0 && config.eta_floor < 1)) throw std::domain_error("eta floor must lie in (0, 1)");

  const GenieBox box(config.eta_floor);
  const int n = config.grid_points;
  auto axis_value = [&](int axis, int k) {
    return box.lower(axis) + (box.upper(axis) - box.lower(axis)) * k / (n - 1);
  };

  std::array<double, 4> best_x{};
  Genie best_g;
  double best_f = std::numeric_limits<double>::infinity();
  bool have_best = false;
  std::array<double, 4> x{};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          x = {axis_value(0, a), axis_value(1, b), axis_value(2, c), axis_value(3, d)};
          const Genie g = box.genie(x);
          const double f = objective_unchecked(params, g);
          if (!have_best || better(f, g, best_f, best_g)) {
            best_x = x;
            best_g = g;
            best_f = f;
            have_best = true;
          }
        }

  std::array<double, 4> step;
  for (int axis = 0; axis < 4; ++axis) step[axis] = (box.upper(axis) - box.lower(axis)) / (n - 1) / 2;

  int evaluations = 0;
  while (evaluations < config.max_refine_evaluations &&
         *std::max_element(step.begin(), step.end()) >= config.min_step) {
    bool improved = false;
    for (int axis = 0; axis < 4 && !improved; ++axis)
      for (double dir : {1.0, -1.0}) {
        auto y = best_x;
        y[axis] = std::clamp(best_x[axis] + dir * step[axis], box.lower(axis), box.upper(axis));
        if (y[axis] == best_x[axis]) continue;
        const Genie g = box.genie(y);
        const double f = objective_unchecked(params, g);
        ++evaluations;
        if (f < best_f) {
          best_x = y;
          best_g = g;
          best_f = f;
          improved = true;
          break;
        }
        if (evaluations >= config.max_refine_evaluations) break;
      }
    if (!improved)
      for (double& s : step) s /= 2;
  }

  return {best_g, best_f};
}

double tin_lower_bound(const ChannelParams& params) {
  params.validate();
  const auto& [p1, p2, p3, h12, h22, h31] = params;
  return cap((p1 + p2) / (1 + h31 * h31 * p3)) + cap(p3 / (1 + h12 * h12 * p1 + h22 * h22 * p2));
}

std::string_view to_string(LowerSource s) { return s == LowerSource::tin ? "TIN" : "INNER_BOUND"; }
std::string_view to_string(UpperSource s) { return s == UpperSource::genie ? "GENIE" : "OUTER_REGION"; }

SumCapBracket sumcap_bracket(const ChannelParams& params, const GenieSearchConfig& config) {
  SumCapBracket br;
  br.tin = tin_lower_bound(params);
  br.inner_sum = max_sum_rate(inner_bound(params));
  br.outer_sum = max_sum_rate(outer_bound(params));
  br.genie = genie_upper_bound(params, config);

  br.lower = br.tin;
  br.lower_source = LowerSource::tin;
  if (br.inner_sum > br.tin) {
    br.lower = br.inner_sum;
    br.lower_source = LowerSource::inner_bound;
  }
  br.upper = br.genie.value;
  br.upper_source = UpperSource::genie;
  if (br.outer_sum <= br.genie.value) {
    br.upper = br.outer_sum;
    br.upper_source = UpperSource::outer_region;
  }

  if (br.lower > br.upper + kBracketTol)
    throw ConsistencyError("sum-capacity bracket inverted: lower " + std::to_string(br.lower) + " > upper " +
                           std::to_string(br.upper));
  return br;
}

std::vector<double> snr_grid(double start_db, double stop_db, double step_db) {
  if (!std::isfinite(start_db) || !std::isfinite(stop_db) || !std::isfinite(step_db))
    throw std::domain_error("snr grid bounds must be finite");
  if (!(step_db > 0)) throw std::domain_error("snr step must be positive");
  if (start_db > stop_db) throw std::domain_error("snr start must not exceed stop");
  const auto count = static_cast<long>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) grid.push_back(start_db + static_cast<double>(k) * step_db);
  return grid;
}

std::vector<SweepRow> snr_sweep(const ChannelParams& base, std::span<const double> grid_db,
                                const GenieSearchConfig& config) {
  if (grid_db.empty()) throw std::domain_error("snr sweep needs a nonempty grid");
  std::vector<SweepRow> rows;
  rows.reserve(grid_db.size());
  for (double snr_db : grid_db) {
    if (!std::isfinite(snr_db)) throw std::domain_error("snr grid values must be finite");
    ChannelParams p = base;
    p.p1 = p.p2 = p.p3 = std::pow(10.0, snr_db / 10);
    rows.push_back({snr_db, sumcap_bracket(p, config)});
  }
  return rows;
}

}  // namespace pimac
