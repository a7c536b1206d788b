#ifndef PIMAC_SUMCAP_HPP
#define PIMAC_SUMCAP_HPP

#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "pimac/gaussian.hpp"
#include "pimac/model.hpp"

namespace pimac {

using Genie = BasicGenie<double>;

struct GeniePoint {
  Genie genie;
  double value = std::numeric_limits<double>::quiet_NaN();
};

// I(X1,X2; Y1,S1) + I(X3; Y2,S2) with full-power Gaussian inputs. Any
// feasible genie gives a valid sum-capacity upper bound.
double genie_objective(const ChannelParams& params, const Genie& genie);

struct GenieSearchConfig {
  int grid_points = 21;            // per axis, over rho and the feasible eta intervals
  double min_step = 1e-4;          // coordinate descent stops below this step
  int max_refine_evaluations = 10000;
  double eta_floor = 1e-6;         // eta = 0 makes the objective diverge
};

// Coarse grid followed by coordinate descent with step halving. The result
// is always a feasible genie, so its value never undercuts the true minimum.
GeniePoint genie_upper_bound(const ChannelParams& params, const GenieSearchConfig& config = {});

// Gaussian codes, each receiver treating interference as noise.
double tin_lower_bound(const ChannelParams& params);

enum class LowerSource { tin, inner_bound };
enum class UpperSource { genie, outer_region };

std::string_view to_string(LowerSource s);
std::string_view to_string(UpperSource s);

struct SumCapBracket {
  double lower = 0;
  double upper = 0;
  LowerSource lower_source = LowerSource::tin;
  UpperSource upper_source = UpperSource::genie;

  double tin = 0;
  double inner_sum = 0;
  double outer_sum = 0;
  GeniePoint genie;

  double gap() const { return upper - lower; }
};

// Allowed inversion of the bracket before it is treated as a bug.
inline constexpr double kBracketTol = 1e-6;

// Best of {TIN, inner-bound sum rate} against best of {genie bound,
// outer-bound sum rate}. Throws ConsistencyError if lower > upper + kBracketTol.
SumCapBracket sumcap_bracket(const ChannelParams& params, const GenieSearchConfig& config = {});

struct SweepRow {
  double snr_db = 0;
  SumCapBracket bracket;
};

// start, start + step, ... up to stop (inclusive, within rounding).
std::vector<double> snr_grid(double start_db, double stop_db, double step_db);

// For each grid point sets P1 = P2 = P3 = 10^(snr/10), keeping the gains of
// `base`. Rows follow grid order.
std::vector<SweepRow> snr_sweep(const ChannelParams& base, std::span<const double> grid_db,
                                const GenieSearchConfig& config = {});

}  // namespace pimac

#endif  // PIMAC_SUMCAP_HPP
