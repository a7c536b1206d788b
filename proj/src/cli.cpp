#include "pimac/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "pimac/bounds.hpp"
#include "pimac/errors.hpp"
#include "pimac/io.hpp"
#include "pimac/sumcap.hpp"

namespace pimac {
namespace {

struct RunConfig {
  ChannelParams params;
  std::string format;
  double tol = kFeasibilityTol;
  std::uint64_t seed = 1;
  std::string bound = "capacity";
  double snr_start = 0, snr_stop = 40, snr_step = 5;
  int draws = 20;
  GenieSearchConfig search;
};

class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_channel_options(CLI::App* sub, RunConfig& cfg, bool powers_required) {
  auto* p1 = sub->add_option("--p1", cfg.params.p1, "transmit power of user 1 (linear)");
  auto* p2 = sub->add_option("--p2", cfg.params.p2, "transmit power of user 2 (linear)");
  auto* p3 = sub->add_option("--p3", cfg.params.p3, "transmit power of user 3 (linear)");
  if (powers_required) {
    p1->required();
    p2->required();
    p3->required();
  }
  sub->add_option("--h12", cfg.params.h12, "gain from transmitter 1 to receiver 2 (amplitude)")->required();
  sub->add_option("--h22", cfg.params.h22, "gain from transmitter 2 to receiver 2 (amplitude)")->required();
  sub->add_option("--h31", cfg.params.h31, "gain from transmitter 3 to receiver 1 (amplitude)")->required();
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tol", cfg.tol, "feasibility/equality tolerance in bits")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for randomized checks");
}

void add_search_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--grid-points", cfg.search.grid_points, "genie search grid points per axis")
      ->check(CLI::Range(2, 201));
}

void validate_params(const ChannelParams& p) {
  try {
    p.validate();
  } catch (const std::domain_error& e) {
    throw UserError(std::string("--") + e.what());
  }
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") throw UserError("classify emits json only");
  validate_params(cfg.params);
  nlohmann::ordered_json j;
  j["params"] = params_to_json(cfg.params);
  j["report"] = to_json(classify(cfg.params));
  out << dump(j);
  return kExitOk;
}

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  validate_params(cfg.params);
  Polytope region;
  if (cfg.bound == "inner") {
    region = inner_bound(cfg.params);
  } else if (cfg.bound == "outer") {
    region = outer_bound(cfg.params);
  } else {
    auto capacity = capacity_region(cfg.params, cfg.tol);
    if (!capacity)
      throw UserError("no capacity theorem applies to these parameters (regime UNCLASSIFIED); use --bound inner|outer");
    region = *capacity;
  }
  const RegionDocument doc = make_region_document(cfg.params, region);
  out << (cfg.format == "csv" ? region_to_csv(doc) : dump(to_json(doc)));
  return kExitOk;
}

int cmd_sumcap(const RunConfig& cfg, std::ostream& out) {
  validate_params(cfg.params);
  const SumCapBracket br = sumcap_bracket(cfg.params, cfg.search);
  if (cfg.format == "csv") {
    out << "lower_bits,upper_bits,gap_bits,lower_source,upper_source\n"
        << format_sig12(br.lower) << ',' << format_sig12(br.upper) << ',' << format_sig12(br.gap()) << ','
        << to_string(br.lower_source) << ',' << to_string(br.upper_source) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["params"] = params_to_json(cfg.params);
    j["bracket"] = to_json(br);
    out << dump(j);
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  validate_params(cfg.params);
  std::vector<double> grid;
  try {
    grid = snr_grid(cfg.snr_start, cfg.snr_stop, cfg.snr_step);
  } catch (const std::domain_error& e) {
    throw UserError(std::string("--snr-start/--snr-stop/--snr-step: ") + e.what());
  }
  const auto rows = snr_sweep(cfg.params, grid, cfg.search);
  if (cfg.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      auto j = to_json(row.bracket);
      j["snr_db"] = round_sig12(row.snr_db);
      arr.push_back(std::move(j));
    }
    out << dump({{"rows", std::move(arr)}});
  } else {
    out << sweep_to_csv(rows);
  }
  return kExitOk;
}

double noisy_interference_condition(const ChannelParams& p) {
  const double h = std::abs(p.h12);
  return h * (1 + p.h31 * p.h31 * p.p3) + std::abs(p.h31) * (1 + h * h * (p.p1 + p.p2));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  validate_params(cfg.params);
  std::vector<ClaimCheck> claims = verify_redundancy_claims(cfg.params, cfg.tol);

  const double tin = tin_lower_bound(cfg.params);
  const GeniePoint genie = genie_upper_bound(cfg.params, cfg.search);
  claims.push_back({"bracket.tin_below_genie", tin <= genie.value + kBracketTol, genie.value - tin});

  if (std::abs(cfg.params.h12) == std::abs(cfg.params.h22) && noisy_interference_condition(cfg.params) <= 1) {
    const double gap = genie.value - tin;
    claims.push_back({"bracket.noisy_interference_coincidence", gap <= 1e-3, 1e-3 - gap});
  }

  if (cfg.draws > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> power(0.0, 100.0), gain(-1.0, 1.0);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cfg.draws; ++k) {
      ChannelParams p{power(rng), power(rng), power(rng), 0, 0, 0};
      p.h12 = gain(rng);
      p.h22 = gain(rng);
      p.h31 = gain(rng);
      worst = std::min(worst, genie_upper_bound(p, cfg.search).value - tin_lower_bound(p));
    }
    claims.push_back({"bracket.random_weak_interference", worst >= -kBracketTol, worst});
  }

  bool all_pass = true;
  for (const auto& c : claims) all_pass = all_pass && c.holds;

  if (cfg.format == "csv") {
    out << "claim,pass,margin\n";
    for (const auto& c : claims) out << c.id << ',' << (c.holds ? "PASS" : "FAIL") << ',' << format_sig12(c.margin) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["params"] = params_to_json(cfg.params);
    j["claims"] = to_json(claims);
    j["all_pass"] = all_pass;
    out << dump(j);
  }
  return all_pass ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity-region and sum-capacity bounds for a two-user Gaussian MAC sharing the medium with a "
               "point-to-point link"};
  app.name("pimac");
  app.require_subcommand(1);

  RunConfig cfg;
  auto* classify_cmd = app.add_subcommand("classify", "classify the interference regime");
  add_channel_options(classify_cmd, cfg, true);

  auto* region_cmd = app.add_subcommand("region", "emit constraints and vertices of a rate region");
  add_channel_options(region_cmd, cfg, true);
  region_cmd->add_option("--bound", cfg.bound, "which region")->check(CLI::IsMember({"inner", "outer", "capacity"}));

  auto* sumcap_cmd = app.add_subcommand("sumcap", "sum-capacity lower/upper bracket");
  add_channel_options(sumcap_cmd, cfg, true);
  add_search_options(sumcap_cmd, cfg);

  auto* sweep_cmd = app.add_subcommand("sweep", "sum-capacity bracket over an SNR grid with P1 = P2 = P3");
  add_channel_options(sweep_cmd, cfg, false);
  add_search_options(sweep_cmd, cfg);
  sweep_cmd->add_option("--snr-start", cfg.snr_start, "first SNR in dB");
  sweep_cmd->add_option("--snr-stop", cfg.snr_stop, "last SNR in dB");
  sweep_cmd->add_option("--snr-step", cfg.snr_step, "SNR step in dB");

  auto* verify_cmd = app.add_subcommand("verify", "check every claim that applies to the parameters");
  add_channel_options(verify_cmd, cfg, true);
  add_search_options(verify_cmd, cfg);
  verify_cmd->add_option("--draws", cfg.draws, "random weak-interference draws for the bracket check")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUserError;
  }

  if (cfg.format.empty()) cfg.format = sweep_cmd->parsed() ? "csv" : "json";

  try {
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
    if (region_cmd->parsed()) return cmd_region(cfg, out);
    if (sumcap_cmd->parsed()) return cmd_sumcap(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const UserError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  }
}

}  // namespace pimac
