#ifndef PIMAC_IO_HPP
#define PIMAC_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "pimac/bounds.hpp"
#include "pimac/sumcap.hpp"

namespace pimac {

// Rounds to 12 significant digits; the shortest decimal form of the result
// is what ends up in every document.
double round_sig12(double x);
std::string format_sig12(double x);

// Region document:
//   {"params": {...}, "constraints": [{"mask": "110", "rhs": r}, ...],
//    "vertices": [[r1, r2, r3], ...]}
// Constraints sorted by mask, vertices lexicographically.
struct RegionDocument {
  ChannelParams params;
  std::vector<RateConstraint<double>> constraints;
  VertexSet vertices;

  bool operator==(const RegionDocument&) const = default;
};

RegionDocument make_region_document(const ChannelParams& params, const Polytope& region);

nlohmann::ordered_json params_to_json(const ChannelParams& params);
nlohmann::ordered_json to_json(const RegionDocument& doc);
// Throws std::invalid_argument on schema violations.
RegionDocument region_document_from_json(const nlohmann::json& j);
std::string region_to_csv(const RegionDocument& doc);

nlohmann::ordered_json to_json(const RegimeReport& report);
nlohmann::ordered_json to_json(const std::vector<ClaimCheck>& claims);
nlohmann::ordered_json to_json(const SumCapBracket& bracket);
std::string sumcap_csv_header();
std::string sumcap_csv_row(double snr_db, const SumCapBracket& bracket);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace pimac

#endif  // PIMAC_IO_HPP
