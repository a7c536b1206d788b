#include "pimac/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pimac {

using nlohmann::ordered_json;

std::string format_sig12(double x) {
  if (x == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::strtod(format_sig12(x).c_str(), nullptr);
  return r == 0 ? 0.0 : r;
}

RegionDocument make_region_document(const ChannelParams& params, const Polytope& region) {
  RegionDocument doc;
  doc.params = params;
  doc.constraints = region.constraints();
  doc.vertices = vertices(region);
  return doc;
}

ordered_json params_to_json(const ChannelParams& p) {
  return {{"p1", round_sig12(p.p1)},   {"p2", round_sig12(p.p2)},   {"p3", round_sig12(p.p3)},
          {"h12", round_sig12(p.h12)}, {"h22", round_sig12(p.h22)}, {"h31", round_sig12(p.h31)}};
}

ordered_json to_json(const RegionDocument& doc) {
  ordered_json constraints = ordered_json::array();
  for (const auto& c : doc.constraints) constraints.push_back({{"mask", c.mask.str()}, {"rhs", round_sig12(c.rhs)}});
  ordered_json verts = ordered_json::array();
  for (const auto& v : doc.vertices) verts.push_back({round_sig12(v(0)), round_sig12(v(1)), round_sig12(v(2))});
  ordered_json j;
  j["params"] = params_to_json(doc.params);
  j["constraints"] = std::move(constraints);
  j["vertices"] = std::move(verts);
  return j;
}

namespace {

double number_field(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number())
    throw std::invalid_argument(std::string("region document: missing numeric field '") + key + "'");
  return obj.at(key).get<double>();
}

}  // namespace

RegionDocument region_document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("region document must be a JSON object");
  RegionDocument doc;
  const auto& p = j.contains("params") ? j.at("params") : nlohmann::json();
  doc.params = {number_field(p, "p1"),  number_field(p, "p2"),  number_field(p, "p3"),
                number_field(p, "h12"), number_field(p, "h22"), number_field(p, "h31")};

  if (!j.contains("constraints") || !j.at("constraints").is_array())
    throw std::invalid_argument("region document: 'constraints' must be an array");
  for (const auto& c : j.at("constraints")) {
    if (!c.is_object() || !c.contains("mask") || !c.at("mask").is_string())
      throw std::invalid_argument("region document: constraint needs a string 'mask'");
    try {
      doc.constraints.push_back({Subset::from_string(c.at("mask").get<std::string>()), number_field(c, "rhs")});
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(std::string("region document: ") + e.what());
    }
  }

  if (!j.contains("vertices") || !j.at("vertices").is_array())
    throw std::invalid_argument("region document: 'vertices' must be an array");
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number())
      throw std::invalid_argument("region document: each vertex must be three numbers");
    doc.vertices.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
  }
  return doc;
}

std::string region_to_csv(const RegionDocument& doc) {
  std::ostringstream os;
  os << "kind,mask,rhs,r1,r2,r3\n";
  for (const auto& c : doc.constraints) os << "constraint," << c.mask.str() << ',' << format_sig12(c.rhs) << ",,,\n";
  for (const auto& v : doc.vertices)
    os << "vertex,,," << format_sig12(v(0)) << ',' << format_sig12(v(1)) << ',' << format_sig12(v(2)) << '\n';
  return os.str();
}

ordered_json to_json(const RegimeReport& report) {
  ordered_json satisfied = ordered_json::array();
  for (Regime r : report.satisfied) satisfied.push_back(std::string(to_string(r)));
  ordered_json conditions = ordered_json::array();
  for (const auto& c : report.conditions)
    conditions.push_back({{"id", c.id},
                          {"expression", c.expression},
                          {"lhs", round_sig12(c.lhs)},
                          {"rhs", round_sig12(c.rhs)},
                          {"margin", round_sig12(c.margin())},
                          {"satisfied", c.satisfied()}});
  ordered_json j;
  j["satisfied"] = std::move(satisfied);
  j["capacity_known"] = report.capacity_known();
  j["construction"] = report.construction ? ordered_json(std::string(to_string(*report.construction))) : ordered_json();
  j["conditions"] = std::move(conditions);
  return j;
}

ordered_json to_json(const std::vector<ClaimCheck>& claims) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : claims) arr.push_back({{"id", c.id}, {"pass", c.holds}, {"margin", round_sig12(c.margin)}});
  return arr;
}

ordered_json to_json(const SumCapBracket& br) {
  const Genie& g = br.genie.genie;
  return {{"lower", round_sig12(br.lower)},
          {"upper", round_sig12(br.upper)},
          {"gap", round_sig12(br.gap())},
          {"lower_source", std::string(to_string(br.lower_source))},
          {"upper_source", std::string(to_string(br.upper_source))},
          {"tin", round_sig12(br.tin)},
          {"inner_sum", round_sig12(br.inner_sum)},
          {"outer_sum", round_sig12(br.outer_sum)},
          {"genie",
           {{"rho1", round_sig12(g.rho1)},
            {"rho2", round_sig12(g.rho2)},
            {"eta1", round_sig12(g.eta1)},
            {"eta2", round_sig12(g.eta2)},
            {"value", round_sig12(br.genie.value)}}}};
}

std::string sumcap_csv_header() { return "snr_db,lower_bits,upper_bits,gap_bits,lower_source,upper_source\n"; }

std::string sumcap_csv_row(double snr_db, const SumCapBracket& br) {
  std::ostringstream os;
  os << format_sig12(snr_db) << ',' << format_sig12(br.lower) << ',' << format_sig12(br.upper) << ','
     << format_sig12(br.gap()) << ',' << to_string(br.lower_source) << ',' << to_string(br.upper_source) << '\n';
  return os.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = sumcap_csv_header();
  for (const auto& row : rows) out += sumcap_csv_row(row.snr_db, row.bracket);
  return out;
}

}  // namespace pimac
