#pragma once

// JSON serialization of certificates and of the case table. Field order is
// fixed and every number is an integer, so identical runs give identical bytes.

#include <fstream>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanocert/catalog.hpp"

namespace fanocert {

using Json = nlohmann::ordered_json;

inline constexpr Int kReportVersion = 1;
inline constexpr Int kTableVersion = 1;

/// Raised for unreadable or malformed table files.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json to_json(const CheckOutcome& c) {
  Json inputs = Json::object();
  for (const auto& in : c.inputs) inputs[in.name] = in.value;
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(Json{{"label", w.label}, {"values", w.values}});
  return Json{{"name", c.name},
              {"paper_ref", c.paper_ref},
              {"inputs", inputs},
              {"result", to_string(c.result)},
              {"witnesses", witnesses},
              {"kind", to_string(c.kind)}};
}

inline Json to_json(const Certificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(to_json(c));
  Json discrepancies = Json::array();
  for (const auto& d : cert.discrepancies) discrepancies.push_back(Json{{"check", d.check}, {"detail", d.detail}});
  return Json{{"case_id", cert.record.case_id},
              {"family", cert.record.family},
              {"d", cert.record.d},
              {"g", cert.record.g},
              {"expected", to_string(cert.record.expected)},
              {"computed", to_string(cert.computed)},
              {"checks", checks},
              {"discrepancies", discrepancies}};
}

inline Json to_json(const Summary& s) {
  return Json{{"total", s.total}, {"pass", s.pass}, {"mismatch", s.mismatch}, {"open", s.open}, {"flagged", s.flagged}};
}

inline Json report_json(const RunResult& run) {
  Json certs = Json::array();
  for (const auto& c : run.certificates) certs.push_back(to_json(c));
  return Json{{"version", kReportVersion}, {"summary", to_json(run.summary)}, {"certificates", certs}};
}

inline std::string report_string(const RunResult& run) { return report_json(run).dump(2) + "\n"; }

inline Json table_json(const std::vector<CaseRecord>& table, std::string provenance) {
  Json cases = Json::array();
  for (const auto& c : table)
    cases.push_back(Json{{"case_id", c.case_id},
                         {"family", c.family},
                         {"d", c.d},
                         {"g", c.g},
                         {"expected", to_string(c.expected)}});
  return Json{{"version", kTableVersion}, {"provenance", std::move(provenance)}, {"cases", cases}};
}

inline std::vector<CaseRecord> parse_table(const Json& j) {
  try {
    if (j.at("version").get<Int>() != kTableVersion) throw config_error("case table: unsupported version");
    std::vector<CaseRecord> out;
    for (const auto& c : j.at("cases")) {
      CaseRecord r;
      r.case_id = c.at("case_id").get<Int>();
      r.family = c.at("family").get<std::string>();
      r.d = c.at("d").get<Int>();
      r.g = c.at("g").get<Int>();
      const auto v = parse_verdict(c.at("expected").get<std::string>());
      if (!v) throw config_error("case table: bad verdict for case " + std::to_string(r.case_id));
      if (!family_rank(r.family)) throw config_error("case table: unknown family '" + r.family + "'");
      r.expected = *v;
      out.push_back(std::move(r));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("case table: ") + e.what());
  }
}

inline std::vector<CaseRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("case table: cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("case table: ") + e.what());
  }
  return parse_table(j);
}

}  // namespace fanocert
