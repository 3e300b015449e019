#include "cltlab/report_json.hpp"

namespace cltlab {

const char* kToolVersion = "0.1.0";

Json to_json(const CltReport& rep) {
  Json j;
  j["spec_tag"] = rep.spec_tag;
  j["order"] = rep.order;
  j["divisors"] = rep.divisors;
  j["present_orders"] = rep.present_orders;
  j["missing_orders"] = rep.missing_orders;
  j["is_clt"] = rep.is_clt;
  Json sylow = Json::array();
  for (const SylowRecord& r : rep.sylow) {
    Json rec;
    rec["prime"] = r.prime;
    rec["n_r"] = r.n_r;
    rec["normal"] = r.normal;
    sylow.push_back(std::move(rec));
  }
  j["sylow"] = std::move(sylow);
  j["timing"] = nullptr;
  return j;
}

Json to_json(const MSetReport& rep) {
  Json j;
  j["m_size"] = rep.m_size;
  j["class_count"] = rep.class_count;
  j["normalizer_orders"] = rep.normalizer_orders;
  j["normalizers_equal_sylow_q"] = rep.normalizers_equal_sylow_q;
  j["p_divides_m"] = rep.p_divides_m;
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["p"] = v.p;
  j["q"] = v.q;
  j["predicted_exists"] = v.predicted_exists;
  Json reasons;
  reasons["divides_q_plus_1"] = v.reasons.divides_q_plus_1;
  reasons["divides_q2_q_1"] = v.reasons.divides_q2_q_1;
  reasons["special_case_24"] = v.reasons.special_case_24;
  j["reasons"] = std::move(reasons);
  j["p_divides_q_minus_1"] = v.p_divides_q_minus_1;
  Json witnesses = Json::array();
  for (const Witness& w : v.witnesses) {
    Json wj;
    wj["spec_tag"] = w.spec_tag;
    if (w.clt_report) wj["clt_report"] = to_json(*w.clt_report);
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  if (v.observed_exists)
    j["observed_exists"] = *v.observed_exists;
  else
    j["observed_exists"] = nullptr;
  j["exhaustive"] = v.exhaustive;
  if (v.agreement)
    j["agreement"] = *v.agreement;
  else
    j["agreement"] = nullptr;
  return j;
}

Json to_json(const PairReport& rep) {
  Json j;
  j["verdict"] = to_json(rep.verdict);
  Json examined = Json::array();
  for (const Witness& w : rep.examined) {
    Json wj;
    wj["spec_tag"] = w.spec_tag;
    if (w.clt_report) wj["clt_report"] = to_json(*w.clt_report);
    examined.push_back(std::move(wj));
  }
  j["examined"] = std::move(examined);
  Json checks = Json::array();
  for (const ForwardCheck& fc : rep.forward_checks) {
    Json cj;
    cj["spec_tag"] = fc.spec_tag;
    cj["q_mod_p_not_1"] = fc.q_mod_p_not_1;
    cj["sylow_p_nonnormal"] = fc.sylow_p_nonnormal;
    cj["sylow_q_normal_or_24"] = fc.sylow_q_normal_or_24;
    cj["structure_matches"] = fc.structure_matches;
    checks.push_back(std::move(cj));
  }
  j["forward_checks"] = std::move(checks);
  j["assumptions"] = rep.assumptions;
  j["notes"] = rep.notes;
  j["groups_examined"] = rep.groups_examined;
  return j;
}

Json to_json(const AutFormulasReport& rep) {
  Json j;
  j["q"] = rep.q;
  Json rows = Json::array();
  for (const AutFormulaRow& r : rep.rows) {
    Json rj;
    rj["group"] = r.group;
    rj["computed"] = r.computed;
    rj["formula"] = r.formula;
    rj["match"] = r.match;
    rj["supplementary"] = r.supplementary;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  j["all_match"] = rep.all_match;
  return j;
}

Json to_json(const CorollaryReport& rep) {
  Json j;
  j["id"] = rep.id;
  Json cases = Json::array();
  for (const CorollaryCase& c : rep.cases) {
    Json cj;
    cj["p"] = c.p;
    cj["q"] = c.q;
    cj["description"] = c.description;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["match"] = c.match;
    cj["witnesses"] = c.witness_tags;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["all_match"] = rep.all_match;
  return j;
}

Json to_json(const std::vector<ScanRow>& rows) {
  Json arr = Json::array();
  for (const ScanRow& row : rows) {
    Json rj;
    rj["p"] = row.p;
    rj["q"] = row.q;
    rj["order"] = row.order;
    rj["skipped"] = row.skipped;
    if (row.skipped) rj["skip_reason"] = row.skip_reason;
    rj["report"] = to_json(row.report);
    arr.push_back(std::move(rj));
  }
  return arr;
}

Json make_report(const std::string& command, Json inputs, Json results, Json disagreements) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["disagreements"] = std::move(disagreements);
  j["timing_ms"] = nullptr;
  return j;
}

std::vector<std::string> collect_disagreements(const PairReport& rep) {
  std::vector<std::string> out;
  const TheoremVerdict& v = rep.verdict;
  if (v.agreement && !*v.agreement) {
    out.push_back("pair (" + std::to_string(v.p) + "," + std::to_string(v.q) +
                  "): predicted_exists=" + (v.predicted_exists ? "true" : "false") +
                  " but observed_exists=" + (*v.observed_exists ? "true" : "false") +
                  (v.exhaustive ? " (exhaustive)" : " (witness mode)"));
  }
  for (const ForwardCheck& fc : rep.forward_checks) {
    if (!fc.all())
      out.push_back("forward-direction check failed for " + fc.spec_tag);
  }
  return out;
}

std::vector<std::string> collect_disagreements(const std::vector<ScanRow>& rows) {
  std::vector<std::string> out;
  for (const ScanRow& row : rows) {
    if (row.skipped) continue;
    for (std::string& s : collect_disagreements(row.report)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> collect_disagreements(const AutFormulasReport& rep) {
  std::vector<std::string> out;
  for (const AutFormulaRow& r : rep.rows)
    if (!r.match)
      out.push_back("automorphism count of " + r.group + " is " + std::to_string(r.computed) +
                    ", closed form gives " + std::to_string(r.formula));
  return out;
}

std::vector<std::string> collect_disagreements(const CorollaryReport& rep) {
  std::vector<std::string> out;
  for (const CorollaryCase& c : rep.cases)
    if (!c.match)
      out.push_back("corollary " + rep.id + " fails at (p,q)=(" + std::to_string(c.p) + "," +
                    std::to_string(c.q) + "): expected " + (c.expected ? "existence" : "absence") +
                    ", observed " + (c.observed ? "existence" : "absence"));
  return out;
}

}  // namespace cltlab
