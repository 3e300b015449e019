#include <CLI11.hpp>
#include <iomanip>
#include <iostream>

#include "cltlab/config.hpp"
#include "cltlab/constructors.hpp"
#include "cltlab/errors.hpp"
#include "cltlab/groupspec.hpp"
#include "cltlab/report_json.hpp"
#include "cltlab/subgroups.hpp"
#include "cltlab/verifier.hpp"

namespace {

using namespace cltlab;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitError = 2;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_list(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s.empty() ? "-" : s;
}

void print_clt_report_human(const CltReport& rep) {
  std::cout << "group      : " << rep.spec_tag << "\n"
            << "order      : " << rep.order << "\n"
            << "divisors   : " << join_list(rep.divisors) << "\n"
            << "present    : " << join_list(rep.present_orders) << "\n"
            << "missing    : " << join_list(rep.missing_orders) << "\n"
            << "CLT        : " << (rep.is_clt ? "yes" : "NO") << "\n"
            << "method     : " << (rep.used_lattice ? "full lattice" : "targeted search") << "\n";
  std::cout << "sylow      :";
  for (const SylowRecord& r : rep.sylow)
    std::cout << "  n_" << r.prime << "=" << r.n_r << (r.normal ? " (normal)" : "");
  std::cout << "\n";
  std::cout << std::fixed << std::setprecision(1) << "time       : " << rep.timing_ms << " ms\n";
}

std::string verdict_summary(const TheoremVerdict& v) {
  std::string s = v.predicted_exists ? "predicted: non-CLT exists" : "predicted: none";
  if (v.observed_exists)
    s += *v.observed_exists ? "; observed: exists" : "; observed: none";
  else
    s += "; observed: not computed";
  if (v.agreement) s += *v.agreement ? "; AGREE" : "; DISAGREE";
  if (v.p_divides_q_minus_1) s += " [ambiguity: p | q-1]";
  return s;
}

void print_pair_report_human(const PairReport& rep) {
  const TheoremVerdict& v = rep.verdict;
  std::cout << "pair (p,q) = (" << v.p << "," << v.q << "), order " << v.p * v.q * v.q * v.q
            << (v.exhaustive ? " [exhaustive]" : " [witness mode]") << "\n"
            << verdict_summary(v) << "\n";
  std::cout << "reasons    : p|q+1=" << v.reasons.divides_q_plus_1
            << " p|q^2+q+1=" << v.reasons.divides_q2_q_1
            << " order24=" << v.reasons.special_case_24 << "\n";
  std::cout << "examined   : " << rep.groups_examined << " group(s)\n";
  for (const Witness& w : rep.examined) {
    std::cout << "  " << std::left << std::setw(44) << w.spec_tag;
    if (w.clt_report)
      std::cout << (w.clt_report->is_clt ? " CLT"
                                         : " non-CLT, missing " +
                                               join_list(w.clt_report->missing_orders));
    std::cout << "\n";
  }
  for (const ForwardCheck& fc : rep.forward_checks)
    std::cout << "  forward checks for " << fc.spec_tag << ": "
              << (fc.all() ? "all hold" : "VIOLATED") << "\n";
  for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
  for (const std::string& a : rep.assumptions) std::cout << "assumption: " << a << "\n";
  std::cout << std::fixed << std::setprecision(1) << "time: " << rep.timing_ms << " ms\n";
}

int finish(const std::string& command, const Json& inputs, const Json& results,
           const std::vector<std::string>& disagreements, bool json_mode,
           const std::function<void()>& print_human) {
  if (json_mode) {
    Json d = Json::array();
    for (const std::string& s : disagreements) d.push_back(s);
    print_json(make_report(command, inputs, results, d));
  } else {
    print_human();
    for (const std::string& s : disagreements) std::cout << "DISAGREEMENT: " << s << "\n";
  }
  return disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cltlab: constructs the groups of order p*q^3, decides the converse-of-Lagrange "
               "property by exact subgroup analysis, and checks the divisibility "
               "characterization of the non-CLT cases"};
  app.require_subcommand(1);

  std::string spec;
  bool use_lattice = false, json_mode = false, exhaustive = false;
  std::string cache_dir;
  int p = 0, q = 0;
  int max_p = 31, max_q = 5, jobs = 1;
  bool scan_exhaustive = true;
  std::string corollary_id, catalog_which;

  CLI::App* check = app.add_subcommand("check", "CLT report for one group spec");
  check->add_option("spec", spec, "group spec, e.g. sl23 or zq3xzp:7,2")->required();
  check->add_flag("--lattice", use_lattice, "force the full subgroup lattice");
  check->add_flag("--json", json_mode);
  check->add_option("--cache-dir", cache_dir, "lattice cache directory");

  CLI::App* predict_cmd = app.add_subcommand("predict", "number-theoretic prediction only");
  predict_cmd->add_option("p", p)->required();
  predict_cmd->add_option("q", q)->required();
  predict_cmd->add_flag("--json", json_mode);

  CLI::App* verify_cmd = app.add_subcommand("verify", "construct and test one prime pair");
  verify_cmd->add_option("p", p)->required();
  verify_cmd->add_option("q", q)->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "enumerate all groups of order p*q^3");
  verify_cmd->add_flag("--json", json_mode);

  CLI::App* scan_cmd = app.add_subcommand("scan", "verdicts for all prime pairs in range");
  scan_cmd->add_option("--max-p", max_p);
  scan_cmd->add_option("--max-q", max_q);
  scan_cmd->add_flag("--exhaustive,!--no-exhaustive", scan_exhaustive,
                     "exhaustive enumeration per pair (default on)");
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_flag("--json", json_mode);

  CLI::App* aut_cmd = app.add_subcommand("aut", "automorphism counts vs closed forms");
  aut_cmd->add_option("q", q)->required();
  aut_cmd->add_flag("--json", json_mode);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in catalogs");
  catalog_cmd->add_option("which", catalog_which, "catalog name (order24)")->required();
  catalog_cmd->add_flag("--json", json_mode);

  CLI::App* cor_cmd = app.add_subcommand("corollary", "check one corollary over a range");
  cor_cmd->add_option("id", corollary_id, "2.1 | 2.2a | 2.2b | 2.3a | 2.3b")->required();
  cor_cmd->add_option("--max-p", max_p);
  cor_cmd->add_option("--max-q", max_q);
  cor_cmd->add_flag("--json", json_mode);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      GroupPtr g = build_group_spec(spec);
      std::optional<SubgroupLattice> cached;
      CltReport rep;
      if (use_lattice) {
        if (!cache_dir.empty()) cached = load_lattice_cache(g, cache_dir);
        if (!cached) {
          SubgroupLattice lat = all_subgroups(g);
          if (!cache_dir.empty()) save_lattice_cache(lat, cache_dir);
          rep = clt_report(g, true, &lat);
        } else {
          rep = clt_report(g, true, &*cached);
        }
      } else {
        rep = clt_report(g);
      }
      return finish("check", Json{{"spec", spec}, {"lattice", use_lattice}}, to_json(rep), {},
                    json_mode, [&] { print_clt_report_human(rep); });
    }
    if (predict_cmd->parsed()) {
      TheoremVerdict v = predict(p, q);
      return finish("predict", Json{{"p", p}, {"q", q}}, to_json(v), {}, json_mode, [&] {
        std::cout << verdict_summary(v) << "\n";
        for (const Witness& w : v.witnesses)
          std::cout << "predicted witness family: " << w.spec_tag << "\n";
      });
    }
    if (verify_cmd->parsed()) {
      PairReport rep = verify_pair(p, q, exhaustive);
      return finish("verify", Json{{"p", p}, {"q", q}, {"exhaustive", exhaustive}}, to_json(rep),
                    collect_disagreements(rep), json_mode, [&] { print_pair_report_human(rep); });
    }
    if (scan_cmd->parsed()) {
      std::vector<ScanRow> rows = scan(max_p, max_q, scan_exhaustive, jobs);
      // jobs is an execution knob, not part of the query: reports from any
      // worker count must be byte-identical.
      return finish(
          "scan", Json{{"max_p", max_p}, {"max_q", max_q}, {"exhaustive", scan_exhaustive}},
          to_json(rows), collect_disagreements(rows), json_mode, [&] {
            std::cout << std::left << std::setw(4) << "q" << std::setw(4) << "p" << std::setw(7)
                      << "order" << std::setw(10) << "predicted" << std::setw(10) << "observed"
                      << std::setw(10) << "agree" << "notes\n";
            for (const ScanRow& r : rows) {
              const TheoremVerdict& v = r.report.verdict;
              std::string observed =
                  v.observed_exists ? (*v.observed_exists ? "exists" : "none") : "-";
              std::string agree = v.agreement ? (*v.agreement ? "yes" : "NO") : "-";
              std::string notes;
              if (r.skipped) notes = "skipped: " + r.skip_reason;
              if (v.p_divides_q_minus_1) notes += (notes.empty() ? "" : "; ") + std::string("p|q-1");
              if (!v.exhaustive && !r.skipped) notes += (notes.empty() ? "" : "; ") + std::string("witness mode");
              std::cout << std::setw(4) << r.q << std::setw(4) << r.p << std::setw(7) << r.order
                        << std::setw(10) << (v.predicted_exists ? "exists" : "none")
                        << std::setw(10) << observed << std::setw(10) << agree << notes << "\n";
            }
          });
    }
    if (aut_cmd->parsed()) {
      AutFormulasReport rep = verify_aut_formulas(q);
      return finish("aut", Json{{"q", q}}, to_json(rep), collect_disagreements(rep), json_mode,
                    [&] {
                      for (const AutFormulaRow& r : rep.rows)
                        std::cout << std::left << std::setw(28) << r.group << " computed "
                                  << std::setw(10) << r.computed << " closed form "
                                  << std::setw(10) << r.formula
                                  << (r.match ? "match" : "MISMATCH")
                                  << (r.supplementary ? " (supplementary)" : "") << "\n";
                    });
    }
    if (catalog_cmd->parsed()) {
      if (catalog_which != "order24")
        throw InvalidArgument("unknown catalog '" + catalog_which + "' (try order24)");
      std::vector<GroupPtr> cat = order24_catalog();
      Json arr = Json::array();
      std::vector<std::string> rows;
      for (const GroupPtr& g : cat) {
        CltReport rep = clt_report(g);
        Json gj;
        gj["spec_tag"] = g->spec_tag;
        gj["order"] = g->n;
        gj["abelian"] = is_abelian(*g);
        gj["is_clt"] = rep.is_clt;
        gj["missing_orders"] = rep.missing_orders;
        arr.push_back(std::move(gj));
      }
      return finish("catalog", Json{{"which", catalog_which}}, arr, {}, json_mode, [&] {
        for (const Json& gj : arr)
          std::cout << std::left << std::setw(52) << gj["spec_tag"].get<std::string>()
                    << (gj["abelian"].get<bool>() ? " abelian" : "        ")
                    << (gj["is_clt"].get<bool>() ? " CLT" : " non-CLT") << "\n";
      });
    }
    if (cor_cmd->parsed()) {
      CorollaryReport rep = verify_corollary(corollary_id, max_p, max_q);
      return finish("corollary", Json{{"id", corollary_id}, {"max_p", max_p}, {"max_q", max_q}},
                    to_json(rep), collect_disagreements(rep), json_mode, [&] {
                      for (const CorollaryCase& c : rep.cases)
                        std::cout << "(p,q)=(" << c.p << "," << c.q << ") expected "
                                  << (c.expected ? "exists" : "none") << ", observed "
                                  << (c.observed ? "exists" : "none")
                                  << (c.match ? "" : "  <-- MISMATCH") << "\n";
                      std::cout << (rep.all_match ? "corollary holds on this range"
                                                  : "corollary FAILS on this range")
                                << "\n";
                    });
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
