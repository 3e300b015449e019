#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cltlab/group.hpp"
#include "cltlab/subgroups.hpp"

namespace cltlab {

struct PredictionReasons {
  bool divides_q_plus_1 = false;
  bool divides_q2_q_1 = false;
  bool special_case_24 = false;
};

struct Witness {
  std::string spec_tag;
  std::optional<CltReport> clt_report;
};

struct TheoremVerdict {
  int p = 0;
  int q = 0;
  bool predicted_exists = false;
  PredictionReasons reasons;
  bool p_divides_q_minus_1 = false;  // ambiguity flag
  std::vector<Witness> witnesses;    // non-CLT groups found, with reports
  std::optional<bool> observed_exists;
  bool exhaustive = false;
  std::optional<bool> agreement;
};

/// Per-witness check of the structural claims that non-CLT groups must
/// satisfy: q != 1 mod p, non-normal Sylow p, normal Sylow q away from order
/// 24, and the semidirect shape of the Sylow q-subgroup.
struct ForwardCheck {
  std::string spec_tag;
  bool q_mod_p_not_1 = false;
  bool sylow_p_nonnormal = false;
  bool sylow_q_normal_or_24 = false;
  bool structure_matches = false;

  bool all() const {
    return q_mod_p_not_1 && sylow_p_nonnormal && sylow_q_normal_or_24 && structure_matches;
  }
};

struct PairReport {
  TheoremVerdict verdict;
  std::vector<Witness> examined;  // every group checked, CLT or not
  std::vector<ForwardCheck> forward_checks;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  int groups_examined = 0;
  double timing_ms = 0.0;
};

/// Pure number-theoretic side of the characterization.
TheoremVerdict predict(int p, int q);

/// Witness mode constructs the predicted families and tests them; exhaustive
/// mode enumerates all groups of order p*q^3. Observation never defers to
/// prediction.
PairReport verify_pair(int p, int q, bool exhaustive);

struct AutFormulaRow {
  std::string group;
  long long computed = 0;
  long long formula = 0;
  bool match = false;
  bool supplementary = false;  // reported alongside, not one of the four closed forms
};

struct AutFormulasReport {
  int q = 0;
  std::vector<AutFormulaRow> rows;
  bool all_match = false;
};

/// Brute-force automorphism counts of the order-q^3 groups against their
/// closed forms.
AutFormulasReport verify_aut_formulas(int q);

struct CorollaryCase {
  int p = 0;
  int q = 0;
  std::string description;
  bool expected = false;
  bool observed = false;
  bool match = false;
  std::vector<std::string> witness_tags;
};

struct CorollaryReport {
  std::string id;
  std::vector<CorollaryCase> cases;
  bool all_match = false;
};

/// id: 2.1, 2.2a, 2.2b, 2.3a, 2.3b.
CorollaryReport verify_corollary(const std::string& id, int max_p, int max_q);

struct ScanRow {
  int p = 0;
  int q = 0;
  long long order = 0;
  PairReport report;
  bool skipped = false;
  std::string skip_reason;
};

/// One verdict per prime pair with p <= max_p, q <= max_q, sorted by (q, p).
/// Rows are computed independently; `jobs` only parallelizes, the output is
/// schedule-independent.
std::vector<ScanRow> scan(int max_p, int max_q, bool exhaustive, int jobs);

std::vector<int> primes_up_to(int n);

}  // namespace cltlab
