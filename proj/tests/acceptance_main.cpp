// Acceptance suite: runs each numbered criterion at its stated (exact)
// tolerance and prints one PASS/FAIL line per criterion. Criteria state
// target runtimes; exceeding one fails the criterion.
//
// argv[1] (optional): path to the cltlab binary, used by the scan
// determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cltlab/constructors.hpp"
#include "cltlab/errors.hpp"
#include "cltlab/gf.hpp"
#include "cltlab/groupspec.hpp"
#include "cltlab/subgroups.hpp"
#include "cltlab/verifier.hpp"

using namespace cltlab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      details.push_back(what);
    }
  }
};

int g_failures = 0;

// Non-CLT groups discovered while running criteria 1..8, re-checked by the
// forward-direction criterion afterwards.
std::vector<GroupPtr> g_nonclt_found;

void note_nonclt(const GroupPtr& g, const CltReport& rep) {
  if (rep.is_clt) return;
  for (const GroupPtr& seen : g_nonclt_found)
    if (seen->spec_tag == g->spec_tag) return;
  g_nonclt_found.push_back(g);
}

void run(int number, const std::string& title, double budget_seconds,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    out.require(false, "runtime " + std::to_string(secs) + " s exceeds the " +
                           std::to_string(budget_seconds) + " s target");
  }
  std::printf("%s criterion %2d: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", number,
              title.c_str(), secs);
  for (const std::string& d : out.details) std::printf("       - %s\n", d.c_str());
  if (!out.pass) ++g_failures;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  std::string cltlab_bin = argc > 1 ? argv[1] : "";

  run(1, "SL(2,3) misses exactly order 12 and has quaternion Sylow 2", 1.0, [](Outcome& out) {
    GroupPtr sl = sl2_3();
    out.require(sl->n == 24, "order is not 24");
    CltReport rep = clt_report(sl);
    note_nonclt(sl, rep);
    out.require(rep.missing_orders == std::vector<int>{12},
                "missing_orders = " + vec_str(rep.missing_orders) + ", expected {12}");
    FiniteGroup s2 = subgroup_as_group(sylow_analysis(sl, 2).subgroup);
    out.require(is_isomorphic(s2, *quaternion8()), "Sylow 2-subgroup is not Q8");
  });

  run(2, "order-56 group: n_7 = 8, elementary abelian normal Sylow 2, missing {14,28}", 1.0,
      [](Outcome& out) {
        GroupPtr g = zq3_semi_zp(7, 2);
        CltReport rep = clt_report(g);
        note_nonclt(g, rep);
        SylowInfo s7 = sylow_analysis(g, 7);
        out.require(s7.n_r == 8, "n_7 = " + std::to_string(s7.n_r) + ", expected 8");
        SylowInfo s2 = sylow_analysis(g, 2);
        out.require(s2.normal, "Sylow 2 is not normal");
        out.require(is_isomorphic(subgroup_as_group(s2.subgroup), *elementary_abelian(2, 3)),
                    "Sylow 2 is not elementary abelian");
        bool has28 = false;
        for (int d : rep.missing_orders) has28 = has28 || d == 28;
        out.require(has28, "28 not among missing orders");
        out.require(rep.missing_orders == std::vector<int>{14, 28},
                    "missing_orders = " + vec_str(rep.missing_orders) + ", expected {14,28}");
      });

  run(3, "automorphism counts at q=3 match the four closed forms (108, 11232, 108, 432)", 30.0,
      [](Outcome& out) {
        AutFormulasReport rep = verify_aut_formulas(3);
        const std::array<long long, 4> stated{108, 11232, 108, 432};
        for (int i = 0; i < 4; ++i) {
          const AutFormulaRow& row = rep.rows[i];
          out.require(row.formula == stated[i], row.group + ": closed form mismatch");
          out.require(row.computed == stated[i],
                      row.group + ": brute-force count " + std::to_string(row.computed) +
                          " != stated " + std::to_string(stated[i]));
        }
      });

  run(4, "subgroup counts: 4 of order 9 in E(27); 13 in Z3^3; 7 of order 4 in Z2^3", 1.0,
      [](Outcome& out) {
        out.require(count_subgroups_of_order(heisenberg(3).group, 9) == 4,
                    "E(27) order-9 count != 4");
        out.require(count_subgroups_of_order(elementary_abelian(3, 3), 9) == 13,
                    "Z3^3 order-9 count != 13");
        out.require(count_subgroups_of_order(elementary_abelian(2, 3), 4) == 7,
                    "Z2^3 order-4 count != 7");
      });

  run(5, "converse constructions: eq3(2,3) non-CLT missing {18}; zq3(13,3) missing {39,117}",
      30.0, [](Outcome& out) {
        GroupPtr g54 = eq3_semi_zp(2, 3);
        CltReport r54 = clt_report(g54);
        note_nonclt(g54, r54);
        out.require(!r54.is_clt, "eq3_semi_zp(2,3) is CLT (order-18 subgroups exist; the "
                                 "determinant-1 involution -I fixes every maximal subgroup "
                                 "of E(27))");
        out.require(r54.missing_orders == std::vector<int>{18},
                    "eq3(2,3) missing_orders = " + vec_str(r54.missing_orders) +
                        ", expected {18}");
        GroupPtr g351 = zq3_semi_zp(13, 3);
        CltReport r351 = clt_report(g351);
        note_nonclt(g351, r351);
        out.require(!r351.is_clt, "zq3_semi_zp(13,3) is CLT");
        bool has117 = false;
        for (int d : r351.missing_orders) has117 = has117 || d == 117;
        out.require(has117, "117 not among missing orders of zq3(13,3)");
        out.require(r351.missing_orders == std::vector<int>{39, 117},
                    "zq3(13,3) missing_orders = " + vec_str(r351.missing_orders) +
                        ", expected {39,117}");
      });

  run(6, "M-set remark on the three non-CLT fixtures: normalizers = S_q and p | |M|", 30.0,
      [](Outcome& out) {
        struct Case {
          int p, q, m;
          GroupPtr g;
        };
        std::vector<Case> cases{{7, 2, 7, zq3_semi_zp(7, 2)},
                                {2, 3, 4, eq3_semi_zp(2, 3)},
                                {13, 3, 13, zq3_semi_zp(13, 3)}};
        for (const Case& c : cases) {
          try {
            MSetReport m = verify_m_set_claim(c.g, c.p, c.q);
            out.require(m.m_size == c.m, c.g->spec_tag + ": |M| = " + std::to_string(m.m_size) +
                                             ", expected " + std::to_string(c.m));
            out.require(m.p_divides_m, c.g->spec_tag + ": p does not divide |M|");
            out.require(m.normalizers_equal_sylow_q,
                        c.g->spec_tag + ": some class representative has normalizer != S_q");
          } catch (const Error& e) {
            out.require(false, c.g->spec_tag + ": " + e.what());
          }
        }
      });

  run(7, "order-24 catalog: 15 pairwise non-isomorphic, one non-CLT (SL(2,3)), 3 abelian",
      60.0, [](Outcome& out) {
        std::vector<GroupPtr> cat = order24_catalog();  // throws if not pairwise distinct
        out.require(cat.size() == 15, "catalog size != 15");
        int abelian = 0, nonclt = 0;
        GroupPtr bad;
        for (const GroupPtr& g : cat) {
          if (is_abelian(*g)) ++abelian;
          CltReport rep = clt_report(g);
          if (!rep.is_clt) {
            ++nonclt;
            bad = g;
            note_nonclt(g, rep);
          }
        }
        out.require(nonclt == 1, "non-CLT count = " + std::to_string(nonclt) + ", expected 1");
        if (bad) out.require(is_isomorphic(*bad, *sl2_3()), "non-CLT member is not SL(2,3)");
        out.require(abelian == 3, "abelian count = " + std::to_string(abelian) + ", expected 3");
      });

  run(8, "negative pair (5,3): exactly 5 groups, all CLT", 60.0, [](Outcome& out) {
    std::vector<GroupPtr> gs = all_pq3_groups(5, 3);
    out.require(gs.size() == 5, "group count = " + std::to_string(gs.size()) + ", expected 5");
    for (const GroupPtr& g : gs) {
      CltReport rep = clt_report(g);
      note_nonclt(g, rep);
      out.require(rep.is_clt, g->spec_tag + " is not CLT");
    }
    TheoremVerdict v = predict(5, 3);
    out.require(!v.predicted_exists, "prediction should be non-existence");
  });

  run(9, "forward-direction bullets hold for every non-CLT group found above", 0, [](Outcome& out) {
    out.require(!g_nonclt_found.empty(), "no non-CLT groups were found");
    for (const GroupPtr& g : g_nonclt_found) {
      int n = g->n;
      // Recover p (exponent-1 prime) and q (exponent-3 prime) from p*q^3.
      int p = 0, q = 0, rest = n;
      for (int r = 2; r <= rest; ++r) {
        if (rest % r) continue;
        int e = 0;
        while (rest % r == 0) {
          rest /= r;
          ++e;
        }
        if (e == 1)
          p = r;
        else if (e == 3)
          q = r;
      }
      if (p == 0 || q == 0 || n != p * q * q * q) {
        out.require(false, g->spec_tag + ": order is not of the form p*q^3");
        continue;
      }
      out.require(q % p != 1, g->spec_tag + ": q = 1 (mod p)");
      out.require(!sylow_analysis(g, p).normal, g->spec_tag + ": Sylow p is normal");
      out.require(n == 24 || sylow_analysis(g, q).normal,
                  g->spec_tag + ": Sylow q not normal away from order 24");
    }
  });

  run(10, "targeted search agrees with the lattice on every divisor of every fixture <= 400",
      0, [](Outcome& out) {
        std::vector<GroupPtr> fixtures{sl2_3(),
                                       symmetric4(),
                                       quaternion8(),
                                       dihedral(24),
                                       dicyclic(24),
                                       cyclic(24),
                                       elementary_abelian(2, 3),
                                       elementary_abelian(3, 3),
                                       heisenberg(3).group,
                                       modular_group(3).group,
                                       zq3_semi_zp(7, 2),
                                       eq3_semi_zp(2, 3),
                                       zq3_semi_zp(13, 3),
                                       eq3_semi_zp(3, 5)};
        for (const GroupPtr& g : all_pq3_groups(5, 3)) fixtures.push_back(g);
        for (const GroupPtr& g : all_pq3_groups(7, 2)) fixtures.push_back(g);
        int checked = 0;
        for (const GroupPtr& g : fixtures) {
          if (g->n > 400) continue;
          SubgroupLattice lat = all_subgroups(g);
          for (int d : divisors_of(g->n)) {
            ++checked;
            if (targeted_has_subgroup_of_order(g, d) != lat.contains_order(d))
              out.require(false, g->spec_tag + ": disagreement at order " + std::to_string(d));
          }
        }
        out.require(checked > 0, "no fixtures checked");
      });

  run(11, "scan --max-p 13 --max-q 3 emits byte-identical JSON for --jobs 1 and --jobs 8", 0,
      [&](Outcome& out) {
        if (cltlab_bin.empty()) {
          out.require(false, "cltlab binary path not supplied");
          return;
        }
        auto run_scan = [&](int jobs, const std::string& outfile) {
          std::string cmd = cltlab_bin + " scan --max-p 13 --max-q 3 --jobs " +
                            std::to_string(jobs) + " --json > " + outfile;
          int rc = std::system(cmd.c_str());
          return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        };
        int rc1 = run_scan(1, "/tmp/cltlab_scan_j1.json");
        int rc8 = run_scan(8, "/tmp/cltlab_scan_j8.json");
        out.require(rc1 == rc8, "exit codes differ across job counts");
        out.require(rc1 == 0 || rc1 == 1, "scan failed to run");
        std::ifstream f1("/tmp/cltlab_scan_j1.json"), f8("/tmp/cltlab_scan_j8.json");
        std::stringstream s1, s8;
        s1 << f1.rdbuf();
        s8 << f8.rdbuf();
        out.require(s1.str() == s8.str() && !s1.str().empty(), "JSON outputs differ");
      });

  run(12, "falsification probe (3,7), order 1029: completes, flags the ambiguity, internally "
          "consistent",
      600.0, [](Outcome& out) {
        PairReport rep = verify_pair(3, 7, true);
        out.require(rep.verdict.exhaustive, "not exhaustive");
        out.require(rep.verdict.p_divides_q_minus_1, "ambiguity flag (p | q-1) not set");
        out.require(rep.verdict.observed_exists.has_value(), "observation missing");
        bool any_nonclt = false;
        for (const Witness& w : rep.examined)
          if (w.clt_report && !w.clt_report->is_clt) any_nonclt = true;
        out.require(*rep.verdict.observed_exists == any_nonclt,
                    "observed_exists inconsistent with the member reports");
        out.require(rep.verdict.witnesses.empty() == !any_nonclt,
                    "witness list inconsistent with the member reports");
        out.require(rep.groups_examined > 0, "no groups examined");
      });

  std::printf("%d of 12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
