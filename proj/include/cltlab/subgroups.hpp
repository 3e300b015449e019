#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cltlab/group.hpp"

namespace cltlab {

struct SubgroupLattice {
  GroupPtr parent;
  std::vector<Subgroup> subgroups;  // sorted by (order, members)
  std::map<int, int> by_order;      // order -> count

  bool contains_order(int d) const { return by_order.count(d) > 0; }
};

/// Complete subgroup lattice: closure of the cyclic subgroups under join,
/// run on conjugacy-class representatives and expanded to full orbits.
SubgroupLattice all_subgroups(const GroupPtr& g);

std::vector<int> divisors_of(int n);

/// Existence of a subgroup of order d without building the full lattice.
/// Complete for the p*q^3 orders this project constructs; falls back to the
/// lattice for other shapes.
bool targeted_has_subgroup_of_order(const GroupPtr& g, int d);

/// Uses the lattice when provided, the targeted search otherwise.
bool has_subgroup_of_order(const GroupPtr& g, int d, const SubgroupLattice* lat = nullptr);

struct SylowInfo {
  Subgroup subgroup;
  int n_r = 0;
  bool normal = false;
};

/// One Sylow r-subgroup by repeated normalizer extension, plus n_r.
SylowInfo sylow_analysis(const GroupPtr& g, int r);

Subgroup normalizer(const GroupPtr& g, const Subgroup& h);

int count_subgroups_of_order(const GroupPtr& g, int m, const SubgroupLattice* lat = nullptr);

/// Conjugation orbits of the order-m subgroups.
std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(
    const GroupPtr& g, int m, const SubgroupLattice* lat = nullptr);

/// Intersection of all maximal subgroups.
Subgroup frattini_subgroup(const GroupPtr& g, const SubgroupLattice* lat = nullptr);

struct SylowRecord {
  int prime = 0;
  int n_r = 0;
  bool normal = false;
};

struct CltReport {
  std::string spec_tag;
  int order = 0;
  std::vector<int> divisors;
  std::vector<int> present_orders;
  std::vector<int> missing_orders;
  bool is_clt = false;
  std::vector<SylowRecord> sylow;
  double timing_ms = 0.0;
  bool used_lattice = false;
};

/// Full divisor coverage plus Sylow statistics. Groups up to the lattice
/// threshold get the complete lattice; larger ones the targeted search.
CltReport clt_report(const GroupPtr& g, bool force_lattice = false,
                     const SubgroupLattice* lat = nullptr);

struct MSetReport {
  int m_size = 0;       // order-q^2 subgroups of one Sylow q-subgroup
  int class_count = 0;  // conjugacy classes under G
  std::vector<int> normalizer_orders;
  bool normalizers_equal_sylow_q = false;
  bool p_divides_m = false;
};

/// The order-q^2 subgroup count remark: requires |G| = p*q^3 and G non-CLT.
MSetReport verify_m_set_claim(const GroupPtr& g, int p, int q);

/// Versioned JSON lattice cache, keyed by a hash of the spec tag. Loading
/// requires spec_tag and order to match.
bool save_lattice_cache(const SubgroupLattice& lat, const std::string& dir);
std::optional<SubgroupLattice> load_lattice_cache(const GroupPtr& g, const std::string& dir);

}  // namespace cltlab
