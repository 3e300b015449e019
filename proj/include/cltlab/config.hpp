#pragma once

#include <cstdint>

namespace cltlab {

// Runtime limits. max_order caps the size of any constructed group; the
// n x n multiplication table is the dominating memory cost. aut_bound caps
// the order of groups whose automorphism group is enumerated.
// CLTLAB_MAX_ORDER in the environment overrides the default order bound.

int max_order();
void set_max_order(int bound);

int aut_bound();
void set_aut_bound(int bound);

/// Group orders up to this size get a full subgroup lattice in clt_report;
/// larger orders use the targeted existence search.
int lattice_threshold();
void set_lattice_threshold(int bound);

}  // namespace cltlab
