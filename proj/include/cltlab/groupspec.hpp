#pragma once

#include <string>

#include "cltlab/group.hpp"

namespace cltlab {

/// Builds a group from its spec string. Grammar (whitespace-free,
/// case-sensitive):
///
///   SPEC   := cyclic:N | elemab:Q,K | heis:Q | mod:Q | q8 | sl23 | s4
///           | dih:N | dic:N | dp(SPEC,SPEC) | sdp(SPEC,M,ACTION)
///           | zq3xzp:P,Q | eq3xzp:P,Q
///   ACTION := glorder:P | slorder:P | matrix:[row;row;...] | aut:K
///
/// matrix rows are comma-separated residues; the modulus and dimension come
/// from the base group (elemab:Q,K; cyclic prime; heis lifts a 2x2
/// determinant-1 matrix). aut:K selects the K-th automorphism of the base in
/// canonical enumeration order.
GroupPtr build_group_spec(const std::string& spec);

}  // namespace cltlab
