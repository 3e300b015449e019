#pragma once

#include <string>
#include <vector>

#include "cltlab/gf.hpp"
#include "cltlab/group.hpp"

namespace cltlab {

GroupPtr cyclic(int n);
GroupPtr elementary_abelian(int q, int k);

/// Heisenberg group E(q^3), q odd: upper unitriangular 3x3 matrices over
/// GF(q). Nonabelian, exponent q, center of order q.
struct HeisenbergGroup {
  GroupPtr group;
  int x = 0, y = 0, z = 0;  // generator indices; z = [x,y] spans the center
};
HeisenbergGroup heisenberg(int q);

/// Modular group M(q^3), q odd: <x,y | x^{q^2} = y^q = 1, y^-1 x y = x^{q+1}>.
struct ModularGroup {
  GroupPtr group;
  int x = 0, y = 0;
};
ModularGroup modular_group(int q);

GroupPtr quaternion8();
GroupPtr dihedral(int n);      // order n, n even >= 4
GroupPtr dicyclic(int n);      // order n, n a multiple of 4 >= 8
GroupPtr sl2_3();
GroupPtr symmetric4();

/// Automorphism of elementary_abelian(q,k) induced by an invertible matrix,
/// acting on exponent vectors.
Automorphism matrix_action_on_elemab(const GroupPtr& elemab, int q, int k,
                                     const gf::Matrix& m);

/// Automorphism of cyclic(q), q prime, v -> m*v for a 1x1 matrix m.
Automorphism matrix_action_on_cyclic(const GroupPtr& zq, int q, const gf::Matrix& m);

/// Automorphism of heisenberg(q) lifting a determinant-1 matrix acting on
/// the generators (x, y); fixes the central element [x,y] pointwise.
Automorphism sl2_action_on_heisenberg(const HeisenbergGroup& h, int q, const gf::Matrix& m);

/// Z_q^3 x| Z_p with the canonical order-p matrix action.
GroupPtr zq3_semi_zp(int p, int q);

/// E(q^3) x| Z_p with the action lifted from find_sl2_element_of_order(q,p);
/// the order-p generator commutes with the central element.
GroupPtr eq3_semi_zp(int p, int q);

/// The 15 pairwise non-isomorphic groups of order 24. Fails loudly if the
/// construction list ever stops being pairwise non-isomorphic.
std::vector<GroupPtr> order24_catalog();

/// Every group of order p*q^3 up to isomorphism, assuming each such group
/// has a normal Sylow q- or Sylow p-subgroup (order 24 is catalogued
/// directly). Result sorted by spec_tag.
std::vector<GroupPtr> all_pq3_groups(int p, int q);

/// Statement of the completeness assumption underlying all_pq3_groups,
/// recorded in every verification report.
std::string enumeration_assumption();

}  // namespace cltlab
