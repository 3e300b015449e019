#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cltlab/constructors.hpp"
#include "cltlab/errors.hpp"
#include "cltlab/groupspec.hpp"
#include "cltlab/subgroups.hpp"

using namespace cltlab;

TEST_CASE("cyclic") {
  CHECK(cyclic(1)->n == 1);
  GroupPtr z27 = cyclic(27);
  CHECK(z27->n == 27);
  CHECK(element_order(*z27, 1) == 27);
  CHECK_THROWS_AS(cyclic(0), InvalidArgument);
  CHECK(clt_report(cyclic(24)).is_clt);
}

TEST_CASE("elementary_abelian") {
  GroupPtr e8 = elementary_abelian(2, 3);
  CHECK(e8->n == 8);
  CHECK(exponent(*e8) == 2);
  CHECK(is_abelian(*e8));
  CHECK(elementary_abelian(3, 3)->n == 27);
  CHECK_THROWS_AS(elementary_abelian(4, 3), InvalidArgument);
}

TEST_CASE("heisenberg") {
  HeisenbergGroup h3 = heisenberg(3);
  CHECK(h3.group->n == 27);
  CHECK_FALSE(is_abelian(*h3.group));
  CHECK(exponent(*h3.group) == 3);
  CHECK(center(*h3.group, h3.group).order() == 3);
  CHECK(commutator(*h3.group, h3.x, h3.y) == h3.z);
  CHECK_THROWS_AS(heisenberg(2), InvalidArgument);
  CHECK_THROWS_AS(heisenberg(4), InvalidArgument);

  HeisenbergGroup h5 = heisenberg(5);
  CHECK(h5.group->n == 125);
  CHECK(exponent(*h5.group) == 5);
  CHECK(automorphism_count(*h5.group) == 12000);
}

TEST_CASE("modular_group") {
  ModularGroup m3 = modular_group(3);
  const FiniteGroup& g = *m3.group;
  CHECK(g.n == 27);
  CHECK(element_order(g, m3.x) == 9);
  CHECK(element_order(g, m3.y) == 3);
  // y^-1 x y = x^{q+1} = x^4
  int conj = g.op(g.op(g.inverse(m3.y), m3.x), m3.y);
  CHECK(conj == power(g, m3.x, 4));
  // q^3(q-1): the central-twist kernel has order q^2 and the induced action
  // on G/Phi stabilizes the order-q line with trivial scaling on it, giving
  // q(q-1) images. (The q^3(q-1)^2 closed form seen for Zq x Zq^2 does not
  // apply here; see also Aut(M(125)) = 500 below.)
  CHECK(automorphism_count(g) == 54);
  CHECK(center(g, m3.group).order() == 3);
  CHECK(exponent(g) == 9);
  CHECK_THROWS_AS(modular_group(2), InvalidArgument);

  ModularGroup m5 = modular_group(5);
  CHECK(m5.group->n == 125);
  CHECK(element_order(*m5.group, m5.x) == 25);
  int c5 = m5.group->op(m5.group->op(m5.group->inverse(m5.y), m5.x), m5.y);
  CHECK(c5 == power(*m5.group, m5.x, 6));
  CHECK(automorphism_count(*m5.group) == 500);  // q^3(q-1) again
}

TEST_CASE("small named groups") {
  GroupPtr q8 = quaternion8();
  CHECK(q8->n == 8);
  int invol = 0;
  for (int x = 0; x < 8; ++x)
    if (element_order(*q8, x) == 2) ++invol;
  CHECK(invol == 1);
  CHECK(is_isomorphic(*q8, *dicyclic(8)));

  CHECK(dihedral(6)->n == 6);
  CHECK_FALSE(is_abelian(*dihedral(6)));
  CHECK_THROWS_AS(dihedral(5), InvalidArgument);
  CHECK_THROWS_AS(dicyclic(10), InvalidArgument);

  GroupPtr d12 = dicyclic(12);
  int d12_invol = 0;
  for (int x = 0; x < 12; ++x)
    if (element_order(*d12, x) == 2) ++d12_invol;
  CHECK(d12_invol == 1);

  GroupPtr sl = sl2_3();
  CHECK(sl->n == 24);
  CHECK(center(*sl, sl).order() == 2);

  GroupPtr s4 = symmetric4();
  CHECK(s4->n == 24);
  CHECK(center(*s4, s4).order() == 1);
  CHECK_FALSE(is_isomorphic(*s4, *sl));
}

TEST_CASE("zq3_semi_zp") {
  GroupPtr g56 = zq3_semi_zp(7, 2);
  CHECK(g56->n == 56);
  CHECK(validate_group(*g56).ok());

  GroupPtr g351 = zq3_semi_zp(13, 3);
  CHECK(g351->n == 351);
  CHECK(validate_group(*g351).ok());
  CHECK_FALSE(clt_report(g351).is_clt);

  CHECK_THROWS_AS(zq3_semi_zp(5, 3), NoSuchElement);
}

TEST_CASE("eq3_semi_zp fixes the embedded center") {
  GroupPtr g54 = eq3_semi_zp(2, 3);
  CHECK(g54->n == 54);
  CHECK(validate_group(*g54).ok());
  // The embedded copy of E(27) consists of pairs (h, 0) at indices 2h;
  // the complement generator is (0, 1) at index 1. Conjugation by it must
  // fix the embedded center elementwise.
  {
    HeisenbergGroup h3 = heisenberg(3);
    Subgroup z = center(*h3.group, h3.group);
    int a = 1;
    for (uint16_t zc : z.members) {
      int embedded = 2 * zc;
      CHECK(g54->conj(a, embedded) == embedded);
    }
  }

  GroupPtr g375 = eq3_semi_zp(3, 5);
  CHECK(g375->n == 375);
  CHECK(validate_group(*g375).ok());

  CHECK_THROWS_AS(eq3_semi_zp(5, 3), NoSuchElement);
  CHECK_THROWS_AS(eq3_semi_zp(3, 2), InvalidArgument);  // q = 2 has no E(8)
}

TEST_CASE("order24_catalog") {
  std::vector<GroupPtr> cat = order24_catalog();
  REQUIRE(cat.size() == 15);
  int abelian = 0;
  for (const GroupPtr& g : cat) {
    CHECK(g->n == 24);
    CHECK(validate_group(*g).ok());
    if (is_abelian(*g)) ++abelian;
  }
  CHECK(abelian == 3);
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(is_isomorphic(*cat[i], *cat[j]));
  // Exactly one non-CLT member, isomorphic to SL(2,3).
  int nonclt = 0;
  GroupPtr bad;
  for (const GroupPtr& g : cat)
    if (!clt_report(g).is_clt) {
      ++nonclt;
      bad = g;
    }
  CHECK(nonclt == 1);
  REQUIRE(bad);
  CHECK(is_isomorphic(*bad, *sl2_3()));
}

TEST_CASE("catalog members rebuild from their spec tags") {
  for (const GroupPtr& g : order24_catalog()) {
    GroupPtr rebuilt = build_group_spec(g->spec_tag);
    CHECK(rebuilt->spec_tag == g->spec_tag);
    REQUIRE(rebuilt->n == g->n);
    CHECK(rebuilt->mul == g->mul);  // bit-identical reconstruction
  }
}

TEST_CASE("all_pq3_groups counts match the published census") {
  // (order: group count) 40:14, 54:15, 56:13, 104:14; 24 via the catalog.
  CHECK(all_pq3_groups(3, 2).size() == 15);
  CHECK(all_pq3_groups(5, 2).size() == 14);
  CHECK(all_pq3_groups(7, 2).size() == 13);
  CHECK(all_pq3_groups(2, 3).size() == 15);
  CHECK(all_pq3_groups(13, 2).size() == 14);
}

TEST_CASE("all_pq3_groups(5,3): five direct products, all CLT") {
  std::vector<GroupPtr> gs = all_pq3_groups(5, 3);
  REQUIRE(gs.size() == 5);
  for (const GroupPtr& g : gs) {
    CHECK(g->n == 135);
    CHECK(validate_group(*g).ok());
    CHECK(g->spec_tag.rfind("dp(", 0) == 0);  // no nontrivial action exists
    CHECK(clt_report(g).is_clt);
  }
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(is_isomorphic(*gs[i], *gs[j]));
}

TEST_CASE("all_pq3_groups(7,2): unique member without normal Sylow 7") {
  std::vector<GroupPtr> gs = all_pq3_groups(7, 2);
  REQUIRE(gs.size() == 13);
  std::vector<GroupPtr> nonnormal;
  for (const GroupPtr& g : gs)
    if (!sylow_analysis(g, 7).normal) nonnormal.push_back(g);
  REQUIRE(nonnormal.size() == 1);
  CHECK(is_isomorphic(*nonnormal[0], *zq3_semi_zp(7, 2)));
  // Its Sylow 2-subgroup is elementary abelian.
  FiniteGroup s2 = subgroup_as_group(sylow_analysis(nonnormal[0], 2).subgroup);
  CHECK(is_isomorphic(s2, *elementary_abelian(2, 3)));
}

TEST_CASE("all_pq3_groups members are pairwise non-isomorphic (generic check)") {
  for (auto [p, q] : {std::pair{2, 3}, {5, 2}, {7, 2}}) {
    std::vector<GroupPtr> gs = all_pq3_groups(p, q);
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(is_isomorphic(*gs[i], *gs[j]));
  }
}

TEST_CASE("every member has a normal Sylow p- or Sylow q-subgroup or order 24") {
  for (auto [p, q] : {std::pair{5, 2}, {13, 2}, {2, 3}, {5, 3}}) {
    for (const GroupPtr& g : all_pq3_groups(p, q)) {
      bool ok = g->n == 24 || sylow_analysis(g, q).normal || sylow_analysis(g, p).normal;
      CHECK(ok);
    }
  }
}

TEST_CASE("group spec DSL") {
  CHECK(build_group_spec("cyclic:24")->n == 24);
  CHECK(build_group_spec("elemab:3,3")->n == 27);
  CHECK(build_group_spec("heis:3")->n == 27);
  CHECK(build_group_spec("mod:5")->n == 125);
  CHECK(build_group_spec("q8")->n == 8);
  CHECK(build_group_spec("sl23")->n == 24);
  CHECK(build_group_spec("s4")->n == 24);
  CHECK(build_group_spec("dih:12")->n == 12);
  CHECK(build_group_spec("dic:12")->n == 12);
  CHECK(build_group_spec("dp(cyclic:3,q8)")->n == 24);
  CHECK(build_group_spec("zq3xzp:7,2")->n == 56);
  CHECK(build_group_spec("eq3xzp:2,3")->n == 54);

  // A4 as an explicit matrix-action semidirect product.
  GroupPtr a4 = build_group_spec("sdp(elemab:2,2,3,matrix:[0,1;1,1])");
  CHECK(a4->n == 12);
  CHECK_FALSE(is_abelian(*a4));
  CHECK(center(*a4, a4).order() == 1);

  // glorder and slorder actions.
  GroupPtr g56 = build_group_spec("sdp(elemab:2,3,7,glorder:7)");
  CHECK(g56->n == 56);
  CHECK(is_isomorphic(*g56, *zq3_semi_zp(7, 2)));
  GroupPtr g54 = build_group_spec("sdp(heis:3,2,slorder:2)");
  CHECK(g54->n == 54);
  CHECK(is_isomorphic(*g54, *eq3_semi_zp(2, 3)));

  // aut:K round-trips through the deterministic enumeration.
  GroupPtr z7 = build_group_spec("sdp(cyclic:7,3,aut:1)");
  CHECK(z7->n == 21);

  CHECK_THROWS_AS(build_group_spec("cyclic"), InvalidArgument);
  CHECK_THROWS_AS(build_group_spec("cyclic:3 "), InvalidArgument);
  CHECK_THROWS_AS(build_group_spec("dp(cyclic:3)"), InvalidArgument);
  CHECK_THROWS_AS(build_group_spec("sdp(q8,2,glorder:3)"), InvalidArgument);
  CHECK_THROWS_AS(build_group_spec("nope:3"), InvalidArgument);
}

TEST_CASE("spec tags of named constructions round-trip") {
  for (const char* tag : {"zq3xzp:7,2", "eq3xzp:2,3", "dp(cyclic:3,dih:8)",
                          "sdp(cyclic:3,8,matrix:[2])"}) {
    GroupPtr g = build_group_spec(tag);
    CHECK(g->spec_tag == tag);
    GroupPtr again = build_group_spec(g->spec_tag);
    CHECK(again->mul == g->mul);
  }
}
