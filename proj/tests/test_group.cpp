#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "monolith/errors.hpp"
#include "monolith/families.hpp"
#include "monolith/group.hpp"
#include "monolith/io.hpp"

using namespace monolith;

TEST_SUITE_BEGIN("group");

TEST_CASE("cyclic groups: order, abelian, exponent") {
  for (int n = 1; n <= 12; ++n) {
    FiniteGroup g = cyclic_group(n);
    CHECK(g.order() == n);
    CHECK(g.is_abelian());
    CHECK(g.exponent() == n);
    // index k is the residue k
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(g.mul(a, b) == (a + b) % n);
    g.validate();
  }
}

TEST_CASE("quaternion group matches its defining relations") {
  FiniteGroup q = quaternion_group();
  CHECK(q.order() == 8);
  CHECK_FALSE(q.is_abelian());
  CHECK(q.exponent() == 4);
  int i = *q.index_of_name("i"), j = *q.index_of_name("j"),
      k = *q.index_of_name("k"), m1 = *q.index_of_name("-1");
  CHECK(q.mul(i, i) == m1);
  CHECK(q.mul(j, j) == m1);
  CHECK(q.mul(k, k) == m1);
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == *q.index_of_name("-k"));
  CHECK(q.element_order(i) == 4);
  CHECK(q.element_order(m1) == 2);
}

TEST_CASE("dihedral group: reflections square to 1, rotation subgroup cyclic") {
  for (int n : {2, 3, 4, 6}) {
    FiniteGroup d = dihedral_group(n);
    CHECK(d.order() == 2 * n);
    for (int r = n; r < 2 * n; ++r) CHECK(d.mul(r, r) == FiniteGroup::kIdentity);
    for (int a = 0; a < n; ++a) CHECK(d.mul(1 % n, a) == (a + 1) % n);
  }
  CHECK(dihedral_group(4).exponent() == 4);
}

TEST_CASE("heisenberg group: order p^3, exponent p for odd p, class data") {
  FiniteGroup h = heisenberg_group(3);
  CHECK(h.order() == 27);
  CHECK(h.exponent() == 3);
  CHECK_FALSE(h.is_abelian());
  FiniteGroup h5 = heisenberg_group(5);
  CHECK(h5.order() == 125);
  CHECK(h5.exponent() == 5);
  CHECK_THROWS_AS(heisenberg_group(4), BadParameter);
  CHECK_THROWS_AS(heisenberg_group(1), BadParameter);
}

TEST_CASE("symmetric group via permutation closure") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.exponent() == 6);
  FiniteGroup s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
}

TEST_CASE("direct product: orders multiply, componentwise structure") {
  FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(v4.exponent() == 2);
  FiniteGroup g = direct_product(quaternion_group(), cyclic_group(3));
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
}

TEST_CASE("named_group parses family expressions") {
  CHECK(named_group("quaternion").order() == 8);
  CHECK(named_group("cyclic:6").order() == 6);
  CHECK(named_group("dihedral:4").order() == 8);
  CHECK(named_group("product:(quaternion,cyclic:3)").order() == 24);
  CHECK(named_group("product:(cyclic:2,product:(cyclic:2,cyclic:2))").order() == 8);
  CHECK_THROWS_AS(named_group("sporadic"), UnknownFamily);
  CHECK_THROWS_AS(named_group("cyclic:0"), BadParameter);
  CHECK_THROWS_AS(named_group("cyclic:x"), BadParameter);
}

TEST_CASE("from_table rejects non-groups") {
  // not a Latin square
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 0}, {1, 1}}), NotLatinSquare);
  // the subtraction table mod 3: a Latin square with only a one-sided identity
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}),
                  NoIdentity);
  // order-5 Latin square with identity but broken associativity
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), NotAssociative);
}

TEST_CASE("from_table relocates a displaced identity to index 0") {
  // C3 written with the identity at index 2
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  FiniteGroup g = FiniteGroup::from_table(t);
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.element_order(1) == 3);
  g.validate();
}

TEST_CASE("power and element_order agree") {
  FiniteGroup g = dihedral_group(6);
  for (int a = 0; a < g.order(); ++a) {
    int o = g.element_order(a);
    CHECK(g.power(a, o) == FiniteGroup::kIdentity);
    for (int s = 1; s < o; ++s) CHECK(g.power(a, s) != FiniteGroup::kIdentity);
    CHECK(g.power(a, -1) == g.inv(a));
  }
}

TEST_CASE("exponent is the lcm of element orders") {
  for (const char* spec : {"cyclic:12", "dihedral:6", "quaternion", "symmetric:4"}) {
    FiniteGroup g = named_group(spec);
    long long l = 1;
    for (int a = 0; a < g.order(); ++a) l = std::lcm(l, (long long)g.element_order(a));
    CHECK(g.exponent() == l);
  }
}

TEST_CASE("content_hash distinguishes tables and is stable") {
  CHECK(quaternion_group().content_hash() == quaternion_group().content_hash());
  CHECK(quaternion_group().content_hash() != dihedral_group(4).content_hash());
}

TEST_CASE("permutation generator parsing") {
  auto gens = io::parse_permutation_generators("(1 2 3 4);(1 3)");
  FiniteGroup d4 = FiniteGroup::from_permutations(gens);
  CHECK(d4.order() == 8);
  CHECK(d4.exponent() == 4);
  CHECK_THROWS_AS(io::parse_permutation_generators("(1 2"), BadParameter);
  CHECK_THROWS_AS(io::parse_permutation_generators("(1 1 2)"), BadParameter);
}

TEST_CASE("json round trip preserves the table") {
  FiniteGroup q = quaternion_group();
  FiniteGroup back = io::group_from_json(io::group_to_json(q));
  CHECK(back.order() == q.order());
  CHECK(back.raw_table() == q.raw_table());
  CHECK(back.content_hash() == q.content_hash());
  CHECK(back.name_of(1) == q.name_of(1));
}

TEST_SUITE_END();
