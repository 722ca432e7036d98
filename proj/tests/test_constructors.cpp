#include <doctest.h>

#include "cgt/census.hpp"
#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/structure.hpp"

using namespace cgt;

TEST_CASE("basic families") {
  CHECK(cyclic(1)->order() == 1);
  CHECK(cyclic(4)->order() == 4);
  CHECK(dihedral(3)->order() == 6);
  CHECK(dihedral(7)->order() == 14);
  CHECK(dicyclic(1)->order() == 4);
  CHECK(dicyclic(3)->order() == 12);
  CHECK(sym(4)->order() == 24);
  CHECK(alt(4)->order() == 12);
  CHECK(alt(5)->order() == 60);
  CHECK(alt(6)->order() == 360);
  CHECK(direct_product(cyclic(2), cyclic(3))->order() == 6);
  CHECK_THROWS_AS(dihedral(2), Error);
  CHECK_THROWS_AS(dicyclic(20000), Error);  // 4n points exceed the range
  CHECK_THROWS_AS(cyclic(70000), Error);
}

TEST_CASE("dicyclic(3) shape") {
  auto G = dicyclic(3);
  CHECK(center(G).order == 2);
  CHECK(census(G).d_value == 3);
}

TEST_CASE("presets") {
  CHECK(preset("Q8")->order() == 8);
  CHECK(preset("A4")->order() == 12);
  CHECK(preset("S4")->order() == 24);
  CHECK(preset("SL2(3)")->order() == 24);
  CHECK(preset("A5")->order() == 60);
  CHECK(preset("A6")->order() == 360);
  CHECK(preset("PSL(2,5)")->order() == 60);
  CHECK(preset("PSL(2,7)")->order() == 168);
  CHECK(preset("PSL(2,8)")->order() == 504);
  CHECK_THROWS_AS(preset("M11"), Error);

  // Q8: one involution, six elements of order 4
  auto Q8 = preset("Q8");
  int invol = 0;
  for (const auto& e : Q8->elements())
    if (perm_order(e) == 2) ++invol;
  CHECK(invol == 1);

  CHECK(derived_length(preset("SL2(3)")) == 3);
  CHECK(center(preset("SL2(3)")).order == 2);
}

TEST_CASE("PSL(2,5) is a twin of A5") {
  auto P = preset("PSL(2,5)");
  auto A = preset("A5");
  CHECK(P->order() == A->order());
  CHECK(census(P).d_value == census(A).d_value);
  auto lp = subgroup_lattice(P);
  auto la = subgroup_lattice(A);
  CHECK(lp.classes.size() == la.classes.size());
  CHECK(lp.total_subgroups == la.total_subgroups);
}

TEST_CASE("smallest_of_order") {
  CHECK(smallest_of_order(7, 3) == 2);
  CHECK(smallest_of_order(5, 2) == 4);
  CHECK(smallest_of_order(25, 2) == 24);
  CHECK_FALSE(smallest_of_order(7, 5).has_value());
}

TEST_CASE("matrix_of_order") {
  // 1x1: the smallest element of order 3 mod 7 is 2
  auto M1 = matrix_of_order(7, 1, 3, ModuleKind::HomogeneousScalar);
  CHECK(M1 == std::vector<std::vector<int>>{{2}});

  // scalar of order 2 mod 5 is -1
  auto M2 = matrix_of_order(5, 2, 2, ModuleKind::HomogeneousScalar);
  CHECK(M2 == std::vector<std::vector<int>>{{4, 0}, {0, 4}});
  CHECK(matrix_of_order(5, 2, 2, ModuleKind::SplitRepeated) == M2);

  // companion of the quadratic factor x^2 + x + 1 of x^3 - 1 over GF(5)
  auto M3 = matrix_of_order(5, 2, 3, ModuleKind::Irreducible);
  CHECK(M3 == std::vector<std::vector<int>>{{0, 4}, {1, 4}});

  auto M4 = matrix_of_order(7, 2, 3, ModuleKind::SplitDistinct);
  CHECK(M4 == std::vector<std::vector<int>>{{2, 0}, {0, 4}});

  auto M5 = matrix_of_order(7, 3, 3, ModuleKind::MixedDims);
  CHECK(M5 == std::vector<std::vector<int>>{{2, 0, 0}, {0, 4, 0}, {0, 0, 4}});

  CHECK_THROWS_AS(matrix_of_order(5, 2, 3, ModuleKind::SplitDistinct), Error);
  CHECK_THROWS_AS(matrix_of_order(7, 2, 3, ModuleKind::Irreducible), Error);
  CHECK_THROWS_AS(matrix_of_order(2, 2, 3, ModuleKind::SplitDistinct), Error);
}

TEST_CASE("module realizability") {
  CHECK(module_realizable(5, 2, 3, ModuleKind::Irreducible));
  CHECK_FALSE(module_realizable(7, 2, 3, ModuleKind::Irreducible));  // 3 | 7-1
  CHECK(module_realizable(2, 3, 7, ModuleKind::Irreducible));
  CHECK(module_realizable(11, 3, 5, ModuleKind::SplitDistinct));
  CHECK_FALSE(module_realizable(13, 3, 3, ModuleKind::SplitDistinct));  // needs q-1 >= 3
  CHECK(module_realizable(13, 3, 3, ModuleKind::MixedDims));
  CHECK_FALSE(module_realizable(13, 3, 2, ModuleKind::MixedDims));
}

TEST_CASE("metacyclic Frobenius groups") {
  auto F21 = frobenius_metacyclic(7, 1, 3, 1);
  CHECK(F21->order() == 21);
  CHECK(census(F21).d_value == 1);

  auto F50 = frobenius_metacyclic(5, 2, 2, 1);
  CHECK(F50->order() == 50);
  CHECK(census(F50).d_value == 2);

  auto F20 = frobenius_metacyclic(5, 1, 2, 2);
  CHECK(F20->order() == 20);
  CHECK(census(F20).d_value == 3);

  CHECK_THROWS_AS(frobenius_metacyclic(7, 1, 5, 1), Error);  // 5 does not divide 6
  CHECK_THROWS_AS(frobenius_metacyclic(7, 1, 7, 1), Error);
}

TEST_CASE("elementary abelian Frobenius groups") {
  auto G1 = frobenius_elem_abelian(5, 2, 3, ModuleKind::Irreducible);
  CHECK(G1->order() == 75);
  CHECK(census(G1).d_value == 3);

  auto G2 = frobenius_elem_abelian(7, 2, 3, ModuleKind::SplitDistinct);
  CHECK(G2->order() == 147);
  CHECK(census(G2).d_value == 5);

  auto G3 = frobenius_elem_abelian(7, 2, 3, ModuleKind::SplitRepeated);
  CHECK(census(G3).d_value == 9);

  auto G4 = frobenius_elem_abelian(2, 3, 7, ModuleKind::Irreducible);
  CHECK(G4->order() == 56);
  CHECK(census(G4).d_value == 3);

  // constructed groups really are Frobenius with the intended pieces
  for (const auto& G : {G1, G2, G4}) {
    auto fd = frobenius_decomposition(G);
    REQUIRE(fd.has_value());
    CHECK(fd->kernel.order * fd->complement.order == G->order());
    CHECK(is_elementary_abelian(fd->kernel));
  }
}

TEST_CASE("central extension example") {
  auto G1 = central_extension_example(3, 2);
  CHECK(G1->order() == 12);
  CHECK(center(G1).order == 2);
  CHECK(census(G1).d_value == 3);

  auto G2 = central_extension_example(5, 2);
  CHECK(G2->order() == 20);
  CHECK(center(G2).order == 2);
  CHECK(census(G2).d_value == 3);

  auto G3 = central_extension_example(7, 3);
  CHECK(G3->order() == 63);
  CHECK(center(G3).order == 3);
  CHECK(census(G3).d_value == 3);

  CHECK_THROWS_AS(central_extension_example(5, 3), Error);  // 3 does not divide 4
}

TEST_CASE("name resolution") {
  CHECK(resolve_group_name("C12")->order() == 12);
  CHECK(resolve_group_name("D4")->order() == 8);
  CHECK(resolve_group_name("Dic3")->order() == 12);
  CHECK(resolve_group_name("S5")->order() == 120);
  CHECK(resolve_group_name("A4")->order() == 12);
  CHECK(resolve_group_name("V4")->order() == 4);
  CHECK(resolve_group_name("Q8")->order() == 8);
  CHECK(resolve_group_name("C4xC2")->order() == 8);
  CHECK(resolve_group_name("C2xC2xC2")->order() == 8);
  CHECK(resolve_group_name("PSL(2,7)")->order() == 168);
  CHECK_THROWS_AS(resolve_group_name("B7"), Error);
  CHECK_THROWS_AS(resolve_group_name("Cx"), Error);
}

TEST_CASE("direct product census matches the product rule for coprime nilpotent factors") {
  // D(H x K) = (D(H)+2)(D(K)+2) - 2 for coprime nilpotent factors
  auto d = [](const GroupPtr& g) { return census(g).d_value; };
  CHECK(d(direct_product(cyclic(2), cyclic(3))) == 2);
  CHECK(d(direct_product(cyclic(4), cyclic(9))) == 7);
  CHECK(d(direct_product(preset("Q8"), cyclic(3))) == 10);
  // and exceeds it otherwise
  CHECK(d(direct_product(sym(3), cyclic(2))) == 7);
  CHECK(d(direct_product(cyclic(2), cyclic(2))) == 3);
}
