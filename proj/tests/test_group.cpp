#include <doctest.h>

#include <numeric>
#include <random>

#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/group.hpp"
#include "cgt/subgroup.hpp"
#include "oracles.hpp"

using namespace cgt;

TEST_CASE("enumerate small groups") {
  auto S3 = Group::enumerate(3, {Perm::parse("(1 2)", 3), Perm::parse("(1 2 3)", 3)});
  CHECK(S3->order() == 6);

  auto A5 = Group::enumerate(5, {Perm::parse("(1 2 3 4 5)", 5), Perm::parse("(1 2 3)", 5)});
  CHECK(A5->order() == 60);

  // cross-check against the set-multiplication oracle
  auto oracle_a5 =
      oracle::closure(5, {Perm::parse("(1 2 3 4 5)", 5), Perm::parse("(1 2 3)", 5)});
  CHECK(std::int64_t(oracle_a5.size()) == A5->order());
  for (const auto& p : oracle_a5) CHECK(A5->contains(p));

  auto trivial = Group::enumerate(4, {});
  CHECK(trivial->order() == 1);
}

TEST_CASE("element table is sorted and identity is index 0") {
  auto S4 = sym(4);
  CHECK(S4->element(0).is_identity());
  for (int i = 1; i < S4->order(); ++i)
    CHECK(S4->element(i - 1) < S4->element(i));
}

TEST_CASE("enumerate is idempotent on the full element table") {
  auto S3 = sym(3);
  auto again = Group::enumerate(3, S3->elements());
  CHECK(*again == *S3);
}

TEST_CASE("order cap") {
  Caps caps;
  caps.max_order = 10;
  CHECK_THROWS_AS(Group::enumerate(5, {Perm::parse("(1 2 3 4 5)", 5), Perm::parse("(1 2 3)", 5)},
                                   caps),
                  CapExceeded);
}

TEST_CASE("degree mismatch and range") {
  CHECK_THROWS_AS(Group::enumerate(3, {Perm::identity(4)}), Error);
  CHECK_THROWS_AS(Group::enumerate(0, {}), Error);
}

TEST_CASE("mul, inv and conjugation tables agree with composition") {
  auto S4 = sym(4);
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int a = int(rng() % S4->order());
    int b = int(rng() % S4->order());
    CHECK(S4->element(S4->mul(a, b)) == compose(S4->element(a), S4->element(b)));
    CHECK(compose(S4->element(a), S4->element(S4->inv(a))).is_identity());
  }
  for (int j = 0; j < S4->num_gens(); ++j) {
    const Perm& g = S4->generators()[j];
    for (int x = 0; x < S4->order(); ++x)
      CHECK(S4->element(S4->conj_by_gen(x, j)) ==
            compose(compose(g.inverse(), S4->element(x)), g));
  }
}

TEST_CASE("element_order") {
  auto A5 = alt(5);
  CHECK(element_order(*A5, Perm::identity(5)) == 1);
  CHECK(element_order(*A5, Perm::parse("(1 2 3 4 5)", 5)) == 5);
  CHECK_THROWS_AS(element_order(*A5, Perm::parse("(1 2)", 5)), Error);
  auto S5 = sym(5);
  CHECK(element_order(*S5, Perm::parse("(1 2)(3 4 5)", 5)) == 6);
}

TEST_CASE("quotient S4 by the Klein four-group is S3-like") {
  auto S4 = sym(4);
  auto V = subgroup_generated_by(
      S4, {Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)});
  auto qp = quotient(S4, V);
  CHECK(qp.quotient->order() == 6);
  CHECK_FALSE(qp.quotient->is_abelian());
  std::int64_t exponent = 1;
  for (const auto& e : qp.quotient->elements()) exponent = std::lcm(exponent, perm_order(e));
  CHECK(exponent == 6);
}

TEST_CASE("quotient by trivial and by the whole group") {
  auto A4 = alt(4);
  auto qt = quotient(A4, trivial_subgroup(A4));
  CHECK(qt.quotient->order() == A4->order());
  auto qg = quotient(A4, full_subgroup(A4));
  CHECK(qg.quotient->order() == 1);
}

TEST_CASE("quotient rejects non-normal subgroups") {
  auto S4 = sym(4);
  auto H = subgroup_generated_by(S4, {Perm::parse("(1 2)", 4)});
  CHECK_THROWS_AS(quotient(S4, H), Error);
}

TEST_CASE("projection is a homomorphism") {
  auto S4 = sym(4);
  auto A4sub = subgroup_generated_by(
      S4, {Perm::parse("(1 2 3)", 4), Perm::parse("(2 3 4)", 4)});
  auto qp = quotient(S4, A4sub);
  CHECK(qp.quotient->order() == 2);
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    int x = int(rng() % S4->order());
    int y = int(rng() % S4->order());
    CHECK(qp.projection[S4->mul(x, y)] ==
          qp.quotient->mul(qp.projection[x], qp.projection[y]));
  }
  CHECK(std::int64_t(qp.quotient->order()) * qp.kernel.order == S4->order());
}

TEST_CASE("quotient of a quotient-sized kernel keeps coset labels canonical") {
  auto D6 = dihedral(6);
  auto Z = subgroup_generated_by(D6, {Perm::parse("(1 4)(2 5)(3 6)", 6)});
  auto qp = quotient(D6, Z);
  CHECK(qp.quotient->order() == 6);
  // kernel cosets are labeled by their least element, identity coset first
  CHECK(qp.projection[0] == 0);
}
