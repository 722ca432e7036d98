#include <doctest.h>

#include <random>

#include "cgt/error.hpp"
#include "cgt/perm.hpp"

using namespace cgt;

namespace {

Perm rand_perm(std::mt19937& rng, int degree) {
  std::vector<std::uint16_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint16_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("compose is left-to-right") {
  // (1 2) then (2 3) maps 1->3, 2->1, 3->2
  Perm a = Perm::parse("(1 2)", 3);
  Perm b = Perm::parse("(2 3)", 3);
  CHECK(compose(a, b) == Perm::parse("(1 3 2)", 3));
}

TEST_CASE("identity and inverse laws") {
  Perm g = Perm::parse("(1 2 3)(4 5)", 5);
  Perm e = Perm::identity(5);
  CHECK(compose(e, g) == g);
  CHECK(compose(g, e) == g);
  CHECK(compose(g, g.inverse()) == e);
  CHECK(compose(g.inverse(), g) == e);
  CHECK(e.inverse() == e);
  CHECK(Perm::parse("(1 2 3)", 3).inverse() == Perm::parse("(1 3 2)", 3));
  Perm t = Perm::parse("(1 4)", 4);
  CHECK(t.inverse() == t);
}

TEST_CASE("compose degree mismatch") {
  CHECK_THROWS_AS(compose(Perm::identity(3), Perm::identity(4)), Error);
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 1 + int(rng() % 9);
    Perm a = rand_perm(rng, d), b = rand_perm(rng, d), c = rand_perm(rng, d);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("perm_order is the lcm of cycle lengths") {
  CHECK(perm_order(Perm::identity(4)) == 1);
  CHECK(perm_order(Perm::parse("(1 2 3 4 5)", 5)) == 5);
  CHECK(perm_order(Perm::parse("(1 2)(3 4 5)", 5)) == 6);
  std::mt19937 rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    Perm p = rand_perm(rng, 8);
    Perm q = p;
    std::int64_t k = 1;
    while (!q.is_identity()) {
      q = compose(q, p);
      ++k;
    }
    CHECK(perm_order(p) == k);
  }
}

TEST_CASE("cycle notation round trip") {
  CHECK(Perm::identity(4).str() == "()");
  CHECK(Perm::parse("()", 4) == Perm::identity(4));
  CHECK(Perm::parse("(1 2 3)(4 5)", 5).str() == "(1 2 3)(4 5)");
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int d = 1 + int(rng() % 12);
    Perm p = rand_perm(rng, d);
    CHECK(Perm::parse(p.str(), d) == p);
  }
}

TEST_CASE("image list form") {
  CHECK(Perm::parse("2 3 1 5 4", 5) == Perm::parse("(1 2 3)(4 5)", 5));
  CHECK_THROWS_AS(Perm::parse("2 3", 3), Error);
  CHECK_THROWS_AS(Perm::parse("2 2 1", 3), Error);
}

TEST_CASE("cycle parse errors") {
  CHECK_THROWS_AS(Perm::parse("(1 2", 3), Error);
  CHECK_THROWS_AS(Perm::parse("(1 2)(2 3)", 3), Error);
  CHECK_THROWS_AS(Perm::parse("(0 1)", 3), Error);
  CHECK_THROWS_AS(Perm::parse("(1 4)", 3), Error);
}
