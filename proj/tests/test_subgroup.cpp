#include <doctest.h>

#include <random>
#include <set>

#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/subgroup.hpp"
#include "oracles.hpp"

using namespace cgt;

namespace {

oracle::PermSet to_set(const GroupPtr& G) {
  return oracle::PermSet(G->elements().begin(), G->elements().end());
}

oracle::PermSet bits_to_set(const GroupPtr& G, const DynBitset& bits) {
  oracle::PermSet s;
  bits.for_each([&](int x) { s.insert(G->element(x)); });
  return s;
}

}  // namespace

TEST_CASE("cyclic subgroup counts") {
  CHECK(cyclic_subgroups(cyclic(6)).size() == 4);
  CHECK(cyclic_subgroups(direct_product(cyclic(2), cyclic(2))).size() == 4);
  CHECK(cyclic_subgroups(sym(3)).size() == 5);
}

TEST_CASE("all_subgroups matches the naive oracle") {
  struct Case {
    GroupPtr G;
    long expect;
  };
  for (const auto& [G, expect] : {Case{sym(3), 6}, Case{preset("Q8"), 6}, Case{alt(5), 59}}) {
    auto subs = all_subgroups(G);
    CHECK(std::int64_t(subs.size()) == expect);
    CHECK(oracle::subgroup_count(to_set(G)) == expect);
    // membership agreement
    std::set<oracle::PermSet> naive;
    for (const auto& s : oracle::all_subgroups(to_set(G))) naive.insert(s);
    for (const auto& H : subs) CHECK(naive.count(bits_to_set(G, H.members)) == 1);
  }
}

TEST_CASE("conjugacy classes of subgroups of A5") {
  auto A5 = alt(5);
  auto classes = conjugacy_classes_of_subgroups(A5);
  CHECK(classes.size() == 9);
  std::vector<std::int64_t> orders;
  for (const auto& rec : classes) orders.push_back(rec.representative.order);
  CHECK(orders == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 10, 12, 60});
  CHECK(oracle::class_count(to_set(A5)) == 9);
}

TEST_CASE("conjugacy classes of subgroups of S4") {
  auto S4 = sym(4);
  auto lat = subgroup_lattice(S4);
  CHECK(lat.classes.size() == 11);
  CHECK(lat.total_subgroups == 30);
  CHECK(oracle::class_count(to_set(S4)) == 11);
  CHECK(oracle::subgroup_count(to_set(S4)) == 30);
  // class sizes sum to the subgroup count
  std::int64_t sum = 0;
  for (const auto& rec : lat.classes) sum += rec.class_size;
  CHECK(sum == lat.total_subgroups);
}

TEST_CASE("cyclic p-power groups have one class per divisor, all normal") {
  for (int pk : {8, 27, 16}) {
    auto G = cyclic(pk);
    auto classes = conjugacy_classes_of_subgroups(G);
    int expected = 1;
    for (int v = pk; v > 1; v /= (pk % 2 == 0 ? 2 : 3)) ++expected;
    CHECK(std::int64_t(classes.size()) == expected);
    for (const auto& rec : classes) {
      CHECK(rec.is_normal);
      CHECK(rec.class_size == 1);
    }
  }
}

TEST_CASE("normalizer examples") {
  auto S3 = sym(3);
  auto H = subgroup_generated_by(S3, {Perm::parse("(1 2)", 3)});
  auto N = normalizer(S3, H);
  CHECK(N.order == 2);
  CHECK(is_self_normalizing(S3, H));

  auto A5 = alt(5);
  auto P5 = subgroup_generated_by(A5, {Perm::parse("(1 2 3 4 5)", 5)});
  CHECK(normalizer(A5, P5).order == 10);

  // normal subgroup: normalizer is everything
  auto A4 = alt(4);
  auto V = subgroup_generated_by(A4, {Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)});
  CHECK(normalizer(A4, V).order == 12);
  CHECK(is_normal_subgroup(A4, V));
}

TEST_CASE("centralizer examples") {
  auto S3 = sym(3);
  CHECK(centralizer(S3, trivial_subgroup(S3)).order == 6);
  auto C3 = subgroup_generated_by(S3, {Perm::parse("(1 2 3)", 3)});
  CHECK(centralizer(S3, C3).order == 3);
  CHECK(centralizer(S3, C3).members == C3.members);

  auto Q8 = preset("Q8");
  auto lat = subgroup_lattice(Q8);
  const auto& Z = lat.classes[1].representative;  // the unique order-2 subgroup
  CHECK(Z.order == 2);
  CHECK(centralizer(Q8, Z).order == 8);
}

TEST_CASE("normalizer and centralizer match the naive oracle") {
  for (const auto& G : {sym(4), alt(4), dihedral(6), preset("Q8")}) {
    auto gs = to_set(G);
    auto lat = subgroup_lattice(G);
    for (const auto& rec : lat.classes) {
      auto hs = bits_to_set(G, rec.representative.members);
      CHECK(std::int64_t(oracle::normalizer(gs, hs).size()) == rec.normalizer_order);
      CHECK(bits_to_set(G, normalizer(G, rec.representative).members) ==
            oracle::normalizer(gs, hs));
      CHECK(bits_to_set(G, centralizer(G, rec.representative).members) ==
            oracle::centralizer(gs, hs));
    }
  }
}

TEST_CASE("self-normalizing basics") {
  auto S4 = sym(4);
  CHECK(is_self_normalizing(S4, full_subgroup(S4)));
  // Sylow normalizers are self-normalizing
  auto lat = subgroup_lattice(S4);
  auto P = subgroup_from_bits(S4, lat.classes.back().representative.members);
  for (const auto& rec : lat.classes) {
    if (rec.representative.order != 8) continue;  // Sylow 2-subgroup
    auto N = normalizer(S4, rec.representative);
    CHECK(is_self_normalizing(S4, N));
  }
  // every proper subgroup of a p-group fails
  auto D4 = dihedral(4);
  for (const auto& rec : subgroup_lattice(D4).classes)
    if (rec.representative.order < 8) CHECK_FALSE(rec.self_normalizing);
}

TEST_CASE("class records are internally consistent") {
  for (const auto& G : {sym(4), alt(5), dicyclic(3), frobenius_metacyclic(5, 1, 2, 2)}) {
    auto lat = subgroup_lattice(G);
    std::int64_t total = 0;
    for (const auto& rec : lat.classes) {
      total += rec.class_size;
      CHECK(rec.class_size * rec.normalizer_order == G->order());
      CHECK(rec.self_normalizing == (rec.normalizer_order == rec.representative.order));
      CHECK(rec.is_normal == (rec.class_size == 1));
      CHECK(G->order() % rec.representative.order == 0);  // Lagrange
      // the stored normalizer order matches a direct computation
      CHECK(normalizer(G, rec.representative).order == rec.normalizer_order);
    }
    CHECK(total == lat.total_subgroups);
  }
}

TEST_CASE("conjugate subgroups have equal order and conjugate normalizers") {
  auto S4 = sym(4);
  auto lat = subgroup_lattice(S4);
  std::mt19937 rng(5150);
  for (const auto& rec : lat.classes) {
    int g = int(rng() % S4->order());
    auto K = conjugate_subgroup(rec.representative, g);
    CHECK(K.order == rec.representative.order);
    auto NH = normalizer(S4, rec.representative);
    auto NK = normalizer(S4, K);
    CHECK(conjugate_subgroup(NH, g).members == NK.members);
  }
}

TEST_CASE("lattice is join- and intersection-closed") {
  for (const auto& G : {sym(3), alt(4), preset("Q8"), dihedral(5)}) {
    auto lat = subgroup_lattice(G);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& A = lat.all[rng() % lat.all.size()];
      const auto& B = lat.all[rng() % lat.all.size()];
      DynBitset meet = A;
      meet &= B;
      CHECK(lat.contains(meet));
      std::vector<int> gens;
      A.for_each([&](int x) { gens.push_back(x); });
      B.for_each([&](int x) { gens.push_back(x); });
      auto join = subgroup_from_indices(G, gens);
      CHECK(lat.contains(join.members));
    }
  }
}

TEST_CASE("noncyclic p-groups have at least 2m proper nontrivial classes") {
  struct Case {
    GroupPtr G;
    int m;
  };
  for (const auto& [G, m] :
       {Case{direct_product(cyclic(2), cyclic(2)), 1}, Case{dihedral(4), 2},
        Case{preset("Q8"), 2}, Case{direct_product(cyclic(4), cyclic(2)), 2},
        Case{direct_product(cyclic(3), cyclic(3)), 1}}) {
    auto classes = conjugacy_classes_of_subgroups(G);
    CHECK(std::int64_t(classes.size()) - 2 >= 2 * m);
  }
}

TEST_CASE("nonsolvable subgroups are found by the join sweep") {
  // two conjugacy classes of A5 inside A6
  auto A6 = alt(6);
  auto lat = subgroup_lattice(A6);
  int a5_classes = 0;
  for (const auto& rec : lat.classes)
    if (rec.representative.order == 60) ++a5_classes;
  CHECK(a5_classes == 2);
  CHECK(lat.classes.size() == 22);
  CHECK(lat.total_subgroups == 501);

  // S5 and its unique A5
  auto S5 = sym(5);
  auto l5 = subgroup_lattice(S5);
  CHECK(l5.classes.size() == 19);
  CHECK(l5.total_subgroups == 156);
  int a5 = 0;
  for (const auto& rec : l5.classes)
    if (rec.representative.order == 60) {
      ++a5;
      CHECK(rec.is_normal);
    }
  CHECK(a5 == 1);
}

TEST_CASE("subgroup cap") {
  Caps caps;
  caps.max_subgroups = 10;
  CHECK_THROWS_AS(subgroup_lattice(sym(4), caps), CapExceeded);
}

TEST_CASE("subgroup_from_elements validates closure") {
  auto S3 = sym(3);
  CHECK_THROWS_AS(
      subgroup_from_elements(S3, {Perm::identity(3), Perm::parse("(1 2 3)", 3)}), Error);
  auto H = subgroup_from_elements(
      S3, {Perm::identity(3), Perm::parse("(1 2 3)", 3), Perm::parse("(1 3 2)", 3)});
  CHECK(H.order == 3);
}

TEST_CASE("normal closure") {
  auto S4 = sym(4);
  // normal closure of a transposition is everything
  auto full = full_subgroup(S4);
  auto nc = normal_closure_bits(*S4, full.gens, {S4->index_of(Perm::parse("(1 2)", 4))});
  CHECK(nc.count() == 24);
  // normal closure of a double transposition is the Klein group
  auto nc2 = normal_closure_bits(*S4, full.gens, {S4->index_of(Perm::parse("(1 2)(3 4)", 4))});
  CHECK(nc2.count() == 4);
}
