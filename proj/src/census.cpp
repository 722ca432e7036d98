#include "cgt/census.hpp"

#include <algorithm>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

CensusReport census(const GroupPtr& G, const SubgroupLattice& lat) {
  CensusReport r;
  r.group_order = G->order();
  r.total_subgroup_classes = static_cast<std::int64_t>(lat.classes.size());
  for (const auto& rec : lat.classes) {
    if (rec.representative.order == 1 || rec.self_normalizing) continue;
    r.class_records.push_back(rec);
  }
  r.d_value = static_cast<std::int64_t>(r.class_records.size());
  return r;
}

CensusReport census(const GroupPtr& G, const Caps& caps) {
  return census(G, subgroup_lattice(G, caps));
}

std::int64_t relative_census(const GroupPtr& G, const Subgroup& N, const SubgroupLattice& lat) {
  if (N.parent != G) throw Error("relative_census: subgroup belongs to a different group");
  const bool normal = is_normal_subgroup(G, N);
  std::int64_t count = 0;
  for (const auto& rec : lat.classes) {
    if (rec.representative.order == 1 || rec.self_normalizing) continue;
    if (rec.representative.order >= N.order) continue;
    if (rec.representative.members.is_subset_of(N.members)) {
      ++count;
      continue;
    }
    if (normal) continue;
    // for a non-normal N only some conjugates may lie inside it
    const Group& g = *G;
    DynBitset cur = rec.representative.members;
    std::unordered_set<DynBitset, DynBitsetHasher> seen{cur};
    std::vector<DynBitset> orbit{cur};
    bool hit = false;
    for (std::size_t i = 0; i < orbit.size() && !hit; ++i) {
      for (int j = 0; j < g.num_gens() && !hit; ++j) {
        DynBitset b(static_cast<int>(g.order()));
        orbit[i].for_each([&](int x) { b.set(g.conj_by_gen(x, j)); });
        if (seen.insert(b).second) {
          if (b.is_subset_of(N.members)) hit = true;
          orbit.push_back(std::move(b));
        }
      }
    }
    if (hit) ++count;
  }
  return count;
}

std::int64_t relative_census(const GroupPtr& G, const Subgroup& N) {
  return relative_census(G, N, subgroup_lattice(G));
}

std::int64_t formula_frob1(int n, int m) {
  if (n < 1 || m < 1) throw Error("formula_frob1: n and m must be >= 1");
  return std::int64_t(n + 1) * m - 1;
}

std::string frob2_case_name(Frob2Case c) {
  switch (c) {
    case Frob2Case::Irreducible: return "irreducible";
    case Frob2Case::Homogeneous: return "homogeneous";
    case Frob2Case::SplitDistinct: return "split-distinct";
  }
  return "?";
}

std::string frob3_case_name(Frob3Case c) {
  switch (c) {
    case Frob3Case::Irreducible: return "irreducible";
    case Frob3Case::Homogeneous: return "homogeneous";
    case Frob3Case::TwoComponents: return "two-components";
    case Frob3Case::ThreeComponents: return "three-components";
  }
  return "?";
}

std::int64_t formula_frob2(int p, int q, Frob2Case c) {
  if (!is_prime_number(p) || !is_prime_number(q) || p == q)
    throw Error("formula_frob2: p, q must be distinct primes");
  switch (c) {
    case Frob2Case::Irreducible:
      if ((p - 1) % q == 0) throw Error("formula_frob2: irreducible case needs q not dividing p-1");
      if ((p + 1) % q != 0) throw Error("formula_frob2: non-integral count");
      return (p + 1) / q + 1;
    case Frob2Case::Homogeneous:
      if ((p - 1) % q != 0) throw Error("formula_frob2: homogeneous case needs q | p-1");
      return p + 2;
    case Frob2Case::SplitDistinct:
      if ((p - 1) % q != 0) throw Error("formula_frob2: split case needs q | p-1");
      return (p - 1) / q + 3;
  }
  throw Error("formula_frob2: bad case");
}

std::int64_t formula_frob3(int p, int q, Frob3Case c) {
  if (!is_prime_number(p) || !is_prime_number(q) || p == q)
    throw Error("formula_frob3: p, q must be distinct primes");
  const std::int64_t pp = std::int64_t(p) * p;
  switch (c) {
    case Frob3Case::Irreducible:
      if ((p - 1) % q == 0) throw Error("formula_frob3: irreducible case needs q not dividing p-1");
      if ((pp + p + 1) % q != 0) throw Error("formula_frob3: non-integral count");
      return 2 * (pp + p + 1) / q + 1;
    case Frob3Case::Homogeneous:
      if ((p - 1) % q != 0) throw Error("formula_frob3: homogeneous case needs q | p-1");
      return 2 * pp + 2 * p + 3;
    case Frob3Case::TwoComponents:
      if ((p - 1) % q != 0) throw Error("formula_frob3: two-component case needs q | p-1");
      if ((pp - 1) % q != 0) throw Error("formula_frob3: non-integral count");
      return 2 * (pp - 1) / q + 2 * p + 5;
    case Frob3Case::ThreeComponents:
      if ((p - 1) % q != 0) throw Error("formula_frob3: three-component case needs q | p-1");
      if ((pp + p - 2) % q != 0) throw Error("formula_frob3: non-integral count");
      return 2 * (pp + p - 2) / q + 7;
  }
  throw Error("formula_frob3: bad case");
}

std::int64_t product_lower_bound(std::int64_t dH, std::int64_t dK) {
  if (dH < 0 || dK < 0) throw Error("product_lower_bound: counts must be >= 0");
  return (dH + 2) * (dK + 2) - 2;
}

namespace {

// largest t with 2^t <= v
int floor_log2(std::int64_t v) {
  int t = -1;
  while (v > 0) {
    v >>= 1;
    ++t;
  }
  return t;
}

std::int64_t pow2(int e) { return std::int64_t(1) << e; }

}  // namespace

PGroupBounds pgroup_bounds(std::int64_t n) {
  if (n < 2) throw Error("pgroup_bounds: needs n >= 2");
  return PGroupBounds{n / 2, floor_log2(n)};
}

PGroupBounds nilpotent_bounds(std::int64_t n, int k) {
  if (k < 1) throw Error("nilpotent_bounds: needs k >= 1");
  std::int64_t num = n + 2 - pow2(k);
  if (num < 0) throw Error("nilpotent_bounds: bound is negative");
  std::int64_t cls = num / pow2(k);
  // dl <= log2(num / 2^k) + 1  <=>  2^(k + dl - 1) <= num
  int dl = 0;
  while (pow2(k + dl) <= num) ++dl;
  return PGroupBounds{cls, dl};
}

std::int64_t solvable_dl_bound(std::int64_t n) {
  if (n < 3) throw Error("solvable_dl_bound: needs n >= 3");
  // floor(3 log2(n+1)) via the largest t with 2^t <= (n+1)^3
  std::int64_t cube = (n + 1) * (n + 1) * (n + 1);
  std::int64_t log_term = floor_log2(cube) + 9;
  return std::min(n - 1, log_term);
}

bool dl_within_pgroup_bound(int dl, std::int64_t n) {
  // dl <= log2(n/2) + 1 = log2(n)
  return pow2(dl) <= n;
}

bool dl_within_nilpotent_bound(int dl, std::int64_t n, int k) {
  std::int64_t num = n + 2 - pow2(k);
  if (num <= 0) return false;
  if (dl <= 0) return true;
  return pow2(k + dl - 1) <= num;
}

bool dl_within_log_bound(int dl, std::int64_t n) {
  // dl <= 3 log2(n+1) + 9  <=>  2^(dl-9) <= (n+1)^3 when dl > 9
  if (dl <= 9) return true;
  std::int64_t cube = (n + 1) * (n + 1) * (n + 1);
  return pow2(dl - 9) <= cube;
}

std::string bucket_name(Bucket b) {
  switch (b) {
    case Bucket::D0Prime: return "D0-prime";
    case Bucket::D1CyclicP2: return "D1-cyclic-p2";
    case Bucket::D1FrobeniusPQ: return "D1-frobenius-pq";
    case Bucket::D2CyclicP3: return "D2-(1)";
    case Bucket::D2CyclicPQ: return "D2-(2)";
    case Bucket::D2FrobeniusCp2Cq: return "D2-(3)";
    case Bucket::D2A4: return "D2-(4)";
    case Bucket::D3CyclicP4: return "D3-(1)";
    case Bucket::D3Klein: return "D3-(2)";
    case Bucket::D3FrobeniusCp3Cq: return "D3-(3)";
    case Bucket::D3FrobeniusElemAbP2: return "D3-(4)";
    case Bucket::D3FrobeniusCpCq2: return "D3-(5)";
    case Bucket::D3FrobeniusCprCq: return "D3-(6)";
    case Bucket::D3FrobeniusElemAbP3: return "D3-(7)";
    case Bucket::D3CentralExtension: return "D3-(8)";
    case Bucket::D4A5: return "D4-A5";
    case Bucket::D4SL23: return "D4-SL23";
    case Bucket::NotCovered: return "not-covered";
  }
  return "?";
}

ClassificationVerdict classify_small(const GroupPtr& G, const SubgroupLattice& lat) {
  const std::int64_t n = G->order();
  auto verdict = [](Bucket b, int d) { return ClassificationVerdict{b, d}; };
  if (n == 1) return ClassificationVerdict{};

  auto primes = prime_divisors(n);
  const bool cyclic = is_cyclic_group(G);

  if (is_prime_number(n)) return verdict(Bucket::D0Prime, 0);
  if (cyclic && primes.size() == 1) {
    std::int64_t p = primes[0];
    if (n == p * p) return verdict(Bucket::D1CyclicP2, 1);
    if (n == p * p * p) return verdict(Bucket::D2CyclicP3, 2);
    if (n == p * p * p * p) return verdict(Bucket::D3CyclicP4, 3);
  }
  if (n == 4 && !cyclic) return verdict(Bucket::D3Klein, 3);
  if (cyclic && primes.size() == 2 && n == primes[0] * primes[1])
    return verdict(Bucket::D2CyclicPQ, 2);

  auto fd = frobenius_decomposition(G, lat);
  if (fd) {
    const std::int64_t kc = fd->kernel.order;
    const std::int64_t cc = fd->complement.order;
    const bool k_cyclic = is_cyclic_subgroup(fd->kernel);
    auto kprimes = prime_divisors(kc);
    if (is_prime_number(cc)) {
      const std::int64_t q = cc;
      if (is_prime_number(kc)) return verdict(Bucket::D1FrobeniusPQ, 1);
      if (kprimes.size() == 1) {
        const std::int64_t p = kprimes[0];
        if (k_cyclic && kc == p * p) return verdict(Bucket::D2FrobeniusCp2Cq, 2);
        if (k_cyclic && kc == p * p * p) return verdict(Bucket::D3FrobeniusCp3Cq, 3);
        if (!k_cyclic && kc == p * p && is_elementary_abelian(fd->kernel) && p == 2 * q - 1 &&
            q != 2)
          return verdict(Bucket::D3FrobeniusElemAbP2, 3);
        if (!k_cyclic && kc == p * p * p && is_elementary_abelian(fd->kernel) &&
            q == p * p + p + 1)
          return verdict(Bucket::D3FrobeniusElemAbP3, 3);
      }
      if (kprimes.size() == 2 && k_cyclic && kc == kprimes[0] * kprimes[1])
        return verdict(Bucket::D3FrobeniusCprCq, 3);
    }
    if (is_prime_number(kc) && is_cyclic_subgroup(fd->complement) && primes.size() == 2) {
      std::int64_t q = prime_divisors(cc).size() == 1 ? prime_divisors(cc)[0] : 0;
      if (q != 0 && cc == q * q) return verdict(Bucket::D3FrobeniusCpCq2, 3);
    }
    // A4: kernel the Klein group, complement of order 3
    if (kc == 4 && cc == 3 && is_elementary_abelian(fd->kernel))
      return verdict(Bucket::D2A4, 2);
  }

  bool simple = true;
  for (const auto& rec : lat.classes)
    if (rec.is_normal && rec.representative.order != 1 && rec.representative.order != n)
      simple = false;
  if (n == 60 && simple) return verdict(Bucket::D4A5, 4);

  const std::int64_t zorder = center(G).order;
  if (n == 24 && zorder == 2 && derived_length(G) == std::optional<int>(3))
    return verdict(Bucket::D4SL23, 4);

  // central-extension shape: |G| = p q^2, |Z| = q, normal Sylow p, cyclic Sylow q
  if (!G->is_abelian() && primes.size() == 2) {
    for (std::int64_t q : primes) {
      std::int64_t p = primes[0] == q ? primes[1] : primes[0];
      if (n == p * q * q && zorder == q) {
        Subgroup Q = sylow_subgroup(G, q, lat);
        bool p_normal = false;
        for (const auto& rec : lat.classes)
          if (rec.is_normal && rec.representative.order == p) p_normal = true;
        if (is_cyclic_subgroup(Q) && p_normal)
          return verdict(Bucket::D3CentralExtension, 3);
      }
    }
  }

  return ClassificationVerdict{};
}

ClassificationVerdict classify_small(const GroupPtr& G) {
  return classify_small(G, subgroup_lattice(G));
}

}  // namespace cgt
