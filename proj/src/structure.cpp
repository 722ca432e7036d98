#include "cgt/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

namespace {

int commutator(const Group& G, int a, int b) {
  return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
}

Subgroup bits_to_subgroup(const GroupPtr& G, DynBitset bits) {
  return subgroup_from_bits(G, std::move(bits));
}

}  // namespace

Subgroup derived_subgroup_of(const Subgroup& H) {
  const GroupPtr& G = H.parent;
  std::vector<int> seeds;
  for (std::size_t i = 0; i < H.gens.size(); ++i)
    for (std::size_t j = i + 1; j < H.gens.size(); ++j)
      seeds.push_back(commutator(*G, H.gens[i], H.gens[j]));
  DynBitset bits = normal_closure_bits(*G, H.gens, seeds);
  return bits_to_subgroup(G, std::move(bits));
}

Subgroup derived_subgroup(const GroupPtr& G) { return derived_subgroup_of(full_subgroup(G)); }

std::vector<Subgroup> derived_series(const GroupPtr& G) {
  std::vector<Subgroup> series;
  series.push_back(full_subgroup(G));
  while (true) {
    Subgroup next = derived_subgroup_of(series.back());
    if (next.members == series.back().members) break;
    series.push_back(std::move(next));
    if (series.back().order == 1) break;
  }
  return series;
}

std::optional<int> derived_length(const GroupPtr& G) {
  auto series = derived_series(G);
  if (series.back().order != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_solvable(const GroupPtr& G) { return derived_length(G).has_value(); }

std::vector<Subgroup> lower_central_series(const GroupPtr& G) {
  std::vector<Subgroup> series;
  series.push_back(full_subgroup(G));
  std::vector<int> ggens = series.back().gens;
  while (true) {
    std::vector<int> seeds;
    for (int x : series.back().gens)
      for (int g : ggens) seeds.push_back(commutator(*G, x, g));
    DynBitset bits = normal_closure_bits(*G, ggens, seeds);
    if (bits == series.back().members) break;
    series.push_back(bits_to_subgroup(G, std::move(bits)));
    if (series.back().order == 1) break;
  }
  return series;
}

std::optional<int> nilpotency_class(const GroupPtr& G) {
  auto series = lower_central_series(G);
  if (series.back().order != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_nilpotent(const GroupPtr& G) { return nilpotency_class(G).has_value(); }

Subgroup center(const GroupPtr& G) { return centralizer(G, full_subgroup(G)); }

bool is_cyclic_subgroup(const Subgroup& H) {
  const Group& G = *H.parent;
  bool found = false;
  H.members.for_each([&](int x) {
    if (!found && perm_order(G.element(x)) == H.order) found = true;
  });
  return found;
}

bool is_cyclic_group(const GroupPtr& G) {
  for (std::int64_t i = 0; i < G->order(); ++i)
    if (perm_order(G->element(static_cast<int>(i))) == G->order()) return true;
  return G->order() == 1;
}

bool is_elementary_abelian(const Subgroup& H) {
  if (H.order == 1) return false;
  const Group& G = *H.parent;
  auto primes = prime_divisors(H.order);
  if (primes.size() != 1) return false;
  std::int64_t p = primes[0];
  for (std::size_t i = 0; i < H.gens.size(); ++i)
    for (std::size_t j = i + 1; j < H.gens.size(); ++j)
      if (G.mul(H.gens[i], H.gens[j]) != G.mul(H.gens[j], H.gens[i])) return false;
  bool ok = true;
  H.members.for_each([&](int x) {
    if (ok && x != 0 && perm_order(G.element(x)) != p) ok = false;
  });
  return ok;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  while (n % p == 0) {
    r *= p;
    n /= p;
  }
  return r;
}

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Subgroup sylow_subgroup(const GroupPtr& G, std::int64_t p, const SubgroupLattice& lat) {
  std::int64_t pp = p_part(G->order(), p);
  for (const auto& rec : lat.classes)
    if (rec.representative.order == pp) return rec.representative;
  throw Error("sylow_subgroup: lattice has no subgroup of the Sylow order");
}

Subgroup sylow_subgroup(const GroupPtr& G, std::int64_t p) {
  return sylow_subgroup(G, p, subgroup_lattice(G));
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(const GroupPtr& G,
                                                              const SubgroupLattice& lat) {
  const int n = static_cast<int>(G->order());
  for (auto it = lat.classes.rbegin(); it != lat.classes.rend(); ++it) {
    const auto& rec = *it;
    const std::int64_t h = rec.representative.order;
    if (!rec.self_normalizing || h == G->order() || h == 1) continue;
    // expand the conjugation orbit and accumulate displaced elements
    DynBitset displaced(n);
    std::vector<DynBitset> orbit{rec.representative.members};
    std::unordered_set<DynBitset, DynBitsetHasher> seen{rec.representative.members};
    displaced |= rec.representative.members;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int j = 0; j < G->num_gens(); ++j) {
        DynBitset b(n);
        orbit[i].for_each([&](int x) { b.set(G->conj_by_gen(x, j)); });
        if (seen.insert(b).second) {
          displaced |= b;
          orbit.push_back(std::move(b));
        }
      }
    }
    displaced.reset(0);
    if (displaced.count() != rec.class_size * (h - 1)) continue;
    DynBitset kernel = displaced.complemented();
    if (kernel.count() != G->order() / h)
      throw Error("frobenius_decomposition: displaced-set complement has impossible size");
    if (!lat.contains(kernel))
      throw Error("frobenius_decomposition: kernel set is not a subgroup");
    return FrobeniusDecomposition{subgroup_from_bits(G, std::move(kernel)), rec.representative};
  }
  return std::nullopt;
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(const GroupPtr& G) {
  return frobenius_decomposition(G, subgroup_lattice(G));
}

int composition_length(const GroupPtr& G, const SubgroupLattice& lat) {
  if (G->order() == 1) return 0;
  const SubgroupClassRecord* best = nullptr;
  for (const auto& rec : lat.classes) {
    if (!rec.is_normal) continue;
    if (rec.representative.order == G->order() || rec.representative.order == 1) continue;
    if (!best || rec.representative.order > best->representative.order) best = &rec;
  }
  if (!best) return 1;  // simple
  GroupPtr M = group_from_subgroup(best->representative);
  return 1 + composition_length(M, subgroup_lattice(M));
}

int composition_length(const GroupPtr& G) { return composition_length(G, subgroup_lattice(G)); }

bool has_normal_p_complement(const GroupPtr& G, std::int64_t p, const SubgroupLattice& lat) {
  std::int64_t target = G->order() / p_part(G->order(), p);
  for (const auto& rec : lat.classes)
    if (rec.is_normal && rec.representative.order == target) return true;
  return false;
}

bool has_normal_p_complement(const GroupPtr& G, std::int64_t p) {
  return has_normal_p_complement(G, p, subgroup_lattice(G));
}

bool is_z_group(const GroupPtr& G, const SubgroupLattice& lat) {
  for (std::int64_t p : prime_divisors(G->order()))
    if (!is_cyclic_subgroup(sylow_subgroup(G, p, lat))) return false;
  return true;
}

bool is_z_group(const GroupPtr& G) { return is_z_group(G, subgroup_lattice(G)); }

bool is_subnormal(const GroupPtr& G, const Subgroup& H) {
  if (H.parent != G) throw Error("is_subnormal: subgroup belongs to a different group");
  if (H.order == 1) return true;
  Subgroup cur = full_subgroup(G);
  while (true) {
    if (cur.members == H.members) return true;
    DynBitset next = normal_closure_bits(*G, cur.gens, H.gens);
    if (next == cur.members) return false;
    cur = subgroup_from_bits(G, std::move(next));
  }
}

StructureReport structure_report(const GroupPtr& G, const SubgroupLattice& lat) {
  StructureReport r;
  r.order = G->order();
  r.abelian = G->is_abelian();
  auto ds = derived_series(G);
  for (const auto& s : ds) r.derived_series_orders.push_back(s.order);
  if (ds.back().order == 1) {
    r.solvable = true;
    r.derived_length = static_cast<int>(ds.size()) - 1;
  }
  auto lcs = lower_central_series(G);
  for (const auto& s : lcs) r.lower_central_series_orders.push_back(s.order);
  if (lcs.back().order == 1) {
    r.nilpotent = true;
    r.nilpotency_class = static_cast<int>(lcs.size()) - 1;
  }
  r.center_order = center(G).order;
  r.composition_length = composition_length(G, lat);
  r.prime_divisors = prime_divisors(G->order());
  r.z_group = is_z_group(G, lat);
  return r;
}

}  // namespace cgt
