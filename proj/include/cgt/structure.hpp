#pragma once

#include <optional>
#include <vector>

#include "cgt/subgroup.hpp"

namespace cgt {

/// Commutator subgroup of H (normal closure in H of generator commutators).
Subgroup derived_subgroup_of(const Subgroup& H);
Subgroup derived_subgroup(const GroupPtr& G);

/// G = S0 >= S1 >= ... until the series stabilizes (last entry repeated
/// entries are dropped; a perfect tail simply ends the list).
std::vector<Subgroup> derived_series(const GroupPtr& G);
std::optional<int> derived_length(const GroupPtr& G);
bool is_solvable(const GroupPtr& G);

std::vector<Subgroup> lower_central_series(const GroupPtr& G);
std::optional<int> nilpotency_class(const GroupPtr& G);
bool is_nilpotent(const GroupPtr& G);

Subgroup center(const GroupPtr& G);

bool is_cyclic_group(const GroupPtr& G);
bool is_cyclic_subgroup(const Subgroup& H);
bool is_elementary_abelian(const Subgroup& H);

std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::int64_t p_part(std::int64_t n, std::int64_t p);
bool is_prime_number(std::int64_t n);

/// Sylow p-subgroup (trivial when p does not divide |G|); deterministic
/// choice: the canonical representative of the unique Sylow class.
Subgroup sylow_subgroup(const GroupPtr& G, std::int64_t p, const SubgroupLattice& lat);
Subgroup sylow_subgroup(const GroupPtr& G, std::int64_t p);

struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
};

/// Scans subgroup classes in decreasing order for a complement H with
/// H ∩ H^g = 1 for all g outside H; the kernel is the complement of the
/// displaced elements. Returns nullopt when no such subgroup exists.
std::optional<FrobeniusDecomposition> frobenius_decomposition(const GroupPtr& G,
                                                              const SubgroupLattice& lat);
std::optional<FrobeniusDecomposition> frobenius_decomposition(const GroupPtr& G);

/// Length of a composition series (choice-independent).
int composition_length(const GroupPtr& G, const SubgroupLattice& lat);
int composition_length(const GroupPtr& G);

bool has_normal_p_complement(const GroupPtr& G, std::int64_t p, const SubgroupLattice& lat);
bool has_normal_p_complement(const GroupPtr& G, std::int64_t p);

bool is_z_group(const GroupPtr& G, const SubgroupLattice& lat);
bool is_z_group(const GroupPtr& G);

/// Chain H = K_t <| ... <| K_0 = G via iterated normal closure descent.
bool is_subnormal(const GroupPtr& G, const Subgroup& H);

struct StructureReport {
  std::int64_t order = 0;
  bool abelian = false;
  bool nilpotent = false;
  std::optional<int> nilpotency_class;
  bool solvable = false;
  std::optional<int> derived_length;
  std::int64_t center_order = 0;
  std::vector<std::int64_t> derived_series_orders;
  std::vector<std::int64_t> lower_central_series_orders;
  int composition_length = 0;
  std::vector<std::int64_t> prime_divisors;
  bool z_group = false;
};

StructureReport structure_report(const GroupPtr& G, const SubgroupLattice& lat);

}  // namespace cgt
