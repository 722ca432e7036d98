#pragma once

// Independent brute-force reference implementations used to pin expected
// values. Everything here works on plain element sets and stays away from
// the library's index tables and lattice machinery.

#include <set>
#include <vector>

#include "cgt/perm.hpp"

namespace oracle {

using PermSet = std::set<cgt::Perm>;

/// Fixpoint of repeated set multiplication (not the library's BFS).
PermSet closure(int degree, const std::vector<cgt::Perm>& gens);

/// Every subgroup: closures of all element pairs, then pairwise joins to a
/// fixpoint.
std::vector<PermSet> all_subgroups(const PermSet& G);

std::vector<std::vector<PermSet>> conjugacy_classes(const PermSet& G,
                                                    const std::vector<PermSet>& subs);

PermSet normalizer(const PermSet& G, const PermSet& H);
PermSet centralizer(const PermSet& G, const PermSet& H);

/// Closure of all commutators over all element pairs.
PermSet derived(const PermSet& G);

/// Conjugacy classes of nontrivial subgroups with N_G(H) != H.
long census(const PermSet& G);

long subgroup_count(const PermSet& G);
long class_count(const PermSet& G);

}  // namespace oracle
