#pragma once

#include <optional>
#include <vector>

#include "cgt/bitset.hpp"
#include "cgt/group.hpp"

namespace cgt {

/// A subgroup of a parent group, stored as a bitset over the parent's
/// element table plus a small generating set (element indices).
struct Subgroup {
  GroupPtr parent;
  DynBitset members;
  std::int64_t order = 0;
  std::vector<int> gens;

  bool contains(int element_index) const { return members.test(element_index); }
};

bool same_subgroup(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup full_subgroup(const GroupPtr& G);

/// Closure of the given element indices inside G.
Subgroup subgroup_from_indices(const GroupPtr& G, std::vector<int> gen_indices);
Subgroup subgroup_generated_by(const GroupPtr& G, const std::vector<Perm>& gens);
/// The elements must already form a subgroup; throws Error otherwise.
Subgroup subgroup_from_elements(const GroupPtr& G, const std::vector<Perm>& elems);
Subgroup subgroup_from_bits(const GroupPtr& G, DynBitset bits);

/// Greedy small generating set for a closed member bitset.
std::vector<int> minimal_gens(const Group& G, const DynBitset& members);

/// Standalone Group on the same points, enumerated from H's generators.
GroupPtr group_from_subgroup(const Subgroup& H);

/// Conjugate H by element index g: g^{-1} H g.
Subgroup conjugate_subgroup(const Subgroup& H, int g);

bool is_subgroup_of(const Subgroup& H, const Subgroup& K);
bool is_normal_subgroup(const GroupPtr& G, const Subgroup& H);

Subgroup normalizer(const GroupPtr& G, const Subgroup& H);
Subgroup centralizer(const GroupPtr& G, const Subgroup& H);
bool is_self_normalizing(const GroupPtr& G, const Subgroup& H);

/// Smallest subgroup containing the seed elements that is normalized by the
/// subgroup generated by ambient_gens (seeds must lie inside that subgroup).
DynBitset normal_closure_bits(const Group& G, const std::vector<int>& ambient_gens,
                              const std::vector<int>& seeds);

/// The distinct subgroups generated by single elements.
std::vector<Subgroup> cyclic_subgroups(const GroupPtr& G);

/// One conjugacy class of subgroups.
struct SubgroupClassRecord {
  Subgroup representative;  // least member bitset in the orbit
  std::int64_t class_size = 0;
  std::int64_t normalizer_order = 0;
  bool self_normalizing = false;
  bool is_normal = false;
};

/// Every subgroup of G together with the partition into conjugacy classes.
struct SubgroupLattice {
  GroupPtr group;
  std::vector<SubgroupClassRecord> classes;  // sorted by (order, rep bitset)
  std::vector<DynBitset> all;                // sorted by (order, bitset)
  std::int64_t total_subgroups = 0;

  bool contains(const DynBitset& bits) const;
};

SubgroupLattice subgroup_lattice(const GroupPtr& G, const Caps& caps = {});
std::vector<Subgroup> all_subgroups(const GroupPtr& G, const Caps& caps = {});
std::vector<SubgroupClassRecord> conjugacy_classes_of_subgroups(const GroupPtr& G,
                                                                const Caps& caps = {});

/// Right-coset decomposition; coset ids are sorted by smallest contained
/// element index, so the identity coset is id 0.
struct CosetTable {
  int count = 0;
  std::vector<int> coset_of;           // element index -> coset id
  std::vector<int> rep;                // coset id -> least element index
  std::vector<DynBitset> bits;         // coset id -> members
  std::vector<std::vector<int>> cmul;  // [coset][generator] -> coset
};
CosetTable right_cosets(const Group& G, const DynBitset& H, const std::vector<int>& hgens);

struct QuotientPresentation {
  GroupPtr parent;
  Subgroup kernel;
  GroupPtr quotient;            // acts on right cosets of the kernel
  std::vector<int> projection;  // parent element index -> quotient element index
};

/// Quotient by a normal subgroup. Throws Error when N is not a normal
/// subgroup of G.
QuotientPresentation quotient(const GroupPtr& G, const Subgroup& N);
/// Same construction without the projection table.
GroupPtr quotient_group(const GroupPtr& G, const Subgroup& N);

}  // namespace cgt
