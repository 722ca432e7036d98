#pragma once

#include <optional>
#include <string>

#include "cgt/structure.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

/// The census of conjugacy classes of nontrivial subgroups that are not
/// self-normalizing. The whole group never appears (it normalizes itself).
struct CensusReport {
  std::int64_t group_order = 0;
  std::int64_t d_value = 0;
  std::vector<SubgroupClassRecord> class_records;  // the counted classes
  std::int64_t total_subgroup_classes = 0;
};

CensusReport census(const GroupPtr& G, const SubgroupLattice& lat);
CensusReport census(const GroupPtr& G, const Caps& caps = {});

/// Number of G-classes of nontrivial non-self-normalizing subgroups properly
/// contained in N.
std::int64_t relative_census(const GroupPtr& G, const Subgroup& N, const SubgroupLattice& lat);
std::int64_t relative_census(const GroupPtr& G, const Subgroup& N);

// ---- closed-form counts for the Frobenius families ----

/// Cyclic kernel of order p^n, cyclic complement of order q^m.
std::int64_t formula_frob1(int n, int m);

enum class Frob2Case { Irreducible, Homogeneous, SplitDistinct };
enum class Frob3Case { Irreducible, Homogeneous, TwoComponents, ThreeComponents };

std::string frob2_case_name(Frob2Case c);
std::string frob3_case_name(Frob3Case c);

/// Elementary abelian kernel of order p^2, complement of prime order q.
/// Throws Error when the case's divisibility condition fails or the count
/// is not an integer.
std::int64_t formula_frob2(int p, int q, Frob2Case c);
/// Elementary abelian kernel of order p^3.
std::int64_t formula_frob3(int p, int q, Frob3Case c);

std::int64_t product_lower_bound(std::int64_t dH, std::int64_t dK);

struct PGroupBounds {
  std::int64_t max_class = 0;
  std::int64_t max_derived_length = 0;
};

/// For a noncyclic p-group with census n > 1: class <= n/2 and
/// dl <= log2(n/2) + 1, evaluated with integer arithmetic.
PGroupBounds pgroup_bounds(std::int64_t n);
/// Noncyclic nilpotent with k distinct prime divisors: class bound
/// (n + 2 - 2^k) / 2^k, derived length via the same base-2 comparison.
PGroupBounds nilpotent_bounds(std::int64_t n, int k);
/// min(n - 1, floor(3 log2(n+1) + 9)) for solvable groups, n >= 3.
std::int64_t solvable_dl_bound(std::int64_t n);

/// Exact integer comparisons for the logarithmic bounds.
bool dl_within_pgroup_bound(int dl, std::int64_t n);           // 2^dl <= n
bool dl_within_nilpotent_bound(int dl, std::int64_t n, int k); // 2^(k+dl-1) <= n+2-2^k
bool dl_within_log_bound(int dl, std::int64_t n);              // dl <= 3 log2(n+1) + 9

// ---- classification of small censuses ----

enum class Bucket {
  D0Prime,
  D1CyclicP2,
  D1FrobeniusPQ,
  D2CyclicP3,
  D2CyclicPQ,
  D2FrobeniusCp2Cq,
  D2A4,
  D3CyclicP4,
  D3Klein,
  D3FrobeniusCp3Cq,
  D3FrobeniusElemAbP2,
  D3FrobeniusCpCq2,
  D3FrobeniusCprCq,
  D3FrobeniusElemAbP3,
  D3CentralExtension,
  D4A5,
  D4SL23,
  NotCovered,
};

std::string bucket_name(Bucket b);

struct ClassificationVerdict {
  Bucket bucket = Bucket::NotCovered;
  std::optional<int> predicted_d;
};

/// First matching bucket in a fixed order, most specific first; the trivial
/// group is not covered (the case lists concern nontrivial groups).
ClassificationVerdict classify_small(const GroupPtr& G, const SubgroupLattice& lat);
ClassificationVerdict classify_small(const GroupPtr& G);

}  // namespace cgt
