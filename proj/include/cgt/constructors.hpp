#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

GroupPtr cyclic(int n);
GroupPtr dihedral(int n);  // order 2n on n points, n >= 3
GroupPtr dicyclic(int n);  // order 4n, regular action on 4n points
GroupPtr sym(int n);
GroupPtr alt(int n);
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);

/// Module structure of the complement action on an elementary abelian kernel.
enum class ModuleKind {
  Irreducible,        // companion matrix of an irreducible factor of x^q - 1
  HomogeneousScalar,  // scalar matrix, all components isomorphic
  SplitDistinct,      // diagonal with pairwise distinct eigenvalues
  SplitRepeated,      // diagonal with one repeated eigenvalue (k = 2 scalar)
  MixedDims,          // k = 3: one 1-dim component plus a 2-dim homogeneous one
};

std::string module_kind_name(ModuleKind k);
std::optional<ModuleKind> parse_module_kind(const std::string& s);

/// Smallest r > 1 with multiplicative order exactly k modulo m, if any.
std::optional<std::int64_t> smallest_of_order(std::int64_t m, std::int64_t k);

/// k x k matrix over GF(p) of multiplicative order q with the requested
/// decomposition and no eigenvalue 1. Throws Error when unrealizable.
std::vector<std::vector<int>> matrix_of_order(int p, int k, int q, ModuleKind kind);

/// Cheap realizability test matching matrix_of_order.
bool module_realizable(int p, int k, int q, ModuleKind kind);

/// C_{p^n} . C_{q^m} Frobenius group as the affine action x -> r^j x + t
/// on Z/p^n. Requires q^m | p - 1.
GroupPtr frobenius_metacyclic(int p, int n, int q, int m);

/// (C_p)^k . C_q Frobenius group acting on the p^k vectors of GF(p)^k.
GroupPtr frobenius_elem_abelian(int p, int k, int q, ModuleKind kind);

/// C_p . C_{q^2} with center of order q (requires q | p - 1); faithful on
/// p + q^2 points: the affine orbit plus a regular orbit of the cyclic
/// quotient by the kernel.
GroupPtr central_extension_example(int p, int q);

/// Named constructions: Q8, A4, S4, A5, A6, SL2(3), PSL(2,5), PSL(2,7),
/// PSL(2,8). Throws Error for unknown names.
GroupPtr preset(const std::string& name);

/// Resolves group names: presets, C<n>, D<n>, Dic<n>, S<n>, A<n>, V4, and
/// 'x'-joined direct products such as "C4xC2".
GroupPtr resolve_group_name(const std::string& name);

}  // namespace cgt
