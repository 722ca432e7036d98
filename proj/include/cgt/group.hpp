#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

/// Resource limits for enumeration-heavy operations.
struct Caps {
  std::int64_t max_order = 1'000'000;
  std::int64_t max_subgroups = 100'000;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite permutation group with a fully enumerated element table.
///
/// Immutable after construction. The element table is sorted
/// lexicographically on image sequences, so element indices are stable,
/// reproducible, and usable as bitset positions; index 0 is the identity.
class Group {
 public:
  /// Breadth-first closure of the generators. Throws CapExceeded when the
  /// order exceeds caps.max_order, Error on degree mismatches.
  static GroupPtr enumerate(int degree, std::vector<Perm> generators,
                            const Caps& caps = {});

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(int i) const { return elems_[i]; }

  /// Index into elements(), or -1 when p is not a member.
  int index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  int num_gens() const { return static_cast<int>(gens_.size()); }
  int gen_element(int j) const { return gen_idx_[j]; }

  /// Index of element(a) followed by element(b).
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  /// Index of element(x) right-multiplied by the j-th generator.
  int mul_gen(int x, int j) const { return mul_gen_[j][x]; }
  /// Index of gj^{-1} * element(x) * gj.
  int conj_by_gen(int x, int j) const { return conj_[j][x]; }

  bool is_abelian() const;
  bool operator==(const Group& o) const {
    return degree_ == o.degree_ && elems_ == o.elems_;
  }

 private:
  Group() = default;

  int index_of_images(const std::uint16_t* img) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::vector<int> gen_idx_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> mul_gen_;
  std::vector<std::vector<int>> conj_;
};

/// Order of g as an element of G. Throws Error when g is not in G.
std::int64_t element_order(const Group& G, const Perm& g);

}  // namespace cgt
