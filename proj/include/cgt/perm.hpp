#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

/// Permutation of the points {0, ..., degree-1}. Text I/O is 1-based;
/// composition is left-to-right throughout: (a then b)[i] = b[a[i]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);  // must be a bijection
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  // lexicographic on image sequences; identity is least among perms of a degree
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  /// Disjoint-cycle string, e.g. "(1 2 3)(4 5)"; identity prints as "()".
  std::string str() const;

  /// Accepts cycle notation "(1 2 3)(4 5)", "()" or an image list "2 3 1 5 4".
  static Perm parse(const std::string& text, int degree);

 private:
  std::vector<std::uint16_t> img_;
};

/// a first, then b. Degrees must match.
Perm compose(const Perm& a, const Perm& b);

/// Smallest k >= 1 with p^k = identity (lcm of cycle lengths).
std::int64_t perm_order(const Perm& p);

std::size_t perm_hash(const Perm& p);

struct PermHasher {
  std::size_t operator()(const Perm& p) const { return perm_hash(p); }
};

}  // namespace cgt
