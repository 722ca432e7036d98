#include "cgt/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

GroupPtr Group::enumerate(int degree, std::vector<Perm> generators, const Caps& caps) {
  if (degree < 1 || degree > 65535) throw Error("degree out of range 1..65535");
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");

  std::unordered_set<Perm, PermHasher> seen;
  std::vector<Perm> list;
  list.push_back(Perm::identity(degree));
  seen.insert(list[0]);
  for (const auto& g : generators) {
    if (seen.insert(g).second) list.push_back(g);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& g : generators) {
      Perm p = compose(list[i], g);
      if (seen.insert(p).second) {
        if (static_cast<std::int64_t>(list.size()) + 1 > caps.max_order)
          throw CapExceeded("group order cap exceeded (" + std::to_string(caps.max_order) + ")");
        list.push_back(std::move(p));
      }
    }
  }
  std::sort(list.begin(), list.end());

  auto G = std::shared_ptr<Group>(new Group());
  G->degree_ = degree;
  G->gens_ = std::move(generators);
  G->elems_ = std::move(list);

  const int n = static_cast<int>(G->elems_.size());
  G->gen_idx_.resize(G->gens_.size());
  for (std::size_t j = 0; j < G->gens_.size(); ++j)
    G->gen_idx_[j] = G->index_of(G->gens_[j]);

  G->inv_.resize(n);
  for (int i = 0; i < n; ++i) G->inv_[i] = G->index_of(G->elems_[i].inverse());

  G->mul_gen_.resize(G->gens_.size());
  G->conj_.resize(G->gens_.size());
  for (std::size_t j = 0; j < G->gens_.size(); ++j) {
    G->mul_gen_[j].resize(n);
    G->conj_[j].resize(n);
    const Perm& g = G->gens_[j];
    const Perm gi = g.inverse();
    for (int x = 0; x < n; ++x) {
      G->mul_gen_[j][x] = G->index_of(compose(G->elems_[x], g));
      G->conj_[j][x] = G->index_of(compose(compose(gi, G->elems_[x]), g));
    }
  }
  return G;
}

int Group::index_of_images(const std::uint16_t* img) const {
  int lo = 0, hi = static_cast<int>(elems_.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    const std::uint16_t* m = elems_[mid].images().data();
    int cmp = 0;
    for (int i = 0; i < degree_; ++i) {
      if (m[i] != img[i]) {
        cmp = m[i] < img[i] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return mid;
  }
  return -1;
}

int Group::index_of(const Perm& p) const {
  if (p.degree() != degree_) return -1;
  return index_of_images(p.images().data());
}

int Group::mul(int a, int b) const {
  static thread_local std::vector<std::uint16_t> buf;
  buf.resize(degree_);
  const std::uint16_t* A = elems_[a].images().data();
  const std::uint16_t* B = elems_[b].images().data();
  for (int i = 0; i < degree_; ++i) buf[i] = B[A[i]];
  int r = index_of_images(buf.data());
  // closed element table: product of members is a member
  return r;
}

bool Group::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (compose(gens_[i], gens_[j]) != compose(gens_[j], gens_[i])) return false;
  return true;
}

std::int64_t element_order(const Group& G, const Perm& g) {
  if (!G.contains(g)) throw Error("element_order: permutation is not a group member");
  return perm_order(g);
}

}  // namespace cgt
