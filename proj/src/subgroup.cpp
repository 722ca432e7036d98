#include "cgt/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// <gens> by breadth-first right multiplication from the identity.
DynBitset closure_bits(const Group& G, const std::vector<int>& gens) {
  const int n = static_cast<int>(G.order());
  DynBitset S(n);
  S.set(0);
  std::vector<int> list{0};
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (int g : gens) {
      int y = G.mul(list[i], g);
      if (!S.test(y)) {
        S.set(y);
        list.push_back(y);
      }
    }
  }
  return S;
}

DynBitset conjugate_bits_by_gen(const Group& G, const DynBitset& bits, int j) {
  DynBitset r(bits.size());
  bits.for_each([&](int x) { r.set(G.conj_by_gen(x, j)); });
  return r;
}

bool all_order_less(const DynBitset& a, const DynBitset& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.lex_less(b);
}

}  // namespace

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.members == b.members;
}

Subgroup trivial_subgroup(const GroupPtr& G) {
  DynBitset b(static_cast<int>(G->order()));
  b.set(0);
  return Subgroup{G, std::move(b), 1, {}};
}

Subgroup full_subgroup(const GroupPtr& G) {
  DynBitset b = DynBitset(static_cast<int>(G->order())).complemented();
  std::vector<int> gens;
  for (int j = 0; j < G->num_gens(); ++j) gens.push_back(G->gen_element(j));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!gens.empty() && gens.front() == 0) gens.erase(gens.begin());
  return Subgroup{G, std::move(b), G->order(), std::move(gens)};
}

Subgroup subgroup_from_indices(const GroupPtr& G, std::vector<int> gen_indices) {
  std::sort(gen_indices.begin(), gen_indices.end());
  gen_indices.erase(std::unique(gen_indices.begin(), gen_indices.end()), gen_indices.end());
  if (!gen_indices.empty() && gen_indices.front() == 0) gen_indices.erase(gen_indices.begin());
  DynBitset b = closure_bits(*G, gen_indices);
  std::int64_t ord = b.count();
  return Subgroup{G, std::move(b), ord, std::move(gen_indices)};
}

Subgroup subgroup_generated_by(const GroupPtr& G, const std::vector<Perm>& gens) {
  std::vector<int> idx;
  for (const auto& p : gens) {
    int i = G->index_of(p);
    if (i < 0) throw Error("subgroup generator is not a member of the parent group");
    idx.push_back(i);
  }
  return subgroup_from_indices(G, std::move(idx));
}

Subgroup subgroup_from_bits(const GroupPtr& G, DynBitset bits) {
  auto gens = minimal_gens(*G, bits);
  std::int64_t ord = bits.count();
  return Subgroup{G, std::move(bits), ord, std::move(gens)};
}

Subgroup subgroup_from_elements(const GroupPtr& G, const std::vector<Perm>& elems) {
  DynBitset b(static_cast<int>(G->order()));
  for (const auto& p : elems) {
    int i = G->index_of(p);
    if (i < 0) throw Error("subgroup element is not a member of the parent group");
    b.set(i);
  }
  if (!b.test(0)) throw Error("subgroup must contain the identity");
  auto gens = minimal_gens(*G, b);
  if (closure_bits(*G, gens) != b) throw Error("element set is not closed");
  std::int64_t ord = b.count();
  return Subgroup{G, std::move(b), ord, std::move(gens)};
}

std::vector<int> minimal_gens(const Group& G, const DynBitset& members) {
  std::vector<int> gens;
  DynBitset cur(members.size());
  cur.set(0);
  while (cur != members) {
    int pick = -1;
    for (int x = members.find_first(); x >= 0; x = members.find_next(x)) {
      if (!cur.test(x)) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw Error("minimal_gens: member set is not closed");
    gens.push_back(pick);
    cur = closure_bits(G, gens);
    if (!cur.is_subset_of(members)) throw Error("minimal_gens: member set is not closed");
  }
  return gens;
}

GroupPtr group_from_subgroup(const Subgroup& H) {
  std::vector<Perm> gens;
  for (int g : H.gens) gens.push_back(H.parent->element(g));
  Caps caps;
  caps.max_order = H.parent->order();
  GroupPtr S = Group::enumerate(H.parent->degree(), std::move(gens), caps);
  if (S->order() != H.order) throw Error("group_from_subgroup: generating set mismatch");
  return S;
}

Subgroup conjugate_subgroup(const Subgroup& H, int g) {
  const Group& G = *H.parent;
  int gi = G.inv(g);
  DynBitset b(H.members.size());
  H.members.for_each([&](int x) { b.set(G.mul(G.mul(gi, x), g)); });
  std::vector<int> gens;
  for (int x : H.gens) gens.push_back(G.mul(G.mul(gi, x), g));
  return Subgroup{H.parent, std::move(b), H.order, std::move(gens)};
}

bool is_subgroup_of(const Subgroup& H, const Subgroup& K) {
  return H.parent == K.parent && H.members.is_subset_of(K.members);
}

bool is_normal_subgroup(const GroupPtr& G, const Subgroup& H) {
  if (H.parent != G) throw Error("is_normal_subgroup: subgroup belongs to a different group");
  for (int j = 0; j < G->num_gens(); ++j)
    if (conjugate_bits_by_gen(*G, H.members, j) != H.members) return false;
  return true;
}

CosetTable right_cosets(const Group& G, const DynBitset& H, const std::vector<int>& hgens) {
  const int n = static_cast<int>(G.order());
  const int ng = G.num_gens();

  // A right coset Hy is the orbit of y under left multiplication by H, so
  // the cosets are the components of the left-multiplication graphs of a
  // generating set of H. Prefer a single generator when H is cyclic.
  std::vector<int> gens = hgens;
  const std::int64_t horder = H.count();
  if (horder > 1) {
    for (int x = H.find_first(); x >= 0; x = H.find_next(x)) {
      if (x != 0 && perm_order(G.element(x)) == horder) {
        gens = {x};
        break;
      }
    }
    if (gens.empty()) gens = minimal_gens(G, H);
  }
  std::vector<std::vector<int>> lmul(gens.size(), std::vector<int>(n));
  for (std::size_t t = 0; t < gens.size(); ++t)
    for (int x = 0; x < n; ++x) lmul[t][x] = G.mul(gens[t], x);

  CosetTable T;
  T.coset_of.assign(n, -1);
  std::vector<int> stack;
  int m = 0;
  for (int x = 0; x < n; ++x) {
    if (T.coset_of[x] >= 0) continue;
    int c = m++;  // x is the least element of its coset: earlier elements
                  // already carry earlier ids and components are disjoint
    T.rep.push_back(x);
    T.coset_of[x] = c;
    stack.push_back(x);
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (const auto& L : lmul) {
        int z = L[y];
        if (T.coset_of[z] < 0) {
          T.coset_of[z] = c;
          stack.push_back(z);
        }
      }
    }
  }

  T.count = m;
  T.bits.assign(m, DynBitset(n));
  for (int e = 0; e < n; ++e) T.bits[T.coset_of[e]].set(e);
  T.cmul.assign(m, std::vector<int>(ng, -1));
  for (int c = 0; c < m; ++c)
    for (int j = 0; j < ng; ++j) T.cmul[c][j] = T.coset_of[G.mul_gen(T.rep[c], j)];
  return T;
}

Subgroup normalizer(const GroupPtr& G, const Subgroup& H) {
  if (H.parent != G) throw Error("normalizer: subgroup belongs to a different group");
  const int n = static_cast<int>(G->order());
  if (H.order == n) return full_subgroup(G);
  CosetTable T = right_cosets(*G, H.members, H.gens);
  DynBitset N = H.members;
  for (int c = 1; c < T.count; ++c) {
    int r = T.rep[c];
    int ri = G->inv(r);
    bool ok = true;
    for (int h : H.gens) {
      if (!H.members.test(G->mul(G->mul(ri, h), r))) {
        ok = false;
        break;
      }
    }
    if (ok) N |= T.bits[c];
  }
  return subgroup_from_bits(G, std::move(N));
}

Subgroup centralizer(const GroupPtr& G, const Subgroup& H) {
  if (H.parent != G) throw Error("centralizer: subgroup belongs to a different group");
  const int n = static_cast<int>(G->order());
  DynBitset C(n);
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int h : H.gens) {
      if (G->mul(x, h) != G->mul(h, x)) {
        ok = false;
        break;
      }
    }
    if (ok) C.set(x);
  }
  return subgroup_from_bits(G, std::move(C));
}

bool is_self_normalizing(const GroupPtr& G, const Subgroup& H) {
  return normalizer(G, H).order == H.order;
}

DynBitset normal_closure_bits(const Group& G, const std::vector<int>& ambient_gens,
                              const std::vector<int>& seeds) {
  const int n = static_cast<int>(G.order());
  DynBitset S(n);
  S.set(0);
  std::vector<int> list{0};
  std::vector<int> gens;
  std::deque<int> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    if (S.test(s)) continue;
    gens.push_back(s);
    // re-close with the enlarged generating set
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (int g : gens) {
        int y = G.mul(list[i], g);
        if (!S.test(y)) {
          S.set(y);
          list.push_back(y);
        }
      }
    }
    for (int a : ambient_gens) {
      int ai = G.inv(a);
      work.push_back(G.mul(G.mul(ai, s), a));
    }
  }
  return S;
}

std::vector<Subgroup> cyclic_subgroups(const GroupPtr& G) {
  const int n = static_cast<int>(G->order());
  std::unordered_set<DynBitset, DynBitsetHasher> seen;
  std::vector<Subgroup> out;
  out.push_back(trivial_subgroup(G));
  seen.insert(out.back().members);
  for (int x = 1; x < n; ++x) {
    DynBitset b(n);
    b.set(0);
    for (int y = x; y != 0; y = G->mul(y, x)) b.set(y);
    if (seen.insert(b).second) {
      std::int64_t ord = b.count();
      out.push_back(Subgroup{G, std::move(b), ord, {x}});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members.lex_less(b.members);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Lattice enumeration.
//
// Solvable subgroups are found by cyclic extension: every solvable K has a
// normal subgroup of prime index, so climbing from the trivial subgroup
// through prime-index normal extensions inside normalizers reaches all of
// them. When that pass does not reach G itself, G has nonsolvable subgroups
// and a join-closure sweep over class representatives finishes the set.
// ---------------------------------------------------------------------------

namespace {

struct WorkClass {
  DynBitset rep;          // representative the class was discovered with
  std::vector<int> gens;  // generators of rep
  std::int64_t order = 0;
  std::int64_t class_size = 0;
  DynBitset least;  // canonical representative
  std::vector<int> least_gens;
};

class LatticeBuilder {
 public:
  LatticeBuilder(const GroupPtr& G, const Caps& caps)
      : G_(G), caps_(caps), n_(static_cast<int>(G->order())) {}

  SubgroupLattice run() {
    DynBitset triv(n_);
    triv.set(0);
    add_class(std::move(triv), {}, 1);
    seed_prime_cyclics();
    process_queue();
    DynBitset full = DynBitset(n_).complemented();
    if (!seen_.count(full)) join_sweep();
    return finalize();
  }

 private:
  void add_class(DynBitset K, std::vector<int> gens, std::int64_t order) {
    if (seen_.count(K)) return;
    WorkClass wc;
    wc.order = order;
    wc.least = K;
    wc.least_gens = gens;
    std::deque<std::pair<DynBitset, std::vector<int>>> q;
    seen_.insert(K);
    q.emplace_back(K, gens);
    std::int64_t size = 0;
    while (!q.empty()) {
      auto member = std::move(q.front());
      q.pop_front();
      ++size;
      if (static_cast<std::int64_t>(all_.size()) + 1 > caps_.max_subgroups)
        throw CapExceeded("subgroup count cap exceeded (" +
                          std::to_string(caps_.max_subgroups) + ")");
      for (int j = 0; j < G_->num_gens(); ++j) {
        DynBitset B2 = conjugate_bits_by_gen(*G_, member.first, j);
        if (seen_.insert(B2).second) {
          std::vector<int> bg2;
          bg2.reserve(member.second.size());
          for (int x : member.second) bg2.push_back(G_->conj_by_gen(x, j));
          if (B2.lex_less(wc.least)) {
            wc.least = B2;
            wc.least_gens = bg2;
          }
          q.emplace_back(std::move(B2), std::move(bg2));
        }
      }
      all_.push_back(std::move(member.first));
      all_gens_.push_back(std::move(member.second));
    }
    wc.class_size = size;
    wc.rep = std::move(K);
    wc.gens = std::move(gens);
    classes_.push_back(std::move(wc));
    queue_.push_back(static_cast<int>(classes_.size()) - 1);
  }

  // Prime-order cyclic subgroups straight from element orders; this is the
  // trivial-subgroup extension step without building the regular quotient.
  void seed_prime_cyclics() {
    for (int x = 1; x < n_; ++x) {
      std::int64_t r = perm_order(G_->element(x));
      if (!is_prime(r)) continue;
      DynBitset b(n_);
      b.set(0);
      for (int y = x; y != 0; y = G_->mul(y, x)) b.set(y);
      add_class(std::move(b), {x}, r);
    }
  }

  void process_queue() {
    while (!queue_.empty()) {
      int ci = queue_.front();
      queue_.pop_front();
      extend_class(ci);
    }
  }

  void extend_class(int ci) {
    const std::int64_t h = classes_[ci].order;
    const std::int64_t norm_order = n_ / classes_[ci].class_size;
    if (h <= 1 || norm_order == h) return;  // seeded separately / self-normalizing
    const DynBitset H = classes_[ci].rep;
    const std::vector<int> Hgens = classes_[ci].gens;
    const bool normal = classes_[ci].class_size == 1;
    CosetTable T = right_cosets(*G_, H, Hgens);

    if (normal) {
      // The coset action of G on H-cosets is the regular action of G/H, so
      // element orders are cycle lengths and the preimage of a cyclic
      // subgroup is the union of the cosets in the cycle of point 0.
      std::vector<Perm> qgens;
      for (int j = 0; j < G_->num_gens(); ++j) {
        std::vector<std::uint16_t> img(T.count);
        for (int c = 0; c < T.count; ++c) img[c] = static_cast<std::uint16_t>(T.cmul[c][j]);
        qgens.emplace_back(std::move(img));
      }
      Caps qcaps;
      qcaps.max_order = n_;
      GroupPtr Q = Group::enumerate(T.count, std::move(qgens), qcaps);
      const int qn = static_cast<int>(Q->order());
      for (int qi = 1; qi < qn; ++qi) {
        const Perm& qe = Q->element(qi);
        std::int64_t r = perm_order(qe);
        if (!is_prime(r)) continue;
        DynBitset K = H;
        int c = qe[0];
        while (c != 0) {
          K |= T.bits[c];
          c = qe[c];
        }
        std::vector<int> kg = Hgens;
        kg.push_back(T.rep[qe[0]]);
        add_class(std::move(K), std::move(kg), h * r);
      }
      return;
    }

    // General case: locate the normalizer cosets, then walk coset orders.
    const std::int64_t target = norm_order / h;
    std::vector<int> good{0};
    for (int c = 1; c < T.count && static_cast<std::int64_t>(good.size()) < target; ++c) {
      int r = T.rep[c];
      int ri = G_->inv(r);
      bool ok = true;
      for (int hg : Hgens) {
        if (!H.test(G_->mul(G_->mul(ri, hg), r))) {
          ok = false;
          break;
        }
      }
      if (ok) good.push_back(c);
    }
    for (std::size_t gi = 1; gi < good.size(); ++gi) {
      int x = T.rep[good[gi]];
      std::vector<int> ids;
      std::int64_t r = 1;
      int cur = x;
      while (T.coset_of[cur] != 0) {
        ids.push_back(T.coset_of[cur]);
        cur = G_->mul(cur, x);
        ++r;
      }
      if (!is_prime(r)) continue;
      DynBitset K = H;
      for (int id : ids) K |= T.bits[id];
      std::vector<int> kg = Hgens;
      kg.push_back(x);
      add_class(std::move(K), std::move(kg), h * r);
    }
  }

  // Join closure for the nonsolvable part: representatives joined against
  // every stored subgroup until nothing new appears.
  void join_sweep() {
    std::vector<std::size_t> done;
    while (true) {
      std::size_t nclasses = classes_.size();
      std::size_t nall = all_.size();
      for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
        if (done.size() < classes_.size()) done.resize(classes_.size(), 0);
        const DynBitset A = classes_[ci].rep;
        const std::vector<int> Agens = classes_[ci].gens;
        std::size_t upto = all_.size();
        for (std::size_t bi = done[ci]; bi < upto; ++bi) {
          if (A.is_subset_of(all_[bi]) || all_[bi].is_subset_of(A)) continue;
          std::vector<int> g = Agens;
          g.insert(g.end(), all_gens_[bi].begin(), all_gens_[bi].end());
          DynBitset K = closure_bits(*G_, g);
          if (!seen_.count(K)) {
            std::int64_t kc = K.count();
            add_class(std::move(K), std::move(g), kc);
          }
        }
        done[ci] = upto;
      }
      process_queue();
      if (classes_.size() == nclasses && all_.size() == nall) break;
    }
  }

  SubgroupLattice finalize() {
    SubgroupLattice L;
    L.group = G_;
    L.total_subgroups = static_cast<std::int64_t>(all_.size());
    L.classes.reserve(classes_.size());
    for (auto& wc : classes_) {
      SubgroupClassRecord rec;
      rec.class_size = wc.class_size;
      rec.normalizer_order = n_ / wc.class_size;
      rec.self_normalizing = rec.normalizer_order == wc.order;
      rec.is_normal = wc.class_size == 1;
      rec.representative =
          Subgroup{G_, std::move(wc.least), wc.order, std::move(wc.least_gens)};
      L.classes.push_back(std::move(rec));
    }
    std::sort(L.classes.begin(), L.classes.end(),
              [](const SubgroupClassRecord& a, const SubgroupClassRecord& b) {
                if (a.representative.order != b.representative.order)
                  return a.representative.order < b.representative.order;
                return a.representative.members.lex_less(b.representative.members);
              });
    L.all = std::move(all_);
    std::sort(L.all.begin(), L.all.end(), all_order_less);
    return L;
  }

  GroupPtr G_;
  Caps caps_;
  int n_;
  std::unordered_set<DynBitset, DynBitsetHasher> seen_;
  std::vector<DynBitset> all_;
  std::vector<std::vector<int>> all_gens_;
  std::vector<WorkClass> classes_;
  std::deque<int> queue_;
};

}  // namespace

SubgroupLattice subgroup_lattice(const GroupPtr& G, const Caps& caps) {
  return LatticeBuilder(G, caps).run();
}

bool SubgroupLattice::contains(const DynBitset& bits) const {
  auto it = std::lower_bound(all.begin(), all.end(), bits, all_order_less);
  return it != all.end() && *it == bits;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G, const Caps& caps) {
  SubgroupLattice L = subgroup_lattice(G, caps);
  std::vector<Subgroup> out;
  out.reserve(L.all.size());
  for (auto& b : L.all) {
    std::int64_t ord = b.count();
    out.push_back(Subgroup{G, std::move(b), ord, {}});
  }
  return out;
}

std::vector<SubgroupClassRecord> conjugacy_classes_of_subgroups(const GroupPtr& G,
                                                                const Caps& caps) {
  return subgroup_lattice(G, caps).classes;
}

// ---------------------------------------------------------------------------
// Quotients.
// ---------------------------------------------------------------------------

namespace {

GroupPtr coset_action_group(const Group& G, const CosetTable& T) {
  std::vector<Perm> qgens;
  for (int j = 0; j < G.num_gens(); ++j) {
    std::vector<std::uint16_t> img(T.count);
    for (int c = 0; c < T.count; ++c) img[c] = static_cast<std::uint16_t>(T.cmul[c][j]);
    qgens.emplace_back(std::move(img));
  }
  Caps qcaps;
  qcaps.max_order = G.order();
  return Group::enumerate(T.count, std::move(qgens), qcaps);
}

void check_quotient_args(const GroupPtr& G, const Subgroup& N) {
  if (N.parent != G) throw Error("quotient: subgroup belongs to a different group");
  if (!is_normal_subgroup(G, N)) throw Error("quotient: subgroup is not normal");
}

}  // namespace

GroupPtr quotient_group(const GroupPtr& G, const Subgroup& N) {
  check_quotient_args(G, N);
  CosetTable T = right_cosets(*G, N.members, N.gens);
  GroupPtr Q = coset_action_group(*G, T);
  if (Q->order() * N.order != G->order()) throw Error("quotient: coset action order mismatch");
  return Q;
}

QuotientPresentation quotient(const GroupPtr& G, const Subgroup& N) {
  check_quotient_args(G, N);
  CosetTable T = right_cosets(*G, N.members, N.gens);
  GroupPtr Q = coset_action_group(*G, T);
  if (Q->order() * N.order != G->order()) throw Error("quotient: coset action order mismatch");

  const int n = static_cast<int>(G->order());
  std::vector<int> proj(n, -1);
  proj[0] = 0;  // the identity sorts first in both element tables
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (int j = 0; j < G->num_gens(); ++j) {
      int y = G->mul_gen(x, j);
      if (proj[y] < 0) {
        proj[y] = Q->mul_gen(proj[x], j);
        queue.push_back(y);
      }
    }
  }
  return QuotientPresentation{G, N, Q, std::move(proj)};
}

}  // namespace cgt
