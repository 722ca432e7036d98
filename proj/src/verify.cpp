#include "cgt/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "cgt/census.hpp"
#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/structure.hpp"

namespace cgt {

std::int64_t VerificationReport::failure_count() const {
  return std::count_if(records.begin(), records.end(),
                       [](const CheckRecord& r) { return !r.pass; });
}

std::int64_t VerificationReport::count_for(const std::string& check_id) const {
  return std::count_if(records.begin(), records.end(),
                       [&](const CheckRecord& r) { return r.check_id == check_id; });
}

std::int64_t VerificationReport::failures_for(const std::string& check_id) const {
  return std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) {
    return r.check_id == check_id && !r.pass;
  });
}

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> ids = {
      "witness",        "cyclic-family",      "frobenius-formula", "quotient-lemma",
      "product-formula", "center-gap",        "pgroup-bounds",     "nilpotent-bounds",
      "metabelian",     "solvable-dl",        "composition-length", "classification",
      "d4",             "burnside",           "zgroup",            "frobenius-structure",
      "subnormal",      "nilpotency-selfnorm",
  };
  return ids;
}

namespace {

std::string itos(std::int64_t v) { return std::to_string(v); }

std::string opt_str(const std::optional<int>& v) { return v ? itos(*v) : "none"; }

// Everything the per-group checks consume, computed once per catalog entry.
struct GroupCtx {
  const GroupSpec* spec = nullptr;
  GroupPtr G;
  SubgroupLattice lat;
  CensusReport cen;
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  std::optional<int> dl;
  std::optional<int> nclass;
  std::int64_t center_order = 0;
  Subgroup center_sub;
  std::string error;  // construction failure, if any
};

class ContextPool {
 public:
  ContextPool(const Catalog& cat, const Caps& caps) : cat_(cat), caps_(caps) {
    ctxs_.resize(cat.specs.size());
  }

  std::size_t size() const { return cat_.specs.size(); }

  const GroupCtx& get(std::size_t i) {
    GroupCtx& c = ctxs_[i];
    if (c.spec) return c;
    c.spec = &cat_.specs[i];
    try {
      c.G = c.spec->build(caps_);
      c.lat = subgroup_lattice(c.G, caps_);
      c.cen = census(c.G, c.lat);
      c.abelian = c.G->is_abelian();
      c.dl = derived_length(c.G);
      c.solvable = c.dl.has_value();
      c.nclass = nilpotency_class(c.G);
      c.nilpotent = c.nclass.has_value();
      c.center_sub = center(c.G);
      c.center_order = c.center_sub.order;
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    return c;
  }

 private:
  const Catalog& cat_;
  Caps caps_;
  std::vector<GroupCtx> ctxs_;
};

using Sink = std::vector<CheckRecord>;

void emit(Sink& out, const std::string& id, const std::string& instance,
          const std::string& expected, const std::string& computed, bool pass) {
  out.push_back(CheckRecord{id, instance, expected, computed, pass});
}

bool ctx_ok(Sink& out, const std::string& id, const GroupCtx& c) {
  if (c.error.empty()) return true;
  emit(out, id, c.spec->name, "constructible", "error: " + c.error, false);
  return false;
}

// ---- witness ----------------------------------------------------------

void check_witness(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (c.spec->expected.empty()) continue;
    if (!ctx_ok(out, "witness", c)) continue;
    for (const auto& [key, want] : c.spec->expected) {
      std::string computed;
      if (key == "d")
        computed = itos(c.cen.d_value);
      else if (key == "order")
        computed = itos(c.G->order());
      else if (key == "derived-length")
        computed = opt_str(c.dl);
      else if (key == "nilpotency-class")
        computed = opt_str(c.nclass);
      else
        computed = "unknown-key";
      emit(out, "witness", c.spec->name + " " + key, itos(want), computed,
           computed == itos(want));
    }
  }
}

// ---- cyclic family: D(C_{p^{n+1}}) = n --------------------------------

void check_cyclic_family(ContextPool&, Sink& out) {
  for (int p : {2, 3, 5}) {
    for (int n = 0; n <= 4; ++n) {
      std::int64_t pn = 1;
      for (int i = 0; i <= n; ++i) pn *= p;
      std::string inst = "C" + itos(pn);
      try {
        auto G = cyclic(static_cast<int>(pn));
        auto d = census(G).d_value;
        emit(out, "cyclic-family", inst, itos(n), itos(d), d == n);
      } catch (const std::exception& e) {
        emit(out, "cyclic-family", inst, itos(n), std::string("error: ") + e.what(), false);
      }
    }
  }
}

// ---- Frobenius closed forms vs brute force ----------------------------

void check_frobenius_formula(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    const GroupSpec& s = *pool.get(i).spec;
    if (s.ctor != "frobenius_metacyclic" && s.ctor != "frobenius_elem_abelian") continue;
    if (!ctx_ok(out, "frobenius-formula", c)) continue;
    auto pv = [&](const std::string& k) {
      for (const auto& [kk, vv] : s.params)
        if (kk == k) return vv;
      return std::string();
    };
    try {
      std::int64_t want = 0;
      if (s.ctor == "frobenius_metacyclic") {
        want = formula_frob1(std::stoi(pv("n")), std::stoi(pv("m")));
      } else {
        int p = std::stoi(pv("p")), q = std::stoi(pv("q")), k = std::stoi(pv("k"));
        auto kind = parse_module_kind(pv("module"));
        if (k == 2) {
          Frob2Case fc = *kind == ModuleKind::Irreducible    ? Frob2Case::Irreducible
                         : *kind == ModuleKind::SplitDistinct ? Frob2Case::SplitDistinct
                                                               : Frob2Case::Homogeneous;
          want = formula_frob2(p, q, fc);
        } else {
          Frob3Case fc = *kind == ModuleKind::Irreducible     ? Frob3Case::Irreducible
                         : *kind == ModuleKind::MixedDims     ? Frob3Case::TwoComponents
                         : *kind == ModuleKind::SplitDistinct ? Frob3Case::ThreeComponents
                                                              : Frob3Case::Homogeneous;
          want = formula_frob3(p, q, fc);
        }
      }
      emit(out, "frobenius-formula", s.name, itos(want), itos(c.cen.d_value),
           want == c.cen.d_value);
    } catch (const std::exception& e) {
      emit(out, "frobenius-formula", s.name, "evaluable", std::string("error: ") + e.what(),
           false);
    }
  }
}

// ---- quotient lemma ----------------------------------------------------

void check_quotient_lemma(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "quotient-lemma", c)) continue;
    const std::int64_t n = c.G->order();
    int idx = 0;
    for (const auto& rec : c.lat.classes) {
      if (!rec.is_normal) continue;
      const Subgroup& N = rec.representative;
      if (N.order == 1 || N.order == n) continue;
      ++idx;
      std::string inst = c.spec->name + " N#" + itos(idx) + "(|N|=" + itos(N.order) + ")";
      try {
        auto Q = quotient_group(c.G, N);
        std::int64_t dq = census(Q).d_value;
        std::int64_t dgn = relative_census(c.G, N, c.lat);
        std::int64_t m = c.cen.d_value - dgn;
        bool ok = dq <= m - 1 && dq <= c.cen.d_value - 1;
        emit(out, "quotient-lemma", inst,
             "D(G/N)<=" + itos(m - 1) + " and <=" + itos(c.cen.d_value - 1), itos(dq), ok);
      } catch (const std::exception& e) {
        emit(out, "quotient-lemma", inst, "evaluable", std::string("error: ") + e.what(), false);
      }
    }
  }
}

// ---- direct product bound and equality characterization ----------------

void check_product_formula(ContextPool&, Sink& out) {
  const std::pair<const char*, const char*> pairs[] = {
      {"C2", "C3"}, {"C5", "C7"}, {"C4", "C9"}, {"Q8", "C3"}, {"D4", "C3"},
      {"C2", "C2"}, {"C3", "C3"}, {"C4", "C2"}, {"C2", "D4"}, {"S3", "C2"},
      {"S3", "C3"}, {"S3", "C5"}, {"S3", "S3"}, {"A4", "C2"},
  };
  for (const auto& [an, bn] : pairs) {
    std::string inst = std::string(an) + " x " + bn;
    try {
      GroupPtr A = resolve_group_name(an);
      GroupPtr B = resolve_group_name(bn);
      std::int64_t dA = census(A).d_value;
      std::int64_t dB = census(B).d_value;
      std::int64_t dP = census(direct_product(A, B)).d_value;
      std::int64_t bound = product_lower_bound(dA, dB);
      bool coprime = std::gcd(A->order(), B->order()) == 1;
      bool nilp = nilpotency_class(A).has_value() && nilpotency_class(B).has_value();
      bool want_eq = coprime && nilp;
      bool ok = dP >= bound && ((dP == bound) == want_eq);
      emit(out, "product-formula", inst,
           std::string(want_eq ? "=" : ">") + itos(bound), itos(dP), ok);
    } catch (const std::exception& e) {
      emit(out, "product-formula", inst, "evaluable", std::string("error: ") + e.what(), false);
    }
  }
}

// ---- center gap ---------------------------------------------------------

void check_center_gap(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "center-gap", c)) continue;
    if (c.abelian || c.center_order <= 1) continue;
    try {
      GroupPtr Z = group_from_subgroup(c.center_sub);
      std::int64_t dz = census(Z).d_value;
      std::int64_t gap = c.cen.d_value - dz;
      bool ok = gap >= 3;
      std::string computed = itos(gap);
      if (ok && gap == 3) {
        // sharp case must be C_p . C_{q^2} with |Z| = q
        auto primes = prime_divisors(c.G->order());
        bool shape = false;
        if (primes.size() == 2 && is_prime_number(c.center_order)) {
          std::int64_t q = c.center_order;
          std::int64_t p = primes[0] == q ? primes[1] : primes[0];
          if (c.G->order() == p * q * q) {
            bool p_normal = false;
            for (const auto& rec : c.lat.classes)
              if (rec.is_normal && rec.representative.order == p) p_normal = true;
            shape = p_normal && is_cyclic_subgroup(sylow_subgroup(c.G, q, c.lat));
          }
        }
        ok = shape;
        if (!shape) computed += " (sharp case with wrong shape)";
      }
      emit(out, "center-gap", c.spec->name, ">=3 (sharp only for CpCq2 shape)", computed, ok);
    } catch (const std::exception& e) {
      emit(out, "center-gap", c.spec->name, "evaluable", std::string("error: ") + e.what(),
           false);
    }
  }
}

// ---- p-group bounds -----------------------------------------------------

void check_pgroup_bounds(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "pgroup-bounds", c)) continue;
    auto primes = prime_divisors(c.G->order());
    if (primes.size() != 1) continue;
    const std::int64_t n = c.cen.d_value;
    const bool cyclic = is_cyclic_group(c.G);
    if (!cyclic) {
      // a noncyclic p-group of order p^{m+1} has at least 2m classes of
      // nontrivial proper subgroups
      std::int64_t m = -1;
      for (std::int64_t v = c.G->order(); v > 1; v /= primes[0]) ++m;
      std::int64_t proper = static_cast<std::int64_t>(c.lat.classes.size()) - 2;
      emit(out, "pgroup-bounds", c.spec->name + " proper-classes", ">=" + itos(2 * m),
           itos(proper), proper >= 2 * m);
    }
    if (n > 1) {
      auto b = pgroup_bounds(n);
      bool cls_ok = c.nclass && *c.nclass <= b.max_class;
      bool dl_ok = c.dl && dl_within_pgroup_bound(*c.dl, n);
      emit(out, "pgroup-bounds", c.spec->name + " class", "<=" + itos(b.max_class),
           opt_str(c.nclass), cls_ok);
      emit(out, "pgroup-bounds", c.spec->name + " dl", "<=" + itos(b.max_derived_length),
           opt_str(c.dl), dl_ok);
    }
  }
}

// ---- nilpotent k-prime bounds -------------------------------------------

void check_nilpotent_bounds(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "nilpotent-bounds", c)) continue;
    if (!c.nilpotent || c.G->order() == 1 || is_cyclic_group(c.G)) continue;
    const int k = static_cast<int>(prime_divisors(c.G->order()).size());
    const std::int64_t n = c.cen.d_value;
    auto b = nilpotent_bounds(n, k);
    bool cls_ok = c.nclass && *c.nclass <= b.max_class;
    bool dl_ok = c.dl && dl_within_nilpotent_bound(*c.dl, n, k);
    emit(out, "nilpotent-bounds", c.spec->name + " class", "<=" + itos(b.max_class),
         opt_str(c.nclass), cls_ok);
    emit(out, "nilpotent-bounds", c.spec->name + " dl", "<=" + itos(b.max_derived_length),
         opt_str(c.dl), dl_ok);
  }
}

// ---- D <= 3 implies metabelian -------------------------------------------

void check_metabelian(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "metabelian", c)) continue;
    if (c.cen.d_value > 3) continue;
    bool ok = c.solvable && c.dl && *c.dl <= 2;
    emit(out, "metabelian", c.spec->name, "solvable, dl<=2",
         c.solvable ? "dl=" + opt_str(c.dl) : "nonsolvable", ok);
  }
}

// ---- solvable derived length bounds --------------------------------------

void check_solvable_dl(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "solvable-dl", c)) continue;
    if (!c.solvable || c.cen.d_value < 3) continue;
    const std::int64_t n = c.cen.d_value;
    std::int64_t bound = solvable_dl_bound(n);
    bool ok = c.dl && *c.dl <= n - 1 && dl_within_log_bound(*c.dl, n);
    emit(out, "solvable-dl", c.spec->name, "<=" + itos(bound), opt_str(c.dl), ok);
  }
}

// ---- composition length <= D + 1 for solvable ----------------------------

void check_composition_length(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "composition-length", c)) continue;
    if (!c.solvable) continue;
    try {
      int cl = composition_length(c.G, c.lat);
      emit(out, "composition-length", c.spec->name, "<=" + itos(c.cen.d_value + 1), itos(cl),
           cl <= c.cen.d_value + 1);
    } catch (const std::exception& e) {
      emit(out, "composition-length", c.spec->name, "evaluable",
           std::string("error: ") + e.what(), false);
    }
  }
}

// ---- classification ------------------------------------------------------

void check_classification(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "classification", c)) continue;
    try {
      auto v = classify_small(c.G, c.lat);
      std::string computed = bucket_name(v.bucket) + "/D=" + itos(c.cen.d_value);
      bool ok;
      std::string expected;
      if (v.predicted_d) {
        expected = "predicted D matches";
        ok = *v.predicted_d == c.cen.d_value;
      } else if (c.G->order() == 1) {
        // the case lists concern nontrivial groups
        expected = "trivial group uncovered";
        ok = c.cen.d_value == 0;
      } else {
        expected = "uncovered implies D>=4";
        ok = c.cen.d_value >= 4;
      }
      emit(out, "classification", c.spec->name, expected, computed, ok);
    } catch (const std::exception& e) {
      emit(out, "classification", c.spec->name, "evaluable", std::string("error: ") + e.what(),
           false);
    }
  }
}

// ---- the census-4 landscape ----------------------------------------------

void check_d4(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "d4", c)) continue;
    if (c.cen.d_value != 4) continue;
    bool ok;
    std::string computed;
    if (!c.solvable) {
      bool simple = true;
      for (const auto& rec : c.lat.classes)
        if (rec.is_normal && rec.representative.order != 1 &&
            rec.representative.order != c.G->order())
          simple = false;
      ok = c.G->order() == 60 && simple;
      computed = "nonsolvable order " + itos(c.G->order());
    } else if (c.dl && *c.dl <= 2) {
      ok = true;
      computed = "solvable dl=" + opt_str(c.dl);
    } else {
      ok = c.G->order() == 24 && c.dl && *c.dl == 3 && c.center_order == 2;
      computed = "solvable dl=" + opt_str(c.dl) + " order " + itos(c.G->order());
    }
    emit(out, "d4", c.spec->name, "A5 or solvable with dl<=2 or SL2(3)", computed, ok);
  }
}

// ---- Burnside normal p-complement ----------------------------------------

void check_burnside(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "burnside", c)) continue;
    for (std::int64_t p : prime_divisors(c.G->order())) {
      std::string inst = c.spec->name + " p=" + itos(p);
      try {
        Subgroup P = sylow_subgroup(c.G, p, c.lat);
        Subgroup N = normalizer(c.G, P);
        bool central = true;
        N.members.for_each([&](int x) {
          if (!central) return;
          for (int pg : P.gens)
            if (c.G->mul(x, pg) != c.G->mul(pg, x)) {
              central = false;
              return;
            }
        });
        if (!central) continue;  // hypothesis empty
        bool comp = has_normal_p_complement(c.G, p, c.lat);
        emit(out, "burnside", inst, "normal p-complement", comp ? "present" : "absent", comp);
      } catch (const std::exception& e) {
        emit(out, "burnside", inst, "evaluable", std::string("error: ") + e.what(), false);
      }
    }
  }
}

// ---- Z-group structure ----------------------------------------------------

void check_zgroup(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "zgroup", c)) continue;
    try {
      if (!is_z_group(c.G, c.lat)) continue;
      Subgroup D = derived_subgroup(c.G);
      bool d_cyclic = D.order == 1 || is_cyclic_subgroup(D);
      GroupPtr Q = quotient_group(c.G, D);
      bool q_cyclic = is_cyclic_group(Q);
      bool coprime = std::gcd(D.order, Q->order()) == 1;
      bool ok = d_cyclic && q_cyclic && coprime;
      emit(out, "zgroup", c.spec->name, "G' and G/G' cyclic of coprime order",
           std::string(d_cyclic ? "G' cyclic" : "G' noncyclic") + ", " +
               (q_cyclic ? "G/G' cyclic" : "G/G' noncyclic") + ", gcd=" +
               itos(std::gcd(D.order, Q->order())),
           ok);
    } catch (const std::exception& e) {
      emit(out, "zgroup", c.spec->name, "evaluable", std::string("error: ") + e.what(), false);
    }
  }
}

// ---- Frobenius structure ---------------------------------------------------

void check_frobenius_structure(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "frobenius-structure", c)) continue;
    try {
      auto fd = frobenius_decomposition(c.G, c.lat);
      if (!fd) continue;
      bool coprime = std::gcd(fd->kernel.order, fd->complement.order) == 1;
      bool sizes = fd->kernel.order * fd->complement.order == c.G->order();
      GroupPtr K = group_from_subgroup(fd->kernel);
      bool kernel_nilpotent = nilpotency_class(K).has_value();
      // complement Sylows must be cyclic or generalized quaternion
      GroupPtr C = group_from_subgroup(fd->complement);
      auto clat = subgroup_lattice(C);
      bool sylows_ok = true;
      for (std::int64_t p : prime_divisors(C->order())) {
        Subgroup S = sylow_subgroup(C, p, clat);
        if (is_cyclic_subgroup(S)) continue;
        std::int64_t involutions = 0;
        S.members.for_each([&](int x) {
          if (x != 0 && perm_order(C->element(x)) == 2) ++involutions;
        });
        bool quaternion = p == 2 && S.order >= 8 && involutions == 1;
        if (!quaternion) sylows_ok = false;
      }
      bool ok = coprime && sizes && kernel_nilpotent && sylows_ok;
      emit(out, "frobenius-structure", c.spec->name,
           "coprime, kernel nilpotent, complement Sylows cyclic/quaternion",
           std::string(coprime ? "coprime" : "non-coprime") + ", kernel " +
               (kernel_nilpotent ? "nilpotent" : "non-nilpotent") + ", Sylows " +
               (sylows_ok ? "ok" : "bad"),
           ok);
    } catch (const std::exception& e) {
      emit(out, "frobenius-structure", c.spec->name, "evaluable",
           std::string("error: ") + e.what(), false);
    }
  }
}

// ---- proper subnormal implies non-self-normalizing -------------------------

// smallest normal subgroup of G containing H, from the complete lattice
const SubgroupClassRecord* smallest_normal_over(const SubgroupLattice& lat,
                                                const DynBitset& bits) {
  for (const auto& rec : lat.classes)
    if (rec.is_normal && bits.is_subset_of(rec.representative.members)) return &rec;
  return nullptr;
}

bool subnormal_via_lattice(const GroupPtr& G, const SubgroupLattice& lat, const Subgroup& H) {
  if (H.order == G->order() || H.order == 1) return true;
  const SubgroupClassRecord* M = smallest_normal_over(lat, H.members);
  if (!M) throw Error("subnormal check: no normal overgroup found");
  if (M->representative.order == H.order) return true;
  if (M->representative.order == G->order()) return false;
  GroupPtr Mg = group_from_subgroup(M->representative);
  DynBitset hb(static_cast<int>(Mg->order()));
  H.members.for_each([&](int x) {
    int y = Mg->index_of(G->element(x));
    if (y < 0) throw Error("subnormal check: member remap failed");
    hb.set(y);
  });
  return subnormal_via_lattice(Mg, subgroup_lattice(Mg), subgroup_from_bits(Mg, std::move(hb)));
}

void check_subnormal(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "subnormal", c)) continue;
    // subnormality and self-normalization are conjugation-invariant, so class
    // representatives cover every subgroup; only self-normalizing classes can
    // violate the claim
    std::int64_t violations = 0, considered = 0;
    try {
      for (const auto& rec : c.lat.classes) {
        const auto& H = rec.representative;
        if (H.order == 1 || H.order == c.G->order()) continue;
        if (!rec.self_normalizing) continue;
        ++considered;
        if (subnormal_via_lattice(c.G, c.lat, H)) ++violations;
      }
      emit(out, "subnormal", c.spec->name + " (" + itos(considered) + " self-normalizing classes)",
           "0 subnormal among them", itos(violations), violations == 0);
    } catch (const std::exception& e) {
      emit(out, "subnormal", c.spec->name, "evaluable", std::string("error: ") + e.what(), false);
    }
  }
}

// ---- nilpotency <=> every proper subgroup non-self-normalizing -------------

void check_nilpotency_selfnorm(ContextPool& pool, Sink& out) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const GroupCtx& c = pool.get(i);
    if (!ctx_ok(out, "nilpotency-selfnorm", c)) continue;
    bool all_proper_nsn = true;
    for (const auto& rec : c.lat.classes)
      if (rec.representative.order < c.G->order() && rec.self_normalizing) all_proper_nsn = false;
    bool ok = c.nilpotent == all_proper_nsn;
    emit(out, "nilpotency-selfnorm", c.spec->name,
         c.nilpotent ? "nilpotent <=> no proper self-normalizing" : "non-nilpotent <=> some",
         all_proper_nsn ? "none self-normalizing" : "some self-normalizing", ok);
  }
}

}  // namespace

VerificationReport verify(const Catalog& catalog, const std::vector<std::string>& checks,
                          const Caps& caps) {
  std::vector<std::string> selected = checks;
  if (selected.empty()) selected = available_checks();
  for (const auto& id : selected) {
    const auto& known = available_checks();
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw Error("unknown check: " + id);
  }
  auto want = [&](const char* id) {
    return std::find(selected.begin(), selected.end(), id) != selected.end();
  };

  ContextPool pool(catalog, caps);
  VerificationReport rep;
  // canonical execution order regardless of selector order
  if (want("witness")) check_witness(pool, rep.records);
  if (want("cyclic-family")) check_cyclic_family(pool, rep.records);
  if (want("frobenius-formula")) check_frobenius_formula(pool, rep.records);
  if (want("quotient-lemma")) check_quotient_lemma(pool, rep.records);
  if (want("product-formula")) check_product_formula(pool, rep.records);
  if (want("center-gap")) check_center_gap(pool, rep.records);
  if (want("pgroup-bounds")) check_pgroup_bounds(pool, rep.records);
  if (want("nilpotent-bounds")) check_nilpotent_bounds(pool, rep.records);
  if (want("metabelian")) check_metabelian(pool, rep.records);
  if (want("solvable-dl")) check_solvable_dl(pool, rep.records);
  if (want("composition-length")) check_composition_length(pool, rep.records);
  if (want("classification")) check_classification(pool, rep.records);
  if (want("d4")) check_d4(pool, rep.records);
  if (want("burnside")) check_burnside(pool, rep.records);
  if (want("zgroup")) check_zgroup(pool, rep.records);
  if (want("frobenius-structure")) check_frobenius_structure(pool, rep.records);
  if (want("subnormal")) check_subnormal(pool, rep.records);
  if (want("nilpotency-selfnorm")) check_nilpotency_selfnorm(pool, rep.records);
  return rep;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "check,instance,expected,computed,status\n";
  for (const auto& r : report.records)
    out << csv_escape(r.check_id) << ',' << csv_escape(r.instance) << ','
        << csv_escape(r.expected) << ',' << csv_escape(r.computed) << ','
        << (r.pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["check"] = r.check_id;
    rec["instance"] = r.instance;
    rec["expected"] = r.expected;
    rec["computed"] = r.computed;
    rec["status"] = r.pass ? "pass" : "FAIL";
    doc["checks"].push_back(std::move(rec));
  }
  doc["summary"]["total"] = report.records.size();
  doc["summary"]["failed"] = report.failure_count();
  return doc.dump(2) + "\n";
}

}  // namespace cgt
