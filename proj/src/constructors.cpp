#include "cgt/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cgt/error.hpp"
#include "cgt/structure.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

namespace {

std::vector<std::uint16_t> identity_images(int d) {
  std::vector<std::uint16_t> img(d);
  for (int i = 0; i < d; ++i) img[i] = static_cast<std::uint16_t>(i);
  return img;
}

void require_degree(std::int64_t d) {
  if (d < 1 || d > 65535) throw Error("degree out of range 1..65535");
}

std::int64_t modpow(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::int64_t mult_order(std::int64_t r, std::int64_t m) {
  std::int64_t x = r % m, k = 1;
  while (x != 1) {
    x = x * r % m;
    if (++k > m) throw Error("mult_order: element is not a unit");
  }
  return k;
}

void require_prime(std::int64_t v, const char* name) {
  if (v < 2) throw Error(std::string(name) + " must be a prime");
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) throw Error(std::string(name) + " must be a prime");
}

// All elements of multiplicative order q modulo prime p, ascending.
std::vector<int> elements_of_order(int p, int q) {
  std::vector<int> out;
  for (int r = 2; r < p; ++r)
    if (mult_order(r, p) == q) out.push_back(r);
  return out;
}

// ---- small polynomial arithmetic over GF(p), used for companion matrices --

// f is monic of degree k, stored as the k non-leading coefficients c[0..k-1]
// (constant term first). Computes x^q mod f.
std::vector<int> xq_mod_f(int p, int q, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  std::vector<int> r(k, 0);
  // r := x^1
  if (k == 1) {
    r[0] = (p - c[0]) % p;  // x = -c0 mod f
  } else {
    r[1] = 1;
  }
  auto mul_by_x = [&](std::vector<int>& a) {
    int top = a[k - 1];
    for (int i = k - 1; i > 0; --i) a[i] = a[i - 1];
    a[0] = 0;
    if (top)
      for (int i = 0; i < k; ++i) a[i] = (a[i] + (p - c[i]) * top) % p;
  };
  for (int e = 1; e < q; ++e) mul_by_x(r);
  return r;
}

bool has_root(int p, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  for (int x = 0; x < p; ++x) {
    std::int64_t v = 1;  // leading term
    for (int i = k - 1; i >= 0; --i) v = (v * x + c[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

std::vector<std::vector<int>> companion(int p, const std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  std::vector<std::vector<int>> M(k, std::vector<int>(k, 0));
  for (int i = 1; i < k; ++i) M[i][i - 1] = 1;
  for (int i = 0; i < k; ++i) M[i][k - 1] = (p - c[i]) % p;
  return M;
}

std::vector<std::vector<int>> mat_mul(int p, const std::vector<std::vector<int>>& A,
                                      const std::vector<std::vector<int>>& B) {
  const int k = static_cast<int>(A.size());
  std::vector<std::vector<int>> C(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l)
      if (A[i][l])
        for (int j = 0; j < k; ++j) C[i][j] = (C[i][j] + A[i][l] * B[l][j]) % p;
  return C;
}

bool mat_is_identity(const std::vector<std::vector<int>>& A) {
  const int k = static_cast<int>(A.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (A[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::int64_t mat_order(int p, const std::vector<std::vector<int>>& M, std::int64_t cap) {
  auto A = M;
  std::int64_t k = 1;
  while (!mat_is_identity(A)) {
    A = mat_mul(p, A, M);
    if (++k > cap) throw Error("matrix order exceeds cap");
  }
  return k;
}

bool mat_has_eigenvalue_one(int p, const std::vector<std::vector<int>>& M) {
  // det(M - I) over GF(p), k <= 3
  const int k = static_cast<int>(M.size());
  auto A = M;
  for (int i = 0; i < k; ++i) A[i][i] = (A[i][i] + p - 1) % p;
  std::int64_t det = 0;
  if (k == 1)
    det = A[0][0];
  else if (k == 2)
    det = (A[0][0] * A[1][1] - A[0][1] * A[1][0]) % p;
  else
    det = (std::int64_t(A[0][0]) * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           std::int64_t(A[0][1]) * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           std::int64_t(A[0][2]) * (A[1][0] * A[2][1] - A[1][1] * A[2][0])) %
          p;
  det = ((det % p) + p) % p;
  return det == 0;
}

}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) throw Error("cyclic: n must be >= 1");
  require_degree(n);
  if (n == 1) return Group::enumerate(1, {});
  std::vector<std::uint16_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return Group::enumerate(n, {Perm(std::move(img))});
}

GroupPtr dihedral(int n) {
  if (n < 3) throw Error("dihedral: n must be >= 3");
  require_degree(n);
  std::vector<std::uint16_t> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    refl[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  auto G = Group::enumerate(n, {Perm(std::move(rot)), Perm(std::move(refl))});
  if (G->order() != 2 * n) throw Error("dihedral: construction has wrong order");
  return G;
}

GroupPtr dicyclic(int n) {
  if (n < 1) throw Error("dicyclic: n must be >= 1");
  require_degree(std::int64_t(4) * n);
  // regular action on the 4n elements a^i b^j (point index i + 2n*j)
  const int d = 4 * n;
  std::vector<std::uint16_t> a(d), b(d);
  for (int i = 0; i < 2 * n; ++i) {
    a[i] = static_cast<std::uint16_t>((i + 1) % (2 * n));
    a[i + 2 * n] = static_cast<std::uint16_t>((i + 2 * n - 1) % (2 * n) + 2 * n);
    b[i] = static_cast<std::uint16_t>(i + 2 * n);
    b[i + 2 * n] = static_cast<std::uint16_t>((i + n) % (2 * n));
  }
  auto G = Group::enumerate(d, {Perm(std::move(a)), Perm(std::move(b))});
  if (G->order() != 4 * n) throw Error("dicyclic: construction has wrong order");
  return G;
}

GroupPtr sym(int n) {
  if (n < 1) throw Error("sym: n must be >= 1");
  require_degree(n);
  if (n == 1) return Group::enumerate(1, {});
  std::vector<std::uint16_t> t = identity_images(n), c(n);
  t[0] = 1;
  t[1] = 0;
  for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
  if (n == 2) return Group::enumerate(2, {Perm(std::move(t))});
  return Group::enumerate(n, {Perm(std::move(t)), Perm(std::move(c))});
}

GroupPtr alt(int n) {
  if (n < 1) throw Error("alt: n must be >= 1");
  require_degree(n);
  if (n <= 2) return Group::enumerate(n, {});
  std::vector<std::uint16_t> tri = identity_images(n);
  tri[0] = 1;
  tri[1] = 2;
  tri[2] = 0;
  if (n == 3) return Group::enumerate(3, {Perm(std::move(tri))});
  std::vector<std::uint16_t> c = identity_images(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
  } else {
    for (int i = 1; i < n; ++i) c[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);
  }
  return Group::enumerate(n, {Perm(std::move(tri)), Perm(std::move(c))});
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  require_degree(std::int64_t(A->degree()) + B->degree());
  const int d = A->degree() + B->degree();
  std::vector<Perm> gens;
  for (const auto& g : A->generators()) {
    auto img = identity_images(d);
    for (int i = 0; i < A->degree(); ++i) img[i] = static_cast<std::uint16_t>(g[i]);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : B->generators()) {
    auto img = identity_images(d);
    for (int i = 0; i < B->degree(); ++i)
      img[A->degree() + i] = static_cast<std::uint16_t>(A->degree() + g[i]);
    gens.emplace_back(std::move(img));
  }
  auto G = Group::enumerate(d, std::move(gens));
  if (G->order() != A->order() * B->order())
    throw Error("direct_product: construction has wrong order");
  return G;
}

std::string module_kind_name(ModuleKind k) {
  switch (k) {
    case ModuleKind::Irreducible: return "irreducible";
    case ModuleKind::HomogeneousScalar: return "homogeneous-scalar";
    case ModuleKind::SplitDistinct: return "split-distinct";
    case ModuleKind::SplitRepeated: return "split-repeated";
    case ModuleKind::MixedDims: return "mixed-dims";
  }
  return "?";
}

std::optional<ModuleKind> parse_module_kind(const std::string& s) {
  for (ModuleKind k : {ModuleKind::Irreducible, ModuleKind::HomogeneousScalar,
                       ModuleKind::SplitDistinct, ModuleKind::SplitRepeated,
                       ModuleKind::MixedDims})
    if (s == module_kind_name(k)) return k;
  return std::nullopt;
}

std::optional<std::int64_t> smallest_of_order(std::int64_t m, std::int64_t k) {
  for (std::int64_t r = 2; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    if (mult_order(r, m) == k) return r;
  }
  return std::nullopt;
}

bool module_realizable(int p, int k, int q, ModuleKind kind) {
  if (p == q) return false;
  switch (kind) {
    case ModuleKind::Irreducible:
      if (k == 2) return (p + 1) % q == 0 && (p - 1) % q != 0;
      if (k == 3) return (p * p + p + 1) % q == 0 && (p - 1) % q != 0;
      return false;
    case ModuleKind::HomogeneousScalar:
      return k >= 1 && (p - 1) % q == 0;
    case ModuleKind::SplitRepeated:
      return k == 2 && (p - 1) % q == 0;
    case ModuleKind::SplitDistinct:
      return (k == 2 || k == 3) && (p - 1) % q == 0 && q - 1 >= k;
    case ModuleKind::MixedDims:
      return k == 3 && (p - 1) % q == 0 && q >= 3;
  }
  return false;
}

std::vector<std::vector<int>> matrix_of_order(int p, int k, int q, ModuleKind kind) {
  require_prime(p, "p");
  require_prime(q, "q");
  if (k < 1 || k > 3) throw Error("matrix_of_order: k must be 1, 2 or 3");
  if (!module_realizable(p, k, q, kind))
    throw Error("matrix_of_order: " + module_kind_name(kind) + " is unrealizable for p=" +
                std::to_string(p) + " k=" + std::to_string(k) + " q=" + std::to_string(q));

  std::vector<std::vector<int>> M;
  if (kind == ModuleKind::Irreducible) {
    // lexicographically least monic irreducible degree-k factor of x^q - 1,
    // ordered by coefficient tuple (c_{k-1}, ..., c_0)
    std::vector<int> c(k, 0);
    bool found = false;
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (std::int64_t code = 0; code < total && !found; ++code) {
      std::int64_t v = code;
      for (int i = k - 1; i >= 0; --i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
      }
      std::reverse(c.begin(), c.end());  // code digits: high digit = c_{k-1}
      if (has_root(p, c)) continue;
      auto r = xq_mod_f(p, q, c);
      bool is_one = r[0] == 1;
      for (int i = 1; i < k; ++i) is_one = is_one && r[i] == 0;
      if (is_one) {
        M = companion(p, c);
        found = true;
      }
    }
    if (!found) throw Error("matrix_of_order: no irreducible factor found");
  } else {
    auto lams = elements_of_order(p, q);
    M.assign(k, std::vector<int>(k, 0));
    switch (kind) {
      case ModuleKind::HomogeneousScalar:
      case ModuleKind::SplitRepeated:
        for (int i = 0; i < k; ++i) M[i][i] = lams[0];
        break;
      case ModuleKind::SplitDistinct:
        for (int i = 0; i < k; ++i) M[i][i] = lams[i];
        break;
      case ModuleKind::MixedDims:
        M[0][0] = lams[0];
        M[1][1] = lams[1];
        M[2][2] = lams[1];
        break;
      default:
        break;
    }
  }
  if (mat_order(p, M, std::int64_t(q) * q + 1) != q)
    throw Error("matrix_of_order: constructed matrix has wrong order");
  if (mat_has_eigenvalue_one(p, M))
    throw Error("matrix_of_order: constructed matrix fixes a vector");
  return M;
}

GroupPtr frobenius_metacyclic(int p, int n, int q, int m) {
  require_prime(p, "p");
  require_prime(q, "q");
  if (p == q) throw Error("frobenius_metacyclic: p and q must be distinct");
  if (n < 1 || m < 1) throw Error("frobenius_metacyclic: n and m must be >= 1");
  std::int64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  std::int64_t qm = 1;
  for (int i = 0; i < m; ++i) qm *= q;
  if (pn > 65535) throw Error("frobenius_metacyclic: kernel too large for the point range");
  auto r = smallest_of_order(pn, qm);
  if (!r) throw Error("frobenius_metacyclic: no multiplier of order " + std::to_string(qm) +
                      " modulo " + std::to_string(pn));
  const int d = static_cast<int>(pn);
  std::vector<std::uint16_t> trans(d), mult(d);
  for (int x = 0; x < d; ++x) {
    trans[x] = static_cast<std::uint16_t>((x + 1) % d);
    mult[x] = static_cast<std::uint16_t>(std::int64_t(x) * *r % pn);
  }
  auto G = Group::enumerate(d, {Perm(std::move(trans)), Perm(std::move(mult))});
  if (G->order() != pn * qm) throw Error("frobenius_metacyclic: construction has wrong order");
  return G;
}

GroupPtr frobenius_elem_abelian(int p, int k, int q, ModuleKind kind) {
  if (k < 2 || k > 3) throw Error("frobenius_elem_abelian: k must be 2 or 3");
  auto M = matrix_of_order(p, k, q, kind);
  std::int64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  if (pk > 65535) throw Error("frobenius_elem_abelian: kernel too large for the point range");
  const int d = static_cast<int>(pk);

  auto vec_of = [&](int idx) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) {
      v[i] = idx % p;
      idx /= p;
    }
    return v;
  };
  auto idx_of = [&](const std::vector<int>& v) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + v[i];
    return idx;
  };

  std::vector<Perm> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint16_t> img(d);
    for (int x = 0; x < d; ++x) {
      auto v = vec_of(x);
      v[i] = (v[i] + 1) % p;
      img[x] = static_cast<std::uint16_t>(idx_of(v));
    }
    gens.emplace_back(std::move(img));
  }
  std::vector<std::uint16_t> img(d);
  for (int x = 0; x < d; ++x) {
    auto v = vec_of(x);
    std::vector<int> w(k, 0);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) w[r] = (w[r] + M[r][c] * v[c]) % p;
    img[x] = static_cast<std::uint16_t>(idx_of(w));
  }
  gens.emplace_back(std::move(img));

  auto G = Group::enumerate(d, std::move(gens));
  if (G->order() != pk * q) throw Error("frobenius_elem_abelian: construction has wrong order");
  return G;
}

GroupPtr central_extension_example(int p, int q) {
  require_prime(p, "p");
  require_prime(q, "q");
  if ((p - 1) % q != 0) throw Error("central_extension_example: q must divide p-1");
  auto r = smallest_of_order(p, q);
  const int d = p + q * q;
  std::vector<std::uint16_t> kgen = identity_images(d), hgen = identity_images(d);
  for (int x = 0; x < p; ++x) {
    kgen[x] = static_cast<std::uint16_t>((x + 1) % p);
    hgen[x] = static_cast<std::uint16_t>(int(std::int64_t(x) * *r % p));
  }
  for (int i = 0; i < q * q; ++i)
    hgen[p + i] = static_cast<std::uint16_t>(p + (i + 1) % (q * q));
  auto G = Group::enumerate(d, {Perm(std::move(kgen)), Perm(std::move(hgen))});
  if (G->order() != std::int64_t(p) * q * q)
    throw Error("central_extension_example: construction has wrong order");
  if (center(G).order != q)
    throw Error("central_extension_example: construction has wrong center");
  return G;
}

namespace {

// GF(8) with x^3 = x + 1; elements are bitmasks b0 + b1*x + b2*x^2.
int gf8_mul(int a, int b) {
  int r = 0;
  for (int i = 0; i < 3; ++i)
    if (b & (1 << i)) {
      int t = a;
      for (int j = 0; j < i; ++j) t = (t << 1) >= 8 ? ((t << 1) ^ 8 ^ 3) : (t << 1);
      r ^= t;
    }
  return r;
}

int gf8_inv(int a) {
  for (int b = 1; b < 8; ++b)
    if (gf8_mul(a, b) == 1) return b;
  throw Error("gf8_inv(0)");
}

std::int64_t modinv(std::int64_t a, std::int64_t p) { return modpow(a, p - 2, p); }

GroupPtr psl2_prime(int pq) {
  const int d = pq + 1;  // projective line, point pq = infinity
  std::vector<std::uint16_t> t = identity_images(d), s(d);
  for (int x = 0; x < pq; ++x) t[x] = static_cast<std::uint16_t>((x + 1) % pq);
  s[0] = static_cast<std::uint16_t>(pq);
  s[pq] = 0;
  for (int x = 1; x < pq; ++x)
    s[x] = static_cast<std::uint16_t>((pq - modinv(x, pq)) % pq);
  auto G = Group::enumerate(d, {Perm(std::move(t)), Perm(std::move(s))});
  std::int64_t expect = std::int64_t(pq) * (pq * pq - 1) / 2;
  if (G->order() != expect) throw Error("psl2: construction has wrong order");
  return G;
}

GroupPtr psl2_8() {
  const int d = 9;  // GF(8) plus infinity at point 8
  std::vector<std::uint16_t> t(d), m(d), s(d);
  for (int x = 0; x < 8; ++x) {
    t[x] = static_cast<std::uint16_t>(x ^ 1);
    m[x] = static_cast<std::uint16_t>(gf8_mul(2, x));
    s[x] = x == 0 ? 8 : static_cast<std::uint16_t>(gf8_inv(x));
  }
  t[8] = 8;
  m[8] = 8;
  s[8] = 0;
  auto G = Group::enumerate(d, {Perm(std::move(t)), Perm(std::move(m)), Perm(std::move(s))});
  if (G->order() != 504) throw Error("psl2_8: construction has wrong order");
  return G;
}

GroupPtr sl2_3() {
  // action on the 8 nonzero vectors of GF(3)^2; index (a,b) -> 3a + b - 1
  const int d = 8;
  auto idx = [](int a, int b) { return 3 * a + b - 1; };
  std::vector<std::uint16_t> S(d), T(d);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      S[idx(a, b)] = static_cast<std::uint16_t>(idx((3 - b) % 3, a));
      T[idx(a, b)] = static_cast<std::uint16_t>(idx((a + b) % 3, b));
    }
  auto G = Group::enumerate(d, {Perm(std::move(S)), Perm(std::move(T))});
  if (G->order() != 24) throw Error("sl2_3: construction has wrong order");
  return G;
}

}  // namespace

GroupPtr preset(const std::string& name) {
  if (name == "Q8") return dicyclic(2);
  if (name == "A4") return alt(4);
  if (name == "S4") return sym(4);
  if (name == "A5") return alt(5);
  if (name == "A6") return alt(6);
  if (name == "SL2(3)") return sl2_3();
  if (name == "PSL(2,5)") return psl2_prime(5);
  if (name == "PSL(2,7)") return psl2_prime(7);
  if (name == "PSL(2,8)") return psl2_8();
  throw Error("unknown preset: " + name);
}

GroupPtr resolve_group_name(const std::string& name) {
  if (name.empty()) throw Error("empty group name");
  if (name == "V4") return direct_product(cyclic(2), cyclic(2));
  for (const char* p : {"Q8", "A4", "S4", "A5", "A6", "SL2(3)", "PSL(2,5)", "PSL(2,7)",
                        "PSL(2,8)"})
    if (name == p) return preset(name);

  auto apos = name.find('x');
  if (apos != std::string::npos) {
    GroupPtr acc;
    std::size_t start = 0;
    while (start <= name.size()) {
      auto end = name.find('x', start);
      std::string part = name.substr(start, end == std::string::npos ? std::string::npos
                                                                     : end - start);
      GroupPtr g = resolve_group_name(part);
      acc = acc ? direct_product(acc, g) : g;
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return acc;
  }

  auto parse_tail = [&](std::size_t prefix_len) -> int {
    const std::string digits = name.substr(prefix_len);
    if (digits.empty()) throw Error("bad group name: " + name);
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error("bad group name: " + name);
    return std::stoi(digits);
  };
  if (name.rfind("Dic", 0) == 0) return dicyclic(parse_tail(3));
  switch (name[0]) {
    case 'C': return cyclic(parse_tail(1));
    case 'D': return dihedral(parse_tail(1));
    case 'S': return sym(parse_tail(1));
    case 'A': return alt(parse_tail(1));
    default: break;
  }
  throw Error("unknown group name: " + name);
}

}  // namespace cgt
