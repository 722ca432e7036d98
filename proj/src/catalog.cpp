#include "cgt/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/census.hpp"
#include "cgt/constructors.hpp"
#include "cgt/error.hpp"

namespace cgt {

namespace {

std::int64_t param_int(const std::vector<std::pair<std::string, std::string>>& params,
                       const std::string& key) {
  for (const auto& [k, v] : params) {
    if (k != key) continue;
    try {
      std::size_t used = 0;
      std::int64_t r = std::stoll(v, &used);
      if (used != v.size()) throw Error("");
      return r;
    } catch (...) {
      throw Error("recipe parameter " + key + " is not an integer: " + v);
    }
  }
  throw Error("recipe is missing parameter " + key);
}

std::string param_str(const std::vector<std::pair<std::string, std::string>>& params,
                      const std::string& key) {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  throw Error("recipe is missing parameter " + key);
}

}  // namespace

const std::vector<std::string>& known_constructors() {
  static const std::vector<std::string> names = {
      "cyclic",      "dihedral",        "dicyclic",
      "sym",         "alt",             "direct_product",
      "frobenius_metacyclic", "frobenius_elem_abelian", "central_extension",
      "preset",
  };
  return names;
}

namespace {

GroupPtr build_recipe_impl(const std::string& ctor,
                           const std::vector<std::pair<std::string, std::string>>& params) {
  if (ctor == "cyclic") return cyclic(static_cast<int>(param_int(params, "n")));
  if (ctor == "dihedral") return dihedral(static_cast<int>(param_int(params, "n")));
  if (ctor == "dicyclic") return dicyclic(static_cast<int>(param_int(params, "n")));
  if (ctor == "sym") return sym(static_cast<int>(param_int(params, "n")));
  if (ctor == "alt") return alt(static_cast<int>(param_int(params, "n")));
  if (ctor == "direct_product")
    return direct_product(resolve_group_name(param_str(params, "a")),
                          resolve_group_name(param_str(params, "b")));
  if (ctor == "frobenius_metacyclic")
    return frobenius_metacyclic(static_cast<int>(param_int(params, "p")),
                                static_cast<int>(param_int(params, "n")),
                                static_cast<int>(param_int(params, "q")),
                                static_cast<int>(param_int(params, "m")));
  if (ctor == "frobenius_elem_abelian") {
    auto kind = parse_module_kind(param_str(params, "module"));
    if (!kind) throw Error("unknown module kind: " + param_str(params, "module"));
    return frobenius_elem_abelian(static_cast<int>(param_int(params, "p")),
                                  static_cast<int>(param_int(params, "k")),
                                  static_cast<int>(param_int(params, "q")), *kind);
  }
  if (ctor == "central_extension")
    return central_extension_example(static_cast<int>(param_int(params, "p")),
                                     static_cast<int>(param_int(params, "q")));
  if (ctor == "preset") return preset(param_str(params, "name"));
  throw Error("unknown constructor: " + ctor);
}

}  // namespace

GroupPtr build_recipe(const std::string& ctor,
                      const std::vector<std::pair<std::string, std::string>>& params,
                      const Caps& caps) {
  GroupPtr G = build_recipe_impl(ctor, params);
  if (G->order() > caps.max_order)
    throw CapExceeded("group order cap exceeded (" + std::to_string(caps.max_order) + ")");
  return G;
}

GroupPtr GroupSpec::build(const Caps& caps) const {
  if (is_recipe()) return build_recipe(ctor, params, caps);
  std::vector<Perm> gens;
  for (const auto& t : gen_text) gens.push_back(Perm::parse(t, degree));
  return Group::enumerate(degree, std::move(gens), caps);
}

const GroupSpec* Catalog::find(const std::string& name) const {
  for (const auto& s : specs)
    if (s.name == name) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Built-in catalog.
// ---------------------------------------------------------------------------

namespace {

GroupSpec recipe_spec(std::string name, std::string ctor,
                      std::vector<std::pair<std::string, std::string>> params,
                      std::map<std::string, std::int64_t> expected) {
  GroupSpec s;
  s.name = std::move(name);
  s.ctor = std::move(ctor);
  s.params = std::move(params);
  s.expected = std::move(expected);
  return s;
}

std::string itos(std::int64_t v) { return std::to_string(v); }

void add_small_groups(Catalog& cat) {
  // census values for abelian groups are the proper nontrivial subgroup
  // counts; the nonabelian ones are classical small lattices
  const std::int64_t cyclic_d[] = {0, 0, 0, 0, 1, 0, 2, 0, 2, 1, 2, 0, 4, 0, 2, 2};
  for (int k = 1; k <= 15; ++k) {
    auto s = recipe_spec("C" + itos(k), "cyclic", {{"n", itos(k)}},
                         {{"d", cyclic_d[k]}, {"order", k}});
    cat.specs.push_back(std::move(s));
  }
  cat.specs.push_back(recipe_spec("V4", "direct_product", {{"a", "C2"}, {"b", "C2"}},
                                  {{"d", 3}, {"order", 4}}));
  cat.specs.push_back(recipe_spec("S3", "sym", {{"n", "3"}},
                                  {{"d", 1}, {"order", 6}, {"derived-length", 2}}));
  cat.specs.push_back(recipe_spec("C4xC2", "direct_product", {{"a", "C4"}, {"b", "C2"}},
                                  {{"d", 6}, {"order", 8}}));
  cat.specs.push_back(recipe_spec("C2xC2xC2", "direct_product", {{"a", "C2xC2"}, {"b", "C2"}},
                                  {{"d", 14}, {"order", 8}}));
  cat.specs.push_back(recipe_spec("D4", "dihedral", {{"n", "4"}},
                                  {{"d", 6}, {"order", 8}, {"nilpotency-class", 2}}));
  cat.specs.push_back(recipe_spec("Q8", "preset", {{"name", "Q8"}},
                                  {{"d", 4}, {"order", 8}, {"nilpotency-class", 2}}));
  cat.specs.push_back(recipe_spec("C3xC3", "direct_product", {{"a", "C3"}, {"b", "C3"}},
                                  {{"d", 4}, {"order", 9}}));
  cat.specs.push_back(recipe_spec("D5", "dihedral", {{"n", "5"}},
                                  {{"d", 1}, {"order", 10}, {"derived-length", 2}}));
  cat.specs.push_back(recipe_spec("C6xC2", "direct_product", {{"a", "C6"}, {"b", "C2"}},
                                  {{"d", 8}, {"order", 12}}));
  cat.specs.push_back(recipe_spec("D6", "dihedral", {{"n", "6"}},
                                  {{"d", 7}, {"order", 12}, {"derived-length", 2}}));
  cat.specs.push_back(recipe_spec("A4", "alt", {{"n", "4"}},
                                  {{"d", 2}, {"order", 12}, {"derived-length", 2}}));
  cat.specs.push_back(recipe_spec("Dic3", "dicyclic", {{"n", "3"}},
                                  {{"d", 3}, {"order", 12}, {"derived-length", 2}}));
  cat.specs.push_back(recipe_spec("D7", "dihedral", {{"n", "7"}},
                                  {{"d", 1}, {"order", 14}, {"derived-length", 2}}));
}

void add_presets(Catalog& cat) {
  cat.specs.push_back(recipe_spec("S4", "preset", {{"name", "S4"}},
                                  {{"d", 7}, {"order", 24}, {"derived-length", 3}}));
  cat.specs.push_back(recipe_spec("SL2(3)", "preset", {{"name", "SL2(3)"}},
                                  {{"d", 4}, {"order", 24}, {"derived-length", 3}}));
  cat.specs.push_back(recipe_spec("A5", "preset", {{"name", "A5"}}, {{"d", 4}, {"order", 60}}));
  cat.specs.push_back(recipe_spec("PSL(2,5)", "preset", {{"name", "PSL(2,5)"}},
                                  {{"d", 4}, {"order", 60}}));
  cat.specs.push_back(recipe_spec("PSL(2,7)", "preset", {{"name", "PSL(2,7)"}},
                                  {{"d", 8}, {"order", 168}}));
  cat.specs.push_back(recipe_spec("A6", "preset", {{"name", "A6"}}, {{"d", 11}, {"order", 360}}));
  cat.specs.push_back(recipe_spec("PSL(2,8)", "preset", {{"name", "PSL(2,8)"}},
                                  {{"d", 6}, {"order", 504}}));
  for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {7, 3}}) {
    cat.specs.push_back(recipe_spec(
        "cext(" + itos(p) + "," + itos(q) + ")", "central_extension",
        {{"p", itos(p)}, {"q", itos(q)}}, {{"d", 3}, {"order", std::int64_t(p) * q * q}}));
  }
}

void add_frobenius_grid(Catalog& cat) {
  const int primes_p[] = {2, 3, 5, 7, 11, 13};
  const int primes_q[] = {2, 3, 5, 7};

  for (int p : primes_p)
    for (int n = 1; n <= 3; ++n)
      for (int q : primes_q)
        for (int m = 1; m <= 2; ++m) {
          if (p == q) continue;
          std::int64_t qm = 1;
          for (int i = 0; i < m; ++i) qm *= q;
          if ((p - 1) % qm != 0) continue;  // no fixed-point-free multiplier
          std::int64_t pn = 1;
          for (int i = 0; i < n; ++i) pn *= p;
          cat.specs.push_back(recipe_spec(
              "frob1(" + itos(p) + "," + itos(n) + "," + itos(q) + "," + itos(m) + ")",
              "frobenius_metacyclic",
              {{"p", itos(p)}, {"n", itos(n)}, {"q", itos(q)}, {"m", itos(m)}},
              {{"d", formula_frob1(n, m)}, {"order", pn * qm}}));
        }

  struct Combo {
    int k;
    ModuleKind kind;
    const char* label;
  };
  const Combo combos2[] = {
      {2, ModuleKind::Irreducible, "irreducible"},
      {2, ModuleKind::HomogeneousScalar, "homogeneous-scalar"},
      {2, ModuleKind::SplitDistinct, "split-distinct"},
  };
  const Combo combos3[] = {
      {3, ModuleKind::Irreducible, "irreducible"},
      {3, ModuleKind::HomogeneousScalar, "homogeneous-scalar"},
      {3, ModuleKind::MixedDims, "mixed-dims"},
      {3, ModuleKind::SplitDistinct, "split-distinct"},
  };
  for (int p : primes_p)
    for (int q : primes_q) {
      for (const auto& c : combos2) {
        if (!module_realizable(p, c.k, q, c.kind)) continue;
        Frob2Case fc = c.kind == ModuleKind::Irreducible ? Frob2Case::Irreducible
                       : c.kind == ModuleKind::SplitDistinct ? Frob2Case::SplitDistinct
                                                             : Frob2Case::Homogeneous;
        cat.specs.push_back(recipe_spec(
            "frob2(" + itos(p) + "," + itos(q) + "," + c.label + ")", "frobenius_elem_abelian",
            {{"p", itos(p)}, {"k", "2"}, {"q", itos(q)}, {"module", c.label}},
            {{"d", formula_frob2(p, q, fc)}, {"order", std::int64_t(p) * p * q}}));
      }
      for (const auto& c : combos3) {
        if (!module_realizable(p, c.k, q, c.kind)) continue;
        Frob3Case fc = c.kind == ModuleKind::Irreducible    ? Frob3Case::Irreducible
                       : c.kind == ModuleKind::MixedDims    ? Frob3Case::TwoComponents
                       : c.kind == ModuleKind::SplitDistinct ? Frob3Case::ThreeComponents
                                                             : Frob3Case::Homogeneous;
        cat.specs.push_back(recipe_spec(
            "frob3(" + itos(p) + "," + itos(q) + "," + c.label + ")", "frobenius_elem_abelian",
            {{"p", itos(p)}, {"k", "3"}, {"q", itos(q)}, {"module", c.label}},
            {{"d", formula_frob3(p, q, fc)}, {"order", std::int64_t(p) * p * p * q}}));
      }
    }
}

// The hand-assembled order <= 15 list is checked once per process against
// classical facts (order, abelianness, center size) when first loaded.
void validate_small_entries(const Catalog& cat) {
  struct Fact {
    const char* name;
    std::int64_t order;
    bool abelian;
    std::int64_t center;
  };
  static const Fact facts[] = {
      {"C1", 1, true, 1},    {"C2", 2, true, 2},    {"C3", 3, true, 3},
      {"C4", 4, true, 4},    {"V4", 4, true, 4},    {"C5", 5, true, 5},
      {"C6", 6, true, 6},    {"S3", 6, false, 1},   {"C7", 7, true, 7},
      {"C8", 8, true, 8},    {"C4xC2", 8, true, 8}, {"C2xC2xC2", 8, true, 8},
      {"D4", 8, false, 2},   {"Q8", 8, false, 2},   {"C9", 9, true, 9},
      {"C3xC3", 9, true, 9}, {"C10", 10, true, 10}, {"D5", 10, false, 1},
      {"C11", 11, true, 11}, {"C12", 12, true, 12}, {"C6xC2", 12, true, 12},
      {"D6", 12, false, 2},  {"A4", 12, false, 1},  {"Dic3", 12, false, 2},
      {"C13", 13, true, 13}, {"C14", 14, true, 14}, {"D7", 14, false, 1},
      {"C15", 15, true, 15},
  };
  for (const auto& f : facts) {
    const GroupSpec* s = cat.find(f.name);
    if (!s) throw Error(std::string("builtin catalog is missing ") + f.name);
    GroupPtr G = s->build();
    if (G->order() != f.order || G->is_abelian() != f.abelian ||
        center(G).order != f.center)
      throw Error(std::string("builtin catalog entry ") + f.name +
                  " does not match its classical invariants");
  }
}

}  // namespace

Catalog builtin_catalog() {
  Catalog cat;
  cat.provenance = "builtin";
  add_small_groups(cat);
  add_presets(cat);
  add_frobenius_grid(cat);
  // order small groups by order, keep insertion order otherwise
  std::stable_sort(cat.specs.begin(), cat.specs.end(), [](const GroupSpec& a, const GroupSpec& b) {
    auto ea = a.expected.find("order");
    auto eb = b.expected.find("order");
    std::int64_t oa = ea == a.expected.end() ? 0 : ea->second;
    std::int64_t ob = eb == b.expected.end() ? 0 : eb->second;
    return oa < ob;
  });
  static const bool validated = [&cat] {
    validate_small_entries(cat);
    return true;
  }();
  (void)validated;
  return cat;
}

// ---------------------------------------------------------------------------
// Catalog file grammar.
// ---------------------------------------------------------------------------

Catalog parse_catalog(const std::string& text, const std::string& provenance) {
  Catalog cat;
  cat.provenance = provenance;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  GroupSpec* cur = nullptr;

  auto split_tokens = [](const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream ts(s);
    std::string t;
    while (ts >> t) toks.push_back(t);
    return toks;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    trimmed = trimmed.substr(first);
    if (trimmed[0] == '#') continue;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ' ||
                                trimmed.back() == '\t'))
      trimmed.pop_back();

    if (trimmed.rfind("group ", 0) == 0) {
      auto toks = split_tokens(trimmed);
      if (toks.size() < 3) throw ParseError(lineno, "expected 'group <name> degree <d>' or 'group <name> recipe <ctor> ...'");
      GroupSpec s;
      s.name = toks[1];
      for (const auto& existing : cat.specs)
        if (existing.name == s.name) throw ParseError(lineno, "duplicate group name: " + s.name);
      if (toks[2] == "degree") {
        if (toks.size() != 4) throw ParseError(lineno, "expected 'group <name> degree <d>'");
        try {
          s.degree = std::stoi(toks[3]);
        } catch (...) {
          throw ParseError(lineno, "bad degree: " + toks[3]);
        }
        if (s.degree < 1) throw ParseError(lineno, "degree must be >= 1");
      } else if (toks[2] == "recipe") {
        if (toks.size() < 4) throw ParseError(lineno, "recipe needs a constructor name");
        s.ctor = toks[3];
        const auto& known = known_constructors();
        if (std::find(known.begin(), known.end(), s.ctor) == known.end())
          throw ParseError(lineno, "unknown constructor: " + s.ctor);
        for (std::size_t i = 4; i < toks.size(); ++i) {
          auto eq = toks[i].find('=');
          if (eq == std::string::npos || eq == 0)
            throw ParseError(lineno, "expected k=v parameter, got: " + toks[i]);
          s.params.emplace_back(toks[i].substr(0, eq), toks[i].substr(eq + 1));
        }
      } else {
        throw ParseError(lineno, "expected 'degree' or 'recipe' after group name");
      }
      cat.specs.push_back(std::move(s));
      cur = &cat.specs.back();
    } else if (trimmed.rfind("gen ", 0) == 0) {
      if (!cur) throw ParseError(lineno, "'gen' before any group");
      if (cur->is_recipe()) throw ParseError(lineno, "'gen' not allowed in a recipe group");
      cur->gen_text.push_back(trimmed.substr(4));
    } else if (trimmed.rfind("expect ", 0) == 0) {
      if (!cur) throw ParseError(lineno, "'expect' before any group");
      auto toks = split_tokens(trimmed.substr(7));
      if (toks.size() != 1) throw ParseError(lineno, "expected 'expect <key>=<value>'");
      auto eq = toks[0].find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError(lineno, "expected 'expect <key>=<value>'");
      std::string key = toks[0].substr(0, eq);
      if (key != "d" && key != "order" && key != "derived-length" && key != "nilpotency-class")
        throw ParseError(lineno, "unknown expectation key: " + key);
      try {
        cur->expected[key] = std::stoll(toks[0].substr(eq + 1));
      } catch (...) {
        throw ParseError(lineno, "bad expectation value: " + toks[0]);
      }
    } else {
      throw ParseError(lineno, "unrecognized line: " + trimmed);
    }
  }
  return cat;
}

std::string print_catalog(const Catalog& cat) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : cat.specs) {
    if (!first) out << "\n";
    first = false;
    if (s.is_recipe()) {
      out << "group " << s.name << " recipe " << s.ctor;
      for (const auto& [k, v] : s.params) out << ' ' << k << '=' << v;
      out << "\n";
    } else {
      out << "group " << s.name << " degree " << s.degree << "\n";
      for (const auto& g : s.gen_text) out << "gen " << g << "\n";
    }
    for (const auto& [k, v] : s.expected) out << "expect " << k << '=' << v << "\n";
  }
  return out.str();
}

}  // namespace cgt
