#include "cgt/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/census.hpp"
#include "cgt/constructors.hpp"
#include "cgt/error.hpp"
#include "cgt/verify.hpp"

namespace cgt {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Catalog load_catalog(const std::string& path) {
  if (path.empty()) return builtin_catalog();
  return parse_catalog(read_file(path), path);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Builds a group from a reference: a catalog/builtin name, a family name, or
// a recipe expression like "frobenius_metacyclic p=7 n=1 q=3 m=1".
GroupPtr group_from_ref(const std::string& ref, const std::string& file,
                        const std::string& name, const Caps& caps) {
  if (!file.empty()) {
    Catalog cat = load_catalog(file);
    const GroupSpec* s = cat.find(name.empty() ? ref : name);
    if (!s) throw Error("no group named '" + (name.empty() ? ref : name) + "' in " + file);
    return s->build(caps);
  }
  Catalog builtin = builtin_catalog();
  if (const GroupSpec* s = builtin.find(ref)) return s->build(caps);
  // recipe expression?
  std::istringstream in(ref);
  std::string ctor;
  in >> ctor;
  const auto& known = known_constructors();
  if (std::find(known.begin(), known.end(), ctor) != known.end()) {
    std::vector<std::pair<std::string, std::string>> params;
    std::string tok;
    while (in >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw Error("expected k=v parameter: " + tok);
      params.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return build_recipe(ctor, params, caps);
  }
  GroupPtr G = resolve_group_name(ref);
  if (G->order() > caps.max_order)
    throw CapExceeded("group order cap exceeded (" + std::to_string(caps.max_order) + ")");
  return G;
}

struct GridRange {
  int lo = 0, hi = 0;
};

// grid syntax: "p=5..13,q=2..5,n=1..3,m=1..2" (single values allowed)
std::map<std::string, GridRange> parse_grid(const std::string& text) {
  std::map<std::string, GridRange> out;
  if (text.empty()) return out;
  for (const auto& part : split_commas(text)) {
    auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("bad grid entry: " + part);
    std::string key = part.substr(0, eq);
    std::string val = part.substr(eq + 1);
    GridRange r;
    auto dots = val.find("..");
    try {
      if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(val);
      } else {
        r.lo = std::stoi(val.substr(0, dots));
        r.hi = std::stoi(val.substr(dots + 2));
      }
    } catch (...) {
      throw Error("bad grid entry: " + part);
    }
    if (r.lo > r.hi) throw Error("empty grid range: " + part);
    out[key] = r;
  }
  return out;
}

GridRange grid_or(const std::map<std::string, GridRange>& grid, const std::string& key, int lo,
                  int hi) {
  auto it = grid.find(key);
  return it == grid.end() ? GridRange{lo, hi} : it->second;
}

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

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

int cmd_census(const std::string& ref, const std::string& file, const std::string& name,
               const Caps& caps, std::ostream& out) {
  GroupPtr G = group_from_ref(ref, file, name, caps);
  auto rep = census(G, caps);
  out << "group: " << (file.empty() ? ref : (name.empty() ? ref : name)) << "\n";
  out << "degree: " << G->degree() << "\n";
  out << "order: " << rep.group_order << "\n";
  out << "D(G): " << rep.d_value << "\n";
  out << "classes (nontrivial, non-self-normalizing):\n";
  out << "order,class_size,normalizer_order\n";
  for (const auto& rec : rep.class_records)
    out << rec.representative.order << ',' << rec.class_size << ',' << rec.normalizer_order
        << "\n";
  return 0;
}

int cmd_verify(const std::string& catalog_path, const std::string& checks,
               const std::string& format, const Caps& caps, std::ostream& out,
               std::ostream& err) {
  Catalog cat = load_catalog(catalog_path);
  auto report = verify(cat, split_commas(checks), caps);
  if (format == "json")
    out << report_json(report);
  else
    out << report_csv(report);
  std::int64_t failed = report.failure_count();
  err << "verify: " << report.records.size() << " checks, " << failed << " failures\n";
  return failed == 0 ? 0 : 1;
}

int cmd_family(const std::string& lemma, const std::string& grid_text, const Caps& caps,
               std::ostream& out) {
  auto grid = parse_grid(grid_text);
  auto pr = grid_or(grid, "p", 2, 13);
  auto qr = grid_or(grid, "q", 2, 7);
  out << "lemma,p,n,q,m,case,order,formula,census,status\n";
  std::int64_t mismatches = 0;

  if (lemma == "frob1") {
    auto nr = grid_or(grid, "n", 1, 3);
    auto mr = grid_or(grid, "m", 1, 2);
    for (int p = pr.lo; p <= pr.hi; ++p) {
      if (!is_prime_int(p)) continue;
      for (int n = nr.lo; n <= nr.hi; ++n)
        for (int q = qr.lo; q <= qr.hi; ++q) {
          if (!is_prime_int(q) || q == p) continue;
          for (int m = mr.lo; m <= mr.hi; ++m) {
            std::int64_t qm = 1;
            for (int i = 0; i < m; ++i) qm *= q;
            if ((p - 1) % qm != 0) continue;
            GroupPtr G = frobenius_metacyclic(p, n, q, m);
            std::int64_t brute = census(G, caps).d_value;
            std::int64_t formula = formula_frob1(n, m);
            bool ok = formula == brute;
            if (!ok) ++mismatches;
            out << "frob1," << p << ',' << n << ',' << q << ',' << m << ",," << G->order() << ','
                << formula << ',' << brute << ',' << (ok ? "ok" : "MISMATCH") << "\n";
          }
        }
    }
  } else if (lemma == "frob2" || lemma == "frob3") {
    const int k = lemma == "frob2" ? 2 : 3;
    const std::vector<ModuleKind> kinds =
        k == 2 ? std::vector<ModuleKind>{ModuleKind::Irreducible, ModuleKind::HomogeneousScalar,
                                         ModuleKind::SplitDistinct}
               : std::vector<ModuleKind>{ModuleKind::Irreducible, ModuleKind::HomogeneousScalar,
                                         ModuleKind::MixedDims, ModuleKind::SplitDistinct};
    for (int p = pr.lo; p <= pr.hi; ++p) {
      if (!is_prime_int(p)) continue;
      for (int q = qr.lo; q <= qr.hi; ++q) {
        if (!is_prime_int(q) || q == p) continue;
        for (ModuleKind kind : kinds) {
          if (!module_realizable(p, k, q, kind)) continue;
          GroupPtr G = frobenius_elem_abelian(p, k, q, kind);
          std::int64_t brute = census(G, caps).d_value;
          std::int64_t formula;
          if (k == 2) {
            Frob2Case fc = kind == ModuleKind::Irreducible    ? Frob2Case::Irreducible
                           : kind == ModuleKind::SplitDistinct ? Frob2Case::SplitDistinct
                                                                : Frob2Case::Homogeneous;
            formula = formula_frob2(p, q, fc);
          } else {
            Frob3Case fc = kind == ModuleKind::Irreducible     ? Frob3Case::Irreducible
                           : kind == ModuleKind::MixedDims     ? Frob3Case::TwoComponents
                           : kind == ModuleKind::SplitDistinct ? Frob3Case::ThreeComponents
                                                               : Frob3Case::Homogeneous;
            formula = formula_frob3(p, q, fc);
          }
          bool ok = formula == brute;
          if (!ok) ++mismatches;
          out << lemma << ',' << p << ",," << q << ",," << module_kind_name(kind) << ','
              << G->order() << ',' << formula << ',' << brute << ',' << (ok ? "ok" : "MISMATCH")
              << "\n";
        }
      }
    }
  } else {
    throw Error("unknown lemma: " + lemma + " (expected frob1, frob2 or frob3)");
  }
  return mismatches == 0 ? 0 : 1;
}

int cmd_table(const std::string& catalog_path, const std::string& format, const Caps& caps,
              std::ostream& out) {
  Catalog cat = load_catalog(catalog_path);
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& s : cat.specs) {
      GroupPtr G = s.build(caps);
      auto rep = census(G, caps);
      nlohmann::ordered_json row;
      row["name"] = s.name;
      row["order"] = rep.group_order;
      row["d"] = rep.d_value;
      row["subgroup_classes"] = rep.total_subgroup_classes;
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "name,order,d,subgroup_classes\n";
    for (const auto& s : cat.specs) {
      GroupPtr G = s.build(caps);
      auto rep = census(G, caps);
      out << csv_escape(s.name) << ',' << rep.group_order << ',' << rep.d_value << ','
          << rep.total_subgroup_classes << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"subgroup census and verification tool"};
  app.require_subcommand(1);

  std::int64_t max_order = Caps{}.max_order;
  std::int64_t max_subgroups = Caps{}.max_subgroups;
  app.add_option("--max-order", max_order, "group order cap");
  app.add_option("--max-subgroups", max_subgroups, "subgroup count cap");

  auto* c_census = app.add_subcommand("census", "census of one group");
  std::vector<std::string> ref_parts;
  std::string census_file, census_name;
  c_census->add_option("ref", ref_parts, "group name or recipe expression");
  c_census->add_option("--file", census_file, "catalog file");
  c_census->add_option("--name", census_name, "group name within --file");

  auto* c_verify = app.add_subcommand("verify", "run the verification checks");
  std::string verify_catalog, verify_checks, verify_format = "csv";
  c_verify->add_option("--catalog", verify_catalog, "catalog file (default: builtin)");
  c_verify->add_option("--checks", verify_checks, "comma-separated check ids (default: all)");
  c_verify->add_option("--format", verify_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* c_family = app.add_subcommand("family", "compare a counting formula with brute force");
  std::string family_lemma, family_grid;
  c_family->add_option("lemma", family_lemma, "frob1, frob2 or frob3")->required();
  c_family->add_option("--grid", family_grid, "parameter ranges, e.g. p=5..13,q=2..5");

  auto* c_table = app.add_subcommand("table", "census table over the catalog");
  std::string table_catalog, table_format = "csv";
  c_table->add_option("--catalog", table_catalog, "catalog file (default: builtin)");
  c_table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Caps caps;
  caps.max_order = max_order;
  caps.max_subgroups = max_subgroups;

  try {
    if (c_census->parsed()) {
      if (ref_parts.empty() && census_name.empty())
        throw Error("census: missing group reference");
      std::string ref;
      for (const auto& part : ref_parts) {
        if (!ref.empty()) ref += ' ';
        ref += part;
      }
      return cmd_census(ref, census_file, census_name, caps, out);
    }
    if (c_verify->parsed()) return cmd_verify(verify_catalog, verify_checks, verify_format, caps, out, err);
    if (c_family->parsed()) return cmd_family(family_lemma, family_grid, caps, out);
    if (c_table->parsed()) return cmd_table(table_catalog, table_format, caps, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cgt
