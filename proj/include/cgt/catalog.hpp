#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

/// One catalog entry: either a constructor recipe or explicit generators,
/// plus optional expected properties used by the verification harness.
/// Expected keys: d, order, derived-length, nilpotency-class.
struct GroupSpec {
  std::string name;
  // recipe source (ctor nonempty) ...
  std::string ctor;
  std::vector<std::pair<std::string, std::string>> params;
  // ... or explicit source
  int degree = 0;
  std::vector<std::string> gen_text;
  std::map<std::string, std::int64_t> expected;

  bool is_recipe() const { return !ctor.empty(); }
  GroupPtr build(const Caps& caps = {}) const;

  bool operator==(const GroupSpec& o) const {
    return name == o.name && ctor == o.ctor && params == o.params && degree == o.degree &&
           gen_text == o.gen_text && expected == o.expected;
  }
};

struct Catalog {
  std::vector<GroupSpec> specs;
  std::string provenance;

  const GroupSpec* find(const std::string& name) const;
};

/// All 28 groups of order <= 15 up to isomorphism, the named presets, the
/// central-extension examples, and the realizable Frobenius parameter grid
/// (p <= 13, q <= 7; metacyclic n <= 3, m <= 2).
Catalog builtin_catalog();

/// Line-oriented grammar:
///   group <name> degree <d>       followed by `gen <cycles>` lines, or
///   group <name> recipe <ctor> k=v ...
///   expect <key>=<value>
///   # comments and blank lines are skipped.
Catalog parse_catalog(const std::string& text, const std::string& provenance = "<string>");

std::string print_catalog(const Catalog& cat);

GroupPtr build_recipe(const std::string& ctor,
                      const std::vector<std::pair<std::string, std::string>>& params,
                      const Caps& caps = {});

/// The names of the known recipe constructors.
const std::vector<std::string>& known_constructors();

}  // namespace cgt
