#include "cgt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt {

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error("permutation images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.img_.resize(degree);
  for (int i = 0; i < degree; ++i) p.img_[i] = static_cast<std::uint16_t>(i);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw Error("compose: degree mismatch");
  Perm r;
  std::vector<std::uint16_t> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = static_cast<std::uint16_t>(b[a[i]]);
  return Perm(std::move(img));
}

std::int64_t perm_order(const Perm& p) {
  std::vector<bool> seen(p.degree(), false);
  std::int64_t ord = 1;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = p[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t perm_hash(const Perm& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Perm::str() const {
  std::vector<bool> seen(degree(), false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(' << (i + 1);
    seen[i] = true;
    for (int j = img_[i]; j != i; j = img_[j]) {
      seen[j] = true;
      out << ' ' << (j + 1);
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

namespace {

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<std::uint16_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint16_t>(i);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error("bad cycle notation: expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("bad cycle notation: expected point number");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) throw Error("cycle point out of range 1.." + std::to_string(degree));
      if (used[v - 1]) throw Error("point repeated in cycle notation");
      used[v - 1] = true;
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
    }
    if (pos >= text.size()) throw Error("bad cycle notation: missing ')'");
    ++pos;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = static_cast<std::uint16_t>(cyc[(k + 1) % cyc.size()]);
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm parse_images(const std::string& text, int degree) {
  std::istringstream in(text);
  std::vector<std::uint16_t> img;
  long v;
  while (in >> v) {
    if (v < 1 || v > degree) throw Error("image out of range 1.." + std::to_string(degree));
    img.push_back(static_cast<std::uint16_t>(v - 1));
  }
  if (!in.eof()) throw Error("bad image list");
  if (static_cast<int>(img.size()) != degree)
    throw Error("image list has wrong length for degree " + std::to_string(degree));
  return Perm(std::move(img));
}

}  // namespace

Perm Perm::parse(const std::string& text, int degree) {
  if (degree < 1 || degree > 65535) throw Error("degree out of range 1..65535");
  if (text.find('(') != std::string::npos) return parse_cycles(text, degree);
  return parse_images(text, degree);
}

}  // namespace cgt
