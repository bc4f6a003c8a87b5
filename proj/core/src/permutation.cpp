#include "mcw/permutation.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace mcw {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be non-negative");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image array is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i)
    img[static_cast<std::size_t>(i)] = rhs.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

Permutation Permutation::commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::uint64_t len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      j = images_[static_cast<std::size_t>(j)];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

int Permutation::fixed_point_count() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] == i) ++n;
  return n;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return i;
  return -1;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) throw std::invalid_argument("extended: new degree too small");
  std::vector<int> img(static_cast<std::size_t>(new_degree));
  for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(i)];
  for (int i = degree(); i < new_degree; ++i) img[static_cast<std::size_t>(i)] = i;
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
  if (offset < 0 || offset + degree() > new_degree)
    throw std::invalid_argument("shifted: range does not fit in new degree");
  std::vector<int> img(static_cast<std::size_t>(new_degree));
  for (int i = 0; i < new_degree; ++i) img[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < degree(); ++i)
    img[static_cast<std::size_t>(offset + i)] = offset + images_[static_cast<std::size_t>(i)];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[static_cast<std::size_t>(j)];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

[[noreturn]] void cycle_error(const std::string& what, std::size_t pos) {
  throw std::invalid_argument("cycle notation error at position " + std::to_string(pos) + ": " + what);
}

}  // namespace

Permutation Permutation::from_cycles(int degree, const std::string& text) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') cycle_error("expected '('", i);
    ++i;
    any = true;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      if (i >= text.size() || text[i] < '0' || text[i] > '9') cycle_error("expected point or ')'", i);
      std::size_t start = i;
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') { v = v * 10 + (text[i] - '0'); ++i; }
      if (v < 1 || v > degree) cycle_error("point out of range 1.." + std::to_string(degree), start);
      int pt = static_cast<int>(v - 1);
      if (used[static_cast<std::size_t>(pt)]) cycle_error("point repeated", start);
      used[static_cast<std::size_t>(pt)] = 1;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k])] = cycle[k + 1];
    if (cycle.size() > 1) img[static_cast<std::size_t>(cycle.back())] = cycle.front();
    skip_ws();
  }
  if (!any) cycle_error("empty permutation text, use \"()\" for the identity", 0);
  return Permutation(std::move(img));
}

std::vector<Permutation> parse_perm_list(int degree, const std::string& text) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t a = piece.find_first_not_of(" \t");
    if (a != std::string::npos) {
      std::size_t b = piece.find_last_not_of(" \t");
      out.push_back(Permutation::from_cycles(degree, piece.substr(a, b - a + 1)));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace mcw
