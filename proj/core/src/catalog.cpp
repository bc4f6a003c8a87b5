#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "galois.hpp"
#include "mcw/catalog.hpp"
#include "mcw/group_ops.hpp"

namespace mcw {

namespace {

Permutation rotation(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(img));
}

}  // namespace

PermGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {rotation(n)});
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<int> flip(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) flip[static_cast<std::size_t>(i)] = (n - i) % n;
  return PermGroup(n, {rotation(n), Permutation(std::move(flip))});
}

PermGroup symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  Permutation swap = Permutation::from_cycles(n, "(1 2)");
  if (n == 2) return PermGroup(2, {swap});
  return PermGroup(n, {swap, rotation(n)});
}

PermGroup alternating_group(int n) {
  if (n < 1) throw std::invalid_argument("alternating group needs n >= 1");
  if (n <= 2) return PermGroup::trivial(std::max(n, 1));
  Permutation three = Permutation::from_cycles(n, "(1 2 3)");
  if (n == 3) return PermGroup(3, {three});
  if (n % 2 == 1) return PermGroup(n, {three, rotation(n)});
  std::vector<int> img(static_cast<std::size_t>(n));
  img[0] = 0;
  for (int i = 1; i < n; ++i) img[static_cast<std::size_t>(i)] = i % (n - 1) + 1;
  return PermGroup(n, {three, Permutation(std::move(img))});
}

PermGroup elementary_abelian_group(std::uint64_t p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("elementary abelian group needs a prime");
  if (k < 1) throw std::invalid_argument("elementary abelian group needs k >= 1");
  const int block = static_cast<int>(p);
  std::vector<Permutation> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(static_cast<std::size_t>(block * k));
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < block; ++j)
      img[static_cast<std::size_t>(i * block + j)] = i * block + (j + 1) % block;
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(block * k, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const int degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& x : a.generators()) gens.push_back(x.extended(degree));
  for (const Permutation& y : b.generators()) gens.push_back(y.shifted(a.degree(), degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup quaternion_group() {
  // Regular action on {1,i,j,k,-1,-i,-j,-k}; generators are left
  // multiplication by i and by j.
  return PermGroup(8, {Permutation::from_cycles(8, "(1 2 5 6)(3 4 7 8)"),
                       Permutation::from_cycles(8, "(1 3 5 7)(2 8 6 4)")});
}

PermGroup sl23_group() {
  // Action on the eight nonzero vectors of F3^2, indexed 0..7 by 3a+b-1 for
  // the vector (a, b).
  auto idx = [](int a, int b) { return 3 * a + b - 1; };
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> img(8);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        int na = (m00 * a + m01 * b) % 3;
        int nb = (m10 * a + m11 * b) % 3;
        img[static_cast<std::size_t>(idx(a, b))] = idx(na, nb);
      }
    return Permutation(std::move(img));
  };
  return PermGroup(8, {act(1, 1, 0, 1), act(0, 2, 1, 0)});
}

PermGroup psl27_group() {
  // Projective line over F7; point 7 is infinity. Generated by z -> z+1 and
  // z -> -1/z.
  std::vector<int> shift{1, 2, 3, 4, 5, 6, 0, 7};
  std::vector<int> inv(8);
  inv[7] = 0;
  inv[0] = 7;
  for (int z = 1; z < 7; ++z) {
    int zinv = 1;
    while (z * zinv % 7 != 1) ++zinv;
    inv[static_cast<std::size_t>(z)] = (7 - zinv) % 7;
  }
  return PermGroup(8, {Permutation(std::move(shift)), Permutation(std::move(inv))});
}

FieldSemidirect field_semidirect_parts(std::uint64_t p, int m, std::uint64_t k_order) {
  if (!is_prime(p)) throw std::invalid_argument("field semidirect product needs a prime");
  gf::GaloisField field(p, m);
  if (k_order < 2 || (field.size() - 1) % k_order != 0)
    throw std::invalid_argument("complement order must be a nontrivial divisor of p^m - 1");
  const int degree = static_cast<int>(field.size());
  std::vector<Permutation> translations;
  for (int i = 0; i < m; ++i) {
    int e = field.basis_element(i);
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) img[static_cast<std::size_t>(x)] = field.add(x, e);
    translations.push_back(Permutation(std::move(img)));
  }
  int root = field.primitive_root();
  int scalar = root;
  for (std::uint64_t i = 1; i < (field.size() - 1) / k_order; ++i) scalar = field.mul(scalar, root);
  std::vector<int> mul_img(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) mul_img[static_cast<std::size_t>(x)] = field.mul(scalar, x);
  Permutation multiplier(std::move(mul_img));
  std::vector<Permutation> gens = translations;
  gens.push_back(multiplier);
  return {PermGroup(degree, std::move(gens)), PermGroup(degree, std::move(translations)),
          PermGroup(degree, {std::move(multiplier)})};
}

PermGroup field_semidirect(std::uint64_t p, int m, std::uint64_t k_order) {
  return field_semidirect_parts(p, m, k_order).group;
}

namespace {

std::vector<CatalogEntry> build_entries(bool full) {
  struct Row {
    std::string name;
    std::string recipe;
    std::uint64_t order;
    PermGroup group;
  };
  std::vector<Row> rows;
  rows.push_back({"C2", "cyclic 2", 2, cyclic_group(2)});
  rows.push_back({"C6", "cyclic 6", 6, cyclic_group(6)});
  rows.push_back({"V4", "elementary_abelian 2 2", 4, elementary_abelian_group(2, 2)});
  rows.push_back({"S3", "symmetric 3", 6, symmetric_group(3)});
  rows.push_back({"D8", "dihedral 4", 8, dihedral_group(4)});
  rows.push_back({"Q8", "quaternion", 8, quaternion_group()});
  rows.push_back({"A4", "alternating 4", 12, alternating_group(4)});
  rows.push_back({"S4", "symmetric 4", 24, symmetric_group(4)});
  rows.push_back({"SL(2,3)", "sl23", 24, sl23_group()});
  rows.push_back({"C3^2:C8", "semidirect 3 2", 72, field_semidirect(3, 2, 8)});
  if (full) {
    for (int n = 5; n <= 16; ++n)
      rows.push_back({"D" + std::to_string(2 * n), "dihedral " + std::to_string(n),
                      static_cast<std::uint64_t>(2 * n), dihedral_group(n)});
    rows.push_back({"C2^3", "elementary_abelian 2 3", 8, elementary_abelian_group(2, 3)});
    rows.push_back({"C2^4", "elementary_abelian 2 4", 16, elementary_abelian_group(2, 4)});
    rows.push_back({"S3xC4", "direct_product S3 C4", 24, direct_product(symmetric_group(3), cyclic_group(4))});
    rows.push_back({"F20", "semidirect 5 1", 20, field_semidirect(5, 1, 4)});
    rows.push_back({"F21", "semidirect 7 1 3", 21, field_semidirect(7, 1, 3)});
    rows.push_back({"A5", "alternating 5", 60, alternating_group(5)});
    rows.push_back({"S5", "symmetric 5", 120, symmetric_group(5)});
    rows.push_back({"PSL(2,7)", "psl27", 168, psl27_group()});
    rows.push_back({"A5xS4", "direct_product A5 S4", 1440, direct_product(alternating_group(5), symmetric_group(4))});
  }
  std::vector<CatalogEntry> out;
  out.reserve(rows.size());
  for (Row& r : rows) {
    if (r.group.order() != r.order)
      throw std::logic_error("catalog entry " + r.name + " has unexpected order");
    out.push_back({std::move(r.name), std::move(r.recipe), std::move(r.group)});
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(const std::string& profile) {
  if (profile == "smoke") return build_entries(false);
  if (profile == "full") return build_entries(true);
  throw std::invalid_argument("unknown catalog profile: " + profile);
}

std::vector<std::string> catalog_names(const std::string& profile) {
  std::vector<std::string> out;
  for (const CatalogEntry& e : build_catalog(profile)) out.push_back(e.name);
  return out;
}

PermGroup resolve_group(const std::string& name_or_path) {
  for (CatalogEntry& e : build_catalog("full"))
    if (e.name == name_or_path) return std::move(e.group);
  return group_from_file(name_or_path);
}

PermGroup group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::string line;
  int degree = -1;
  bool in_gens = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t stop = line.find_last_not_of(" \t\r");
    std::string body = line.substr(start, stop - start + 1);
    if (body.empty() || body[0] == '#') continue;
    if (body.rfind("degree:", 0) == 0) {
      degree = std::stoi(body.substr(7));
      continue;
    }
    if (body == "gens:") {
      if (degree < 1) throw std::invalid_argument("group file must set degree before gens");
      in_gens = true;
      continue;
    }
    if (!in_gens) throw std::invalid_argument("unexpected line in group file: " + body);
    gens.push_back(Permutation::from_cycles(degree, body));
  }
  if (degree < 1) throw std::invalid_argument("group file has no degree header");
  return PermGroup(degree, std::move(gens));
}

std::string group_to_text(const PermGroup& g) {
  std::ostringstream out;
  out << "degree: " << g.degree() << "\n";
  out << "gens:\n";
  for (const Permutation& s : g.generators()) out << s.cycle_string() << "\n";
  return out.str();
}

}  // namespace mcw
