#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcw/perm_group.hpp"

namespace mcw {

struct CatalogEntry {
  std::string name;
  std::string recipe;
  PermGroup group;
};

// Smoke profile: ten small groups across the abelian, nilpotent, soluble and
// perfect classes. Full profile extends to order 1440.
std::vector<CatalogEntry> build_catalog(const std::string& profile);
std::vector<std::string> catalog_names(const std::string& profile);

// Lookup by catalog name; falls back to reading a group file at the path.
PermGroup resolve_group(const std::string& name_or_path);

PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);  // order 2n on n points, n >= 3
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup elementary_abelian_group(std::uint64_t p, int k);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup quaternion_group();
PermGroup sl23_group();
PermGroup psl27_group();

// Additive group of GF(p^m) extended by the order-k subgroup of the
// multiplicative group, acting on the p^m field elements.
struct FieldSemidirect {
  PermGroup group;
  PermGroup kernel;      // translations
  PermGroup complement;  // multiplications fixing zero
};
FieldSemidirect field_semidirect_parts(std::uint64_t p, int m, std::uint64_t k_order);
PermGroup field_semidirect(std::uint64_t p, int m, std::uint64_t k_order);

PermGroup group_from_file(const std::string& path);
std::string group_to_text(const PermGroup& g);

}  // namespace mcw
