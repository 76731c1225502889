#pragma once

#include <functional>
#include <string>

#include "gelfand/cosets.hpp"

namespace gelfand {

/// A group/subgroup pair with its double coset space.
struct PairContext {
  std::string name;
  GroupPtr group;
  Subgroup subgroup;
  CosetSpacePtr cosets;
};

PairContext make_pair_context(std::string name, GroupPtr group, Subgroup subgroup);

/// One built-in pair: desk-scale groups with a known Gelfand verdict.
struct CatalogEntry {
  std::string name;
  std::string description;
  bool expect_gelfand = true;
  std::function<PairContext()> build;
};

/// The built-in catalog: cyclic pairs z2..z64 and klein4 over the trivial
/// subgroup, the symmetric pairs s3/s2, s4/s3, s5/s4, the cube pair
/// (Z_2^3 x| S_3, S_3), the dihedral pair d8, the one-class pair full/full,
/// and the negative controls s3/e, s4/e.
const std::vector<CatalogEntry>& catalog();

/// Builds a catalog pair by name; throws std::invalid_argument for unknown
/// names.
PairContext build_pair(const std::string& name);

}  // namespace gelfand
