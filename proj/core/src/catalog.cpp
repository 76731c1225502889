#include "gelfand/catalog.hpp"

#include <stdexcept>

namespace gelfand {

namespace {

using Perm = std::vector<std::uint32_t>;

std::vector<std::uint32_t> cyclic_table(std::size_t n) {
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
    }
  }
  return table;
}

PairContext cyclic_pair(std::size_t n) {
  auto g = make_group_from_table("z" + std::to_string(n), n, cyclic_table(n));
  auto k = Subgroup::closure(g, {});
  return make_pair_context("z" + std::to_string(n), std::move(g), std::move(k));
}

PairContext klein_pair() {
  const std::size_t n = 4;
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<std::uint32_t>(i ^ j);
    }
  }
  auto g = make_group_from_table("klein4", n, table);
  auto k = Subgroup::closure(g, {});
  return make_pair_context("klein4", std::move(g), std::move(k));
}

Perm transposition01(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  p[0] = 1;
  p[1] = 0;
  return p;
}

Perm cycle(std::size_t degree, std::size_t length) {
  // (0 1 ... length-1), fixing the remaining points.
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < length; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % length);
  return p;
}

std::uint32_t find_element(const GroupPtr& g, const Perm& target) {
  const auto& perms = g->permutations();
  for (std::uint32_t i = 0; i < perms.size(); ++i) {
    if (perms[i] == target) return i;
  }
  throw std::logic_error("permutation not found in group");
}

GroupPtr symmetric_group(std::size_t degree) {
  return make_group_from_generators("s" + std::to_string(degree), degree,
                                    {transposition01(degree), cycle(degree, degree)});
}

/// (S_n, S_{n-1}) with S_{n-1} the stabilizer of the last point.
PairContext symmetric_pair(std::size_t degree) {
  auto g = symmetric_group(degree);
  std::vector<std::uint32_t> seed{find_element(g, transposition01(degree))};
  if (degree > 3) seed.push_back(find_element(g, cycle(degree, degree - 1)));
  auto k = Subgroup::closure(g, seed);
  const std::string name = "s" + std::to_string(degree) + "/s" + std::to_string(degree - 1);
  return make_pair_context(name, std::move(g), std::move(k));
}

PairContext symmetric_trivial_pair(std::size_t degree) {
  auto g = symmetric_group(degree);
  auto k = Subgroup::closure(g, {});
  const std::string name = "s" + std::to_string(degree) + "/e";
  return make_pair_context(name, std::move(g), std::move(k));
}

/// The cube pair: G = Z_2^3 x| S_3 acting as signed permutations of three
/// coordinates (degree-6 permutations, point i+3 = negated copy of i),
/// K = the S_3 of pure coordinate permutations. Four double cosets, one per
/// sign-flip count.
PairContext cube_pair() {
  const Perm swap01{1, 0, 2, 4, 3, 5};
  const Perm rotate{1, 2, 0, 4, 5, 3};
  const Perm flip0{3, 1, 2, 0, 4, 5};
  auto g = make_group_from_generators("cube3", 6, {swap01, rotate, flip0});
  auto k = Subgroup::closure(
      g, std::vector<std::uint32_t>{find_element(g, swap01), find_element(g, rotate)});
  return make_pair_context("cube3", std::move(g), std::move(k));
}

/// Dihedral group of order 8 (square symmetries) with one reflection.
PairContext dihedral_pair() {
  const Perm rotation{1, 2, 3, 0};
  const Perm reflection{0, 3, 2, 1};
  auto g = make_group_from_generators("d8", 4, {rotation, reflection});
  auto k = Subgroup::closure(g, std::vector<std::uint32_t>{find_element(g, reflection)});
  return make_pair_context("d8", std::move(g), std::move(k));
}

PairContext full_pair() {
  auto g = symmetric_group(3);
  std::vector<std::uint32_t> all(g->order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  auto k = Subgroup::closure(g, all);
  return make_pair_context("full/full", std::move(g), std::move(k));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  for (std::size_t n : {2, 3, 4, 8, 16, 64}) {
    entries.push_back({"z" + std::to_string(n),
                       "cyclic group of order " + std::to_string(n) + " over the trivial subgroup",
                       true, [n] { return cyclic_pair(n); }});
  }
  entries.push_back({"klein4", "Klein four-group over the trivial subgroup", true, klein_pair});
  entries.push_back({"s3/s2", "symmetric group S3 over the point stabilizer S2", true,
                     [] { return symmetric_pair(3); }});
  entries.push_back({"s4/s3", "symmetric group S4 over the point stabilizer S3", true,
                     [] { return symmetric_pair(4); }});
  entries.push_back({"s5/s4", "symmetric group S5 over the point stabilizer S4", true,
                     [] { return symmetric_pair(5); }});
  entries.push_back(
      {"cube3", "signed permutations of 3 coordinates over the coordinate permutations", true,
       cube_pair});
  entries.push_back(
      {"d8", "dihedral group of order 8 over a reflection subgroup", true, dihedral_pair});
  entries.push_back({"full/full", "S3 over itself (one double coset)", true, full_pair});
  entries.push_back({"s3/e", "S3 over the trivial subgroup (not Gelfand)", false,
                     [] { return symmetric_trivial_pair(3); }});
  entries.push_back({"s4/e", "S4 over the trivial subgroup (not Gelfand)", false,
                     [] { return symmetric_trivial_pair(4); }});
  return entries;
}

}  // namespace

PairContext make_pair_context(std::string name, GroupPtr group, Subgroup subgroup) {
  auto cosets = double_cosets(group, subgroup);
  return {std::move(name), std::move(group), std::move(subgroup), std::move(cosets)};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

PairContext build_pair(const std::string& name) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.name == name) return entry.build();
  }
  throw std::invalid_argument("unknown pair '" + name + "'");
}

}  // namespace gelfand
