#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gelfand {

/// Normalized Haar measure on a finite carrier: mass 1/|carrier| per point,
/// total mass exactly 1 (the fraction 1/carrier_size is held exactly).
struct HaarMeasure {
  std::size_t carrier_size = 1;
  double weight() const { return 1.0 / static_cast<double>(carrier_size); }
};

/// A finite group given by its Cayley table. Element 0 is the identity.
///
/// Construction validates the table: row/column 0 are the identity
/// permutation, every row and column is a permutation of 0..n-1, the table
/// is associative (exhaustively for n <= 64, on >= 10*n^2 sampled triples
/// otherwise) and every element has a two-sided inverse.
class FiniteGroup {
 public:
  /// Builds a group from a row-major n x n table. Throws std::invalid_argument
  /// on a non-Latin-square or non-associative table or a misplaced identity.
  static FiniteGroup from_table(std::string name, std::size_t order,
                                std::vector<std::uint32_t> table);

  /// Builds a group as the closure of permutation generators of the given
  /// degree (images of 0..degree-1). Elements are indexed in BFS discovery
  /// order over the generators as listed, identity first. Throws when the
  /// closure exceeds `cap` (default: order_cap()).
  static FiniteGroup from_generators(std::string name, std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& generators,
                                     std::size_t cap = 0);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  HaarMeasure haar() const { return HaarMeasure{order_}; }

  /// Permutation images of each element when the group was built from
  /// generators; empty for table-built groups.
  const std::vector<std::vector<std::uint32_t>>& permutations() const { return perms_; }

 private:
  FiniteGroup() = default;
  void build_inverses();
  void validate() const;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::vector<std::uint32_t>> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group_from_table(std::string name, std::size_t order,
                               std::vector<std::uint32_t> table);
GroupPtr make_group_from_generators(std::string name, std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& generators,
                                    std::size_t cap = 0);

/// A subgroup stored as the closure of a seed set, sorted ascending.
/// Always contains the identity.
class Subgroup {
 public:
  /// Closure of `seed` under multiplication and inversion.
  /// Throws std::out_of_range when an index is not an element of `group`.
  static Subgroup closure(GroupPtr group, std::span<const std::uint32_t> seed);

  const GroupPtr& parent() const { return group_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::uint32_t x) const { return mask_[x] != 0; }

  HaarMeasure haar() const { return HaarMeasure{members_.size()}; }

 private:
  GroupPtr group_;
  std::vector<std::uint32_t> members_;
  std::vector<char> mask_;
};

}  // namespace gelfand
