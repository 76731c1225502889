#pragma once

#include <memory>

#include "gelfand/functions.hpp"
#include "gelfand/group.hpp"

namespace gelfand {

/// The double coset space K\G/K: a partition of the element indices into
/// classes D_0..D_d, where D_0 = K. Classes are ordered by their smallest
/// element index, and each class is the saturation x -> K x K.
class DoubleCosetSpace {
 public:
  DoubleCosetSpace(GroupPtr group, Subgroup subgroup);

  const GroupPtr& group() const { return group_; }
  const Subgroup& subgroup() const { return subgroup_; }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<std::uint32_t>>& classes() const { return classes_; }
  const std::vector<std::uint32_t>& class_members(std::uint32_t c) const { return classes_[c]; }
  std::size_t class_size(std::uint32_t c) const { return classes_[c].size(); }
  std::uint32_t rep_of(std::uint32_t c) const { return classes_[c][0]; }
  std::uint32_t class_of(std::uint32_t x) const { return class_of_[x]; }
  /// Index of the class holding the inverses of class c.
  std::uint32_t inverse_class_of(std::uint32_t c) const { return inverse_class_[c]; }
  /// Haar mass |D_c|/n of class c.
  double class_weight(std::uint32_t c) const {
    return static_cast<double>(classes_[c].size()) / static_cast<double>(group_->order());
  }

 private:
  GroupPtr group_;
  Subgroup subgroup_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_class_;
};

using CosetSpacePtr = std::shared_ptr<const DoubleCosetSpace>;

CosetSpacePtr double_cosets(GroupPtr group, Subgroup subgroup);

/// A bi-K-invariant function, stored as one value per double coset.
class BiInvariantFunction {
 public:
  BiInvariantFunction(CosetSpacePtr space, std::vector<Complex> class_values);

  const CosetSpacePtr& space() const { return space_; }
  const std::vector<Complex>& class_values() const { return class_values_; }
  Complex value_on(std::uint32_t c) const { return class_values_[c]; }
  std::size_t size() const { return class_values_.size(); }

  /// Expansion to the group: f(x) = class_values[class_of(x)].
  GroupFunction expand() const;

 private:
  CosetSpacePtr space_;
  std::vector<Complex> class_values_;
};

BiInvariantFunction operator+(const BiInvariantFunction& f, const BiInvariantFunction& g);
BiInvariantFunction operator-(const BiInvariantFunction& f, const BiInvariantFunction& g);
BiInvariantFunction operator*(Complex c, const BiInvariantFunction& f);

/// Indicator of class c.
BiInvariantFunction class_indicator(const CosetSpacePtr& space, std::uint32_t c);

/// Projection onto bi-K-invariant functions by double averaging over K x K,
/// f#(x) = (1/|K|^2) sum_{k1,k2} f(k1 x k2); equals the plain average of f
/// over the double coset of x, which is how it is computed.
BiInvariantFunction project_bi_invariant(const GroupFunction& f, const CosetSpacePtr& space);

/// L^p norm evaluated through class weights (agrees with lp_norm(expand())).
double lp_norm(const BiInvariantFunction& f, double p);

Complex inner_product(const BiInvariantFunction& f, const BiInvariantFunction& g);

}  // namespace gelfand
