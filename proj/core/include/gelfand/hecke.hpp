#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "gelfand/cosets.hpp"

namespace gelfand {

/// Convolution with respect to the normalized Haar measure:
/// (f * g)(x) = (1/n) sum_y f(x y^-1) g(y).
/// For finite (hence unimodular) groups this equals (1/n) sum_y f(y) g(y^-1 x).
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// Structure constants of the double-coset algebra:
/// 1_{D_i} * 1_{D_j} = sum_k c[i][j][k] 1_{D_k}.
///
/// Every c[i][j][k] is the exact rational N[i][j][k] / (n |D_k|) where
/// N[i][j][k] = #{(a,b) in D_i x D_j : ab in D_k} is held as an integer, so
/// commutativity of the algebra is decided exactly.
class StructureConstants {
 public:
  explicit StructureConstants(CosetSpacePtr space);

  const CosetSpacePtr& space() const { return space_; }
  std::size_t class_count() const { return dim_; }

  /// Integer product count N[i][j][k].
  std::int64_t count(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return counts_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  /// Rational coefficient c[i][j][k] as a double.
  double coefficient(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;

  /// Matrix of g -> 1_{D_i} * g in the class-indicator basis,
  /// entries M_i(k, j) = c[i][j][k]. The M_i pairwise commute exactly when
  /// the pair is Gelfand.
  Eigen::MatrixXd operator_matrix(std::uint32_t i) const;

 private:
  CosetSpacePtr space_;
  std::size_t dim_ = 0;
  std::vector<std::int64_t> counts_;
};

StructureConstants structure_constants(const CosetSpacePtr& space);

/// Matrix of convolution by 1_{D_i} acting on bi-invariant functions.
Eigen::MatrixXd convolution_operator_matrix(const CosetSpacePtr& space, std::uint32_t i);

/// Outcome of the commutativity test of L^1(K\G/K). When the verdict is
/// false, `witness` holds a triple (i, j, x) with
/// (1_{D_i} * 1_{D_j})(x) != (1_{D_j} * 1_{D_i})(x).
struct GelfandCertificate {
  bool verdict = false;
  std::optional<std::array<std::uint32_t, 3>> witness;
  double max_asymmetry = 0.0;
};

/// Decides the Gelfand property by exact integer comparison of the
/// structure-constant tensor (indicators span the algebra).
GelfandCertificate is_gelfand_pair(const StructureConstants& sc);
GelfandCertificate is_gelfand_pair(const CosetSpacePtr& space);
GelfandCertificate is_gelfand_pair(GroupPtr group, const Subgroup& subgroup);

/// Expansion of f * g through the structure constants; f, g bi-invariant.
BiInvariantFunction convolve(const StructureConstants& sc, const BiInvariantFunction& f,
                             const BiInvariantFunction& g);

}  // namespace gelfand
