#pragma once

#include <memory>

#include <Eigen/Dense>

#include "gelfand/hecke.hpp"

namespace gelfand {

/// A spherical function of a finite Gelfand pair: bi-K-invariant,
/// phi(e) = 1, multiplicative under the K-averaged product
/// (1/|K|) sum_k phi(x k y) = phi(x) phi(y), positive-semidefinite and
/// Hermitian-symmetric (phi(x^-1) = conj phi(x)).
class SphericalFunction {
 public:
  SphericalFunction(CosetSpacePtr space, std::vector<Complex> class_values, int index,
                    double psd_min_eigenvalue, double l2_norm_sq);

  const CosetSpacePtr& space() const { return space_; }
  const std::vector<Complex>& class_values() const { return class_values_; }
  Complex value_on(std::uint32_t c) const { return class_values_[c]; }
  int index() const { return index_; }
  /// Minimum eigenvalue of the full Gram matrix [phi(x^-1 y)];
  /// NaN when the group exceeds the PSD cap and no certificate was computed.
  double psd_min_eigenvalue() const { return psd_min_eigenvalue_; }
  /// (1/n) sum_x |phi(x)|^2.
  double l2_norm_sq() const { return l2_norm_sq_; }

  GroupFunction expand() const;
  BiInvariantFunction as_bi_invariant() const;

 private:
  CosetSpacePtr space_;
  std::vector<Complex> class_values_;
  int index_ = 0;
  double psd_min_eigenvalue_ = 0.0;
  double l2_norm_sq_ = 0.0;
};

/// The d+1 spherical functions of a pair with d+1 double cosets, ordered
/// deterministically: the trivial function first, the rest ascending by the
/// real parts of their values on D_1, D_2, ... with ties broken by
/// lexicographic comparison of the class values rounded to 1e-9.
class SphericalBasis {
 public:
  SphericalBasis(CosetSpacePtr space, std::vector<SphericalFunction> functions);

  const CosetSpacePtr& space() const { return space_; }
  std::size_t size() const { return functions_.size(); }
  const SphericalFunction& function(std::size_t j) const { return functions_[j]; }
  const std::vector<SphericalFunction>& functions() const { return functions_; }

 private:
  CosetSpacePtr space_;
  std::vector<SphericalFunction> functions_;
};

using BasisPtr = std::shared_ptr<const SphericalBasis>;

/// Computes the spherical basis as the common eigenvectors of the commuting
/// convolution operators {M_i}, rescaled to value 1 on D_0 and validated
/// against every SphericalFunction invariant.
///
/// Throws std::invalid_argument when the pair is not Gelfand and
/// std::runtime_error when simultaneous diagonalization fails after the
/// retry budget and block-refinement fallback.
BasisPtr spherical_basis(const CosetSpacePtr& space);

/// max over (x, y) of |(1/|K|) sum_k phi(x k y) - phi(x) phi(y)|.
/// Both sides are constant on double cosets in x and y, so the maximum is
/// evaluated over class representatives.
double functional_equation_residual(const SphericalFunction& phi);

/// Gram-matrix certificate for positive-semidefiniteness of f on G.
struct PsdCertificate {
  bool verdict = false;
  double min_eigenvalue = 0.0;  // of the Hermitian part of the Gram matrix
  double max_asymmetry = 0.0;   // max |A - A^dagger| entry
};

/// Builds the full n x n Gram matrix A[u][v] = f(x_u^-1 x_v) and returns the
/// minimum eigenvalue of its Hermitian part. The verdict also fails when A
/// is not Hermitian (f(x^-1) != conj f(x)). Throws std::runtime_error when
/// n exceeds `cap` (default: psd_cap()).
PsdCertificate is_positive_semidefinite(const GroupFunction& f, std::size_t cap = 0);

/// Values of a spherical transform, one per basis function.
struct SpectralVector {
  BasisPtr basis;
  std::vector<Complex> values;
  /// True when the input was a group function that differed from its
  /// bi-invariant projection (the transform only sees the projection).
  bool projected = false;
};

/// f^(phi_j) = (1/n) sum_x f(x) phi_j(x^-1).
SpectralVector spherical_transform(const BiInvariantFunction& f, const BasisPtr& basis);
/// Group-function overload: projects onto bi-invariant functions first and
/// records whether the projection changed the input.
SpectralVector spherical_transform(const GroupFunction& f, const BasisPtr& basis);

/// Plancherel weights mu_j = 1 / |phi_j|_2^2, validated against Parseval on
/// the class-indicator basis.
struct PlancherelMeasure {
  BasisPtr basis;
  std::vector<double> weights;
};

PlancherelMeasure plancherel_measure(const BasisPtr& basis);

/// f(x) = sum_j mu_j F_j phi_j(x); exact inverse of the spherical transform
/// on bi-invariant functions.
BiInvariantFunction inverse_transform(const SpectralVector& F, const PlancherelMeasure& mu);

/// (sum_j mu_j |F_j|^p)^(1/p); max_j |F_j| for p = inf.
double lp_norm_spectral(const SpectralVector& F, double p, const PlancherelMeasure& mu);

/// max_x |(f * phi)(x) - f^(phi) phi(x)|, the eigenfunction property of phi
/// under convolution by bi-invariant f.
double eigenvalue_check(const BiInvariantFunction& f, const SphericalFunction& phi);

namespace detail {
/// Common eigenvectors of a commuting family by recursive block refinement;
/// fallback path of spherical_basis, exposed for tests.
std::vector<Eigen::VectorXcd> simultaneous_eigenvectors_block(
    const std::vector<Eigen::MatrixXd>& ops);
}  // namespace detail

}  // namespace gelfand
