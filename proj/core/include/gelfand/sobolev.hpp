#pragma once

#include <optional>
#include <string>

#include "gelfand/spherical.hpp"

namespace gelfand {

/// A Sobolev weight gamma: one nonnegative value per spherical index.
struct SobolevWeight {
  BasisPtr basis;
  std::vector<double> gamma;
  std::string mode;  // "user" or "cayley:<classes>"
};

/// User-supplied weight values (one per spherical function, all >= 0).
SobolevWeight make_weight(const BasisPtr& basis, const std::vector<double>& values);

/// Spectral weight of the Cayley operator of a union S of double cosets
/// (S must be closed under inversion): gamma_j = sqrt(max(0, lambda_j)) with
/// lambda_j = 1 - 1_S^(phi_j) / 1_S^(phi_0), the normalized Laplacian
/// eigenvalues of the class-S averaging operator.
SobolevWeight make_weight_cayley(const BasisPtr& basis,
                                 const std::vector<std::uint32_t>& classes);

/// Exponent bundle of the L^p' embedding: alpha > s > 0 gives
/// p = 2 alpha / (alpha + s) in (1,2) and its Hoelder conjugate p' in (2,inf).
struct SobolevParams {
  double s = 0.0;
  std::optional<double> alpha;

  double p() const;
  double p_conjugate() const;
  void validate() const;  // throws std::domain_error
};

/// |f|_{H^s_gamma} = (sum_j mu_j (1+gamma_j^2)^s |f^_j|^2)^(1/2).
/// Throws std::domain_error for s < 0.
double sobolev_norm(const BiInvariantFunction& f, const SobolevWeight& weight, double s);

/// One inequality instance: pass iff slack = rhs - lhs >= -1e-12.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

/// |f|_2 <= |f|_{H^s_gamma}.
BoundCheck embedding_l2_check(const BiInvariantFunction& f, const SobolevWeight& weight,
                              double s);

/// C = |(1+gamma^2)^(-s/2)|_2 = (sum_j mu_j (1+gamma_j^2)^-s)^(1/2), the
/// constant of the sup-norm embedding.
double embedding_sup_constant(const SobolevWeight& weight, double s);

/// |f|_inf <= C |f|_{H^s_gamma} with C = embedding_sup_constant.
BoundCheck embedding_sup_check(const BiInvariantFunction& f, const SobolevWeight& weight,
                               double s);

/// |f|_p' <= |f|_{H^s_gamma} (sum_j mu_j (1+gamma_j^2)^-alpha)^(s/(2 alpha)).
BoundCheck embedding_lp_check(const BiInvariantFunction& f, const SobolevWeight& weight,
                              const SobolevParams& params);

/// |f^|_p' <= |f|_p for p in [1,2]; equality at p = 2 (Plancherel).
BoundCheck hausdorff_young_check(const BiInvariantFunction& f, double p, const BasisPtr& basis);
BoundCheck hausdorff_young_check(const GroupFunction& f, double p, const BasisPtr& basis);

/// |f|_p' <= |f^|_p for p in (1,2].
BoundCheck inverse_hausdorff_young_check(const BiInvariantFunction& f, double p,
                                         const BasisPtr& basis);

/// sup_j |phi_j(y) - 1| / (1+gamma_j^2)^(s/2).
double translation_modulus(const SobolevWeight& weight, double s, std::uint32_t y);

struct TranslationCheck : BoundCheck {
  /// max_j |(R_y f)^~(phi_j) - f^(phi_j) phi_j(y^-1)| where (R_y f)^~ is the
  /// transform of the translated function (projection applied first).
  double transform_identity_residual = 0.0;
};

/// Translation estimate: lhs = |avg_K R_y f - f|_2^2 (the K-averaged
/// translation difference; see NOTES in the implementation), rhs =
/// translation_modulus^2 * sobolev_norm^2.
TranslationCheck translation_bound_check(const BiInvariantFunction& f,
                                         const SobolevWeight& weight, double s, std::uint32_t y);

/// A mollifier: bi-invariant, real, nonnegative, unit integral, eta(e) != 0.
class MollifierFunction {
 public:
  /// Validates the invariants; throws std::invalid_argument on violation.
  explicit MollifierFunction(BiInvariantFunction eta);

  const BiInvariantFunction& function() const { return eta_; }
  /// Classes on which eta is nonzero; always includes D_0.
  const std::vector<std::uint32_t>& support_classes() const { return support_; }

 private:
  BiInvariantFunction eta_;
  std::vector<std::uint32_t> support_;
};

/// |f * eta - f|_2 <= (max over y in supp(eta) of translation_modulus) *
/// sobolev_norm.
BoundCheck mollifier_bound_check(const BiInvariantFunction& f, const SobolevWeight& weight,
                                 double s, const MollifierFunction& eta);

/// Ingredients of the compact-embedding proof chain on a finite pair.
struct RellichChainReport {
  double s = 0.0;
  double alpha = 0.0;
  /// translation_modulus for every element y (index 0 = identity, always 0).
  std::vector<double> element_moduli;
  /// max modulus over each class.
  std::vector<double> class_moduli;
  /// Smallest mollifier constant over supports D_0 + one nonidentity class;
  /// 0 when the pair has a single class.
  double min_mollifier_constant = 0.0;
  std::string note;
};

RellichChainReport rellich_chain_report(const SobolevWeight& weight, double s, double alpha);

}  // namespace gelfand
