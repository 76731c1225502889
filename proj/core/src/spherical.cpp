#include "gelfand/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gelfand/config.hpp"
#include "gelfand/random.hpp"

namespace gelfand {

namespace {

constexpr std::uint64_t kSolverSeed = 0x5BD1E995D1B54A33ULL;
constexpr int kSolverRetries = 8;

double min_eigenvalue_gap(const Eigen::VectorXcd& values) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index a = 0; a < values.size(); ++a) {
    for (Eigen::Index b = a + 1; b < values.size(); ++b) {
      gap = std::min(gap, std::abs(values(a) - values(b)));
    }
  }
  return gap;
}

// Enforce phi(x^-1) = conj(phi(x)) exactly by averaging the computed values
// over inverse-paired classes; the true solution already has this symmetry,
// so this only removes eigensolver noise.
void hermitian_symmetrize(const DoubleCosetSpace& space, std::vector<Complex>& values) {
  for (std::uint32_t c = 0; c < values.size(); ++c) {
    const std::uint32_t ci = space.inverse_class_of(c);
    if (ci == c) {
      values[c] = Complex(values[c].real(), 0.0);
    } else if (c < ci) {
      const Complex avg = 0.5 * (values[c] + std::conj(values[ci]));
      values[c] = avg;
      values[ci] = std::conj(avg);
    }
  }
}

double round_key(double v) { return std::round(v * 1e9) / 1e9; }

// Deterministic basis order: trivial function first, the rest ascending by
// the rounded real parts of the values on D_1, D_2, ...; ties broken by the
// rounded imaginary parts.
bool basis_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t c = 1; c < a.size(); ++c) {
    const double ra = round_key(a[c].real());
    const double rb = round_key(b[c].real());
    if (ra != rb) return ra < rb;
  }
  for (std::size_t c = 1; c < a.size(); ++c) {
    const double ia = round_key(a[c].imag());
    const double ib = round_key(b[c].imag());
    if (ia != ib) return ia < ib;
  }
  return false;
}

bool is_trivial(const std::vector<Complex>& values) {
  for (const Complex& v : values) {
    if (std::abs(v - Complex(1.0, 0.0)) > 1e-6) return false;
  }
  return true;
}

double l2_norm_sq_of(const DoubleCosetSpace& space, const std::vector<Complex>& values) {
  double sum = 0.0;
  for (std::uint32_t c = 0; c < values.size(); ++c) {
    sum += space.class_weight(c) * std::norm(values[c]);
  }
  return sum;
}

}  // namespace

SphericalFunction::SphericalFunction(CosetSpacePtr space, std::vector<Complex> class_values,
                                     int index, double psd_min_eigenvalue, double l2_norm_sq)
    : space_(std::move(space)),
      class_values_(std::move(class_values)),
      index_(index),
      psd_min_eigenvalue_(psd_min_eigenvalue),
      l2_norm_sq_(l2_norm_sq) {}

GroupFunction SphericalFunction::expand() const {
  return as_bi_invariant().expand();
}

BiInvariantFunction SphericalFunction::as_bi_invariant() const {
  return {space_, class_values_};
}

SphericalBasis::SphericalBasis(CosetSpacePtr space, std::vector<SphericalFunction> functions)
    : space_(std::move(space)), functions_(std::move(functions)) {}

double functional_equation_residual(const SphericalFunction& phi) {
  const auto& space = *phi.space();
  const auto& grp = *space.group();
  const auto& members = space.subgroup().members();
  const double kw = 1.0 / static_cast<double>(members.size());
  double worst = 0.0;
  // Both sides are constant on double cosets in each argument, so class
  // representatives suffice.
  for (std::uint32_t a = 0; a < space.class_count(); ++a) {
    const std::uint32_t x = space.rep_of(a);
    for (std::uint32_t b = 0; b < space.class_count(); ++b) {
      const std::uint32_t y = space.rep_of(b);
      Complex avg(0.0, 0.0);
      for (std::uint32_t k : members) {
        avg += phi.value_on(space.class_of(grp.mul(grp.mul(x, k), y)));
      }
      avg *= kw;
      worst = std::max(worst, std::abs(avg - phi.value_on(a) * phi.value_on(b)));
    }
  }
  return worst;
}

PsdCertificate is_positive_semidefinite(const GroupFunction& f, std::size_t cap) {
  if (cap == 0) cap = psd_cap();
  const auto& grp = *f.group();
  const std::size_t n = grp.order();
  if (n > cap) {
    throw std::runtime_error("group order " + std::to_string(n) + " exceeds the PSD cap " +
                             std::to_string(cap));
  }
  Eigen::MatrixXcd gram(n, n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = 0; v < n; ++v) {
      gram(u, v) = f.values()[grp.mul(grp.inv(u), v)];
    }
  }
  PsdCertificate cert;
  cert.max_asymmetry = (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd hermitian = 0.5 * (gram + gram.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian,
                                                         Eigen::EigenvaluesOnly);
  cert.min_eigenvalue = solver.eigenvalues().minCoeff();
  cert.verdict = cert.max_asymmetry <= kPsdTol && cert.min_eigenvalue >= -kPsdTol;
  return cert;
}

namespace detail {

std::vector<Eigen::VectorXcd> simultaneous_eigenvectors_block(
    const std::vector<Eigen::MatrixXd>& ops) {
  const Eigen::Index dim = ops.empty() ? 0 : ops.front().rows();
  std::vector<Eigen::MatrixXcd> blocks{Eigen::MatrixXcd::Identity(dim, dim)};
  for (const Eigen::MatrixXd& op : ops) {
    const Eigen::MatrixXcd opc = op.cast<Complex>();
    std::vector<Eigen::MatrixXcd> next;
    for (const Eigen::MatrixXcd& block : blocks) {
      if (block.cols() == 1) {
        next.push_back(block);
        continue;
      }
      // Restriction of op to the (invariant) span of the block columns.
      const Eigen::MatrixXcd restricted = block.adjoint() * opc * block;
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(restricted);
      if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigen decomposition failed during block refinement");
      }
      // Cluster eigenvalues within the collision tolerance and split the
      // block along the clusters.
      const Eigen::Index m = restricted.rows();
      std::vector<Eigen::Index> order(m);
      for (Eigen::Index i = 0; i < m; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        const Complex va = solver.eigenvalues()(a);
        const Complex vb = solver.eigenvalues()(b);
        if (va.real() != vb.real()) return va.real() < vb.real();
        return va.imag() < vb.imag();
      });
      std::size_t start = 0;
      while (start < order.size()) {
        std::size_t stop = start + 1;
        while (stop < order.size() &&
               std::abs(solver.eigenvalues()(order[stop]) -
                        solver.eigenvalues()(order[stop - 1])) <= kEigenGapTol) {
          ++stop;
        }
        Eigen::MatrixXcd cluster(m, stop - start);
        for (std::size_t i = start; i < stop; ++i) {
          cluster.col(static_cast<Eigen::Index>(i - start)) =
              solver.eigenvectors().col(order[i]);
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(block * cluster);
        const Eigen::MatrixXcd q = qr.householderQ() *
                                   Eigen::MatrixXcd::Identity(dim, cluster.cols());
        next.push_back(q);
        start = stop;
      }
    }
    blocks = std::move(next);
  }
  std::vector<Eigen::VectorXcd> vectors;
  for (const Eigen::MatrixXcd& block : blocks) {
    if (block.cols() != 1) {
      throw std::runtime_error(
          "simultaneous diagonalization failed: joint eigenspace of dimension > 1");
    }
    vectors.push_back(block.col(0));
  }
  return vectors;
}

}  // namespace detail

BasisPtr spherical_basis(const CosetSpacePtr& space) {
  const StructureConstants sc(space);
  const GelfandCertificate cert = is_gelfand_pair(sc);
  if (!cert.verdict) {
    throw std::invalid_argument("(" + space->group()->name() +
                                ", K) is not a Gelfand pair; spherical basis undefined");
  }
  const auto dim = static_cast<std::uint32_t>(space->class_count());
  std::vector<Eigen::MatrixXd> ops;
  ops.reserve(dim);
  for (std::uint32_t i = 0; i < dim; ++i) ops.push_back(sc.operator_matrix(i));

  // Primary route: eigenvectors of a random real combination of the
  // commuting family. Retried with fresh deterministic seeds on eigenvalue
  // collision, then the block-refinement fallback.
  std::vector<Eigen::VectorXcd> vectors;
  for (int attempt = 0; attempt < kSolverRetries && vectors.empty(); ++attempt) {
    SplitMix64 rng(kSolverSeed + static_cast<std::uint64_t>(attempt));
    Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(dim, dim);
    for (std::uint32_t i = 0; i < dim; ++i) combined += rng.uniform_pm1() * ops[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(combined);
    if (solver.info() != Eigen::Success) continue;
    if (min_eigenvalue_gap(solver.eigenvalues()) <= kEigenGapTol) continue;
    for (Eigen::Index j = 0; j < dim; ++j) {
      vectors.push_back(solver.eigenvectors().col(j));
    }
  }
  if (vectors.empty()) {
    vectors = detail::simultaneous_eigenvectors_block(ops);
  }

  const std::size_t n = space->group()->order();
  std::vector<std::vector<Complex>> candidates;
  for (const Eigen::VectorXcd& v : vectors) {
    if (std::abs(v(0)) < 1e-8 * v.norm()) {
      throw std::runtime_error("spherical solver produced an eigenvector vanishing on D_0");
    }
    std::vector<Complex> values(dim);
    for (std::uint32_t c = 0; c < dim; ++c) values[c] = v(c) / v(0);
    hermitian_symmetrize(*space, values);
    candidates.push_back(std::move(values));
  }

  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    const bool ta = is_trivial(a);
    const bool tb = is_trivial(b);
    if (ta != tb) return ta;
    return basis_less(a, b);
  });

  const std::size_t cap = psd_cap();
  std::vector<SphericalFunction> functions;
  functions.reserve(dim);
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const double norm_sq = l2_norm_sq_of(*space, candidates[j]);
    SphericalFunction phi(space, std::move(candidates[j]), static_cast<int>(j),
                          std::numeric_limits<double>::quiet_NaN(), norm_sq);
    if (n <= cap) {
      const PsdCertificate psd = is_positive_semidefinite(phi.expand(), cap);
      phi = SphericalFunction(space, phi.class_values(), static_cast<int>(j),
                              psd.min_eigenvalue, norm_sq);
      if (!psd.verdict) {
        throw std::runtime_error("spherical solver produced a non-PSD function (min eigenvalue " +
                                 std::to_string(psd.min_eigenvalue) + ")");
      }
    }
    functions.push_back(std::move(phi));
  }

  // Validate the defining invariants; failures indicate a degenerate solve.
  for (const SphericalFunction& phi : functions) {
    if (std::abs(phi.value_on(0) - Complex(1.0, 0.0)) > kResidualTol) {
      throw std::runtime_error("spherical function does not satisfy phi(e) = 1");
    }
    double max_abs = 0.0;
    for (const Complex& v : phi.class_values()) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs > 1.0 + kSlackTol) {
      throw std::runtime_error("spherical function exceeds |phi| <= 1");
    }
    if (functional_equation_residual(phi) > kResidualTol) {
      throw std::runtime_error("simultaneous diagonalization failed: product formula residual " +
                               std::to_string(functional_equation_residual(phi)));
    }
    if (phi.l2_norm_sq() < 1e-14) {
      throw std::runtime_error("spherical function has numerically zero norm");
    }
  }
  for (std::size_t a = 0; a < functions.size(); ++a) {
    for (std::size_t b = a + 1; b < functions.size(); ++b) {
      const Complex ip =
          inner_product(functions[a].as_bi_invariant(), functions[b].as_bi_invariant());
      if (std::abs(ip) > kResidualTol) {
        throw std::runtime_error("spherical functions are not orthogonal");
      }
    }
  }

  return std::make_shared<const SphericalBasis>(space, std::move(functions));
}

SpectralVector spherical_transform(const BiInvariantFunction& f, const BasisPtr& basis) {
  if (f.space().get() != basis->space().get()) {
    throw std::invalid_argument("function and basis live on different double-coset spaces");
  }
  const auto& space = *basis->space();
  std::vector<Complex> values(basis->size(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const SphericalFunction& phi = basis->function(j);
    Complex sum(0.0, 0.0);
    for (std::uint32_t c = 0; c < space.class_count(); ++c) {
      sum += space.class_weight(c) * f.class_values()[c] *
             phi.value_on(space.inverse_class_of(c));
    }
    values[j] = sum;
  }
  return {basis, std::move(values), false};
}

SpectralVector spherical_transform(const GroupFunction& f, const BasisPtr& basis) {
  const BiInvariantFunction projected = project_bi_invariant(f, basis->space());
  const GroupFunction back = projected.expand();
  double deviation = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    deviation = std::max(deviation, std::abs(f.values()[x] - back.values()[x]));
  }
  SpectralVector out = spherical_transform(projected, basis);
  out.projected = deviation > kSlackTol;
  return out;
}

PlancherelMeasure plancherel_measure(const BasisPtr& basis) {
  std::vector<double> weights(basis->size());
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const double norm_sq = basis->function(j).l2_norm_sq();
    if (!(norm_sq > 1e-14)) {
      throw std::runtime_error("basis function " + std::to_string(j) +
                               " has numerically zero norm");
    }
    weights[j] = 1.0 / norm_sq;
  }
  PlancherelMeasure mu{basis, std::move(weights)};
  // Parseval on the indicator basis validates the weights.
  const auto& space = *basis->space();
  for (std::uint32_t i = 0; i < space.class_count(); ++i) {
    const BiInvariantFunction ind = class_indicator(basis->space(), i);
    const SpectralVector hat = spherical_transform(ind, basis);
    double spectral = 0.0;
    for (std::size_t j = 0; j < basis->size(); ++j) {
      spectral += mu.weights[j] * std::norm(hat.values[j]);
    }
    const double direct = space.class_weight(i);
    if (std::abs(spectral - direct) > kResidualTol * (1.0 + direct)) {
      throw std::runtime_error("Parseval validation of the Plancherel weights failed");
    }
  }
  return mu;
}

BiInvariantFunction inverse_transform(const SpectralVector& F, const PlancherelMeasure& mu) {
  if (F.basis.get() != mu.basis.get()) {
    throw std::invalid_argument("spectral vector and measure use different bases");
  }
  const auto& basis = *F.basis;
  const auto& space = *basis.space();
  std::vector<Complex> values(space.class_count(), Complex(0.0, 0.0));
  for (std::uint32_t c = 0; c < space.class_count(); ++c) {
    Complex sum(0.0, 0.0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      sum += mu.weights[j] * F.values[j] * basis.function(j).value_on(c);
    }
    values[c] = sum;
  }
  return {basis.space(), std::move(values)};
}

double lp_norm_spectral(const SpectralVector& F, double p, const PlancherelMeasure& mu) {
  if (F.basis.get() != mu.basis.get()) {
    throw std::invalid_argument("spectral vector and measure use different bases");
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Complex& v : F.values) m = std::max(m, std::abs(v));
    return m;
  }
  if (p < 1.0) throw std::domain_error("spectral L^p norm requires p >= 1");
  double sum = 0.0;
  for (std::size_t j = 0; j < F.values.size(); ++j) {
    sum += mu.weights[j] * std::pow(std::abs(F.values[j]), p);
  }
  return std::pow(sum, 1.0 / p);
}

double eigenvalue_check(const BiInvariantFunction& f, const SphericalFunction& phi) {
  if (f.space().get() != phi.space().get()) {
    throw std::invalid_argument("function and spherical function use different spaces");
  }
  const GroupFunction fe = f.expand();
  const GroupFunction pe = phi.expand();
  const GroupFunction conv = convolve(fe, pe);
  // lambda_f = f^(phi) computed directly from the defining integral.
  const auto& grp = *f.space()->group();
  Complex lambda(0.0, 0.0);
  for (std::uint32_t x = 0; x < grp.order(); ++x) {
    lambda += fe.values()[x] * pe.values()[grp.inv(x)];
  }
  lambda *= grp.haar().weight();
  double worst = 0.0;
  for (std::uint32_t x = 0; x < grp.order(); ++x) {
    worst = std::max(worst, std::abs(conv.values()[x] - lambda * pe.values()[x]));
  }
  return worst;
}

}  // namespace gelfand
