#include "gelfand/hecke.hpp"

#include <cmath>
#include <stdexcept>

namespace gelfand {

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  if (f.group().get() != g.group().get()) {
    throw std::invalid_argument("group mismatch in convolution");
  }
  const auto& grp = *f.group();
  const std::size_t n = grp.order();
  const double w = grp.haar().weight();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (std::uint32_t x = 0; x < n; ++x) {
    Complex sum(0.0, 0.0);
    for (std::uint32_t y = 0; y < n; ++y) {
      sum += f.values()[grp.mul(x, grp.inv(y))] * g.values()[y];
    }
    out[x] = w * sum;
  }
  return {f.group(), std::move(out)};
}

StructureConstants::StructureConstants(CosetSpacePtr space) : space_(std::move(space)) {
  dim_ = space_->class_count();
  counts_.assign(dim_ * dim_ * dim_, 0);
  const auto& grp = *space_->group();
  const std::size_t n = grp.order();
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t i = space_->class_of(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t j = space_->class_of(b);
      const std::uint32_t k = space_->class_of(grp.mul(a, b));
      ++counts_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
  }
}

double StructureConstants::coefficient(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  const double denom =
      static_cast<double>(space_->group()->order()) * static_cast<double>(space_->class_size(k));
  return static_cast<double>(count(i, j, k)) / denom;
}

Eigen::MatrixXd StructureConstants::operator_matrix(std::uint32_t i) const {
  Eigen::MatrixXd m(dim_, dim_);
  for (std::uint32_t k = 0; k < dim_; ++k) {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      m(k, j) = coefficient(i, j, k);
    }
  }
  return m;
}

StructureConstants structure_constants(const CosetSpacePtr& space) {
  return StructureConstants(space);
}

Eigen::MatrixXd convolution_operator_matrix(const CosetSpacePtr& space, std::uint32_t i) {
  if (i >= space->class_count()) throw std::out_of_range("class index out of range");
  return StructureConstants(space).operator_matrix(i);
}

GelfandCertificate is_gelfand_pair(const StructureConstants& sc) {
  GelfandCertificate cert;
  cert.verdict = true;
  const auto dim = static_cast<std::uint32_t>(sc.class_count());
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = i + 1; j < dim; ++j) {
      for (std::uint32_t k = 0; k < dim; ++k) {
        const std::int64_t diff = sc.count(i, j, k) - sc.count(j, i, k);
        if (diff == 0) continue;
        if (cert.verdict) {
          cert.verdict = false;
          cert.witness = {{i, j, sc.space()->rep_of(k)}};
        }
        const double denom = static_cast<double>(sc.space()->group()->order()) *
                             static_cast<double>(sc.space()->class_size(k));
        cert.max_asymmetry =
            std::max(cert.max_asymmetry, std::abs(static_cast<double>(diff)) / denom);
      }
    }
  }
  return cert;
}

GelfandCertificate is_gelfand_pair(const CosetSpacePtr& space) {
  return is_gelfand_pair(StructureConstants(space));
}

GelfandCertificate is_gelfand_pair(GroupPtr group, const Subgroup& subgroup) {
  return is_gelfand_pair(double_cosets(std::move(group), subgroup));
}

BiInvariantFunction convolve(const StructureConstants& sc, const BiInvariantFunction& f,
                             const BiInvariantFunction& g) {
  if (f.space().get() != sc.space().get() || g.space().get() != sc.space().get()) {
    throw std::invalid_argument("double-coset space mismatch in convolution");
  }
  const auto dim = static_cast<std::uint32_t>(sc.class_count());
  std::vector<Complex> out(dim, Complex(0.0, 0.0));
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = 0; j < dim; ++j) {
      const Complex fg = f.class_values()[i] * g.class_values()[j];
      for (std::uint32_t k = 0; k < dim; ++k) {
        out[k] += fg * sc.coefficient(i, j, k);
      }
    }
  }
  return {f.space(), std::move(out)};
}

}  // namespace gelfand
