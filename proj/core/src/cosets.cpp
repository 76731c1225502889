#include "gelfand/cosets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gelfand {

DoubleCosetSpace::DoubleCosetSpace(GroupPtr group, Subgroup subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  if (subgroup_.parent().get() != group_.get()) {
    throw std::invalid_argument("subgroup does not belong to the given group");
  }
  const std::size_t n = group_->order();
  class_of_.assign(n, 0);
  std::vector<char> visited(n, 0);
  // Saturation x -> K x K, scanning x in ascending order so classes are
  // indexed by their smallest representative (class 0 is K itself).
  for (std::uint32_t x = 0; x < n; ++x) {
    if (visited[x]) continue;
    const auto c = static_cast<std::uint32_t>(classes_.size());
    std::vector<std::uint32_t> orbit{x};
    visited[x] = 1;
    for (std::size_t at = 0; at < orbit.size(); ++at) {
      const std::uint32_t z = orbit[at];
      for (std::uint32_t k : subgroup_.members()) {
        for (std::uint32_t w : {group_->mul(k, z), group_->mul(z, k)}) {
          if (!visited[w]) {
            visited[w] = 1;
            orbit.push_back(w);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    for (std::uint32_t z : orbit) class_of_[z] = c;
    classes_.push_back(std::move(orbit));
  }
  inverse_class_.resize(classes_.size());
  for (std::uint32_t c = 0; c < classes_.size(); ++c) {
    inverse_class_[c] = class_of_[group_->inv(rep_of(c))];
  }
}

CosetSpacePtr double_cosets(GroupPtr group, Subgroup subgroup) {
  return std::make_shared<const DoubleCosetSpace>(std::move(group), std::move(subgroup));
}

BiInvariantFunction::BiInvariantFunction(CosetSpacePtr space, std::vector<Complex> class_values)
    : space_(std::move(space)), class_values_(std::move(class_values)) {
  if (class_values_.size() != space_->class_count()) {
    throw std::invalid_argument("class-value length " + std::to_string(class_values_.size()) +
                                " does not match class count " +
                                std::to_string(space_->class_count()));
  }
  for (const Complex& v : class_values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("class value is not finite");
    }
  }
}

GroupFunction BiInvariantFunction::expand() const {
  const std::size_t n = space_->group()->order();
  std::vector<Complex> values(n);
  for (std::uint32_t x = 0; x < n; ++x) values[x] = class_values_[space_->class_of(x)];
  return {space_->group(), std::move(values)};
}

namespace {
void require_same_space(const BiInvariantFunction& f, const BiInvariantFunction& g) {
  if (f.space().get() != g.space().get()) {
    throw std::invalid_argument("double-coset space mismatch between functions");
  }
}
}  // namespace

BiInvariantFunction operator+(const BiInvariantFunction& f, const BiInvariantFunction& g) {
  require_same_space(f, g);
  std::vector<Complex> out(f.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = f.class_values()[c] + g.class_values()[c];
  return {f.space(), std::move(out)};
}

BiInvariantFunction operator-(const BiInvariantFunction& f, const BiInvariantFunction& g) {
  require_same_space(f, g);
  std::vector<Complex> out(f.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = f.class_values()[c] - g.class_values()[c];
  return {f.space(), std::move(out)};
}

BiInvariantFunction operator*(Complex c, const BiInvariantFunction& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * f.class_values()[i];
  return {f.space(), std::move(out)};
}

BiInvariantFunction class_indicator(const CosetSpacePtr& space, std::uint32_t c) {
  if (c >= space->class_count()) throw std::out_of_range("class index out of range");
  std::vector<Complex> values(space->class_count(), Complex(0.0, 0.0));
  values[c] = Complex(1.0, 0.0);
  return {space, std::move(values)};
}

BiInvariantFunction project_bi_invariant(const GroupFunction& f, const CosetSpacePtr& space) {
  if (f.group().get() != space->group().get()) {
    throw std::invalid_argument("function is not defined on the pair's group");
  }
  // The K x K double average hits every element of a double coset equally
  // often, so the projection is the plain average over each class.
  std::vector<Complex> out(space->class_count());
  for (std::uint32_t c = 0; c < space->class_count(); ++c) {
    Complex sum(0.0, 0.0);
    for (std::uint32_t x : space->class_members(c)) sum += f.values()[x];
    out[c] = sum / static_cast<double>(space->class_size(c));
  }
  return {space, std::move(out)};
}

double lp_norm(const BiInvariantFunction& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Complex& v : f.class_values()) m = std::max(m, std::abs(v));
    return m;
  }
  if (p < 1.0) throw std::domain_error("L^p norm requires p >= 1");
  double sum = 0.0;
  for (std::uint32_t c = 0; c < f.size(); ++c) {
    sum += f.space()->class_weight(c) * std::pow(std::abs(f.class_values()[c]), p);
  }
  return std::pow(sum, 1.0 / p);
}

Complex inner_product(const BiInvariantFunction& f, const BiInvariantFunction& g) {
  require_same_space(f, g);
  Complex sum(0.0, 0.0);
  for (std::uint32_t c = 0; c < f.size(); ++c) {
    sum += f.space()->class_weight(c) * f.class_values()[c] * std::conj(g.class_values()[c]);
  }
  return sum;
}

}  // namespace gelfand
