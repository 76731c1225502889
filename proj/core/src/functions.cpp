#include "gelfand/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gelfand {

namespace {

void require_same_group(const GroupFunction& f, const GroupFunction& g) {
  if (f.group().get() != g.group().get()) {
    throw std::invalid_argument("group mismatch between functions");
  }
}

void require_finite(const std::vector<Complex>& values) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("function value is not finite");
    }
  }
}

}  // namespace

double inf_p() { return std::numeric_limits<double>::infinity(); }

GroupFunction::GroupFunction(GroupPtr group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->order()) {
    throw std::invalid_argument("function length " + std::to_string(values_.size()) +
                                " does not match group order " +
                                std::to_string(group_->order()));
  }
  require_finite(values_);
}

GroupFunction operator+(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f, g);
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values()[i] + g.values()[i];
  return {f.group(), std::move(out)};
}

GroupFunction operator-(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f, g);
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values()[i] - g.values()[i];
  return {f.group(), std::move(out)};
}

GroupFunction operator*(Complex c, const GroupFunction& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * f.values()[i];
  return {f.group(), std::move(out)};
}

GroupFunction delta_identity(const GroupPtr& group) {
  std::vector<Complex> values(group->order(), Complex(0.0, 0.0));
  values[0] = Complex(1.0, 0.0);
  return {group, std::move(values)};
}

GroupFunction constant_function(const GroupPtr& group, Complex value) {
  return {group, std::vector<Complex>(group->order(), value)};
}

double lp_norm(const GroupFunction& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const Complex& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  if (p < 1.0) throw std::domain_error("L^p norm requires p >= 1");
  const double w = f.group()->haar().weight();
  double sum = 0.0;
  for (const Complex& v : f.values()) sum += w * std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

Complex inner_product(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f, g);
  const double w = f.group()->haar().weight();
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) sum += f.values()[i] * std::conj(g.values()[i]);
  return w * sum;
}

GroupFunction right_translate(const GroupFunction& f, std::uint32_t y) {
  const auto& g = *f.group();
  if (y >= g.order()) throw std::out_of_range("translation element out of range");
  const std::uint32_t yinv = g.inv(y);
  std::vector<Complex> out(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) out[x] = f.values()[g.mul(x, yinv)];
  return {f.group(), std::move(out)};
}

}  // namespace gelfand
