#pragma once

#include <complex>
#include <vector>

#include "gelfand/group.hpp"

namespace gelfand {

using Complex = std::complex<double>;

/// Positive infinity, used as the exponent of the sup norm.
double inf_p();

/// A complex-valued function on a finite group, one value per element.
/// Entries must be finite; construction rejects NaN/Inf.
class GroupFunction {
 public:
  GroupFunction(GroupPtr group, std::vector<Complex> values);

  const GroupPtr& group() const { return group_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator()(std::uint32_t x) const { return values_[x]; }
  std::size_t size() const { return values_.size(); }

 private:
  GroupPtr group_;
  std::vector<Complex> values_;
};

GroupFunction operator+(const GroupFunction& f, const GroupFunction& g);
GroupFunction operator-(const GroupFunction& f, const GroupFunction& g);
GroupFunction operator*(Complex c, const GroupFunction& f);

/// Dirac mass at the identity (value 1 at element 0).
GroupFunction delta_identity(const GroupPtr& group);

/// Constant function with the given value.
GroupFunction constant_function(const GroupPtr& group, Complex value);

/// L^p norm with respect to the normalized Haar measure:
/// ((1/n) sum |f|^p)^(1/p); the sup norm for p = inf.
/// Throws std::domain_error for p < 1.
double lp_norm(const GroupFunction& f, double p);

/// <f,g> = (1/n) sum f(x) conj(g(x)).
Complex inner_product(const GroupFunction& f, const GroupFunction& g);

/// Right translation (R_y f)(x) = f(x y^-1).
GroupFunction right_translate(const GroupFunction& f, std::uint32_t y);

}  // namespace gelfand
