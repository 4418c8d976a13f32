#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace cq {

/// Real polynomial in the sphere coordinates (nx, ny, nz), kept in the
/// canonical form modulo nx^2 + ny^2 + nz^2 = 1: every monomial has nz-degree
/// at most one. Two polynomials agree on S^2 iff their canonical forms agree.
class PolynomialObservable {
 public:
  using Exponents = std::array<int, 3>;  // powers of nx, ny, nz

  PolynomialObservable() = default;

  static PolynomialObservable constant(double c);
  static PolynomialObservable coordinate(int axis);  // 0 -> nx, 1 -> ny, 2 -> nz
  static PolynomialObservable monomial(Exponents e, double coeff = 1.0);
  /// Parses sums of terms such as "2.5*nx^2*nz - ny + 3".
  static PolynomialObservable parse(std::string_view text);

  const std::map<Exponents, double>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;
  double evaluate(double x, double y, double z) const;
  /// Partial derivative of the canonical representative as a polynomial on R^3.
  PolynomialObservable derivative(int axis) const;
  double max_abs_coefficient() const;

  PolynomialObservable operator+(const PolynomialObservable& o) const;
  PolynomialObservable operator-(const PolynomialObservable& o) const;
  PolynomialObservable operator*(const PolynomialObservable& o) const;
  PolynomialObservable operator*(double s) const;
  PolynomialObservable operator-() const { return *this * -1.0; }
  bool operator==(const PolynomialObservable& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  // Adds raw terms then re-canonicalizes.
  static PolynomialObservable from_raw(const std::map<Exponents, double>& raw);

  std::map<Exponents, double> terms_;
};

/// {f, g} generated by {n_a, n_b} = -eps_abc n_c and the Leibniz rule,
/// i.e. {f, g}(n) = -n . (grad f x grad g).
PolynomialObservable poisson_bracket(const PolynomialObservable& f, const PolynomialObservable& g);

}  // namespace cq
