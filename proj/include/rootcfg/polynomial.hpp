// Dense univariate polynomial over exact rationals. Coefficient i is the
// coefficient of x^i; the zero polynomial is represented with degree -1 and
// an empty coefficient vector. All operations are pure and exact.

#ifndef ROOTCFG_POLYNOMIAL_HPP
#define ROOTCFG_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootcfg/rational.hpp"

namespace rootcfg {

class Poly {
 public:
  /// The zero polynomial (degree -1).
  Poly() = default;

  /// From coefficients in ascending degree; trailing zeros are trimmed.
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);

  /// Monic polynomial with exactly the given roots and multiplicities.
  static Poly from_roots(const std::vector<std::pair<Rat, int>>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; 0 outside the stored range.
  const Rat& coeff(int i) const;
  const Rat& leading() const { return coeffs_.back(); }  // pre: !is_zero()
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Exact evaluation by Horner's rule.
  Rat operator()(const Rat& x) const;

  /// Formal derivative; the derivative of a constant is the zero polynomial.
  Poly derivative() const;

  /// Scaled so the leading coefficient is 1. Throws ZeroPolynomial.
  Poly monicized() const;

  /// g with g(y) = f(y + c): same roots shifted by -c, multiplicities and
  /// relative order preserved.
  Poly translated(const Rat& c) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& f);
  bool operator==(const Poly&) const = default;

  /// Compact display form, e.g. "x^3-6x^2+11x-6" or "(2/3)x-4/3".
  std::string str(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// Euclidean division: f = q*g + rem with deg(rem) < deg(g).
/// Throws DivisionByZeroPoly if g = 0.
std::pair<Poly, Poly> div_rem(const Poly& f, const Poly& g);

/// Monic greatest common divisor; gcd(f, 0) = monic f, gcd(0, 0) = 0.
Poly poly_gcd(Poly f, Poly g);

}  // namespace rootcfg

#endif  // ROOTCFG_POLYNOMIAL_HPP
