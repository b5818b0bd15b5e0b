// Sturm chains and sign-variation root counting: the chain is f, f', then
// successive negated Euclidean remainders down to the last nonzero element
// (a scalar multiple of gcd(f, f')). The difference of sign variations at
// two non-root points counts the distinct real roots strictly between them.

#ifndef ROOTCFG_STURM_HPP
#define ROOTCFG_STURM_HPP

#include <vector>

#include "rootcfg/polynomial.hpp"

namespace rootcfg {

enum class Infinity { negative, positive };

/// Signs of the chain elements at a common point, in chain order.
using SignSeq = std::vector<int>;

/// Adjacent strict sign changes after dropping zeros.
int sign_variations(const SignSeq& signs);

class SturmChain {
 public:
  /// Throws DegreeTooSmall if deg f < 1.
  explicit SturmChain(Poly f);

  const std::vector<Poly>& elements() const { return elements_; }

  SignSeq signs_at(const Rat& x) const;

  /// Limit signs: at +inf the sign of the leading coefficient, at -inf that
  /// sign times (-1)^degree.
  SignSeq signs_at(Infinity direction) const;

  int variations_at(const Rat& x) const;
  int variations_at(Infinity direction) const;

  /// Distinct real roots in the open interval (a, b), multiplicity ignored.
  /// Throws BadInterval if a >= b, EndpointIsRoot if f(a) = 0 or f(b) = 0.
  int count_in(const Rat& a, const Rat& b) const;

  /// Degree of the last chain element = deg gcd(f, f').
  int gcd_degree() const { return elements_.back().degree(); }

  /// Elements scaled by positive rationals to coprime integer coefficients.
  /// Display aid only; counting always uses the raw chain.
  std::vector<Poly> normalized_elements() const;

 private:
  std::vector<Poly> elements_;
};

int count_real_roots_interval(const Poly& f, const Rat& a, const Rat& b);
int count_distinct_real_roots(const Poly& f);

/// Distinct real roots in (0, inf). Throws ZeroIsRoot if f(0) = 0.
int count_positive_real_roots(const Poly& f);

int gcd_degree(const Poly& f);

}  // namespace rootcfg

#endif  // ROOTCFG_STURM_HPP
