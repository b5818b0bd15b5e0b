#include "rootcfg/sturm.hpp"

#include <utility>

#include "rootcfg/errors.hpp"

namespace rootcfg {

int sign_variations(const SignSeq& signs) {
  int variations = 0;
  int previous = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

SturmChain::SturmChain(Poly f) {
  if (f.degree() < 1) throw DegreeTooSmall{};
  elements_.push_back(std::move(f));
  elements_.push_back(elements_.front().derivative());
  while (true) {
    const Poly& a = elements_[elements_.size() - 2];
    const Poly& b = elements_.back();
    Poly rem = div_rem(a, b).second;
    if (rem.is_zero()) break;
    elements_.push_back(-rem);
  }
}

SignSeq SturmChain::signs_at(const Rat& x) const {
  SignSeq signs;
  signs.reserve(elements_.size());
  for (const Poly& e : elements_) signs.push_back(sign(e(x)));
  return signs;
}

SignSeq SturmChain::signs_at(Infinity direction) const {
  SignSeq signs;
  signs.reserve(elements_.size());
  for (const Poly& e : elements_) {
    int s = sign(e.leading());
    if (direction == Infinity::negative && e.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return signs;
}

int SturmChain::variations_at(const Rat& x) const {
  return sign_variations(signs_at(x));
}

int SturmChain::variations_at(Infinity direction) const {
  return sign_variations(signs_at(direction));
}

int SturmChain::count_in(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw BadInterval{};
  const Poly& f = elements_.front();
  if (f(a) == 0 || f(b) == 0) throw EndpointIsRoot{};
  return variations_at(a) - variations_at(b);
}

std::vector<Poly> SturmChain::normalized_elements() const {
  std::vector<Poly> normalized;
  normalized.reserve(elements_.size());
  for (const Poly& e : elements_) {
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const Rat& c : e.coeffs()) {
      num_gcd = gcd(num_gcd, num(c));
      den_lcm = lcm(den_lcm, den(c));
    }
    if (num_gcd == 0) num_gcd = 1;
    normalized.push_back(Rat(den_lcm, num_gcd) * e);
  }
  return normalized;
}

int count_real_roots_interval(const Poly& f, const Rat& a, const Rat& b) {
  return SturmChain(f).count_in(a, b);
}

int count_distinct_real_roots(const Poly& f) {
  SturmChain chain(f);
  return chain.variations_at(Infinity::negative) -
         chain.variations_at(Infinity::positive);
}

int count_positive_real_roots(const Poly& f) {
  if (f(Rat{0}) == 0) throw ZeroIsRoot{};
  SturmChain chain(f);
  return chain.variations_at(Rat{0}) - chain.variations_at(Infinity::positive);
}

int gcd_degree(const Poly& f) { return SturmChain(f).gcd_degree(); }

}  // namespace rootcfg
