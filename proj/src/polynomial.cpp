#include "rootcfg/polynomial.hpp"

#include <algorithm>

#include "rootcfg/errors.hpp"

namespace rootcfg {

namespace {
const Rat kZero{0};
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly{std::vector<Rat>{c}}; }

Poly Poly::from_roots(const std::vector<std::pair<Rat, int>>& roots) {
  Poly result = Poly::constant(1);
  for (const auto& [root, multiplicity] : roots) {
    const Poly factor{-root, Rat{1}};
    for (int k = 0; k < multiplicity; ++k) result = result * factor;
  }
  return result;
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

Rat Poly::operator()(const Rat& x) const {
  Rat value{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly{};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rat(static_cast<int>(i));
  }
  return Poly{std::move(d)};
}

Poly Poly::monicized() const {
  if (is_zero()) throw ZeroPolynomial{};
  return Rat(1) / leading() * *this;
}

Poly Poly::translated(const Rat& c) const {
  // Repeated synthetic division by (y - 0) after substituting x = y + c:
  // the classic Horner shift, exact over Rat.
  std::vector<Rat> work = coeffs_;
  const int n = degree();
  for (int k = 0; k < n; ++k) {
    for (int i = n - 1; i >= k; --i) {
      work[static_cast<size_t>(i)] += c * work[static_cast<size_t>(i) + 1];
    }
  }
  return Poly{std::move(work)};
}

Poly Poly::operator-() const { return Rat(-1) * *this; }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> sum(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < sum.size(); ++i) {
    sum[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return Poly{std::move(sum)};
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat{0});
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly{std::move(prod)};
}

Poly operator*(const Rat& s, const Poly& f) {
  std::vector<Rat> scaled(f.coeffs_.size());
  for (size_t i = 0; i < scaled.size(); ++i) scaled[i] = s * f.coeffs_[i];
  return Poly{std::move(scaled)};
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    const bool first = out.empty();
    if (sign(c) < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    const Rat mag = abs(c);
    const bool fractional = den(mag) != 1;
    if (i == 0 || mag != 1) {
      if (fractional && i > 0) {
        out += '(' + to_string(mag) + ')';
      } else {
        out += to_string(mag);
      }
    }
    if (i > 0) {
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> div_rem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZeroPoly{};
  std::vector<Rat> rem = f.coeffs();
  const int dg = g.degree();
  const int df = f.degree();
  if (df < dg) return {Poly{}, f};
  std::vector<Rat> quot(static_cast<size_t>(df - dg) + 1, Rat{0});
  for (int k = df - dg; k >= 0; --k) {
    Rat factor = rem[static_cast<size_t>(k + dg)] / g.leading();
    quot[static_cast<size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= dg; ++i) {
      rem[static_cast<size_t>(k + i)] -= factor * g.coeff(i);
    }
  }
  return {Poly{std::move(quot)}, Poly{std::move(rem)}};
}

Poly poly_gcd(Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = div_rem(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.is_zero() ? f : f.monicized();
}

}  // namespace rootcfg
