// Exact rational scalars. Rat is an arbitrary-precision rational kept in
// canonical form (reduced, positive denominator) by the backing library, so
// sign tests and comparisons are exact. No floating point anywhere.

#ifndef ROOTCFG_RATIONAL_HPP
#define ROOTCFG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rootcfg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact sign: -1, 0 or +1.
inline int sign(const Rat& x) { return x.sign(); }

inline Int num(const Rat& x) { return numerator(x); }
inline Int den(const Rat& x) { return denominator(x); }

/// Canonical text form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rat& x);

/// Parse a rational token: `[-]digits`, `[-]digits/digits` or
/// `[-]digits.digits`. Decimal strings become exact rationals
/// ("0.25" -> 1/4). Returns nullopt on any malformed token,
/// including a zero denominator.
std::optional<Rat> parse_rational(std::string_view token);

}  // namespace rootcfg

#endif  // ROOTCFG_RATIONAL_HPP
