// Closed-form classification of the monic quartic x^4 + p x^3 + q x^2 +
// r x + s: the nine-case real configuration table with ordering sub-cases,
// the complex configuration table, and exact multiple-root extraction. All
// decisions are exact sign tests on polynomial invariants of (p, q, r, s).

#ifndef ROOTCFG_QUARTIC_HPP
#define ROOTCFG_QUARTIC_HPP

#include <optional>
#include <utility>

#include "rootcfg/polynomial.hpp"
#include "rootcfg/rational.hpp"

namespace rootcfg {

struct QuarticCoeffs {
  Rat p, q, r, s;
};

/// Signed witnesses. D is the quartic discriminant; D1 gates the double-root
/// cases; D2/D3 order the case-4 roots; D4 = -64*H*D5 gates the degenerate
/// cascade; G = 3p^2 - 8q, H = p^3 - 4pq + 8r, K = p^4 - 256s.
struct QuarticInvariants {
  Rat D, D1, D2, D3, D4, D5, G, H, K;
};

enum class QuarticKind {
  four_distinct_real,
  two_real_two_complex,
  four_complex,
  double_two_real_singles,
  double_complex_pair,
  two_real_doubles,
  two_complex_doubles,
  triple_and_single,
  quadruple_root,
};

/// Position of the double root among the two real singles (case 4).
enum class DoublePosition { single_double_single, double_below_both, double_above_both };

/// Position of the triple root relative to the single root (case 8).
enum class TriplePosition { triple_below, triple_above };

struct QuarticConfig {
  QuarticKind kind;
  std::optional<DoublePosition> double_position;  // iff double_two_real_singles
  std::optional<TriplePosition> triple_position;  // iff triple_and_single
  bool operator==(const QuarticConfig&) const = default;
};

struct QuarticReport {
  QuarticConfig config;
  QuarticInvariants invariants;
  std::optional<Rat> double_root;      // cases 4 and 5
  std::optional<Rat> triple_root;      // case 8
  std::optional<Rat> single_root;      // case 8
  std::optional<Rat> quadruple_root;   // case 9
  // Monic quadratic whose two roots are the double roots (cases 6 and 7);
  // kept exact since those roots may be irrational or complex.
  std::optional<Poly> double_pair_quadratic;
};

enum class QuarticComplexConfig {
  four_distinct,
  double_two_singles,
  two_doubles,
  triple_single,
  quadruple,
};

Poly quartic_poly(const QuarticCoeffs& c);

QuarticInvariants quartic_invariants(const QuarticCoeffs& c);

/// Total classification per the nine-case table.
QuarticReport classify_quartic(const QuarticCoeffs& c);

/// The unique real double root (cases 4 and 5); the denominator is 2*D1.
/// Throws NotInDoubleCase unless D = 0 and D1 != 0.
Rat quartic_double_root(const QuarticCoeffs& c);

/// The quadratic factor left after translating the double root to the
/// origin and removing y^2: y^2 + (D3/D1) y + c0 with sign(c0) = sign(D2).
/// Throws NotInDoubleCase unless D = 0 and D1 != 0.
Poly leftover_quadratic(const QuarticCoeffs& c);

/// (triple, single) = ((6r - pq)/G, triple - 3H/G). Throws NotInTripleCase
/// unless D = 0, D1 = 0, G > 0, H != 0.
std::pair<Rat, Rat> quartic_triple_and_single(const QuarticCoeffs& c);

/// Monic quadratic g with f = g^2 (cases 6 and 7). Throws
/// NotInTwoDoubleCase outside those cases and InternalInconsistency if the
/// reconstruction f = g^2 fails.
Poly quartic_double_pair(const QuarticCoeffs& c);

/// -p/4, with f = (x + p/4)^4. Throws NotQuadruple unless D = D1 = G = 0.
Rat quadruple_root(const QuarticCoeffs& c);

QuarticComplexConfig quartic_complex_configuration(const QuarticCoeffs& c);

/// Distinct real roots implied by a configuration.
int distinct_real_count(const QuarticConfig& config);

}  // namespace rootcfg

#endif  // ROOTCFG_QUARTIC_HPP
