// Closed-form classification of the monic cubic x^3 + p x^2 + q x + r:
// real/complex root configuration, the order of double vs single root, the
// count of positive single roots, and exact multiple-root values. Every
// decision is an exact sign test; there are no thresholds.

#ifndef ROOTCFG_CUBIC_HPP
#define ROOTCFG_CUBIC_HPP

#include <optional>

#include "rootcfg/polynomial.hpp"
#include "rootcfg/rational.hpp"

namespace rootcfg {

struct CubicCoeffs {
  Rat p, q, r;
};

/// Signed witnesses: discriminant D, P = p^2 - 3q, E = 27r - 9pq + 2p^3,
/// T = p^3 - 27r.
struct CubicInvariants {
  Rat D, P, E, T;
};

enum class CubicKind {
  three_distinct_real,
  one_real_two_complex,
  double_and_single,
  triple_root,
};

enum class CubicOrder { single_above_double, single_below_double };

struct CubicConfig {
  CubicKind kind;
  std::optional<CubicOrder> order;  // set iff kind == double_and_single
  bool operator==(const CubicConfig&) const = default;
};

struct CubicReport {
  CubicConfig config;
  CubicInvariants invariants;
  std::optional<Rat> double_root;
  std::optional<Rat> single_root;  // exact companion root in the double case
  std::optional<Rat> triple_root;
  // Count of positive multiplicity-1 roots; present iff 0 is not a root
  // (i.e. r != 0).
  std::optional<int> positive_single_count;
};

enum class CubicComplexConfig { three_distinct, double_and_single, triple };

Poly cubic_poly(const CubicCoeffs& c);

CubicInvariants cubic_invariants(const CubicCoeffs& c);

/// Total classification; consumes only exact signs of the invariants.
CubicReport classify_cubic(const CubicCoeffs& c);

/// The unique double root (9r - pq) / (2P). Requires D = 0, P != 0;
/// throws NotInDoubleCase otherwise.
Rat cubic_double_root(const CubicCoeffs& c);

/// E / (2P) = double root - single root, so a negative value means the
/// single root lies above the double root. Requires D = 0, P != 0.
Rat cubic_single_root_offset(const CubicCoeffs& c);

/// Positive single roots of a squarefree cubic with f(0) != 0, by the
/// constant-term sign rules, falling back to a Sturm count when a rule
/// boundary is hit exactly. Throws ZeroIsRoot if r = 0, NotSquarefree if
/// D = 0.
int cubic_positive_single_count(const CubicCoeffs& c);

CubicComplexConfig cubic_complex_configuration(const CubicCoeffs& c);

/// Distinct real roots implied by a configuration.
int distinct_real_count(const CubicConfig& config);

}  // namespace rootcfg

#endif  // ROOTCFG_CUBIC_HPP
