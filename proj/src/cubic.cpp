#include "rootcfg/cubic.hpp"

#include "rootcfg/errors.hpp"
#include "rootcfg/sturm.hpp"

namespace rootcfg {

Poly cubic_poly(const CubicCoeffs& c) { return Poly{c.r, c.q, c.p, Rat{1}}; }

CubicInvariants cubic_invariants(const CubicCoeffs& c) {
  const Rat& p = c.p;
  const Rat& q = c.q;
  const Rat& r = c.r;
  CubicInvariants inv;
  inv.D = -4 * q * q * q + p * p * q * q + 18 * r * p * q - 4 * r * p * p * p -
          27 * r * r;
  inv.P = p * p - 3 * q;
  inv.E = 27 * r - 9 * p * q + 2 * p * p * p;
  inv.T = p * p * p - 27 * r;
  return inv;
}

Rat cubic_double_root(const CubicCoeffs& c) {
  const CubicInvariants inv = cubic_invariants(c);
  if (inv.D != 0 || inv.P == 0) throw NotInDoubleCase{};
  return (9 * c.r - c.p * c.q) / (2 * inv.P);
}

Rat cubic_single_root_offset(const CubicCoeffs& c) {
  const CubicInvariants inv = cubic_invariants(c);
  if (inv.D != 0 || inv.P == 0) throw NotInDoubleCase{};
  return inv.E / (2 * inv.P);
}

int cubic_positive_single_count(const CubicCoeffs& c) {
  if (c.r == 0) throw ZeroIsRoot{};
  const CubicInvariants inv = cubic_invariants(c);
  if (inv.D == 0) throw NotSquarefree{};

  if (sign(inv.D) < 0) {
    // One real root; its sign is opposite the product sign -r.
    return sign(c.r) > 0 ? 0 : 1;
  }

  // Three distinct real roots: the constant-term rules, valid for strict
  // signs only. A vanishing tested quantity drops an entry from the sign
  // sequence at 0, so defer to the Sturm count there instead of stretching
  // the table.
  const Rat m = c.p * c.q - 9 * c.r;
  const int sq = sign(c.q);
  const int sr = sign(c.r);
  const int sm = sign(m);
  if (sq == 0 || sm == 0) return count_positive_real_roots(cubic_poly(c));
  if (sq > 0 && sr > 0 && sm > 0) return 0;
  if (sq > 0 && sr < 0 && sm < 0) return 3;
  return sr > 0 ? 2 : 1;
}

CubicReport classify_cubic(const CubicCoeffs& c) {
  CubicReport report;
  report.invariants = cubic_invariants(c);
  const int sD = sign(report.invariants.D);
  const int sP = sign(report.invariants.P);

  if (sD > 0) {
    if (sP <= 0) throw InternalInconsistency{"D > 0 with p^2 - 3q <= 0"};
    report.config = {CubicKind::three_distinct_real, std::nullopt};
  } else if (sD < 0) {
    report.config = {CubicKind::one_real_two_complex, std::nullopt};
  } else if (sP != 0) {
    const Rat offset = report.invariants.E / (2 * report.invariants.P);
    if (offset == 0) throw InternalInconsistency{"zero single-root offset"};
    // offset = double - single, so offset < 0 puts the single root above.
    report.config = {CubicKind::double_and_single,
                     sign(offset) < 0 ? CubicOrder::single_above_double
                                      : CubicOrder::single_below_double};
    report.double_root = (9 * c.r - c.p * c.q) / (2 * report.invariants.P);
    report.single_root = *report.double_root - offset;
  } else {
    report.config = {CubicKind::triple_root, std::nullopt};
    report.triple_root = -c.p / 3;
  }

  if (c.r != 0) {
    switch (report.config.kind) {
      case CubicKind::three_distinct_real:
      case CubicKind::one_real_two_complex:
        report.positive_single_count = cubic_positive_single_count(c);
        break;
      case CubicKind::double_and_single:
        report.positive_single_count = sign(*report.single_root) > 0 ? 1 : 0;
        break;
      case CubicKind::triple_root:
        report.positive_single_count = 0;
        break;
    }
  }
  return report;
}

CubicComplexConfig cubic_complex_configuration(const CubicCoeffs& c) {
  const CubicInvariants inv = cubic_invariants(c);
  if (inv.D != 0) return CubicComplexConfig::three_distinct;
  if (inv.P != 0) return CubicComplexConfig::double_and_single;
  return CubicComplexConfig::triple;
}

int distinct_real_count(const CubicConfig& config) {
  switch (config.kind) {
    case CubicKind::three_distinct_real:
      return 3;
    case CubicKind::one_real_two_complex:
      return 1;
    case CubicKind::double_and_single:
      return 2;
    case CubicKind::triple_root:
      return 1;
  }
  return 0;
}

}  // namespace rootcfg
