#include "rootcfg/quartic.hpp"

#include "rootcfg/errors.hpp"

namespace rootcfg {

namespace {

/// Numerator of the double-root expression: double root = N / (2*D1).
Rat double_root_numerator(const QuarticCoeffs& c) {
  const Rat& p = c.p;
  const Rat& q = c.q;
  const Rat& r = c.r;
  const Rat& s = c.s;
  return -3 * p * r * r + 4 * q * q * r + 9 * s * p * p * p - p * p * r * q -
         32 * s * p * q + 48 * s * r;
}

}  // namespace

Poly quartic_poly(const QuarticCoeffs& c) {
  return Poly{c.s, c.r, c.q, c.p, Rat{1}};
}

QuarticInvariants quartic_invariants(const QuarticCoeffs& c) {
  const Rat& p = c.p;
  const Rat& q = c.q;
  const Rat& r = c.r;
  const Rat& s = c.s;
  const Rat p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const Rat q2 = q * q, q3 = q2 * q, q4 = q3 * q;
  const Rat r2 = r * r, r3 = r2 * r, r4 = r3 * r;
  const Rat s2 = s * s, s3 = s2 * s;

  QuarticInvariants inv;
  inv.D = 18 * p3 * q * r * s - 4 * q3 * p2 * s + 144 * s * r2 * q +
          q2 * p2 * r2 - 192 * p * r * s2 + 144 * q * p2 * s2 +
          18 * p * r3 * q - 4 * p3 * r3 - 128 * q2 * s2 + 16 * q4 * s -
          4 * q3 * r2 - 27 * p4 * s2 - 80 * p * r * q2 * s - 6 * p2 * r2 * s +
          256 * s3 - 27 * r4;
  inv.D1 = p2 * q2 - 3 * r * p3 - 6 * p2 * s - 4 * q3 + 14 * p * q * r +
           16 * s * q - 18 * r2;
  inv.G = 3 * p2 - 8 * q;
  inv.H = p3 - 4 * p * q + 8 * r;
  inv.K = p4 - 256 * s;
  // D2 is the numerator of the leftover quadratic's constant term, i.e.
  // 2*D1^2 times (q + 3p*t + 6t^2) at t = N/(2*D1); clearing denominators
  // gives a polynomial valid for every (p,q,r,s).
  const Rat N = double_root_numerator(c);
  inv.D2 = 2 * q * inv.D1 * inv.D1 + 3 * p * N * inv.D1 + 3 * N * N;
  inv.D3 = inv.H * (q2 - 3 * p * r + 12 * s);
  inv.D5 = Rat(-27, 64) * p3 * r + Rat(9, 64) * p2 * q2 +
           Rat(27, 16) * p * q * r - Rat(27, 16) * r2 - Rat(1, 2) * q3;
  inv.D4 = -64 * inv.H * inv.D5;
  return inv;
}

Rat quartic_double_root(const QuarticCoeffs& c) {
  const QuarticInvariants inv = quartic_invariants(c);
  if (inv.D != 0 || inv.D1 == 0) throw NotInDoubleCase{};
  return double_root_numerator(c) / (2 * inv.D1);
}

Poly leftover_quadratic(const QuarticCoeffs& c) {
  const QuarticInvariants inv = quartic_invariants(c);
  if (inv.D != 0 || inv.D1 == 0) throw NotInDoubleCase{};
  const Rat t = double_root_numerator(c) / (2 * inv.D1);
  return Poly{c.q + 3 * c.p * t + 6 * t * t, c.p + 4 * t, Rat{1}};
}

std::pair<Rat, Rat> quartic_triple_and_single(const QuarticCoeffs& c) {
  const QuarticInvariants inv = quartic_invariants(c);
  if (inv.D != 0 || inv.D1 != 0 || sign(inv.G) <= 0 || inv.H == 0) {
    throw NotInTripleCase{};
  }
  const Rat triple = (6 * c.r - c.p * c.q) / inv.G;
  const Rat single = triple - 3 * inv.H / inv.G;
  return {triple, single};
}

Poly quartic_double_pair(const QuarticCoeffs& c) {
  const QuarticInvariants inv = quartic_invariants(c);
  const bool two_real =
      inv.D == 0 && inv.D1 == 0 && sign(inv.G) > 0 && inv.H == 0;
  const bool two_complex = inv.D == 0 && inv.D1 == 0 && sign(inv.G) < 0;
  if (!two_real && !two_complex) throw NotInTwoDoubleCase{};
  const Poly g{(4 * c.q - c.p * c.p) / 8, c.p / 2, Rat{1}};
  if (g * g != quartic_poly(c)) {
    throw InternalInconsistency{"double-pair quadratic does not square back"};
  }
  return g;
}

Rat quadruple_root(const QuarticCoeffs& c) {
  const QuarticInvariants inv = quartic_invariants(c);
  if (inv.D != 0 || inv.D1 != 0 || inv.G != 0) throw NotQuadruple{};
  return -c.p / 4;
}

QuarticReport classify_quartic(const QuarticCoeffs& c) {
  QuarticReport report;
  report.invariants = quartic_invariants(c);
  const QuarticInvariants& inv = report.invariants;
  const int sD = sign(inv.D);
  const int sD1 = sign(inv.D1);
  const int sG = sign(inv.G);
  const int sH = sign(inv.H);

  if (sD < 0) {
    report.config.kind = QuarticKind::two_real_two_complex;
  } else if (sD > 0) {
    report.config.kind = (sG > 0 && sD1 > 0) ? QuarticKind::four_distinct_real
                                             : QuarticKind::four_complex;
  } else if (sD1 > 0) {
    report.config.kind = QuarticKind::double_two_real_singles;
    report.double_root = double_root_numerator(c) / (2 * inv.D1);
    const int sD2 = sign(inv.D2);
    const int sD3 = sign(inv.D3);
    if (sD2 < 0) {
      report.config.double_position = DoublePosition::single_double_single;
    } else if (sD2 > 0 && sD3 < 0) {
      report.config.double_position = DoublePosition::double_below_both;
    } else if (sD2 > 0 && sD3 > 0) {
      report.config.double_position = DoublePosition::double_above_both;
    } else {
      throw InternalInconsistency{"case-4 ordering signs vanished"};
    }
  } else if (sD1 < 0) {
    report.config.kind = QuarticKind::double_complex_pair;
    report.double_root = double_root_numerator(c) / (2 * inv.D1);
  } else if (sG > 0) {
    if (sH == 0) {
      report.config.kind = QuarticKind::two_real_doubles;
      report.double_pair_quadratic = quartic_double_pair(c);
    } else {
      report.config.kind = QuarticKind::triple_and_single;
      report.config.triple_position = sH < 0 ? TriplePosition::triple_below
                                             : TriplePosition::triple_above;
      const auto [triple, single] = quartic_triple_and_single(c);
      report.triple_root = triple;
      report.single_root = single;
    }
  } else if (sG < 0) {
    report.config.kind = QuarticKind::two_complex_doubles;
    report.double_pair_quadratic = quartic_double_pair(c);
  } else {
    report.config.kind = QuarticKind::quadruple_root;
    report.quadruple_root = -c.p / 4;
  }
  return report;
}

QuarticComplexConfig quartic_complex_configuration(const QuarticCoeffs& c) {
  const QuarticInvariants inv = quartic_invariants(c);
  if (inv.D != 0) return QuarticComplexConfig::four_distinct;
  if (inv.D1 != 0) return QuarticComplexConfig::double_two_singles;
  if (inv.G != 0) {
    return inv.H == 0 ? QuarticComplexConfig::two_doubles
                      : QuarticComplexConfig::triple_single;
  }
  return QuarticComplexConfig::quadruple;
}

int distinct_real_count(const QuarticConfig& config) {
  switch (config.kind) {
    case QuarticKind::four_distinct_real:
      return 4;
    case QuarticKind::two_real_two_complex:
      return 2;
    case QuarticKind::four_complex:
      return 0;
    case QuarticKind::double_two_real_singles:
      return 3;
    case QuarticKind::double_complex_pair:
      return 1;
    case QuarticKind::two_real_doubles:
      return 2;
    case QuarticKind::two_complex_doubles:
      return 0;
    case QuarticKind::triple_and_single:
      return 2;
    case QuarticKind::quadruple_root:
      return 1;
  }
  return 0;
}

}  // namespace rootcfg
