#include "rootcfg/oracle.hpp"

#include <algorithm>
#include <random>

#include "rootcfg/errors.hpp"
#include "rootcfg/sturm.hpp"

namespace rootcfg {

std::vector<int> RootStructure::real_multiplicity_sequence() const {
  std::vector<int> seq;
  seq.reserve(real_roots.size());
  for (const RealRootInfo& root : real_roots) seq.push_back(root.multiplicity);
  return seq;
}

std::vector<int> RootStructure::complex_multiplicity_multiset() const {
  std::vector<int> all;
  for (const RealRootInfo& root : real_roots) all.push_back(root.multiplicity);
  for (const auto& [multiplicity, pairs] : complex_pairs) {
    for (int k = 0; k < 2 * pairs; ++k) all.push_back(multiplicity);
  }
  std::sort(all.begin(), all.end(), std::greater<>{});
  return all;
}

int RootStructure::total_degree() const {
  int degree = 0;
  for (const RealRootInfo& root : real_roots) degree += root.multiplicity;
  for (const auto& [multiplicity, pairs] : complex_pairs) {
    degree += 2 * multiplicity * pairs;
  }
  return degree;
}

std::vector<std::pair<Poly, int>> squarefree_multiplicity_split(
    const Poly& f_in) {
  if (f_in.degree() < 1) throw DegreeTooSmall{};
  const Poly f = f_in.monicized();
  Poly cofactor = poly_gcd(f, f.derivative());
  Poly w = div_rem(f, cofactor).first;  // product of the distinct roots
  std::vector<std::pair<Poly, int>> parts;
  for (int multiplicity = 1; w.degree() > 0; ++multiplicity) {
    Poly y = poly_gcd(w, cofactor);
    Poly z = div_rem(w, y).first;  // roots of multiplicity exactly this
    if (z.degree() > 0) parts.emplace_back(std::move(z), multiplicity);
    w = std::move(y);
    cofactor = div_rem(cofactor, w).first;
  }
  return parts;
}

namespace {

/// 1 + max |a_i| of the monic f: every root has absolute value below this.
Rat cauchy_root_bound(const Poly& f) {
  Rat bound{0};
  for (int i = 0; i < f.degree(); ++i) {
    const Rat magnitude = abs(f.coeff(i));
    if (magnitude > bound) bound = magnitude;
  }
  return bound + 1;
}

/// Sign of a squarefree f just right of x: f(x) itself unless x is a
/// (necessarily simple) root, in which case the derivative decides.
int sign_just_right(const Poly& f, const Rat& x) {
  const int s = sign(f(x));
  return s != 0 ? s : sign(f.derivative()(x));
}

/// One bisection step by sign; collapses to a point on an exact hit. The
/// endpoints themselves may be roots of f (they are then not the isolated
/// root, which lies strictly inside). Returns false on a point interval.
bool refine_step(const Poly& f, IsolatingInterval& interval) {
  if (interval.is_point()) return false;
  const Rat mid = (interval.lo + interval.hi) / 2;
  const int sm = sign(f(mid));
  if (sm == 0) {
    interval = {mid, mid};
  } else if (sm == sign_just_right(f, interval.lo)) {
    interval.lo = mid;
  } else {
    interval.hi = mid;
  }
  return true;
}

bool intervals_intersect(const IsolatingInterval& a,
                         const IsolatingInterval& b) {
  if (a.is_point()) return b.contains(a.lo);
  if (b.is_point()) return a.contains(b.lo);
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Poly& f_in) {
  if (f_in.is_zero()) throw ZeroPolynomial{};
  if (f_in.degree() >= 1 &&
      poly_gcd(f_in, f_in.derivative()).degree() > 0) {
    throw NotSquarefree{};
  }
  std::vector<IsolatingInterval> found;
  if (f_in.degree() < 1) return found;

  // Bisect by Sturm counts. A midpoint that lands on a root is itself a
  // rational root: report it exactly, deflate, and split there, so the
  // deflated root stays an endpoint of every later interval and no open
  // interval ever swallows it.
  Poly f = f_in.monicized();
  const Rat bound = cauchy_root_bound(f);
  SturmChain chain{f};
  std::vector<std::pair<Rat, Rat>> work{{-bound, bound}};
  while (!work.empty()) {
    const auto [lo, hi] = work.back();
    work.pop_back();
    const int roots_inside = chain.count_in(lo, hi);
    if (roots_inside == 0) continue;
    if (roots_inside == 1) {
      found.push_back({lo, hi});
      continue;
    }
    const Rat mid = (lo + hi) / 2;
    if (f(mid) == 0) {
      found.push_back({mid, mid});
      // At least one more root lies in (lo, hi), so the quotient still has
      // positive degree.
      f = div_rem(f, Poly{-mid, Rat{1}}).first;
      chain = SturmChain{f};
    }
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }

  std::sort(found.begin(), found.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
  return found;
}

IsolatingInterval refine_interval(const Poly& f, IsolatingInterval interval,
                                  const Rat& max_width) {
  if (sign(max_width) <= 0) throw BadInterval{};
  while (!interval.is_point() && interval.hi - interval.lo >= max_width) {
    refine_step(f, interval);
  }
  return interval;
}

RootStructure oracle_classify(const Poly& f) {
  const auto parts = squarefree_multiplicity_split(f);

  struct Item {
    IsolatingInterval interval;
    int multiplicity;
    size_t part;
  };
  std::vector<Item> items;
  RootStructure structure;
  for (size_t i = 0; i < parts.size(); ++i) {
    const auto& [factor, multiplicity] = parts[i];
    const auto intervals = isolate_real_roots(factor);
    for (const IsolatingInterval& interval : intervals) {
      items.push_back({interval, multiplicity, i});
    }
    const int pair_count =
        (factor.degree() - static_cast<int>(intervals.size())) / 2;
    if (pair_count > 0) structure.complex_pairs[multiplicity] += pair_count;
  }

  // Roots of distinct squarefree factors are distinct, but their raw
  // intervals may overlap; shrink until pairwise disjoint.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < items.size(); ++i) {
      for (size_t j = i + 1; j < items.size(); ++j) {
        if (!intervals_intersect(items[i].interval, items[j].interval)) {
          continue;
        }
        bool shrunk = refine_step(parts[items[i].part].first, items[i].interval);
        shrunk |= refine_step(parts[items[j].part].first, items[j].interval);
        if (!shrunk) {
          throw InternalInconsistency{"coincident roots across coprime factors"};
        }
        changed = true;
      }
    }
  }

  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.interval.lo != b.interval.lo ? a.interval.lo < b.interval.lo
                                          : a.interval.hi < b.interval.hi;
  });
  for (const Item& item : items) {
    structure.real_roots.push_back({item.interval, item.multiplicity});
  }
  if (structure.total_degree() != f.degree()) {
    throw InternalInconsistency{"root multiplicities do not sum to the degree"};
  }
  return structure;
}

std::optional<CubicConfig> cubic_config_of(const RootStructure& structure) {
  if (structure.total_degree() != 3) return std::nullopt;
  const auto seq = structure.real_multiplicity_sequence();
  const int pairs = structure.complex_pairs.size() == 1 &&
                            structure.complex_pairs.count(1)
                        ? structure.complex_pairs.at(1)
                        : (structure.complex_pairs.empty() ? 0 : -1);
  if (seq == std::vector<int>{1, 1, 1} && pairs == 0) {
    return CubicConfig{CubicKind::three_distinct_real, std::nullopt};
  }
  if (seq == std::vector<int>{1} && pairs == 1) {
    return CubicConfig{CubicKind::one_real_two_complex, std::nullopt};
  }
  if (seq == std::vector<int>{2, 1} && pairs == 0) {
    return CubicConfig{CubicKind::double_and_single,
                       CubicOrder::single_above_double};
  }
  if (seq == std::vector<int>{1, 2} && pairs == 0) {
    return CubicConfig{CubicKind::double_and_single,
                       CubicOrder::single_below_double};
  }
  if (seq == std::vector<int>{3} && pairs == 0) {
    return CubicConfig{CubicKind::triple_root, std::nullopt};
  }
  return std::nullopt;
}

std::optional<QuarticConfig> quartic_config_of(const RootStructure& structure) {
  if (structure.total_degree() != 4) return std::nullopt;
  const auto seq = structure.real_multiplicity_sequence();
  const auto& pairs = structure.complex_pairs;
  const auto pairs_are = [&pairs](std::map<int, int> want) {
    return pairs == want;
  };
  QuarticConfig config{};
  if (seq == std::vector<int>{1, 1, 1, 1} && pairs_are({})) {
    config.kind = QuarticKind::four_distinct_real;
  } else if (seq == std::vector<int>{1, 1} && pairs_are({{1, 1}})) {
    config.kind = QuarticKind::two_real_two_complex;
  } else if (seq.empty() && pairs_are({{1, 2}})) {
    config.kind = QuarticKind::four_complex;
  } else if (seq == std::vector<int>{1, 2, 1} && pairs_are({})) {
    config.kind = QuarticKind::double_two_real_singles;
    config.double_position = DoublePosition::single_double_single;
  } else if (seq == std::vector<int>{2, 1, 1} && pairs_are({})) {
    config.kind = QuarticKind::double_two_real_singles;
    config.double_position = DoublePosition::double_below_both;
  } else if (seq == std::vector<int>{1, 1, 2} && pairs_are({})) {
    config.kind = QuarticKind::double_two_real_singles;
    config.double_position = DoublePosition::double_above_both;
  } else if (seq == std::vector<int>{2} && pairs_are({{1, 1}})) {
    config.kind = QuarticKind::double_complex_pair;
  } else if (seq == std::vector<int>{2, 2} && pairs_are({})) {
    config.kind = QuarticKind::two_real_doubles;
  } else if (seq.empty() && pairs_are({{2, 1}})) {
    config.kind = QuarticKind::two_complex_doubles;
  } else if (seq == std::vector<int>{3, 1} && pairs_are({})) {
    config.kind = QuarticKind::triple_and_single;
    config.triple_position = TriplePosition::triple_below;
  } else if (seq == std::vector<int>{1, 3} && pairs_are({})) {
    config.kind = QuarticKind::triple_and_single;
    config.triple_position = TriplePosition::triple_above;
  } else if (seq == std::vector<int>{4} && pairs_are({})) {
    config.kind = QuarticKind::quadruple_root;
  } else {
    return std::nullopt;
  }
  return config;
}

// ---------------------------------------------------------------------------
// Labeled instance generation

namespace {

/// Seeded generator with implementation-independent uniform draws, so the
/// same seed yields the same instances on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool flip() { return range(0, 1) == 1; }

  Rat rational(int max_num = 10, int max_den = 4) {
    return Rat(Int(range(-max_num, max_num)), Int(range(1, max_den)));
  }

  Rat positive_rational(int max_num = 10, int max_den = 4) {
    return Rat(Int(range(1, max_num)), Int(range(1, max_den)));
  }

  std::vector<Rat> distinct_rationals(int k) {
    std::vector<Rat> values;
    while (static_cast<int>(values.size()) < k) {
      Rat v = rational();
      if (std::find(values.begin(), values.end(), v) == values.end()) {
        values.push_back(v);
      }
    }
    return values;
  }

  /// Monic irreducible quadratic x^2 + bx + c with b^2 - 4c < 0.
  Poly complex_pair_quadratic() {
    const Rat real_part = rational();
    const Rat c = real_part * real_part + positive_rational();
    return Poly{c, -2 * real_part, Rat{1}};
  }

 private:
  std::mt19937_64 engine_;
};

RootStructure expected_structure(std::vector<std::pair<Rat, int>> reals,
                                 std::map<int, int> pairs) {
  std::sort(reals.begin(), reals.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RootStructure structure;
  for (auto& [root, multiplicity] : reals) {
    structure.real_roots.push_back({{root, root}, multiplicity});
  }
  structure.complex_pairs = std::move(pairs);
  return structure;
}

LabeledInstance make_instance(std::vector<std::pair<Rat, int>> reals,
                              std::vector<Poly> complex_quadratics,
                              std::map<int, int> pairs) {
  Poly poly = Poly::from_roots(reals);
  for (const Poly& quadratic : complex_quadratics) poly = poly * quadratic;
  return {std::move(poly), expected_structure(std::move(reals), std::move(pairs))};
}

LabeledInstance generate_one(SampleLabel label, SampleRng& rng) {
  switch (label) {
    case SampleLabel::cubic_three_distinct_real: {
      auto v = rng.distinct_rationals(3);
      return make_instance({{v[0], 1}, {v[1], 1}, {v[2], 1}}, {}, {});
    }
    case SampleLabel::cubic_one_real_two_complex: {
      return make_instance({{rng.rational(), 1}},
                           {rng.complex_pair_quadratic()}, {{1, 1}});
    }
    case SampleLabel::cubic_double_single: {
      auto v = rng.distinct_rationals(2);
      return make_instance({{v[0], 2}, {v[1], 1}}, {}, {});
    }
    case SampleLabel::cubic_double_single_above: {
      auto v = rng.distinct_rationals(2);
      std::sort(v.begin(), v.end());
      return make_instance({{v[0], 2}, {v[1], 1}}, {}, {});
    }
    case SampleLabel::cubic_double_single_below: {
      auto v = rng.distinct_rationals(2);
      std::sort(v.begin(), v.end());
      return make_instance({{v[1], 2}, {v[0], 1}}, {}, {});
    }
    case SampleLabel::cubic_triple: {
      return make_instance({{rng.rational(), 3}}, {}, {});
    }
    case SampleLabel::quartic_four_distinct_real: {
      auto v = rng.distinct_rationals(4);
      return make_instance({{v[0], 1}, {v[1], 1}, {v[2], 1}, {v[3], 1}}, {},
                           {});
    }
    case SampleLabel::quartic_two_real_two_complex: {
      auto v = rng.distinct_rationals(2);
      return make_instance({{v[0], 1}, {v[1], 1}},
                           {rng.complex_pair_quadratic()}, {{1, 1}});
    }
    case SampleLabel::quartic_four_complex: {
      Poly a = rng.complex_pair_quadratic();
      Poly b = rng.complex_pair_quadratic();
      while (a == b) b = rng.complex_pair_quadratic();
      return make_instance({}, {a, b}, {{1, 2}});
    }
    case SampleLabel::quartic_double_two_singles: {
      auto v = rng.distinct_rationals(3);
      return make_instance({{v[0], 2}, {v[1], 1}, {v[2], 1}}, {}, {});
    }
    case SampleLabel::quartic_single_double_single: {
      auto v = rng.distinct_rationals(3);
      std::sort(v.begin(), v.end());
      return make_instance({{v[1], 2}, {v[0], 1}, {v[2], 1}}, {}, {});
    }
    case SampleLabel::quartic_double_below_both: {
      auto v = rng.distinct_rationals(3);
      std::sort(v.begin(), v.end());
      return make_instance({{v[0], 2}, {v[1], 1}, {v[2], 1}}, {}, {});
    }
    case SampleLabel::quartic_double_above_both: {
      auto v = rng.distinct_rationals(3);
      std::sort(v.begin(), v.end());
      return make_instance({{v[2], 2}, {v[0], 1}, {v[1], 1}}, {}, {});
    }
    case SampleLabel::quartic_double_complex_pair: {
      return make_instance({{rng.rational(), 2}},
                           {rng.complex_pair_quadratic()}, {{1, 1}});
    }
    case SampleLabel::quartic_two_real_doubles: {
      auto v = rng.distinct_rationals(2);
      return make_instance({{v[0], 2}, {v[1], 2}}, {}, {});
    }
    case SampleLabel::quartic_two_complex_doubles: {
      Poly quadratic = rng.complex_pair_quadratic();
      return make_instance({}, {quadratic, quadratic}, {{2, 1}});
    }
    case SampleLabel::quartic_triple_below: {
      auto v = rng.distinct_rationals(2);
      std::sort(v.begin(), v.end());
      return make_instance({{v[0], 3}, {v[1], 1}}, {}, {});
    }
    case SampleLabel::quartic_triple_above: {
      auto v = rng.distinct_rationals(2);
      std::sort(v.begin(), v.end());
      return make_instance({{v[1], 3}, {v[0], 1}}, {}, {});
    }
    case SampleLabel::quartic_quadruple: {
      return make_instance({{rng.rational(), 4}}, {}, {});
    }
  }
  throw UnrealizableLabel{};
}

}  // namespace

const std::vector<SampleLabel>& all_sample_labels() {
  static const std::vector<SampleLabel> labels{
      SampleLabel::cubic_three_distinct_real,
      SampleLabel::cubic_one_real_two_complex,
      SampleLabel::cubic_double_single,
      SampleLabel::cubic_double_single_above,
      SampleLabel::cubic_double_single_below,
      SampleLabel::cubic_triple,
      SampleLabel::quartic_four_distinct_real,
      SampleLabel::quartic_two_real_two_complex,
      SampleLabel::quartic_four_complex,
      SampleLabel::quartic_double_two_singles,
      SampleLabel::quartic_single_double_single,
      SampleLabel::quartic_double_below_both,
      SampleLabel::quartic_double_above_both,
      SampleLabel::quartic_double_complex_pair,
      SampleLabel::quartic_two_real_doubles,
      SampleLabel::quartic_two_complex_doubles,
      SampleLabel::quartic_triple_below,
      SampleLabel::quartic_triple_above,
      SampleLabel::quartic_quadruple,
  };
  return labels;
}

std::string_view sample_label_name(SampleLabel label) {
  switch (label) {
    case SampleLabel::cubic_three_distinct_real:
      return "cubic/three_distinct_real";
    case SampleLabel::cubic_one_real_two_complex:
      return "cubic/one_real_two_complex";
    case SampleLabel::cubic_double_single:
      return "cubic/double_single";
    case SampleLabel::cubic_double_single_above:
      return "cubic/double_single/single_above";
    case SampleLabel::cubic_double_single_below:
      return "cubic/double_single/single_below";
    case SampleLabel::cubic_triple:
      return "cubic/triple";
    case SampleLabel::quartic_four_distinct_real:
      return "quartic/four_distinct_real";
    case SampleLabel::quartic_two_real_two_complex:
      return "quartic/two_real_two_complex";
    case SampleLabel::quartic_four_complex:
      return "quartic/four_complex";
    case SampleLabel::quartic_double_two_singles:
      return "quartic/double_two_singles";
    case SampleLabel::quartic_single_double_single:
      return "quartic/double_two_singles/single_double_single";
    case SampleLabel::quartic_double_below_both:
      return "quartic/double_two_singles/double_below_both";
    case SampleLabel::quartic_double_above_both:
      return "quartic/double_two_singles/double_above_both";
    case SampleLabel::quartic_double_complex_pair:
      return "quartic/double_complex_pair";
    case SampleLabel::quartic_two_real_doubles:
      return "quartic/two_real_doubles";
    case SampleLabel::quartic_two_complex_doubles:
      return "quartic/two_complex_doubles";
    case SampleLabel::quartic_triple_below:
      return "quartic/triple_single/triple_below";
    case SampleLabel::quartic_triple_above:
      return "quartic/triple_single/triple_above";
    case SampleLabel::quartic_quadruple:
      return "quartic/quadruple";
  }
  return "unknown";
}

bool sample_label_is_cubic(SampleLabel label) {
  switch (label) {
    case SampleLabel::cubic_three_distinct_real:
    case SampleLabel::cubic_one_real_two_complex:
    case SampleLabel::cubic_double_single:
    case SampleLabel::cubic_double_single_above:
    case SampleLabel::cubic_double_single_below:
    case SampleLabel::cubic_triple:
      return true;
    default:
      return false;
  }
}

std::vector<LabeledInstance> sample_labeled_instances(SampleLabel label,
                                                      int count,
                                                      std::uint64_t seed) {
  if (count < 0) throw UnrealizableLabel{};
  SampleRng rng(seed);
  std::vector<LabeledInstance> instances;
  instances.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) instances.push_back(generate_one(label, rng));
  return instances;
}

}  // namespace rootcfg
