#include "rootcfg/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "rootcfg/labels.hpp"
#include "rootcfg/sturm.hpp"

namespace rootcfg {

namespace {

constexpr size_t kMaxCounterexamples = 5;

/// True when the independently computed interval pins down the known root.
bool interval_pins(const IsolatingInterval& actual, const Rat& root) {
  return actual.contains(root);
}

bool structure_matches_expected(const RootStructure& actual,
                                const RootStructure& expected) {
  if (actual.complex_pairs != expected.complex_pairs) return false;
  if (actual.real_roots.size() != expected.real_roots.size()) return false;
  for (size_t i = 0; i < actual.real_roots.size(); ++i) {
    if (actual.real_roots[i].multiplicity !=
        expected.real_roots[i].multiplicity) {
      return false;
    }
    if (!interval_pins(actual.real_roots[i].interval,
                       expected.real_roots[i].interval.lo)) {
      return false;
    }
  }
  return true;
}

/// Interval of the (unique) real root with the given multiplicity.
std::optional<IsolatingInterval> interval_of_multiplicity(
    const RootStructure& structure, int multiplicity) {
  std::optional<IsolatingInterval> found;
  for (const RealRootInfo& root : structure.real_roots) {
    if (root.multiplicity != multiplicity) continue;
    if (found) return std::nullopt;  // not unique
    found = root.interval;
  }
  return found;
}

std::string describe_cubic(const CubicCoeffs& c) {
  return cubic_poly(c).str();
}

std::string describe_quartic(const QuarticCoeffs& c) {
  return quartic_poly(c).str();
}

CubicComplexConfig complex_config_from_structure_cubic(
    const RootStructure& structure) {
  const auto multiset = structure.complex_multiplicity_multiset();
  if (multiset == std::vector<int>{3}) return CubicComplexConfig::triple;
  if (multiset == std::vector<int>{2, 1}) {
    return CubicComplexConfig::double_and_single;
  }
  return CubicComplexConfig::three_distinct;
}

QuarticComplexConfig complex_config_from_structure_quartic(
    const RootStructure& structure) {
  const auto multiset = structure.complex_multiplicity_multiset();
  if (multiset == std::vector<int>{4}) return QuarticComplexConfig::quadruple;
  if (multiset == std::vector<int>{3, 1}) {
    return QuarticComplexConfig::triple_single;
  }
  if (multiset == std::vector<int>{2, 2}) {
    return QuarticComplexConfig::two_doubles;
  }
  if (multiset == std::vector<int>{2, 1, 1}) {
    return QuarticComplexConfig::double_two_singles;
  }
  return QuarticComplexConfig::four_distinct;
}

}  // namespace

std::optional<std::string> check_cubic_agreement(const CubicCoeffs& c) {
  const Poly f = cubic_poly(c);
  const CubicReport report = classify_cubic(c);
  const int sturm_count = count_distinct_real_roots(f);
  const RootStructure structure = oracle_classify(f);

  const auto oracle_config = cubic_config_of(structure);
  if (!oracle_config) {
    return describe_cubic(c) + ": oracle produced a non-cubic structure";
  }
  if (!(report.config == *oracle_config)) {
    return describe_cubic(c) + ": classifier " + label_of(report.config) +
           " vs oracle " + label_of(*oracle_config);
  }
  if (distinct_real_count(report.config) != sturm_count) {
    return describe_cubic(c) + ": classifier implies " +
           std::to_string(distinct_real_count(report.config)) +
           " real roots, Sturm counts " + std::to_string(sturm_count);
  }
  if (structure.distinct_real_count() != sturm_count) {
    return describe_cubic(c) + ": oracle finds " +
           std::to_string(structure.distinct_real_count()) +
           " real roots, Sturm counts " + std::to_string(sturm_count);
  }
  if (label_of(cubic_complex_configuration(c)) !=
      label_of(complex_config_from_structure_cubic(structure))) {
    return describe_cubic(c) + ": complex configuration disagrees";
  }
  if (report.double_root) {
    const auto interval = interval_of_multiplicity(structure, 2);
    if (!interval || !interval_pins(*interval, *report.double_root)) {
      return describe_cubic(c) + ": double root " +
             to_string(*report.double_root) + " not where the oracle put it";
    }
  }
  if (report.single_root) {
    const auto interval = interval_of_multiplicity(structure, 1);
    if (!interval || !interval_pins(*interval, *report.single_root)) {
      return describe_cubic(c) + ": single root " +
             to_string(*report.single_root) + " not where the oracle put it";
    }
  }
  if (report.triple_root) {
    const auto interval = interval_of_multiplicity(structure, 3);
    if (!interval || !interval_pins(*interval, *report.triple_root)) {
      return describe_cubic(c) + ": triple root misplaced";
    }
  }
  if (c.r != 0 && report.invariants.D != 0) {
    if (report.positive_single_count.value_or(-1) !=
        count_positive_real_roots(f)) {
      return describe_cubic(c) + ": positive-root count disagrees with Sturm";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_quartic_agreement(const QuarticCoeffs& c) {
  const Poly f = quartic_poly(c);
  const QuarticReport report = classify_quartic(c);
  const int sturm_count = count_distinct_real_roots(f);
  const RootStructure structure = oracle_classify(f);

  const auto oracle_config = quartic_config_of(structure);
  if (!oracle_config) {
    return describe_quartic(c) + ": oracle produced a non-quartic structure";
  }
  if (!(report.config == *oracle_config)) {
    return describe_quartic(c) + ": classifier " + label_of(report.config) +
           " vs oracle " + label_of(*oracle_config);
  }
  if (distinct_real_count(report.config) != sturm_count) {
    return describe_quartic(c) + ": classifier implies " +
           std::to_string(distinct_real_count(report.config)) +
           " real roots, Sturm counts " + std::to_string(sturm_count);
  }
  if (structure.distinct_real_count() != sturm_count) {
    return describe_quartic(c) + ": oracle finds " +
           std::to_string(structure.distinct_real_count()) +
           " real roots, Sturm counts " + std::to_string(sturm_count);
  }
  if (label_of(quartic_complex_configuration(c)) !=
      label_of(complex_config_from_structure_quartic(structure))) {
    return describe_quartic(c) + ": complex configuration disagrees";
  }
  if (report.double_root) {
    const auto interval = interval_of_multiplicity(structure, 2);
    if (!interval || !interval_pins(*interval, *report.double_root)) {
      return describe_quartic(c) + ": double root " +
             to_string(*report.double_root) + " not where the oracle put it";
    }
  }
  if (report.triple_root) {
    const auto interval = interval_of_multiplicity(structure, 3);
    if (!interval || !interval_pins(*interval, *report.triple_root)) {
      return describe_quartic(c) + ": triple root misplaced";
    }
  }
  if (report.single_root) {
    const auto interval = interval_of_multiplicity(structure, 1);
    if (!interval || !interval_pins(*interval, *report.single_root)) {
      return describe_quartic(c) + ": single root misplaced";
    }
  }
  if (report.quadruple_root) {
    const auto interval = interval_of_multiplicity(structure, 4);
    if (!interval || !interval_pins(*interval, *report.quadruple_root)) {
      return describe_quartic(c) + ": quadruple root misplaced";
    }
  }
  if (report.double_root) {
    // Defining identity of the leftover quadratic: translating the double
    // root to the origin leaves f(y + t) = y^2 * leftover(y) exactly.
    const Poly leftover = leftover_quadratic(c);
    const Poly shifted = quartic_poly(c).translated(*report.double_root);
    const Poly reconstructed{Rat{0}, Rat{0}, leftover.coeff(0),
                             leftover.coeff(1), leftover.coeff(2)};
    if (!(shifted == reconstructed)) {
      return describe_quartic(c) + ": leftover quadratic identity fails";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_constructed(const LabeledInstance& instance) {
  const Poly& f = instance.poly;
  const RootStructure actual = oracle_classify(f);
  if (!structure_matches_expected(actual, instance.expected)) {
    return f.str() + ": oracle does not reproduce the construction";
  }
  const int expected_real = instance.expected.distinct_real_count();
  if (count_distinct_real_roots(f) != expected_real) {
    return f.str() + ": Sturm count differs from the construction";
  }
  if (f.degree() == 3) {
    const CubicCoeffs c{f.coeff(2), f.coeff(1), f.coeff(0)};
    const auto expected_config = cubic_config_of(instance.expected);
    if (!expected_config) {
      return f.str() + ": construction has no cubic configuration";
    }
    if (!(classify_cubic(c).config == *expected_config)) {
      return f.str() + ": classifier " + label_of(classify_cubic(c).config) +
             " vs construction " + label_of(*expected_config);
    }
  } else if (f.degree() == 4) {
    const QuarticCoeffs c{f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
    const auto expected_config = quartic_config_of(instance.expected);
    if (!expected_config) {
      return f.str() + ": construction has no quartic configuration";
    }
    if (!(classify_quartic(c).config == *expected_config)) {
      return f.str() + ": classifier " + label_of(classify_quartic(c).config) +
             " vs construction " + label_of(*expected_config);
    }
  } else {
    return f.str() + ": constructed degree outside {3, 4}";
  }
  return std::nullopt;
}

namespace {

class CoeffRng {
 public:
  explicit CoeffRng(std::uint64_t seed) : engine_(seed) {}

  Rat coefficient(int bound = 50) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    const std::int64_t numerator =
        -bound + static_cast<std::int64_t>(engine_() % span);
    const std::int64_t denominator =
        1 + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(bound));
    return Rat(Int(numerator), Int(denominator));
  }

 private:
  std::mt19937_64 engine_;
};

void record(VerifyOutcome& outcome, std::map<std::string, VerifyRow>& rows,
            const std::string& label, const std::optional<std::string>& fail) {
  VerifyRow& row = rows[label];
  row.label = label;
  ++row.checked;
  ++outcome.total;
  if (fail) {
    ++outcome.disagreements;
    if (outcome.counterexamples.size() < kMaxCounterexamples) {
      outcome.counterexamples.push_back(*fail);
    }
  } else {
    ++row.ok;
  }
}

const std::vector<SampleLabel>& degenerate_labels() {
  static const std::vector<SampleLabel> labels{
      SampleLabel::cubic_double_single,
      SampleLabel::cubic_double_single_above,
      SampleLabel::cubic_double_single_below,
      SampleLabel::cubic_triple,
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

}  // namespace

VerifyOutcome verify_constructed(int count, std::uint64_t seed) {
  VerifyOutcome outcome;
  std::map<std::string, VerifyRow> rows;
  std::vector<std::string> order;
  for (size_t i = 0; i < all_sample_labels().size(); ++i) {
    const SampleLabel label = all_sample_labels()[i];
    const std::string name{sample_label_name(label)};
    order.push_back(name);
    const auto instances = sample_labeled_instances(label, count, seed + i);
    for (const LabeledInstance& instance : instances) {
      record(outcome, rows, name, check_constructed(instance));
    }
  }
  for (const std::string& name : order) outcome.rows.push_back(rows[name]);
  return outcome;
}

VerifyOutcome verify_random(int count, std::uint64_t seed) {
  VerifyOutcome outcome;
  std::map<std::string, VerifyRow> rows;
  CoeffRng rng(seed);

  for (int i = 0; i < count; ++i) {
    const CubicCoeffs c{rng.coefficient(), rng.coefficient(),
                        rng.coefficient()};
    record(outcome, rows, label_of(classify_cubic(c).config),
           check_cubic_agreement(c));
  }
  for (int i = 0; i < count; ++i) {
    const QuarticCoeffs c{rng.coefficient(), rng.coefficient(),
                          rng.coefficient(), rng.coefficient()};
    record(outcome, rows, label_of(classify_quartic(c).config),
           check_quartic_agreement(c));
  }

  // Random draws essentially never land on the D = 0 / D1 = 0 strata, so
  // inject constructed degenerates and run the same three-way check on
  // their coefficients.
  const int injected = std::max(1, count / 20);
  for (size_t i = 0; i < degenerate_labels().size(); ++i) {
    const SampleLabel label = degenerate_labels()[i];
    const auto instances =
        sample_labeled_instances(label, injected, seed ^ (0x9e3779b9ull + i));
    for (const LabeledInstance& instance : instances) {
      const Poly& f = instance.poly;
      if (f.degree() == 3) {
        const CubicCoeffs c{f.coeff(2), f.coeff(1), f.coeff(0)};
        record(outcome, rows, label_of(classify_cubic(c).config),
               check_cubic_agreement(c));
      } else {
        const QuarticCoeffs c{f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)};
        record(outcome, rows, label_of(classify_quartic(c).config),
               check_quartic_agreement(c));
      }
    }
  }

  for (auto& [label, row] : rows) outcome.rows.push_back(row);
  std::sort(outcome.rows.begin(), outcome.rows.end(),
            [](const VerifyRow& a, const VerifyRow& b) {
              return a.label < b.label;
            });
  return outcome;
}

}  // namespace rootcfg
