// Independent ground truth for the classifiers: exact multiplicity structure
// via repeated gcd, real-root isolation by Sturm-count bisection with exact
// rational endpoints, and a deterministic generator of labeled test
// instances. No floating point and no tolerances anywhere.

#ifndef ROOTCFG_ORACLE_HPP
#define ROOTCFG_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rootcfg/cubic.hpp"
#include "rootcfg/polynomial.hpp"
#include "rootcfg/quartic.hpp"

namespace rootcfg {

/// Either an exact root (lo == hi) or an open interval (lo, hi) containing
/// exactly one distinct real root.
struct IsolatingInterval {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
  bool contains(const Rat& x) const {
    return is_point() ? x == lo : (lo < x && x < hi);
  }
  bool operator==(const IsolatingInterval&) const = default;
};

struct RealRootInfo {
  IsolatingInterval interval;
  int multiplicity = 1;
};

struct RootStructure {
  std::vector<RealRootInfo> real_roots;  // ordered left to right
  std::map<int, int> complex_pairs;      // multiplicity -> conjugate pairs

  int distinct_real_count() const {
    return static_cast<int>(real_roots.size());
  }
  /// Multiplicities of the real roots in left-to-right order.
  std::vector<int> real_multiplicity_sequence() const;
  /// Multiplicities of all distinct complex roots, sorted descending
  /// (each conjugate pair contributes its multiplicity twice).
  std::vector<int> complex_multiplicity_multiset() const;
  /// Sum of all multiplicities = degree of the classified polynomial.
  int total_degree() const;
};

/// Exact decomposition monicize(f) = prod g_i^{m_i} with the g_i squarefree,
/// monic and pairwise coprime, by repeated gcd(f, f'). Factors are reported
/// in increasing multiplicity order.
std::vector<std::pair<Poly, int>> squarefree_multiplicity_split(const Poly& f);

/// Disjoint isolating intervals for the real roots of a squarefree f,
/// ordered left to right. Rational roots hit by bisection midpoints come
/// back as exact point intervals. Throws NotSquarefree if gcd(f, f') is
/// nonconstant.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& f);

/// Shrink an isolating interval of a squarefree f below the given width by
/// sign bisection. Collapses to a point if a midpoint lands on the root.
IsolatingInterval refine_interval(const Poly& f, IsolatingInterval interval,
                                  const Rat& max_width);

/// Full multiplicity structure with ordered real roots. Requires deg f >= 1.
RootStructure oracle_classify(const Poly& f);

/// Configuration implied by a degree-3/degree-4 structure; nullopt when the
/// structure does not belong to a cubic/quartic.
std::optional<CubicConfig> cubic_config_of(const RootStructure& structure);
std::optional<QuarticConfig> quartic_config_of(const RootStructure& structure);

/// Generator vocabulary: every cubic and quartic configuration, including
/// ordering sub-cases, plus the order-agnostic double+singles families.
enum class SampleLabel {
  cubic_three_distinct_real,
  cubic_one_real_two_complex,
  cubic_double_single,  // order chosen by the generator
  cubic_double_single_above,
  cubic_double_single_below,
  cubic_triple,
  quartic_four_distinct_real,
  quartic_two_real_two_complex,
  quartic_four_complex,
  quartic_double_two_singles,  // order chosen by the generator
  quartic_single_double_single,
  quartic_double_below_both,
  quartic_double_above_both,
  quartic_double_complex_pair,
  quartic_two_real_doubles,
  quartic_two_complex_doubles,
  quartic_triple_below,
  quartic_triple_above,
  quartic_quadruple,
};

const std::vector<SampleLabel>& all_sample_labels();
std::string_view sample_label_name(SampleLabel label);
bool sample_label_is_cubic(SampleLabel label);

struct LabeledInstance {
  Poly poly;
  RootStructure expected;  // exact roots as point intervals
};

/// Seed-reproducible instances realizing the label: rational roots for the
/// real parts, rational (b, c) with b^2 - 4c < 0 for conjugate pairs.
std::vector<LabeledInstance> sample_labeled_instances(SampleLabel label,
                                                      int count,
                                                      std::uint64_t seed);

}  // namespace rootcfg

#endif  // ROOTCFG_ORACLE_HPP
