// Three-way cross verification: closed-form classifier vs Sturm root count
// vs the isolation oracle, over constructed labeled instances or random
// coefficient samples. Shared by the CLI `verify` command and the
// acceptance suite.

#ifndef ROOTCFG_VERIFY_HPP
#define ROOTCFG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootcfg/cubic.hpp"
#include "rootcfg/oracle.hpp"
#include "rootcfg/quartic.hpp"

namespace rootcfg {

/// Full agreement check for one polynomial. Returns a human-readable
/// description of the first disagreement, or nullopt when everything —
/// configuration, real-root count, complex configuration, exact multiple
/// roots, leftover-quadratic semantics, positive-root count — agrees.
std::optional<std::string> check_cubic_agreement(const CubicCoeffs& c);
std::optional<std::string> check_quartic_agreement(const QuarticCoeffs& c);

/// Constructed-instance check: the oracle must reproduce the construction
/// exactly and the classifier must recover its configuration.
std::optional<std::string> check_constructed(const LabeledInstance& instance);

struct VerifyRow {
  std::string label;
  int checked = 0;
  int ok = 0;
};

struct VerifyOutcome {
  std::vector<VerifyRow> rows;  // fixed, deterministic order
  int total = 0;
  int disagreements = 0;
  std::vector<std::string> counterexamples;  // capped
};

/// count instances of each of the 19 generator labels.
VerifyOutcome verify_constructed(int count, std::uint64_t seed);

/// count random cubics and count random quartics (numerators and
/// denominators up to 50), plus deliberate constructed injections onto the
/// D = 0 and D1 = 0 strata; rows report the classifier-label distribution.
VerifyOutcome verify_random(int count, std::uint64_t seed);

}  // namespace rootcfg

#endif  // ROOTCFG_VERIFY_HPP
