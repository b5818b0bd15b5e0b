// Stable string identifiers for every configuration, so downstream tooling
// never parses prose. The vocabulary is closed and round-trips.

#ifndef ROOTCFG_LABELS_HPP
#define ROOTCFG_LABELS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "rootcfg/cubic.hpp"
#include "rootcfg/quartic.hpp"

namespace rootcfg {

std::string label_of(const CubicConfig& config);
std::string label_of(const QuarticConfig& config);
std::string label_of(CubicComplexConfig config);
std::string label_of(QuarticComplexConfig config);

std::optional<CubicConfig> parse_cubic_label(std::string_view label);
std::optional<QuarticConfig> parse_quartic_label(std::string_view label);

}  // namespace rootcfg

#endif  // ROOTCFG_LABELS_HPP
