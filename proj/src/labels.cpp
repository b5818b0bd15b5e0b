#include "rootcfg/labels.hpp"

namespace rootcfg {

std::string label_of(const CubicConfig& config) {
  switch (config.kind) {
    case CubicKind::three_distinct_real:
      return "cubic/three_distinct_real";
    case CubicKind::one_real_two_complex:
      return "cubic/one_real_two_complex";
    case CubicKind::double_and_single:
      return config.order == CubicOrder::single_above_double
                 ? "cubic/double_single/single_above"
                 : "cubic/double_single/single_below";
    case CubicKind::triple_root:
      return "cubic/triple";
  }
  return "cubic/unknown";
}

std::string label_of(const QuarticConfig& config) {
  switch (config.kind) {
    case QuarticKind::four_distinct_real:
      return "quartic/four_distinct_real";
    case QuarticKind::two_real_two_complex:
      return "quartic/two_real_two_complex";
    case QuarticKind::four_complex:
      return "quartic/four_complex";
    case QuarticKind::double_two_real_singles:
      switch (*config.double_position) {
        case DoublePosition::single_double_single:
          return "quartic/double_two_singles/single_double_single";
        case DoublePosition::double_below_both:
          return "quartic/double_two_singles/double_below_both";
        case DoublePosition::double_above_both:
          return "quartic/double_two_singles/double_above_both";
      }
      break;
    case QuarticKind::double_complex_pair:
      return "quartic/double_complex_pair";
    case QuarticKind::two_real_doubles:
      return "quartic/two_real_doubles";
    case QuarticKind::two_complex_doubles:
      return "quartic/two_complex_doubles";
    case QuarticKind::triple_and_single:
      return config.triple_position == TriplePosition::triple_below
                 ? "quartic/triple_single/triple_below"
                 : "quartic/triple_single/triple_above";
    case QuarticKind::quadruple_root:
      return "quartic/quadruple";
  }
  return "quartic/unknown";
}

std::string label_of(CubicComplexConfig config) {
  switch (config) {
    case CubicComplexConfig::three_distinct:
      return "cubic/complex/three_distinct";
    case CubicComplexConfig::double_and_single:
      return "cubic/complex/double_single";
    case CubicComplexConfig::triple:
      return "cubic/complex/triple";
  }
  return "cubic/complex/unknown";
}

std::string label_of(QuarticComplexConfig config) {
  switch (config) {
    case QuarticComplexConfig::four_distinct:
      return "quartic/complex/four_distinct";
    case QuarticComplexConfig::double_two_singles:
      return "quartic/complex/double_two_singles";
    case QuarticComplexConfig::two_doubles:
      return "quartic/complex/two_doubles";
    case QuarticComplexConfig::triple_single:
      return "quartic/complex/triple_single";
    case QuarticComplexConfig::quadruple:
      return "quartic/complex/quadruple";
  }
  return "quartic/complex/unknown";
}

std::optional<CubicConfig> parse_cubic_label(std::string_view label) {
  if (label == "cubic/three_distinct_real") {
    return CubicConfig{CubicKind::three_distinct_real, std::nullopt};
  }
  if (label == "cubic/one_real_two_complex") {
    return CubicConfig{CubicKind::one_real_two_complex, std::nullopt};
  }
  if (label == "cubic/double_single/single_above") {
    return CubicConfig{CubicKind::double_and_single,
                       CubicOrder::single_above_double};
  }
  if (label == "cubic/double_single/single_below") {
    return CubicConfig{CubicKind::double_and_single,
                       CubicOrder::single_below_double};
  }
  if (label == "cubic/triple") {
    return CubicConfig{CubicKind::triple_root, std::nullopt};
  }
  return std::nullopt;
}

std::optional<QuarticConfig> parse_quartic_label(std::string_view label) {
  QuarticConfig config{};
  if (label == "quartic/four_distinct_real") {
    config.kind = QuarticKind::four_distinct_real;
  } else if (label == "quartic/two_real_two_complex") {
    config.kind = QuarticKind::two_real_two_complex;
  } else if (label == "quartic/four_complex") {
    config.kind = QuarticKind::four_complex;
  } else if (label == "quartic/double_two_singles/single_double_single") {
    config.kind = QuarticKind::double_two_real_singles;
    config.double_position = DoublePosition::single_double_single;
  } else if (label == "quartic/double_two_singles/double_below_both") {
    config.kind = QuarticKind::double_two_real_singles;
    config.double_position = DoublePosition::double_below_both;
  } else if (label == "quartic/double_two_singles/double_above_both") {
    config.kind = QuarticKind::double_two_real_singles;
    config.double_position = DoublePosition::double_above_both;
  } else if (label == "quartic/double_complex_pair") {
    config.kind = QuarticKind::double_complex_pair;
  } else if (label == "quartic/two_real_doubles") {
    config.kind = QuarticKind::two_real_doubles;
  } else if (label == "quartic/two_complex_doubles") {
    config.kind = QuarticKind::two_complex_doubles;
  } else if (label == "quartic/triple_single/triple_below") {
    config.kind = QuarticKind::triple_and_single;
    config.triple_position = TriplePosition::triple_below;
  } else if (label == "quartic/triple_single/triple_above") {
    config.kind = QuarticKind::triple_and_single;
    config.triple_position = TriplePosition::triple_above;
  } else if (label == "quartic/quadruple") {
    config.kind = QuarticKind::quadruple_root;
  } else {
    return std::nullopt;
  }
  return config;
}

}  // namespace rootcfg
