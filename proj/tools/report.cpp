#include "report.hpp"

#include <utility>
#include <vector>

#include "rootcfg/labels.hpp"
#include "rootcfg/oracle.hpp"
#include "rootcfg/sturm.hpp"
#include "rootcfg/verify.hpp"

namespace rootcfg::cli {

namespace {

char sign_char(const Rat& value) {
  const int s = sign(value);
  return s < 0 ? '-' : (s > 0 ? '+' : '0');
}

class RecordBuilder {
 public:
  void field(const std::string& key, const std::string& value) {
    if (!text_.empty()) text_ += ' ';
    text_ += key + '=' + value;
    json_[key] = value;
  }

  void field(const std::string& key, int value) {
    if (!text_.empty()) text_ += ' ';
    text_ += key + '=' + std::to_string(value);
    json_[key] = value;
  }

  void witnesses(const std::vector<std::pair<std::string, Rat>>& values) {
    std::string signs;
    nlohmann::ordered_json jw, js;
    for (const auto& [name, value] : values) {
      field(name, to_string(value));
      if (!signs.empty()) signs += ',';
      signs += name + ':' + sign_char(value);
      js[name] = std::string(1, sign_char(value));
    }
    if (!text_.empty()) text_ += ' ';
    text_ += "signs=" + signs;
    json_["signs"] = js;
  }

  Record finish(bool cross_check_failed) {
    return {std::move(text_), std::move(json_), cross_check_failed};
  }

 private:
  std::string text_;
  nlohmann::ordered_json json_;
};

void append_cross_check(RecordBuilder& builder, const Poly& poly,
                        const std::string& oracle_label,
                        const std::optional<std::string>& failure) {
  builder.field("cross_check", failure ? "FAIL" : "ok");
  builder.field("sturm_real", count_distinct_real_roots(poly));
  builder.field("oracle", oracle_label);
  if (failure) builder.field("detail", *failure);
}

}  // namespace

Record make_cubic_record(const CubicCoeffs& coeffs,
                         const ReportOptions& options) {
  const CubicReport report = classify_cubic(coeffs);
  RecordBuilder builder;
  builder.field("degree", 3);
  builder.field("p", to_string(coeffs.p));
  builder.field("q", to_string(coeffs.q));
  builder.field("r", to_string(coeffs.r));
  builder.field("label", label_of(report.config));
  builder.field("complex", label_of(cubic_complex_configuration(coeffs)));
  builder.witnesses({{"D", report.invariants.D},
                     {"P", report.invariants.P},
                     {"E", report.invariants.E},
                     {"T", report.invariants.T}});
  if (report.double_root) {
    builder.field("double_root", to_string(*report.double_root));
  }
  if (report.single_root) {
    builder.field("single_root", to_string(*report.single_root));
  }
  if (report.triple_root) {
    builder.field("triple_root", to_string(*report.triple_root));
  }
  if (report.positive_single_count) {
    builder.field("positive_singles", *report.positive_single_count);
  }
  bool failed = false;
  if (options.cross_check) {
    const auto failure = check_cubic_agreement(coeffs);
    failed = failure.has_value();
    const Poly f = cubic_poly(coeffs);
    const auto structure_config = cubic_config_of(oracle_classify(f));
    append_cross_check(builder, f,
                       structure_config ? label_of(*structure_config)
                                        : "unrecognized",
                       failure);
  }
  return builder.finish(failed);
}

Record make_quartic_record(const QuarticCoeffs& coeffs,
                           const ReportOptions& options) {
  const QuarticReport report = classify_quartic(coeffs);
  RecordBuilder builder;
  builder.field("degree", 4);
  builder.field("p", to_string(coeffs.p));
  builder.field("q", to_string(coeffs.q));
  builder.field("r", to_string(coeffs.r));
  builder.field("s", to_string(coeffs.s));
  builder.field("label", label_of(report.config));
  builder.field("complex", label_of(quartic_complex_configuration(coeffs)));
  builder.witnesses({{"D", report.invariants.D},
                     {"D1", report.invariants.D1},
                     {"D2", report.invariants.D2},
                     {"D3", report.invariants.D3},
                     {"D4", report.invariants.D4},
                     {"D5", report.invariants.D5},
                     {"G", report.invariants.G},
                     {"H", report.invariants.H},
                     {"K", report.invariants.K}});
  if (report.double_root) {
    builder.field("double_root", to_string(*report.double_root));
    builder.field("leftover", leftover_quadratic(coeffs).str("y"));
  }
  if (report.triple_root) {
    builder.field("triple_root", to_string(*report.triple_root));
  }
  if (report.single_root) {
    builder.field("single_root", to_string(*report.single_root));
  }
  if (report.quadruple_root) {
    builder.field("quadruple_root", to_string(*report.quadruple_root));
  }
  if (report.double_pair_quadratic) {
    builder.field("double_pair", report.double_pair_quadratic->str());
  }
  bool failed = false;
  if (options.cross_check) {
    const auto failure = check_quartic_agreement(coeffs);
    failed = failure.has_value();
    const Poly f = quartic_poly(coeffs);
    const auto structure_config = quartic_config_of(oracle_classify(f));
    append_cross_check(builder, f,
                       structure_config ? label_of(*structure_config)
                                        : "unrecognized",
                       failure);
  }
  return builder.finish(failed);
}

}  // namespace rootcfg::cli
