// Classification records the CLI emits: one flat text line or one JSON
// object per polynomial. Exact rational strings only; field order is fixed
// so identical invocations are byte-identical.

#ifndef ROOTCFG_TOOLS_REPORT_HPP
#define ROOTCFG_TOOLS_REPORT_HPP

#include <string>

#include "json.hpp"
#include "rootcfg/cubic.hpp"
#include "rootcfg/quartic.hpp"

namespace rootcfg::cli {

struct ReportOptions {
  bool cross_check = false;
};

struct Record {
  std::string text;
  nlohmann::ordered_json json;
  bool cross_check_failed = false;
};

Record make_cubic_record(const CubicCoeffs& coeffs, const ReportOptions& options);
Record make_quartic_record(const QuarticCoeffs& coeffs,
                           const ReportOptions& options);

}  // namespace rootcfg::cli

#endif  // ROOTCFG_TOOLS_REPORT_HPP
