// Command-line front end: classify single polynomials, run batches from
// stdin, sample coefficient boxes to labeled CSV, and cross-verify the
// closed-form classifiers against the Sturm engine and the isolation
// oracle.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 verification mismatch, 4 I/O.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "rootcfg/labels.hpp"
#include "rootcfg/rational.hpp"
#include "rootcfg/verify.hpp"

namespace {

using namespace rootcfg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitIo = 4;

std::optional<std::vector<Rat>> parse_tokens(const std::vector<std::string>& tokens,
                                             std::string* bad_token) {
  std::vector<Rat> values;
  for (const std::string& token : tokens) {
    const auto value = parse_rational(token);
    if (!value) {
      if (bad_token) *bad_token = token;
      return std::nullopt;
    }
    values.push_back(*value);
  }
  return values;
}

int run_classify(const std::vector<std::string>& cubic_tokens,
                 const std::vector<std::string>& quartic_tokens,
                 bool cross_check, bool json) {
  std::string bad;
  cli::Record record;
  const cli::ReportOptions options{cross_check};
  if (!cubic_tokens.empty()) {
    const auto values = parse_tokens(cubic_tokens, &bad);
    if (!values) {
      std::cerr << "error: bad rational token '" << bad << "'\n";
      return kExitUsage;
    }
    record = cli::make_cubic_record({(*values)[0], (*values)[1], (*values)[2]},
                                    options);
  } else {
    const auto values = parse_tokens(quartic_tokens, &bad);
    if (!values) {
      std::cerr << "error: bad rational token '" << bad << "'\n";
      return kExitUsage;
    }
    record = cli::make_quartic_record(
        {(*values)[0], (*values)[1], (*values)[2], (*values)[3]}, options);
  }
  if (json) {
    std::cout << record.json.dump(2) << '\n';
  } else {
    std::cout << record.text << '\n';
  }
  if (!std::cout) return kExitIo;
  return record.cross_check_failed ? kExitMismatch : kExitOk;
}

std::vector<std::string> split_record_line(std::string line) {
  if (!line.empty() && line.front() == '[') line.erase(0, 1);
  if (!line.empty() && line.back() == ']') line.pop_back();
  for (char& c : line) {
    if (c == ',') c = ' ';
  }
  std::istringstream stream(line);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

int run_batch(bool cross_check, bool json) {
  const cli::ReportOptions options{cross_check};
  int line_number = 0;
  bool any_parse_error = false;
  bool any_mismatch = false;
  std::string line;
  while (std::getline(std::cin, line)) {
    ++line_number;
    const auto tokens = split_record_line(line);
    if (tokens.empty()) continue;

    std::string bad;
    const auto values = parse_tokens(tokens, &bad);
    std::string error;
    if (!values) {
      error = "bad rational token '" + bad + "'";
    } else if (values->size() != 3 && values->size() != 4) {
      error = "expected 3 or 4 coefficients, got " +
              std::to_string(values->size());
    }
    if (!error.empty()) {
      any_parse_error = true;
      if (json) {
        nlohmann::ordered_json j;
        j["error"] = error;
        j["line"] = line_number;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "error=parse line=" << line_number << " detail=" << error
                  << '\n';
      }
      continue;
    }

    const cli::Record record =
        values->size() == 3
            ? cli::make_cubic_record(
                  {(*values)[0], (*values)[1], (*values)[2]}, options)
            : cli::make_quartic_record(
                  {(*values)[0], (*values)[1], (*values)[2], (*values)[3]},
                  options);
    any_mismatch = any_mismatch || record.cross_check_failed;
    std::cout << (json ? record.json.dump() : record.text) << '\n';
  }
  if (std::cin.bad() || !std::cout) return kExitIo;
  if (any_mismatch) return kExitMismatch;
  return any_parse_error ? kExitUsage : kExitOk;
}

struct Axis {
  Rat lo, hi;
  int steps = 1;
  Rat at(int index) const {
    if (steps == 1) return lo;
    return lo + Rat(index) * (hi - lo) / (steps - 1);
  }
};

std::optional<Axis> parse_axis_spec(const std::string& spec) {
  const auto colon1 = spec.find(':');
  const auto colon2 = spec.find(':', colon1 + 1);
  if (colon1 == std::string::npos || colon2 == std::string::npos ||
      spec.find(':', colon2 + 1) != std::string::npos) {
    return std::nullopt;
  }
  const auto lo = parse_rational(spec.substr(0, colon1));
  const auto hi = parse_rational(spec.substr(colon1 + 1, colon2 - colon1 - 1));
  const std::string steps_text = spec.substr(colon2 + 1);
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  int steps = 0;
  try {
    size_t used = 0;
    steps = std::stoi(steps_text, &used);
    if (used != steps_text.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (steps < 1) return std::nullopt;
  return Axis{*lo, *hi, steps};
}

int run_sample(bool cubic, const std::vector<std::string>& box_specs) {
  const std::vector<std::string> axis_names =
      cubic ? std::vector<std::string>{"p", "q", "r"}
            : std::vector<std::string>{"p", "q", "r", "s"};
  std::vector<std::optional<Axis>> axes(axis_names.size());
  for (const std::string& spec : box_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: bad box spec '" << spec << "'\n";
      return kExitUsage;
    }
    const std::string name = spec.substr(0, eq);
    const auto axis = parse_axis_spec(spec.substr(eq + 1));
    size_t index = axis_names.size();
    for (size_t i = 0; i < axis_names.size(); ++i) {
      if (axis_names[i] == name) index = i;
    }
    if (index == axis_names.size() || !axis || axes[index].has_value()) {
      std::cerr << "error: bad box spec '" << spec << "'\n";
      return kExitUsage;
    }
    axes[index] = axis;
  }
  for (size_t i = 0; i < axes.size(); ++i) {
    if (!axes[i]) {
      std::cerr << "error: missing box spec for axis " << axis_names[i] << "\n";
      return kExitUsage;
    }
  }

  for (size_t i = 0; i < axis_names.size(); ++i) {
    std::cout << axis_names[i] << ',';
  }
  std::cout << "label\n";

  std::vector<int> index(axes.size(), 0);
  while (true) {
    std::vector<Rat> point(axes.size());
    for (size_t i = 0; i < axes.size(); ++i) {
      point[i] = axes[i]->at(index[i]);
      std::cout << to_string(point[i]) << ',';
    }
    if (cubic) {
      std::cout << label_of(classify_cubic({point[0], point[1], point[2]}).config)
                << '\n';
    } else {
      std::cout << label_of(
                       classify_quartic({point[0], point[1], point[2], point[3]})
                           .config)
                << '\n';
    }
    // Advance the last axis fastest: lexicographic order in grid indices.
    int axis = static_cast<int>(axes.size()) - 1;
    while (axis >= 0 && ++index[axis] == axes[axis]->steps) {
      index[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return std::cout ? kExitOk : kExitIo;
}

int run_verify(const std::string& mode, int count, std::uint64_t seed) {
  const VerifyOutcome outcome = mode == "constructed"
                                    ? verify_constructed(count, seed)
                                    : verify_random(count, seed);
  std::cout << "mode=" << mode << " count=" << count << " seed=" << seed
            << '\n';
  for (const VerifyRow& row : outcome.rows) {
    std::cout << row.label << " checked=" << row.checked << " ok=" << row.ok
              << '\n';
  }
  std::cout << "total=" << outcome.total
            << " disagreements=" << outcome.disagreements << '\n';
  for (const std::string& example : outcome.counterexamples) {
    std::cout << "counterexample: " << example << '\n';
  }
  if (!std::cout) return kExitIo;
  return outcome.disagreements == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root-configuration classifier for monic cubics and quartics"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Classify one polynomial from its coefficients");
  std::vector<std::string> cubic_tokens, quartic_tokens;
  bool cross_check = false, json = false;
  auto* cubic_opt =
      classify->add_option("--cubic", cubic_tokens, "p q r of x^3+px^2+qx+r")
          ->expected(3);
  auto* quartic_opt =
      classify
          ->add_option("--quartic", quartic_tokens, "p q r s of x^4+px^3+qx^2+rx+s")
          ->expected(4);
  cubic_opt->excludes(quartic_opt);
  classify->add_flag("--cross-check", cross_check,
                     "Compare against the Sturm engine and the oracle");
  classify->add_flag("--json", json, "Emit a JSON record");

  // batch
  auto* batch = app.add_subcommand(
      "batch", "Classify line-delimited coefficient records from stdin");
  bool batch_cross = false, batch_json = false;
  batch->add_flag("--cross-check", batch_cross,
                  "Compare against the Sturm engine and the oracle");
  batch->add_flag("--json", batch_json, "Emit JSON records");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Classify a coefficient grid and emit labeled CSV");
  bool sample_cubic = false, sample_quartic = false;
  std::vector<std::string> box_specs;
  sample->add_flag("--cubic", sample_cubic, "Sample the cubic space");
  sample->add_flag("--quartic", sample_quartic, "Sample the quartic space");
  sample->add_option("--box", box_specs,
                     "Axis grid AXIS=lo:hi:steps (one per coefficient)");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Three-way agreement run; nonzero exit on any mismatch");
  std::string verify_mode;
  int verify_count = 0;
  std::uint64_t verify_seed = 0;
  verify->add_option("mode", verify_mode, "constructed or random")
      ->required()
      ->check(CLI::IsMember({"constructed", "random"}));
  verify->add_option("count", verify_count, "instances per family / draws")
      ->required();
  verify->add_option("--seed", verify_seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      if (cubic_tokens.empty() == quartic_tokens.empty()) {
        std::cerr << "error: exactly one of --cubic/--quartic is required\n";
        return kExitUsage;
      }
      return run_classify(cubic_tokens, quartic_tokens, cross_check, json);
    }
    if (batch->parsed()) return run_batch(batch_cross, batch_json);
    if (sample->parsed()) {
      if (sample_cubic == sample_quartic) {
        std::cerr << "error: exactly one of --cubic/--quartic is required\n";
        return kExitUsage;
      }
      return run_sample(sample_cubic, box_specs);
    }
    if (verify->parsed()) {
      if (verify_count < 1) {
        std::cerr << "error: count must be >= 1\n";
        return kExitUsage;
      }
      return run_verify(verify_mode, verify_count, verify_seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
