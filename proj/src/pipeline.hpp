#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiber.hpp"
#include "resolutions.hpp"
#include "series.hpp"
#include "specfile.hpp"

namespace fp {

enum class Command { reduce, betti, poincare, ranks, verify };

Command parse_command(const std::string& name);

struct PipelineOptions {
  std::optional<Field> field;  // overrides the spec file's field line
  size_t max_gens = 14;        // combined generator cap for the oracle path
  long max_degree = 50;        // per-generator term degree cap
  bool with_oracle = false;
  std::optional<unsigned long long> seed;  // echoed into the report
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Everything a command computed, plus the rendered text and JSON forms.
struct Report {
  Command command = Command::reduce;
  ParsedSpec spec;
  SplitIdeal split_I, split_Iprime;

  std::optional<IntSeq> betti_J, betti_Jprime;
  std::vector<Polynomial> minimal_gens;
  std::optional<IntSeq> betti_formula;
  std::optional<IntSeq> betti_oracle;
  std::optional<bool> agreement;
  std::optional<Poly> poincare;
  std::optional<bool> functional_equation;
  std::optional<IntSeq> cone;
  std::optional<bool> cone_minimal;
  std::vector<CheckResult> checks;
  std::optional<unsigned long long> seed;

  int exit_code = 0;
  std::string text;
  std::string json;
};

/// Parse, reduce, and run one command. Throws Error for parse/validation
/// failures, missing Betti input, and oracle-unsupported conditions; check
/// failures and oracle disagreement are reported via exit_code 1 instead.
Report run_pipeline(Command cmd, const std::string& spec_text, const PipelineOptions& opts);

}  // namespace fp
