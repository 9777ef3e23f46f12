#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace fp {

/// Parsed contents of an ideal spec file.
struct ParsedSpec {
  VariableContext ctx;
  std::vector<Polynomial> gens_I;
  std::vector<Polynomial> gens_Iprime;
  std::optional<std::vector<Integer>> betti_J;
  std::optional<std::vector<Integer>> betti_Jprime;
};

struct ParseOptions {
  std::optional<Field> field_override;  // CLI --field beats the file's field line
  long max_degree = 50;                 // per-generator term degree guard
};

/// Parse the line-oriented spec format. Throws Error(Errc::parse) with a
/// "line L, col C" prefix on syntax errors and on validation failures
/// (variable out of range, I-generator mentioning a y-variable, non-prime
/// characteristic, malformed Betti override).
ParsedSpec parse_ideal_spec(const std::string& text, const ParseOptions& opts = {});

/// Canonical serialization; parse(format(s)) reproduces s exactly.
std::string format_ideal_spec(const ParsedSpec& spec);

/// "q" or "gf:<p>" as accepted by the --field flag.
Field parse_field_flag(const std::string& s);

}  // namespace fp
