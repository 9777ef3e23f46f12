#pragma once

#include <stdexcept>
#include <string>

namespace fp {

// Error categories. The first five values double as CLI exit codes.
enum class Errc {
  ok = 0,
  inconsistent = 1,        // formula/oracle disagreement or inconsistent Betti data
  parse = 2,               // spec-file syntax or validation failure
  missing_betti = 3,       // non-monomial J without a betti_J override
  oracle_unsupported = 4,  // oracle requested on data it cannot handle
  range = 5,               // value does not fit the caller's buffer/width
  bad_argument = 6,
  no_result = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace fp
