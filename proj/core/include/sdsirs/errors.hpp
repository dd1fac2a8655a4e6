#pragma once

#include <stdexcept>
#include <string>

namespace sdsirs {

enum class Errc {
  identity_type,
  degree_mismatch,
  degree_too_large,
  degree_too_small,
  no_closed_form,
  level_out_of_range,
  level_too_small,
  invalid_label,
  nonpositive_input,
  exponent_condition_failed,
  unsupported_format,
  parse_error,
  invalid_argument,
  overflow,
};

const char* errc_name(Errc code) noexcept;

/// Precondition violation. Carries a code so callers (in particular the CLI
/// exit-code mapping) can tell rejected input from internal failures.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace sdsirs
