#include "sdsirs/errors.hpp"

namespace sdsirs {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::identity_type: return "IdentityType";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::degree_too_small: return "DegreeTooSmall";
    case Errc::no_closed_form: return "NoClosedForm";
    case Errc::level_out_of_range: return "LevelOutOfRange";
    case Errc::level_too_small: return "LevelTooSmall";
    case Errc::invalid_label: return "InvalidLabel";
    case Errc::nonpositive_input: return "NonpositiveInput";
    case Errc::exponent_condition_failed: return "ExponentConditionFailed";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::overflow: return "Overflow";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sdsirs
