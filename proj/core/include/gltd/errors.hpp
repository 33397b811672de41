#ifndef GLTD_ERRORS_HPP
#define GLTD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gltd {

enum class ErrorCode {
  SideMismatch,
  InvalidN,
  InvalidTruncation,
  InvalidComponent,
  LabelMismatch,
  DegreeMismatch,
  UnknownGenerator,
  RingMismatch,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library for invalid input.
/// Internal invariant violations use std::logic_error instead.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace gltd

#endif // GLTD_ERRORS_HPP
