#include "gltd/rational.hpp"

#include <charconv>

#include "gltd/errors.hpp"

namespace gltd {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::InvalidTruncation: return "InvalidTruncation";
    case ErrorCode::InvalidComponent: return "InvalidComponent";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // from_chars rejects a leading '+', which is fine: we never emit one.
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError,
                "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

} // namespace gltd
