#ifndef GLTD_RATIONAL_HPP
#define GLTD_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gltd {

/// Exact rational scalar used for every unramified parameter t.
using Rational = boost::rational<std::int64_t>;

/// Lowest-terms text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

} // namespace gltd

#endif // GLTD_RATIONAL_HPP
