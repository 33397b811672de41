#ifndef GLTD_SIGN_HPP
#define GLTD_SIGN_HPP

#include <cstdint>

namespace gltd {

/// A character of Z/2Z = {+1, -1}: the trivial one (id) or the sign (sgn).
/// On the Weil-group side this is the twist bit eps of a 1-dim parameter.
enum class Sign : std::uint8_t { Id = 0, Sgn = 1 };

constexpr const char* to_string(Sign s) noexcept {
  return s == Sign::Id ? "id" : "sgn";
}

} // namespace gltd

#endif // GLTD_SIGN_HPP
