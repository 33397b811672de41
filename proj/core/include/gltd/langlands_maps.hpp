#ifndef GLTD_LANGLANDS_MAPS_HPP
#define GLTD_LANGLANDS_MAPS_HPP

// Local Langlands correspondence for GL(n,R) and GL(n,C) on tempered data,
// and the tempered-side base change (R -> C) and automorphic induction
// (C -> R) maps. All maps act on canonical representatives, so they are
// well defined on W_sigma-orbits.

#include "gltd/tempered_dual.hpp"
#include "gltd/weil_reps.hpp"

namespace gltd {

/// Real-side parameter -> GL(dim, R) point. 2-dim summands fill discrete
/// slots, characters fill sign slots. Throws Error(SideMismatch).
RealPoint llc_real(const LParameter& p);

/// Inverse of llc_real; the result is canonical.
LParameter llc_real_inv(const RealPoint& pt);

/// Complex-side parameter -> GL(dim, C) point. Throws Error(SideMismatch).
ComplexPoint llc_complex(const LParameter& p);

LParameter llc_complex_inv(const ComplexPoint& pt);

/// Discrete slot (ell, t) -> (ell, t), (-ell, t); sign slot (tau, t) -> (0, 2t).
ComplexPoint base_change_point(const RealPoint& pt);

/// GL(n,C) -> GL(2n,R). Slot (ell != 0, t) -> discrete (|ell|, t);
/// slot (0, t) -> sign slots (id, t/2), (sgn, t/2).
RealPoint auto_induce_point(const ComplexPoint& pt);

/// Component images of the two maps; they depend only on the component.
ComplexComponent base_change_component(const RealComponent& c);
RealComponent auto_induce_component(const ComplexComponent& c);

} // namespace gltd

#endif // GLTD_LANGLANDS_MAPS_HPP
