#pragma once

#include "mellin/types.hpp"

namespace mellin {

// How a continuous winding angle is assigned along a loop contour.
//
// ZERO_TWO_PI puts the cut on the positive real axis and uses angles in
// (0, 2pi): the incoming ray edge carries angle ~0, the outgoing edge ~2pi.
// SYMMETRIC offsets every assigned angle by -pi, so the two ray edges carry
// the phases exp(-i pi (a-1)) and exp(+i pi (a-1)); this is the convention
// under which the loop integral of exp(-g) g^(a-1) equals 2i sin(pi a) Gamma(a)
// with no extra phase.
enum class BranchConvention { ZERO_TWO_PI, SYMMETRIC };

// Complex gamma function, Lanczos approximation (15-term Godfrey coefficient
// set, g = 607/128) with reflection for Re z < 1/2.
//
// Relative error below ~1e-13 for |z| <= 50.  Throws PoleError if z is within
// 1e-12 of a non-positive integer.
Complex gamma(Complex z);

// log Gamma(z), principal determination.  For Re z >= 1/2 the Lanczos form is
// used directly in log space; for Re z < 1/2 the argument is shifted upward
// with log Gamma(z) = log Gamma(z+1) - Log z, which keeps the imaginary part
// continuous along any vertical line with Re z > 0.
// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

// sin(pi z) and cos(pi z) with argument reduction so that accuracy does not
// degrade near integers or for moderately large |Im z|.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// g^alpha evaluated on an explicitly chosen sheet:
//   exp(alpha * (ln|g| + i * assigned_angle)).
// The angle must agree with arg(g) modulo 2pi to within 1e-9; it is supplied
// by the caller (a contour walker knows which sheet it is on) and never
// recomputed from g.  Throws DomainError if g = 0.
Complex cpow(Complex g, Complex alpha, double assigned_angle);

// Sheet power from magnitude/angle directly; the raw primitive behind cpow.
inline Complex pow_on_sheet(double log_abs_g, double assigned_angle,
                            Complex alpha) {
  return std::exp(alpha * Complex(log_abs_g, assigned_angle));
}

// pi / (sin(pi a) Gamma(a)), the regularizing weight attached to loop-contour
// Mellin transforms.  Equals Gamma(1-a) by reflection; the implementation
// goes through the defining quotient except within 1e-9 of a non-positive
// integer, where the removable 0*inf limit is taken.  Throws PoleError within
// 1e-9 of a positive integer (a genuine pole).
Complex reflection_weight(Complex alpha);

}  // namespace mellin
