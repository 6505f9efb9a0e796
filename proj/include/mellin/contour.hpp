#pragma once

#include <functional>

#include "mellin/kernels.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/special.hpp"
#include "mellin/types.hpp"

namespace mellin {

// Geometry of the loop contour: in from rho = R along the upper edge of the
// positive real axis, once counter-clockwise around the origin on a circle of
// radius r, and back out to rho = R along the lower edge.
struct ContourSpec {
  double inner_radius = 0.5;        // r
  double truncation = 0.0;          // R; 0 = choose automatically
  int nodes_per_segment = 4096;     // function-evaluation budget per segment
  BranchConvention branch = BranchConvention::SYMMETRIC;
  enum class Orientation { AS_PAPER } orientation = Orientation::AS_PAPER;
};

// A sample of the contour: geometric position, the continuously assigned
// winding angle at that point, and d(position)/dt for the parametrization.
struct PathPoint {
  Complex position;
  double angle;
  Complex velocity;
};

struct PathSegment {
  double t0, t1;
  std::function<PathPoint(double)> at;
  std::string label;
};

// Parametric description of the contour.  sheet_offset is the constant
// (assigned angle - geometric angle): 0 for ZERO_TWO_PI, -pi for SYMMETRIC.
// ray_angle tilts the two rays to +/- that geometric angle; 0 reproduces the
// on-axis path, and any |ray_angle| < pi/2 describes the same homotopy class
// (no kernel poles are crossed), so the integral is unchanged.
struct Path {
  std::vector<PathSegment> segments;
  ContourSpec spec;
  double sheet_offset = 0.0;
  double ray_angle = 0.0;
  double truncation = 0.0;  // resolved R actually used

  PathPoint start() const { return segments.front().at(segments.front().t0); }
  PathPoint end() const { return segments.back().at(segments.back().t1); }
};

// Builds the loop contour for the given spec.  Throws ConfigError if the
// geometry is inconsistent (r >= R, r <= 0).
Path build_hankel(const ContourSpec& spec);

// Tilted-ray variant used internally for strongly oscillatory parameters;
// exposed so deformation invariance can be tested directly.
Path build_hankel(const ContourSpec& spec, double ray_angle,
                  double truncation_override);

// Raw transform along the path: the integral of
//   kernel(g) * s^(alpha-1) ds
// where s is the sheet coordinate |g| e^{i assigned angle} (for the
// symmetric convention s = -g).  No normalization weight is applied.
QuadratureResult integrate_contour(const Path& path, const Kernel& kernel,
                                   Complex alpha);

// Raw transform along the positive real axis: integral over (0, inf) of
// kernel(x) x^(alpha-1) dx, split at x = 1 with log/exponential substitutions
// on the two pieces.  Throws DomainError when Re(alpha) is outside the
// integrability range of the kernel at 0.
QuadratureResult integrate_real_axis(const Kernel& kernel, Complex alpha,
                                     double truncation = 0.0,
                                     int node_budget = 4096);

// The measure normalizations, as multiplicative weights applied to the raw
// transforms above.
enum class NormalizationKind {
  GAMMA,                  // 1 / Gamma(a)
  ETA_GAMMA_AS_WRITTEN,   // (1 - 2^(1-a)) / Gamma(a)
  ETA_GAMMA_CORRECTED,    // 1 / Gamma(a): the weight under which the
                          // Fermi-kernel transform equals the eta function
  HANKEL_GAMMA,           // pi csc(pi a) / (2 pi i Gamma(a))
  HANKEL_HAAR,            // pi csc(pi a) / (2 pi i)
};

Complex normalization_weight(NormalizationKind kind, Complex alpha);
std::string normalization_name(NormalizationKind kind);

// Evaluation domain for a Mellin transform.
struct Domain {
  enum class Kind { REAL_AXIS, HANKEL } kind = Kind::REAL_AXIS;
  ContourSpec spec;

  static Domain real_axis() { return Domain{}; }
  static Domain hankel(ContourSpec s = {}) {
    Domain d;
    d.kind = Kind::HANKEL;
    d.spec = s;
    return d;
  }
};

// Normalized Mellin transform of the kernel: weight(alpha) times the raw
// integral over the requested domain.  Emits a "near-pole-normalization"
// warning when the weight is close to a pole of its own.
QuadratureResult mellin_transform(const Kernel& kernel, Complex alpha,
                                  NormalizationKind norm, const Domain& domain);

namespace detail {
// Ray tilt used for the loop contour at a given Im(alpha); 0 for small |t|.
double ray_tilt_for(double im_alpha);
// Automatic truncation radius for a ray of the given decay rate and tilt.
double auto_truncation(double re_alpha, double decay_rate, double ray_angle);
}  // namespace detail

}  // namespace mellin
