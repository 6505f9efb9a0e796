#pragma once

#include <optional>

#include "mellin/spectrum.hpp"
#include "mellin/types.hpp"

namespace mellin {

// The spectral kernels whose Mellin transforms the workbench evaluates.
//
//   BOSE        1/(e^g - 1)      poles at g in 2 pi i Z
//   FERMI       1/(e^g + 1)      poles at g in i pi (2Z + 1)
//   EXP         e^-g             entire
//   TRACE       sum_j e^(-eps_j g)   entire (finite spectrum)
//   SCALED_EXP  e^(-c g), c > 0  entire
class Kernel {
public:
  enum class Kind { BOSE, FERMI, EXP, TRACE, SCALED_EXP };

  static Kernel bose() { return Kernel(Kind::BOSE); }
  static Kernel fermi() { return Kernel(Kind::FERMI); }
  static Kernel exponential() { return Kernel(Kind::EXP); }
  static Kernel trace(Spectrum s) {
    Kernel k(Kind::TRACE);
    k.spectrum_ = std::move(s);
    return k;
  }
  static Kernel scaled_exp(double c) {
    if (!(c > 0.0)) throw ConfigError("Kernel: scale must be > 0");
    Kernel k(Kind::SCALED_EXP);
    k.scale_ = c;
    return k;
  }

  Kind kind() const { return kind_; }
  const Spectrum& spectrum() const { return *spectrum_; }
  double scale() const { return scale_; }

  Complex operator()(Complex g) const;

  // Exponential decay rate of the kernel along rays into the right
  // half-plane; governs how far out a truncated contour must reach.
  double decay_rate() const;

  // Smallest Re(alpha) for which the transform integral converges at 0+.
  double min_re_alpha() const { return kind_ == Kind::BOSE ? 1.0 : 0.0; }

  // Distance from the nearest kernel pole to the imaginary-axis height 0
  // circle of radius r and to rays at |angle| <= psi from the positive real
  // axis.  Infinite for entire kernels.
  double pole_clearance(double r, double ray_angle) const;

  std::string name() const;

private:
  explicit Kernel(Kind k) : kind_(k) {}
  Kind kind_;
  std::optional<Spectrum> spectrum_;
  double scale_ = 1.0;
};

}  // namespace mellin
