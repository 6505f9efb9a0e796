#include "mellin/kernels.hpp"

#include <cmath>
#include <limits>

namespace mellin {

Complex Kernel::operator()(Complex g) const {
  switch (kind_) {
    case Kind::BOSE:
      return 1.0 / expm1c(g);
    case Kind::FERMI: {
      Complex e = std::exp(-g);  // 1/(e^g+1) = e^-g/(1+e^-g), robust for big Re g
      return e / (1.0 + e);
    }
    case Kind::EXP:
      return std::exp(-g);
    case Kind::SCALED_EXP:
      return std::exp(-scale_ * g);
    case Kind::TRACE: {
      const auto& eps = spectrum_->values();
      if (spectrum_->is_natural()) {
        // sum_{j=1}^{N} e^(-j g) = e^-g (1 - e^(-N g)) / (1 - e^-g)
        const double n = static_cast<double>(eps.size());
        Complex num = -expm1c(-n * g);
        Complex den = -expm1c(-g);
        return std::exp(-g) * num / den;
      }
      Complex s(0.0, 0.0);
      for (double e : eps) s += std::exp(-e * g);
      return s;
    }
  }
  return {};
}

double Kernel::decay_rate() const {
  switch (kind_) {
    case Kind::BOSE:
    case Kind::FERMI:
    case Kind::EXP:
      return 1.0;
    case Kind::SCALED_EXP:
      return scale_;
    case Kind::TRACE:
      return spectrum_->min_value();
  }
  return 1.0;
}

double Kernel::pole_clearance(double r, double ray_angle) const {
  double first_pole;
  switch (kind_) {
    case Kind::BOSE:
      first_pole = kTwoPi;
      break;
    case Kind::FERMI:
      first_pole = kPi;
      break;
    default:
      return std::numeric_limits<double>::infinity();
  }
  // Poles sit on the imaginary axis at multiples of first_pole (odd multiples
  // for FERMI).  The circle of radius r clears them by first_pole - r; a ray
  // at angle psi from the positive axis clears the k-th pole by
  // k * first_pole * cos(psi) >= first_pole * cos(psi).
  const double circle = first_pole - r;
  const double ray = first_pole * std::cos(std::abs(ray_angle));
  return std::min(circle, ray);
}

std::string Kernel::name() const {
  switch (kind_) {
    case Kind::BOSE: return "bose";
    case Kind::FERMI: return "fermi";
    case Kind::EXP: return "exp";
    case Kind::SCALED_EXP: return "scaled-exp";
    case Kind::TRACE: return "trace";
  }
  return "?";
}

}  // namespace mellin
