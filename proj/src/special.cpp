#include "mellin/special.hpp"

#include <array>
#include <cmath>

namespace mellin {

namespace {

// Godfrey's 15-term Lanczos coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;

// Distance from z to the nearest non-positive integer, or a negative value
// if Re z > 0.5 (no pole nearby).
double nonpositive_integer_distance(Complex z) {
  if (z.real() > 0.5) return -1.0;
  double n = std::round(z.real());
  if (n > 0.0) return -1.0;
  return std::abs(z - Complex(n, 0.0));
}

// Lanczos series and base for Re z >= 0.5.
Complex lanczos_sum(Complex z) {
  Complex sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k)
    sum += kLanczos[k] / (z + Complex(static_cast<double>(k) - 1.0, 0.0));
  return sum;
}

Complex gamma_right_half(Complex z) {
  // Gamma(z) = sqrt(2 pi) t^(z-1/2) e^(-t) S(z),  t = z + g - 1/2
  Complex t = z + Complex(kLanczosG - 0.5, 0.0);
  return std::sqrt(2.0 * kPi) * std::pow(t, z - Complex(0.5, 0.0)) *
         std::exp(-t) * lanczos_sum(z);
}

Complex log_gamma_right_half(Complex z) {
  Complex t = z + Complex(kLanczosG - 0.5, 0.0);
  return kHalfLogTwoPi + (z - Complex(0.5, 0.0)) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

}  // namespace

Complex sin_pi(Complex z) {
  double m = std::round(z.real());
  Complex w = z - Complex(m, 0.0);
  Complex s = std::sin(kPi * w);
  return (std::fmod(m, 2.0) != 0.0) ? -s : s;
}

Complex cos_pi(Complex z) {
  double m = std::round(z.real());
  Complex w = z - Complex(m, 0.0);
  Complex c = std::cos(kPi * w);
  return (std::fmod(m, 2.0) != 0.0) ? -c : c;
}

Complex gamma(Complex z) {
  if (nonpositive_integer_distance(z) >= 0.0 &&
      nonpositive_integer_distance(z) < 1e-12)
    throw PoleError("gamma: pole at non-positive integer near z = (" +
                    std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                    ")");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
    return kPi / (sin_pi(z) * gamma_right_half(Complex(1.0, 0.0) - z));
  }
  return gamma_right_half(z);
}

Complex log_gamma(Complex z) {
  double d = nonpositive_integer_distance(z);
  if (d >= 0.0 && d < 1e-12)
    throw PoleError("log_gamma: pole at non-positive integer");
  Complex shift(0.0, 0.0);
  // Shift right until the Lanczos region; each Log is principal, and for
  // Re z > 0 no shifted argument crosses the cut, so Im log_gamma stays
  // continuous along vertical lines in the right half-plane.
  while (z.real() < 0.5) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_right_half(z) - shift;
}

Complex cpow(Complex g, Complex alpha, double assigned_angle) {
  if (g == Complex(0.0, 0.0)) throw DomainError("cpow: zero base");
  double mismatch = wrap_angle(assigned_angle - std::arg(g));
  if (std::abs(mismatch) > 1e-9)
    throw DomainError("cpow: assigned angle inconsistent with arg(g) mod 2pi");
  return pow_on_sheet(std::log(std::abs(g)), assigned_angle, alpha);
}

Complex reflection_weight(Complex alpha) {
  double n = std::round(alpha.real());
  double dist = std::abs(alpha - Complex(n, 0.0));
  if (dist < 1e-9) {
    if (n >= 1.0)
      throw PoleError("reflection_weight: pole at positive integer");
    // 0 * inf limit at non-positive integers; the limit is Gamma(1 - alpha).
    return gamma(Complex(1.0, 0.0) - alpha);
  }
  return kPi / (sin_pi(alpha) * gamma(alpha));
}

}  // namespace mellin
