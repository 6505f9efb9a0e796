#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mellin {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

// ---------------------------------------------------------------------------
// Error taxonomy.  Every throwing operation documents which of these it uses;
// the CLI maps them onto machine-readable error kinds.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error("PoleError", msg) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("ConfigError", msg) {}
};
struct AccuracyError : Error {
  explicit AccuracyError(const std::string& msg) : Error("AccuracyError", msg) {}
};
struct ConditioningError : Error {
  explicit ConditioningError(const std::string& msg)
      : Error("ConditioningError", msg) {}
};
struct BoundaryZeroError : Error {
  explicit BoundaryZeroError(const std::string& msg)
      : Error("BoundaryZeroError", msg) {}
};
struct PhaseTrackingError : Error {
  explicit PhaseTrackingError(const std::string& msg)
      : Error("PhaseTrackingError", msg) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error("OverflowError", msg) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("UsageError", msg) {}
};

// ---------------------------------------------------------------------------
// Small shared helpers.
// ---------------------------------------------------------------------------

// Wraps x into (-pi, pi].
inline double wrap_angle(double x) {
  double w = std::remainder(x, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// e^z - 1 for complex z without cancellation near z = 0.
inline Complex expm1c(Complex z) {
  double x = z.real(), y = z.imag();
  if (x > 700.0) return std::exp(z);  // e^z dominates, -1 is noise
  double em = std::expm1(x);
  double cy = std::cos(y), sy = std::sin(y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  double hy = std::sin(0.5 * y);
  return Complex(em * cy - 2.0 * hy * hy, (em + 1.0) * sy);
}

// An open vertical strip lo < Re(a) < hi with finitely many excluded
// abscissae (e.g. the pole at 1).
struct DomainStrip {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> excluded;

  bool contains(Complex a, double tol = 1e-9) const {
    if (!(a.real() > lo && a.real() < hi)) return false;
    for (double e : excluded)
      if (std::abs(a.real() - e) < tol && std::abs(a.imag()) < tol) return false;
    return true;
  }
};

}  // namespace mellin
