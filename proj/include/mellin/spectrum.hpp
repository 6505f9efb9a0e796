#pragma once

#include <algorithm>
#include <cstdint>

#include "mellin/types.hpp"

namespace mellin {

// A finite positive eigenvalue list, either given explicitly (kept sorted
// ascending) or the truncated natural-number spectrum 1..N.
class Spectrum {
public:
  static Spectrum natural(int n) {
    if (n < 1) throw ConfigError("Spectrum: natural truncation needs N >= 1");
    Spectrum s;
    s.natural_ = true;
    s.values_.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) s.values_.push_back(static_cast<double>(j));
    return s;
  }

  static Spectrum explicit_values(std::vector<double> eps) {
    if (eps.empty()) throw ConfigError("Spectrum: empty eigenvalue list");
    for (double e : eps)
      if (!(e > 0.0)) throw ConfigError("Spectrum: eigenvalues must be > 0");
    std::sort(eps.begin(), eps.end());
    Spectrum s;
    s.values_ = std::move(eps);
    return s;
  }

  const std::vector<double>& values() const { return values_; }
  bool is_natural() const { return natural_; }
  std::size_t size() const { return values_.size(); }
  double min_value() const { return values_.front(); }
  double max_value() const { return values_.back(); }

  // Sum of eigenvalues; log of det(e^beta) for this truncation.  For the
  // natural spectrum the closed form N(N+1)/2 is used.
  double sum() const {
    if (natural_) {
      const double n = static_cast<double>(values_.size());
      return 0.5 * n * (n + 1.0);
    }
    double s = 0.0;
    for (double e : values_) s += e;
    return s;
  }

private:
  Spectrum() = default;
  std::vector<double> values_;
  bool natural_ = false;
};

}  // namespace mellin
