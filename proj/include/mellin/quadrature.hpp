#pragma once

#include <functional>

#include "mellin/types.hpp"

namespace mellin {

// Result of a numerical integration (or of a normalized Mellin evaluation
// built on one).  err_estimate is an a-posteriori bound: it dominates the
// change observed when the node budget is doubled.
struct QuadratureResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  int nodes_used = 0;
  std::vector<std::string> warnings;

  QuadratureResult& operator+=(const QuadratureResult& o) {
    value += o.value;
    err_estimate += o.err_estimate;
    nodes_used += o.nodes_used;
    warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
    return *this;
  }
};

struct QuadOptions {
  double abs_tol = 1e-12;   // stop when the accumulated bound is below this
  double rel_tol = 1e-11;   // ... or below rel_tol * max(|value|, 1)
  int max_evals = 8192;     // function-evaluation budget
  bool throw_on_budget = false;  // AccuracyError instead of a warning
};

// Adaptive Gauss-Legendre integration of a complex-valued integrand over
// [a, b].  Panels of 31 nodes; the error of a panel is taken as the
// difference between its value and the sum over its two halves, and the
// worst panel is bisected until the accumulated bound meets tolerance.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, const QuadOptions& opts = {});

}  // namespace mellin
