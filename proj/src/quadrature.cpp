#include "mellin/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mellin {

namespace {

// 31-point Gauss-Legendre rule on [-1, 1]: positive abscissas and weights.
// The rule is symmetric; node 0 sits at the origin.
constexpr std::array<double, 16> kGlX = {
    0.0,
    0.0995553121523415203251,
    0.1981211993355706077722,
    0.2947180699817016281010,
    0.3883859016082329235255,
    0.4781937820449025356487,
    0.5632491614071492721630,
    0.6427067229242603491046,
    0.7157767845868532287157,
    0.7817331484166249048312,
    0.8399203340965540534121,
    0.8897600299482711772855,
    0.9307569978966481433565,
    0.9625039250929497483804,
    0.9846859096651524840010,
    0.9970874818194770033343,
};
constexpr std::array<double, 16> kGlW = {
    0.0997205447934264514275,
    0.0992368888149583403406,
    0.0977906479700094560597,
    0.0953905572862067122001,
    0.0920509115734350353709,
    0.0877927682040386373428,
    0.0826431142496718937967,
    0.0766350346906022864291,
    0.0698075395507392312208,
    0.0622051182585295442807,
    0.0538775282855267430171,
    0.0448795988001313602373,
    0.0352709944553549306897,
    0.0251160722936755627591,
    0.0144846739347999340423,
    0.0038647537371987873962,
};

Complex gl31(const std::function<Complex(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<long double> acc = static_cast<std::complex<long double>>(
      kGlW[0] * f(c));
  for (std::size_t i = 1; i < kGlX.size(); ++i) {
    const double dx = h * kGlX[i];
    acc += static_cast<std::complex<long double>>(kGlW[i] *
                                                  (f(c - dx) + f(c + dx)));
  }
  acc *= static_cast<long double>(h);
  return Complex(static_cast<double>(acc.real()),
                 static_cast<double>(acc.imag()));
}

struct Panel {
  double a, b;
  Complex whole;        // one-panel value on [a, b]
  Complex left, right;  // values on the two halves
  double err;           // |whole - (left + right)|

  Complex refined() const { return left + right; }
};

Panel make_panel(const std::function<Complex(double)>& f, double a, double b,
                 int& evals) {
  Panel p;
  p.a = a;
  p.b = b;
  const double m = 0.5 * (a + b);
  p.whole = gl31(f, a, b);
  p.left = gl31(f, a, m);
  p.right = gl31(f, m, b);
  p.err = std::abs(p.whole - (p.left + p.right));
  evals += 3 * 31;
  return p;
}

struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, const QuadOptions& opts) {
  QuadratureResult res;
  if (a == b) return res;

  int evals = 0;
  std::complex<long double> sum = 0.0L;
  long double err_sum = 0.0L;
  auto cmp = WorstFirst{};

  // Seed with a few panels so a lone symmetric panel cannot alias the
  // integrand into a spuriously small value.
  constexpr int kSeed = 4;
  std::vector<Panel> store;
  store.reserve(64);
  for (int i = 0; i < kSeed; ++i) {
    const double x0 = a + (b - a) * i / kSeed;
    const double x1 = a + (b - a) * (i + 1) / kSeed;
    Panel p = make_panel(f, x0, x1, evals);
    sum += static_cast<std::complex<long double>>(p.refined());
    err_sum += p.err;
    store.push_back(p);
  }
  std::make_heap(store.begin(), store.end(), cmp);

  const int min_evals_before_stop = 3 * 31 * kSeed;
  while (true) {
    const double total_err = static_cast<double>(err_sum);
    const double mag = std::abs(Complex(static_cast<double>(sum.real()),
                                        static_cast<double>(sum.imag())));
    const double target = std::max(opts.abs_tol,
                                   opts.rel_tol * std::max(mag, 1.0));
    if (evals >= min_evals_before_stop && total_err <= target) break;
    if (evals + 4 * 31 > opts.max_evals) {
      if (opts.throw_on_budget && total_err > 10.0 * target)
        throw AccuracyError("integrate: node budget exhausted at error " +
                            std::to_string(total_err));
      res.warnings.push_back("budget-exhausted");
      break;
    }
    std::pop_heap(store.begin(), store.end(), cmp);
    Panel worst = store.back();
    store.pop_back();
    sum -= static_cast<std::complex<long double>>(worst.refined());
    err_sum -= worst.err;

    const double m = 0.5 * (worst.a + worst.b);
    for (const auto& half : {std::pair{worst.a, m}, std::pair{m, worst.b}}) {
      Panel p = make_panel(f, half.first, half.second, evals);
      sum += static_cast<std::complex<long double>>(p.refined());
      err_sum += p.err;
      store.push_back(p);
      std::push_heap(store.begin(), store.end(), cmp);
    }
  }

  res.value = Complex(static_cast<double>(sum.real()),
                      static_cast<double>(sum.imag()));
  res.err_estimate = static_cast<double>(err_sum);
  res.nodes_used = evals;
  return res;
}

}  // namespace mellin
