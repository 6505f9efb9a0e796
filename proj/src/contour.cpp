#include "mellin/contour.hpp"

#include <cmath>

namespace mellin {

namespace detail {

double ray_tilt_for(double im_alpha) {
  // Tilting the rays toward the saddle of e^-g g^(a-1) removes the
  // exponentially deep cancellation the on-axis path suffers for large
  // |Im alpha|.  The residue theorem makes the tilted path exactly
  // equivalent: no kernel pole lies between the two homotopic contours.
  const double t = std::abs(im_alpha);
  if (t < 1e-12) return 0.0;
  const double delta = std::max(8.0 / t, 0.22);
  return std::max(0.0, 0.5 * kPi - delta);
}

double auto_truncation(double re_alpha, double decay_rate, double ray_angle) {
  // Choose R so that |kernel| |g^(a-1)| at the endpoint is below roughly
  // 1e-18 of the integrand's scale on the ray: decay_rate * R * cos(psi)
  // must beat 45 plus the polynomial growth of rho^(Re a - 1).
  const double cosp = std::cos(ray_angle);
  const double sigma = std::max(re_alpha, 1.0);
  double budget = 45.0 + sigma * std::log(sigma + 2.0);
  double r = std::max(40.0, budget) / (decay_rate * cosp);
  // One fix-point pass for the log term picked up by the larger R.
  r = (budget + std::max(0.0, re_alpha - 1.0) * std::log(r + 2.0)) /
      (decay_rate * cosp);
  return std::max(r, 40.0 / decay_rate);
}

}  // namespace detail

namespace {

// Ray parametrization rho(u) = r + (e^u - 1) for u in [0, U]: logarithmic
// stretching that resolves both the inner region and the exponential tail.
struct RayMap {
  double r, u_max;
  double rho(double u) const { return r + std::expm1(u); }
  double drho(double u) const { return std::exp(u); }
};

}  // namespace

Path build_hankel(const ContourSpec& spec) {
  return build_hankel(spec, 0.0, spec.truncation);
}

Path build_hankel(const ContourSpec& spec, double ray_angle,
                  double truncation_override) {
  if (!(spec.inner_radius > 0.0))
    throw ConfigError("build_hankel: inner radius must be > 0");
  double R = truncation_override > 0.0 ? truncation_override : spec.truncation;
  if (R <= 0.0) R = std::max(40.0, 8.0 * spec.inner_radius);
  if (spec.inner_radius >= R)
    throw ConfigError("build_hankel: need r < R");
  if (std::abs(ray_angle) >= 0.5 * kPi)
    throw ConfigError("build_hankel: ray tilt must be below pi/2");

  const double r = spec.inner_radius;
  const double psi = ray_angle;
  const double offset =
      spec.branch == BranchConvention::SYMMETRIC ? -kPi : 0.0;
  const RayMap ray{r, std::log1p(R - r)};

  Path path;
  path.spec = spec;
  path.sheet_offset = offset;
  path.ray_angle = psi;
  path.truncation = R;

  // Incoming upper ray: rho runs R -> r at geometric angle +psi.
  path.segments.push_back(PathSegment{
      0.0, 1.0,
      [ray, psi, offset](double t) {
        const double u = ray.u_max * (1.0 - t);
        const double rho = ray.rho(u);
        const Complex dir = std::polar(1.0, psi);
        return PathPoint{rho * dir, psi + offset,
                         -ray.u_max * ray.drho(u) * dir};
      },
      "upper-ray"});

  // Circle of radius r, geometric angle psi -> 2 pi - psi, counter-clockwise.
  const double phi0 = psi, phi1 = kTwoPi - psi;
  path.segments.push_back(PathSegment{
      0.0, 1.0,
      [r, phi0, phi1, offset](double t) {
        const double phi = phi0 + (phi1 - phi0) * t;
        const Complex pos = std::polar(r, phi);
        return PathPoint{pos, phi + offset,
                         Complex(0.0, 1.0) * (phi1 - phi0) * pos};
      },
      "circle"});

  // Outgoing lower ray: rho runs r -> R at geometric angle -psi, assigned
  // angle continued past the circle (2 pi - psi + offset).
  path.segments.push_back(PathSegment{
      0.0, 1.0,
      [ray, psi, offset](double t) {
        const double u = ray.u_max * t;
        const double rho = ray.rho(u);
        const Complex dir = std::polar(1.0, -psi);
        return PathPoint{rho * dir, kTwoPi - psi + offset,
                         ray.u_max * ray.drho(u) * dir};
      },
      "lower-ray"});

  return path;
}

QuadratureResult integrate_contour(const Path& path, const Kernel& kernel,
                                   Complex alpha) {
  const double clearance =
      kernel.pole_clearance(path.spec.inner_radius, path.ray_angle);
  if (clearance < 0.5 * path.spec.inner_radius)
    throw ConfigError("integrate_contour: path too close to a kernel pole");

  // d(sheet coordinate) = e^{i sheet_offset} d(position): the assigned angle
  // differs from the geometric one by a constant along the whole path.
  const Complex sheet_jacobian = std::polar(1.0, path.sheet_offset);
  const Complex power = alpha - Complex(1.0, 0.0);

  auto segment_integrand = [&](const PathSegment& seg) {
    return [&kernel, &seg, sheet_jacobian, power](double t) -> Complex {
      const PathPoint p = seg.at(t);
      const Complex k = kernel(p.position);
      if (k == Complex(0.0, 0.0)) return {0.0, 0.0};
      const Complex pw =
          pow_on_sheet(std::log(std::abs(p.position)), p.angle, power);
      return k * pw * sheet_jacobian * p.velocity;
    };
  };

  // First pass at moderate effort to learn the scale, then re-target.
  QuadOptions coarse;
  coarse.rel_tol = 1e-6;
  coarse.abs_tol = 0.0;
  coarse.max_evals = path.spec.nodes_per_segment / 2;
  Complex scale_probe(0.0, 0.0);
  for (const auto& seg : path.segments)
    scale_probe += integrate(segment_integrand(seg), seg.t0, seg.t1, coarse).value;

  QuadOptions opts;
  opts.rel_tol = 1e-11;
  opts.abs_tol = 1e-11 * std::max(std::abs(scale_probe), 1.0);
  opts.max_evals = path.spec.nodes_per_segment;

  QuadratureResult total;
  for (const auto& seg : path.segments)
    total += integrate(segment_integrand(seg), seg.t0, seg.t1, opts);

  // Truncation-tail contribution at the ray endpoints, folded into the bound.
  const PathPoint endp = path.end();
  const double rate = kernel.decay_rate() * std::cos(path.ray_angle);
  const double end_mag =
      std::abs(kernel(endp.position)) *
      std::pow(std::abs(endp.position), alpha.real() - 1.0) *
      std::exp(-alpha.imag() * endp.angle);
  total.err_estimate += 2.0 * end_mag / std::max(rate, 1e-3);
  return total;
}

QuadratureResult integrate_real_axis(const Kernel& kernel, Complex alpha,
                                     double truncation, int node_budget) {
  if (alpha.real() <= kernel.min_re_alpha())
    throw DomainError("integrate_real_axis: Re(alpha) = " +
                      std::to_string(alpha.real()) +
                      " outside the integrability range of kernel " +
                      kernel.name());
  double R = truncation > 0.0
                 ? truncation
                 : detail::auto_truncation(alpha.real(), kernel.decay_rate(), 0.0);

  // Integrability margin at 0 governs how deep the log substitution must go.
  const double margin = alpha.real() - kernel.min_re_alpha();
  const double v_min = -46.0 / std::min(margin, 1.0);

  QuadOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_tol = 1e-13;
  opts.max_evals = node_budget;

  // (0, 1]: x = e^v, integrand kernel(e^v) e^(v alpha).
  auto inner = [&kernel, alpha](double v) -> Complex {
    const double x = std::exp(v);
    return kernel(Complex(x, 0.0)) * std::exp(alpha * v);
  };
  QuadratureResult res = integrate(inner, v_min, 0.0, opts);

  // [1, R): x = 1 + (e^u - 1), integrand kernel(x) x^(alpha-1) e^u.
  const double u_max = std::log1p(R - 1.0);
  auto outer = [&kernel, alpha](double u) -> Complex {
    const double x = 1.0 + std::expm1(u);
    return kernel(Complex(x, 0.0)) *
           pow_on_sheet(std::log(x), 0.0, alpha - Complex(1.0, 0.0)) *
           std::exp(u);
  };
  res += integrate(outer, 0.0, u_max, opts);

  // Tail bounds from both truncated ends.
  const double rate = kernel.decay_rate();
  res.err_estimate += std::abs(kernel(Complex(R, 0.0))) *
                      std::pow(R, alpha.real() - 1.0) / rate;
  res.err_estimate += std::exp(v_min * margin) / std::max(margin, 1e-3);
  return res;
}

Complex normalization_weight(NormalizationKind kind, Complex alpha) {
  const Complex one(1.0, 0.0);
  switch (kind) {
    case NormalizationKind::GAMMA:
    case NormalizationKind::ETA_GAMMA_CORRECTED:
      return one / gamma(alpha);
    case NormalizationKind::ETA_GAMMA_AS_WRITTEN:
      return (one - std::exp((one - alpha) * kLn2)) / gamma(alpha);
    case NormalizationKind::HANKEL_GAMMA:
      // pi csc(pi a) / (2 pi i Gamma(a)); finite at non-positive integers.
      return reflection_weight(alpha) / Complex(0.0, kTwoPi);
    case NormalizationKind::HANKEL_HAAR:
      return kPi / (sin_pi(alpha) * Complex(0.0, kTwoPi));
  }
  return one;
}

std::string normalization_name(NormalizationKind kind) {
  switch (kind) {
    case NormalizationKind::GAMMA: return "gamma";
    case NormalizationKind::ETA_GAMMA_AS_WRITTEN: return "eta-as-written";
    case NormalizationKind::ETA_GAMMA_CORRECTED: return "eta-corrected";
    case NormalizationKind::HANKEL_GAMMA: return "hankel-gamma";
    case NormalizationKind::HANKEL_HAAR: return "hankel-haar";
  }
  return "?";
}

QuadratureResult mellin_transform(const Kernel& kernel, Complex alpha,
                                  NormalizationKind norm, const Domain& domain) {
  QuadratureResult raw;
  if (domain.kind == Domain::Kind::REAL_AXIS) {
    raw = integrate_real_axis(kernel, alpha, domain.spec.truncation,
                              domain.spec.nodes_per_segment);
  } else {
    const double tilt = detail::ray_tilt_for(alpha.imag());
    const double R =
        domain.spec.truncation > 0.0
            ? domain.spec.truncation
            : detail::auto_truncation(alpha.real(), kernel.decay_rate(), tilt);
    Path path = build_hankel(domain.spec, tilt, R);
    raw = integrate_contour(path, kernel, alpha);
  }

  const Complex w = normalization_weight(norm, alpha);
  QuadratureResult out;
  out.value = w * raw.value;
  out.err_estimate = std::abs(w) * raw.err_estimate;
  out.nodes_used = raw.nodes_used;
  out.warnings = raw.warnings;

  if ((norm == NormalizationKind::HANKEL_GAMMA ||
       norm == NormalizationKind::HANKEL_HAAR) &&
      std::abs(sin_pi(alpha)) < 1e-3)
    out.warnings.push_back("near-pole-normalization");
  if ((norm == NormalizationKind::ETA_GAMMA_AS_WRITTEN ||
       norm == NormalizationKind::ETA_GAMMA_CORRECTED) &&
      std::abs(Complex(1.0, 0.0) -
               std::exp((Complex(1.0, 0.0) - alpha) * kLn2)) < 1e-3)
    out.warnings.push_back("near-pole-normalization");
  return out;
}

}  // namespace mellin
