#include "biwave/green.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "biwave/error.hpp"

namespace biwave {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

// Composite midpoint rule over [lo, hi] of a radial integrand that already
// includes the sphere sum.
template <class Fn>
Complex radial_midpoint(double lo, double hi, std::size_t n, Fn&& fn) {
  if (!(hi > lo)) return {};
  const double dr = (hi - lo) / n;
  Complex acc{};
  for (std::size_t i = 0; i < n; ++i) acc += fn(lo + (i + 0.5) * dr);
  return acc * dr;
}

}  // namespace

Complex kirchhoff_solve(const SpatialSource& g, const GreenConfig& cfg, double tau,
                        const Vec3& x) {
  if (!(tau > 0.0)) throw Error(Errc::NonpositiveTau, "spherical mean needs tau > 0");
  require_finite(x, "x");
  const SphereNodes sn = sphere_nodes(cfg.sphere);
  Complex acc{};
  for (std::size_t j = 0; j < sn.directions.size(); ++j) {
    const Vec3 z = tau * sn.directions[j];
    acc += sn.weights[j] * std::exp(kI * dot(cfg.F.F, z)) * g.g(x - z);
  }
  // (1/(4 pi tau)) * tau^2 * sum(w_j f_j); the advanced layer lies at tau < 0.
  return (1.0 - cfg.a) * acc * (tau / kFourPi);
}

Complex retarded_solve(const ScalarSource& q, const GreenConfig& cfg, double tau,
                       const Vec3& x) {
  if (!std::isfinite(q.support_radius)) {
    throw Error(Errc::UnboundedSupport, "retarded_solve needs a bounded source");
  }
  require_finite(x, "x");
  const SphereNodes sn = sphere_nodes(cfg.sphere);
  const double dist = length(x - q.center);
  const double r_min = std::max(0.0, dist - q.support_radius);
  const double r_max = dist + q.support_radius;

  // direction = +1: retarded layer, source time tau - r; -1: advanced, tau + r.
  auto branch = [&](double direction) {
    double lo = r_min, hi = r_max;
    if (q.time_support) {
      const auto [t0, t1] = *q.time_support;
      if (direction > 0) {
        lo = std::max(lo, tau - t1);
        hi = std::min(hi, tau - t0);
      } else {
        lo = std::max(lo, t0 - tau);
        hi = std::min(hi, t1 - tau);
      }
    }
    return radial_midpoint(lo, hi, cfg.n_radial, [&](double r) {
      Complex shell{};
      for (std::size_t j = 0; j < sn.directions.size(); ++j) {
        const Vec3 z = r * sn.directions[j];
        shell += sn.weights[j] * std::exp(kI * dot(cfg.F.F, z)) *
                 q.q(tau - direction * r, x - z);
      }
      return shell * (r / kFourPi);
    });
  };

  Complex u{};
  if (cfg.a != Complex{1.0}) u += (1.0 - cfg.a) * branch(1.0);
  if (cfg.a != Complex{0.0}) u += cfg.a * branch(-1.0);
  return u;
}

Complex eval_psi_omega(const Vec3& x, const HarmonicKernelParams& p, KernelSign sign) {
  const double r = length(x);
  if (r == 0.0) throw Error(Errc::OriginEvaluation, "psi_omega is singular at x = 0");
  const Complex waves = p.a * std::exp(kI * (p.omega * r)) +
                        (1.0 - p.a) * std::exp(-kI * (p.omega * r));
  const double s = sign == KernelSign::Corrected ? -1.0 : 1.0;
  return s * std::exp(-dot(p.F.F, x)) * waves / (kFourPi * r);
}

Complex volume_potential(const SpatialKernel& kernel, const SpatialSource& G, const Vec3& x,
                         std::size_t n_radial, const SphereRule& sphere) {
  if (!std::isfinite(G.support_radius)) {
    throw Error(Errc::UnboundedSupport, "volume potential needs a bounded source");
  }
  const SphereNodes sn = sphere_nodes(sphere);
  const double dist = length(x - G.center);
  const double lo = std::max(0.0, dist - G.support_radius);
  const double hi = dist + G.support_radius;
  return radial_midpoint(lo, hi, n_radial, [&](double r) {
    Complex shell{};
    for (std::size_t j = 0; j < sn.directions.size(); ++j) {
      const Vec3 z = r * sn.directions[j];
      shell += sn.weights[j] * kernel(z) * G.g(x - z);
    }
    return shell * (r * r);
  });
}

Complex helmholtz_potential(const SpatialSource& G, const HarmonicKernelParams& p,
                            const Vec3& x, const HelmholtzConfig& cfg) {
  return volume_potential(
      [&](const Vec3& z) { return eval_psi_omega(z, p, cfg.kernel_sign); }, G, x,
      cfg.n_radial, cfg.sphere);
}

Biquaternion helmholtz_solve(const SpatialSource& G, const HarmonicKernelParams& p,
                             const Vec3& x, const HelmholtzConfig& cfg) {
  require_finite(x, "x");
  if (!(cfg.fd_step > 0.0)) throw Error(Errc::BadParams, "fd_step must be positive");
  const Complex u = helmholtz_potential(G, p, x, cfg);
  CVec3 grad;
  for (int k = 0; k < 3; ++k) {
    Vec3 dx{};
    dx[k] = cfg.fd_step;
    grad[k] = (helmholtz_potential(G, p, x + dx, cfg) - helmholtz_potential(G, p, x - dx, cfg)) /
              (2.0 * cfg.fd_step);
  }
  // (omega - grad - F) u for scalar u.
  return {p.omega * u, -grad - u * p.F.F};
}

PlaneWaveField pw_particular_solution(const PlaneWaveField& G, const StructuralCoefficient& F) {
  const Complex m = pw_scalar_multiplier(G, F);
  const CVec3 w = G.kappa + F.F;
  const double scale = std::norm(G.sigma) + std::norm(w.x) + std::norm(w.y) + std::norm(w.z);
  if (std::abs(m) <= 1e-14 * std::max(scale, 1.0)) {
    throw Error(Errc::OnShellSource, "source lies on the characteristic surface (m = 0)");
  }
  PlaneWaveField B = pw_apply_DF(G, F, Sign::Minus);
  B.amp = B.amp / m;
  return B;
}

}  // namespace biwave
