#include "biwave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include "biwave/draws.hpp"
#include "biwave/error.hpp"
#include "biwave/field_io.hpp"
#include "biwave/green.hpp"
#include "biwave/twistor_factory.hpp"
#include "biwave/wave_calculus.hpp"
#include "json.hpp"

namespace biwave {

namespace {

using draws::Rng;

const Complex kI{0.0, 1.0};
const double kSqrt2 = std::numbers::sqrt2;

struct Outcome {
  double error = 0.0;
  std::optional<double> corrected;
  bool conditions_ok = true;
  std::string detail;
};

using Body = std::function<Outcome(Rng&, const ConventionFlags&, std::size_t draws)>;

struct Entry {
  Claim claim;
  Body body;
};

void raise(double& m, double v) { m = std::max(m, std::isnan(v) ? INFINITY : v); }

Biquaternion bq(Complex s, const CVec3& v) { return {s, v}; }
CVec3 cx(const Vec3& v) { return complexify(v); }

// Annihilation residual relative to the amplitude and the operator size.
double rel_residual(const Biquaternion& out, const PlaneWaveField& f,
                    const StructuralCoefficient& F, double omega = 0.0) {
  const double scale =
      norm(f.amp) * (1.0 + std::abs(f.sigma) + length(f.kappa) + length(F.F) + std::abs(omega));
  return norm(out) / scale;
}

double rel_diff(const Biquaternion& a, const Biquaternion& b) {
  return norm(a - b) / std::max(1.0, norm(b));
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

PlaneWaveField random_wave(Rng& rng) {
  const Biquaternion amp = draws::biquaternion(rng, 2.0);
  const Complex sigma = draws::complex(rng, 2.0);
  const CVec3 kappa = draws::cvec(rng, 2.0);
  return {amp, sigma, kappa};
}

Vec3 unit_of(const Vec3& v) { return v / length(v); }

SurfaceGrid small_grid() { return {8, 16, 0.0}; }

// ---------------------------------------------------------------- operators

Outcome scalar_factorization(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const PlaneWaveField f = random_wave(rng);
    const StructuralCoefficient F{draws::cvec(rng, 2.0)};
    const Complex m = pw_scalar_multiplier(f, F);
    const double scale =
        norm(f.amp) * (1.0 + std::norm(f.sigma) + std::pow(length(f.kappa + F.F), 2));
    for (Sign first : {Sign::Minus, Sign::Plus}) {
      const auto g = pw_apply_DF(pw_apply_DF(f, F, first), F, flip(first));
      raise(o.error, norm(g.amp - m * f.amp) / scale);
    }
  }
  return o;
}

// u = A exp(phi), phi = sigma t - i(kappa, x) - |x|^2/(2w^2) - t^2/(2w^2); the
// scalar operator acts as multiplication by the returned factor.
struct WindowedWave {
  Biquaternion amp;
  Complex sigma;
  CVec3 kappa;
  double width;

  Complex phase(double t, const Vec3& x) const {
    return sigma * t - kI * dot(kappa, cx(x)) - (dot(x, x) + t * t) / (2 * width * width);
  }
  Biquaternion operator()(double t, const Vec3& x) const { return std::exp(phase(t, x)) * amp; }
  Complex op_factor(double t, const Vec3& x, const StructuralCoefficient& F) const {
    const double w2 = width * width;
    const Complex pt = sigma - t / w2;
    Complex m = -1.0 / w2 + pt * pt + dot(F.F, F.F);
    for (int k = 0; k < 3; ++k) {
      const Complex pk = -kI * kappa[k] - x[k] / w2;
      m -= -1.0 / w2 + pk * pk;
      m += 2.0 * kI * F.F[k] * pk;
    }
    return m;
  }
};

double windowed_residual(const WindowedWave& u, const StructuralCoefficient& F, double h) {
  GridSpec spec;
  spec.dims = {9, 9, 9, 9};
  spec.spacing = {h, h, h, h};
  spec.origin = {-4 * h, -4 * h, -4 * h, -4 * h};
  const GridField g = sample_to_grid(u, spec);
  const GridField r = grid_apply_DF(grid_apply_DF(g, F, Sign::Minus), F, Sign::Plus);
  double diff = 0.0, ref = 0.0;
  r.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const double t = r.tau(it);
    const Vec3 x = r.position(ix, iy, iz);
    const Biquaternion exact = u.op_factor(t, x, F) * u(t, x);
    diff = std::max(diff, norm(r.at(it, ix, iy, iz) - exact));
    ref = std::max(ref, norm(exact));
  });
  return diff / ref;
}

Outcome grid_factorization(Rng&, const ConventionFlags&, std::size_t) {
  const WindowedWave u{{Complex{1.0}, {Complex{0, 0.5}, Complex{-0.3}, Complex{0.2, 0.1}}},
                       Complex{0.1, 1.2},
                       CVec3{Complex{1.0}, Complex{0.5}, Complex{-0.5}},
                       0.5};
  const StructuralCoefficient F{CVec3{Complex{0.3}, Complex{0, -0.2}, Complex{0.1, 0.2}}};
  const double r32 = windowed_residual(u, F, 1.0 / 32);
  const double r64 = windowed_residual(u, F, 1.0 / 64);
  const double ratio = r32 / r64;
  Outcome o;
  o.error = r64;
  o.conditions_ok = std::abs(ratio - 4.0) <= 1.2;
  o.detail = fmt("relative residual at h=1/64; refinement ratio %.3f (4 +- 30%%)", ratio);
  return o;
}

Outcome particular_solution(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const PlaneWaveField g = random_wave(rng);
    const StructuralCoefficient F{draws::cvec(rng, 2.0)};
    const auto b = pw_particular_solution(g, F);
    raise(o.error, norm(pw_apply_DF(b, F, Sign::Plus).amp - g.amp) / norm(g.amp));
  }
  return o;
}

// ω ± grad·s_grad + s_F F applied to a static plane wave, written out.
Biquaternion harmonic_factor(const PlaneWaveField& f, const StructuralCoefficient& F,
                             double omega, double s_grad, double s_F, const Biquaternion& b) {
  const Biquaternion grad = Biquaternion{Complex{}, -kI * f.kappa};
  return omega * b + s_grad * mul(grad, b) + s_F * mul(F.as_biquaternion(), b);
}

Complex harmonic_symbol(const PlaneWaveField& f, const StructuralCoefficient& F, double omega,
                        double s) {
  return -dot(f.kappa, f.kappa) + s * 2.0 * dot(F.F, -kI * f.kappa) + omega * omega +
         dot(F.F, F.F);
}

Outcome harmonic_factorization(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    PlaneWaveField f = random_wave(rng);
    f.sigma = 0.0;
    const StructuralCoefficient F{draws::cvec(rng, 2.0)};
    const double omega = draws::uniform(rng, -3.0, 3.0);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const Complex m = harmonic_symbol(f, F, omega, sign_value(s));
      const auto g = pw_apply_harmonic(pw_apply_harmonic(f, F, omega, s), F, omega, s,
                                       HarmonicOp::Adjoint);
      const double scale = norm(f.amp) * (1.0 + std::abs(m));
      raise(o.error, norm(g.amp - m * f.amp) / scale);
      raise(o.error, std::abs(pw_harmonic_multiplier(f, F, omega, s) - m) / (1.0 + std::abs(m)));
    }
  }
  return o;
}

// Printed: (grad_w^{+-} +- F)(grad_w^{-+} -+ F) = lap +- 2(F,grad) + w^2 + (F,F).
// Corrected: (grad_w^{-+} - F)(grad_w^{+-} + F) = same right-hand side.
Outcome harmonic_factorization_printed(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    PlaneWaveField f = random_wave(rng);
    f.sigma = 0.0;
    const StructuralCoefficient F{draws::cvec(rng, 2.0)};
    const double omega = draws::uniform(rng, -3.0, 3.0);
    for (double s : {1.0, -1.0}) {
      const Complex m = harmonic_symbol(f, F, omega, s);
      const double scale = norm(f.amp) * (1.0 + std::abs(m));
      const auto printed = harmonic_factor(
          f, F, omega, s, s, harmonic_factor(f, F, omega, -s, -s, f.amp));
      const auto corrected = harmonic_factor(
          f, F, omega, -s, -1.0, harmonic_factor(f, F, omega, s, 1.0, f.amp));
      raise(o.error, norm(printed - m * f.amp) / scale);
      raise(*o.corrected, norm(corrected - m * f.amp) / scale);
    }
  }
  o.detail = "printed product holds for the upper sign only";
  return o;
}

// ------------------------------------------------------------------ green

Outcome kirchhoff_closed_forms(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  const SpatialSource one{[](const Vec3&) { return Complex{1.0}; }};
  double free_err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double tau = draws::uniform(rng, 0.1, 2.0);
    const Vec3 E = draws::uniform(rng, 0.05, 2.0) * draws::unit(rng);
    const Vec3 H = draws::uniform(rng, 0.05, 2.0) * draws::unit(rng);
    const Vec3 x = draws::vec(rng);
    GreenConfig cfg;
    raise(free_err, std::abs(kirchhoff_solve(one, cfg, tau, x) - tau));
    cfg.F = StructuralCoefficient::from_wave(E, {});
    const double e = length(E), h = length(H);
    raise(o.error, std::abs(kirchhoff_solve(one, cfg, tau, x) - std::sin(e * tau) / e));
    cfg.F = StructuralCoefficient::from_wave({}, H);
    raise(o.error, std::abs(kirchhoff_solve(one, cfg, tau, x) - std::sinh(h * tau) / h));
  }
  raise(o.error, free_err);
  o.conditions_ok = free_err <= 1e-8;
  o.detail = fmt("F = 0 error %.3g (bound 1e-8)", free_err);
  return o;
}

double bump(double s) { return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; }

Outcome retarded_pulse(Rng&, const ConventionFlags&, std::size_t) {
  const double eps = 0.05;
  const int nm = 4000;
  double mass = 0.0;
  for (int i = 0; i < nm; ++i) mass += bump(-1.0 + (i + 0.5) * 2.0 / nm);
  mass *= 2.0 / nm;
  ScalarSource pulse{[=](double t, const Vec3& y) {
                       return Complex{dot(y, y) < 100.0 ? bump(t / eps) / (eps * mass) : 0.0};
                     },
                     10.0, {}, std::make_pair(-eps, eps)};
  GreenConfig cfg;
  cfg.sphere = {16, 32};
  cfg.F = StructuralCoefficient::from_wave({0, 0, 1.5}, {});
  Outcome o;
  for (double tau : {0.4, 1.1, 1.9}) {
    double smeared = 0.0;
    for (int i = 0; i < nm; ++i) {
      const double s = -eps + (i + 0.5) * 2 * eps / nm;
      smeared += bump(s / eps) / (eps * mass) * std::sin(1.5 * (tau - s)) / 1.5;
    }
    smeared *= 2 * eps / nm;
    raise(o.error, std::abs(retarded_solve(pulse, cfg, tau, {0.1, -0.2, 0.0}) - smeared));
  }
  o.detail = "pulse width 0.05 against the pulse-smeared closed form";
  return o;
}

Outcome retarded_residual(Rng&, const ConventionFlags&, std::size_t) {
  GreenConfig cfg;
  cfg.sphere = {24, 48};
  cfg.n_radial = 96;
  cfg.F = StructuralCoefficient{CVec3{Complex{0.2}, Complex{}, Complex{0, 0.3}}};
  ScalarSource q{[](double t, const Vec3& y) {
                   return Complex{bump(2 * t - 1) * std::exp(-2 * dot(y, y))};
                 },
                 5.0, {}, std::make_pair(0.0, 1.0)};
  const double h = 1.0 / 64, tau = 0.6;
  const Vec3 x{0.1, -0.2, 0.15};
  Outcome o;
  for (Complex a : {Complex{0.0}, Complex{1.0}}) {
    cfg.a = a;
    auto u = [&](double t, const Vec3& y) { return retarded_solve(q, cfg, t, y); };
    const Complex u0 = u(tau, x);
    Complex r = (u(tau + h, x) - 2.0 * u0 + u(tau - h, x)) / (h * h) + dot(cfg.F.F, cfg.F.F) * u0;
    for (int k = 0; k < 3; ++k) {
      Vec3 d{};
      d[k] = h;
      const Complex up = u(tau, x + d), um = u(tau, x - d);
      r -= (up - 2.0 * u0 + um) / (h * h);
      r += 2.0 * kI * cfg.F.F[k] * (up - um) / (2 * h);
    }
    raise(o.error, std::abs(r - q.q(tau, x)) / std::abs(q.q(tau, x)));
  }
  o.detail = "retarded and advanced branches, h = 1/64";
  return o;
}

template <class U>
Complex harmonic_fd(U&& u, const CVec3& F, double omega, const Vec3& x, double h,
                    double& scale) {
  const Complex u0 = u(x);
  Complex r = (omega * omega + dot(F, F)) * u0;
  scale = std::abs(r);
  for (int k = 0; k < 3; ++k) {
    Vec3 d{};
    d[k] = h;
    const Complex up = u(x + d), um = u(x - d);
    const Complex lap = (up - 2.0 * u0 + um) / (h * h);
    const Complex adv = 2.0 * F[k] * (up - um) / (2 * h);
    r += lap + adv;
    scale += std::abs(lap) + std::abs(adv);
  }
  return r;
}

Outcome kernel_residual(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    HarmonicKernelParams p;
    p.omega = draws::uniform(rng, 0.0, 3.0);
    p.a = draws::complex(rng);
    p.F = StructuralCoefficient{draws::cvec(rng)};
    const Vec3 x = draws::uniform(rng, 0.5, 2.0) * draws::unit(rng);
    double scale = 0.0;
    const Complex r = harmonic_fd([&](const Vec3& y) { return eval_psi_omega(y, p); }, p.F.F,
                                  p.omega, x, 1e-3, scale);
    raise(o.error, std::abs(r) / scale);
  }
  return o;
}

const SpatialSource& narrow_gaussian() {
  static const SpatialSource g{[](const Vec3& y) { return Complex{std::exp(-4 * dot(y, y))}; },
                               3.0};
  return g;
}

Outcome kernel_normalization(Rng&, const ConventionFlags&, std::size_t) {
  HarmonicKernelParams p;
  p.omega = 0.8;
  p.F = StructuralCoefficient{CVec3{Complex{0.1}, Complex{0, 0.2}, Complex{}}};
  const Vec3 x{0.1, 0.05, -0.1};
  const SpatialSource& G = narrow_gaussian();
  HelmholtzConfig cfg;
  cfg.n_radial = 96;
  auto residual = [&](KernelSign s) {
    cfg.kernel_sign = s;
    double scale = 0.0;
    const Complex lu = harmonic_fd([&](const Vec3& y) { return helmholtz_potential(G, p, y, cfg); },
                                   p.F.F, p.omega, x, 0.02, scale);
    return std::abs(lu - G.g(x)) / std::abs(G.g(x));
  };
  Outcome o;
  o.error = residual(KernelSign::AsPrinted);
  o.corrected = residual(KernelSign::Corrected);
  o.detail = "operator applied to kernel * G, compared with G";
  return o;
}

Outcome helmholtz_residual(Rng&, const ConventionFlags&, std::size_t) {
  HarmonicKernelParams p;
  p.omega = 1.1;
  p.F = StructuralCoefficient::from_harmonic({0.2, 0, 0}, {0, 0.1, 0});
  const SpatialSource& G = narrow_gaussian();
  HelmholtzConfig cfg;
  cfg.n_radial = 96;
  const Vec3 x{0.2, -0.1, 0.3};
  auto B = [&](const Vec3& y) { return helmholtz_solve(G, p, y, cfg); };
  const double h = 0.02;
  const Biquaternion b0 = B(x);
  Biquaternion d[3];
  for (int k = 0; k < 3; ++k) {
    Vec3 s{};
    s[k] = h;
    d[k] = (B(x + s) - B(x - s)) / Complex{2 * h};
  }
  const Complex div = d[0].v.x + d[1].v.y + d[2].v.z;
  const CVec3 grad{d[0].s, d[1].s, d[2].s};
  const CVec3 rot{d[1].v.z - d[2].v.y, d[2].v.x - d[0].v.z, d[0].v.y - d[1].v.x};
  const Biquaternion lhs = p.omega * b0 + bq(-div, grad + rot) + mul(p.F.as_biquaternion(), b0);
  Outcome o;
  o.error = norm(lhs - Biquaternion{G.g(x)}) / std::abs(G.g(x));
  return o;
}

// --------------------------------------------------------- wave twistors

Outcome cap_surface(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const auto s = sample_spectral_surface(SurfaceKind::Cap, d.F, 0.0, small_grid());
    for (std::size_t j = 0; j < s.nodes.size(); ++j) raise(o.error, surface_residual(s, j));
    for (const auto& t : superpose_terms(s, [](const Vec3&) { return Complex{1}; }, Sign::Plus,
                                         Potential::Scalar)
                             .terms) {
      raise(o.error, std::abs(pw_scalar_multiplier(t, d.F)) /
                         (1.0 + std::norm(t.sigma) + std::pow(length(t.kappa + d.F.F), 2)));
    }
  }
  return o;
}

Outcome xi_annihilation(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const double L = length(d.xi - d.E);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto psi = xi_twistor(d.xi, d.F, s);
      raise(o.error, rel_residual(pw_apply_DF(psi, d.F, Sign::Plus).amp, psi, d.F));
      const PlaneWaveField scalar{Biquaternion{1.0}, psi.sigma, psi.kappa};
      const auto gen = pw_apply_DF(scalar, d.F, Sign::Minus).amp / Complex{kSqrt2 * L};
      raise(o.error, rel_diff(psi.amp, gen));
    }
  }
  return o;
}

Outcome xi_norms(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const double L = length(d.xi - d.E), h = length(d.H);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto psi = xi_twistor(d.xi, d.F, s);
      raise(o.error, std::abs(norm(psi.amp) - 1.0));
      raise(o.error, std::abs(pseudonorm_squared(psi.amp) + h * h / (L * L)));
      if (pseudonorm(psi.amp).imag() < 0.0) o.conditions_ok = false;
    }
  }
  return o;
}

Outcome xi_energy(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const Vec3 dv = d.xi - d.E;
    const double L = length(dv), h = length(d.H);
    const Vec3 e = dv / L;
    const double varpi = std::sqrt(L * L - h * h);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto psi = xi_twistor(d.xi, d.F, s);
      const Biquaternion expected{1.0, kI * cx(cross(e, d.H) + sign_value(s) * varpi * e) / L};
      raise(o.error, rel_diff(energy_momentum(psi.amp, flags), expected));
    }
  }
  return o;
}

Outcome xi_energy_norms(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const Vec3 dv = d.xi - d.E;
    const double L = length(dv), h = length(d.H);
    const double cg = dot(dv, d.H) / (L * h);
    const double q = (L * L - h * h * cg * cg) / (L * L);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto xi = energy_momentum(xi_twistor(d.xi, d.F, s).amp, flags);
      raise(o.error, std::abs(norm(xi) - std::sqrt(1.0 + q)));
      raise(o.error, std::abs(pseudonorm_squared(xi) - (1.0 - q)));
    }
  }
  return o;
}

// H = 0 draws: F = -E.
struct PlainDraw {
  StructuralCoefficient F;
  Vec3 E, xi, e;
  double L;
};

PlainDraw plain_draw(Rng& rng) {
  PlainDraw d;
  d.E = draws::uniform(rng, 0.0, 2.0) * draws::unit(rng);
  d.L = draws::uniform(rng, 0.1, 3.0);
  d.e = draws::unit(rng);
  d.xi = d.E + d.L * d.e;
  d.F = StructuralCoefficient::from_wave(d.E, {});
  return d;
}

Outcome plain_xi(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = plain_draw(rng);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const double sv = sign_value(s);
      const auto psi = xi_twistor(d.xi, d.F, s);
      const Biquaternion amp = bq(sv * kI, -cx(d.e)) / Complex{kSqrt2};
      raise(o.error, rel_diff(psi.amp, amp));
      raise(o.error, std::abs(norm(psi.amp) - 1.0));
      raise(o.error, std::abs(pseudonorm_squared(psi.amp)));
      raise(o.error, rel_diff(energy_momentum(psi.amp, flags),
                              Biquaternion{1.0, sv * kI * cx(d.e)}));
    }
  }
  return o;
}

Outcome plain_xi_printed(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = plain_draw(rng);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const double sv = sign_value(s);
      const Complex sigma = sv * kI * d.L;
      const PlaneWaveField printed{bq(sv * kI, cx(d.e)) / Complex{kSqrt2}, sigma, cx(d.xi)};
      const PlaneWaveField corrected{bq(sv * kI, -cx(d.e)) / Complex{kSqrt2}, sigma, cx(d.xi)};
      raise(o.error, rel_residual(pw_apply_DF(printed, d.F, Sign::Plus).amp, printed, d.F));
      raise(*o.corrected,
            rel_residual(pw_apply_DF(corrected, d.F, Sign::Plus).amp, corrected, d.F));
    }
  }
  o.detail = "annihilation of (+-i + e)/sqrt2 vs (+-i - e)/sqrt2";
  return o;
}

Outcome translation(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const auto psi = xi_twistor(d.xi, d.F, Sign::Plus);
    PointSourceSet sources;
    PlaneWaveSum expected;
    for (int k = 0; k < 3; ++k) {
      PointSource p;
      p.weight = draws::biquaternion(rng);
      p.tau0 = draws::uniform(rng, -1.0, 1.0);
      p.x0 = draws::vec(rng);
      sources.push_back(p);
      const Complex shift = std::exp(-psi.sigma * p.tau0 + kI * dot(psi.kappa, cx(p.x0)));
      expected.terms.push_back({shift * mul(psi.amp, p.weight), psi.sigma, psi.kappa});
    }
    const FieldEvaluator base = [psi](double t, const Vec3& x) { return psi(t, x); };
    const auto field = translate_superpose(base, sources);
    const double t = draws::uniform(rng, -1.0, 1.0);
    const Vec3 x = draws::vec(rng);
    raise(o.error, rel_diff(field(t, x), expected(t, x)));
    for (const auto& term : expected.terms)
      raise(o.error, rel_residual(pw_apply_DF(term, d.F, Sign::Plus).amp, term, d.F));
  }
  return o;
}

GridSpec centered_grid(std::size_t nt, std::size_t n, double h) {
  GridSpec spec;
  spec.dims = {nt, n, n, n};
  spec.spacing = {h, h, h, h};
  const double half = 0.5 * h * (n - 1);
  spec.origin = {0.0, -half, -half, -half};
  return spec;
}

Outcome cap_superposition(Rng&, const ConventionFlags&, std::size_t) {
  const auto F = StructuralCoefficient::from_wave({0.3, 0, 0}, {0, 0, 1});
  SurfaceGrid grid;
  grid.n_radial = 32;
  grid.n_angular = 64;
  const auto s = sample_spectral_surface(SurfaceKind::Cap, F, 0.0, grid);
  const Vec3 E = F.wave_E();
  const auto field = superpose(
      s, [E](const Vec3& xi) { return Complex{std::exp(-0.5 * dot(xi - E, xi - E))}; },
      Sign::Plus);
  const GridField g = sample_to_grid(field, centered_grid(5, 5, 1.0 / 64));
  Outcome o;
  o.error = grid_apply_DF(g, F, Sign::Plus).max_interior_norm() / grid_DF_term_scale(g, F);
  o.detail = "32 x 64 nodes, Gaussian density, h = 1/64";
  return o;
}

Outcome evanescent_annihilation(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::evanescent(rng);
    const double L = length(d.xi - d.E);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto ups = evanescent_twistor(d.xi, d.F, s);
      raise(o.error, rel_residual(pw_apply_DF(ups, d.F, Sign::Plus).amp, ups, d.F));
      const PlaneWaveField scalar{Biquaternion{1.0}, ups.sigma, ups.kappa};
      const auto gen = pw_apply_DF(scalar, d.F, Sign::Minus).amp / Complex{kSqrt2 * L};
      raise(o.error, rel_diff(ups.amp, gen));
    }
  }
  return o;
}

Outcome evanescent_norms(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::evanescent(rng);
    const double L = length(d.xi - d.E), h = length(d.H);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto ups = evanescent_twistor(d.xi, d.F, s);
      raise(o.error, std::abs(norm(ups.amp) - h / L) / (h / L));
      raise(o.error, std::abs(pseudonorm_squared(ups.amp) + 1.0));
    }
  }
  return o;
}

Outcome evanescent_energy(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::evanescent(rng);
    const Vec3 dv = d.xi - d.E;
    const double L = length(dv), h = length(d.H);
    const Vec3 e = dv / L;
    const double root = std::sqrt(std::max(0.0, h * h - L * L));
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto ups = evanescent_twistor(d.xi, d.F, s);
      const auto xi = energy_momentum(ups.amp, flags);
      const Biquaternion printed{
          1.0, (kI * cx(cross(e, d.H)) + complexify(sign_value(s) * root * e)) / Complex{L}};
      const Biquaternion corrected{
          h * h / (L * L), kI * cx(ups.sigma.real() * d.H + cross(dv, d.H)) / Complex{L * L}};
      const double scale = std::max(1.0, norm(xi));
      raise(o.error, norm(xi - printed) / scale);
      raise(*o.corrected, norm(xi - corrected) / scale);
    }
  }
  o.detail = "corrected: |H|^2/L^2 + i(sigma H + [xi-E, H])/L^2";
  return o;
}

Outcome h_twistor_basics(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const double h = length(d.H);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto t = h_twistor(d.F, s);
      raise(o.error, rel_residual(pw_apply_DF(t, d.F, Sign::Plus).amp, t, d.F));
      const PlaneWaveField scalar{Biquaternion{1.0}, t.sigma, t.kappa};
      raise(o.error, rel_diff(t.amp, pw_apply_DF(scalar, d.F, Sign::Minus).amp /
                                         Complex{kSqrt2 * h}));
      raise(o.error, std::abs(norm(t.amp) - 1.0));
      raise(o.error, std::abs(pseudonorm_squared(t.amp)));
    }
  }
  return o;
}

Outcome h_twistor_energy(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::propagating(rng);
    const Vec3 eH = unit_of(d.H);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto xi = energy_momentum(h_twistor(d.F, s).amp, flags);
      raise(o.error, norm(xi));
      raise(*o.corrected, rel_diff(xi, Biquaternion{1.0, -sign_value(s) * kI * cx(eH)}));
    }
  }
  o.detail = "printed: 0; corrected: 1 -+ i e_H";
  return o;
}

// ------------------------------------------------------ harmonic twistors

Outcome omega_annihilation(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::harmonic(rng);
    const double r = std::sqrt(d.omega * d.omega + dot(d.E, d.E));
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto t = omega_twistor(d.omega, d.F, d.e, s);
      raise(o.error, rel_residual(pw_apply_harmonic(t, d.F, d.omega, s).amp, t, d.F, d.omega));
      const PlaneWaveField scalar{Biquaternion{1.0}, 0.0, t.kappa};
      const auto gen =
          pw_apply_harmonic(scalar, d.F, d.omega, s, HarmonicOp::Adjoint).amp / Complex{kSqrt2 * r};
      raise(o.error, rel_diff(t.amp, gen));
    }
  }
  return o;
}

Outcome omega_norms(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::harmonic(rng);
    const double r2 = d.omega * d.omega + dot(d.E, d.E);
    const auto t = omega_twistor(d.omega, d.F, d.e, Sign::Plus);
    raise(o.error, std::abs(norm(t.amp) - 1.0));
    raise(o.error, std::abs(pseudonorm_squared(t.amp) + dot(d.E, d.E) / r2));
  }
  return o;
}

Outcome omega_energy_norms(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::harmonic(rng);
    const auto xi = energy_momentum(omega_twistor(d.omega, d.F, d.e, Sign::Plus).amp, flags);
    raise(o.error, std::abs(norm(xi) - kSqrt2));
    raise(o.error, std::abs(pseudonorm_squared(xi)));
  }
  return o;
}

Outcome omega_energy(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::harmonic(rng);
    const double r = std::sqrt(d.omega * d.omega + dot(d.E, d.E));
    const auto xi = energy_momentum(omega_twistor(d.omega, d.F, d.e, Sign::Plus).amp, flags);
    const Vec3 along = d.omega * d.e;
    raise(o.error, rel_diff(xi, Biquaternion{1.0, kI * cx(along + cross(d.e, d.E)) / r}));
    raise(*o.corrected, rel_diff(xi, Biquaternion{1.0, kI * cx(along + cross(d.E, d.e)) / r}));
  }
  o.detail = "printed: 1 + i(w e + [e,E])/r; corrected: 1 + i(w e + [E,e])/r";
  return o;
}

Outcome omega_plain_printed(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    draws::HarmonicDraw d = draws::harmonic(rng);
    d.E = {};
    d.F = StructuralCoefficient::from_harmonic({}, d.H);
    d.e = draws::unit(rng);
    const Biquaternion printed{1.0, kI * cx(d.e)};
    const Biquaternion corrected = printed / Complex{kSqrt2};
    const auto t = omega_twistor(d.omega, d.F, d.e, Sign::Plus);
    auto check = [&](const Biquaternion& amp, double& err) {
      const PlaneWaveField f{amp, 0.0, cx(d.H + d.omega * d.e)};
      raise(err, rel_residual(pw_apply_harmonic(f, d.F, d.omega, Sign::Plus).amp, f, d.F,
                              d.omega));
      raise(err, std::abs(norm(amp) - 1.0));
      raise(err, std::abs(pseudonorm_squared(amp)));
    };
    check(printed, o.error);
    check(corrected, *o.corrected);
    raise(*o.corrected, rel_diff(t.amp, corrected));
  }
  o.detail = "E = 0 amplitude 1 + ie has norm sqrt2; (1 + ie)/sqrt2 has norm 1";
  return o;
}

SurfaceGrid circle_grid() { return {16, 64, 0.0}; }

Outcome harmonic_surface(SurfaceKind kind, Rng& rng, std::size_t n) {
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    draws::HarmonicDraw d = kind == SurfaceKind::StaticCircle || kind == SurfaceKind::StaticPoint
                         ? draws::static_draw(rng)
                         : draws::harmonic(rng);
    if (kind == SurfaceKind::OmegaSphere || kind == SurfaceKind::StaticPoint) d.E = {};
    if (kind == SurfaceKind::OmegaCircle && i % 2 == 0) d.H = {};
    if (kind == SurfaceKind::StaticCircle && i % 2 == 0) d.H = {};
    if (length(d.E) == 0.0 &&
        (kind == SurfaceKind::OmegaCircle || kind == SurfaceKind::StaticCircle)) {
      d.E = {0, 0, 1};
    }
    d.F = StructuralCoefficient::from_harmonic(d.E, d.H);
    const auto s = sample_spectral_surface(kind, d.F, d.omega, circle_grid());
    for (std::size_t j = 0; j < s.nodes.size(); ++j) {
      raise(o.error, surface_residual(s, j));
      const PlaneWaveField f{Biquaternion{1.0}, 0.0, cx(s.nodes[j])};
      const double scale = 1.0 + d.omega * d.omega + dot(s.nodes[j], s.nodes[j]) +
                           std::pow(length(d.F.F), 2);
      raise(o.error, std::abs(pw_harmonic_multiplier(f, d.F, d.omega, Sign::Plus)) / scale);
    }
  }
  return o;
}

Outcome harmonic_superposition(Rng&, const ConventionFlags&, std::size_t) {
  Outcome o;
  auto check = [&](SurfaceKind kind, const StructuralCoefficient& F, double omega,
                   SurfaceGrid grid) {
    const auto s = sample_spectral_surface(kind, F, omega, grid);
    const Vec3 c = F.harmonic_H();
    const auto field = superpose(
        s, [c](const Vec3& xi) { return Complex{std::exp(-0.5 * dot(xi - c, xi - c))}; },
        Sign::Plus);
    const GridField g = sample_to_grid(field, centered_grid(1, 5, 1.0 / 64));
    raise(o.error, grid_apply_harmonic(g, F, omega, Sign::Plus).max_interior_norm() /
                       grid_harmonic_term_scale(g, F, omega));
  };
  check(SurfaceKind::OmegaCircle, StructuralCoefficient::from_harmonic({0, 0, 1}, {0.3, 0, 0}),
        1.2, {32, 64, 0.0});
  check(SurfaceKind::OmegaSphere, StructuralCoefficient::from_harmonic({}, {0.2, -0.4, 0}), 1.5,
        {32, 64, 0.0});
  check(SurfaceKind::StaticCircle, StructuralCoefficient::from_harmonic({0, 1.5, 0}, {0, 0, 0.5}),
        0.0, {32, 64, 0.0});
  o.detail = "omega circle, omega sphere and static circle, h = 1/64";
  return o;
}

Outcome static_printed(Rng& rng, const ConventionFlags&, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::static_draw(rng);
    const Vec3 eE = unit_of(d.E);
    const double sE = length(d.E);
    const PlaneWaveField printed{Biquaternion{Complex{}, Complex{-1, 1} / kSqrt2 * cx(eE)}, 0.0,
                                 cx(d.E + d.H)};
    raise(o.error, rel_residual(pw_apply_harmonic(printed, d.F, 0.0, Sign::Plus).amp, printed,
                                d.F));
    raise(o.error, std::abs(dot(d.E, real(printed.kappa) - d.H)) / sE);
    raise(o.error, std::abs(norm(printed.amp) - 1.0));
    raise(o.error, std::abs(pseudonorm_squared(printed.amp) + 1.0));

    const auto t = static_twistor(d.F, d.e);
    raise(*o.corrected, rel_residual(pw_apply_harmonic(t, d.F, 0.0, Sign::Plus).amp, t, d.F));
    raise(*o.corrected, std::abs(dot(d.E, real(t.kappa) - d.H)) / sE);
    raise(*o.corrected, std::abs(norm(t.amp) - 1.0));
    raise(*o.corrected, std::abs(pseudonorm_squared(t.amp) + 1.0));
  }
  o.detail = "printed phase E + H leaves the static circle; pseudonorm -1 read as its square";
  return o;
}

Outcome static_energy(Rng& rng, const ConventionFlags& flags, std::size_t n) {
  Outcome o;
  o.corrected = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = draws::static_draw(rng);
    const Vec3 eE = unit_of(d.E);
    const auto xi = energy_momentum(static_twistor(d.F, d.e).amp, flags);
    const double common = std::max(std::abs(norm(xi) - kSqrt2), std::abs(pseudonorm_squared(xi)));
    raise(o.error, std::max(common, rel_diff(xi, Biquaternion{1.0, kI * cx(cross(d.e, eE))})));
    raise(*o.corrected,
          std::max(common, rel_diff(xi, Biquaternion{1.0, kI * cx(cross(eE, d.e))})));
  }
  o.detail = "printed: 1 + i[e,e_E]; corrected: 1 + i[e_E,e]";
  return o;
}

// ------------------------------------------------------------------ registry

Claim make(std::string id, std::string description, std::string statement, double tol,
           std::size_t draws, bool sensitive = false, bool variant = false) {
  return {std::move(id), std::move(description), std::move(statement), tol, draws, sensitive,
          variant};
}

Body surface_body(SurfaceKind kind) {
  return [kind](Rng& rng, const ConventionFlags&, std::size_t n) {
    return harmonic_surface(kind, rng, n);
  };
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {make("C3", "scalar operator factors through D_F^+ and D_F^- in either order",
            "D+ D- = D- D+ = box + (F,F) + 2i(F,grad)", 1e-12, 200),
       scalar_factorization},
      {make("C3G", "grid factorization on a Gaussian-windowed wave",
            "grid D+ D- u vs exact operator, h = 1/64, ratio 4 +- 30% from h = 1/32", 5e-3, 1),
       grid_factorization},
      {make("C4", "retarded potential solves the inhomogeneous scalar equation",
            "box u + (F,F)u + 2i(F,grad u) = q", 5e-3, 2),
       retarded_residual},
      {make("C5", "plane-wave particular solution inverts D_F^+",
            "D+ (D- G / m) = G", 1e-12, 200),
       particular_solution},
      {make("C7K", "spherical means reproduce the constant-data closed forms",
            "u = tau, sin(|E| tau)/|E|, sinh(|H| tau)/|H|", 1e-6, 24),
       kirchhoff_closed_forms},
      {make("C7R", "retarded potential of a narrow pulse matches the spherical mean",
            "retarded(pulse(t) g) = pulse-smeared sin(|E| tau)/|E|", 1e-5, 3),
       retarded_pulse},
      {make("C17", "cap nodes lie on the characteristic set",
            "(xi-E, H) = 0, |xi-E| >= |H|, sigma^2 + (xi+F, xi+F) = 0", 1e-12, 100),
       cap_surface},
      {make("C19", "xi-twistor is annihilated and generated from its scalar potential",
            "D+ Psi = 0, Psi = D- psi / (sqrt2 |xi-E|)", 1e-12, 200),
       xi_annihilation},
      {make("C20", "xi-twistor norm and pseudonorm", "|Psi| = 1, <<Psi>> = i|H|/|xi-E|", 1e-12,
            200),
       xi_norms},
      {make("C21", "xi-twistor energy-momentum",
            "Xi = 1 + i([e,H] +- e sqrt(|xi-E|^2 - |H|^2))/|xi-E|", 1e-12, 200, true),
       xi_energy},
      {make("CXiN", "norm and pseudonorm of the xi-twistor energy-momentum",
            "|Xi| = sqrt(1 + q), <<Xi>>^2 = 1 - q, q = (L^2 - |H|^2 cos^2 g)/L^2", 1e-12, 200,
            true),
       xi_energy_norms},
      {make("C22", "xi-twistor at H = 0", "Psi = (+-i - e)/sqrt2, |Psi| = 1, <<Psi>> = 0, "
                                          "Xi = 1 +- i e",
            1e-12, 200, true),
       plain_xi},
      {make("C22A", "printed H = 0 amplitude", "(+-i + e)/sqrt2 annihilated by D+", 1e-12, 200,
            false, true),
       plain_xi_printed},
      {make("C23", "translated superposition of point masses stays a twistor field",
            "sum Psi(tau - t_k, x - x_k) w_k, D+ of each term = 0", 1e-12, 50),
       translation},
      {make("C24", "cap superposition passes the grid annihilation check",
            "|D+ B| / term scale at h = 1/64", 5e-3, 1),
       cap_superposition},
      {make("C26", "evanescent twistor is annihilated and generated from its scalar potential",
            "D+ Y = 0, Y = D- alpha / (sqrt2 |xi-E|)", 1e-12, 200),
       evanescent_annihilation},
      {make("C27", "evanescent twistor norm and pseudonorm", "|Y| = |H|/|xi-E|, <<Y>> = i",
            1e-12, 200),
       evanescent_norms},
      {make("C28", "evanescent twistor energy-momentum",
            "Xi = 1 + (i[e,H] +- e sqrt(|H|^2 - |xi-E|^2))/|xi-E|", 1e-12, 200, true, true),
       evanescent_energy},
      {make("CHA", "H-twistor annihilation, generation, norm and pseudonorm",
            "D+ Psi_H = 0, |Psi_H| = 1, <<Psi_H>> = 0", 1e-12, 200),
       h_twistor_basics},
      {make("CH", "H-twistor energy-momentum", "Xi(Psi_H) = 0", 1e-12, 200, true, true),
       h_twistor_energy},
      {make("C25w", "harmonic kernel solves the homogeneous equation off the origin",
            "(lap + 2(F,grad) + w^2 + (F,F)) psi_w = 0, h = 1e-3", 1e-5, 50),
       kernel_residual},
      {make("C26w", "harmonic kernel sign fixed by source normalization",
            "L (psi_w * G) = G", 5e-3, 1, false, true),
       kernel_normalization},
      {make("CTH", "harmonic volume potential gives a particular solution",
            "(w + grad + F) (w - grad - F)(psi_w * G) = G", 5e-3, 1),
       helmholtz_residual},
      {make("CHF", "harmonic operator pair factors the harmonic scalar operator",
            "(grad_w^-+ - F)(grad_w^+- + F) = lap +- 2(F,grad) + w^2 + (F,F)", 1e-12, 200),
       harmonic_factorization},
      {make("CHF1", "alternate harmonic factorization",
            "(grad_w^+- +- F)(grad_w^-+ -+ F) = lap +- 2(F,grad) + w^2 + (F,F)", 1e-12, 200,
            false, true),
       harmonic_factorization_printed},
      {make("C33", "omega circle, real and complex F", "|xi-H|^2 = w^2 + |E|^2, (E, xi-H) = 0",
            1e-12, 100),
       surface_body(SurfaceKind::OmegaCircle)},
      {make("C34", "omega sphere, imaginary F", "|xi-H| = |w|", 1e-12, 100),
       surface_body(SurfaceKind::OmegaSphere)},
      {make("C37", "omega-twistor is annihilated and generated from its scalar potential",
            "(grad_w^+- + F) Psi = 0, Psi = (grad_w^-+ - F) psi / (sqrt2 r)", 1e-12, 200),
       omega_annihilation},
      {make("C38", "omega-twistor norm and pseudonorm", "|Psi| = 1, <<Psi>> = i|E|/r", 1e-12,
            200),
       omega_norms},
      {make("C38N", "omega-twistor energy-momentum norms", "|Xi_w| = sqrt2, <<Xi_w>> = 0", 1e-12,
            200, true),
       omega_energy_norms},
      {make("C38X", "omega-twistor energy-momentum", "Xi_w = 1 + i(w e + [e,E])/r", 1e-12, 200,
            true, true),
       omega_energy},
      {make("C38Z", "omega-twistor at E = 0", "Psi = (1 + ie) exp(-i(x, H + e w)), |Psi| = 1",
            1e-12, 50, false, true),
       omega_plain_printed},
      {make("C40", "harmonic superpositions pass the grid annihilation check",
            "|(grad_w^+ + F) T| / term scale at h = 1/64", 5e-3, 1),
       harmonic_superposition},
      {make("C42", "static circle", "|xi-H| = |E|, (E, xi-H) = 0", 1e-12, 100),
       surface_body(SurfaceKind::StaticCircle)},
      {make("C43", "static point for imaginary F", "xi = H, psi = a exp(-i(x,H))", 1e-12, 100),
       surface_body(SurfaceKind::StaticPoint)},
      {make("C45", "static twistor",
            "Psi = ((-1 + i)/sqrt2) e_E exp(-i(x, E+H)), |Psi| = 1, <<Psi>> = -1", 1e-12, 200,
            false, true),
       static_printed},
      {make("C45X", "static twistor energy-momentum",
            "Xi = 1 + i[e,e_E], |Xi| = sqrt2, <<Xi>> = 0", 1e-12, 200, true, true),
       static_energy},
  };
  return list;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.claim.id == id) return e;
  throw Error(Errc::UnknownClaim, "no claim '" + std::string(id) + "'");
}

std::uint64_t claim_seed(std::string_view id, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

ClaimStatus classify(const Outcome& o, double tol) {
  const bool printed = o.conditions_ok && o.error <= tol;
  if (printed) return ClaimStatus::Pass;
  if (o.corrected && *o.corrected <= tol) return ClaimStatus::FailsAsPrintedPassesCorrected;
  return ClaimStatus::Fail;
}

ClaimResult run_entry(const Entry& e, const ConventionFlags& flags, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(claim_seed(e.claim.id, seed));
  Outcome o;
  try {
    o = e.body(rng, flags, e.claim.draws);
  } catch (const Error& err) {
    o.error = INFINITY;
    o.detail = err.what();
  }
  ClaimResult r;
  r.id = e.claim.id;
  r.convention = flags.xi;
  r.status = classify(o, e.claim.tolerance);
  r.max_error = o.error;
  r.corrected_error = o.corrected;
  r.tolerance = e.claim.tolerance;
  r.draws = e.claim.draws;
  r.seed = seed;
  r.detail = o.detail;
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

nlohmann::ordered_json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json j_conv(const ClaimResult& r) {
  return nlohmann::ordered_json(std::string(to_string(r.convention)));
}

}  // namespace

std::string_view to_string(ClaimStatus s) noexcept {
  switch (s) {
    case ClaimStatus::Pass: return "Pass";
    case ClaimStatus::Fail: return "Fail";
    case ClaimStatus::FailsAsPrintedPassesCorrected: return "FailsAsPrinted-PassesCorrected";
  }
  return "?";
}

bool ClaimReport::passed(XiConvention convention) const {
  return std::none_of(entries.begin(), entries.end(), [&](const ClaimResult& r) {
    return r.convention == convention && r.status == ClaimStatus::Fail;
  });
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> c;
    for (const auto& e : entries()) c.push_back(e.claim);
    return c;
  }();
  return claims;
}

const Claim& find_claim(std::string_view id) { return find_entry(id).claim; }

ClaimResult run_claim(std::string_view id, const ConventionFlags& flags, std::uint64_t seed) {
  return run_entry(find_entry(id), flags, seed);
}

ClaimReport run_all(std::vector<XiConvention> conventions, std::uint64_t seed) {
  if (conventions.empty()) conventions.push_back(XiConvention::HermitianLeft);
  ClaimReport report;
  for (const auto& e : entries()) {
    std::optional<ClaimResult> shared;
    for (XiConvention c : conventions) {
      if (e.claim.convention_sensitive) {
        ConventionFlags flags;
        flags.xi = c;
        report.entries.push_back(run_entry(e, flags, seed));
        continue;
      }
      if (!shared) {
        shared = run_entry(e, ConventionFlags{}, seed);
      }
      ClaimResult r = *shared;
      r.convention = c;
      report.entries.push_back(r);
    }
  }
  return report;
}

std::string to_json(const ClaimReport& report) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  nlohmann::ordered_json conventions = nlohmann::ordered_json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : report.entries) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["convention"] = to_string(r.convention);
    j["status"] = to_string(r.status);
    j["max_error"] = number_or_null(r.max_error);
    j["corrected_error"] = r.corrected_error ? number_or_null(*r.corrected_error)
                                           : nlohmann::ordered_json(nullptr);
    j["tolerance"] = r.tolerance;
    j["draws"] = r.draws;
    j["seed"] = r.seed;
    if (!r.detail.empty()) j["detail"] = r.detail;
    claims.push_back(std::move(j));
    if (std::find(conventions.begin(), conventions.end(), j_conv(r)) == conventions.end())
      conventions.push_back(j_conv(r));
    ++counts[static_cast<int>(r.status)];
  }
  nlohmann::ordered_json out;
  out["seed"] = report.entries.empty() ? kDefaultSeed : report.entries.front().seed;
  out["conventions"] = std::move(conventions);
  out["claims"] = std::move(claims);
  out["summary"] = {{"pass", counts[0]},
                    {"fail", counts[1]},
                    {"fails_as_printed_passes_corrected", counts[2]}};
  return out.dump(2) + "\n";
}

void write_table(const ClaimReport& report, std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-15s %-31s %11s %11s %9s %6s %8s\n", "id",
                "convention", "status", "max_error", "corrected", "tol", "draws", "time_s");
  out << line;
  for (const auto& r : report.entries) {
    char corr[32] = "-";
    if (r.corrected_error) std::snprintf(corr, sizeof corr, "%.3e", *r.corrected_error);
    std::snprintf(line, sizeof line, "%-6s %-15s %-31s %11.3e %11s %9.1e %6zu %8.3f\n",
                  r.id.c_str(), std::string(to_string(r.convention)).c_str(),
                  std::string(to_string(r.status)).c_str(), r.max_error, corr, r.tolerance,
                  r.draws, r.runtime_s);
    out << line;
  }
}

}  // namespace biwave
