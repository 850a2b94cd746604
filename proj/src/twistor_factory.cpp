#include "biwave/twistor_factory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "biwave/error.hpp"
#include "biwave/quadrature.hpp"

namespace biwave {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const Complex kI{0.0, 1.0};

struct WaveFrame {
  Vec3 E, H, d;
  double L, h;
};

WaveFrame wave_frame(const Vec3& xi, const StructuralCoefficient& F) {
  require_finite(xi, "xi");
  require_finite(F.F, "F");
  WaveFrame w;
  w.E = F.wave_E();
  w.H = F.wave_H();
  w.d = xi - w.E;
  w.L = length(w.d);
  w.h = length(w.H);
  if (w.L == 0.0) throw Error(Errc::DegenerateXi, "xi = E; use h_twistor");
  if (std::abs(dot(w.d, w.H)) > kOrthogonalityTol * w.L * std::max(w.h, 1.0)) {
    throw Error(Errc::NotOnSurface, "(xi - E) is not orthogonal to H");
  }
  return w;
}

void require_unit(const Vec3& e) {
  require_finite(e, "e");
  if (std::abs(length(e) - 1.0) > kOrthogonalityTol) {
    throw Error(Errc::BadParams, "direction e must be a unit vector");
  }
}

void require_orthogonal(const Vec3& e, const Vec3& E) {
  if (std::abs(dot(e, E)) > kOrthogonalityTol * std::max(length(E), 1.0)) {
    throw Error(Errc::NotOrthogonal, "direction e is not orthogonal to E");
  }
}

}  // namespace

PlaneWaveField xi_twistor(const Vec3& xi, const StructuralCoefficient& F, Sign branch) {
  const WaveFrame w = wave_frame(xi, F);
  if (w.L <= w.h) {
    throw Error(Errc::EvanescentRegime, "|xi - E| <= |H|; use evanescent_twistor");
  }
  const double freq = std::sqrt((w.L - w.h) * (w.L + w.h));
  PlaneWaveField f;
  f.sigma = Complex{0.0, sign_value(branch) * freq};
  f.kappa = complexify(xi);
  f.amp = Biquaternion{f.sigma, make_cvec(-w.d, w.H)} / Complex{kSqrt2 * w.L};
  return f;
}

PlaneWaveField evanescent_twistor(const Vec3& xi, const StructuralCoefficient& F,
                                  Sign branch) {
  const WaveFrame w = wave_frame(xi, F);
  if (w.L > w.h) {
    throw Error(Errc::PropagatingRegime, "|xi - E| > |H|; use xi_twistor");
  }
  const double rate = std::sqrt((w.h - w.L) * (w.h + w.L));
  PlaneWaveField f;
  f.sigma = Complex{sign_value(branch) * rate, 0.0};
  f.kappa = complexify(xi);
  f.amp = Biquaternion{f.sigma, make_cvec(-w.d, w.H)} / Complex{kSqrt2 * w.L};
  return f;
}

PlaneWaveField h_twistor(const StructuralCoefficient& F, Sign branch) {
  require_finite(F.F, "F");
  const Vec3 E = F.wave_E();
  const Vec3 H = F.wave_H();
  const double h = length(H);
  if (h == 0.0) throw Error(Errc::ZeroH, "H-twistor needs H != 0");
  const double s = sign_value(branch);
  PlaneWaveField f;
  f.sigma = Complex{-s * h, 0.0};
  f.kappa = complexify(E);
  f.amp = Biquaternion{Complex{-s}, make_cvec(Vec3{}, H / h)} / Complex{kSqrt2};
  return f;
}

PlaneWaveField omega_twistor(double omega, const StructuralCoefficient& F, const Vec3& e,
                             Sign branch) {
  require_finite(F.F, "F");
  require_unit(e);
  if (!std::isfinite(omega)) throw Error(Errc::NonFinite, "omega");
  const Vec3 E = F.harmonic_E();
  const Vec3 H = F.harmonic_H();
  require_orthogonal(e, E);
  const double r = std::hypot(omega, length(E));
  if (r == 0.0) throw Error(Errc::DegenerateSurface, "omega = 0 and E = 0");
  const double s = sign_value(branch);
  PlaneWaveField f;
  f.kappa = complexify(s * H + r * e);
  // (omega -+ grad - F) applied to exp(-i(kappa, x)).
  const Biquaternion gen =
      Biquaternion{Complex{omega}} + Biquaternion::vector(Complex{0, s} * f.kappa - F.F);
  f.amp = gen / Complex{kSqrt2 * r};
  return f;
}

PlaneWaveField static_twistor(const StructuralCoefficient& F, const Vec3& e) {
  require_finite(F.F, "F");
  require_unit(e);
  const Vec3 E = F.harmonic_E();
  const double len = length(E);
  if (len == 0.0) throw Error(Errc::ZeroE, "static twistor needs E != 0");
  require_orthogonal(e, E);
  PlaneWaveField f;
  f.kappa = complexify(F.harmonic_H() + len * e);
  f.amp = Biquaternion::vector(kI * f.kappa - F.F) / Complex{kSqrt2 * len};
  return f;
}

TwistorKinematics xi_kinematics(const Vec3& xi, const StructuralCoefficient& F) {
  const WaveFrame w = wave_frame(xi, F);
  if (w.L <= w.h) throw Error(Errc::EvanescentRegime, "no real frequency");
  TwistorKinematics k;
  k.frequency = std::sqrt((w.L - w.h) * (w.L + w.h));
  const double kn = length(xi);
  k.phase_speed = k.frequency / kn;
  k.wavelength = 2.0 * std::numbers::pi / kn;
  k.period = 2.0 * std::numbers::pi / k.frequency;
  k.gamma = w.h == 0.0 ? std::numbers::pi / 2
                       : std::acos(std::clamp(dot(w.d, w.H) / (w.L * w.h), -1.0, 1.0));
  return k;
}

std::string_view to_string(SurfaceKind kind) noexcept {
  switch (kind) {
    case SurfaceKind::Cap: return "cap";
    case SurfaceKind::OmegaCircle: return "omega-circle";
    case SurfaceKind::OmegaSphere: return "omega-sphere";
    case SurfaceKind::StaticCircle: return "static-circle";
    case SurfaceKind::StaticPoint: return "static-point";
  }
  return "?";
}

SurfaceKind parse_surface_kind(std::string_view name) {
  for (auto k : {SurfaceKind::Cap, SurfaceKind::OmegaCircle, SurfaceKind::OmegaSphere,
                 SurfaceKind::StaticCircle, SurfaceKind::StaticPoint}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::BadParams, "unknown surface kind '" + std::string(name) + "'");
}

namespace {

void add_circle(SpectralSurfaceSample& s, const Vec3& center, const Vec3& normal,
                double radius, std::size_t n) {
  if (n < 3) throw Error(Errc::BadParams, "circle needs at least 3 nodes");
  const auto [u, w] = orthonormal_pair(normal);
  const double dth = 2.0 * std::numbers::pi / n;
  for (std::size_t j = 0; j < n; ++j) {
    const double th = j * dth;
    s.nodes.push_back(center + radius * (std::cos(th) * u + std::sin(th) * w));
    s.weights.push_back(radius * dth);
  }
}

}  // namespace

SpectralSurfaceSample sample_spectral_surface(SurfaceKind kind,
                                              const StructuralCoefficient& F,
                                              double omega, const SurfaceGrid& grid) {
  require_finite(F.F, "F");
  if (!std::isfinite(omega)) throw Error(Errc::NonFinite, "omega");
  SpectralSurfaceSample s;
  s.kind = kind;
  s.F = F;
  s.omega = omega;
  s.grid = grid;
  switch (kind) {
    case SurfaceKind::Cap: {
      const Vec3 E = F.wave_E();
      const Vec3 H = F.wave_H();
      const double h = length(H);
      if (h == 0.0) throw Error(Errc::BadParams, "cap surface needs H != 0");
      const double R = grid.r_trunc > 0.0 ? grid.r_trunc : 4.0 * std::max(h, 1.0);
      s.grid.r_trunc = R;
      if (!(R > h)) throw Error(Errc::BadParams, "truncation radius must exceed |H|");
      if (grid.n_radial < 2 || grid.n_angular < 3) {
        throw Error(Errc::BadParams, "cap needs n_radial >= 2 and n_angular >= 3");
      }
      const auto [u, w] = orthonormal_pair(H);
      const double dr = (R - h) / (grid.n_radial - 1);
      const double dth = 2.0 * std::numbers::pi / grid.n_angular;
      for (std::size_t i = 0; i < grid.n_radial; ++i) {
        const double r = i + 1 == grid.n_radial ? R : h + i * dr;
        const double wr = (i == 0 || i + 1 == grid.n_radial ? 0.5 : 1.0) * dr * r;
        for (std::size_t j = 0; j < grid.n_angular; ++j) {
          const double th = j * dth;
          s.nodes.push_back(E + r * (std::cos(th) * u + std::sin(th) * w));
          s.weights.push_back(wr * dth);
        }
      }
      break;
    }
    case SurfaceKind::OmegaCircle: {
      const Vec3 E = F.harmonic_E();
      if (length(E) == 0.0) throw Error(Errc::BadParams, "omega circle needs E != 0");
      add_circle(s, F.harmonic_H(), E, std::hypot(omega, length(E)), grid.n_angular);
      break;
    }
    case SurfaceKind::StaticCircle: {
      const Vec3 E = F.harmonic_E();
      if (omega != 0.0) throw Error(Errc::BadParams, "static circle requires omega = 0");
      if (length(E) == 0.0) throw Error(Errc::BadParams, "static circle needs E != 0");
      add_circle(s, F.harmonic_H(), E, length(E), grid.n_angular);
      break;
    }
    case SurfaceKind::OmegaSphere: {
      if (length(F.harmonic_E()) != 0.0) {
        throw Error(Errc::BadParams, "omega sphere requires real part of F = 0");
      }
      if (omega == 0.0) throw Error(Errc::BadParams, "omega sphere requires omega != 0");
      const SphereNodes sn = sphere_nodes({grid.n_radial, grid.n_angular});
      const double r = std::abs(omega);
      for (std::size_t j = 0; j < sn.directions.size(); ++j) {
        s.nodes.push_back(F.harmonic_H() + r * sn.directions[j]);
        s.weights.push_back(r * r * sn.weights[j]);
      }
      break;
    }
    case SurfaceKind::StaticPoint: {
      if (omega != 0.0 || length(F.harmonic_E()) != 0.0) {
        throw Error(Errc::BadParams, "static point requires omega = 0 and real part of F = 0");
      }
      s.nodes.push_back(F.harmonic_H());
      s.weights.push_back(1.0);
      break;
    }
  }
  return s;
}

double surface_residual(const SpectralSurfaceSample& s, std::size_t i) {
  const Vec3& xi = s.nodes.at(i);
  if (s.kind == SurfaceKind::Cap) {
    const Vec3 E = s.F.wave_E();
    const Vec3 H = s.F.wave_H();
    const Vec3 d = xi - E;
    return std::abs(dot(d, H)) / length(H) + std::max(0.0, length(H) - length(d));
  }
  // (xi + iF, xi + iF) = omega^2 covers every harmonic and static kind.
  const CVec3 z = complexify(xi) + kI * s.F.F;
  return std::abs(dot(z, z) - s.omega * s.omega);
}

Biquaternion PlaneWaveSum::operator()(double tau, const Vec3& x) const {
  Biquaternion acc;
  for (const auto& t : terms) acc += pw_eval(t, tau, x);
  return acc;
}

namespace {

PlaneWaveField elementary(const SpectralSurfaceSample& s, const Vec3& xi, Sign branch,
                          Potential potential) {
  switch (s.kind) {
    case SurfaceKind::Cap: {
      const double L = length(xi - s.F.wave_E());
      const double h = length(s.F.wave_H());
      return L > h ? xi_twistor(xi, s.F, branch) : evanescent_twistor(xi, s.F, branch);
    }
    case SurfaceKind::OmegaCircle:
    case SurfaceKind::OmegaSphere: {
      const Vec3 d = xi - s.F.harmonic_H();
      return omega_twistor(s.omega, s.F, d / length(d), branch);
    }
    case SurfaceKind::StaticCircle: {
      if (branch != Sign::Plus) {
        throw Error(Errc::BadParams, "static twistors exist for the + branch only");
      }
      const Vec3 d = xi - s.F.harmonic_H();
      return static_twistor(s.F, d / length(d));
    }
    case SurfaceKind::StaticPoint:
      if (potential == Potential::Twistor) {
        throw Error(Errc::BadParams,
                    "the static point generates a vanishing twistor; use the scalar potential");
      }
      return PlaneWaveField{Biquaternion{1.0}, Complex{}, complexify(xi)};
  }
  return {};
}

}  // namespace

PlaneWaveSum superpose_terms(const SpectralSurfaceSample& sample,
                             const SpectralDensity& density, Sign branch,
                             Potential potential) {
  PlaneWaveSum sum;
  sum.terms.reserve(sample.nodes.size());
  for (std::size_t j = 0; j < sample.nodes.size(); ++j) {
    const Vec3& xi = sample.nodes[j];
    PlaneWaveField f = elementary(sample, xi, branch, potential);
    if (potential == Potential::Scalar) f.amp = Biquaternion{1.0};
    f.amp *= sample.weights[j] * density(xi);
    sum.terms.push_back(f);
  }
  return sum;
}

FieldEvaluator superpose(const SpectralSurfaceSample& sample, const SpectralDensity& density,
                         Sign branch, Potential potential) {
  auto sum = std::make_shared<const PlaneWaveSum>(
      superpose_terms(sample, density, branch, potential));
  return [sum](double tau, const Vec3& x) { return (*sum)(tau, x); };
}

FieldEvaluator translate_superpose(FieldEvaluator base, PointSourceSet sources) {
  return [base = std::move(base), sources = std::move(sources)](double tau, const Vec3& x) {
    Biquaternion acc;
    for (const auto& src : sources) acc += mul(base(tau - src.tau0, x - src.x0), src.weight);
    return acc;
  };
}

}  // namespace biwave
