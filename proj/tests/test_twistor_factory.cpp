#include <cmath>
#include <numbers>

#include "biwave/draws.hpp"
#include "biwave/error.hpp"
#include "biwave/twistor_factory.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace biwave;

namespace {

const Complex I{0, 1};
constexpr double kPi = std::numbers::pi;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::BadParams;
}

Vec3 unit_of(const Vec3& v) { return v / length(v); }

}  // namespace

TEST_CASE("xi-twistor worked example") {
  const auto F = StructuralCoefficient::from_wave({}, {0, 0, 1});
  const auto psi = xi_twistor({2, 0, 0}, F, Sign::Plus);
  CHECK(std::abs(psi.sigma - I * std::sqrt(3.0)) < 1e-15);
  CHECK(psi.kappa == CVec3{Complex{2}, Complex{}, Complex{}});
  CHECK(norm(psi.amp) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(pseudonorm(psi.amp) - 0.5 * I) < 1e-15);

  const auto k = xi_kinematics({2, 0, 0}, F);
  CHECK(k.frequency == doctest::Approx(std::sqrt(3.0)));
  CHECK(k.phase_speed == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(k.wavelength == doctest::Approx(kPi));
  CHECK(k.period == doctest::Approx(2 * kPi / std::sqrt(3.0)));
  CHECK(k.gamma == doctest::Approx(kPi / 2));
}

TEST_CASE("xi-twistors: annihilation, norms and energy-momentum (200 draws)") {
  draws::Rng rng(101);
  for (int n = 0; n < 200; ++n) {
    const auto d = draws::propagating(rng);
    const Vec3 dv = d.xi - d.E;
    const double L = length(dv), h = length(d.H);
    const double varpi = std::sqrt(L * L - h * h);
    const Vec3 e = dv / L;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto psi = xi_twistor(d.xi, d.F, s);
      CHECK(norm(pw_apply_DF(psi, d.F, Sign::Plus).amp) <= 1e-12);
      CHECK(norm(psi.amp) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(pseudonorm_squared(psi.amp) + h * h / (L * L)) <= 1e-13);
      CHECK(pseudonorm(psi.amp).imag() == doctest::Approx(h / L).epsilon(1e-12));

      const Biquaternion expected{Complex{1},
                                  I * complexify(sign_value(s) * varpi * e + cross(e, d.H)) /
                                      Complex{L}};
      const auto xi = energy_momentum(psi.amp);
      CHECK(oracle::max_diff(xi, expected) <= 1e-12);
      CHECK(std::abs(pseudonorm_squared(xi)) <= 1e-12);
    }
  }
}

TEST_CASE("evanescent twistors (200 draws)") {
  draws::Rng rng(102);
  for (int n = 0; n < 200; ++n) {
    const auto d = draws::evanescent(rng);
    const Vec3 dv = d.xi - d.E;
    const double L = length(dv), h = length(d.H);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto ups = evanescent_twistor(d.xi, d.F, s);
      CHECK(ups.sigma.imag() == 0.0);
      CHECK(ups.sigma.real() * sign_value(s) >= 0.0);
      CHECK(norm(pw_apply_DF(ups, d.F, Sign::Plus).amp) <= 1e-12 * (h / L));
      CHECK(norm(ups.amp) == doctest::Approx(h / L).epsilon(1e-12));

      // Hermitian-left product: |H|^2/L^2 + i (sigma H + [d, H]) / L^2.
      const Biquaternion expected{
          Complex{h * h / (L * L)},
          I * complexify(ups.sigma.real() * d.H + cross(dv, d.H)) / Complex{L * L}};
      const auto xi = energy_momentum(ups.amp);
      CHECK(oracle::max_diff(xi, expected) <= 1e-12 * h * h / (L * L));
    }
  }
}

TEST_CASE("H-twistor") {
  const auto F = StructuralCoefficient::from_wave({1, 0, 0}, {0, 0, 2});
  const auto plus = h_twistor(F, Sign::Plus);
  CHECK(plus.sigma == Complex{-2.0});
  CHECK(plus.kappa == CVec3{Complex{1}, Complex{}, Complex{}});
  const double r = 1 / std::numbers::sqrt2;
  CHECK(oracle::max_diff(plus.amp, Biquaternion{Complex{-r}, {Complex{}, Complex{}, I * r}}) <
        1e-15);
  draws::Rng rng(103);
  for (int n = 0; n < 200; ++n) {
    const auto d = draws::propagating(rng);
    const Vec3 eH = unit_of(d.H);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto t = h_twistor(d.F, s);
      CHECK(norm(pw_apply_DF(t, d.F, Sign::Plus).amp) <= 1e-12);
      CHECK(norm(t.amp) == doctest::Approx(1.0));
      CHECK(std::abs(pseudonorm(t.amp)) <= 1e-7);
      const Biquaternion expected{Complex{1}, -sign_value(s) * I * complexify(eH)};
      CHECK(oracle::max_diff(energy_momentum(t.amp), expected) <= 1e-13);
      CHECK(norm(energy_momentum(t.amp, {XiConvention::QuaternionOnly})) <= 1e-13);
    }
  }
}

TEST_CASE("omega-twistors (200 draws)") {
  const auto F = StructuralCoefficient::from_harmonic({0, 0, 2}, {});
  const auto om = omega_twistor(1.0, F, {1, 0, 0}, Sign::Plus);
  CHECK(std::abs(pseudonorm(om.amp) - I * (2 / std::sqrt(5.0))) < 1e-15);

  draws::Rng rng(104);
  for (int n = 0; n < 200; ++n) {
    const auto d = draws::harmonic(rng);
    const double r = std::sqrt(d.omega * d.omega + dot(d.E, d.E));
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const auto t = omega_twistor(d.omega, d.F, d.e, s);
      CHECK(norm(pw_apply_harmonic(t, d.F, d.omega, s).amp) <= 1e-12);
      CHECK(norm(t.amp) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(pseudonorm_squared(t.amp) + dot(d.E, d.E) / (r * r)) <= 1e-13);

      const Vec3 along = sign_value(s) * d.omega * d.e;
      const auto right = energy_momentum(t.amp, {XiConvention::HermitianRight});
      const Biquaternion expected{Complex{1}, I * complexify(along + cross(d.e, d.E)) / Complex{r}};
      if (s == Sign::Plus) CHECK(oracle::max_diff(right, expected) <= 1e-12);
      for (auto c : {XiConvention::HermitianLeft, XiConvention::HermitianRight}) {
        const auto xi = energy_momentum(t.amp, {c});
        CHECK(norm(xi) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
        CHECK(std::abs(pseudonorm_squared(xi)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("static twistors (200 draws)") {
  draws::Rng rng(105);
  for (int n = 0; n < 200; ++n) {
    const auto d = draws::static_draw(rng);
    const auto t = static_twistor(d.F, d.e);
    const Vec3 eE = unit_of(d.E);
    CHECK(norm(pw_apply_harmonic(t, d.F, 0.0, Sign::Plus).amp) <= 1e-12);
    CHECK(norm(t.amp) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(pseudonorm(t.amp) - I) <= 1e-7);
    CHECK(oracle::max_diff(t.amp, Biquaternion{Complex{}, complexify(-eE) + I * complexify(d.e)} /
                                      Complex{std::numbers::sqrt2}) <= 1e-14);
    const auto right = energy_momentum(t.amp, {XiConvention::HermitianRight});
    CHECK(oracle::max_diff(right, Biquaternion{Complex{1}, I * complexify(cross(d.e, eE))}) <=
          1e-13);
    CHECK(std::abs(dot(d.E, real(t.kappa) - d.H)) <= 1e-12);
  }
}

TEST_CASE("constructor error codes") {
  const auto F = StructuralCoefficient::from_wave({}, {0, 0, 1});
  CHECK(code_of([&] { xi_twistor({0, 0, 2}, F, Sign::Plus); }) == Errc::NotOnSurface);
  CHECK(code_of([&] { xi_twistor({0.5, 0, 0}, F, Sign::Plus); }) == Errc::EvanescentRegime);
  CHECK(code_of([&] { xi_twistor({1, 0, 0}, F, Sign::Plus); }) == Errc::EvanescentRegime);
  CHECK(code_of([&] { xi_twistor({0, 0, 0}, F, Sign::Plus); }) == Errc::DegenerateXi);
  CHECK(code_of([&] { evanescent_twistor({2, 0, 0}, F, Sign::Plus); }) ==
        Errc::PropagatingRegime);
  CHECK(code_of([&] { h_twistor(StructuralCoefficient::from_wave({1, 0, 0}, {}), Sign::Plus); }) ==
        Errc::ZeroH);
  CHECK(code_of([&] { xi_twistor({std::nan(""), 0, 0}, F, Sign::Plus); }) == Errc::NonFinite);

  const auto G = StructuralCoefficient::from_harmonic({0, 0, 1}, {});
  CHECK(code_of([&] { omega_twistor(1.0, G, {0, 0, 1}, Sign::Plus); }) == Errc::NotOrthogonal);
  CHECK(code_of([&] { omega_twistor(1.0, G, {2, 0, 0}, Sign::Plus); }) == Errc::BadParams);
  CHECK(code_of([&] { omega_twistor(0.0, StructuralCoefficient{}, {1, 0, 0}, Sign::Plus); }) ==
        Errc::DegenerateSurface);
  CHECK(code_of([&] { static_twistor(StructuralCoefficient{}, {1, 0, 0}); }) == Errc::ZeroE);
}

TEST_CASE("spectral surfaces: residuals and measures") {
  SurfaceGrid g;
  g.n_radial = 16;
  g.n_angular = 32;
  g.r_trunc = 3.0;

  const auto Fw = StructuralCoefficient::from_wave({0.5, 0, 0}, {0, 0, 1});
  const auto cap = sample_spectral_surface(SurfaceKind::Cap, Fw, 0.0, g);
  CHECK(cap.nodes.size() == 16 * 32);
  double area = 0.0;
  for (std::size_t i = 0; i < cap.nodes.size(); ++i) {
    CHECK(surface_residual(cap, i) <= 1e-12);
    area += cap.weights[i];
  }
  CHECK(area == doctest::Approx(kPi * (9.0 - 1.0)).epsilon(1e-12));

  const auto Fh = StructuralCoefficient::from_harmonic({0, 0, 2}, {0.3, -0.1, 0});
  const auto circ = sample_spectral_surface(SurfaceKind::OmegaCircle, Fh, 1.0, g);
  double len = 0.0;
  for (std::size_t i = 0; i < circ.nodes.size(); ++i) {
    CHECK(surface_residual(circ, i) <= 1e-12);
    len += circ.weights[i];
  }
  CHECK(len == doctest::Approx(2 * kPi * std::sqrt(5.0)).epsilon(1e-12));

  const auto scirc = sample_spectral_surface(SurfaceKind::StaticCircle, Fh, 0.0, g);
  for (std::size_t i = 0; i < scirc.nodes.size(); ++i) CHECK(surface_residual(scirc, i) <= 1e-12);

  const auto Fs = StructuralCoefficient::from_harmonic({}, {0.3, -0.1, 0.2});
  const auto sph = sample_spectral_surface(SurfaceKind::OmegaSphere, Fs, 1.5, g);
  double s = 0.0;
  for (std::size_t i = 0; i < sph.nodes.size(); ++i) {
    CHECK(surface_residual(sph, i) <= 1e-12);
    s += sph.weights[i];
  }
  CHECK(s == doctest::Approx(4 * kPi * 2.25).epsilon(1e-12));

  const auto pt = sample_spectral_surface(SurfaceKind::StaticPoint, Fs, 0.0, g);
  CHECK(pt.nodes.size() == 1);
  CHECK(surface_residual(pt, 0) <= 1e-15);

  CHECK(code_of([&] { sample_spectral_surface(SurfaceKind::OmegaSphere, Fh, 1.0, g); }) ==
        Errc::BadParams);
  CHECK(code_of([&] { sample_spectral_surface(SurfaceKind::Cap, StructuralCoefficient{}, 0, g); }) ==
        Errc::BadParams);
  CHECK(parse_surface_kind(to_string(SurfaceKind::OmegaCircle)) == SurfaceKind::OmegaCircle);
  CHECK(code_of([] { parse_surface_kind("torus"); }) == Errc::BadParams);
}

TEST_CASE("superposition is linear and termwise annihilated") {
  SurfaceGrid g;
  g.n_radial = 6;
  g.n_angular = 8;
  g.r_trunc = 2.5;
  const auto F = StructuralCoefficient::from_wave({0.2, 0.1, 0}, {0, 0, 1});
  const auto cap = sample_spectral_surface(SurfaceKind::Cap, F, 0.0, g);
  const SpectralDensity phi = [](const Vec3& xi) { return std::exp(-dot(xi, xi)); };
  const SpectralDensity psi = [](const Vec3& xi) { return Complex{xi.x, xi.y}; };
  const SpectralDensity mix = [&](const Vec3& xi) { return 2.0 * phi(xi) - I * psi(xi); };

  const auto a = superpose(cap, phi, Sign::Plus);
  const auto b = superpose(cap, psi, Sign::Plus);
  const auto c = superpose(cap, mix, Sign::Plus);
  const Vec3 x{0.3, -0.2, 0.5};
  CHECK(oracle::max_diff(c(0.4, x), 2.0 * a(0.4, x) - I * b(0.4, x)) <= 1e-12);

  for (const auto& t : superpose_terms(cap, phi, Sign::Plus).terms)
    CHECK(norm(pw_apply_DF(t, F, Sign::Plus).amp) <= 1e-12);
  for (const auto& t : superpose_terms(cap, phi, Sign::Minus, Potential::Scalar).terms) {
    CHECK(t.amp.v == CVec3{});
    CHECK(std::abs(pw_scalar_multiplier(t, F)) <= 1e-12);
  }

  // A single-node sample reproduces the twistor itself.
  SpectralSurfaceSample one = cap;
  one.nodes = {Vec3{2.2, 0.1, 0.0}};
  one.weights = {1.0};
  const auto tw = xi_twistor(one.nodes[0], F, Sign::Minus);
  const auto f = superpose(one, [](const Vec3&) { return Complex{1}; }, Sign::Minus);
  CHECK(oracle::max_diff(f(0.7, x), tw(0.7, x)) <= 1e-14);

  const auto Fs = StructuralCoefficient::from_harmonic({}, {0.3, 0, 0});
  const auto pt = sample_spectral_surface(SurfaceKind::StaticPoint, Fs, 0.0, g);
  CHECK(code_of([&] { superpose_terms(pt, phi, Sign::Plus); }) == Errc::BadParams);
  CHECK(superpose_terms(pt, phi, Sign::Plus, Potential::Scalar).terms.size() == 1);
}

TEST_CASE("translate_superpose") {
  const auto F = StructuralCoefficient::from_wave({}, {0, 0, 1});
  const auto psi = xi_twistor({2, 0, 0}, F, Sign::Plus);
  const FieldEvaluator base = [psi](double t, const Vec3& x) { return psi(t, x); };

  const auto same = translate_superpose(base, {PointSource{}});
  CHECK(oracle::max_diff(same(0.3, {1, 2, 3}), psi(0.3, {1, 2, 3})) == 0.0);

  const Biquaternion w{Complex{0.5}, {I, Complex{}, Complex{1}}};
  const auto shifted = translate_superpose(base, {PointSource{w, 0.2, {1, 0, 0}}});
  CHECK(oracle::max_diff(shifted(0.5, {1.5, 0, 0}), mul(psi(0.3, {0.5, 0, 0}), w)) <= 1e-15);

  const auto pair = translate_superpose(base, {PointSource{}, PointSource{w, 0.2, {1, 0, 0}}});
  CHECK(oracle::max_diff(pair(0.5, {1.5, 0, 0}),
                         psi(0.5, {1.5, 0, 0}) + mul(psi(0.3, {0.5, 0, 0}), w)) <= 1e-15);
}
