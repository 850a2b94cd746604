// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "biwave/cli.hpp"
#include "biwave/draws.hpp"
#include "biwave/field_io.hpp"
#include "biwave/green.hpp"
#include "biwave/twistor_factory.hpp"
#include "biwave/verify.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace biwave;
using oracle::hamilton_mul;

namespace {

const Complex I{0, 1};
const double kSqrt2 = std::numbers::sqrt2;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double l2(const Biquaternion& a) {
  return std::sqrt(std::norm(a.s) + std::norm(a.v.x) + std::norm(a.v.y) + std::norm(a.v.z));
}
double radicand(const Biquaternion& a) {
  return std::norm(a.s) - std::norm(a.v.x) - std::norm(a.v.y) - std::norm(a.v.z);
}
Biquaternion hermitian_left(const Biquaternion& a) {
  const Biquaternion h{std::conj(a.s), -conj(a.v)};
  return hamilton_mul(h, a);
}
double clen(const CVec3& v) { return std::sqrt(std::norm(v.x) + std::norm(v.y) + std::norm(v.z)); }

// Symbol of the wave operator pair on exp(sigma tau - i(kappa, x)).
Biquaternion wave_op(const PlaneWaveField& f, const CVec3& F, double sign) {
  const Biquaternion k{Complex{}, f.kappa + F};
  return f.sigma * f.amp + Complex{sign} * hamilton_mul(k, f.amp);
}
// omega + s grad + F on exp(-i(kappa, x)).
Biquaternion harmonic_op(const PlaneWaveField& f, const CVec3& F, double omega, double s) {
  const Biquaternion g{Complex{}, Complex{-s} * I * f.kappa};
  return omega * f.amp + hamilton_mul(g, f.amp) + hamilton_mul(Biquaternion{Complex{}, F}, f.amp);
}
double wave_rel(const Biquaternion& r, const PlaneWaveField& f, const CVec3& F, double w = 0) {
  return l2(r) / (l2(f.amp) * (1 + std::abs(f.sigma) + clen(f.kappa) + clen(F) + std::abs(w)));
}

// --------------------------------------------------------------------- 1

void criterion_annihilation() {
  const auto t0 = Clock::now();
  draws::Rng rng(101);
  double worst[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    const Sign s = i % 2 ? Sign::Minus : Sign::Plus;
    const auto p = draws::propagating(rng);
    const auto xi = xi_twistor(p.xi, p.F, s);
    worst[0] = std::max(worst[0], wave_rel(wave_op(xi, p.F.F, 1), xi, p.F.F));
    const auto q = draws::evanescent(rng);
    const auto ev = evanescent_twistor(q.xi, q.F, s);
    worst[1] = std::max(worst[1], wave_rel(wave_op(ev, q.F.F, 1), ev, q.F.F));
    const auto h = h_twistor(p.F, s);
    worst[2] = std::max(worst[2], wave_rel(wave_op(h, p.F.F, 1), h, p.F.F));
    const auto d = draws::harmonic(rng);
    const auto w = omega_twistor(d.omega, d.F, d.e, s);
    worst[3] = std::max(
        worst[3], wave_rel(harmonic_op(w, d.F.F, d.omega, sign_value(s)), w, d.F.F, d.omega));
    const auto z = draws::static_draw(rng);
    const auto st = static_twistor(z.F, z.e);
    worst[4] = std::max(worst[4], wave_rel(harmonic_op(st, z.F.F, 0, 1), st, z.F.F));
  }
  const double t = seconds_since(t0);
  double m = 0;
  for (double v : worst) m = std::max(m, v);
  report(1, m <= 1e-12 && t < 1.0, "twistor annihilation, 200 draws x 5 families",
         fmt("xi %.1e, evanescent %.1e, H %.1e, ", worst[0], worst[1], worst[2]) +
             fmt("omega %.1e, static %.1e, ", worst[3], worst[4]) + fmt("%.3f s", t));
}

// --------------------------------------------------------------------- 2

void criterion_norms() {
  draws::Rng rng(202);
  double exi = 0, eev = 0, ew = 0;
  for (int i = 0; i < 200; ++i) {
    const Sign s = i % 2 ? Sign::Minus : Sign::Plus;
    const auto p = draws::propagating(rng);
    const double L = length(p.xi - p.E), h = length(p.H);
    const auto a = xi_twistor(p.xi, p.F, s).amp;
    exi = std::max({exi, std::abs(l2(a) - 1), std::abs(radicand(a) + h * h / (L * L))});

    const auto q = draws::evanescent(rng);
    const double Lq = length(q.xi - q.E), hq = length(q.H);
    const auto b = evanescent_twistor(q.xi, q.F, s).amp;
    eev = std::max({eev, std::abs(l2(b) - hq / Lq) / (hq / Lq), std::abs(radicand(b) + 1)});

    const auto d = draws::harmonic(rng);
    const double r2 = d.omega * d.omega + dot(d.E, d.E);
    const auto c = omega_twistor(d.omega, d.F, d.e, Sign::Plus).amp;
    ew = std::max({ew, std::abs(l2(c) - 1), std::abs(radicand(c) + dot(d.E, d.E) / r2)});
  }
  const double m = std::max({exi, eev, ew});
  report(2, m <= 1e-12, "twistor norms and pseudonorms, 200 draws",
         fmt("xi %.1e, evanescent %.1e, omega %.1e", exi, eev, ew));
}

// --------------------------------------------------------------------- 3

void criterion_energy() {
  draws::Rng rng(303);
  double e21 = 0, e28 = 0, e28c = 0, e22 = 0;
  for (int i = 0; i < 200; ++i) {
    const double sv = i % 2 ? -1.0 : 1.0;
    const Sign s = i % 2 ? Sign::Minus : Sign::Plus;

    const auto p = draws::propagating(rng);
    const Vec3 dv = p.xi - p.E;
    const double L = length(dv), h = length(p.H);
    const Vec3 e = dv / L;
    const Biquaternion x21 = hermitian_left(xi_twistor(p.xi, p.F, s).amp);
    const Biquaternion f21{1.0, I * complexify(cross(e, p.H) + sv * std::sqrt(L * L - h * h) * e) / L};
    e21 = std::max(e21, oracle::max_diff(x21, f21));

    const auto q = draws::evanescent(rng);
    const Vec3 dq = q.xi - q.E;
    const double Lq = length(dq), hq = length(q.H);
    const Vec3 eq = dq / Lq;
    const auto ups = evanescent_twistor(q.xi, q.F, s);
    const Biquaternion x28 = hermitian_left(ups.amp);
    const Biquaternion f28{
        1.0, (I * complexify(cross(eq, q.H)) + complexify(sv * std::sqrt(hq * hq - Lq * Lq) * eq)) / Lq};
    const Biquaternion f28c{hq * hq / (Lq * Lq),
                            I * complexify(ups.sigma.real() * q.H + cross(dq, q.H)) / (Lq * Lq)};
    e28 = std::max(e28, oracle::max_diff(x28, f28) / std::max(1.0, l2(x28)));
    e28c = std::max(e28c, oracle::max_diff(x28, f28c) / std::max(1.0, l2(x28)));

    const Vec3 E = draws::vec(rng), u = draws::unit(rng);
    const double Lz = draws::uniform(rng, 0.1, 3.0);
    const auto F0 = StructuralCoefficient::from_wave(E, {});
    const Biquaternion x22 = hermitian_left(xi_twistor(E + Lz * u, F0, s).amp);
    e22 = std::max(e22, oracle::max_diff(x22, Biquaternion{1.0, sv * I * complexify(u)}));
  }

  ConventionFlags qo;
  qo.xi = XiConvention::QuaternionOnly;
  const bool c21q = run_claim("C21", qo).status == ClaimStatus::Fail;
  const bool c22q = run_claim("C22", qo).status == ClaimStatus::Fail;
  const bool chq = run_claim("CH", qo).status == ClaimStatus::Pass;
  std::string matrix;
  for (const char* id : {"C21", "C22", "C28", "CH"}) {
    matrix += std::string(" ") + id + "[";
    for (XiConvention c : {XiConvention::HermitianLeft, XiConvention::HermitianRight,
                           XiConvention::QuaternionOnly}) {
      ConventionFlags f;
      f.xi = c;
      const auto st = run_claim(id, f).status;
      matrix += st == ClaimStatus::Pass ? "P" : st == ClaimStatus::Fail ? "F" : "C";
    }
    matrix += "]";
  }
  const bool ok = e21 <= 1e-12 && e28 <= 1e-12 && e22 <= 1e-12 && c21q && c22q && chq;
  report(3, ok, "energy-momentum closed forms under HermitianLeft",
         fmt("xi %.1e, evanescent as printed %.1e (corrected %.1e), ", e21, e28, e28c) +
             fmt("H=0 %.1e; QuaternionOnly fails C21/C22 and passes CH: ", e22) +
             (c21q && c22q && chq ? "yes" : "no") + ";" + matrix + " (L/R/Q; C = printed fails, corrected passes)");
}

// --------------------------------------------------------------------- 4

struct Windowed {
  Biquaternion amp;
  Complex sigma;
  CVec3 kappa;
  double w;
  Complex phi(double t, const Vec3& x) const {
    return sigma * t - I * dot(kappa, complexify(x)) - (dot(x, x) + t * t) / (2 * w * w);
  }
  Biquaternion operator()(double t, const Vec3& x) const { return std::exp(phi(t, x)) * amp; }
  // box + (F,F) + 2i(F, grad) applied to exp(phi), divided by exp(phi).
  Complex symbol(double t, const Vec3& x, const CVec3& F) const {
    const double w2 = w * w;
    const Complex pt = sigma - t / w2;
    Complex m = -1.0 / w2 + pt * pt + dot(F, F);
    for (int k = 0; k < 3; ++k) {
      const Complex pk = -I * kappa[k] - x[k] / w2;
      m += 1.0 / w2 - pk * pk + 2.0 * I * F[k] * pk;
    }
    return m;
  }
};

double windowed_rel(const Windowed& u, const CVec3& F, double h) {
  GridSpec spec;
  spec.dims = {9, 9, 9, 9};
  spec.spacing = {h, h, h, h};
  spec.origin = {-4 * h, -4 * h, -4 * h, -4 * h};
  const StructuralCoefficient sF{F};
  const GridField g = sample_to_grid(u, spec);
  const GridField r = grid_apply_DF(grid_apply_DF(g, sF, Sign::Minus), sF, Sign::Plus);
  double diff = 0, ref = 0;
  r.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const double t = r.tau(it);
    const Vec3 x = r.position(ix, iy, iz);
    const Biquaternion exact = u.symbol(t, x, F) * u(t, x);
    diff = std::max(diff, l2(r.at(it, ix, iy, iz) - exact));
    ref = std::max(ref, l2(exact));
  });
  return diff / ref;
}

void criterion_factorization() {
  draws::Rng rng(404);
  double pw = 0;
  for (int i = 0; i < 200; ++i) {
    const PlaneWaveField f{draws::biquaternion(rng, 2), draws::complex(rng, 2), draws::cvec(rng, 2)};
    const CVec3 F = draws::cvec(rng, 2);
    const CVec3 k = f.kappa + F;
    const Complex m = f.sigma * f.sigma + dot(k, k);
    const PlaneWaveField g{wave_op(f, F, -1), f.sigma, f.kappa};
    const double scale = l2(f.amp) * (1 + std::norm(f.sigma) + std::pow(clen(k), 2));
    pw = std::max(pw, l2(wave_op(g, F, 1) - m * f.amp) / scale);
  }
  const Windowed u{{1.0, {Complex{0, 0.5}, -0.3, Complex{0.2, 0.1}}},
                   Complex{0.1, 1.2},
                   {1.0, 0.5, -0.5},
                   0.5};
  const CVec3 F{0.3, Complex{0, -0.2}, Complex{0.1, 0.2}};
  const double r32 = windowed_rel(u, F, 1.0 / 32), r64 = windowed_rel(u, F, 1.0 / 64);
  const double ratio = r32 / r64;
  report(4, pw <= 1e-12 && r64 <= 5e-3 && std::abs(ratio - 4) <= 1.2,
         "factorization, plane-wave and grid",
         fmt("multiplier %.1e; grid residual %.2e at h=1/64, ratio %.3f", pw, r64, ratio));
}

// --------------------------------------------------------------------- 5

void criterion_kirchhoff() {
  const auto t0 = Clock::now();
  draws::Rng rng(505);
  const SpatialSource one{[](const Vec3&) { return Complex{1.0}; }};
  double e0 = 0, eE = 0, eH = 0;
  for (int i = 0; i < 24; ++i) {
    const double tau = draws::uniform(rng, 0.1, 2.0);
    const Vec3 E = draws::uniform(rng, 0.05, 2.0) * draws::unit(rng);
    const Vec3 H = draws::uniform(rng, 0.05, 2.0) * draws::unit(rng);
    const Vec3 x = draws::vec(rng);
    GreenConfig cfg;
    e0 = std::max(e0, std::abs(kirchhoff_solve(one, cfg, tau, x) - tau));
    cfg.F = StructuralCoefficient::from_wave(E, {});
    eE = std::max(eE, std::abs(kirchhoff_solve(one, cfg, tau, x) - std::sin(length(E) * tau) / length(E)));
    cfg.F = StructuralCoefficient::from_wave({}, H);
    eH = std::max(eH, std::abs(kirchhoff_solve(one, cfg, tau, x) - std::sinh(length(H) * tau) / length(H)));
  }
  const double t = seconds_since(t0);
  report(5, e0 <= 1e-8 && eE <= 1e-6 && eH <= 1e-6 && t < 5.0,
         "Kirchhoff closed forms, 24 draws, default sphere rule",
         fmt("F=0 %.1e, sin %.1e, sinh %.1e, ", e0, eE, eH) + fmt("%.3f s", t));
}

// --------------------------------------------------------------------- 6

void criterion_kernel() {
  draws::Rng rng(606);
  double worst = 0;
  const double h = 1e-3;
  for (int i = 0; i < 50; ++i) {
    HarmonicKernelParams p;
    p.omega = draws::uniform(rng, 0.0, 3.0);
    p.a = draws::complex(rng);
    p.F = StructuralCoefficient{draws::cvec(rng)};
    const Vec3 x = draws::uniform(rng, 0.5, 2.0) * draws::unit(rng);
    const CVec3& F = p.F.F;
    const Complex u0 = eval_psi_omega(x, p);
    Complex r = (p.omega * p.omega + dot(F, F)) * u0;
    double scale = std::abs(r);
    for (int k = 0; k < 3; ++k) {
      Vec3 d{};
      d[k] = h;
      const Complex up = eval_psi_omega(x + d, p), um = eval_psi_omega(x - d, p);
      const Complex lap = (up - 2.0 * u0 + um) / (h * h);
      const Complex adv = F[k] * (up - um) / h;
      r += lap + adv;
      scale += std::abs(lap) + std::abs(adv);
    }
    worst = std::max(worst, std::abs(r) / scale);
  }
  report(6, worst <= 1e-5, "harmonic kernel FD residual, 50 points, h=1e-3",
         fmt("max relative residual %.2e", worst));
}

// --------------------------------------------------------------------- 7

void criterion_particular() {
  draws::Rng rng(707);
  double worst = 0;
  int n = 0;
  while (n < 200) {
    const PlaneWaveField G{draws::biquaternion(rng, 2), draws::complex(rng, 2), draws::cvec(rng, 2)};
    const CVec3 F = draws::cvec(rng, 2);
    const CVec3 k = G.kappa + F;
    if (std::abs(G.sigma * G.sigma + dot(k, k)) < 1e-3) continue;
    const PlaneWaveField B = pw_particular_solution(G, StructuralCoefficient{F});
    worst = std::max(worst, l2(wave_op(B, F, 1) - G.amp) / l2(G.amp));
    ++n;
  }
  report(7, worst <= 1e-12, "plane-wave particular solution, 200 off-shell draws",
         fmt("max relative residual %.1e", worst));
}

// --------------------------------------------------------------------- 8

// Defining equations written out per surface.
double surface_eq(SurfaceKind kind, const Vec3& xi, const StructuralCoefficient& F, double w) {
  switch (kind) {
    case SurfaceKind::Cap: {
      const Vec3 E = -real(F.F), H = -imag(F.F), d = xi - E;
      const double lo = std::max(0.0, length(H) - length(d));
      return std::abs(dot(d, H)) / (1 + length(d) * length(H)) + lo;
    }
    case SurfaceKind::OmegaCircle:
    case SurfaceKind::StaticCircle: {
      const Vec3 E = real(F.F), H = imag(F.F), d = xi - H;
      return std::abs(dot(d, d) - w * w - dot(E, E)) / (1 + dot(d, d)) +
             std::abs(dot(E, d)) / (1 + length(E) * length(d));
    }
    case SurfaceKind::OmegaSphere: {
      const Vec3 d = xi - imag(F.F);
      return std::abs(length(d) - std::abs(w)) / (1 + std::abs(w));
    }
    case SurfaceKind::StaticPoint: return length(xi - imag(F.F));
  }
  return INFINITY;
}

double grid_residual(SurfaceKind kind, const StructuralCoefficient& F, double w) {
  const auto s = sample_spectral_surface(kind, F, w, {32, 64, 0.0});
  const Vec3 c = kind == SurfaceKind::Cap ? -real(F.F) : imag(F.F);
  const auto field = superpose(
      s, [c](const Vec3& xi) { return Complex{std::exp(-0.5 * dot(xi - c, xi - c))}; },
      Sign::Plus);
  const double h = 1.0 / 64;
  GridSpec spec;
  spec.spacing = {h, h, h, h};
  if (kind == SurfaceKind::Cap) {
    spec.dims = {5, 5, 5, 5};
    spec.origin = {0, -2 * h, -2 * h, -2 * h};
    const GridField g = sample_to_grid(field, spec);
    return grid_apply_DF(g, F, Sign::Plus).max_interior_norm() / grid_DF_term_scale(g, F);
  }
  spec.dims = {1, 5, 5, 5};
  spec.origin = {0, -2 * h, -2 * h, -2 * h};
  const GridField g = sample_to_grid(field, spec);
  return grid_apply_harmonic(g, F, w, Sign::Plus).max_interior_norm() /
         grid_harmonic_term_scale(g, F, w);
}

void criterion_surfaces() {
  draws::Rng rng(808);
  double node = 0;
  std::size_t count = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p = draws::propagating(rng);
    const auto d = draws::harmonic(rng);
    const auto z = draws::static_draw(rng);
    const struct {
      SurfaceKind kind;
      StructuralCoefficient F;
      double w;
    } cases[] = {
        {SurfaceKind::Cap, p.F, 0.0},
        {SurfaceKind::OmegaCircle, StructuralCoefficient::from_harmonic(z.E, d.H), d.omega},
        {SurfaceKind::OmegaSphere, StructuralCoefficient::from_harmonic({}, d.H), d.omega},
        {SurfaceKind::StaticCircle, z.F, 0.0},
        {SurfaceKind::StaticPoint, StructuralCoefficient::from_harmonic({}, z.H), 0.0},
    };
    for (const auto& c : cases) {
      const auto s = sample_spectral_surface(c.kind, c.F, c.w, {16, 32, 0.0});
      for (const auto& xi : s.nodes) node = std::max(node, surface_eq(c.kind, xi, c.F, c.w));
      count += s.nodes.size();
    }
  }
  const double gc = grid_residual(SurfaceKind::Cap, StructuralCoefficient::from_wave({0.3, 0, 0}, {0, 0, 1}), 0);
  const double go = grid_residual(SurfaceKind::OmegaCircle, StructuralCoefficient::from_harmonic({0, 0, 1}, {0.3, 0, 0}), 1.2);
  const double gs = grid_residual(SurfaceKind::OmegaSphere, StructuralCoefficient::from_harmonic({}, {0.2, -0.4, 0}), 1.5);
  const double g0 = grid_residual(SurfaceKind::StaticCircle, StructuralCoefficient::from_harmonic({0, 1.5, 0}, {0, 0, 0.5}), 0);
  const double gm = std::max({gc, go, gs, g0});
  report(8, node <= 1e-12 && gm <= 5e-3, "spectral surfaces and superposed fields",
         fmt("%.0f nodes, max defining-equation residual %.1e; ", double(count), node) +
             fmt("grid residual cap %.1e, omega circle %.1e, omega sphere %.1e, ", gc, go, gs) +
             fmt("static circle %.1e", g0));
}

// --------------------------------------------------------------------- 9

void criterion_io_verify() {
  draws::Rng rng(909);
  GridSpec spec;
  spec.dims = {3, 4, 5, 6};
  spec.spacing = {0.1, 0.2, 0.3, 0.4};
  spec.origin = {0.5, -1, -1, -1};
  GridField g(spec);
  for (auto& b : g.data()) b = draws::biquaternion(rng, 10.0);
  const auto dir = std::filesystem::temp_directory_path();
  const auto bin = dir / "biwave_acceptance.bin";
  write_field(FieldDump{g, {{"source", "random"}}}, bin);
  const FieldDump back = read_field(bin);
  std::filesystem::remove(bin);
  const bool exact = back.field.data().size() == g.data().size() &&
                     std::memcmp(back.field.data().data(), g.data().data(),
                                 g.data().size() * sizeof(Biquaternion)) == 0;

  const auto json = dir / "biwave_acceptance_verify.json";
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli_execute({"verify", "--json", json.string()}, out, err);
  const double t = seconds_since(t0);
  std::ifstream in(json);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  std::filesystem::remove(json);
  std::size_t fails = 0, variants = 0, rows = 0;
  if (j.is_object()) {
    for (const auto& c : j["claims"]) {
      ++rows;
      if (c["convention"] != "HermitianLeft") continue;
      if (c["status"] == "Fail") ++fails;
      if (c["status"] == "FailsAsPrinted-PassesCorrected") ++variants;
    }
  }
  const bool ok = exact && code == 0 && t <= 60.0 && rows == 3 * claim_registry().size() &&
                  fails == 0;
  report(9, ok, "binary round trip and verify --json",
         std::string(exact ? "bit-exact" : "NOT bit-exact") + fmt("; exit %.0f, %.0f rows, ", code, double(rows)) +
             fmt("%.0f default-convention fails, %.0f printed variants, %.1f s", double(fails), double(variants), t));
}

}  // namespace

int main() {
  criterion_annihilation();
  criterion_norms();
  criterion_energy();
  criterion_factorization();
  criterion_kirchhoff();
  criterion_kernel();
  criterion_particular();
  criterion_surfaces();
  criterion_io_verify();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
