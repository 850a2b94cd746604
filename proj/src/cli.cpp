#include "biwave/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "CLI11.hpp"
#include "biwave/error.hpp"
#include "biwave/field_io.hpp"
#include "biwave/green.hpp"
#include "biwave/twistor_factory.hpp"
#include "biwave/verify.hpp"
#include "biwave/wave_calculus.hpp"
#include "json.hpp"

namespace biwave {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view text, char sep = ',') {
  std::vector<std::string_view> parts;
  while (true) {
    const auto p = text.find(sep);
    parts.push_back(text.substr(0, p));
    if (p == std::string_view::npos) break;
    text.remove_prefix(p + 1);
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double v = 0.0;
  const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || r.ec != std::errc{} || r.ptr != t.data() + t.size()) {
    throw Error(Errc::BadParams, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> v;
  for (auto p : split(text)) v.push_back(parse_real(p));
  return v;
}

template <std::size_t N>
std::array<double, N> parse_array(std::string_view text, const char* what) {
  const auto v = parse_reals(text);
  if (v.size() != N) {
    throw Error(Errc::BadParams, std::string(what) + " needs " + std::to_string(N) +
                                     " comma-separated values");
  }
  std::array<double, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_cvec(const CVec3& v) {
  return format_complex(v.x) + "," + format_complex(v.y) + "," + format_complex(v.z);
}

std::string format_bq(const Biquaternion& b) {
  return format_complex(b.s) + "," + format_cvec(b.v);
}

Biquaternion parse_bq(std::string_view text) {
  const auto p = split(text);
  if (p.size() == 1) return Biquaternion{parse_complex(p[0])};
  if (p.size() != 4) throw Error(Errc::BadParams, "biquaternion needs 1 or 4 components");
  return {parse_complex(p[0]), {parse_complex(p[1]), parse_complex(p[2]), parse_complex(p[3])}};
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw Error(Errc::BadParams, "branch must be + or -");
}

// ------------------------------------------------------------------- grids

struct GridOpts {
  std::string dims, h = "0.05", origin, out;
};

void add_grid(CLI::App* c, GridOpts& g) {
  c->add_option("--grid", g.dims, "sample on a grid: node counts nt,nx,ny,nz");
  c->add_option("--h", g.h, "grid spacing: one value or ht,hx,hy,hz")->capture_default_str();
  c->add_option("--origin", g.origin,
                "grid origin tau,x,y,z (default: tau start, space centered on 0)");
  c->add_option("--out", g.out, "field dump path; .csv selects CSV, anything else binary");
}

std::optional<GridSpec> make_grid(const GridOpts& g, double tau0 = 0.0) {
  if (g.dims.empty()) {
    if (!g.out.empty()) throw Error(Errc::BadParams, "--out needs --grid");
    return std::nullopt;
  }
  GridSpec spec;
  const auto d = parse_array<4>(g.dims, "--grid");
  for (int a = 0; a < 4; ++a) {
    if (d[a] < 1 || d[a] != std::floor(d[a])) throw Error(Errc::BadSpec, "--grid wants positive integers");
    spec.dims[a] = static_cast<std::size_t>(d[a]);
  }
  const auto h = parse_reals(g.h);
  if (h.size() == 1) {
    spec.spacing = {h[0], h[0], h[0], h[0]};
  } else if (h.size() == 4) {
    std::copy(h.begin(), h.end(), spec.spacing.begin());
  } else {
    throw Error(Errc::BadParams, "--h needs 1 or 4 values");
  }
  if (g.origin.empty()) {
    spec.origin[0] = tau0;
    for (int a = 1; a < 4; ++a) spec.origin[a] = -0.5 * spec.spacing[a] * (spec.dims[a] - 1);
  } else {
    spec.origin = parse_array<4>(g.origin, "--origin");
  }
  spec.validate();
  return spec;
}

bool fits(const GridSpec& s, bool time_axis) {
  for (int a = time_axis ? 0 : 1; a < 4; ++a)
    if (s.dims[a] < 3) return false;
  return true;
}

void emit(const GridField& g, const GridOpts& opts, Json generator, std::ostream& out) {
  out << "grid_nodes " << g.data().size() << '\n';
  out << "grid_max_norm " << fmt_real(g.max_interior_norm()) << '\n';
  if (opts.out.empty()) return;
  write_field(FieldDump{g, nlohmann::json::parse(generator.dump())}, opts.out);
  out << "wrote " << opts.out << '\n';
}

// ----------------------------------------------------------------- verify

struct VerifyOpts {
  std::string json;
  std::uint64_t seed = kDefaultSeed;
  std::string conventions = "HermitianLeft,HermitianRight,QuaternionOnly";
  std::vector<std::string> claims;
};

int run_verify(const VerifyOpts& o, std::ostream& out) {
  std::vector<XiConvention> conv;
  for (auto c : split(o.conventions)) conv.push_back(parse_xi_convention(trim(c)));
  ClaimReport report;
  if (o.claims.empty()) {
    report = run_all(conv, o.seed);
  } else {
    for (const auto& id : o.claims) {
      find_claim(id);
      for (XiConvention c : conv) {
        ConventionFlags f;
        f.xi = c;
        report.entries.push_back(run_claim(id, f, o.seed));
      }
    }
  }
  write_table(report, out);
  if (o.json == "-") {
    out << to_json(report);
  } else if (!o.json.empty()) {
    std::ofstream f(o.json, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::Io, "cannot open '" + o.json + "' for writing");
    f << to_json(report);
    if (!f) throw Error(Errc::Io, "write to '" + o.json + "' failed");
  }
  const XiConvention gate = std::find(conv.begin(), conv.end(), XiConvention::HermitianLeft) !=
                                    conv.end()
                                ? XiConvention::HermitianLeft
                                : conv.front();
  const bool ok = report.passed(gate);
  out << (ok ? "verification passed" : "verification FAILED") << " under "
      << to_string(gate) << '\n';
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- twistor

struct TwistorOpts {
  std::string family = "xi", xi, F = "0,0,0", branch = "+", e,
              convention = "HermitianLeft";
  double omega = 0.0;
  GridOpts grid;
};

// Unit vector orthogonal to E, deterministic.
Vec3 default_e(const Vec3& E) {
  if (length(E) == 0.0) return {1, 0, 0};
  const Vec3 n = E / length(E);
  const int k = std::abs(n.x) <= std::abs(n.y) && std::abs(n.x) <= std::abs(n.z)
                    ? 0
                    : (std::abs(n.y) <= std::abs(n.z) ? 1 : 2);
  Vec3 axis{};
  axis[k] = 1.0;
  const Vec3 c = cross(n, axis);
  return c / length(c);
}

int run_twistor(const TwistorOpts& o, std::ostream& out) {
  const StructuralCoefficient F{parse_cvec(o.F)};
  const Sign branch = parse_sign(o.branch);
  ConventionFlags flags;
  flags.xi = parse_xi_convention(o.convention);
  auto need_xi = [&] {
    if (o.xi.empty()) throw Error(Errc::BadParams, "--xi is required for this family");
    return parse_vec(o.xi);
  };
  const Vec3 e = o.e.empty() ? default_e(F.harmonic_E()) : parse_vec(o.e);

  PlaneWaveField psi;
  bool harmonic = false;
  if (o.family == "xi") {
    psi = xi_twistor(need_xi(), F, branch);
  } else if (o.family == "evanescent") {
    psi = evanescent_twistor(need_xi(), F, branch);
  } else if (o.family == "h") {
    psi = h_twistor(F, branch);
  } else if (o.family == "omega") {
    psi = omega_twistor(o.omega, F, e, branch);
    harmonic = true;
  } else if (o.family == "static") {
    psi = static_twistor(F, e);
    harmonic = true;
  } else {
    throw Error(Errc::BadParams, "unknown family '" + o.family + "'");
  }

  out << "family " << o.family << '\n';
  out << "sigma " << format_complex(psi.sigma) << '\n';
  out << "kappa " << format_cvec(psi.kappa) << '\n';
  out << "amp " << format_bq(psi.amp) << '\n';
  out << "norm " << fmt_real(norm(psi.amp)) << '\n';
  out << "pseudonorm " << format_complex(pseudonorm(psi.amp)) << '\n';
  out << "energy_momentum " << format_bq(energy_momentum(psi.amp, flags)) << " ("
      << to_string(flags.xi) << ")\n";

  const auto spec = make_grid(o.grid);
  if (!spec) return 0;
  const GridField g = sample_to_grid(psi, *spec);
  if (!harmonic && fits(*spec, true)) {
    out << "grid_residual "
        << fmt_real(grid_apply_DF(g, F, Sign::Plus).max_interior_norm() / grid_DF_term_scale(g, F))
        << '\n';
  } else if (harmonic && fits(*spec, false)) {
    const Sign s = o.family == "static" ? Sign::Plus : branch;
    out << "grid_residual "
        << fmt_real(grid_apply_harmonic(g, F, o.omega, s).max_interior_norm() /
                    grid_harmonic_term_scale(g, F, o.omega))
        << '\n';
  }
  Json gen{{"command", "twistor"}, {"family", o.family}, {"F", o.F},
           {"branch", o.branch},   {"sigma", format_complex(psi.sigma)},
           {"kappa", format_cvec(psi.kappa)}, {"amp", format_bq(psi.amp)}};
  if (!o.xi.empty()) gen["xi"] = o.xi;
  if (harmonic) {
    gen["omega"] = o.omega;
    gen["e"] = fmt_real(e.x) + "," + fmt_real(e.y) + "," + fmt_real(e.z);
  }
  emit(g, o.grid, gen, out);
  return 0;
}

// -------------------------------------------------------------- superpose

struct SuperposeOpts {
  std::string surface = "cap", F = "0,0,0", density = "gaussian", center, nodes = "32,64",
              branch = "+", potential = "twistor";
  double omega = 0.0, width = 1.0, r_trunc = 0.0;
  GridOpts grid;
};

int run_superpose(const SuperposeOpts& o, std::ostream& out) {
  const StructuralCoefficient F{parse_cvec(o.F)};
  const SurfaceKind kind = parse_surface_kind(o.surface);
  const Sign branch = parse_sign(o.branch);
  const auto n = parse_reals(o.nodes);
  if (n.size() != 2 || n[0] < 1 || n[1] < 1) {
    throw Error(Errc::BadParams, "--nodes needs n_radial,n_angular");
  }
  Potential potential;
  if (o.potential == "twistor") {
    potential = Potential::Twistor;
  } else if (o.potential == "scalar") {
    potential = Potential::Scalar;
  } else {
    throw Error(Errc::BadParams, "--potential must be twistor or scalar");
  }
  SpectralDensity density;
  const Vec3 c = !o.center.empty() ? parse_vec(o.center)
                 : kind == SurfaceKind::Cap ? F.wave_E()
                                            : F.harmonic_H();
  if (o.density == "gaussian") {
    if (!(o.width > 0.0)) throw Error(Errc::BadParams, "--width must be positive");
    const double w2 = 2.0 * o.width * o.width;
    density = [c, w2](const Vec3& xi) { return Complex{std::exp(-dot(xi - c, xi - c) / w2)}; };
  } else if (o.density == "uniform") {
    density = [](const Vec3&) { return Complex{1.0}; };
  } else {
    throw Error(Errc::BadParams, "--density must be gaussian or uniform");
  }

  const SurfaceGrid sg{static_cast<std::size_t>(n[0]), static_cast<std::size_t>(n[1]),
                       o.r_trunc};
  const auto sample = sample_spectral_surface(kind, F, o.omega, sg);
  double surf = 0.0;
  for (std::size_t i = 0; i < sample.nodes.size(); ++i)
    surf = std::max(surf, surface_residual(sample, i));
  const PlaneWaveSum sum = superpose_terms(sample, density, branch, potential);
  out << "surface " << to_string(kind) << '\n';
  out << "nodes " << sample.nodes.size() << '\n';
  out << "max_surface_residual " << fmt_real(surf) << '\n';

  const auto spec = make_grid(o.grid);
  if (!spec) return 0;
  const GridField g = sample_to_grid(sum, *spec);
  if (potential == Potential::Twistor) {
    if (kind == SurfaceKind::Cap && fits(*spec, true)) {
      out << "grid_residual "
          << fmt_real(grid_apply_DF(g, F, Sign::Plus).max_interior_norm() /
                      grid_DF_term_scale(g, F))
          << '\n';
    } else if (kind != SurfaceKind::Cap && fits(*spec, false)) {
      out << "grid_residual "
          << fmt_real(grid_apply_harmonic(g, F, o.omega, branch).max_interior_norm() /
                      grid_harmonic_term_scale(g, F, o.omega))
          << '\n';
    }
  }
  Json gen{{"command", "superpose"}, {"surface", o.surface}, {"F", o.F},
           {"omega", o.omega},       {"density", o.density}, {"width", o.width},
           {"nodes", o.nodes},       {"branch", o.branch},   {"potential", o.potential}};
  if (!o.center.empty()) gen["center"] = o.center;
  emit(g, o.grid, gen, out);
  return 0;
}

// ------------------------------------------------------------------ solve

struct SolveOpts {
  std::string method, F = "0,0,0", a, source = "gaussian", center = "0,0,0", amp = "1",
              window = "0,1", x = "0,0,0", sphere = "32,64", sigma, kappa, kernel = "corrected";
  double width = 0.5, tau = 1.0, omega = 1.0;
  std::size_t radial = 64;
  GridOpts grid;
};

double bump(double s) { return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; }

int run_solve(const SolveOpts& o, std::ostream& out) {
  const StructuralCoefficient F{parse_cvec(o.F)};
  const auto sph = parse_reals(o.sphere);
  if (sph.size() != 2 || sph[0] < 1 || sph[1] < 1) {
    throw Error(Errc::BadParams, "--sphere needs n_polar,n_azimuth");
  }
  const SphereRule sphere{static_cast<std::size_t>(sph[0]), static_cast<std::size_t>(sph[1])};

  if (o.method == "planewave") {
    if (o.sigma.empty() || o.kappa.empty()) {
      throw Error(Errc::BadParams, "planewave needs --sigma and --kappa");
    }
    const PlaneWaveField G{parse_bq(o.amp), parse_complex(o.sigma), parse_cvec(o.kappa)};
    const PlaneWaveField B = pw_particular_solution(G, F);
    out << "amp " << format_bq(B.amp) << '\n';
    out << "check " << fmt_real(norm(pw_apply_DF(B, F, Sign::Plus).amp - G.amp)) << '\n';
    const auto spec = make_grid(o.grid);
    if (!spec) return 0;
    emit(sample_to_grid(B, *spec), o.grid,
         Json{{"command", "solve"}, {"method", o.method}, {"F", o.F}, {"amp", format_bq(B.amp)},
              {"sigma", o.sigma}, {"kappa", o.kappa}},
         out);
    return 0;
  }

  if (!(o.width > 0.0)) throw Error(Errc::BadParams, "--width must be positive");
  const Complex amp = parse_complex(o.amp);
  const Vec3 c = parse_vec(o.center);
  const double w2 = 2.0 * o.width * o.width;
  SpatialSource g;
  if (o.source == "gaussian") {
    g.g = [=](const Vec3& y) { return amp * std::exp(-dot(y - c, y - c) / w2); };
    g.support_radius = 8.0 * o.width;
    g.center = c;
  } else if (o.source == "constant") {
    g.g = [=](const Vec3&) { return amp; };
  } else {
    throw Error(Errc::BadParams, "--source must be gaussian or constant");
  }

  Json gen{{"command", "solve"}, {"method", o.method}, {"F", o.F},           {"source", o.source},
           {"amp", o.amp},       {"center", o.center}, {"width", o.width}};
  std::function<Biquaternion(double, const Vec3&)> value;
  bool scalar = true;
  if (o.method == "kirchhoff" || o.method == "retarded") {
    GreenConfig cfg;
    cfg.F = F;
    cfg.sphere = sphere;
    cfg.n_radial = o.radial;
    if (!o.a.empty()) cfg.a = parse_complex(o.a);
    gen["a"] = format_complex(cfg.a);
    if (o.method == "kirchhoff") {
      value = [g, cfg](double t, const Vec3& x) { return Biquaternion{kirchhoff_solve(g, cfg, t, x)}; };
    } else {
      const auto win = parse_array<2>(o.window, "--window");
      if (!(win[1] > win[0])) throw Error(Errc::BadParams, "--window needs t0 < t1");
      const double mid = 0.5 * (win[0] + win[1]), half = 0.5 * (win[1] - win[0]);
      ScalarSource q{[g, mid, half](double t, const Vec3& y) { return bump((t - mid) / half) * g.g(y); },
                     g.support_radius, g.center, std::make_pair(win[0], win[1])};
      gen["window"] = o.window;
      value = [q, cfg](double t, const Vec3& x) { return Biquaternion{retarded_solve(q, cfg, t, x)}; };
    }
  } else if (o.method == "helmholtz") {
    HarmonicKernelParams p;
    p.omega = o.omega;
    p.F = F;
    if (!o.a.empty()) p.a = parse_complex(o.a);
    HelmholtzConfig cfg;
    cfg.n_radial = o.radial;
    cfg.sphere = sphere;
    if (o.kernel == "printed") {
      cfg.kernel_sign = KernelSign::AsPrinted;
    } else if (o.kernel != "corrected") {
      throw Error(Errc::BadParams, "--kernel must be corrected or printed");
    }
    gen["omega"] = o.omega;
    gen["a"] = format_complex(p.a);
    gen["kernel"] = o.kernel;
    value = [g, p, cfg](double, const Vec3& x) { return helmholtz_solve(g, p, x, cfg); };
    scalar = false;
  } else {
    throw Error(Errc::BadParams, "unknown method '" + o.method + "'");
  }

  const auto spec = make_grid(o.grid, o.tau);
  if (!spec) {
    const Biquaternion v = value(o.tau, parse_vec(o.x));
    if (scalar) {
      out << "u " << format_complex(v.s) << '\n';
    } else {
      out << "B " << format_bq(v) << '\n';
    }
    return 0;
  }
  emit(sample_to_grid(value, *spec), o.grid, gen, out);
  return 0;
}

// ----------------------------------------------------------------- energy

struct EnergyOpts {
  std::string in, out, convention = "HermitianLeft";
};

int run_energy(const EnergyOpts& o, std::ostream& out) {
  ConventionFlags flags;
  flags.xi = parse_xi_convention(o.convention);
  FieldDump d = read_field(o.in);
  double w_max = 0.0;
  for (auto& b : d.field.data()) {
    b = energy_momentum(b, flags);
    w_max = std::max(w_max, std::abs(b.s));
  }
  nlohmann::json gen{{"command", "energy"}, {"convention", o.convention}, {"source", d.generator}};
  d.generator = std::move(gen);
  write_field(d, o.out);
  out << "nodes " << d.field.data().size() << '\n';
  out << "max_energy_density " << fmt_real(w_max) << '\n';
  out << "wrote " << o.out << '\n';
  return 0;
}

// ------------------------------------------------------------------- jobs

std::vector<std::string> job_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open job file '" + path + "'");
  nlohmann::json job;
  try {
    job = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadParams, std::string("malformed job file: ") + e.what());
  }
  if (!job.is_object() || !job.contains("command") || !job["command"].is_string()) {
    throw Error(Errc::BadParams, "job file needs a string \"command\"");
  }
  std::vector<std::string> args{job["command"].get<std::string>()};
  auto scalar = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (const auto& [key, v] : job.items()) {
    if (key == "command") continue;
    const std::string flag = "--" + key;
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back(flag);
    } else if (v.is_array()) {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ",") + scalar(x);
      args.push_back(flag + "=" + joined);
    } else {
      args.push_back(flag + "=" + scalar(v));
    }
  }
  return args;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw Error(Errc::BadParams, "empty complex literal");
  if (t.back() != 'i') return parse_real(t);
  t.remove_suffix(1);
  std::size_t cut = std::string_view::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  const std::string_view re = cut == std::string_view::npos ? std::string_view{} : t.substr(0, cut);
  std::string_view im = cut == std::string_view::npos ? t : t.substr(cut);
  double imag = 0.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_real(im);
  }
  return {re.empty() ? 0.0 : parse_real(re), imag};
}

Vec3 parse_vec(std::string_view text) {
  const auto a = parse_array<3>(text, "vector");
  return {a[0], a[1], a[2]};
}

CVec3 parse_cvec(std::string_view text) {
  const auto p = split(text);
  if (p.size() != 3) throw Error(Errc::BadParams, "complex vector needs 3 components");
  return {parse_complex(p[0]), parse_complex(p[1]), parse_complex(p[2])};
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return fmt_real(c.real() == 0.0 ? 0.0 : c.real());
  std::string s = fmt_real(c.real() == 0.0 ? 0.0 : c.real());
  if (!std::signbit(c.imag())) s += '+';
  return s + fmt_real(c.imag()) + "i";
}

int cli_execute(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquaternion wave fields: twistor synthesis, solvers and claim checks", "biwave"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(0, 1);
  std::string job;
  app.add_option("--job", job, "JSON job file: {\"command\": ..., <flag>: <value>, ...}");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run the claim registry and print a report");
  verify->add_option("--json", vo.json, "write the JSON report here ('-' for stdout)");
  verify->add_option("--seed", vo.seed, "base seed")->capture_default_str();
  verify->add_option("--conventions", vo.conventions, "comma-separated Xi conventions")
      ->capture_default_str();
  verify->add_option("--claim", vo.claims, "run only these claim ids (repeatable)");

  TwistorOpts to;
  auto* twistor = app.add_subcommand("twistor", "build one elementary twistor");
  twistor->add_option("--family", to.family, "xi | evanescent | h | omega | static")
      ->capture_default_str();
  twistor->add_option("--xi", to.xi, "spectral point x,y,z (xi and evanescent)");
  twistor->add_option("--F", to.F, "structural coefficient, complex components")
      ->capture_default_str();
  twistor->add_option("--branch", to.branch, "+ or -")->capture_default_str();
  twistor->add_option("--omega", to.omega, "frequency (omega family)")->capture_default_str();
  twistor->add_option("--e", to.e, "unit direction orthogonal to Re F (omega, static)");
  twistor->add_option("--convention", to.convention, "Xi convention for the report")
      ->capture_default_str();
  add_grid(twistor, to.grid);

  SuperposeOpts so;
  auto* superpose = app.add_subcommand("superpose", "quadrature superposition over a spectral surface");
  superpose->add_option("--surface", so.surface,
                        "cap | omega-circle | omega-sphere | static-circle | static-point")
      ->capture_default_str();
  superpose->add_option("--F", so.F, "structural coefficient")->capture_default_str();
  superpose->add_option("--omega", so.omega, "frequency")->capture_default_str();
  superpose->add_option("--density", so.density, "gaussian | uniform")->capture_default_str();
  superpose->add_option("--center", so.center, "Gaussian center (default E for cap, H otherwise)");
  superpose->add_option("--width", so.width, "Gaussian width")->capture_default_str();
  superpose->add_option("--nodes", so.nodes, "n_radial,n_angular")->capture_default_str();
  superpose->add_option("--r-trunc", so.r_trunc, "cap truncation radius, <= 0 for automatic")
      ->capture_default_str();
  superpose->add_option("--branch", so.branch, "+ or -")->capture_default_str();
  superpose->add_option("--potential", so.potential, "twistor | scalar")->capture_default_str();
  add_grid(superpose, so.grid);

  SolveOpts vo2;
  auto* solve = app.add_subcommand("solve", "scalar and biquaternion solvers");
  solve->add_option("method", vo2.method, "kirchhoff | retarded | helmholtz | planewave")
      ->required();
  solve->add_option("--F", vo2.F, "structural coefficient")->capture_default_str();
  solve->add_option("--a", vo2.a, "advanced-branch weight (default 0; helmholtz 1)");
  solve->add_option("--source", vo2.source, "gaussian | constant")->capture_default_str();
  solve->add_option("--amp", vo2.amp,
                    "source amplitude; planewave: biquaternion s,v1,v2,v3")
      ->capture_default_str();
  solve->add_option("--center", vo2.center, "source center")->capture_default_str();
  solve->add_option("--width", vo2.width, "Gaussian width")->capture_default_str();
  solve->add_option("--window", vo2.window, "retarded: source time window t0,t1")
      ->capture_default_str();
  solve->add_option("--tau", vo2.tau, "evaluation time (grid default start)")
      ->capture_default_str();
  solve->add_option("--x", vo2.x, "evaluation point")->capture_default_str();
  solve->add_option("--omega", vo2.omega, "helmholtz frequency")->capture_default_str();
  solve->add_option("--kernel", vo2.kernel, "helmholtz kernel sign: corrected | printed")
      ->capture_default_str();
  solve->add_option("--sphere", vo2.sphere, "sphere rule n_polar,n_azimuth")
      ->capture_default_str();
  solve->add_option("--radial", vo2.radial, "radial nodes")->capture_default_str();
  solve->add_option("--sigma", vo2.sigma, "planewave source sigma");
  solve->add_option("--kappa", vo2.kappa, "planewave source kappa");
  add_grid(solve, vo2.grid);

  EnergyOpts eo;
  auto* energy = app.add_subcommand("energy", "energy-momentum field of a dump");
  energy->add_option("--in", eo.in, "input dump")->required();
  energy->add_option("--out", eo.out, "output dump")->required();
  energy->add_option("--convention", eo.convention, "Xi convention")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!job.empty()) {
      if (!app.get_subcommands().empty()) {
        err << "error: --job cannot be combined with a subcommand\n";
        return 2;
      }
      return cli_execute(job_args(job), out, err);
    }
    if (verify->parsed()) return run_verify(vo, out);
    if (twistor->parsed()) return run_twistor(to, out);
    if (superpose->parsed()) return run_superpose(so, out);
    if (solve->parsed()) return run_solve(vo2, out);
    if (energy->parsed()) return run_energy(eo, out);
    out << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace biwave
