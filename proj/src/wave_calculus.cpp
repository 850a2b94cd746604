#include "biwave/wave_calculus.hpp"

#include <algorithm>
#include <string>

#include "biwave/error.hpp"

namespace biwave {

namespace {

const Biquaternion kUnit[3] = {Biquaternion::vector(Vec3{1, 0, 0}),
                               Biquaternion::vector(Vec3{0, 1, 0}),
                               Biquaternion::vector(Vec3{0, 0, 1})};

using Index4 = std::array<std::size_t, 4>;

Biquaternion node(const GridField& g, const Index4& i) {
  return g.at(i[0], i[1], i[2], i[3]);
}

// Central first difference along `axis` at node i.
Biquaternion central(const GridField& g, int axis, Index4 i) {
  Index4 lo = i, hi = i;
  --lo[axis];
  ++hi[axis];
  const double inv = 1.0 / (2.0 * g.spec().spacing[axis]);
  return (node(g, hi) - node(g, lo)) * Complex{inv};
}

// sum_k e_k * d_k B, the quaternionic gradient action.
Biquaternion nabla(const GridField& g, const Index4& i) {
  Biquaternion acc;
  for (int k = 0; k < 3; ++k) acc += mul(kUnit[k], central(g, k + 1, i));
  return acc;
}

void require_room(const GridField& g, const Index4& out_margin, bool time_axis,
                  const char* op) {
  for (int a = time_axis ? 0 : 1; a < 4; ++a) {
    if (g.dims()[a] < 2 * out_margin[a] + 1) {
      throw Error(Errc::GridTooSmall,
                  std::string(op) + ": axis " + std::to_string(a) + " has " +
                      std::to_string(g.dims()[a]) + " nodes, need " +
                      std::to_string(2 * out_margin[a] + 1));
    }
  }
}

GridField blank_like(const GridField& g, const Index4& margin) {
  GridField out(g.spec());
  out.set_margin(margin);
  return out;
}

Index4 grown(const GridField& g, std::size_t by, bool time_axis) {
  Index4 m = g.margin();
  for (int a = time_axis ? 0 : 1; a < 4; ++a) m[a] += by;
  return m;
}

}  // namespace

Biquaternion PlaneWaveField::operator()(double tau, const Vec3& x) const {
  return pw_eval(*this, tau, x);
}

Biquaternion pw_eval(const PlaneWaveField& f, double tau, const Vec3& x) {
  const Complex phase = f.sigma * tau - Complex{0, 1} * dot(f.kappa, x);
  return f.amp * std::exp(phase);
}

PlaneWaveField pw_apply_bigrad(const PlaneWaveField& f, Sign sign) {
  const double s = sign_value(sign);
  PlaneWaveField out = f;
  out.amp = f.sigma * f.amp + Complex{s} * mul(Biquaternion::vector(f.kappa), f.amp);
  return out;
}

PlaneWaveField pw_apply_DF(const PlaneWaveField& f, const StructuralCoefficient& F,
                           Sign sign) {
  const double s = sign_value(sign);
  PlaneWaveField out = f;
  out.amp = f.sigma * f.amp +
            Complex{s} * mul(Biquaternion::vector(f.kappa + F.F), f.amp);
  return out;
}

Complex pw_scalar_multiplier(const PlaneWaveField& f, const StructuralCoefficient& F) {
  const CVec3 w = f.kappa + F.F;
  return f.sigma * f.sigma + dot(w, w);
}

PlaneWaveField pw_apply_harmonic(const PlaneWaveField& f, const StructuralCoefficient& F,
                                 double omega, Sign sign, HarmonicOp op) {
  if (f.sigma != Complex{}) {
    throw Error(Errc::NotStatic, "harmonic operators need a time-independent plane wave");
  }
  const double s = sign_value(sign);
  const CVec3 grad = Complex{0, -1} * f.kappa;
  const CVec3 w = op == HarmonicOp::Forward ? s * grad + F.F : -(s * grad) - F.F;
  PlaneWaveField out = f;
  out.amp = Complex{omega} * f.amp + mul(Biquaternion::vector(w), f.amp);
  return out;
}

Complex pw_harmonic_multiplier(const PlaneWaveField& f, const StructuralCoefficient& F,
                               double omega, Sign sign) {
  const CVec3 w = sign_value(sign) * (Complex{0, -1} * f.kappa) + F.F;
  return omega * omega + dot(w, w);
}

void GridSpec::validate() const {
  for (int a = 0; a < 4; ++a) {
    if (dims[a] == 0) throw Error(Errc::BadSpec, "grid extent must be >= 1");
    if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a])) {
      throw Error(Errc::BadSpec, "grid spacing must be positive and finite");
    }
    if (!std::isfinite(origin[a])) throw Error(Errc::BadSpec, "grid origin must be finite");
  }
}

GridField::GridField(const GridSpec& spec) : spec_(spec), data_(spec.size()) {
  spec_.validate();
}

bool GridField::interior(std::size_t it, std::size_t ix, std::size_t iy,
                         std::size_t iz) const {
  const Index4 i{it, ix, iy, iz};
  for (int a = 0; a < 4; ++a) {
    if (i[a] < margin_[a] || i[a] + margin_[a] >= spec_.dims[a]) return false;
  }
  return true;
}

void GridField::for_each_interior(
    const std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)>& fn)
    const {
  const auto& d = spec_.dims;
  const auto& m = margin_;
  for (std::size_t it = m[0]; it + m[0] < d[0]; ++it)
    for (std::size_t ix = m[1]; ix + m[1] < d[1]; ++ix)
      for (std::size_t iy = m[2]; iy + m[2] < d[2]; ++iy)
        for (std::size_t iz = m[3]; iz + m[3] < d[3]; ++iz) fn(it, ix, iy, iz);
}

double GridField::max_interior_norm() const {
  double best = 0.0;
  for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    best = std::max(best, norm(at(it, ix, iy, iz)));
  });
  return best;
}

GridField grid_apply_DF(const GridField& g, const StructuralCoefficient& F, Sign sign) {
  const Index4 m = grown(g, 1, true);
  require_room(g, m, true, "grid_apply_DF");
  GridField out = blank_like(g, m);
  const Complex si{0.0, sign_value(sign)};
  const Biquaternion Fq = F.as_biquaternion();
  out.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const Index4 i{it, ix, iy, iz};
    out.at(it, ix, iy, iz) = central(g, 0, i) + si * nabla(g, i) +
                             Complex{sign_value(sign)} * mul(Fq, node(g, i));
  });
  return out;
}

GridField grid_apply_scalar_wave_op(const GridField& g, const StructuralCoefficient& F) {
  const Index4 m = grown(g, 2, true);
  require_room(g, m, true, "grid_apply_scalar_wave_op");
  GridField out = blank_like(g, m);
  const Complex FF = dot(F.F, F.F);
  out.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const Index4 i{it, ix, iy, iz};
    auto second = [&](int a) {
      Index4 lo = i, hi = i;
      lo[a] -= 2;
      hi[a] += 2;
      const double h = g.spec().spacing[a];
      return (node(g, hi) - Complex{2.0} * node(g, i) + node(g, lo)) *
             Complex{1.0 / (4.0 * h * h)};
    };
    Biquaternion acc = second(0);
    Biquaternion drift;
    for (int k = 0; k < 3; ++k) {
      acc -= second(k + 1);
      drift += F.F[k] * central(g, k + 1, i);
    }
    out.at(it, ix, iy, iz) = acc + FF * node(g, i) + Complex{0, 2} * drift;
  });
  return out;
}

GridField grid_apply_harmonic(const GridField& g, const StructuralCoefficient& F,
                              double omega, Sign sign, HarmonicOp op) {
  const Index4 m = grown(g, 1, false);
  require_room(g, m, false, "grid_apply_harmonic");
  GridField out = blank_like(g, m);
  const double s = (op == HarmonicOp::Forward ? 1.0 : -1.0) * sign_value(sign);
  const double f = op == HarmonicOp::Forward ? 1.0 : -1.0;
  const Biquaternion Fq = F.as_biquaternion();
  out.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const Index4 i{it, ix, iy, iz};
    const Biquaternion b = node(g, i);
    out.at(it, ix, iy, iz) =
        Complex{omega} * b + Complex{s} * nabla(g, i) + Complex{f} * mul(Fq, b);
  });
  return out;
}

GridField grid_apply_harmonic_scalar_op(const GridField& g, const StructuralCoefficient& F,
                                        double omega, Sign sign) {
  const Index4 m = grown(g, 2, false);
  require_room(g, m, false, "grid_apply_harmonic_scalar_op");
  GridField out = blank_like(g, m);
  const Complex shift = omega * omega + dot(F.F, F.F);
  const double s = sign_value(sign);
  out.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const Index4 i{it, ix, iy, iz};
    Biquaternion lap, drift;
    for (int k = 1; k < 4; ++k) {
      Index4 lo = i, hi = i;
      lo[k] -= 2;
      hi[k] += 2;
      const double h = g.spec().spacing[k];
      lap += (node(g, hi) - Complex{2.0} * node(g, i) + node(g, lo)) *
             Complex{1.0 / (4.0 * h * h)};
      drift += F.F[k - 1] * central(g, k, i);
    }
    out.at(it, ix, iy, iz) = lap + Complex{2.0 * s} * drift + shift * node(g, i);
  });
  return out;
}

double grid_DF_term_scale(const GridField& g, const StructuralCoefficient& F) {
  GridField probe = blank_like(g, grown(g, 1, true));
  require_room(g, probe.margin(), true, "grid_DF_term_scale");
  const Biquaternion Fq = F.as_biquaternion();
  double best = 0.0;
  probe.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const Index4 i{it, ix, iy, iz};
    double t = norm(mul(Fq, node(g, i)));
    for (int a = 0; a < 4; ++a) t += norm(central(g, a, i));
    best = std::max(best, t);
  });
  return best;
}

double grid_harmonic_term_scale(const GridField& g, const StructuralCoefficient& F,
                                double omega) {
  GridField probe = blank_like(g, grown(g, 1, false));
  require_room(g, probe.margin(), false, "grid_harmonic_term_scale");
  const Biquaternion Fq = F.as_biquaternion();
  double best = 0.0;
  probe.for_each_interior([&](std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    const Index4 i{it, ix, iy, iz};
    const Biquaternion b = node(g, i);
    double t = std::abs(omega) * norm(b) + norm(mul(Fq, b));
    for (int a = 1; a < 4; ++a) t += norm(central(g, a, i));
    best = std::max(best, t);
  });
  return best;
}

}  // namespace biwave
