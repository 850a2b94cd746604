#include "biwave/draws.hpp"

#include <cmath>

namespace biwave::draws {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Complex complex(Rng& rng, double scale) {
  const double re = uniform(rng, -scale, scale);
  const double im = uniform(rng, -scale, scale);
  return {re, im};
}

Vec3 vec(Rng& rng, double scale) {
  const double x = uniform(rng, -scale, scale);
  const double y = uniform(rng, -scale, scale);
  const double z = uniform(rng, -scale, scale);
  return {x, y, z};
}

Vec3 unit(Rng& rng) {
  for (;;) {
    const Vec3 v = vec(rng, 1.0);
    const double len = length(v);
    if (len > 0.1 && len <= 1.0) return v / len;
  }
}

Vec3 unit_orthogonal(Rng& rng, const Vec3& n) {
  const double len = length(n);
  if (len == 0.0) return unit(rng);
  const Vec3 e = n / len;
  for (;;) {
    const Vec3 v = unit(rng);
    const Vec3 p = v - dot(v, e) * e;
    const double lp = length(p);
    if (lp > 0.1) {
      Vec3 u = p / lp;
      // One more projection pass brings (u, e) down to rounding level.
      u = u - dot(u, e) * e;
      return u / length(u);
    }
  }
}

CVec3 cvec(Rng& rng, double scale) {
  const Complex x = complex(rng, scale);
  const Complex y = complex(rng, scale);
  const Complex z = complex(rng, scale);
  return {x, y, z};
}

Biquaternion biquaternion(Rng& rng, double scale) {
  const Complex s = complex(rng, scale);
  return {s, cvec(rng, scale)};
}

namespace {

WaveDraw wave_base(Rng& rng) {
  WaveDraw d;
  d.E = uniform(rng, 0.0, 2.0) * unit(rng);
  d.H = uniform(rng, 0.2, 2.0) * unit(rng);
  d.F = StructuralCoefficient::from_wave(d.E, d.H);
  return d;
}

}  // namespace

WaveDraw propagating(Rng& rng) {
  WaveDraw d = wave_base(rng);
  const double h = length(d.H);
  const double L = uniform(rng, 1.05 * h + 0.05, h + 3.0);
  d.xi = d.E + L * unit_orthogonal(rng, d.H);
  return d;
}

WaveDraw evanescent(Rng& rng) {
  WaveDraw d = wave_base(rng);
  const double h = length(d.H);
  const double L = uniform(rng, 0.1 * h, h);
  d.xi = d.E + L * unit_orthogonal(rng, d.H);
  return d;
}

HarmonicDraw harmonic(Rng& rng) {
  HarmonicDraw d;
  d.E = uniform(rng, 0.0, 2.0) * unit(rng);
  d.H = uniform(rng, 0.0, 2.0) * unit(rng);
  d.F = StructuralCoefficient::from_harmonic(d.E, d.H);
  d.omega = uniform(rng, 0.1, 3.0);
  d.e = unit_orthogonal(rng, d.E);
  return d;
}

HarmonicDraw static_draw(Rng& rng) {
  HarmonicDraw d;
  d.E = uniform(rng, 0.2, 2.0) * unit(rng);
  d.H = uniform(rng, 0.0, 2.0) * unit(rng);
  d.F = StructuralCoefficient::from_harmonic(d.E, d.H);
  d.omega = 0.0;
  d.e = unit_orthogonal(rng, d.E);
  return d;
}

}  // namespace biwave::draws
