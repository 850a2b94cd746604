#pragma once

// Seeded generators of admissible parameters for every twistor family.

#include <cstdint>
#include <random>

#include "biwave/biquaternion.hpp"

namespace biwave::draws {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
Complex complex(Rng& rng, double scale = 1.0);
Vec3 vec(Rng& rng, double scale = 1.0);
Vec3 unit(Rng& rng);
/// Unit vector orthogonal to n (any unit vector when n = 0).
Vec3 unit_orthogonal(Rng& rng, const Vec3& n);
CVec3 cvec(Rng& rng, double scale = 1.0);
Biquaternion biquaternion(Rng& rng, double scale = 1.0);

/// Nonstationary-family draw: F = -E - iH with |E| <= 2 and 0.2 <= |H| <= 2.
struct WaveDraw {
  StructuralCoefficient F;
  Vec3 E, H;
  Vec3 xi;
};

/// xi with (xi - E) _|_ H and |xi - E| in [1.05 |H| + 0.05, |H| + 3].
WaveDraw propagating(Rng& rng);
/// xi with (xi - E) _|_ H and |xi - E| in [0.1 |H|, |H|].
WaveDraw evanescent(Rng& rng);

/// Harmonic-family draw: F = E + iH, omega in [0.1, 3], e unit with e _|_ E.
struct HarmonicDraw {
  StructuralCoefficient F;
  Vec3 E, H;
  double omega = 0.0;
  Vec3 e;
};

HarmonicDraw harmonic(Rng& rng);
/// As harmonic() but with 0.2 <= |E| <= 2 and omega = 0.
HarmonicDraw static_draw(Rng& rng);

}  // namespace biwave::draws
