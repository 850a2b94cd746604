#pragma once

// Elementary twistors (plane-wave solutions of the homogeneous biwave
// equation), spectral-surface quadratures and their superpositions.
//
// Constructors take the structural coefficient F only. The nonstationary
// families (xi, evanescent, H) decode it as F = -E - iH; the harmonic and
// static families decode it as F = E + iH.

#include <cstddef>
#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "biwave/biquaternion.hpp"
#include "biwave/wave_calculus.hpp"

namespace biwave {

/// Tolerance on the orthogonality preconditions, relative to the vector
/// lengths involved.
inline constexpr double kOrthogonalityTol = 1e-10;

/// Propagating xi-twistor; sigma = +-i sqrt(|xi-E|^2 - |H|^2), kappa = xi.
/// Errors: NotOnSurface, EvanescentRegime, DegenerateXi.
PlaneWaveField xi_twistor(const Vec3& xi, const StructuralCoefficient& F, Sign branch);

/// Time-growing/decaying twistor for 0 < |xi-E| <= |H|; sigma real.
/// Errors: NotOnSurface, PropagatingRegime, DegenerateXi.
PlaneWaveField evanescent_twistor(const Vec3& xi, const StructuralCoefficient& F,
                                  Sign branch);

/// Twistor at xi = E: amp (-+1 + i e_H)/sqrt2, sigma = -+|H|, kappa = E.
PlaneWaveField h_twistor(const StructuralCoefficient& F, Sign branch);

/// Harmonic omega-twistor. Plus: kappa = H + e r, annihilated by
/// omega + grad + F. Minus: kappa = -H + e r, annihilated by omega - grad + F.
/// r = sqrt(omega^2 + |E|^2); e must be a unit vector orthogonal to E.
PlaneWaveField omega_twistor(double omega, const StructuralCoefficient& F, const Vec3& e,
                             Sign branch);

/// Static twistor on the circle |xi - H| = |E|, (E, xi - H) = 0:
/// kappa = H + |E| e, amp = (-e_E + i e)/sqrt2; annihilated by grad + F.
PlaneWaveField static_twistor(const StructuralCoefficient& F, const Vec3& e);

struct TwistorKinematics {
  double phase_speed = 0.0;  ///< c = frequency / |xi|
  double wavelength = 0.0;   ///< 2 pi / |xi|
  double frequency = 0.0;    ///< sqrt(|xi-E|^2 - |H|^2)
  double period = 0.0;       ///< 2 pi / frequency
  double gamma = 0.0;        ///< angle between xi - E and H, in [0, pi]
};

/// Kinematic quantities of the propagating xi-twistor (same preconditions as
/// xi_twistor).
TwistorKinematics xi_kinematics(const Vec3& xi, const StructuralCoefficient& F);

enum class SurfaceKind {
  Cap,           ///< annulus (xi-E) _|_ H, |xi-E| >= |H|   (F = -E - iH)
  OmegaCircle,   ///< |xi-H| = sqrt(w^2+|E|^2), (E, xi-H) = 0   (F = E + iH, E != 0)
  OmegaSphere,   ///< |xi-H| = |w|   (F = iH)
  StaticCircle,  ///< |xi-H| = |E|, (E, xi-H) = 0   (w = 0)
  StaticPoint,   ///< xi = H   (w = 0, E = 0)
};

std::string_view to_string(SurfaceKind kind) noexcept;
SurfaceKind parse_surface_kind(std::string_view name);

/// Node counts. Cap: n_radial x n_angular tensor trapezoid over
/// [|H|, r_trunc] x [0, 2pi). Circles: n_angular arc nodes. Sphere:
/// n_radial Gauss-Legendre latitudes x n_angular longitudes.
struct SurfaceGrid {
  std::size_t n_radial = 32;
  std::size_t n_angular = 64;
  double r_trunc = 0.0;  ///< <= 0 selects 4 max(|H|, 1)
};

struct SpectralSurfaceSample {
  SurfaceKind kind = SurfaceKind::Cap;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  StructuralCoefficient F;
  double omega = 0.0;
  SurfaceGrid grid;
};

/// Errors: BadParams when (F, omega) do not define the requested surface.
SpectralSurfaceSample sample_spectral_surface(SurfaceKind kind,
                                              const StructuralCoefficient& F,
                                              double omega, const SurfaceGrid& grid);

/// Defining-equation residual of node i; zero on the surface.
double surface_residual(const SpectralSurfaceSample& sample, std::size_t i);

using SpectralDensity = std::function<Complex(const Vec3&)>;
using FieldEvaluator = std::function<Biquaternion(double, const Vec3&)>;

/// A finite sum of plane waves; exact operator calculus applies termwise.
struct PlaneWaveSum {
  std::vector<PlaneWaveField> terms;

  Biquaternion operator()(double tau, const Vec3& x) const;
};

enum class Potential {
  Twistor,  ///< superpose elementary twistors
  Scalar,   ///< superpose the generating scalar potentials
};

/// Quadrature superposition sum_j w_j phi(xi_j) Psi_{xi_j}. Cap nodes with
/// |xi-E| <= |H| use the evanescent family. The static point carries no
/// nonzero twistor and is only accepted with Potential::Scalar.
PlaneWaveSum superpose_terms(const SpectralSurfaceSample& sample,
                             const SpectralDensity& density, Sign branch,
                             Potential potential = Potential::Twistor);

FieldEvaluator superpose(const SpectralSurfaceSample& sample, const SpectralDensity& density,
                         Sign branch, Potential potential = Potential::Twistor);

struct PointSource {
  Biquaternion weight{1.0};
  double tau0 = 0.0;
  Vec3 x0{};
};
using PointSourceSet = std::vector<PointSource>;

/// Convolution with point masses: sum_k base(tau - tau_k, x - x_k) * w_k.
FieldEvaluator translate_superpose(FieldEvaluator base, PointSourceSet sources);

}  // namespace biwave
