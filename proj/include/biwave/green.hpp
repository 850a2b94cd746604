#pragma once

// Fundamental solutions of the scalar operators and the solvers built on
// them. The time-domain kernel is a single layer on the light cone; it is
// only ever applied through spherical means and retarded-potential
// quadratures, never sampled pointwise.

#include <cstddef>
#include <functional>
#include <limits>

#include "biwave/biquaternion.hpp"
#include "biwave/quadrature.hpp"
#include "biwave/wave_calculus.hpp"

namespace biwave {

struct GreenConfig {
  /// Weight of the advanced branch; 0 selects the purely retarded kernel.
  Complex a{0.0};
  SphereRule sphere{};
  /// Composite-midpoint nodes along the radial direction.
  std::size_t n_radial = 64;
  StructuralCoefficient F{};
};

/// Time-independent scalar data g(x). An infinite support radius is allowed
/// for spherical means but rejected by volume integrals.
struct SpatialSource {
  std::function<Complex(const Vec3&)> g;
  double support_radius = std::numeric_limits<double>::infinity();
  Vec3 center{};
};

/// Solution at time tau > 0 of box u + (F,F)u + 2i(F, grad u) = delta(tau) g(x):
/// (1 - a)/(4 pi tau) * surface integral over |z| = tau of e^{i(F,z)} g(x - z).
/// Throws Errc::NonpositiveTau.
Complex kirchhoff_solve(const SpatialSource& g, const GreenConfig& cfg, double tau,
                        const Vec3& x);

/// Retarded (and, with a != 0, advanced) potential of a space-time source:
/// integral of e^{i(F,z)} q(tau -+ |z|, x - z) / (4 pi |z|) over z, taken in
/// spherical coordinates about x. Throws Errc::UnboundedSupport unless the
/// source declares a finite support radius.
Complex retarded_solve(const ScalarSource& q, const GreenConfig& cfg, double tau,
                       const Vec3& x);

struct HarmonicKernelParams {
  double omega = 0.0;
  Complex a{1.0};
  StructuralCoefficient F{};
};

enum class KernelSign {
  Corrected,  ///< -e^{-(F,x)} (...) / (4 pi |x|), solves L psi = +delta
  AsPrinted,  ///< +e^{-(F,x)} (...) / (4 pi |x|)
};

/// Fundamental solution of laplacian + 2(F, grad) + omega^2 + (F, F):
/// -e^{-(F,x)} (a e^{i omega |x|} + (1 - a) e^{-i omega |x|}) / (4 pi |x|).
/// Throws Errc::OriginEvaluation at x = 0.
Complex eval_psi_omega(const Vec3& x, const HarmonicKernelParams& p,
                       KernelSign sign = KernelSign::Corrected);

using SpatialKernel = std::function<Complex(const Vec3&)>;

/// integral of kernel(z) G(x - z) dz in spherical coordinates about x. The
/// kernel may carry a 1/|z| singularity (the r^2 Jacobian removes it).
Complex volume_potential(const SpatialKernel& kernel, const SpatialSource& G, const Vec3& x,
                         std::size_t n_radial, const SphereRule& sphere);

struct HelmholtzConfig {
  std::size_t n_radial = 64;
  SphereRule sphere{32, 64};
  /// Step of the central differences that apply omega - grad - F to the
  /// volume potential.
  double fd_step = 1e-3;
  KernelSign kernel_sign = KernelSign::Corrected;
};

/// Scalar volume potential psi_omega * G at x.
Complex helmholtz_potential(const SpatialSource& G, const HarmonicKernelParams& p,
                            const Vec3& x, const HelmholtzConfig& cfg = {});

/// Particular solution B = (omega - grad - F)(psi_omega * G) of
/// (omega + grad + F) B = G, with the gradient taken by central differences.
Biquaternion helmholtz_solve(const SpatialSource& G, const HarmonicKernelParams& p,
                             const Vec3& x, const HelmholtzConfig& cfg = {});

/// Exact particular solution of D_F^+ B = G for an off-shell plane-wave
/// source: amp_B = (D_F^- G).amp / m with m the scalar multiplier.
/// Throws Errc::OnShellSource when m = 0.
PlaneWaveField pw_particular_solution(const PlaneWaveField& G, const StructuralCoefficient& F);

}  // namespace biwave
