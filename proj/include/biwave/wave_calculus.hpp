#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "biwave/biquaternion.hpp"

namespace biwave {

enum class Sign { Plus, Minus };

inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// amp * exp(sigma tau - i (kappa, x)). Complex kappa carries exponential
/// spatial damping in the same type.
struct PlaneWaveField {
  Biquaternion amp{};
  Complex sigma{};
  CVec3 kappa{};

  Biquaternion operator()(double tau, const Vec3& x) const;
};

Biquaternion pw_eval(const PlaneWaveField& f, double tau, const Vec3& x);

/// Mutual bigradient d/dtau +- i grad acting quaternionically; on a plane
/// wave it multiplies the amplitude by sigma +- kappa.
PlaneWaveField pw_apply_bigrad(const PlaneWaveField& f, Sign sign);

/// D_F^+ = bigrad^+ + F and D_F^- = bigrad^- - F.
PlaneWaveField pw_apply_DF(const PlaneWaveField& f, const StructuralCoefficient& F,
                           Sign sign);

/// Symbol of box + (F,F) + 2i(F, grad): sigma^2 + (kappa + F, kappa + F).
Complex pw_scalar_multiplier(const PlaneWaveField& f, const StructuralCoefficient& F);

/// Which member of the harmonic operator pair to apply.
enum class HarmonicOp {
  Forward,  ///< omega +- grad + F
  Adjoint,  ///< omega -+ grad - F
};

/// Harmonic omega-gradient operators on a spatial (sigma = 0) plane wave.
/// Throws Errc::NotStatic when sigma != 0.
PlaneWaveField pw_apply_harmonic(const PlaneWaveField& f, const StructuralCoefficient& F,
                                 double omega, Sign sign,
                                 HarmonicOp op = HarmonicOp::Forward);

/// Symbol of laplacian +- 2(F, grad) + omega^2 + (F, F) on exp(-i(kappa, x)).
Complex pw_harmonic_multiplier(const PlaneWaveField& f, const StructuralCoefficient& F,
                               double omega, Sign sign);

/// Uniform lattice over (tau, x, y, z). A time extent of 1 denotes a static
/// field.
struct GridSpec {
  std::array<double, 4> origin{};
  std::array<double, 4> spacing{1.0, 1.0, 1.0, 1.0};
  std::array<std::size_t, 4> dims{1, 1, 1, 1};

  std::size_t size() const { return dims[0] * dims[1] * dims[2] * dims[3]; }
  /// Throws Errc::BadSpec for nonpositive spacing or a zero extent.
  void validate() const;
};

class GridField {
 public:
  GridField() = default;
  explicit GridField(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  const std::array<std::size_t, 4>& dims() const { return spec_.dims; }

  /// Nodes within `margin[a]` of either face along axis a carry no valid
  /// operator output.
  const std::array<std::size_t, 4>& margin() const { return margin_; }
  void set_margin(const std::array<std::size_t, 4>& m) { margin_ = m; }

  std::size_t index(std::size_t it, std::size_t ix, std::size_t iy,
                    std::size_t iz) const {
    return ((it * spec_.dims[1] + ix) * spec_.dims[2] + iy) * spec_.dims[3] + iz;
  }
  Biquaternion& at(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
    return data_[index(it, ix, iy, iz)];
  }
  const Biquaternion& at(std::size_t it, std::size_t ix, std::size_t iy,
                         std::size_t iz) const {
    return data_[index(it, ix, iy, iz)];
  }

  double tau(std::size_t it) const { return spec_.origin[0] + it * spec_.spacing[0]; }
  Vec3 position(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return {spec_.origin[1] + ix * spec_.spacing[1],
            spec_.origin[2] + iy * spec_.spacing[2],
            spec_.origin[3] + iz * spec_.spacing[3]};
  }

  std::vector<Biquaternion>& data() { return data_; }
  const std::vector<Biquaternion>& data() const { return data_; }

  bool interior(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const;

  /// Calls fn(it, ix, iy, iz) for every node outside the margin, in row-major
  /// order.
  void for_each_interior(
      const std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)>& fn)
      const;

  /// Largest norm() over interior nodes.
  double max_interior_norm() const;

 private:
  GridSpec spec_{};
  std::array<std::size_t, 4> margin_{};
  std::vector<Biquaternion> data_;
};

/// Second-order central-difference D_F^+- on the (tau, x, y, z) lattice.
/// The output margin grows by one on every axis.
GridField grid_apply_DF(const GridField& g, const StructuralCoefficient& F, Sign sign);

/// box + (F,F) + 2i(F, grad) with the same difference operators that the
/// composition grid_apply_DF(+) after grid_apply_DF(-) uses, so the two agree
/// to rounding. Margin grows by two.
GridField grid_apply_scalar_wave_op(const GridField& g, const StructuralCoefficient& F);

/// Harmonic operators on each time slice, spatial differences only.
GridField grid_apply_harmonic(const GridField& g, const StructuralCoefficient& F,
                              double omega, Sign sign, HarmonicOp op = HarmonicOp::Forward);

/// laplacian +- 2(F, grad) + omega^2 + (F,F), composed-stencil form matching
/// grid_apply_harmonic(Forward) after grid_apply_harmonic(Adjoint).
GridField grid_apply_harmonic_scalar_op(const GridField& g, const StructuralCoefficient& F,
                                        double omega, Sign sign);

/// Per-node magnitude of the individual terms of D_F^+-, i.e.
/// |d_tau B| + sum_k |d_k B| + |F B| on interior nodes; used to scale
/// residuals into relative errors.
double grid_DF_term_scale(const GridField& g, const StructuralCoefficient& F);

/// Spatial analogue for the harmonic operators: |omega B| + sum_k |d_k B| + |F B|.
double grid_harmonic_term_scale(const GridField& g, const StructuralCoefficient& F,
                                double omega);

/// Scalar right-hand side q(tau, x) with a declared spatial support ball and
/// an optional time window [t_min, t_max] outside which q vanishes.
struct ScalarSource {
  std::function<Complex(double, const Vec3&)> q;
  double support_radius = 0.0;
  Vec3 center{};
  std::optional<std::pair<double, double>> time_support;
};

}  // namespace biwave
