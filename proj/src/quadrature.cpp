#include "biwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "biwave/error.hpp"

namespace biwave {

GaussLegendre gauss_legendre(std::size_t n) {
  if (n == 0) throw Error(Errc::BadParams, "Gauss-Legendre order must be positive");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guess; roots are
  // symmetric so only half are computed.
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereNodes sphere_nodes(const SphereRule& rule) {
  if (rule.n_polar == 0 || rule.n_azimuth == 0) {
    throw Error(Errc::BadParams, "sphere rule needs positive node counts");
  }
  const GaussLegendre gl = gauss_legendre(rule.n_polar);
  SphereNodes out;
  out.directions.reserve(rule.n_polar * rule.n_azimuth);
  out.weights.reserve(rule.n_polar * rule.n_azimuth);
  const double dphi = 2.0 * std::numbers::pi / rule.n_azimuth;
  for (std::size_t i = 0; i < rule.n_polar; ++i) {
    const double ct = gl.nodes[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (std::size_t j = 0; j < rule.n_azimuth; ++j) {
      const double phi = (j + 0.5) * dphi;
      out.directions.push_back({st * std::cos(phi), st * std::sin(phi), ct});
      out.weights.push_back(gl.weights[i] * dphi);
    }
  }
  return out;
}

std::pair<Vec3, Vec3> orthonormal_pair(const Vec3& n) {
  const double len = length(n);
  if (!(len > 0.0)) throw Error(Errc::BadParams, "orthonormal_pair of a zero vector");
  const Vec3 e = n / len;
  // Start from the coordinate axis least aligned with e.
  Vec3 seed{1, 0, 0};
  if (std::abs(e.y) <= std::abs(e.x) && std::abs(e.y) <= std::abs(e.z)) seed = {0, 1, 0};
  else if (std::abs(e.z) <= std::abs(e.x) && std::abs(e.z) <= std::abs(e.y)) seed = {0, 0, 1};
  Vec3 u = seed - dot(seed, e) * e;
  u = u / length(u);
  const Vec3 w = cross(e, u);
  return {u, w};
}

}  // namespace biwave
