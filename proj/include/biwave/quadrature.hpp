#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "biwave/biquaternion.hpp"

namespace biwave {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(std::size_t n);

/// Product latitude-longitude rule on the unit sphere: Gauss-Legendre in
/// cos(theta) times a uniform periodic rule in phi. Exact for spherical
/// harmonics of degree < min(2 n_polar, n_azimuth).
struct SphereRule {
  std::size_t n_polar = 64;
  std::size_t n_azimuth = 128;
};

struct SphereNodes {
  std::vector<Vec3> directions;
  std::vector<double> weights;  ///< sums to 4 pi
};

SphereNodes sphere_nodes(const SphereRule& rule);

/// Two unit vectors completing n / |n| to a right-handed orthonormal frame.
std::pair<Vec3, Vec3> orthonormal_pair(const Vec3& n);

}  // namespace biwave
