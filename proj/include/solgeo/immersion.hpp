#pragma once

// Pointwise second-order data of an immersed surface phi: Sigma -> Sol^3.

#include <array>
#include <string>

#include "solgeo/ambient.hpp"
#include "solgeo/chart.hpp"
#include "solgeo/grid.hpp"

namespace solgeo {

/// Everything the Simons-type identities need at one chart point. Matrices
/// are in the chart basis {d_s phi, d_t phi}; A(k,j) = A^k_j.
struct SurfacePointData {
  AmbientPoint position;
  AmbientVector frame_s;  ///< d_s phi in frame components
  AmbientVector frame_t;  ///< d_t phi in frame components
  Mat2 g = Mat2::Zero();
  Mat2 g_inv = Mat2::Zero();
  double sqrt_det_g = 0.0;
  AmbientVector xi;       ///< unit normal
  Mat2 h = Mat2::Zero();  ///< h_ij = <nabla_i d_j phi, xi>
  Mat2 A = Mat2::Zero();  ///< shape operator, g^{-1} h
  double f = 0.0;         ///< mean curvature, trace(A)/2
  double norm_a2 = 0.0;   ///< |A|^2
  double K = 0.0;         ///< Gaussian curvature from the Gauss equation
  std::array<Vec2, 3> etop{Vec2::Zero(), Vec2::Zero(), Vec2::Zero()};  ///< E_k^T
  std::array<double, 3> c{0.0, 0.0, 0.0};                               ///< <xi, E_k>

  double inner(const Vec2& u, const Vec2& v) const { return u.dot(g * v); }
};

/// Singular-value ratio below which a chart point counts as degenerate.
inline constexpr double kDegenerateRatio = 1e-10;

SurfacePointData evaluate_jet(const Jet2& jet, bool flip_normal = false);

/// Throws DegeneratePoint when the differential loses rank.
SurfacePointData evaluate_point(const Chart& chart, double s, double t, bool flip_normal = false);

/// 2<xi,E3>^2 - 1 + 2f^2 - |A|^2/2.
double gaussian_curvature_extrinsic(const SurfacePointData& d);

/// <R(X1,X2)X2,X1> for an orthonormal tangent frame, assembled from the
/// ambient curvature tensor plus the shape-operator terms of the Gauss
/// equation.
double gaussian_curvature_gauss_equation(const SurfacePointData& d);

/// Point data sampled on a chart lattice. Nodes in masked bands or at
/// degenerate points are invalid.
struct SampledSurface {
  std::string chart_name;
  Lattice lattice;
  GridField<SurfacePointData> points;
  bool closed = false;
  bool constant_mean_curvature = false;

  GridField<Mat2> metric() const;
  template <class F>
  auto field(F&& fn) const {
    return map_fields([&](const SurfacePointData& d) { return fn(d); }, points);
  }
};

SampledSurface sample_surface(const Chart& chart, int resolution, bool flip_normal = false);

/// Gaussian curvature from finite differences of the first fundamental form
/// alone (Brioschi formula). Nodes whose stencil leaves the grid are masked.
GridField<double> gaussian_curvature_intrinsic(const GridField<Mat2>& g);
GridField<double> gaussian_curvature_intrinsic(const Chart& chart, int resolution);

}  // namespace solgeo
