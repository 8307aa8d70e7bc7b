#pragma once

// Parametric surface charts (s, t) -> Sol^3 with analytic derivatives up to
// second order, and the closed catalog of surfaces the tools operate on.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "solgeo/ambient.hpp"

namespace solgeo {

/// Position and first/second partials of an immersion at a chart point, all
/// in the coordinate basis.
struct Jet2 {
  AmbientPoint position;
  CoordinateVector ds;
  CoordinateVector dt;
  CoordinateVector dss;
  CoordinateVector dst;
  CoordinateVector dtt;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

struct Chart {
  std::string name;
  Interval s_range;
  Interval t_range;
  bool periodic_s = false;
  bool periodic_t = false;
  /// Node rings masked at each end of a non-periodic t direction (pole bands).
  int masked_t_rings = 0;
  /// Mean curvature is constant on the whole chart.
  bool constant_mean_curvature = false;
  /// Which way the normal d_s phi x d_t phi points, for reports.
  std::string orientation;
  std::vector<std::pair<std::string, double>> parameters;
  std::function<Jet2(double, double)> evaluate;

  bool closed() const { return periodic_s && periodic_t; }
};

namespace catalog {

struct SurfaceParams {
  double c = 0.0;    // leaf offset
  double eps = 0.1;  // graph amplitude
  double R = 2.0;    // torus major radius
  double r = 0.5;    // torus minor radius
  double rho = 1.0;  // sphere coordinate radius
};

/// {x = c}, (s,t) -> (c, s, t) on [-1,1]^2.
Chart leaf_x(double c);
/// {y = c}, (s,t) -> (s, c, t) on [-1,1]^2.
Chart leaf_y(double c);
/// {z = c}, (s,t) -> (s, t, c) on [-1,1]^2.
Chart leaf_z(double c);
/// z = eps sin(s) sin(t), doubly periodic on [0,2pi]^2. Requires |eps| <= 1.
Chart graph(double eps);
/// ((R + r cos t) cos s, (R + r cos t) sin s, r sin t), doubly periodic.
/// Requires 0 < r < R <= 10.
Chart torus(double R, double r);
/// Coordinate sphere of radius rho, s azimuth (periodic), t polar angle in
/// [0, pi] with two node rings masked at each pole. Requires 0 < rho <= 5.
Chart sphere(double rho);

/// Builds a catalog chart by name; throws UnknownName or InvalidArgument.
Chart make(std::string_view name, const SurfaceParams& params);

const std::vector<std::string>& names();

}  // namespace catalog
}  // namespace solgeo
