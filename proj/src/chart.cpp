#include "solgeo/chart.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "solgeo/error.hpp"

namespace solgeo::catalog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLeafHalfWidth = 1.0;
constexpr double kMaxLeafOffset = 5.0;

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_leaf_offset(double c) {
  require(std::isfinite(c) && std::abs(c) <= kMaxLeafOffset,
          "leaf offset c must satisfy |c| <= 5");
}

Chart leaf_chart(std::string name, double c) {
  Chart chart;
  chart.name = std::move(name);
  chart.s_range = {-kLeafHalfWidth, kLeafHalfWidth};
  chart.t_range = {-kLeafHalfWidth, kLeafHalfWidth};
  chart.constant_mean_curvature = true;
  chart.parameters = {{"c", c}};
  return chart;
}

}  // namespace

Chart leaf_x(double c) {
  require_leaf_offset(c);
  Chart chart = leaf_chart("leaf_x", c);
  chart.orientation = "xi = +E1";
  chart.evaluate = [c](double s, double t) {
    Jet2 j;
    j.position = {c, s, t};
    j.ds = {0.0, 1.0, 0.0};
    j.dt = {0.0, 0.0, 1.0};
    return j;
  };
  return chart;
}

Chart leaf_y(double c) {
  require_leaf_offset(c);
  Chart chart = leaf_chart("leaf_y", c);
  chart.orientation = "xi = -E2";
  chart.evaluate = [c](double s, double t) {
    Jet2 j;
    j.position = {s, c, t};
    j.ds = {1.0, 0.0, 0.0};
    j.dt = {0.0, 0.0, 1.0};
    return j;
  };
  return chart;
}

Chart leaf_z(double c) {
  require_leaf_offset(c);
  Chart chart = leaf_chart("leaf_z", c);
  chart.orientation = "xi = +E3";
  chart.evaluate = [c](double s, double t) {
    Jet2 j;
    j.position = {s, t, c};
    j.ds = {1.0, 0.0, 0.0};
    j.dt = {0.0, 1.0, 0.0};
    return j;
  };
  return chart;
}

Chart graph(double eps) {
  require(std::isfinite(eps) && std::abs(eps) <= 1.0, "graph amplitude eps must satisfy |eps| <= 1");
  Chart chart;
  chart.name = "graph";
  chart.s_range = {0.0, kTwoPi};
  chart.t_range = {0.0, kTwoPi};
  chart.periodic_s = chart.periodic_t = true;
  chart.orientation = "upward: <xi, E3> > 0";
  chart.parameters = {{"eps", eps}};
  chart.evaluate = [eps](double s, double t) {
    const double ss = std::sin(s), cs = std::cos(s);
    const double st = std::sin(t), ct = std::cos(t);
    Jet2 j;
    j.position = {s, t, eps * ss * st};
    j.ds = {1.0, 0.0, eps * cs * st};
    j.dt = {0.0, 1.0, eps * ss * ct};
    j.dss = {0.0, 0.0, -eps * ss * st};
    j.dst = {0.0, 0.0, eps * cs * ct};
    j.dtt = {0.0, 0.0, -eps * ss * st};
    return j;
  };
  return chart;
}

Chart torus(double R, double r) {
  require(std::isfinite(R) && std::isfinite(r) && r > 0.0 && r < R && R <= 10.0,
          "torus radii must satisfy 0 < r < R <= 10");
  Chart chart;
  chart.name = "torus";
  chart.s_range = {0.0, kTwoPi};
  chart.t_range = {0.0, kTwoPi};
  chart.periodic_s = chart.periodic_t = true;
  chart.orientation = "outward from the core circle";
  chart.parameters = {{"R", R}, {"r", r}};
  chart.evaluate = [R, r](double s, double t) {
    const double ss = std::sin(s), cs = std::cos(s);
    const double st = std::sin(t), ct = std::cos(t);
    const double rho = R + r * ct;
    Jet2 j;
    j.position = {rho * cs, rho * ss, r * st};
    j.ds = {-rho * ss, rho * cs, 0.0};
    j.dt = {-r * st * cs, -r * st * ss, r * ct};
    j.dss = {-rho * cs, -rho * ss, 0.0};
    j.dst = {r * st * ss, -r * st * cs, 0.0};
    j.dtt = {-r * ct * cs, -r * ct * ss, -r * st};
    return j;
  };
  return chart;
}

Chart sphere(double rho) {
  require(std::isfinite(rho) && rho > 0.0 && rho <= 5.0, "sphere radius must satisfy 0 < rho <= 5");
  Chart chart;
  chart.name = "sphere";
  chart.s_range = {0.0, kTwoPi};
  chart.t_range = {0.0, std::numbers::pi};
  chart.periodic_s = true;
  chart.masked_t_rings = 2;
  chart.orientation = "inward (toward the coordinate center)";
  chart.parameters = {{"rho", rho}};
  chart.evaluate = [rho](double s, double t) {
    const double ss = std::sin(s), cs = std::cos(s);
    const double st = std::sin(t), ct = std::cos(t);
    Jet2 j;
    j.position = {rho * st * cs, rho * st * ss, rho * ct};
    j.ds = {-rho * st * ss, rho * st * cs, 0.0};
    j.dt = {rho * ct * cs, rho * ct * ss, -rho * st};
    j.dss = {-rho * st * cs, -rho * st * ss, 0.0};
    j.dst = {-rho * ct * ss, rho * ct * cs, 0.0};
    j.dtt = {-rho * st * cs, -rho * st * ss, -rho * ct};
    return j;
  };
  return chart;
}

Chart make(std::string_view name, const SurfaceParams& p) {
  if (name == "leaf_x") return leaf_x(p.c);
  if (name == "leaf_y") return leaf_y(p.c);
  if (name == "leaf_z") return leaf_z(p.c);
  if (name == "graph") return graph(p.eps);
  if (name == "torus") return torus(p.R, p.r);
  if (name == "sphere") return sphere(p.rho);
  throw UnknownName("unknown surface '" + std::string(name) + "'");
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"leaf_x", "leaf_y", "leaf_z", "graph", "torus", "sphere"};
  return all;
}

}  // namespace solgeo::catalog
