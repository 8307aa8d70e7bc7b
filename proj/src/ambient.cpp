#include "solgeo/ambient.hpp"

#include <algorithm>
#include <string>

#include "solgeo/error.hpp"

namespace solgeo {

AmbientVector frame_vector(int k) {
  switch (k) {
    case 1:
      return {1.0, 0.0, 0.0};
    case 2:
      return {0.0, 1.0, 0.0};
    case 3:
      return {0.0, 0.0, 1.0};
    default:
      throw InvalidArgument("frame index must be 1, 2 or 3, got " + std::to_string(k));
  }
}

bool is_finite(const AmbientPoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}
bool is_finite(const CoordinateVector& v) {
  return std::isfinite(v.vx) && std::isfinite(v.vy) && std::isfinite(v.vz);
}
bool is_finite(const AmbientVector& v) {
  return std::isfinite(v.a1) && std::isfinite(v.a2) && std::isfinite(v.a3);
}

namespace {

void require_finite(const AmbientPoint& p) {
  if (!is_finite(p)) throw InvalidArgument("non-finite ambient point");
}

}  // namespace

double metric(const AmbientPoint& p, const CoordinateVector& u, const CoordinateVector& v) {
  require_finite(p);
  if (!is_finite(u) || !is_finite(v)) throw InvalidArgument("non-finite coordinate vector");
  return std::exp(2.0 * p.z) * u.vx * v.vx + std::exp(-2.0 * p.z) * u.vy * v.vy + u.vz * v.vz;
}

AmbientVector to_frame(const AmbientPoint& p, const CoordinateVector& v) {
  require_finite(p);
  return {std::exp(p.z) * v.vx, std::exp(-p.z) * v.vy, v.vz};
}

CoordinateVector to_coordinates(const AmbientPoint& p, const AmbientVector& v) {
  require_finite(p);
  return {std::exp(-p.z) * v.a1, std::exp(p.z) * v.a2, v.a3};
}

AmbientVector connection_term(const AmbientVector& u, const AmbientVector& v) {
  // nabla_{E1}E1 = -E3, nabla_{E1}E3 = E1, nabla_{E2}E2 = E3, nabla_{E2}E3 = -E2,
  // all other pairs vanish.
  return {u.a1 * v.a3, -u.a2 * v.a3, -u.a1 * v.a1 + u.a2 * v.a2};
}

AmbientVector covariant_derivative(const AmbientVector& u, const AmbientVector& v,
                                   const AmbientVector& dv) {
  return dv + connection_term(u, v);
}

AmbientVector curvature_tensor(const AmbientVector& x, const AmbientVector& y,
                               const AmbientVector& z) {
  const AmbientVector e3 = frame_vector(3);
  const double yz = inner(y, z);
  const double xz = inner(x, z);
  const double x3 = x.a3;
  const double y3 = y.a3;
  const double z3 = z.a3;
  return yz * x - xz * y + 2.0 * z3 * (x3 * y - y3 * x) + 2.0 * (xz * y3 - yz * x3) * e3;
}

double sectional_curvature(const AmbientVector& u, const AmbientVector& v) {
  const double gram = norm2(u) * norm2(v) - inner(u, v) * inner(u, v);
  if (!(gram >= kDegeneratePlaneTolerance)) {
    throw InvalidArgument("degenerate plane: Gram determinant " + std::to_string(gram));
  }
  return inner(curvature_tensor(u, v, v), u) / gram;
}

namespace {

struct GeodesicState {
  AmbientPoint p;
  AmbientVector a;  // velocity in frame components
};

GeodesicState geodesic_rhs(const GeodesicState& s) {
  // Position moves with the coordinate velocity; the frame components obey
  // a' = -connection_term(a, a).
  const CoordinateVector v = to_coordinates(s.p, s.a);
  return {{v.vx, v.vy, v.vz}, -connection_term(s.a, s.a)};
}

GeodesicState axpy(const GeodesicState& s, double h, const GeodesicState& k) {
  return {{s.p.x + h * k.p.x, s.p.y + h * k.p.y, s.p.z + h * k.p.z}, s.a + h * k.a};
}

GeodesicState rk4_step(const GeodesicState& s, double h) {
  const GeodesicState k1 = geodesic_rhs(s);
  const GeodesicState k2 = geodesic_rhs(axpy(s, 0.5 * h, k1));
  const GeodesicState k3 = geodesic_rhs(axpy(s, 0.5 * h, k2));
  const GeodesicState k4 = geodesic_rhs(axpy(s, h, k3));
  GeodesicState out = s;
  const double w = h / 6.0;
  out.p.x += w * (k1.p.x + 2.0 * k2.p.x + 2.0 * k3.p.x + k4.p.x);
  out.p.y += w * (k1.p.y + 2.0 * k2.p.y + 2.0 * k3.p.y + k4.p.y);
  out.p.z += w * (k1.p.z + 2.0 * k2.p.z + 2.0 * k3.p.z + k4.p.z);
  out.a += w * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
  return out;
}

}  // namespace

std::vector<GeodesicSample> geodesic_flow(const AmbientPoint& start,
                                          const CoordinateVector& velocity, double duration,
                                          double dt) {
  require_finite(start);
  if (!is_finite(velocity)) throw InvalidArgument("non-finite initial velocity");
  if (!(duration > 0.0) || !(dt > 0.0)) throw InvalidArgument("duration and dt must be positive");
  if (dt > duration) throw InvalidArgument("step rejected: dt exceeds the integration time");

  const auto steps = static_cast<long>(std::ceil(duration / dt - 1e-9));
  std::vector<GeodesicSample> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);

  GeodesicState state{start, to_frame(start, velocity)};
  path.push_back({0.0, state.p, velocity});
  double time = 0.0;
  for (long n = 0; n < steps; ++n) {
    const double h = std::min(dt, duration - time);
    state = rk4_step(state, h);
    time = (n + 1 == steps) ? duration : time + h;
    path.push_back({time, state.p, to_coordinates(state.p, state.a)});
  }
  return path;
}

}  // namespace solgeo
