#pragma once

// Closed-form geometry of Sol^3 = (R^3, e^{2z}dx^2 + e^{-2z}dy^2 + dz^2).
//
// Tangent vectors are carried in components of the left-invariant orthonormal
// frame E1 = e^{-z} d/dx, E2 = e^{z} d/dy, E3 = d/dz, so the metric is the
// Euclidean dot product on AmbientVector. CoordinateVector is only used at the
// boundary (chart derivatives, geodesic velocities).

#include <array>
#include <cmath>
#include <vector>

namespace solgeo {

struct AmbientPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Components in the coordinate basis d/dx, d/dy, d/dz.
struct CoordinateVector {
  double vx = 0.0;
  double vy = 0.0;
  double vz = 0.0;
};

/// Components in the canonical frame {E1, E2, E3}.
struct AmbientVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double operator[](int k) const { return k == 0 ? a1 : (k == 1 ? a2 : a3); }

  AmbientVector& operator+=(const AmbientVector& o) {
    a1 += o.a1;
    a2 += o.a2;
    a3 += o.a3;
    return *this;
  }
  AmbientVector& operator-=(const AmbientVector& o) {
    a1 -= o.a1;
    a2 -= o.a2;
    a3 -= o.a3;
    return *this;
  }
  AmbientVector& operator*=(double s) {
    a1 *= s;
    a2 *= s;
    a3 *= s;
    return *this;
  }
};

inline AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
inline AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
inline AmbientVector operator-(AmbientVector a) { return a *= -1.0; }
inline AmbientVector operator*(double s, AmbientVector a) { return a *= s; }
inline AmbientVector operator*(AmbientVector a, double s) { return a *= s; }

inline double inner(const AmbientVector& u, const AmbientVector& v) {
  return u.a1 * v.a1 + u.a2 * v.a2 + u.a3 * v.a3;
}
inline double norm2(const AmbientVector& u) { return inner(u, u); }
inline double norm(const AmbientVector& u) { return std::sqrt(norm2(u)); }

/// Cross product in the oriented orthonormal frame (E1 x E2 = E3).
inline AmbientVector cross(const AmbientVector& u, const AmbientVector& v) {
  return {u.a2 * v.a3 - u.a3 * v.a2, u.a3 * v.a1 - u.a1 * v.a3, u.a1 * v.a2 - u.a2 * v.a1};
}

/// E_k for k = 1, 2, 3.
AmbientVector frame_vector(int k);

bool is_finite(const AmbientPoint& p);
bool is_finite(const CoordinateVector& v);
bool is_finite(const AmbientVector& v);

/// e^{2z} ux vx + e^{-2z} uy vy + uz vz. Throws InvalidArgument on non-finite input.
double metric(const AmbientPoint& p, const CoordinateVector& u, const CoordinateVector& v);

AmbientVector to_frame(const AmbientPoint& p, const CoordinateVector& v);
CoordinateVector to_coordinates(const AmbientPoint& p, const AmbientVector& v);

/// Bilinear part of the Levi-Civita connection: sum_{i,k} u^i v^k nabla_{E_i} E_k.
AmbientVector connection_term(const AmbientVector& u, const AmbientVector& v);

/// nabla_u V at a point, where `v` holds the frame components of V there and
/// `dv` their directional derivatives along u.
AmbientVector covariant_derivative(const AmbientVector& u, const AmbientVector& v,
                                   const AmbientVector& dv);

/// R(X,Y)Z with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
AmbientVector curvature_tensor(const AmbientVector& x, const AmbientVector& y,
                               const AmbientVector& z);

inline constexpr double kDegeneratePlaneTolerance = 1e-12;

/// <R(u,v)v,u> / (|u|^2 |v|^2 - <u,v>^2). Throws InvalidArgument when the
/// Gram determinant is below kDegeneratePlaneTolerance.
double sectional_curvature(const AmbientVector& u, const AmbientVector& v);

struct GeodesicSample {
  double time = 0.0;
  AmbientPoint point;
  CoordinateVector velocity;
};

/// Integrates the geodesic equation with classical RK4 at fixed step `dt`
/// (the final step is shortened to land on `duration`). Returns every step,
/// starting with the initial condition.
std::vector<GeodesicSample> geodesic_flow(const AmbientPoint& start,
                                          const CoordinateVector& velocity, double duration,
                                          double dt);

}  // namespace solgeo
