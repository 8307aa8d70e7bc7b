#include "solgeo/immersion.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "solgeo/error.hpp"

namespace solgeo {

std::optional<std::size_t> Lattice::neighbor(int i, int j, int di, int dj) const {
  int ii = i + di;
  int jj = j + dj;
  if (periodic_s) {
    ii = ((ii % ns) + ns) % ns;
  } else if (ii < 0 || ii >= ns) {
    return std::nullopt;
  }
  if (periodic_t) {
    jj = ((jj % nt) + nt) % nt;
  } else if (jj < 0 || jj >= nt) {
    return std::nullopt;
  }
  return index(ii, jj);
}

Lattice Lattice::for_chart(const Chart& chart, int n) {
  if (n < 3) throw InvalidArgument("lattice needs at least 3 nodes per direction");
  if (!(chart.s_range.length() > 0.0) || !(chart.t_range.length() > 0.0)) {
    throw InvalidArgument("chart '" + chart.name + "' has an empty parameter rectangle");
  }
  Lattice l;
  l.ns = l.nt = n;
  l.s0 = chart.s_range.lo;
  l.t0 = chart.t_range.lo;
  l.periodic_s = chart.periodic_s;
  l.periodic_t = chart.periodic_t;
  l.hs = chart.s_range.length() / (chart.periodic_s ? n : n - 1);
  l.ht = chart.t_range.length() / (chart.periodic_t ? n : n - 1);
  return l;
}

namespace {

// d/du of the frame components of a coordinate field V along the surface,
// where `dz` is the z-velocity of the base point.
AmbientVector frame_derivative(const AmbientPoint& p, const CoordinateVector& v,
                               const CoordinateVector& dv, double dz) {
  const double ez = std::exp(p.z);
  return {ez * (dz * v.vx + dv.vx), (-dz * v.vy + dv.vy) / ez, dv.vz};
}

}  // namespace

SurfacePointData evaluate_jet(const Jet2& jet, bool flip_normal) {
  const AmbientPoint& p = jet.position;
  if (!is_finite(p)) throw InvalidArgument("chart produced a non-finite point");

  SurfacePointData d;
  d.position = p;
  d.frame_s = to_frame(p, jet.ds);
  d.frame_t = to_frame(p, jet.dt);
  const AmbientVector& ws = d.frame_s;
  const AmbientVector& wt = d.frame_t;

  d.g << inner(ws, ws), inner(ws, wt), inner(wt, ws), inner(wt, wt);
  Eigen::SelfAdjointEigenSolver<Mat2> eig(d.g, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues()(0);
  const double lmax = eig.eigenvalues()(1);
  if (!(lmax > 0.0) || !(lmin > 0.0) || std::sqrt(lmin / lmax) < kDegenerateRatio) {
    throw DegeneratePoint("chart differential is rank deficient");
  }
  d.g_inv = d.g.inverse();
  d.sqrt_det_g = std::sqrt(d.g.determinant());

  AmbientVector n = cross(ws, wt);
  d.xi = (flip_normal ? -1.0 : 1.0) / norm(n) * n;

  const double zs = jet.ds.vz;
  const double zt = jet.dt.vz;
  const AmbientVector nabla_ss = covariant_derivative(ws, ws, frame_derivative(p, jet.ds, jet.dss, zs));
  const AmbientVector nabla_st = covariant_derivative(ws, wt, frame_derivative(p, jet.dt, jet.dst, zs));
  const AmbientVector nabla_ts = covariant_derivative(wt, ws, frame_derivative(p, jet.ds, jet.dst, zt));
  const AmbientVector nabla_tt = covariant_derivative(wt, wt, frame_derivative(p, jet.dt, jet.dtt, zt));
  d.h << inner(nabla_ss, d.xi), inner(nabla_st, d.xi), inner(nabla_ts, d.xi), inner(nabla_tt, d.xi);

  d.A = d.g_inv * d.h;
  d.f = 0.5 * d.A.trace();
  d.norm_a2 = (d.A * d.A).trace();
  for (int k = 0; k < 3; ++k) {
    d.c[k] = d.xi[k];
    d.etop[k] = d.g_inv * Vec2(ws[k], wt[k]);
  }
  d.K = gaussian_curvature_extrinsic(d);
  return d;
}

SurfacePointData evaluate_point(const Chart& chart, double s, double t, bool flip_normal) {
  if (!std::isfinite(s) || !std::isfinite(t)) throw InvalidArgument("non-finite chart parameter");
  return evaluate_jet(chart.evaluate(s, t), flip_normal);
}

double gaussian_curvature_extrinsic(const SurfacePointData& d) {
  return 2.0 * d.c[2] * d.c[2] - 1.0 + 2.0 * d.f * d.f - 0.5 * d.norm_a2;
}

double gaussian_curvature_gauss_equation(const SurfacePointData& d) {
  const double ls = norm(d.frame_s);
  const AmbientVector x1 = (1.0 / ls) * d.frame_s;
  const double proj = inner(d.frame_t, x1);
  const AmbientVector x2_raw = d.frame_t - proj * x1;
  const double l2 = norm(x2_raw);
  const AmbientVector x2 = (1.0 / l2) * x2_raw;

  // Chart components of the same orthonormal pair.
  const Vec2 c1(1.0 / ls, 0.0);
  const Vec2 c2 = Vec2(-proj / ls, 1.0) / l2;
  const Mat2 hs = 0.5 * (d.h + d.h.transpose());
  const double a11 = c1.dot(hs * c1);
  const double a22 = c2.dot(hs * c2);
  const double a12 = c1.dot(hs * c2);
  return inner(curvature_tensor(x1, x2, x2), x1) + a11 * a22 - a12 * a12;
}

GridField<Mat2> SampledSurface::metric() const {
  return field([](const SurfacePointData& d) { return d.g; });
}

SampledSurface sample_surface(const Chart& chart, int resolution, bool flip_normal) {
  SampledSurface out;
  out.lattice = Lattice::for_chart(chart, resolution);
  out.chart_name = chart.name;
  out.closed = chart.closed();
  out.constant_mean_curvature = chart.constant_mean_curvature;
  out.points = GridField<SurfacePointData>(out.lattice);
  const Lattice& l = out.lattice;
  const int rings = l.periodic_t ? 0 : chart.masked_t_rings;
  for (int j = 0; j < l.nt; ++j) {
    if (j < rings || j >= l.nt - rings) continue;
    for (int i = 0; i < l.ns; ++i) {
      try {
        out.points.set(l.index(i, j), evaluate_point(chart, l.s(i), l.t(j), flip_normal));
      } catch (const DegeneratePoint&) {
        // left invalid
      }
    }
  }
  return out;
}

GridField<double> gaussian_curvature_intrinsic(const GridField<Mat2>& g) {
  const Lattice& l = g.lattice;
  GridField<double> out(l);
  auto value = [&](int i, int j, int di, int dj, int a, int b) -> std::optional<double> {
    const auto k = l.neighbor(i, j, di, dj);
    if (!k || !g.is_valid(*k)) return std::nullopt;
    return g.values[*k](a, b);
  };
  for (int j = 0; j < l.nt; ++j) {
    for (int i = 0; i < l.ns; ++i) {
      const std::size_t k = l.index(i, j);
      if (!g.is_valid(k)) continue;
      // Gather the 3x3 block of E = g_ss, F = g_st, G = g_tt.
      double e[3][3], fm[3][3], gm[3][3];
      bool ok = true;
      for (int dj = -1; dj <= 1 && ok; ++dj) {
        for (int di = -1; di <= 1 && ok; ++di) {
          const auto ev = value(i, j, di, dj, 0, 0);
          if (!ev) {
            ok = false;
            break;
          }
          e[di + 1][dj + 1] = *ev;
          fm[di + 1][dj + 1] = *value(i, j, di, dj, 0, 1);
          gm[di + 1][dj + 1] = *value(i, j, di, dj, 1, 1);
        }
      }
      if (!ok) continue;
      const double hs = l.hs, ht = l.ht;
      auto du = [&](double a[3][3]) { return (a[2][1] - a[0][1]) / (2.0 * hs); };
      auto dv = [&](double a[3][3]) { return (a[1][2] - a[1][0]) / (2.0 * ht); };
      auto duu = [&](double a[3][3]) { return (a[2][1] - 2.0 * a[1][1] + a[0][1]) / (hs * hs); };
      auto dvv = [&](double a[3][3]) { return (a[1][2] - 2.0 * a[1][1] + a[1][0]) / (ht * ht); };
      auto duv = [&](double a[3][3]) {
        return (a[2][2] - a[2][0] - a[0][2] + a[0][0]) / (4.0 * hs * ht);
      };
      const double E = e[1][1], F = fm[1][1], G = gm[1][1];
      const double Eu = du(e), Ev = dv(e), Fu = du(fm), Fv = dv(fm), Gu = du(gm), Gv = dv(gm);
      Eigen::Matrix3d m1, m2;
      m1 << -0.5 * dvv(e) + duv(fm) - 0.5 * duu(gm), 0.5 * Eu, Fu - 0.5 * Ev,
          Fv - 0.5 * Gu, E, F,
          0.5 * Gv, F, G;
      m2 << 0.0, 0.5 * Ev, 0.5 * Gu,
          0.5 * Ev, E, F,
          0.5 * Gu, F, G;
      const double det = E * G - F * F;
      out.set(k, (m1.determinant() - m2.determinant()) / (det * det));
    }
  }
  return out;
}

GridField<double> gaussian_curvature_intrinsic(const Chart& chart, int resolution) {
  return gaussian_curvature_intrinsic(sample_surface(chart, resolution).metric());
}

}  // namespace solgeo
