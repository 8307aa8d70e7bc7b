#include "solgeo/surfcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace solgeo {

namespace {

template <class F>
void for_each_node(const Lattice& l, F&& fn) {
  for (int j = 0; j < l.nt; ++j) {
    for (int i = 0; i < l.ns; ++i) fn(i, j, l.index(i, j));
  }
}

// Partial derivatives along s and t, or nullopt if either stencil is broken.
template <class T>
std::optional<std::array<T, 2>> partials(const GridField<T>& f, int i, int j) {
  auto ds = central_difference(f, i, j, 0);
  if (!ds) return std::nullopt;
  auto dt = central_difference(f, i, j, 1);
  if (!dt) return std::nullopt;
  return std::array<T, 2>{*ds, *dt};
}

}  // namespace

GridField<Vec2> surface_gradient(const GridField<double>& u, const GridField<Mat2>& g) {
  require_same_lattice(u, g);
  GridField<Vec2> out(u.lattice);
  for_each_node(u.lattice, [&](int i, int j, std::size_t k) {
    if (!g.is_valid(k)) return;
    const auto d = partials(u, i, j);
    if (!d) return;
    out.set(k, g.values[k].inverse() * Vec2((*d)[0], (*d)[1]));
  });
  return out;
}

GridField<double> surface_divergence(const GridField<Vec2>& v, const GridField<Mat2>& g) {
  require_same_lattice(v, g);
  GridField<Vec2> flux(v.lattice);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v.is_valid(k) && g.is_valid(k)) flux.set(k, std::sqrt(g.values[k].determinant()) * v.values[k]);
  }
  GridField<double> out(v.lattice);
  for_each_node(v.lattice, [&](int i, int j, std::size_t k) {
    if (!g.is_valid(k)) return;
    const auto d = partials(flux, i, j);
    if (!d) return;
    out.set(k, ((*d)[0](0) + (*d)[1](1)) / std::sqrt(g.values[k].determinant()));
  });
  return out;
}

GridField<double> laplace_beltrami(const GridField<double>& u, const GridField<Mat2>& g) {
  return surface_divergence(surface_gradient(u, g), g);
}

GridField<Mat2Pair> induced_christoffels(const GridField<Mat2>& g) {
  GridField<Mat2Pair> out(g.lattice);
  for_each_node(g.lattice, [&](int i, int j, std::size_t k) {
    if (!g.is_valid(k)) return;
    const Mat2& gk = g.values[k];
    if (!(gk(0, 0) > 0.0) || !(gk.determinant() > 0.0)) {
      throw InvalidArgument("metric is not positive definite at a grid node");
    }
    const auto d = partials(g, i, j);
    if (!d) return;
    const Mat2 ginv = gk.inverse();
    // first[l](a,b) = (d_a g_bl + d_b g_al - d_l g_ab) / 2
    Mat2Pair first;
    for (int l = 0; l < 2; ++l) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          first[l](a, b) = 0.5 * ((*d)[a](b, l) + (*d)[b](a, l) - (*d)[l](a, b));
        }
      }
    }
    Mat2Pair gamma;
    for (int m = 0; m < 2; ++m) gamma[m] = ginv(m, 0) * first[0] + ginv(m, 1) * first[1];
    out.set(k, gamma);
  });
  return out;
}

GridField<Mat2Pair> covariant_derivative_tensor(const GridField<Mat2>& a,
                                                const GridField<Mat2Pair>& gamma) {
  require_same_lattice(a, gamma);
  GridField<Mat2Pair> out(a.lattice);
  for_each_node(a.lattice, [&](int i, int j, std::size_t k) {
    if (!gamma.is_valid(k) || !a.is_valid(k)) return;
    const auto d = partials(a, i, j);
    if (!d) return;
    const Mat2& A = a.values[k];
    const Mat2Pair& G = gamma.values[k];
    Mat2Pair nabla;
    for (int dir = 0; dir < 2; ++dir) {
      // M(r,c) = Gamma^r_{dir c}; for a (1,1) tensor nabla_dir A = d_dir A + [M, A].
      Mat2 m;
      for (int r = 0; r < 2; ++r) m.row(r) = G[r].row(dir);
      nabla[dir] = (*d)[dir] + m * A - A * m;
    }
    out.set(k, nabla);
  });
  return out;
}

GridField<double> covariant_derivative_norm2(const GridField<Mat2Pair>& nabla_a,
                                             const GridField<Mat2>& g) {
  return map_fields(
      [](const Mat2Pair& n, const Mat2& gk) {
        const Mat2 ginv = gk.inverse();
        double sum = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            sum += ginv(a, b) * (n[a].transpose() * gk * n[b] * ginv).trace();
          }
        }
        return sum;
      },
      nabla_a, g);
}

GridField<Mat2> covariant_derivative_vector(const GridField<Vec2>& v,
                                            const GridField<Mat2Pair>& gamma) {
  require_same_lattice(v, gamma);
  GridField<Mat2> out(v.lattice);
  for_each_node(v.lattice, [&](int i, int j, std::size_t k) {
    if (!gamma.is_valid(k) || !v.is_valid(k)) return;
    const auto d = partials(v, i, j);
    if (!d) return;
    Mat2 m;
    for (int dir = 0; dir < 2; ++dir) {
      for (int r = 0; r < 2; ++r) {
        m(r, dir) = (*d)[dir](r) + gamma.values[k][r].row(dir).dot(v.values[k]);
      }
    }
    out.set(k, m);
  });
  return out;
}

double vector_norm(const Vec2& v, const Mat2& g) { return std::sqrt(std::max(0.0, v.dot(g * v))); }

double tensor_norm(const Mat2& t, const Mat2& g) {
  return std::sqrt(std::max(0.0, (t.transpose() * g * t * g.inverse()).trace()));
}

double integrate(const GridField<double>& u, const GridField<Mat2>& g, Coverage coverage) {
  require_same_lattice(u, g);
  if (coverage == Coverage::ClosedOnly && !u.lattice.closed()) {
    throw InvalidArgument("integration over a non-closed chart needs an explicit mask");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u.is_valid(k) && g.is_valid(k)) sum += u.values[k] * std::sqrt(g.values[k].determinant());
  }
  return sum * u.lattice.hs * u.lattice.ht;
}

ResolutionResidual summarize_residual(const GridField<double>& residual, int resolution) {
  ResolutionResidual r;
  r.resolution = resolution;
  r.h = std::max(residual.lattice.hs, residual.lattice.ht);
  double sum = 0.0;
  for (std::size_t k = 0; k < residual.size(); ++k) {
    if (!residual.is_valid(k)) continue;
    const double v = std::abs(residual.values[k]);
    r.max_abs = std::max(r.max_abs, v);
    sum += v;
    ++r.nodes;
  }
  r.mean_abs = r.nodes ? sum / static_cast<double>(r.nodes) : 0.0;
  if (r.nodes == 0) r.max_abs = r.mean_abs = std::numeric_limits<double>::quiet_NaN();
  return r;
}

double ResidualReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.max_abs);
  return m;
}

ResidualReport make_residual_report(std::string identity, std::vector<ResolutionResidual> rows) {
  for (std::size_t n = 1; n < rows.size(); ++n) {
    if (rows[n].resolution <= rows[n - 1].resolution) {
      throw InvalidArgument("residual report resolutions must strictly increase");
    }
  }
  ResidualReport report;
  report.identity = std::move(identity);
  if (rows.size() >= 3) {
    for (std::size_t n = 1; n < rows.size(); ++n) {
      const double ra = rows[n - 1].max_abs;
      const double rb = rows[n].max_abs;
      const double ratio_h = rows[n - 1].h / rows[n].h;
      report.orders.push_back(ra > 0.0 && rb > 0.0 ? std::log(ra / rb) / std::log(ratio_h)
                                                   : std::numeric_limits<double>::quiet_NaN());
    }
  }
  report.rows = std::move(rows);
  return report;
}

void validate_resolutions(std::span<const int> resolutions) {
  if (resolutions.empty()) throw InvalidArgument("at least one resolution is required");
  for (std::size_t n = 0; n < resolutions.size(); ++n) {
    if (resolutions[n] < 8) throw InvalidArgument("resolutions must be >= 8");
    if (n > 0 && resolutions[n] <= resolutions[n - 1]) {
      throw InvalidArgument("resolutions must be strictly increasing");
    }
  }
}

}  // namespace solgeo
