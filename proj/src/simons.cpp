#include "solgeo/simons.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "solgeo/error.hpp"

namespace solgeo::simons {

const std::vector<IdentityInfo>& identities() {
  using K = IdentityKind;
  static const std::vector<IdentityInfo> all{
      {IdentityId::Codazzi, "CODAZZI", K::FiniteDifference,
       "(nabla_X A)Y = (nabla_Y A)X + 2c3(<Y,E3T>X - <X,E3T>Y)"},
      {IdentityId::TraceNablaA, "TRACE_NABLA_A", K::FiniteDifference,
       "sum_i (nabla_{X_i} A)X_i = 2 grad f + 2c3 E3T"},
      {IdentityId::NablaE3, "NABLA_E3", K::FiniteDifference,
       "nabla_Y E3T = c3 AY + <Y,E1T>E1T - <Y,E2T>E2T"},
      {IdentityId::GradAngle, "GRAD_ANGLE", K::FiniteDifference,
       "grad c3 = -AE3T + c1 E1T - c2 E2T"},
      {IdentityId::LemmaDivF, "LEMMA_DIVF", K::FiniteDifference,
       "Div(f c3 E3T) = 2fc3(c2^2-c1^2) - f<AE3T,E3T> + 2f^2c3^2 + c3<grad f,E3T>"},
      {IdentityId::LemmaDivA, "LEMMA_DIVA", K::FiniteDifference,
       "Div(c3 AE3T) = -|AE3T|^2 + 2c3<grad f,E3T> + c3^2|A|^2 + 2c3^2(1-c3^2) + ..."},
      {IdentityId::Delta2, "DELTA2", K::FiniteDifference, "1/2 Lap|A|^2, expanded form"},
      {IdentityId::Delta3, "DELTA3", K::FiniteDifference, "1/2 Lap|A|^2, divergence form"},
      {IdentityId::DeltaCmc, "DELTA_CMC", K::FiniteDifference,
       "1/2 Lap|A|^2 for constant mean curvature"},
      {IdentityId::DeltaAngle, "DELTA_ANGLE", K::FiniteDifference, "1/2 Lap c3^2"},
      {IdentityId::DeltaAAngle, "DELTA_A_ANGLE", K::FiniteDifference, "1/2 Lap(|A|^2 + 2c3^2)"},
      {IdentityId::Remark, "REMARK", K::Algebraic,
       "2f<AE3T,E3T> = |AE3T|^2 + (1-c3^2)(4f^2-|A|^2)/2"},
      {IdentityId::FrameIndep, "FRAME_INDEP", K::Algebraic,
       "sum <[R(X_i,X_j),A]X_i,AX_j> = 2K(|A|^2-2f^2) in every orthonormal frame"},
  };
  return all;
}

const IdentityInfo& info(IdentityId id) {
  for (const auto& i : identities()) {
    if (i.id == id) return i;
  }
  throw InvalidArgument("unregistered identity");
}

std::string_view name(IdentityId id) { return info(id).name; }

IdentityId parse_identity(std::string_view tag) {
  for (const auto& i : identities()) {
    if (i.name == tag) return i.id;
  }
  throw UnknownName("unknown identity '" + std::string(tag) + "'");
}

PointTerms pointwise_terms(const SurfacePointData& d, const Vec2& grad_f) {
  PointTerms p;
  p.f = d.f;
  p.norm_a2 = d.norm_a2;
  p.K = d.K;
  p.c1 = d.c[0];
  p.c2 = d.c[1];
  p.c3 = d.c[2];
  p.e1t = d.etop[0];
  p.e2t = d.etop[1];
  p.e3t = d.etop[2];
  p.grad_f = grad_f;
  p.ae3t = d.A * p.e3t;
  p.ae3t_e3t = d.inner(p.ae3t, p.e3t);
  p.ae3t_sq = d.inner(p.ae3t, p.ae3t);
  p.ae1t_e1t = d.inner(d.A * p.e1t, p.e1t);
  p.ae2t_e2t = d.inner(d.A * p.e2t, p.e2t);
  p.ae3t_e1t = d.inner(p.ae3t, p.e1t);
  p.ae3t_e2t = d.inner(p.ae3t, p.e2t);
  p.grad_f_sq = d.inner(grad_f, grad_f);
  p.grad_f_e3t = d.inner(grad_f, p.e3t);
  p.c21 = p.c2 * p.c2 - p.c1 * p.c1;
  p.angle_defect = p.c3 * p.c3 * (1.0 - p.c3 * p.c3);
  return p;
}

double rhs_delta2(const PointTerms& p, const DivergenceTerms& d) {
  const double gap = p.norm_a2 - 2.0 * p.f * p.f;
  return d.nabla_a2 + 2.0 * d.div_a_grad_f - 4.0 * p.grad_f_sq - 4.0 * p.c3 * p.grad_f_e3t +
         2.0 * p.K * gap + 4.0 * p.c3 * p.c3 * gap - 8.0 * p.f * p.c3 * p.c21 +
         4.0 * p.f * p.ae3t_e3t + 4.0 * p.c3 * p.ae1t_e1t - 4.0 * p.c3 * p.ae2t_e2t +
         4.0 * p.c1 * p.ae3t_e1t - 4.0 * p.c2 * p.ae3t_e2t - 4.0 * p.ae3t_sq;
}

double rhs_delta3(const PointTerms& p, const DivergenceTerms& d) {
  const double gap = p.norm_a2 - 2.0 * p.f * p.f;
  return d.nabla_a2 - 4.0 * p.grad_f_sq - 8.0 * p.c3 * p.grad_f_e3t + 2.0 * d.div_a_grad_f +
         4.0 * d.div_c3_ae3t - 4.0 * d.div_f_c3_e3t + 2.0 * p.K * gap - 8.0 * p.angle_defect;
}

double rhs_delta_cmc(const PointTerms& p, const DivergenceTerms& d) {
  const double gap = p.norm_a2 - 2.0 * p.f * p.f;
  return d.nabla_a2 + 4.0 * d.div_c3_ae3t - 4.0 * d.div_f_c3_e3t + 2.0 * p.K * gap -
         8.0 * p.angle_defect;
}

double rhs_delta_angle(const PointTerms& p, const DivergenceTerms& d) {
  const double c3sq = p.c3 * p.c3;
  return -d.div_f_c3_e3t - p.c3 * p.grad_f_e3t + 2.0 * p.c3 * p.ae2t_e2t - 2.0 * p.c3 * p.ae1t_e1t +
         2.0 * p.c2 * p.ae3t_e2t - 2.0 * p.c1 * p.ae3t_e1t +
         c3sq * (2.0 * p.f * p.f - 3.0 - p.norm_a2) - p.f * p.ae3t_e3t + p.ae3t_sq + 1.0 -
         p.c21 * p.c21;
}

double rhs_delta_a_angle(const PointTerms& p, const DivergenceTerms& d) {
  const double gap = p.norm_a2 - 2.0 * p.f * p.f;
  const double c3sq = p.c3 * p.c3;
  return d.nabla_a2 - 4.0 * p.grad_f_sq - 2.0 * p.c3 * p.grad_f_e3t + 2.0 * d.div_a_grad_f -
         6.0 * d.div_f_c3_e3t + 2.0 * p.K * gap +
         2.0 * c3sq * (p.norm_a2 + 2.0 * p.f * p.f - 3.0) - 2.0 * p.ae3t_sq -
         2.0 * p.f * p.ae3t_e3t + 2.0 - 2.0 * p.c21 * p.c21;
}

double rhs_lemma_divf(const PointTerms& p) {
  return 2.0 * p.f * p.c3 * p.c21 - p.f * p.ae3t_e3t + 2.0 * p.f * p.f * p.c3 * p.c3 +
         p.c3 * p.grad_f_e3t;
}

double rhs_lemma_diva(const PointTerms& p) {
  const double c3sq = p.c3 * p.c3;
  return -p.ae3t_sq + 2.0 * p.c3 * p.grad_f_e3t + c3sq * p.norm_a2 + 2.0 * c3sq * (1.0 - c3sq) +
         p.c3 * p.ae1t_e1t - p.c3 * p.ae2t_e2t + p.c1 * p.ae3t_e1t - p.c2 * p.ae3t_e2t;
}

Vec2 rhs_codazzi(const SurfacePointData& d, const PointTerms& p) {
  // X = d_s, Y = d_t: <d_i, E3T> is (g E3T)_i.
  const Vec2 pairing = d.g * p.e3t;
  return 2.0 * p.c3 * Vec2(pairing(1), -pairing(0));
}

Vec2 rhs_trace_nabla_a(const PointTerms& p) { return 2.0 * p.grad_f + 2.0 * p.c3 * p.e3t; }

Vec2 rhs_grad_angle(const PointTerms& p) { return -p.ae3t + p.c1 * p.e1t - p.c2 * p.e2t; }

Mat2 rhs_nabla_e3(const SurfacePointData& d, const PointTerms& p) {
  const Vec2 pair1 = d.g * p.e1t;
  const Vec2 pair2 = d.g * p.e2t;
  Mat2 out;
  for (int i = 0; i < 2; ++i) {
    out.col(i) = p.c3 * d.A.col(i) + pair1(i) * p.e1t - pair2(i) * p.e2t;
  }
  return out;
}

double remark_residual(const PointTerms& p) {
  const double lhs = 2.0 * p.f * p.ae3t_e3t;
  const double rhs = p.ae3t_sq + 0.5 * (1.0 - p.c3 * p.c3) * (4.0 * p.f * p.f - p.norm_a2);
  return std::abs(lhs - rhs);
}

namespace {

// Orthonormal chart-component frame from Gram-Schmidt on (d_s, d_t).
Eigen::Matrix2d orthonormal_basis(const Mat2& g) {
  const Vec2 x1 = Vec2(1.0, 0.0) / std::sqrt(g(0, 0));
  Vec2 x2 = Vec2(0.0, 1.0) - x1.dot(g * Vec2(0.0, 1.0)) * x1;
  x2 /= std::sqrt(x2.dot(g * x2));
  Eigen::Matrix2d b;
  b.col(0) = x1;
  b.col(1) = x2;
  return b;
}

// A in the Gram-Schmidt orthonormal frame: <A x_b, x_a> from the symmetrised h.
Mat2 orthonormal_shape_operator(const SurfacePointData& d) {
  const Mat2 b = orthonormal_basis(d.g);
  const Mat2 hs = 0.5 * (d.h + d.h.transpose());
  return b.transpose() * hs * b;
}

// sum_{i,j} <[R(e_i,e_j),A]e_i, Ae_j> where e_i is an orthonormal frame and
// m holds A in that frame.
double commutator_trace_in(const Mat2& m, double K) {
  auto curvature = [K](const Vec2& x, const Vec2& y, const Vec2& z) -> Vec2 {
    return K * (y.dot(z) * x - x.dot(z) * y);
  };
  const Vec2 e[2] = {Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vec2 commutator = curvature(e[i], e[j], m * e[i]) - m * curvature(e[i], e[j], e[i]);
      sum += commutator.dot(m * e[j]);
    }
  }
  return sum;
}

Mat2 rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

}  // namespace

double commutator_trace(const SurfacePointData& d, double K, double angle) {
  const Mat2 r = rotation(angle);
  return commutator_trace_in(r.transpose() * orthonormal_shape_operator(d) * r, K);
}

double commutator_trace_eigenframe(const SurfacePointData& d, double K) {
  const Mat2 m = orthonormal_shape_operator(d);
  Eigen::SelfAdjointEigenSolver<Mat2> eig(m);
  const Mat2 v = eig.eigenvectors();
  return commutator_trace_in(v.transpose() * m * v, K);
}

SurfaceFields compute_fields(const SampledSurface& surface) {
  SurfaceFields F;
  const auto& pts = surface.points;
  F.g = surface.metric();
  F.A = surface.field([](const SurfacePointData& d) { return d.A; });
  F.f = surface.field([](const SurfacePointData& d) { return d.f; });
  F.norm_a2 = surface.field([](const SurfacePointData& d) { return d.norm_a2; });
  F.c3 = surface.field([](const SurfacePointData& d) { return d.c[2]; });
  F.c3sq = surface.field([](const SurfacePointData& d) { return d.c[2] * d.c[2]; });
  F.e3t = surface.field([](const SurfacePointData& d) { return Vec2(d.etop[2]); });

  F.gamma = induced_christoffels(F.g);
  F.nabla_a = covariant_derivative_tensor(F.A, F.gamma);
  F.nabla_a2 = covariant_derivative_norm2(F.nabla_a, F.g);
  F.grad_f = surface_gradient(F.f, F.g);
  F.grad_c3 = surface_gradient(F.c3, F.g);
  F.terms = map_fields([](const SurfacePointData& d, const Vec2& gf) { return pointwise_terms(d, gf); },
                       pts, F.grad_f);

  F.a_grad_f = map_fields([](const Mat2& a, const Vec2& gf) -> Vec2 { return a * gf; }, F.A, F.grad_f);
  F.c3_ae3t = surface.field([](const SurfacePointData& d) -> Vec2 { return d.c[2] * (d.A * d.etop[2]); });
  F.f_c3_e3t = surface.field([](const SurfacePointData& d) -> Vec2 { return d.f * d.c[2] * d.etop[2]; });
  F.div_a_grad_f = surface_divergence(F.a_grad_f, F.g);
  F.div_c3_ae3t = surface_divergence(F.c3_ae3t, F.g);
  F.div_f_c3_e3t = surface_divergence(F.f_c3_e3t, F.g);

  F.lap_a2 = laplace_beltrami(F.norm_a2, F.g);
  F.lap_c3sq = laplace_beltrami(F.c3sq, F.g);
  F.lap_a2_c3sq = laplace_beltrami(
      map_fields([](double a2, double c3sq) { return a2 + 2.0 * c3sq; }, F.norm_a2, F.c3sq), F.g);
  F.nabla_e3t = covariant_derivative_vector(F.e3t, F.gamma);
  return F;
}

namespace {

DivergenceTerms grid_divergences(double nabla_a2, double div_a_grad_f, double div_c3_ae3t,
                                 double div_f_c3_e3t) {
  return {nabla_a2, div_a_grad_f, div_c3_ae3t, div_f_c3_e3t};
}

using RhsFn = double (*)(const PointTerms&, const DivergenceTerms&);

GridField<double> laplacian_residual(const SurfaceFields& F, const GridField<double>& lap, RhsFn rhs) {
  return map_fields(
      [rhs](double l, const PointTerms& p, double n2, double dagf, double dca, double dfc) {
        return std::abs(0.5 * l - rhs(p, grid_divergences(n2, dagf, dca, dfc)));
      },
      lap, F.terms, F.nabla_a2, F.div_a_grad_f, F.div_c3_ae3t, F.div_f_c3_e3t);
}

std::vector<double> frame_angles(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> out(2 * n);
  for (auto& a : out) a = angle(rng);
  return out;
}

}  // namespace

GridField<double> residual_field(IdentityId id, const SampledSurface& surface,
                                 const SurfaceFields& F, std::uint64_t frame_seed) {
  const auto& pts = surface.points;
  switch (id) {
    case IdentityId::Codazzi:
      return map_fields(
          [](const SurfacePointData& d, const PointTerms& p, const Mat2Pair& n) {
            const Vec2 lhs = n[0].col(1) - n[1].col(0);
            return vector_norm(lhs - rhs_codazzi(d, p), d.g);
          },
          pts, F.terms, F.nabla_a);
    case IdentityId::TraceNablaA:
      return map_fields(
          [](const SurfacePointData& d, const PointTerms& p, const Mat2Pair& n) {
            const Vec2 lhs = (n[0] * d.g_inv).col(0) + (n[1] * d.g_inv).col(1);
            return vector_norm(lhs - rhs_trace_nabla_a(p), d.g);
          },
          pts, F.terms, F.nabla_a);
    case IdentityId::NablaE3:
      return map_fields(
          [](const SurfacePointData& d, const PointTerms& p, const Mat2& lhs) {
            return tensor_norm(lhs - rhs_nabla_e3(d, p), d.g);
          },
          pts, F.terms, F.nabla_e3t);
    case IdentityId::GradAngle:
      return map_fields(
          [](const SurfacePointData& d, const PointTerms& p, const Vec2& lhs) {
            return vector_norm(lhs - rhs_grad_angle(p), d.g);
          },
          pts, F.terms, F.grad_c3);
    case IdentityId::LemmaDivF:
      return map_fields([](const PointTerms& p, double lhs) { return std::abs(lhs - rhs_lemma_divf(p)); },
                        F.terms, F.div_f_c3_e3t);
    case IdentityId::LemmaDivA:
      return map_fields([](const PointTerms& p, double lhs) { return std::abs(lhs - rhs_lemma_diva(p)); },
                        F.terms, F.div_c3_ae3t);
    case IdentityId::Delta2:
      return laplacian_residual(F, F.lap_a2, rhs_delta2);
    case IdentityId::Delta3:
      return laplacian_residual(F, F.lap_a2, rhs_delta3);
    case IdentityId::DeltaCmc:
      if (!surface.constant_mean_curvature) {
        throw PreconditionViolated("DELTA_CMC requires a constant mean curvature surface; '" +
                                   surface.chart_name + "' is not one");
      }
      return laplacian_residual(F, F.lap_a2, rhs_delta_cmc);
    case IdentityId::DeltaAngle:
      return laplacian_residual(F, F.lap_c3sq, rhs_delta_angle);
    case IdentityId::DeltaAAngle:
      return laplacian_residual(F, F.lap_a2_c3sq, rhs_delta_a_angle);
    case IdentityId::Remark:
      return surface.field(
          [](const SurfacePointData& d) { return remark_residual(pointwise_terms(d, Vec2::Zero())); });
    case IdentityId::FrameIndep: {
      const auto K = surface.field([](const SurfacePointData& d) { return d.K; });
      return frame_independence_check(surface, K, frame_seed).two_frame;
    }
  }
  throw InvalidArgument("unregistered identity");
}

std::vector<ResidualReport> run_identities(const Chart& chart, std::span<const IdentityId> ids,
                                           std::span<const int> resolutions) {
  validate_resolutions(resolutions);
  for (const IdentityId id : ids) {
    if (id == IdentityId::DeltaCmc && !chart.constant_mean_curvature) {
      throw PreconditionViolated("DELTA_CMC requires a constant mean curvature surface; '" + chart.name +
                                 "' is not one");
    }
  }
  std::vector<std::vector<ResolutionResidual>> rows(ids.size());
  for (const int n : resolutions) {
    const SampledSurface surface = sample_surface(chart, n);
    const SurfaceFields fields = compute_fields(surface);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      rows[k].push_back(summarize_residual(residual_field(ids[k], surface, fields), n));
    }
  }
  std::vector<ResidualReport> out;
  out.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    out.push_back(make_residual_report(std::string(name(ids[k])), std::move(rows[k])));
  }
  return out;
}

ResidualReport identity_residual(IdentityId id, const Chart& chart, std::span<const int> resolutions) {
  const IdentityId ids[] = {id};
  return std::move(run_identities(chart, ids, resolutions).front());
}

GridField<double> combination_residual(const SurfaceFields& F) {
  return map_fields(
      [](const PointTerms& p, double n2, double dagf) {
        const DivergenceTerms d = grid_divergences(n2, dagf, rhs_lemma_diva(p), rhs_lemma_divf(p));
        return std::abs(rhs_delta_a_angle(p, d) - rhs_delta2(p, d) - 2.0 * rhs_delta_angle(p, d));
      },
      F.terms, F.nabla_a2, F.div_a_grad_f);
}

ResidualReport consistency_delta_combination(const Chart& chart, std::span<const int> resolutions) {
  validate_resolutions(resolutions);
  std::vector<ResolutionResidual> rows;
  for (const int n : resolutions) {
    const SampledSurface surface = sample_surface(chart, n);
    rows.push_back(summarize_residual(combination_residual(compute_fields(surface)), n));
  }
  return make_residual_report("DELTA_COMBINATION", std::move(rows));
}

FrameIndependenceResult frame_independence_check(const SampledSurface& surface,
                                                 const GridField<double>& K, std::uint64_t seed) {
  require_same_lattice(surface.points, K);
  const auto angles = frame_angles(surface.points.size(), seed);
  FrameIndependenceResult r;
  r.two_frame = GridField<double>(surface.lattice);
  r.closed_form = GridField<double>(surface.lattice);
  r.eigenframe = GridField<double>(surface.lattice);
  for (std::size_t k = 0; k < surface.points.size(); ++k) {
    if (!surface.points.is_valid(k) || !K.is_valid(k)) continue;
    const SurfacePointData& d = surface.points[k];
    const double kk = K[k];
    const double closed = 2.0 * kk * (d.norm_a2 - 2.0 * d.f * d.f);
    const double ta = commutator_trace(d, kk, angles[2 * k]);
    const double tb = commutator_trace(d, kk, angles[2 * k + 1]);
    const double te = commutator_trace_eigenframe(d, kk);
    r.two_frame.set(k, std::abs(ta - tb));
    r.closed_form.set(k, std::abs(ta - closed));
    r.eigenframe.set(k, std::abs(te - closed));
    r.max_two_frame = std::max(r.max_two_frame, r.two_frame[k]);
    r.max_closed_form = std::max(r.max_closed_form, r.closed_form[k]);
    r.max_eigenframe = std::max(r.max_eigenframe, r.eigenframe[k]);
  }
  return r;
}

}  // namespace solgeo::simons
