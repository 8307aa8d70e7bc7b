#pragma once

// Closed-form right-hand sides of the Simons-type identities for surfaces in
// Sol^3 and the residual harness that checks them against finite-difference
// left-hand sides.
//
// Notation used throughout: c_k = <xi, E_k>, E_k^T the tangent part of E_k,
// f the mean curvature, S = |A|^2 and K the Gaussian curvature.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "solgeo/chart.hpp"
#include "solgeo/immersion.hpp"
#include "solgeo/surfcalc.hpp"

namespace solgeo::simons {

enum class IdentityId {
  Codazzi,      ///< (nabla_X A)Y - (nabla_Y A)X = 2 c3 (<Y,E3T> X - <X,E3T> Y)
  TraceNablaA,  ///< sum_i (nabla_{X_i} A) X_i = 2 grad f + 2 c3 E3T
  NablaE3,      ///< nabla_Y E3T = c3 AY + <Y,E1T> E1T - <Y,E2T> E2T
  GradAngle,    ///< grad c3 = -A E3T + c1 E1T - c2 E2T
  LemmaDivF,    ///< Div(f c3 E3T) in closed form
  LemmaDivA,    ///< Div(c3 A E3T) in closed form
  Delta2,       ///< Laplacian of |A|^2, fully expanded
  Delta3,       ///< Laplacian of |A|^2 with divergence terms grouped
  DeltaCmc,     ///< the grouped form with grad f = 0 (constant-f charts only)
  DeltaAngle,   ///< Laplacian of c3^2
  DeltaAAngle,  ///< Laplacian of |A|^2 + 2 c3^2
  Remark,       ///< 2f<AE3T,E3T> = |AE3T|^2 + (1 - c3^2)(4f^2 - |A|^2)/2
  FrameIndep,   ///< sum <[R(X_i,X_j),A]X_i, AX_j> = 2K(|A|^2 - 2f^2) in any frame
};

enum class IdentityKind {
  Algebraic,         ///< pointwise, no finite differences on either side
  FiniteDifference,  ///< left-hand side from grid derivatives
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  IdentityKind kind;
  std::string_view statement;
};

const std::vector<IdentityInfo>& identities();
const IdentityInfo& info(IdentityId id);
std::string_view name(IdentityId id);
/// Accepts the upper-case tag (e.g. "DELTA_CMC"); throws UnknownName.
IdentityId parse_identity(std::string_view tag);

/// Every scalar that appears on a right-hand side, computed once.
struct PointTerms {
  double f = 0.0;
  double norm_a2 = 0.0;
  double K = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  Vec2 e1t = Vec2::Zero(), e2t = Vec2::Zero(), e3t = Vec2::Zero();
  Vec2 ae3t = Vec2::Zero();  ///< A E3T
  Vec2 grad_f = Vec2::Zero();
  double ae3t_e3t = 0.0;  ///< <AE3T, E3T>
  double ae3t_sq = 0.0;   ///< <AE3T, AE3T>
  double ae1t_e1t = 0.0;
  double ae2t_e2t = 0.0;
  double ae3t_e1t = 0.0;
  double ae3t_e2t = 0.0;
  double grad_f_sq = 0.0;   ///< |grad f|^2
  double grad_f_e3t = 0.0;  ///< <grad f, E3T>
  double c21 = 0.0;         ///< c2^2 - c1^2
  double angle_defect = 0.0;  ///< c3^2 (1 - c3^2)
};

PointTerms pointwise_terms(const SurfacePointData& d, const Vec2& grad_f);

/// Terms of the Laplacian identities that need derivatives of assembled
/// fields. Normally taken from the grid; algebraic checks substitute the
/// closed forms of the divergence lemmas.
struct DivergenceTerms {
  double nabla_a2 = 0.0;      ///< |nabla A|^2
  double div_a_grad_f = 0.0;  ///< Div(A grad f)
  double div_c3_ae3t = 0.0;   ///< Div(c3 A E3T)
  double div_f_c3_e3t = 0.0;  ///< Div(f c3 E3T)
};

// Right-hand sides. The Laplacian identities are stated for half the
// Laplacian of the left-hand quantity.
double rhs_delta2(const PointTerms& p, const DivergenceTerms& d);
double rhs_delta3(const PointTerms& p, const DivergenceTerms& d);
double rhs_delta_cmc(const PointTerms& p, const DivergenceTerms& d);
double rhs_delta_angle(const PointTerms& p, const DivergenceTerms& d);
double rhs_delta_a_angle(const PointTerms& p, const DivergenceTerms& d);
double rhs_lemma_divf(const PointTerms& p);
double rhs_lemma_diva(const PointTerms& p);
Vec2 rhs_codazzi(const SurfacePointData& d, const PointTerms& p);
Vec2 rhs_trace_nabla_a(const PointTerms& p);
Vec2 rhs_grad_angle(const PointTerms& p);
/// Column i is nabla_{d_i} E3T in chart components.
Mat2 rhs_nabla_e3(const SurfacePointData& d, const PointTerms& p);
/// |2f<AE3T,E3T> - |AE3T|^2 - (1 - c3^2)(4f^2 - |A|^2)/2|.
double remark_residual(const PointTerms& p);

/// sum_{i,j} <[R(X_i,X_j),A]X_i, AX_j> for the orthonormal frame obtained by
/// rotating the Gram-Schmidt frame of (d_s, d_t) by `angle`, with the
/// surface curvature R(X,Y)Z = K(<Y,Z>X - <X,Z>Y).
double commutator_trace(const SurfacePointData& d, double K, double angle);
/// The same sum evaluated in an eigenframe of A: K (lambda1 - lambda2)^2.
double commutator_trace_eigenframe(const SurfacePointData& d, double K);

/// Every grid field the identities draw on, computed once per sample.
struct SurfaceFields {
  GridField<Mat2> g;
  GridField<Mat2> A;
  GridField<double> f;
  GridField<double> norm_a2;
  GridField<double> c3;
  GridField<double> c3sq;
  GridField<Vec2> e3t;
  GridField<Mat2Pair> gamma;
  GridField<Mat2Pair> nabla_a;
  GridField<double> nabla_a2;
  GridField<Vec2> grad_f;
  GridField<Vec2> grad_c3;
  GridField<PointTerms> terms;  ///< valid wherever grad f is
  GridField<Vec2> a_grad_f;
  GridField<Vec2> c3_ae3t;
  GridField<Vec2> f_c3_e3t;
  GridField<double> div_a_grad_f;
  GridField<double> div_c3_ae3t;
  GridField<double> div_f_c3_e3t;
  GridField<double> lap_a2;
  GridField<double> lap_c3sq;
  GridField<double> lap_a2_c3sq;
  GridField<Mat2> nabla_e3t;
};

SurfaceFields compute_fields(const SampledSurface& surface);

inline constexpr std::uint64_t kDefaultFrameSeed = 0x5eed5017ULL;

/// |LHS - RHS| per node (g-norms for vector and tensor identities). For
/// FrameIndep this is the difference between two random frames; agreement
/// with the closed form is reported by frame_independence_check.
/// Throws PreconditionViolated for DeltaCmc on a chart without constant f.
GridField<double> residual_field(IdentityId id, const SampledSurface& surface,
                                 const SurfaceFields& fields,
                                 std::uint64_t frame_seed = kDefaultFrameSeed);

ResidualReport identity_residual(IdentityId id, const Chart& chart, std::span<const int> resolutions);

/// All requested identities over all resolutions, sampling each resolution
/// once. Reports come back in the order of `ids`.
std::vector<ResidualReport> run_identities(const Chart& chart, std::span<const IdentityId> ids,
                                           std::span<const int> resolutions);

/// rhs(DeltaAAngle) - rhs(Delta2) - 2 rhs(DeltaAngle) with the divergence
/// lemmas substituted in closed form; no finite differences enter the
/// difference.
GridField<double> combination_residual(const SurfaceFields& fields);
ResidualReport consistency_delta_combination(const Chart& chart, std::span<const int> resolutions);

struct FrameIndependenceResult {
  GridField<double> two_frame;     ///< |T(frame a) - T(frame b)|
  GridField<double> closed_form;   ///< |T(frame a) - 2K(|A|^2 - 2f^2)|
  GridField<double> eigenframe;    ///< |T(eigenframe) - 2K(|A|^2 - 2f^2)|
  double max_two_frame = 0.0;
  double max_closed_form = 0.0;
  double max_eigenframe = 0.0;
};

/// Evaluates the commutator trace in two random orthonormal frames per node
/// (angles drawn from `seed`) with the curvature field `K`.
FrameIndependenceResult frame_independence_check(const SampledSurface& surface,
                                                 const GridField<double>& K, std::uint64_t seed);

}  // namespace solgeo::simons
