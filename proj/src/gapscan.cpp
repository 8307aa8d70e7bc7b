#include "solgeo/gapscan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "solgeo/error.hpp"
#include "solgeo/simons.hpp"
#include "solgeo/surfcalc.hpp"

namespace solgeo::gapscan {

double e_term(double K, double S, double f, double c3) {
  const double c3sq = c3 * c3;
  return 2.0 * K * (S - 2.0 * f * f) - 8.0 * c3sq * (1.0 - c3sq);
}

double e_term(const SurfacePointData& d) { return e_term(d.K, d.norm_a2, d.f, d.c[2]); }

double gauss_curvature(double f, double S, double c3) {
  return 2.0 * c3 * c3 - 1.0 + 2.0 * f * f - 0.5 * S;
}

bool thm41_predicate_sq(double f2, double S) { return 2.0 * f2 + 2.0 <= S && S <= 4.0 * f2 - 2.0; }

bool thm41_predicate(double f, double S) { return thm41_predicate_sq(f * f, S); }

bool thm41_predicate(const SurfacePointData& d) { return thm41_predicate(d.f, d.norm_a2); }

double thm41_margin(double f, double S) {
  const double f2 = f * f;
  return std::min(S - 2.0 * f2 - 2.0, 4.0 * f2 - 2.0 - S);
}

double thm42_expression(double K, double S, double f) { return K * (S - 2.0 * f * f); }

bool thm42_predicate(double K, double S, double f) { return thm42_expression(K, S, f) >= 1.0; }

bool thm42_predicate(const SurfacePointData& d) { return thm42_predicate(d.K, d.norm_a2, d.f); }

double thm43_quartic(double K, double S, double f) {
  const double f2 = f * f;
  return 4.0 * K * K + 8.0 * K * S + S * S - 24.0 * f2 * K - 8.0 * f2 * S + 16.0 * f2 * f2 - 4.0;
}

bool thm43_predicate(double K, double S, double f) { return thm43_quartic(K, S, f) >= 0.0; }

bool thm44_predicate(double K, double S, double f) { return thm43_quartic(K, S, f) <= 0.0; }

std::optional<std::array<BranchSolution, 2>> thm42_branch_solutions(double f) {
  return thm42_branch_solutions_sq(f * f);
}

std::optional<std::array<BranchSolution, 2>> thm42_branch_solutions_sq(double f2) {
  const double disc = f2 * f2 - 2.0;
  if (!(disc >= 0.0)) return std::nullopt;
  const double root = std::sqrt(disc);
  return std::array<BranchSolution, 2>{BranchSolution{3.0 * f2 + root, 0.5 * (f2 - root)},
                                       BranchSolution{3.0 * f2 - root, 0.5 * (f2 + root)}};
}

ConstrainedResidual constrained_identity_check(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      std::abs(a * a + b * b + c * c - 1.0) > kUnitConstraintTolerance) {
    throw InvalidArgument("(a, b, c) must be a unit vector");
  }
  const std::array<double, 3> comp{a, b, c};
  auto gram = [&](int k, int l) { return (k == l ? 1.0 : 0.0) - comp[k] * comp[l]; };
  // AE3T = a E1T - b E2T
  const std::array<double, 3> coeff{a, -b, 0.0};
  double norm_sq = 0.0, pairing = 0.0;
  for (int k = 0; k < 3; ++k) {
    pairing += coeff[k] * gram(k, 2);
    for (int l = 0; l < 3; ++l) norm_sq += coeff[k] * coeff[l] * gram(k, l);
  }
  const double a2 = a * a, b2 = b * b;
  return {std::abs(norm_sq - ((a2 + b2) - (a2 - b2) * (a2 - b2))), std::abs(pairing - c * (b2 - a2))};
}

const std::vector<OpenQuestionFlag>& open_question_flags() {
  static const std::vector<OpenQuestionFlag> flags{
      {"quartic_factor", "E = 8 * quartic(K, |A|^2, f)", "E = quartic(K, |A|^2, f) / 2",
       "full polynomial expansion gives the factor 1/2; the sign of E, and so the predicate, is the same"},
      {"ae3t_norm_angle_power", "|AE3T|^2 = 1 - c3 - (c1^2 - c2^2)^2",
       "|AE3T|^2 = 1 - c3^2 - (c1^2 - c2^2)^2",
       "Gram matrix <EkT,ElT> = delta_kl - c_k c_l requires the square"},
      {"gauss_substitution_power", "2 c3 = K + 1 - 2f^2 + |A|^2/2", "2 c3^2 = K + 1 - 2f^2 + |A|^2/2",
       "the Gauss equation K = 2c3^2 - 1 + 2f^2 - |A|^2/2 forces the square"},
  };
  return flags;
}

bool GapReport::passed() const {
  if (quadrature != Quadrature::Closed || !integrals) return true;
  return integrals->lap_a2_within && integrals->div_a_grad_f_within;
}

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (lo > hi) lo = hi = std::numeric_limits<double>::quiet_NaN();
  }
};

}  // namespace

GapReport scan(const Chart& chart, int resolution) {
  if (resolution < 8) throw InvalidArgument("scan resolution must be >= 8");
  const SampledSurface surface = sample_surface(chart, resolution);
  GapReport r;
  r.surface = chart.name;
  r.resolution = resolution;
  r.closed = chart.closed();

  Range f_range, e_range;
  std::array<Range, 4> expr;
  std::array<std::size_t, 4> hits{};
  const auto& pts = surface.points;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!pts.is_valid(k)) continue;
    const SurfacePointData& d = pts[k];
    const double S = d.norm_a2;
    ++r.nodes;
    f_range.add(d.f);
    e_range.add(e_term(d));
    const double quartic = thm43_quartic(d.K, S, d.f);
    expr[0].add(thm41_margin(d.f, S));
    expr[1].add(thm42_expression(d.K, S, d.f));
    expr[2].add(quartic);
    expr[3].add(quartic);
    hits[0] += thm41_predicate(d.f, S);
    hits[1] += thm42_predicate(d.K, S, d.f);
    hits[2] += thm43_predicate(d.K, S, d.f);
    hits[3] += thm44_predicate(d.K, S, d.f);
  }
  f_range.finish();
  e_range.finish();
  r.f_min = f_range.lo;
  r.f_max = f_range.hi;
  r.e_min = e_range.lo;
  r.e_max = e_range.hi;
  static const std::array<const char*, 4> ids{"thm41", "thm42", "thm43", "thm44"};
  static const std::array<const char*, 4> exprs{"min(|A|^2 - 2f^2 - 2, 4f^2 - 2 - |A|^2)", "K(|A|^2 - 2f^2)",
                                                "quartic(K, |A|^2, f)", "quartic(K, |A|^2, f)"};
  for (int n = 0; n < 4; ++n) {
    expr[n].finish();
    r.theorems[n] = {ids[n], exprs[n],
                     r.nodes ? static_cast<double>(hits[n]) / static_cast<double>(r.nodes) : 0.0,
                     expr[n].lo, expr[n].hi};
  }

  if (chart.closed()) {
    r.quadrature = Quadrature::Closed;
  } else if (chart.masked_t_rings > 0) {
    r.quadrature = Quadrature::Masked;
  } else {
    return r;
  }
  const Coverage coverage = r.quadrature == Quadrature::Closed ? Coverage::ClosedOnly : Coverage::ValidNodes;
  const simons::SurfaceFields F = simons::compute_fields(surface);
  const auto one = surface.field([](const SurfacePointData&) { return 1.0; });
  const auto e = surface.field([](const SurfacePointData& d) { return e_term(d); });
  const auto sum = map_fields([](double a, double b) { return a + b; }, F.nabla_a2, e);
  IntegralChecks ic;
  ic.area = integrate(one, F.g, coverage);
  ic.e = integrate(e, F.g, coverage);
  ic.nabla_a2 = integrate(F.nabla_a2, F.g, coverage);
  ic.nabla_a2_plus_e = integrate(sum, F.g, coverage);
  ic.lap_a2 = integrate(F.lap_a2, F.g, coverage);
  ic.div_a_grad_f = integrate(F.div_a_grad_f, F.g, coverage);
  ic.tolerance = kIntegralRelativeTolerance * ic.area;
  ic.lap_a2_within = std::abs(ic.lap_a2) <= ic.tolerance;
  ic.div_a_grad_f_within = std::abs(ic.div_a_grad_f) <= ic.tolerance;
  r.integrals = ic;
  return r;
}

}  // namespace solgeo::gapscan
