// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "solgeo/ambient.hpp"
#include "solgeo/gapscan.hpp"
#include "solgeo/simons.hpp"
#include "solgeo/surfcalc.hpp"

using namespace solgeo;
using simons::IdentityId;

namespace {

constexpr double kSectionalTol = 1e-10;
constexpr double kSffTol = 1e-8;
constexpr double kCurvatureTol = 1e-6;
constexpr double kMeanCurvatureTol = 1e-8;
constexpr double kDriftTol = 1e-8;
constexpr double kOrderMin = 1.5;
constexpr double kOrderMax = 2.5;
constexpr double kCmcTol = 1e-8;
constexpr double kAlgebraicTol = 1e-10;
constexpr double kFrameTol = 1e-12;
constexpr double kQuarticTol = 1e-10;
constexpr double kBranchTol = 1e-12;
constexpr double kIntegralRelTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_valid(const GridField<double>& f) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f.is_valid(k)) m = std::max(m, std::abs(f[k]));
  return m;
}

Outcome sectional_curvatures() {
  Outcome o;
  const struct {
    int a, b;
    double expected;
  } planes[] = {{1, 3, -1.0}, {2, 3, -1.0}, {1, 2, 1.0}};
  double worst = 0.0;
  for (const auto& p : planes)
    worst = std::max(worst, std::abs(sectional_curvature(frame_vector(p.a), frame_vector(p.b)) - p.expected));
  o.require(worst <= kSectionalTol, "deviation " + num(worst));
  o.detail = o.detail.empty() ? "max deviation " + num(worst) : o.detail;
  return o;
}

Outcome vertical_leaf() {
  Outcome o;
  double sff = 0.0, kdev = 0.0;
  for (const Chart& ch : {catalog::leaf_x(0.0), catalog::leaf_x(0.7), catalog::leaf_y(-0.4)}) {
    const SampledSurface s = sample_surface(ch, 64);
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (!s.points.is_valid(k)) continue;
      sff = std::max(sff, std::sqrt(std::max(0.0, s.points[k].norm_a2)));
      kdev = std::max(kdev, std::abs(s.points[k].K + 1.0));
    }
  }
  o.require(sff <= kSffTol, "max |A| " + num(sff));
  o.require(kdev <= kCurvatureTol, "max |K + 1| " + num(kdev));
  if (o.pass) o.detail = "max |A| " + num(sff) + ", max |K + 1| " + num(kdev);
  return o;
}

Outcome horizontal_leaf() {
  Outcome o;
  const SampledSurface s = sample_surface(catalog::leaf_z(0.25), 64);
  const auto F = simons::compute_fields(s);
  double f = 0.0, K = 0.0, a2 = 0.0;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    if (!s.points.is_valid(k)) continue;
    f = std::max(f, std::abs(s.points[k].f));
    K = std::max(K, std::abs(s.points[k].K));
    a2 = std::max(a2, std::abs(s.points[k].norm_a2 - 2.0));
  }
  const double nabla = max_valid(F.nabla_a2);
  o.require(f <= kMeanCurvatureTol, "|f| " + num(f));
  o.require(K <= kCurvatureTol, "|K| " + num(K));
  o.require(a2 <= kCurvatureTol, "||A|^2 - 2| " + num(a2));
  o.require(nabla <= kCurvatureTol, "|nabla A|^2 " + num(nabla));
  if (o.pass) o.detail = "|f| " + num(f) + ", |K| " + num(K) + ", ||A|^2-2| " + num(a2) + ", |nabla A|^2 " + num(nabla);
  return o;
}

Outcome vertical_geodesic() {
  Outcome o;
  const AmbientPoint start{0.3, -0.7, 0.2};
  double drift = 0.0;
  for (const CoordinateVector& v : {CoordinateVector{0, 0, 1}, CoordinateVector{0, 0, -1}}) {
    for (const auto& s : geodesic_flow(start, v, 10.0, 1e-3))
      drift = std::max({drift, std::abs(s.point.x - start.x), std::abs(s.point.y - start.y)});
  }
  o.require(drift <= kDriftTol, "x,y drift " + num(drift));
  if (o.pass) o.detail = "x,y drift " + num(drift);
  return o;
}

Outcome identity_orders() {
  Outcome o;
  const IdentityId ids[] = {IdentityId::Delta2,   IdentityId::Delta3,      IdentityId::DeltaAngle,
                            IdentityId::DeltaAAngle, IdentityId::Codazzi, IdentityId::TraceNablaA,
                            IdentityId::NablaE3,  IdentityId::GradAngle,   IdentityId::LemmaDivF,
                            IdentityId::LemmaDivA};
  const int res[] = {32, 64, 128};
  double lo = 1e300, hi = -1e300;
  for (const Chart& ch : {catalog::graph(0.1), catalog::torus(2.0, 0.5)}) {
    for (const auto& r : simons::run_identities(ch, ids, res)) {
      const auto est = r.estimated_order();
      if (!est) {
        o.require(false, ch.name + "/" + r.identity + " has no order");
        continue;
      }
      lo = std::min(lo, *est);
      hi = std::max(hi, *est);
      o.require(*est >= kOrderMin && *est <= kOrderMax, ch.name + "/" + r.identity + " order " + num(*est));
    }
  }
  if (o.pass) o.detail = "estimated orders in [" + num(lo) + ", " + num(hi) + "]";
  return o;
}

Outcome delta_cmc() {
  Outcome o;
  const int res[] = {64};
  double worst = 0.0;
  for (const Chart& ch : {catalog::leaf_x(0.0), catalog::leaf_y(0.3), catalog::leaf_z(-0.2)})
    worst = std::max(worst, simons::identity_residual(IdentityId::DeltaCmc, ch, res).max_residual());
  o.require(worst <= kCmcTol, "residual " + num(worst));
  if (o.pass) o.detail = "max residual " + num(worst);
  return o;
}

Outcome algebraic_identities() {
  Outcome o;
  const catalog::SurfaceParams params{};
  double remark = 0.0, combo = 0.0, frame = 0.0;
  for (const auto& name : catalog::names()) {
    const SampledSurface s = sample_surface(catalog::make(name, params), 64);
    const auto F = simons::compute_fields(s);
    remark = std::max(remark, max_valid(simons::residual_field(IdentityId::Remark, s, F)));
    combo = std::max(combo, max_valid(simons::combination_residual(F)));
    frame = std::max(frame, max_valid(simons::residual_field(IdentityId::FrameIndep, s, F)));
  }
  o.require(remark <= kAlgebraicTol, "remark " + num(remark));
  o.require(combo <= kAlgebraicTol, "combination " + num(combo));
  o.require(frame <= kFrameTol, "two-frame " + num(frame));
  if (o.pass) o.detail = "remark " + num(remark) + ", combination " + num(combo) + ", two-frame " + num(frame);
  return o;
}

Outcome quartic_identity() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> uf(-2.0, 2.0), ux(0.0, 10.0), uc(-1.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    // Admissible: |A|^2 >= 2 f^2 for a symmetric A with trace 2f.
    const double f = uf(rng), S = 2.0 * f * f + ux(rng), c3 = uc(rng);
    const double K = gapscan::gauss_curvature(f, S, c3);
    worst = std::max(worst, std::abs(gapscan::e_term(K, S, f, c3) - 0.5 * gapscan::thm43_quartic(K, S, f)));
  }
  o.require(worst <= kQuarticTol, "residual " + num(worst));
  const auto& flags = gapscan::open_question_flags();
  const bool flagged = !flags.empty() && flags[0].id == "quartic_factor" &&
                       flags[0].printed.find('8') != std::string::npos;
  o.require(flagged, "printed factor 8 not flagged");
  if (o.pass) o.detail = "max |E - quartic/2| " + num(worst) + ", factor flagged";
  return o;
}

Outcome branch_solutions() {
  Outcome o;
  std::mt19937_64 rng(9);
  const double f_min = std::nextafter(std::pow(2.0, 0.25), 2.0);
  std::uniform_real_distribution<double> big(f_min, 3.0), small(0.0, std::pow(2.0, 0.25)),
      small_sq(0.0, std::sqrt(2.0));
  double worst = 0.0;
  int missing = 0, spurious = 0;
  for (int n = 0; n < 1000; ++n) {
    const double f = big(rng), f2 = f * f;
    const auto sol = gapscan::thm42_branch_solutions(f);
    if (!sol) {
      ++missing;
      continue;
    }
    for (const auto& b : *sol) worst = std::max(worst, std::abs((4.0 * f2 - b.S) * (b.S - 2.0 * f2) - 2.0));
  }
  for (int n = 0; n < 1000; ++n) {
    const double f = small(rng);
    if (f * f < std::sqrt(2.0) && gapscan::thm42_branch_solutions(f)) ++spurious;
    if (gapscan::thm42_branch_solutions_sq(small_sq(rng))) ++spurious;
  }
  o.require(missing == 0, std::to_string(missing) + " missing solutions");
  o.require(spurious == 0, std::to_string(spurious) + " spurious solutions");
  o.require(worst <= kBranchTol, "residual " + num(worst));
  if (o.pass) o.detail = "max residual " + num(worst);
  return o;
}

Outcome torus_integrals() {
  Outcome o;
  const auto r = gapscan::scan(catalog::torus(2.0, 0.5), 128);
  if (!r.integrals) {
    o.require(false, "integrals omitted");
    return o;
  }
  const auto& ic = *r.integrals;
  const double bound = kIntegralRelTol * ic.area;
  o.require(std::abs(ic.lap_a2) <= bound, "int Lap|A|^2 " + num(ic.lap_a2));
  o.require(std::abs(ic.div_a_grad_f) <= bound, "int div(A grad f) " + num(ic.div_a_grad_f));
  if (o.pass)
    o.detail = "|int Lap|A|^2| " + num(std::abs(ic.lap_a2)) + ", |int div(A grad f)| " +
               num(std::abs(ic.div_a_grad_f)) + ", bound " + num(bound);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ambient sectional curvatures", 1.0, sectional_curvatures},
      {2, "vertical leaves are totally geodesic with K = -1", 5.0, vertical_leaf},
      {3, "horizontal leaf is flat and minimal with |A|^2 = 2", 5.0, horizontal_leaf},
      {4, "vertical geodesics keep x and y", 0.0, vertical_geodesic},
      {5, "identity suite converges at second order", 120.0, identity_orders},
      {6, "constant mean curvature formula on the leaves", 0.0, delta_cmc},
      {7, "algebraic identities at every node", 0.0, algebraic_identities},
      {8, "E equals half the quartic", 0.0, quartic_identity},
      {9, "branch solutions", 0.0, branch_solutions},
      {10, "closed-surface integrals on the torus", 0.0, torus_integrals},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += "; took " + num(secs) + " s, limit " + num(c.time_limit_s) + " s";
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s (%s; %.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
