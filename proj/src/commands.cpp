#include "solgeo/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "solgeo/ambient.hpp"
#include "solgeo/error.hpp"
#include "solgeo/gapscan.hpp"
#include "solgeo/simons.hpp"
#include "solgeo/surfcalc.hpp"

namespace solgeo::cli {

using Json = nlohmann::ordered_json;

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Deterministic writer: insertion-ordered keys, %.17g floats, null for
// non-finite values, two-space indent.
void write_json(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t n = 0; n < j.size(); ++n) {
        if (n) os << ",\n";
        os << inner;
        write_json(os, j[n], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_real(v) : "null");
      return;
    }
    default:
      os << j.dump();
  }
}

std::string dump(const Json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << "\n";
  return os.str();
}

// Single-line form for CSV comment headers.
std::string dump_compact(const Json& j) {
  std::string s = dump(j);
  std::string out;
  bool in_string = false, escaped = false;
  for (char ch : s) {
    if (in_string) {
      out += ch;
      if (escaped) {
        escaped = false;
      } else if (ch == '\\') {
        escaped = true;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (ch == '"') {
      in_string = true;
      out += ch;
    } else if (ch != '\n' && ch != ' ') {
      out += ch;
    }
  }
  return out;
}

std::string_view format_name(Format f) { return f == Format::Csv ? "csv" : "json"; }

std::vector<int> default_resolutions(Command c) {
  switch (c) {
    case Command::Curvature:
      return {64};
    case Command::Scan:
      return {128};
    default:
      return {32, 64, 128};
  }
}

Json config_echo(Command c, const RunConfig& cfg) {
  Json j;
  j["surface"] = cfg.surface;
  j["params"] = {{"c", cfg.params.c},
                 {"eps", cfg.params.eps},
                 {"R", cfg.params.R},
                 {"r", cfg.params.r},
                 {"rho", cfg.params.rho}};
  j["resolutions"] = cfg.resolutions.value_or(default_resolutions(c));
  j["ids"] = cfg.ids;
  j["tolerance"] = cfg.tolerance ? Json(*cfg.tolerance) : Json(nullptr);
  j["order_min"] = cfg.order_min;
  j["order_max"] = cfg.order_max;
  j["format"] = cfg.format ? Json(std::string(format_name(*cfg.format))) : Json(nullptr);
  j["seed"] = cfg.seed;
  return j;
}

Json header(Command c, const RunConfig& cfg) {
  Json j;
  j["tool"] = "solgeo";
  j["version"] = std::string(kVersion);
  j["command"] = std::string(command_name(c));
  j["config"] = config_echo(c, cfg);
  return j;
}

std::string csv_preamble(Command c, const RunConfig& cfg) {
  std::string s = "# solgeo " + std::string(kVersion) + " " + std::string(command_name(c)) + "\n";
  s += "# config " + dump_compact(config_echo(c, cfg)) + "\n";
  return s;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// Table whose rows are joined with commas; values never contain commas or quotes.
struct Csv {
  std::string text;
  void row(const std::vector<std::string>& cells) {
    for (std::size_t n = 0; n < cells.size(); ++n) {
      if (n) text += ',';
      text += cells[n];
    }
    text += '\n';
  }
};

Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// ---- catalog ------------------------------------------------------------

CommandOutput run_catalog(const RunConfig& cfg, Format fmt) {
  Json list = Json::array();
  Csv csv;
  csv.row({"name", "s_min", "s_max", "t_min", "t_max", "periodic_s", "periodic_t", "masked_t_rings",
           "constant_mean_curvature", "parameters", "orientation"});
  for (const auto& name : catalog::names()) {
    const Chart ch = catalog::make(name, cfg.params);
    std::string params;
    Json pj = Json::object();
    for (const auto& [k, v] : ch.parameters) {
      if (!params.empty()) params += ';';
      params += k + "=" + format_real(v);
      pj[k] = v;
    }
    csv.row({ch.name, format_real(ch.s_range.lo), format_real(ch.s_range.hi), format_real(ch.t_range.lo),
             format_real(ch.t_range.hi), csv_bool(ch.periodic_s), csv_bool(ch.periodic_t),
             std::to_string(ch.masked_t_rings), csv_bool(ch.constant_mean_curvature), params,
             ch.orientation});
    list.push_back({{"name", ch.name},
                    {"s_range", {ch.s_range.lo, ch.s_range.hi}},
                    {"t_range", {ch.t_range.lo, ch.t_range.hi}},
                    {"periodic_s", ch.periodic_s},
                    {"periodic_t", ch.periodic_t},
                    {"masked_t_rings", ch.masked_t_rings},
                    {"constant_mean_curvature", ch.constant_mean_curvature},
                    {"parameters", pj},
                    {"orientation", ch.orientation}});
  }
  CommandOutput out;
  if (fmt == Format::Json) {
    Json j = header(Command::Catalog, cfg);
    j["surfaces"] = list;
    out.report = dump(j);
  } else {
    out.report = csv_preamble(Command::Catalog, cfg) + csv.text;
  }
  out.summary = std::to_string(catalog::names().size()) + " catalog surfaces";
  return out;
}

// ---- curvature ----------------------------------------------------------

struct Check {
  std::string quantity;
  double value = 0.0;
  std::optional<double> target;
  double tolerance = 0.0;
  // With a target: |value - target| <= tolerance. Without: report only.
  bool passed() const { return !target || std::abs(value - *target) <= tolerance; }
};

struct MinMax {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

CommandOutput run_curvature(const RunConfig& cfg, Format fmt, const std::vector<int>& res) {
  const Chart chart = catalog::make(cfg.surface, cfg.params);
  const double tol_sec = cfg.tolerance.value_or(kAlgebraicTolerance);
  const double tol_geo = cfg.tolerance.value_or(kResidualTolerance);
  std::vector<Check> checks;

  // Frame components are left-invariant, so one evaluation per plane suffices.
  const struct {
    int a, b;
    double expected;
    const char* label;
  } planes[] = {{1, 3, -1.0, "E1E3"}, {2, 3, -1.0, "E2E3"}, {1, 2, 1.0, "E1E2"}};
  for (const auto& pl : planes) {
    const double k = sectional_curvature(frame_vector(pl.a), frame_vector(pl.b));
    checks.push_back({std::string("sectional_") + pl.label, k, pl.expected, tol_sec});
  }

  const AmbientPoint start{0.3, -0.7, 0.2};
  const auto path = geodesic_flow(start, CoordinateVector{0.0, 0.0, 1.0}, 10.0, 1e-3);
  double dx = 0.0, dy = 0.0, dspeed = 0.0;
  for (const auto& s : path) {
    dx = std::max(dx, std::abs(s.point.x - start.x));
    dy = std::max(dy, std::abs(s.point.y - start.y));
    dspeed = std::max(dspeed, std::abs(norm(to_frame(s.point, s.velocity)) - 1.0));
  }
  checks.push_back({"vertical_geodesic_x_drift", dx, 0.0, tol_geo});
  checks.push_back({"vertical_geodesic_y_drift", dy, 0.0, tol_geo});
  checks.push_back({"vertical_geodesic_speed_drift", dspeed, std::nullopt, 0.0});

  const int n = res.back();
  const SampledSurface surface = sample_surface(chart, n);
  const simons::SurfaceFields F = simons::compute_fields(surface);
  const auto k_intr = gaussian_curvature_intrinsic(F.g);
  MinMax K, Ki, f, a2, nabla;
  double sff = 0.0;
  for (std::size_t k = 0; k < surface.points.size(); ++k) {
    if (!surface.points.is_valid(k)) continue;
    const auto& d = surface.points[k];
    K.add(d.K);
    f.add(d.f);
    a2.add(d.norm_a2);
    sff = std::max(sff, std::sqrt(std::max(0.0, d.norm_a2)));
    if (k_intr.is_valid(k)) Ki.add(k_intr[k]);
    if (F.nabla_a2.is_valid(k)) nabla.add(F.nabla_a2[k]);
  }
  const bool vertical_leaf = chart.name == "leaf_x" || chart.name == "leaf_y";
  const bool horizontal_leaf = chart.name == "leaf_z";
  auto target = [](bool cond, double v) { return cond ? std::optional<double>(v) : std::nullopt; };
  const double tol_k = cfg.tolerance.value_or(1e-6);
  const double tol_f = cfg.tolerance.value_or(kResidualTolerance);
  checks.push_back({"surface_max_abs_A", sff, target(vertical_leaf, 0.0), tol_f});
  const std::optional<double> k_target =
      vertical_leaf ? std::optional<double>(-1.0) : target(horizontal_leaf, 0.0);
  checks.push_back({"surface_K_min", K.lo, k_target, tol_k});
  checks.push_back({"surface_K_max", K.hi, k_target, tol_k});
  checks.push_back({"surface_K_intrinsic_min", Ki.lo, std::nullopt, 0.0});
  checks.push_back({"surface_K_intrinsic_max", Ki.hi, std::nullopt, 0.0});
  checks.push_back({"surface_f_min", f.lo, target(horizontal_leaf, 0.0), tol_f});
  checks.push_back({"surface_f_max", f.hi, target(horizontal_leaf, 0.0), tol_f});
  checks.push_back({"surface_norm_A2_min", a2.lo, target(horizontal_leaf, 2.0), tol_k});
  checks.push_back({"surface_norm_A2_max", a2.hi, target(horizontal_leaf, 2.0), tol_k});
  checks.push_back({"surface_nabla_A2_max", nabla.hi, target(horizontal_leaf, 0.0), tol_k});

  bool all = true;
  for (const auto& c : checks) all = all && c.passed();
  CommandOutput out;
  out.exit_code = all ? 0 : 1;
  if (fmt == Format::Json) {
    Json j = header(Command::Curvature, cfg);
    j["surface"] = chart.name;
    j["resolution"] = n;
    Json rows = Json::array();
    for (const auto& c : checks) {
      rows.push_back({{"quantity", c.quantity},
                      {"value", real_or_null(c.value)},
                      {"target", c.target ? Json(*c.target) : Json(nullptr)},
                      {"tolerance", c.target ? Json(c.tolerance) : Json(nullptr)},
                      {"pass", c.passed()}});
    }
    j["checks"] = rows;
    j["pass"] = all;
    out.report = dump(j);
  } else {
    Csv csv;
    csv.row({"quantity", "value", "target", "tolerance", "pass"});
    for (const auto& c : checks) {
      csv.row({c.quantity, format_real(c.value), c.target ? format_real(*c.target) : "",
               c.target ? format_real(c.tolerance) : "", csv_bool(c.passed())});
    }
    out.report = csv_preamble(Command::Curvature, cfg) + csv.text;
  }
  out.summary = std::string("curvature checks ") + (all ? "passed" : "FAILED");
  return out;
}

// ---- verify / converge --------------------------------------------------

struct IdentityOutcome {
  simons::IdentityInfo info;
  ResidualReport report;
  double tolerance = 0.0;
  std::string criterion;  ///< "tolerance", "order" or "fail"
  bool pass() const { return criterion != "fail"; }
};

std::vector<simons::IdentityId> select_ids(const RunConfig& cfg, const Chart& chart, bool fd_only) {
  std::vector<simons::IdentityId> ids;
  if (!cfg.ids.empty()) {
    for (const auto& tag : cfg.ids) {
      const auto id = simons::parse_identity(tag);
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    return ids;
  }
  for (const auto& info : simons::identities()) {
    if (info.id == simons::IdentityId::DeltaCmc && !chart.constant_mean_curvature) continue;
    if (fd_only && info.kind != simons::IdentityKind::FiniteDifference) continue;
    ids.push_back(info.id);
  }
  return ids;
}

std::vector<IdentityOutcome> evaluate_identities(const RunConfig& cfg, const Chart& chart,
                                                 const std::vector<simons::IdentityId>& ids,
                                                 const std::vector<int>& res) {
  for (const auto id : ids) {
    if (id == simons::IdentityId::DeltaCmc && !chart.constant_mean_curvature) {
      throw PreconditionViolated("DELTA_CMC applies only to constant mean curvature surfaces; '" +
                                 chart.name + "' is not one");
    }
  }
  std::vector<std::vector<ResolutionResidual>> rows(ids.size());
  for (const int n : res) {
    const SampledSurface surface = sample_surface(chart, n);
    const simons::SurfaceFields fields = simons::compute_fields(surface);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      rows[k].push_back(summarize_residual(simons::residual_field(ids[k], surface, fields, cfg.seed), n));
    }
  }
  std::vector<IdentityOutcome> out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    IdentityOutcome o{simons::info(ids[k]),
                      make_residual_report(std::string(simons::name(ids[k])), std::move(rows[k])), 0.0, "fail"};
    const bool algebraic = o.info.kind == simons::IdentityKind::Algebraic;
    const double pinned = ids[k] == simons::IdentityId::FrameIndep
                              ? kFrameTolerance
                              : (algebraic ? kAlgebraicTolerance : kResidualTolerance);
    o.tolerance = cfg.tolerance.value_or(pinned);
    const bool within = std::all_of(o.report.rows.begin(), o.report.rows.end(),
                                    [&](const ResolutionResidual& r) { return r.max_abs <= o.tolerance; });
    const auto order = o.report.estimated_order();
    if (within) {
      o.criterion = "tolerance";
    } else if (!algebraic && order && *order >= cfg.order_min && *order <= cfg.order_max) {
      o.criterion = "order";
    }
    out.push_back(std::move(o));
  }
  return out;
}

CommandOutput residual_command(Command c, const RunConfig& cfg, Format fmt, const std::vector<int>& res) {
  const bool converge = c == Command::Converge;
  if (converge && res.size() < 3) {
    throw InvalidArgument("converge needs at least three resolutions to estimate an order");
  }
  const Chart chart = catalog::make(cfg.surface, cfg.params);
  const auto ids = select_ids(cfg, chart, converge);
  const auto outcomes = evaluate_identities(cfg, chart, ids, res);
  bool all = true;
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    all = all && o.pass();
    failed += !o.pass();
  }
  CommandOutput out;
  out.exit_code = all ? 0 : 1;
  auto order_at = [](const IdentityOutcome& o, std::size_t n) -> double {
    if (n == 0 || o.report.orders.empty()) return std::numeric_limits<double>::quiet_NaN();
    return o.report.orders[n - 1];
  };
  if (fmt == Format::Json) {
    Json j = header(c, cfg);
    j["surface"] = chart.name;
    Json list = Json::array();
    for (const auto& o : outcomes) {
      Json rows = Json::array();
      for (std::size_t n = 0; n < o.report.rows.size(); ++n) {
        const auto& r = o.report.rows[n];
        rows.push_back({{"resolution", r.resolution},
                        {"h", r.h},
                        {"max_res", real_or_null(r.max_abs)},
                        {"mean_res", real_or_null(r.mean_abs)},
                        {"nodes", r.nodes},
                        {"order", real_or_null(order_at(o, n))}});
      }
      const auto est = o.report.estimated_order();
      list.push_back({{"identity", o.report.identity},
                      {"kind", o.info.kind == simons::IdentityKind::Algebraic ? "algebraic" : "finite_difference"},
                      {"statement", std::string(o.info.statement)},
                      {"tolerance", o.tolerance},
                      {"rows", rows},
                      {"estimated_order", est ? real_or_null(*est) : Json(nullptr)},
                      {"criterion", o.criterion},
                      {"pass", o.pass()}});
    }
    j["identities"] = list;
    j["pass"] = all;
    out.report = dump(j);
  } else {
    Csv csv;
    if (converge) {
      csv.row({"identity", "resolution", "h", "max_res", "mean_res", "nodes", "order"});
    } else {
      csv.row({"identity", "resolution", "max_res", "mean_res", "order"});
    }
    for (const auto& o : outcomes) {
      for (std::size_t n = 0; n < o.report.rows.size(); ++n) {
        const auto& r = o.report.rows[n];
        const double ord = order_at(o, n);
        const std::string ord_s = std::isnan(ord) && (n == 0 || o.report.orders.empty()) ? "" : format_real(ord);
        if (converge) {
          csv.row({o.report.identity, std::to_string(r.resolution), format_real(r.h), format_real(r.max_abs),
                   format_real(r.mean_abs), std::to_string(r.nodes), ord_s});
        } else {
          csv.row({o.report.identity, std::to_string(r.resolution), format_real(r.max_abs),
                   format_real(r.mean_abs), ord_s});
        }
      }
    }
    for (const auto& o : outcomes) {
      const auto est = o.report.estimated_order();
      csv.text += "# result " + o.report.identity + " " + (o.pass() ? "pass" : "fail") +
                  " criterion=" + o.criterion + " tolerance=" + format_real(o.tolerance) +
                  " estimated_order=" + (est ? format_real(*est) : std::string("none")) + "\n";
    }
    out.report = csv_preamble(c, cfg) + csv.text;
  }
  out.summary = std::to_string(outcomes.size() - failed) + "/" + std::to_string(outcomes.size()) +
                " identities passed on " + chart.name;
  return out;
}

// ---- scan ---------------------------------------------------------------

CommandOutput run_scan(const RunConfig& cfg, const std::vector<int>& res) {
  const Chart chart = catalog::make(cfg.surface, cfg.params);
  const gapscan::GapReport r = gapscan::scan(chart, res.back());
  Json j = header(Command::Scan, cfg);
  j["surface"] = r.surface;
  j["resolution"] = r.resolution;
  j["nodes"] = r.nodes;
  j["closed"] = r.closed;
  static const char* quad[] = {"omitted", "closed", "masked"};
  j["quadrature"] = quad[static_cast<int>(r.quadrature)];
  j["integrals_omitted"] = !r.integrals.has_value();
  j["f_range"] = {real_or_null(r.f_min), real_or_null(r.f_max)};
  j["e_range"] = {real_or_null(r.e_min), real_or_null(r.e_max)};
  Json th = Json::array();
  for (const auto& t : r.theorems) {
    th.push_back({{"id", t.id},
                  {"expression", t.expression},
                  {"fraction", t.fraction},
                  {"min", real_or_null(t.min)},
                  {"max", real_or_null(t.max)}});
  }
  j["theorems"] = th;
  if (r.integrals) {
    const auto& ic = *r.integrals;
    const bool asserted = r.quadrature == gapscan::Quadrature::Closed;
    j["integrals"] = {{"area", ic.area},
                      {"E", ic.e},
                      {"nabla_A2", ic.nabla_a2},
                      {"nabla_A2_plus_E", ic.nabla_a2_plus_e},
                      {"lap_A2", ic.lap_a2},
                      {"div_A_grad_f", ic.div_a_grad_f},
                      {"tolerance", ic.tolerance},
                      {"asserted", asserted},
                      {"lap_A2_within", ic.lap_a2_within},
                      {"div_A_grad_f_within", ic.div_a_grad_f_within}};
  } else {
    j["integrals"] = nullptr;
  }
  Json flags = Json::array();
  for (const auto& f : gapscan::open_question_flags()) {
    flags.push_back({{"id", f.id}, {"printed", f.printed}, {"implemented", f.implemented}, {"note", f.note}});
  }
  j["open_question_flags"] = flags;
  j["pass"] = r.passed();
  CommandOutput out;
  out.exit_code = r.passed() ? 0 : 1;
  out.report = dump(j);
  out.summary = "gap scan of " + r.surface + (r.passed() ? " passed" : " FAILED");
  return out;
}

double number(const Json& v, const std::string& key) {
  if (!v.is_number()) throw InvalidArgument("config key '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "catalog") return Command::Catalog;
  if (name == "curvature") return Command::Curvature;
  if (name == "verify") return Command::Verify;
  if (name == "converge") return Command::Converge;
  if (name == "scan") return Command::Scan;
  throw UnknownName("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Catalog:
      return "catalog";
    case Command::Curvature:
      return "curvature";
    case Command::Verify:
      return "verify";
    case Command::Converge:
      return "converge";
    case Command::Scan:
      return "scan";
  }
  return "unknown";
}

RunConfig parse_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  RunConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "surface") {
      if (!v.is_string()) throw InvalidArgument("config key 'surface' must be a string");
      cfg.surface = v.get<std::string>();
    } else if (key == "params") {
      if (!v.is_object()) throw InvalidArgument("config key 'params' must be an object");
      for (auto p = v.begin(); p != v.end(); ++p) {
        const double x = number(p.value(), "params." + p.key());
        if (p.key() == "c") cfg.params.c = x;
        else if (p.key() == "eps") cfg.params.eps = x;
        else if (p.key() == "R") cfg.params.R = x;
        else if (p.key() == "r") cfg.params.r = x;
        else if (p.key() == "rho") cfg.params.rho = x;
        else throw InvalidArgument("unknown surface parameter '" + p.key() + "'");
      }
    } else if (key == "resolutions") {
      if (!v.is_array()) throw InvalidArgument("config key 'resolutions' must be an array");
      std::vector<int> res;
      for (const auto& n : v) {
        if (!n.is_number_integer()) throw InvalidArgument("resolutions must be integers");
        const auto value = n.get<long long>();
        if (value < 8 || value > 100000) throw InvalidArgument("resolutions must lie in [8, 100000]");
        res.push_back(static_cast<int>(value));
      }
      validate_resolutions(res);
      cfg.resolutions = res;
    } else if (key == "ids") {
      if (!v.is_array()) throw InvalidArgument("config key 'ids' must be an array");
      for (const auto& s : v) {
        if (!s.is_string()) throw InvalidArgument("ids must be strings");
        simons::parse_identity(s.get<std::string>());
        cfg.ids.push_back(s.get<std::string>());
      }
    } else if (key == "tolerance") {
      const double t = number(v, key);
      if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("tolerance must be positive and finite");
      cfg.tolerance = t;
    } else if (key == "order_min") {
      cfg.order_min = number(v, key);
    } else if (key == "order_max") {
      cfg.order_max = number(v, key);
    } else if (key == "format") {
      const std::string f = v.is_string() ? v.get<std::string>() : "";
      if (f == "csv") cfg.format = Format::Csv;
      else if (f == "json") cfg.format = Format::Json;
      else throw InvalidArgument("format must be \"csv\" or \"json\"");
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw InvalidArgument("seed must be an unsigned integer");
      cfg.seed = v.get<std::uint64_t>();
    } else {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  if (!(cfg.order_min < cfg.order_max)) throw InvalidArgument("order_min must be below order_max");
  return cfg;
}

CommandOutput run(Command command, const RunConfig& cfg) {
  const std::vector<int> res = cfg.resolutions.value_or(default_resolutions(command));
  validate_resolutions(res);
  Format fmt = cfg.format.value_or(command == Command::Scan ? Format::Json : Format::Csv);
  switch (command) {
    case Command::Catalog:
      return run_catalog(cfg, fmt);
    case Command::Curvature:
      return run_curvature(cfg, fmt, res);
    case Command::Verify:
    case Command::Converge:
      return residual_command(command, cfg, fmt, res);
    case Command::Scan:
      if (fmt != Format::Json) throw InvalidArgument("scan writes a JSON GapReport; use --format json");
      return run_scan(cfg, res);
  }
  throw InvalidArgument("unknown command");
}

}  // namespace solgeo::cli
