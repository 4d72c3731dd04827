#include "location/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "location/solver.hpp"

namespace location {

namespace {

using nlohmann::json;

double require_number(const json& value, const std::string& context) {
  if (!value.is_number()) throw ParseError(context + ": number required");
  return value.get<double>();
}

void reject_unknown(const json& object, std::initializer_list<const char*> keys,
                    const std::string& context) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) {
      throw ParseError(context + ": unknown field \"" + it.key() + "\"");
    }
  }
}

tropical::Scalar optional_side(const json& object, const char* key,
                               const std::string& context) {
  if (!object.contains(key)) return tropical::Scalar::zero();
  return tropical::Scalar{require_number(object.at(key), context + "." + key)};
}

std::size_t grid_count(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("instance: top-level object required");
  reject_unknown(root, {"points", "constraint", "alpha", "audit"}, "instance");

  InstanceFile file;
  if (!root.contains("points") || !root.at("points").is_array()) {
    throw ParseError("points: array required");
  }
  const json& pts = root.at("points");
  if (pts.size() < 2) throw ParseError("points: at least two points required");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string context = "points[" + std::to_string(i) + "]";
    const json& p = pts.at(i);
    if (!p.is_object()) throw ParseError(context + ": object required");
    reject_unknown(p, {"x1", "x2", "w"}, context);
    for (const char* key : {"x1", "x2", "w"}) {
      if (!p.contains(key)) {
        throw ParseError(context + ": missing field \"" + key + "\"");
      }
    }
    file.instance.points.push_back({require_number(p.at("x1"), context + ".x1"),
                                    require_number(p.at("x2"), context + ".x2"),
                                    require_number(p.at("w"), context + ".w")});
  }

  if (root.contains("constraint")) {
    const json& c = root.at("constraint");
    if (!c.is_object()) throw ParseError("constraint: object required");
    reject_unknown(c, {"a1", "b1", "c1", "d1"}, "constraint");
    RotatedRectConstraint cons;
    cons.a1 = optional_side(c, "a1", "constraint");
    cons.b1 = optional_side(c, "b1", "constraint");
    cons.c1 = optional_side(c, "c1", "constraint");
    cons.d1 = optional_side(c, "d1", "constraint");
    file.instance.constraint = cons;
  }

  if (root.contains("alpha")) {
    file.alpha = require_number(root.at("alpha"), "alpha");
    if (!(file.alpha >= 0.0 && file.alpha <= 1.0)) {
      throw ParseError("alpha: value outside [0, 1]");
    }
  }

  if (root.contains("audit")) {
    const json& a = root.at("audit");
    if (!a.is_object()) throw ParseError("audit: object required");
    reject_unknown(a, {"step"}, "audit");
    AuditRequest audit;
    if (a.contains("step")) {
      audit.step = require_number(a.at("step"), "audit.step");
      if (!(audit.step > 0.0)) throw ParseError("audit.step: positive value required");
    }
    file.audit = audit;
  }
  return file;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read instance file: " + path);
  return parse_instance(buffer.str());
}

std::string serialize_instance(const InstanceFile& file) {
  json root;
  json pts = json::array();
  for (const WeightedPoint& p : file.instance.points) {
    pts.push_back({{"x1", p.r1}, {"x2", p.r2}, {"w", p.w}});
  }
  root["points"] = pts;
  if (file.instance.constraint) {
    const RotatedRectConstraint& cons = *file.instance.constraint;
    json c = json::object();
    if (cons.a1.is_finite()) c["a1"] = cons.a1.value();
    if (cons.b1.is_finite()) c["b1"] = cons.b1.value();
    if (cons.c1.is_finite()) c["c1"] = cons.c1.value();
    if (cons.d1.is_finite()) c["d1"] = cons.d1.value();
    root["constraint"] = c;
  }
  root["alpha"] = file.alpha;
  if (file.audit) root["audit"] = {{"step", file.audit->step}};
  return root.dump(2) + "\n";
}

std::string report_to_json(const InstanceFile& file,
                           const SolutionReport& report,
                           const std::optional<VerificationVerdict>& verdict) {
  json root;
  root["alpha"] = file.alpha;
  root["case"] = std::string(to_string(report.case_tag));
  root["exact"] = report.exact;
  root["lambda"] = report.lambda;
  if (report.lambda0) root["lambda0"] = *report.lambda0;
  root["endpoint_alpha0"] = {report.endpoint_alpha0[0], report.endpoint_alpha0[1]};
  root["endpoint_alpha1"] = {report.endpoint_alpha1[0], report.endpoint_alpha1[1]};
  const Point x = report.point(file.alpha);
  root["x"] = {x[0], x[1]};
  if (verdict) {
    root["audit"] = {
        {"grid_min", verdict->grid_min},
        {"grid_gap", verdict->grid_gap},
        {"attainment_residuals",
         {verdict->attainment_residuals[0], verdict->attainment_residuals[1],
          verdict->attainment_residuals[2]}},
        {"endpoints_feasible", verdict->endpoints_feasible},
        {"infeasible_at_resolution", verdict->infeasible_at_resolution},
        {"pass", verdict->pass},
    };
  }
  return root.dump(2) + "\n";
}

void write_contours(const ProblemInstance& instance,
                    const SolutionReport& report, const GridSpec& window,
                    const std::string& path) {
  if (!window.valid()) {
    throw std::invalid_argument("write_contours: invalid window");
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open contour file: " + path);

  const double lambda0 = report.lambda0 ? *report.lambda0 : report.lambda;
  const auto emit = [&](double x1, double x2) {
    const Point x{x1, x2};
    const double phi = evaluate_objective(instance.points, x);
    const double phi1 =
        instance.constraint
            ? evaluate_constraint(*instance.constraint, x)
            : -std::numeric_limits<double>::infinity();
    const double psi = std::max(phi - lambda0, phi1);
    char line[200];
    std::snprintf(line, sizeof line, "%.10g,%.10g,%.10g,%.10g,%.10g\n", x1, x2,
                  phi, phi1, psi);
    out << line;
  };

  out << "x1,x2,phi,phi1,psi\n";
  const std::size_t n1 = grid_count(window.x1_min, window.x1_max, window.step);
  const std::size_t n2 = grid_count(window.x2_min, window.x2_max, window.step);
  for (std::size_t i = 0; i < n1; ++i) {
    const double x1 = window.x1_min + static_cast<double>(i) * window.step;
    for (std::size_t j = 0; j < n2; ++j) {
      emit(x1, window.x2_min + static_cast<double>(j) * window.step);
    }
  }
  emit(report.endpoint_alpha0[0], report.endpoint_alpha0[1]);
  emit(report.endpoint_alpha1[0], report.endpoint_alpha1[1]);

  out.flush();
  if (!out) throw IoError("cannot write contour file: " + path);
}

}  // namespace location
