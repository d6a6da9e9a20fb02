#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "shapes/farthest.hpp"
#include "shapes/io.hpp"
#include "shapes/optimize.hpp"
#include "shapes/quad_functional.hpp"
#include "shapes/weingarten.hpp"

namespace shapes::cli {
namespace {

using nlohmann::json;

struct ExitError {
  int code;
  std::string message;
};

SupportFn load_shape(const std::string& path) {
  const json j = load_json_file(path);
  SupportFn h = shape_from_json(j);
  const auto conv = convexity(h);
  if (!conv.convex) {
    std::ostringstream msg;
    msg << path << ": not convex (h'' + h = " << conv.worst << " at theta = " << conv.worst_angle << ")";
    throw ExitError{3, msg.str()};
  }
  return h;
}

bool in_class_a(const SupportFn& h) {
  const auto r = class_a_residuals(h);
  const double tol = class_a_tolerance(h);
  return r.perimeter_error <= tol && r.steiner_norm <= tol;
}

SupportFn class_a_or_normalized(const SupportFn& h, std::ostream& err) {
  if (in_class_a(h)) return h;
  err << "warning: shape is not in class A; normalizing\n";
  return normalize_to_class_A(h);
}

json vec(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }

std::string csv_number(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

void write_boundary(std::ostream& os, const std::string& series, const SupportFn& h, int n) {
  const AngleGrid grid(n);
  const auto pts = boundary_points(h, grid);
  for (int i = 0; i < n; ++i) {
    const auto& p = pts[static_cast<std::size_t>(i)];
    os << series << ',' << csv_number(grid.node(i)) << ',' << csv_number(p.x()) << ',' << csv_number(p.y()) << '\n';
  }
}

json info_report(const SupportFn& h) {
  const MinMax mm = min_max_h(h);
  const auto r = class_a_residuals(h);
  const auto conv = convexity(h);
  const CurvatureMeasure cm = curvature_of(h);
  const auto support = cm.support(kSupportThreshold * cm.mass());
  return {{"kind", h.kind()},
          {"perimeter", perimeter(h)},
          {"steiner", vec(steiner(h))},
          {"min_h", mm.min},
          {"max_h", mm.max},
          {"argmin", mm.argmin},
          {"argmax", mm.argmax},
          {"support_size", support.size()},
          {"class_a", {{"perimeter_error", r.perimeter_error}, {"steiner_norm", r.steiner_norm},
                       {"tolerance", class_a_tolerance(h)}}},
          {"convexity", {{"worst", conv.worst}, {"tolerance", conv.tolerance}}}};
}

json farthest_json(const FarthestResult& r) {
  json j = {{"metric", r.metric == Metric::hausdorff ? "hausdorff" : "l2"},
            {"alpha_star", r.alpha_star},
            {"distance", r.distance},
            {"degenerate_flag", r.degenerate},
            {"segment", shape_to_json(SupportFn::segment(r.alpha_star))}};
  if (r.metric == Metric::hausdorff) j["argmax_h"] = r.q_angle;
  return j;
}

json atoms_json(const std::vector<Atom>& atoms) {
  json arr = json::array();
  for (const auto& a : atoms) arr.push_back({{"angle", a.angle}, {"weight", a.weight}});
  return arr;
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ExitError{1, path + ": cannot write"};
  f << text;
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("SHAPES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ExitError{1, "SHAPES_SEED: not an unsigned integer"};
    }
  }
  return flag;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Support-function toolkit for planar convex bodies"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the report here instead of stdout");

  std::string shape_path, shape2_path, coeff_path, plot_path, metric = "both";
  int n = 720;
  int cone_n = 512;
  int restarts = 20;
  int samples = 10000;
  std::uint64_t seed = 1;

  auto* info = app.add_subcommand("info", "Perimeter, Steiner point, extrema, curvature support");
  info->add_option("shape", shape_path)->required();

  auto* distance = app.add_subcommand("distance", "Hausdorff and L2 distance between two shapes");
  distance->add_option("shape1", shape_path)->required();
  distance->add_option("shape2", shape2_path)->required();

  auto* farthest = app.add_subcommand("farthest", "Farthest segment for the Hausdorff and/or L2 distance");
  farthest->add_option("shape", shape_path)->required();
  farthest->add_option("--metric", metric)->check(CLI::IsMember({"hausdorff", "l2", "both"}));
  farthest->add_option("--plot", plot_path, "CSV of boundary points (series,theta,x,y)");
  farthest->add_option("--n", n, "Boundary samples for --plot")->check(CLI::Range(8, 1 << 20));

  auto* maximize = app.add_subcommand("maximize", "Maximize the quadratic functional over class A");
  maximize->add_option("coeffs", coeff_path)->required();
  maximize->add_option("--n", cone_n, "Cone grid size")->check(CLI::Range(64, 1 << 14));
  maximize->add_option("--restarts", restarts)->check(CLI::Range(1, 100000));
  maximize->add_option("--seed", seed);

  auto* check = app.add_subcommand("check", "Sharp inequality residuals");
  check->add_option("shape", shape_path)->required();

  auto* plot = app.add_subcommand("plot", "CSV of boundary points");
  plot->add_option("shape", shape_path)->required();
  plot->add_option("--n", n)->check(CLI::Range(8, 1 << 20));

  auto* g4 = app.add_subcommand("g4", "CSV of the four-point kernel sum over [0, pi]");
  g4->add_option("--samples", samples)->check(CLI::Range(3, 1 << 24));
  g4->add_option("--summary", plot_path, "Write the JSON summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) {
      emit(info_report(load_shape(shape_path)), output, out);
    } else if (distance->parsed()) {
      const SupportFn a = load_shape(shape_path);
      const SupportFn b = load_shape(shape2_path);
      emit({{"hausdorff", hausdorff_distance(a, b)}, {"l2", l2_distance(a, b)}}, output, out);
    } else if (farthest->parsed()) {
      const SupportFn c = class_a_or_normalized(load_shape(shape_path), err);
      json j;
      std::optional<FarthestResult> hr, lr;
      if (metric != "l2") {
        hr = farthest_hausdorff(c);
        j["hausdorff"] = farthest_json(*hr);
      }
      if (metric != "hausdorff") {
        lr = farthest_l2(c);
        j["l2"] = farthest_json(*lr);
      }
      if (hr && lr) j["alpha_gap"] = circular_distance(hr->alpha_star, lr->alpha_star, kPi);
      emit(j, output, out);
      if (!plot_path.empty()) {
        std::ofstream f(plot_path);
        if (!f) throw ExitError{1, plot_path + ": cannot write"};
        f << "series,theta,x,y\n";
        write_boundary(f, "C", c, n);
        if (lr) write_boundary(f, "segment_l2", SupportFn::segment(lr->alpha_star), n);
        if (hr) write_boundary(f, "segment_hausdorff", SupportFn::segment(hr->alpha_star), n);
      }
    } else if (maximize->parsed()) {
      const QuadCoeffs q = coeffs_from_json(load_json_file(coeff_path));
      try {
        validate(q);
      } catch (const CoefficientError& e) {
        throw ExitError{4, coeff_path + ": " + e.what()};
      }
      ConeOptions opts;
      opts.restarts = restarts;
      opts.seed = effective_seed(seed);
      const ConeSolution cone = maximize_over_cone(q, cone_n, opts);
      const TriangleSearchResult tri = maximize_over_triangles(q);
      const Shape tri_shape = tri.segment_wins ? Shape::segment : Shape::triangle;
      const double gap = std::abs(cone.value - tri.value);
      const bool disagree = gap > 1e-3 || cone.classification != tri_shape;
      if (disagree) err << "warning: solvers disagree (value gap " << gap << ")\n";
      if (cone.classification == Shape::other) err << "warning: cone maximizer is neither a segment nor a triangle\n";
      json triangle = {{"triangle_normals", tri.triangle.theta},
                       {"triangle_value", tri.triangle_value},
                       {"segment_alpha", tri.segment_alpha},
                       {"segment_value", tri.segment_value},
                       {"classification", to_string(tri_shape)},
                       {"value", tri.value},
                       {"shape", shape_to_json(tri.best())}};
      json cone_j = {{"classification", to_string(cone.classification)},
                     {"atoms", atoms_json(cone.atoms)},
                     {"raw_atoms", atoms_json(cone.raw_atoms)},
                     {"value", cone.value},
                     {"discrete_value", cone.discrete_value},
                     {"iterations", cone.iterations},
                     {"n", cone_n},
                     {"seed", opts.seed},
                     {"shape", shape_to_json(cone.h_opt)}};
      emit({{"cone", cone_j}, {"triangles", triangle}, {"value_gap", gap}, {"disagreement", disagree}}, output, out);
    } else if (check->parsed()) {
      const SupportFn c = load_shape(shape_path);
      const auto rep = sharp_inequality_report(c);
      json res;
      bool ok = true;
      for (const auto& [name, v] : rep.named()) {
        res[name] = v;
        ok = ok && v <= 1e-6;
      }
      emit({{"residuals", res}, {"all_nonpositive", ok}}, output, out);
    } else if (plot->parsed()) {
      const SupportFn c = load_shape(shape_path);
      std::ostringstream s;
      s << "series,theta,x,y\n";
      write_boundary(s, "C", c, n);
      if (output.empty()) {
        out << s.str();
      } else {
        std::ofstream f(output);
        f << s.str();
      }
    } else if (g4->parsed()) {
      std::ostringstream s;
      s << "tau,g4\n";
      std::vector<double> v(static_cast<std::size_t>(samples));
      for (int i = 0; i < samples; ++i) {
        const double tau = kPi * i / (samples - 1);
        v[static_cast<std::size_t>(i)] = green::g4(tau);
        s << csv_number(tau) << ',' << csv_number(v[static_cast<std::size_t>(i)]) << '\n';
      }
      // Local minima of the samples, refined between neighbours; keep the lowest.
      std::vector<std::pair<double, double>> local;
      const double step = kPi / (samples - 1);
      for (int i = 0; i < samples; ++i) {
        const double c = v[static_cast<std::size_t>(i)];
        const bool left = i == 0 || c <= v[static_cast<std::size_t>(i - 1)];
        const bool right = i == samples - 1 || c <= v[static_cast<std::size_t>(i + 1)];
        if (!(left && right)) continue;
        const auto opt = golden_section_max([](double t) { return -green::g4(t); }, std::max(0.0, (i - 1) * step),
                                            std::min(kPi, (i + 1) * step), 1e-12);
        local.emplace_back(opt.x, -opt.value);
      }
      double lo = v.front();
      for (const auto& [x, val] : local) lo = std::min(lo, val);
      json minima = json::array();
      for (const auto& [x, val] : local) {
        if (val <= lo + 1e-12) minima.push_back(x);
      }
      double evenness = 0.0, reflection = 0.0;
      for (int i = 0; i < samples; ++i) {
        const double tau = kPi * i / (samples - 1);
        evenness = std::max(evenness, std::abs(green::g4(tau) - green::g4(-tau)));
        reflection = std::max(reflection, std::abs(green::g4(tau) - green::g4(kPi - tau)));
      }
      const json summary = {{"minimum", lo},
                            {"minimizers", minima},
                            {"evenness_residual", evenness},
                            {"reflection_residual", reflection},
                            {"endpoint_difference", std::abs(v.front() - v.back())}};
      if (output.empty()) {
        out << s.str();
      } else {
        std::ofstream f(output);
        f << s.str();
      }
      if (!plot_path.empty()) emit(summary, plot_path, out);
      else err << summary.dump() << '\n';
    }
  } catch (const ExitError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CoefficientError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace shapes::cli
