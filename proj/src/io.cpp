#include "shapes/io.hpp"

#include <fstream>
#include <sstream>

#include "shapes/weingarten.hpp"

namespace shapes {

using nlohmann::json;

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<FourierTerm> fourier_terms(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of [k, a, b]");
  std::vector<FourierTerm> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 3) throw ParseError(w + ": expected [k, a, b]");
    if (!j[i][0].is_number_integer()) throw ParseError(w + "[0]: harmonic index must be an integer");
    out.push_back({j[i][0].get<int>(), number(j[i][1], w + "[1]"), number(j[i][2], w + "[2]")});
  }
  return out;
}

json terms_to_json(const std::vector<FourierTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) arr.push_back(json::array({t.k, t.a, t.b}));
  return arr;
}

SupportFn parse_shape(const json& j, const std::string& where) {
  const json& type = field(j, "type", where);
  if (!type.is_string()) throw ParseError(where + ".type: expected a string");
  const auto t = type.get<std::string>();
  try {
    if (t == "segment") return SupportFn::segment(number(field(j, "alpha", where), where + ".alpha"));
    if (t == "polygon") {
      return SupportFn::polygon(numbers(field(j, "normals", where), where + ".normals"),
                                numbers(field(j, "lengths", where), where + ".lengths"));
    }
    if (t == "triangle") {
      const auto n = numbers(field(j, "normals", where), where + ".normals");
      if (n.size() != 3) throw ParseError(where + ".normals: a triangle needs exactly three normals");
      return triangle_support(TriangleSpec{{n[0], n[1], n[2]}});
    }
    if (t == "fourier") {
      std::vector<FourierTerm> terms;
      if (j.contains("terms")) terms = fourier_terms(j["terms"], where + ".terms");
      return SupportFn::fourier(number(field(j, "c0", where), where + ".c0"), std::move(terms));
    }
    if (t == "grid") {
      const json& nj = field(j, "n", where);
      if (!nj.is_number_integer()) throw ParseError(where + ".n: expected an integer");
      auto samples = numbers(field(j, "samples", where), where + ".samples");
      if (static_cast<long>(samples.size()) != nj.get<long>()) {
        throw ParseError(where + ".samples: length differs from n");
      }
      return SupportFn::grid(std::move(samples));
    }
    if (t == "minkowski") {
      const json& terms = field(j, "terms", where);
      if (!terms.is_array() || terms.empty()) throw ParseError(where + ".terms: expected a non-empty array");
      std::vector<std::pair<double, SupportFn>> parts;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string w = where + ".terms[" + std::to_string(i) + "]";
        parts.emplace_back(number(field(terms[i], "weight", w), w + ".weight"),
                           parse_shape(field(terms[i], "shape", w), w + ".shape"));
      }
      return SupportFn::minkowski(parts);
    }
  } catch (const ShapeError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ".type: unknown shape type \"" + t + "\"");
}

CoeffFn parse_coeff(const json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) throw ParseError(where + ": expected exactly one of const/grid/bumps/fourier");
  if (j.contains("const")) return CoeffFn::constant(number(j["const"], where + ".const"));
  if (j.contains("grid")) return CoeffFn::grid(numbers(j["grid"], where + ".grid"));
  if (j.contains("fourier")) {
    const json& f = j["fourier"];
    std::vector<FourierTerm> terms;
    if (f.is_object() && f.contains("terms")) terms = fourier_terms(f["terms"], where + ".fourier.terms");
    return CoeffFn::fourier(number(field(f, "c0", where + ".fourier"), where + ".fourier.c0"), std::move(terms));
  }
  if (j.contains("bumps")) {
    const json& arr = j["bumps"];
    if (!arr.is_array() || arr.empty()) throw ParseError(where + ".bumps: expected a non-empty array");
    std::vector<Bump> bumps;
    double outside = 0.0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = where + ".bumps[" + std::to_string(i) + "]";
      bumps.push_back({number(field(arr[i], "center", w), w + ".center"), number(field(arr[i], "width", w), w + ".width"),
                       number(field(arr[i], "inside", w), w + ".inside")});
      const double out = number(field(arr[i], "outside", w), w + ".outside");
      if (i == 0) {
        outside = out;
      } else if (out != outside) {
        throw ParseError(w + ".outside: all bumps must share one outside value");
      }
    }
    try {
      return CoeffFn::bumps(std::move(bumps), outside);
    } catch (const CoefficientError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected one of const/grid/bumps/fourier");
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": malformed JSON");
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

SupportFn shape_from_json(const json& j) { return parse_shape(j, "shape"); }

json shape_to_json(const SupportFn& h) {
  if (const auto* s = h.as<SegmentForm>()) return {{"type", "segment"}, {"alpha", s->alpha}};
  if (const auto* p = h.as<PolygonForm>()) return {{"type", "polygon"}, {"normals", p->normals}, {"lengths", p->lengths}};
  if (const auto* t = h.as<TriangleForm>()) return {{"type", "triangle"}, {"normals", t->normals}};
  if (const auto* f = h.as<FourierForm>()) return {{"type", "fourier"}, {"c0", f->c0}, {"terms", terms_to_json(f->terms)}};
  if (const auto* g = h.as<GridForm>()) {
    return {{"type", "grid"}, {"n", g->samples.size()}, {"samples", g->samples}};
  }
  const auto& m = *h.as<MinkowskiForm>();
  json terms = json::array();
  for (const auto& t : m.terms) terms.push_back({{"weight", t.weight}, {"shape", shape_to_json(*t.shape)}});
  return {{"type", "minkowski"}, {"terms", terms}};
}

QuadCoeffs coeffs_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("coefficients: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "a" && key != "b" && key != "c" && key != "d") {
      throw ParseError("coefficients." + key + ": unknown coefficient");
    }
  }
  QuadCoeffs q;
  if (j.contains("a")) q.a = parse_coeff(j["a"], "coefficients.a");
  if (j.contains("b")) q.b = parse_coeff(j["b"], "coefficients.b");
  if (j.contains("c")) q.c = parse_coeff(j["c"], "coefficients.c");
  if (j.contains("d")) q.d = parse_coeff(j["d"], "coefficients.d");
  return q;
}

json coeff_to_json(const CoeffFn& f) {
  switch (f.kind()) {
    case CoeffFn::Kind::constant:
      return {{"const", f.const_value()}};
    case CoeffFn::Kind::grid:
      return {{"grid", f.samples()}};
    case CoeffFn::Kind::fourier:
      return {{"fourier", {{"c0", f.fourier_c0()}, {"terms", terms_to_json(f.fourier_terms())}}}};
    case CoeffFn::Kind::bumps: {
      json arr = json::array();
      for (const auto& b : f.bump_list()) {
        arr.push_back({{"center", b.center}, {"width", b.width}, {"inside", b.inside}, {"outside", f.outside()}});
      }
      return {{"bumps", arr}};
    }
  }
  return nullptr;
}

json coeffs_to_json(const QuadCoeffs& q) {
  return {{"a", coeff_to_json(q.a)}, {"b", coeff_to_json(q.b)}, {"c", coeff_to_json(q.c)}, {"d", coeff_to_json(q.d)}};
}

}  // namespace shapes
