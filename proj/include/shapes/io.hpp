#pragma once

#include "json.hpp"
#include <stdexcept>
#include <string>

#include "shapes/coefficients.hpp"
#include "shapes/support_fn.hpp"

namespace shapes {

/// Malformed input; the message names the line or the JSON field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a JSON document, reporting syntax errors with line and column.
nlohmann::json parse_json(const std::string& text, const std::string& source = "<input>");
nlohmann::json load_json_file(const std::string& path);

/// Shape schema:
///   {"type":"segment","alpha":r}
///   {"type":"polygon","normals":[...],"lengths":[...]}
///   {"type":"triangle","normals":[t1,t2,t3]}
///   {"type":"fourier","c0":r,"terms":[[k,a,b],...]}
///   {"type":"grid","n":int,"samples":[...]}
///   {"type":"minkowski","terms":[{"weight":w,"shape":{...}},...]}
SupportFn shape_from_json(const nlohmann::json& j);
nlohmann::json shape_to_json(const SupportFn& h);

/// Coefficient schema: {"a":spec,"b":spec,"c":spec,"d":spec}, each optional
/// (default 0), spec = {"const":r} | {"grid":[...]} | {"fourier":{"c0":r,"terms":[[k,a,b],...]}}
/// | {"bumps":[{"center":r,"width":r,"inside":r,"outside":r},...]}.
/// All bumps of one coefficient must share the same "outside" value.
QuadCoeffs coeffs_from_json(const nlohmann::json& j);
nlohmann::json coeff_to_json(const CoeffFn& f);
nlohmann::json coeffs_to_json(const QuadCoeffs& q);

}  // namespace shapes
