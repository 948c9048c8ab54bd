#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sogamma/socx.hpp"

namespace sogamma {

/// Malformed socx-v1 document (bad JSON, unknown ids, bad rationals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSocxFormat = "socx-v1";

/// Rational as "p/q" (or "p" for integers).
nlohmann::ordered_json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// [{"pow": p, "coeff": "a/b"}, ...] sorted by pow.
nlohmann::ordered_json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const SOComplex& s);
/// Maps are loaded without homogeneity checks so that validate() can report
/// problems; throws ParseError for structural errors only.
SOComplex complex_from_json(const nlohmann::json& j);

std::string dump_complex(const SOComplex& s);
SOComplex parse_complex(const std::string& text);

}  // namespace sogamma
