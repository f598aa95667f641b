#pragma once

#include <string>

#include "json.hpp"

#include "gfplab/gfp.hpp"

namespace gfp {

// Reals carry 17 significant digits; rationals are "num/den" strings (plain
// "num" when the denominator is 1); polynomial coefficients run low to high.
std::string format_real(double v);

nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json family_json(const GfpFamily& f);
GfpFamily family_from_json(const nlohmann::json& j);

// A registry name ("vieta-lucas") or an inline JSON object.
GfpFamily family_from_spec(const std::string& text);
GfpFamily family_from_file(const std::string& path);

}  // namespace gfp
