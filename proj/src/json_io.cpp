#include "gfplab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gfplab/errors.hpp"

namespace gfp {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(ErrorCode::ParseError, "rational must be an integer or a \"num/den\" string");
}

nlohmann::json polynomial_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(rational_json(c));
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "polynomial must be a coefficient array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const nlohmann::json& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

nlohmann::json family_json(const GfpFamily& f) {
  nlohmann::json j;
  j["name"] = f.name;
  j["kind"] = kind_name(f.kind);
  j["d"] = polynomial_json(f.d);
  j["g"] = polynomial_json(f.g);
  if (f.kind == GfpKind::LucasType) {
    j["p0"] = rational_json(f.p0);
    j["p1"] = polynomial_json(f.p1);
  }
  return j;
}

GfpFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "family must be a JSON object");
  if (!j.contains("kind")) fail(ErrorCode::ParseError, "family needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  const std::string name = j.value("name", std::string());
  if (!j.contains("d") || !j.contains("g")) {
    fail(ErrorCode::ParseError, "family needs \"d\" and \"g\" coefficient arrays");
  }
  Polynomial d = polynomial_from_json(j.at("d"));
  Polynomial g = polynomial_from_json(j.at("g"));
  if (kind == "fibonacci") {
    return GfpFamily::fibonacci_type(std::move(d), std::move(g), name);
  }
  if (kind == "lucas") {
    const Rational p0 = j.contains("p0") ? rational_from_json(j.at("p0")) : Rational(2);
    if (j.contains("p1")) {
      Polynomial p1 = polynomial_from_json(j.at("p1"));
      GfpFamily f = GfpFamily::lucas_type_from_p1(std::move(p1), std::move(g), p0, name);
      if (f.d != d) fail(ErrorCode::ParseError, "inconsistent d and p1 (need d = (2/p0) p1)");
      return f;
    }
    return GfpFamily::lucas_type(std::move(d), std::move(g), p0, name);
  }
  fail(ErrorCode::ParseError, "kind must be \"fibonacci\" or \"lucas\"");
}

GfpFamily family_from_spec(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(ErrorCode::ParseError, "empty family spec");
  if (text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "family spec is not valid JSON");
    return family_from_json(j);
  }
  if (std::optional<GfpFamily> f = registry_lookup(text)) return *f;
  fail(ErrorCode::ParseError, "unknown family name: " + text);
}

GfpFamily family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return family_from_spec(buf.str());
}

}  // namespace gfp
