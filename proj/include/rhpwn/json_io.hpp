#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rhpwn/algebra.hpp"
#include "rhpwn/mu_polynomial.hpp"
#include "rhpwn/processes.hpp"
#include "rhpwn/rewrite.hpp"
#include "rhpwn/step_function.hpp"

// JSON encodings. Rationals are "p/q" strings (integers may also be given as
// JSON numbers on input). Unknown object fields are rejected; every parse
// error is a SchemaError carrying a JSON pointer.
namespace rhpwn::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const ComplexRational& z);  // "p/q" if real, else {"re","im"}
Json to_json(const StepFunction& f);     // [{a, b, re, im}]
Json to_json(const AlgebraElement& a);   // [{tag, n, k, pieces}]
Json to_json(const Word& w);             // [{n, k, function}]
Json to_json(const MuPolynomial& p);     // ["c0", "c1", ...]

Rational rational_from_json(const Json& j, const std::string& ptr = "");
ComplexRational complex_from_json(const Json& j, const std::string& ptr = "");
StepFunction step_function_from_json(const Json& j, const std::string& ptr = "");
/// An empty list is the zero element of `empty_tag`.
AlgebraElement element_from_json(const Json& j, const std::string& ptr = "",
                                 AlgebraTag empty_tag = AlgebraTag::rhpwn);
Word word_from_json(const Json& j, const std::string& ptr = "");
MuPolynomial mu_poly_from_json(const Json& j, const std::string& ptr = "");
/// [{n, k, re, im}]
CoefficientMap coefficients_from_json(const Json& j, const std::string& ptr = "");

int int_from_json(const Json& j, const std::string& ptr = "");
double double_from_json(const Json& j, const std::string& ptr = "");

/// Object field access with unknown-field rejection.
class ObjectReader {
public:
    ObjectReader(const Json& j, std::string ptr, std::vector<std::string> allowed);
    const Json& required(const std::string& key) const;
    const Json* optional(const std::string& key) const;
    std::string pointer(const std::string& key) const { return ptr_ + "/" + key; }

private:
    const Json& j_;
    std::string ptr_;
};

/// Parses text, mapping syntax errors to SchemaError at the root.
Json parse(const std::string& text);

}  // namespace rhpwn::json_io
