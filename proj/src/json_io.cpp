#include "rhpwn/json_io.hpp"

#include <algorithm>
#include <cmath>

#include "rhpwn/errors.hpp"

namespace rhpwn::json_io {

namespace {

std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& require_array(const Json& j, const std::string& ptr) {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array");
    return j;
}

}  // namespace

ObjectReader::ObjectReader(const Json& j, std::string ptr, std::vector<std::string> allowed)
    : j_(j), ptr_(std::move(ptr)) {
    if (!j.is_object()) throw SchemaError(ptr_, "expected an object");
    for (const auto& [key, value] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw SchemaError(ptr_ + "/" + key, "unknown field '" + key + "'");
}

const Json& ObjectReader::required(const std::string& key) const {
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(ptr_ + "/" + key, "missing field '" + key + "'");
    return *it;
}

const Json* ObjectReader::optional(const std::string& key) const {
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ComplexRational& z) {
    if (z.is_real()) return to_string(z.re());
    return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}};
}

Json to_json(const StepFunction& f) {
    Json out = Json::array();
    for (const auto& p : f.pieces())
        out.push_back(
            {{"a", to_string(p.lo)}, {"b", to_string(p.hi)}, {"re", to_string(p.value.re())}, {"im", to_string(p.value.im())}});
    return out;
}

Json to_json(const AlgebraElement& a) {
    Json out = Json::array();
    for (const auto& [nk, f] : a.terms())
        out.push_back({{"tag", to_string(a.tag())}, {"n", nk.first}, {"k", nk.second}, {"pieces", to_json(f)}});
    return out;
}

Json to_json(const Word& w) {
    Json out = Json::array();
    for (const auto& f : w) out.push_back({{"n", f.n}, {"k", f.k}, {"function", to_json(f.f)}});
    return out;
}

Json to_json(const MuPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Rational rational_from_json(const Json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (!j.is_string()) throw SchemaError(ptr, "expected a rational \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
        throw SchemaError(ptr, e.what());
    }
}

ComplexRational complex_from_json(const Json& j, const std::string& ptr) {
    if (!j.is_object()) return ComplexRational(rational_from_json(j, ptr));
    ObjectReader r(j, ptr, {"re", "im"});
    const Json* re = r.optional("re");
    const Json* im = r.optional("im");
    return {re ? rational_from_json(*re, r.pointer("re")) : Rational(0),
            im ? rational_from_json(*im, r.pointer("im")) : Rational(0)};
}

StepFunction step_function_from_json(const Json& j, const std::string& ptr) {
    require_array(j, ptr);
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = at(ptr, i);
        ObjectReader r(j[i], p, {"a", "b", "re", "im"});
        Piece piece{rational_from_json(r.required("a"), r.pointer("a")),
                    rational_from_json(r.required("b"), r.pointer("b")), {}};
        const Json* re = r.optional("re");
        const Json* im = r.optional("im");
        piece.value = ComplexRational(re ? rational_from_json(*re, r.pointer("re")) : Rational(0),
                                      im ? rational_from_json(*im, r.pointer("im")) : Rational(0));
        pieces.push_back(std::move(piece));
    }
    try {
        return StepFunction(std::move(pieces));
    } catch (const SchemaError&) {
        throw;
    } catch (const DomainError& e) {
        throw SchemaError(ptr, e.what());
    }
}

int int_from_json(const Json& j, const std::string& ptr) {
    if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
    const auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) throw SchemaError(ptr, "integer out of range");
    return static_cast<int>(v);
}

double double_from_json(const Json& j, const std::string& ptr) {
    if (!j.is_number()) throw SchemaError(ptr, "expected a number");
    return j.get<double>();
}

AlgebraElement element_from_json(const Json& j, const std::string& ptr, AlgebraTag empty_tag) {
    require_array(j, ptr);
    std::optional<AlgebraTag> tag;
    AlgebraElement out(empty_tag);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = at(ptr, i);
        ObjectReader r(j[i], p, {"tag", "n", "k", "pieces"});
        const Json& tj = r.required("tag");
        if (!tj.is_string()) throw SchemaError(r.pointer("tag"), "expected \"RHPWN\" or \"WINFTY\"");
        AlgebraTag t;
        try {
            t = parse_algebra_tag(tj.get<std::string>());
        } catch (const DomainError& e) {
            throw SchemaError(r.pointer("tag"), e.what());
        }
        if (!tag) {
            tag = t;
            out = AlgebraElement(t);
        } else if (*tag != t) {
            throw TagMismatchError("element mixes algebra tags at " + r.pointer("tag"));
        }
        const int n = int_from_json(r.required("n"), r.pointer("n"));
        const int k = int_from_json(r.required("k"), r.pointer("k"));
        const auto f = step_function_from_json(r.required("pieces"), r.pointer("pieces"));
        out += AlgebraElement::generator(t, n, k, f);
    }
    return out;
}

Word word_from_json(const Json& j, const std::string& ptr) {
    require_array(j, ptr);
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = at(ptr, i);
        ObjectReader r(j[i], p, {"n", "k", "function"});
        Factor f{int_from_json(r.required("n"), r.pointer("n")), int_from_json(r.required("k"), r.pointer("k")),
                 step_function_from_json(r.required("function"), r.pointer("function"))};
        if (f.n < 0 || f.k < 0) throw SchemaError(p, "word factors need n, k >= 0");
        w.push_back(std::move(f));
    }
    return w;
}

MuPolynomial mu_poly_from_json(const Json& j, const std::string& ptr) {
    require_array(j, ptr);
    std::vector<ComplexRational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(complex_from_json(j[i], at(ptr, i)));
    return MuPolynomial(std::move(c));
}

CoefficientMap coefficients_from_json(const Json& j, const std::string& ptr) {
    require_array(j, ptr);
    CoefficientMap out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = at(ptr, i);
        ObjectReader r(j[i], p, {"n", "k", "re", "im"});
        const int n = int_from_json(r.required("n"), r.pointer("n"));
        const int k = int_from_json(r.required("k"), r.pointer("k"));
        if (n < 0 || k < 0) throw SchemaError(p, "coefficients need n, k >= 0");
        const Json* re = r.optional("re");
        const Json* im = r.optional("im");
        const ComplexRational c(re ? rational_from_json(*re, r.pointer("re")) : Rational(0),
                                im ? rational_from_json(*im, r.pointer("im")) : Rational(0));
        if (!out.emplace(std::pair{n, k}, c).second) throw SchemaError(p, "duplicate coefficient");
    }
    return out;
}

}  // namespace rhpwn::json_io
