// rhpwn: batch front-end. One request per invocation; JSON (default) or CSV
// on stdout, errors as JSON on stderr. Exit 0 ok, 2 domain/schema error,
// 1 internal failure.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhpwn/algebra.hpp"
#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/json_io.hpp"
#include "rhpwn/kernels.hpp"
#include "rhpwn/nogo.hpp"
#include "rhpwn/processes.hpp"
#include "rhpwn/rewrite.hpp"

using namespace rhpwn;
using json_io::Json;

namespace {

enum class Format { json, csv };

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Grid {
    double lo, hi, step;
    std::vector<double> points() const {
        std::vector<double> out;
        const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (long i = 0; i < count; ++i) out.push_back(lo + i * step);
        return out;
    }
};

Grid parse_grid(const std::string& text, const std::string& flag) {
    std::stringstream ss(text);
    std::string part;
    std::vector<double> v;
    while (std::getline(ss, part, ':')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw DomainError(flag + " expects a:b:step, got '" + text + "'");
        }
    }
    if (v.size() != 3) throw DomainError(flag + " expects a:b:step, got '" + text + "'");
    if (!(v[2] > 0) || !(v[0] <= v[1])) throw DomainError(flag + " needs a <= b and step > 0");
    if ((v[1] - v[0]) / v[2] > 1e7) throw DomainError(flag + " has more than 10^7 points");
    return {v[0], v[1], v[2]};
}

struct Payload {
    std::string input = "-";
    std::string inline_json;

    Json load() const {
        if (!inline_json.empty()) return json_io::parse(inline_json);
        std::string text;
        if (input == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(input);
            if (!in) throw DomainError("cannot read input file '" + input + "'");
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return json_io::parse(text);
    }
};

void add_payload(CLI::App* cmd, Payload& p) {
    cmd->add_option("--input", p.input, "JSON payload file, '-' for stdin")->capture_default_str();
    cmd->add_option("--json", p.inline_json, "JSON payload given inline (overrides --input)");
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_json(Format f, const std::string& cmd) {
    if (f != Format::json) throw DomainError(cmd + " has no CSV form");
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric toolkit for renormalized higher powers of white noise"};
    app.require_subcommand(1);
    std::string format_text = "json";
    bool format_given = false;
    app.add_option_function<std::string>(
           "--format", [&](const std::string& s) { format_text = s, format_given = true; }, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // commutator / involute
    Payload p_comm, p_inv, p_vac, p_gram, p_ip, p_cls;
    auto* c_comm = app.add_subcommand("commutator", "bracket of two elements: payload {\"a\": element, \"b\": element}");
    add_payload(c_comm, p_comm);
    auto* c_inv = app.add_subcommand("involute", "involution of an element: payload element");
    add_payload(c_inv, p_inv);

    int st_n = 0, st_k = 0;
    auto* c_st = app.add_subcommand("stirling", "signed Stirling number of the first kind");
    c_st->add_option("--n", st_n)->required();
    c_st->add_option("--k", st_k)->required();

    int no_n = 0;
    auto* c_no = app.add_subcommand("normal-order", "expansion of (b†)^n b^n in powers of b†b");
    c_no->add_option("--n", no_n)->required();

    std::string vac_mode = "symbolic";
    std::optional<int> vac_trunc;
    auto* c_vac = app.add_subcommand("vacuum-moment", "reduce a word on Φ: payload word [{n, k, function}]");
    add_payload(c_vac, p_vac);
    c_vac->add_option("--mode", vac_mode, "symbolic (lengths in units of μ) or concrete")
        ->check(CLI::IsMember({"symbolic", "concrete"}))
        ->capture_default_str();
    c_vac->add_option("--truncated", vac_trunc, "use the order-n truncated action");

    int ke_n = 1, ke_k = 0;
    auto* c_ke = app.add_subcommand("kernel", "Fock kernel π_{n,k} and h_{n,k}");
    c_ke->add_option("--n", ke_n)->required();
    c_ke->add_option("--k", ke_k)->required();

    auto* c_gram = app.add_subcommand("gram", "Gram positivity: payload {n, fs, tol}");
    add_payload(c_gram, p_gram);
    auto* c_ip = app.add_subcommand("inner-product", "⟨ψ_n(f), ψ_n(g)⟩: payload {n, f, g}");
    add_payload(c_ip, p_ip);

    int ng_n = 3;
    std::string ng_mu;
    auto* c_ng = app.add_subcommand("nogo", "no-go Gram matrix, minors and threshold");
    c_ng->add_option("--n", ng_n)->required();
    c_ng->add_option("--mu", ng_mu, "interval measure (rational)");

    int sc_n = 1, sc_order = 8;
    auto* c_sc = app.add_subcommand("split-check", "series check of the splitting formula");
    c_sc->add_option("--n", sc_n)->required();
    c_sc->add_option("--order", sc_order)->capture_default_str();

    int mg_n = 1;
    double mg_t = 1;
    std::string mg_grid;
    auto* c_mg = app.add_subcommand("mgf", "moment generating function on an s grid");
    c_mg->add_option("--n", mg_n)->required();
    c_mg->add_option("--t", mg_t)->required();
    c_mg->add_option("--s-grid", mg_grid, "a:b:step")->required();

    double de_t = 1;
    std::optional<int> de_n;
    std::string de_grid;
    auto* c_de = app.add_subcommand("density", "density p_t (or the scaled order-n density) on an x grid");
    c_de->add_option("--t", de_t)->required();
    c_de->add_option("--x-grid", de_grid, "a:b:step")->required();
    c_de->add_option("--n", de_n, "order n >= 2: density of the scaled variable instead of p_t");

    double sa_t = 1;
    std::size_t sa_count = 1;
    std::uint64_t sa_seed = 0;
    auto* c_sa = app.add_subcommand("sample", "inverse-CDF samples of X_t");
    c_sa->add_option("--t", sa_t)->required();
    c_sa->add_option("--count", sa_count)->required();
    c_sa->add_option("--seed", sa_seed)->required();

    auto* c_cls = app.add_subcommand("classical-check", "classicality: payload {coeffs: [{n,k,re,im}], horizon: [t...]}");
    add_payload(c_cls, p_cls);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    const bool tabular = name == "mgf" || name == "density" || name == "sample";
    const Format format = format_given ? (format_text == "csv" ? Format::csv : Format::json)
                                       : (tabular ? Format::csv : Format::json);

    try {
        if (cmd == c_comm) {
            require_json(format, name);
            const Json j = p_comm.load();
            json_io::ObjectReader r(j, "", {"a", "b"});
            const auto a = json_io::element_from_json(r.required("a"), "/a");
            const auto b = json_io::element_from_json(r.required("b"), "/b", a.tag());
            print_json(json_io::to_json(commutator(a, b)));
        } else if (cmd == c_inv) {
            require_json(format, name);
            print_json(json_io::to_json(involution(json_io::element_from_json(p_inv.load()))));
        } else if (cmd == c_st) {
            const auto v = stirling_first(st_n, st_k).get_str();
            if (format == Format::csv)
                std::cout << "n,k,value\n" << st_n << ',' << st_k << ',' << v << '\n';
            else
                print_json({{"n", st_n}, {"k", st_k}, {"value", v}});
        } else if (cmd == c_no) {
            const auto terms = normal_order_expansion(no_n);
            if (format == Format::csv) {
                std::cout << "m,coeff\n";
                for (const auto& [m, c] : terms) std::cout << m << ',' << c.get_str() << '\n';
            } else {
                Json t = Json::array();
                for (const auto& [m, c] : terms) t.push_back({{"m", m}, {"coeff", c.get_str()}});
                const auto wn = white_noise_form(no_n, no_n);
                print_json({{"n", no_n}, {"terms", t}, {"number_power", wn.number_power}});
            }
        } else if (cmd == c_vac) {
            const auto word = json_io::word_from_json(p_vac.load());
            const Measure mode = vac_mode == "concrete" ? Measure::concrete : Measure::symbolic;
            if (vac_trunc) {
                const auto terms = reduce_truncated(*vac_trunc, word, mode);
                if (format == Format::csv) {
                    std::cout << "k,power,coeff\n";
                    for (const auto& [k, c] : terms)
                        for (std::size_t i = 0; i < c.coeffs().size(); ++i)
                            std::cout << k << ',' << i << ',' << to_string(c.coeffs()[i]) << '\n';
                } else {
                    Json t = Json::array();
                    for (const auto& [k, c] : terms) t.push_back({{"k", k}, {"mu_poly", json_io::to_json(c)}});
                    print_json({{"n", *vac_trunc}, {"terms", t}});
                }
            } else {
                const auto state = reduce_untruncated(word, mode);
                const auto vac = state.vacuum_coefficient();
                if (format == Format::csv) {
                    std::cout << "power,coeff\n";
                    for (std::size_t i = 0; i < vac.coeffs().size(); ++i)
                        std::cout << i << ',' << to_string(vac.coeffs()[i]) << '\n';
                } else {
                    Json st = Json::array();
                    for (const auto& [mono, c] : state.terms()) {
                        Json cr = Json::array();
                        for (const auto& x : mono) cr.push_back({{"m", x.m}, {"function", json_io::to_json(x.f)}});
                        st.push_back({{"creators", cr}, {"mu_poly", json_io::to_json(c)}});
                    }
                    print_json({{"mu_poly", json_io::to_json(vac)}, {"state", st}});
                }
            }
        } else if (cmd == c_ke) {
            const auto kv = kernel_values(ke_n, ke_k);
            if (format == Format::csv) {
                std::cout << "power,pi,h\n";
                for (int i = 0; i <= kv.pi.degree(); ++i)
                    std::cout << i << ',' << to_string(kv.pi.coeff(i)) << ',' << to_string(kv.h.coeff(i)) << '\n';
            } else {
                print_json({{"n", ke_n}, {"k", ke_k}, {"pi", json_io::to_json(kv.pi)}, {"h", json_io::to_json(kv.h)}});
            }
        } else if (cmd == c_gram) {
            const Json j = p_gram.load();
            json_io::ObjectReader r(j, "", {"n", "fs", "tol"});
            const int n = json_io::int_from_json(r.required("n"), "/n");
            const Json& fj = r.required("fs");
            if (!fj.is_array()) throw SchemaError("/fs", "expected an array");
            std::vector<StepFunction> fs;
            for (std::size_t i = 0; i < fj.size(); ++i)
                fs.push_back(json_io::step_function_from_json(fj[i], "/fs/" + std::to_string(i)));
            const double tol = r.optional("tol") ? json_io::double_from_json(*r.optional("tol"), "/tol") : 1e-10;
            const auto rep = gram_psd_check(n, fs, tol);
            if (format == Format::csv) {
                std::cout << "i,j,re,im\n";
                for (long a = 0; a < rep.matrix.rows(); ++a)
                    for (long b = 0; b < rep.matrix.cols(); ++b)
                        std::cout << a << ',' << b << ',' << fmt(rep.matrix(a, b).real()) << ','
                                  << fmt(rep.matrix(a, b).imag()) << '\n';
            } else {
                Json m = Json::array();
                for (long a = 0; a < rep.matrix.rows(); ++a) {
                    Json row = Json::array();
                    for (long b = 0; b < rep.matrix.cols(); ++b) row.push_back(complex_json(rep.matrix(a, b)));
                    m.push_back(row);
                }
                print_json({{"matrix", m},
                            {"min_eigenvalue", rep.min_eigenvalue},
                            {"verdict", rep.psd ? "PSD" : "NOT_PSD"}});
            }
        } else if (cmd == c_ip) {
            require_json(format, name);
            const Json j = p_ip.load();
            json_io::ObjectReader r(j, "", {"n", "f", "g"});
            const int n = json_io::int_from_json(r.required("n"), "/n");
            const auto f = json_io::step_function_from_json(r.required("f"), "/f");
            const auto g = json_io::step_function_from_json(r.required("g"), "/g");
            const auto kv = exp_inner_product(n, f, g);
            Json out = complex_json(kv.value);
            if (kv.exact_exponent) out["exact_exponent"] = json_io::to_json(*kv.exact_exponent);
            print_json(out);
        } else if (cmd == c_ng) {
            require_json(format, name);
            std::optional<Rational> mu;
            if (!ng_mu.empty()) mu = parse_rational(ng_mu);
            const auto rep = nogo_report(ng_n, mu);
            Json entries = Json::array();
            for (const auto& row : rep.entries)
                entries.push_back(Json::array({json_io::to_json(row[0]), json_io::to_json(row[1])}));
            Json out{{"n", rep.n},
                     {"entries", entries},
                     {"d1", json_io::to_json(rep.d1)},
                     {"d2", json_io::to_json(rep.d2)},
                     {"threshold", json_io::to_json(rep.threshold)}};
            if (rep.mu) {
                out["mu"] = json_io::to_json(*rep.mu);
                out["d2_value"] = json_io::to_json(*rep.d2_value);
                out["verdict"] = *rep.psd ? "PSD" : "NOT_PSD";
            }
            print_json(out);
        } else if (cmd == c_sc) {
            require_json(format, name);
            const auto rep = splitting_series_check(sc_n, sc_order);
            Json vs = Json::array();
            for (const auto& c : rep.vacuum_series) vs.push_back(json_io::to_json(c));
            Json out{{"n", rep.n}, {"order", rep.order}, {"match", rep.match}, {"vacuum_series", vs}};
            if (rep.first_mismatch) {
                out["first_mismatch"] = {{"s_power", rep.first_mismatch->first},
                                         {"creator_power", rep.first_mismatch->second},
                                         {"lhs", json_io::to_json(rep.lhs_at_mismatch)},
                                         {"rhs", json_io::to_json(rep.rhs_at_mismatch)}};
            }
            print_json(out);
        } else if (cmd == c_mg) {
            const auto s = parse_grid(mg_grid, "--s-grid").points();
            std::vector<double> v;
            for (double x : s) v.push_back(mgf_eval(mg_n, x, mg_t));
            if (format == Format::csv) {
                std::cout << "s,closed_form\n";
                for (std::size_t i = 0; i < s.size(); ++i) std::cout << fmt(s[i]) << ',' << fmt(v[i]) << '\n';
            } else {
                Json rows = Json::array();
                for (std::size_t i = 0; i < s.size(); ++i) rows.push_back({{"s", s[i]}, {"closed_form", v[i]}});
                print_json(rows);
            }
        } else if (cmd == c_de) {
            const auto x = parse_grid(de_grid, "--x-grid").points();
            std::vector<double> p;
            if (de_n) {
                for (double y : x) p.push_back(density_q_scaled(*de_n, de_t, y));
            } else {
                p = kernels::density_grid(de_t, x);
            }
            if (format == Format::csv) {
                std::cout << "x,p\n";
                for (std::size_t i = 0; i < x.size(); ++i) std::cout << fmt(x[i]) << ',' << fmt(p[i]) << '\n';
            } else {
                Json rows = Json::array();
                for (std::size_t i = 0; i < x.size(); ++i) rows.push_back({{"x", x[i]}, {"p", p[i]}});
                print_json(rows);
            }
        } else if (cmd == c_sa) {
            const auto xs = sample_X(sa_t, sa_count, sa_seed);
            if (format == Format::csv) {
                std::string out;
                for (double x : xs) (out += fmt(x)) += '\n';
                std::cout << out;
            } else {
                print_json(Json(xs));
            }
        } else if (cmd == c_cls) {
            require_json(format, name);
            const Json j = p_cls.load();
            json_io::ObjectReader r(j, "", {"coeffs", "horizon"});
            const auto coeffs = json_io::coefficients_from_json(r.required("coeffs"), "/coeffs");
            std::vector<Rational> horizon;
            if (const Json* h = r.optional("horizon")) {
                if (!h->is_array()) throw SchemaError("/horizon", "expected an array");
                for (std::size_t i = 0; i < h->size(); ++i)
                    horizon.push_back(json_io::rational_from_json((*h)[i], "/horizon/" + std::to_string(i)));
            } else {
                horizon = {Rational(1), Rational(2), Rational(3)};
            }
            const auto v = classical_check(coeffs, horizon);
            Json out{{"classical", v.classical()}, {"self_adjoint", v.self_adjoint}, {"commuting", v.commuting}};
            if (v.witness) {
                out["witness"] = {{"n", v.witness_index->n},
                                  {"k", v.witness_index->k},
                                  {"coefficient", json_io::to_json(v.witness_coefficient)},
                                  {"description", *v.witness}};
            }
            print_json(out);
        }
    } catch (const SchemaError& e) {
        std::cerr << Json{{"error", "schema"}, {"pointer", e.pointer()}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << Json{{"error", "domain"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
