//Copyright (c) 2026, The z4lat authors
//
//Licensed under the Apache License, Version 2.0 (the "License");
//you may not use this file except in compliance with the License.
//You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//Unless required by applicable law or agreed to in writing, software
//distributed under the License is distributed on an "AS IS" BASIS,
//WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//See the License for the specific language governing permissions and
//limitations under the License.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include <z4lat/io.hpp>
#include <z4lat/z4lat.hpp>

#include "table.hpp"

using namespace z4lat;
using io::json;

namespace {

constexpr int kExitOk = 0, kExitValidation = 2, kExitBudget = 3, kExitMismatch = 4;

struct Options {
    int threads = 1;
    int truncation = 400;
    double tol = 1e-12;
    int budget = EnumerationBudget{}.log2_max;
    std::string out;
};

EnumerationBudget budget_of(const Options& o) { return EnumerationBudget{o.budget}; }

void emit(const Options& o, const std::string& text) {
    if (o.out.empty())
        std::cout << text;
    else
        io::write_text_file(o.out, text);
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

std::string fixed(long double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
    return buf;
}

std::string general(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", x);
    return buf;
}

// ---- input files ----

using Input = std::variant<Z4Code, BinaryCode, SwePoly, WePoly, io::HPolyFile>;

Input load_input(const std::string& path) {
    json j = io::read_json_file(path);
    if (j.contains("generator")) {
        auto f = io::code_from_json(j);
        if (f.ring == 2) return io::to_binary_code(f);
        return io::to_z4_code(f);
    }
    switch (io::poly_arity(j)) {
        case 1: return io::hpoly_from_json(j);
        case 2: return io::poly_from_json<2>(j);
        case 3: return io::poly_from_json<3>(j);
        default: throw ValidationError("'" + path + "' is neither a code nor a 1, 2 or 3 variable polynomial");
    }
}

SwePoly load_swe(const std::string& path, const Options& o) {
    Input in = load_input(path);
    if (auto* c = std::get_if<Z4Code>(&in)) return swe(*c, o.threads, budget_of(o));
    if (auto* p = std::get_if<SwePoly>(&in)) return *p;
    throw ValidationError("'" + path + "' must hold a Z4 code or a symmetrized weight enumerator");
}

Z4Code load_z4(const std::string& path) {
    Input in = load_input(path);
    if (auto* c = std::get_if<Z4Code>(&in)) return *c;
    throw ValidationError("'" + path + "' must hold a Z4 code (ring 4)");
}

const std::vector<std::string> kSweVars{"a", "b", "c"};
const std::vector<std::string> kWeVars{"x", "y"};

json beta_json(const BetaVector& b) {
    json arr = json::array();
    for (const auto& x : b.betas) arr.push_back(io::format_rational(x));
    return arr;
}

json report_json(const SecrecyReport& r) {
    json j{{"xi", static_cast<double>(r.xi)},
           {"t_star", static_cast<double>(r.t_star)},
           {"tau_star", static_cast<double>(r.tau_star)},
           {"at_symmetry_point", r.at_symmetry_point},
           {"fsd", r.fsd},
           {"strong_condition_verified", r.strong_condition_verified}};
    j["exact_xi"] = r.exact_xi ? json(io::format_rational(*r.exact_xi)) : json(nullptr);
    j["beta"] = r.beta ? beta_json(*r.beta) : json(nullptr);
    return j;
}

std::string code_type_text(const Z4Code& c) {
    std::string s = "4^" + std::to_string(c.k1());
    if (c.k2()) s += " 2^" + std::to_string(c.k2());
    return s;
}

// ---- subcommands ----

int cmd_swe(const std::string& path, const Options& o) {
    emit_json(o, io::poly_to_json(load_swe(path, o), kSweVars));
    return kExitOk;
}

int cmd_dual(const std::string& path, const Options& o) {
    emit_json(o, io::code_to_json(dual_generator(load_z4(path))));
    return kExitOk;
}

int cmd_verify(const std::string& path, const Options& o) {
    Input in = load_input(path);
    json j;
    SwePoly p(1);
    if (auto* c = std::get_if<Z4Code>(&in)) {
        p = swe(*c, o.threads, budget_of(o));
        j = json{{"n", c->n()},
                 {"code_type", code_type_text(*c)},
                 {"log2_size", c->log2_size()},
                 {"self_dual", is_self_dual(*c)}};
    } else {
        // an enumerator alone cannot decide self-duality
        p = load_swe(path, o);
        j = json{{"n", p.degree()}};
    }
    j["fsd"] = swe_is_formally_self_dual(p);
    j["type"] = to_string(classify_type(p));
    if (p.mass() > 1) {
        auto d = min_distances(p);
        j["d_lee"] = d.lee;
        j["d_euclid"] = d.euclid;
    }
    emit_json(o, j);
    return kExitOk;
}

int cmd_gain(const std::string& path, const Options& o) {
    Input in = load_input(path);
    if (auto* w = std::get_if<WePoly>(&in)) {
        emit_json(o, report_json(secrecy_gain_binary(*w)));
        return kExitOk;
    }
    SwePoly p = std::holds_alternative<Z4Code>(in) ? swe(std::get<Z4Code>(in), o.threads, budget_of(o))
                                                   : load_swe(path, o);
    json j = report_json(secrecy_gain(p));
    j["n"] = p.degree();
    emit_json(o, j);
    return kExitOk;
}

int cmd_beta(const std::string& path, const Options& o) {
    Input in = load_input(path);
    BetaVector b;
    if (auto* h = std::get_if<io::HPolyFile>(&in))
        b = beta_from_h_t(h->coefficients, h->n);
    else
        b = beta_extract(load_swe(path, o));
    auto g = gain_from_beta(b);
    emit_json(o, json{{"ell", b.ell},
                      {"beta", beta_json(b)},
                      {"strong_condition", g.certified},
                      {"xi", io::format_rational(g.value)},
                      {"xi_value", static_cast<double>(static_cast<long double>(g.value))}});
    return kExitOk;
}

int cmd_bound(int n, bool as_json, const Options& o) {
    require(n >= 1, "bound needs n >= 1");
    auto ub = typeI_upper_bound(n);
    long double v = static_cast<long double>(ub.value);
    if (as_json) {
        emit_json(o, json{{"n", n},
                          {"bound", io::format_rational(ub.value)},
                          {"value", static_cast<double>(v)},
                          {"positivity_holds", ub.positivity_holds}});
    } else {
        std::string line = io::format_rational(ub.value) + " ≈ " + fixed(v, 3);
        if (!ub.positivity_holds) line += " (positivity check fails; value is not a proven bound)";
        emit(o, line + "\n");
    }
    return kExitOk;
}

int cmd_flatness(const std::string& path, double tau, const Options& o) {
    auto l = lattice_a4(load_swe(path, o), o.truncation);
    emit_json(o, json{{"tau", tau}, {"epsilon", static_cast<double>(flatness_factor(l, tau, o.tol))}});
    return kExitOk;
}

int cmd_tau_threshold(const std::string& path, const Options& o) {
    auto l = lattice_a4(load_swe(path, o), o.truncation);
    emit_json(o, json{{"n", l.n}, {"tau_threshold", static_cast<double>(tau_threshold(l, o.tol))}});
    return kExitOk;
}

int cmd_theta(const std::string& path, const Options& o) {
    QSeries s = theta_a4(load_swe(path, o), o.truncation);
    std::ostringstream out;
    out << "exponent,coefficient\n";
    for (int e = 0; e <= s.truncation(); ++e)
        if (s[e] != 0) out << quarter_exponent(e) << ',' << s[e].str() << '\n';
    emit(o, out.str());
    return kExitOk;
}

int cmd_curve(const std::string& path, int points, const Options& o) {
    require(points >= 2, "curve needs at least 2 points");
    SwePoly p = load_swe(path, o);
    const long double full = std::pow(2.0L, static_cast<long double>(p.degree()));
    std::ostringstream out;
    out << "t,xi\n";
    for (int i = 1; i <= points; ++i) {
        long double t = static_cast<long double>(i) / (points + 1);
        out << general(t) << ',' << general(full / h_of_t(p, t)) << '\n';
    }
    emit(o, out.str());
    return kExitOk;
}

int cmd_gray(const std::string& path, const Options& o) {
    Input in = load_input(path);
    WePoly w;
    if (auto* x = std::get_if<WePoly>(&in))
        w = *x;
    else
        w = gray_we_from_swe(load_swe(path, o));
    auto r = secrecy_gain_binary(w);
    json j = report_json(r);
    j.erase("exact_xi");
    j.erase("beta");
    j.erase("strong_condition_verified");
    j["degree"] = w.degree();
    j["mass"] = w.mass().str();
    j["we"] = io::poly_to_json(w, kWeVars);
    emit_json(o, j);
    return kExitOk;
}

std::string read_base_text(const std::string& s) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(s, ec)) return s;
    std::ifstream in(s);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return text;
}

std::string csv_quote(const std::string& s) {
    return s.find_first_of(",;\"") == std::string::npos ? s : "\"" + s + "\"";
}

int cmd_search(const std::string& family, int eta, const std::string& base, std::uint64_t limit, double seconds,
               bool symmetry, const Options& o) {
    SearchSpace s;
    s.family = parse_family(family);
    s.eta = eta;
    s.symmetry = symmetry;
    if (s.family == Family::OextPdcc) {
        require(!base.empty(), "oext-pdcc needs --base with a seed");
        s.base_seed = io::parse_seed(read_base_text(base));
    } else if (s.family == Family::OextBdcc) {
        require(!base.empty(), "oext-bdcc needs --base with border parameters");
        s.base_border = io::parse_border(read_base_text(base));
    }
    SearchBudget b;
    b.max_candidates = limit;
    b.max_seconds = seconds;
    b.enumeration = budget_of(o);
    SearchOutcome r = run_search(s, b, o.threads);

    std::string swe_dir;
    if (!o.out.empty()) {
        swe_dir = o.out + ".swe";
        std::filesystem::create_directories(swe_dir);
    }
    std::vector<SwePoly> distinct;
    std::ostringstream csv;
    csv << "rank,params,d_lee,xi,is_fsd,swe_file\n";
    for (const auto& res : r.results) {
        std::string file;
        if (!swe_dir.empty()) {
            size_t k = 0;
            while (k < distinct.size() && !(distinct[k] == res.swe)) ++k;
            if (k == distinct.size()) {
                distinct.push_back(res.swe);
                io::write_text_file(swe_dir + "/swe_" + std::to_string(k + 1) + ".json",
                                    io::poly_to_json(res.swe, kSweVars).dump(2) + "\n");
            }
            file = std::filesystem::path(swe_dir).filename().string() + "/swe_" + std::to_string(k + 1) + ".json";
        }
        csv << res.rank << ',' << csv_quote(res.params_text) << ',' << res.d_lee << ',' << fixed(res.xi, 6) << ','
            << (res.is_fsd ? "true" : "false") << ',' << file << '\n';
    }
    json summary{{"family", to_string(s.family)},
                 {"eta", s.eta},
                 {"candidates_total", r.candidates_total},
                 {"candidates_visited", r.candidates_visited},
                 {"fsd_count", r.fsd_count},
                 {"complete", r.complete},
                 {"best_xi", r.best_xi},
                 {"reduction_factor", r.reduction_factor}};
    summary["best_params"] = r.results.empty() ? json(nullptr) : json(r.results.front().params_text);
    if (o.out.empty()) {
        std::cout << csv.str();
        std::cerr << summary.dump() << "\n";
    } else {
        io::write_text_file(o.out, csv.str());
        std::cout << summary.dump(2) << "\n";
    }
    return r.complete ? kExitOk : kExitBudget;
}

int cmd_table(double ref_tol, const Options& o) {
    auto rows = cli::table_rows(o.threads, ref_tol);
    std::ostringstream csv;
    csv << "n,code,xi,ref_xi,tau,ref_tau,bound,ref_bound,status\n";
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r.pass;
        csv << r.n << ',' << csv_quote(r.name) << ',' << fixed(r.xi, 3) << ',' << fixed(r.ref_xi, 3) << ',' << fixed(r.tau, 3)
            << ',' << fixed(r.ref_tau, 3) << ',' << fixed(r.bound, 3) << ','
            << (r.ref_bound ? fixed(*r.ref_bound, 3) : "") << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    emit(o, csv.str());
    return ok ? kExitOk : kExitMismatch;
}

int cmd_construct(const std::vector<std::string>& nested, const std::string& pdcc_seed, const std::string& border,
                  const std::vector<int>& a, const std::vector<int>& c, bool oext, int rm, const Options& o) {
    int chosen = !nested.empty() + !pdcc_seed.empty() + !border.empty() + (rm > 0);
    require(chosen == 1, "construct needs exactly one of --nested, --pdcc, --bdcc, --rm");
    Z4Code code = [&] {
        if (!nested.empty()) {
            require(nested.size() == 2, "--nested takes two binary code files");
            return nested_sum(io::to_binary_code(io::read_code_file(nested[0])),
                              io::to_binary_code(io::read_code_file(nested[1])));
        }
        if (rm > 0) return rm_z4(rm);
        Z4Matrix b = !pdcc_seed.empty() ? circulant(io::parse_seed(pdcc_seed))
                                        : bordered_block(io::parse_border(border));
        if (!oext) return standard_form(double_circulant_generator(b));
        std::vector<int> av = a.empty() ? std::vector<int>(b.rows(), 0) : a;
        std::vector<int> cv = c.empty() ? std::vector<int>(b.rows(), 0) : c;
        return odd_extension(OddExtensionParams{b, av, cv});
    }();
    emit_json(o, io::code_to_json(code));
    return kExitOk;
}

int fail(const std::string& kind, const std::string& msg, int code, const json& extra = json::object()) {
    json j{{"error", kind}, {"message", msg}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cerr << j.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z4-linear codes, Construction A4 lattices and their secrecy gains"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--truncation,-T", opt.truncation, "theta truncation in quarter units of q")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", opt.tol, "relative tail tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--budget", opt.budget, "log2 of the codeword enumeration limit")->check(CLI::Range(1, 40));
        sub->add_option("--out,-o", opt.out, "output file (default stdout)");
    };

    std::string input;
    std::function<int()> run;

    auto simple = [&](const char* name, const char* help, auto fn) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("input", input, "code, swe or polynomial JSON file")->required();
        common(s);
        s->callback([&, fn] { run = [&, fn] { return fn(input, opt); }; });
        return s;
    };

    simple("swe", "symmetrized weight enumerator of a code", cmd_swe);
    simple("dual", "generator matrix of the dual code", cmd_dual);
    simple("verify", "formal self-duality, self-duality and Type report", cmd_verify);
    simple("gain", "secrecy gain from a code, swe, or binary weight enumerator", cmd_gain);
    simple("beta", "Gleason beta coefficients and the exact gain", cmd_beta);
    simple("tau-threshold", "smallest tau with flatness factor at most 1/n", cmd_tau_threshold);
    simple("theta", "theta series of the A4 lattice as CSV", cmd_theta);
    simple("gray", "Gray-image weight enumerator and its binary packing gain", cmd_gray);

    double tau = 1;
    auto* flat = simple("flatness", "flatness factor at a given tau", [&tau](const std::string& in, const Options& o) {
        return cmd_flatness(in, tau, o);
    });
    flat->add_option("--tau", tau, "tau > 0")->required()->check(CLI::PositiveNumber);

    int points = 199;
    auto* curve = simple("curve", "secrecy function samples t,xi as CSV",
                         [&points](const std::string& in, const Options& o) { return cmd_curve(in, points, o); });
    curve->add_option("--points", points, "number of interior t samples");

    int bound_n = 0;
    bool bound_json = false;
    auto* bound = app.add_subcommand("bound", "Type I upper bound on the secrecy gain");
    bound->add_option("n", bound_n, "dimension")->required();
    bound->add_flag("--json", bound_json, "JSON output");
    common(bound);
    bound->callback([&] { run = [&] { return cmd_bound(bound_n, bound_json, opt); }; });

    std::string family, base;
    int eta = 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    double seconds = std::numeric_limits<double>::infinity();
    bool symmetry = false;
    auto* search = app.add_subcommand("search", "exhaustive double circulant / odd extension search");
    search->add_option("--family", family, "pdcc, bdcc, oext-pdcc, oext-bdcc")->required();
    search->add_option("--eta", eta, "half length or base size")->required()->check(CLI::PositiveNumber);
    search->add_option("--base", base, "base seed or border parameters (text or file)");
    search->add_option("--limit", limit, "maximum candidates");
    search->add_option("--max-seconds", seconds, "wall-clock limit");
    search->add_flag("--symmetry", symmetry, "canonical representatives only");
    common(search);
    search->callback([&] { run = [&] { return cmd_search(family, eta, base, limit, seconds, symmetry, opt); }; });

    auto* table = app.add_subcommand("table", "regenerate the reproducible table rows with PASS/FAIL");
    common(table);
    double ref_tol = cli::kTableTol;
    table->add_option("--ref-tol", ref_tol, "absolute tolerance against the reference values")->check(CLI::PositiveNumber);
    table->callback([&] { run = [&] { return cmd_table(ref_tol, opt); }; });

    std::vector<std::string> nested;
    std::string pseed, border;
    std::vector<int> av, cv;
    bool oext = false;
    int rm = 0;
    auto* construct = app.add_subcommand("construct", "build a code and print it as JSON");
    construct->add_option("--nested", nested, "A1.json A2.json")->expected(2);
    construct->add_option("--pdcc", pseed, "circulant seed r1,...,r_eta");
    construct->add_option("--bdcc", border, "alpha,beta,gamma;r1,...");
    construct->add_flag("--oext", oext, "odd extension of the double circulant block");
    construct->add_option("--a", av, "odd extension vector a")->delimiter(',');
    construct->add_option("--c", cv, "odd extension vector c")->delimiter(',');
    construct->add_option("--rm", rm, "Z4 Reed-Muller code of length 2^m");
    common(construct);
    construct->callback([&] { run = [&] { return cmd_construct(nested, pseed, border, av, cv, oext, rm, opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("validation", e.what(), kExitValidation);
    }

    try {
        return run();
    } catch (const BudgetExceeded& e) {
        return fail(e.kind(), e.what(), kExitBudget, json{{"required", e.required().str()}});
    } catch (const TailBoundError& e) {
        return fail(e.kind(), e.what(), kExitValidation, json{{"bound", e.bound()}});
    } catch (const ClosureViolation& e) {
        return fail(e.kind(), e.what(), kExitValidation, json{{"rows", {e.first(), e.second()}}});
    } catch (const Error& e) {
        return fail(e.kind(), e.what(), kExitValidation);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}
