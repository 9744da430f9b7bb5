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

#ifndef Z4LAT_IO_HPP
#define Z4LAT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "poly.hpp"
#include "z4.hpp"

// JSON and text formats for codes, polynomials and search parameters.
namespace z4lat::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
}

// ---- codes ----

struct CodeFile {
    int ring = 4;
    int n = 0;
    std::vector<std::vector<int>> generator;
};

inline CodeFile code_from_json(const json& j) {
    CodeFile f;
    try {
        f.ring = j.at("ring").get<int>();
        f.n = j.at("n").get<int>();
        f.generator = j.at("generator").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("code file: ") + e.what());
    }
    require(f.ring == 2 || f.ring == 4, "code file: ring must be 2 or 4");
    require(f.n > 0, "code file: n must be positive");
    for (const auto& r : f.generator) {
        require(static_cast<int>(r.size()) == f.n, "code file: row length differs from n");
        for (int v : r) require(v >= 0 && v < f.ring, "code file: entry outside the ring");
    }
    return f;
}

inline CodeFile read_code_file(const std::string& path) { return code_from_json(read_json_file(path)); }

inline Z4Code to_z4_code(const CodeFile& f) {
    require(f.ring == 4, "expected a Z4 code (ring 4)");
    return standard_form(Z4Matrix::from_rows(f.generator, f.n));
}

inline BinaryCode to_binary_code(const CodeFile& f) {
    require(f.ring == 2, "expected a binary code (ring 2)");
    std::vector<F2Vector> rows;
    for (const auto& r : f.generator) rows.emplace_back(r.begin(), r.end());
    return BinaryCode(f.n, rows);
}

inline json matrix_json(const Z4Matrix& m) { return m.to_rows(); }

inline json code_to_json(const Z4Code& c) {
    return json{{"ring", 4}, {"n", c.n()}, {"generator", matrix_json(c.generator_input_order())}};
}

// ---- polynomials ----

template <int N>
json poly_to_json(const SparsePoly<N>& p, const std::vector<std::string>& vars) {
    require(vars.size() == N, "variable names do not match the arity");
    json terms = json::array();
    // highest powers of the first variable first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(json{{"exp", it->first}, {"coef", it->second.str()}});
    return json{{"degree", p.degree()}, {"vars", vars}, {"terms", terms}};
}

inline BigInt parse_bigint(const std::string& s) {
    require(!s.empty(), "empty coefficient");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), "bad coefficient '" + s + "'");
    for (; i < s.size(); ++i) require(s[i] >= '0' && s[i] <= '9', "bad coefficient '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

inline BigInt coef_from_json(const json& c) {
    if (c.is_string()) return parse_bigint(c.get<std::string>());
    if (c.is_number_integer()) return BigInt(c.get<long long>());
    throw ValidationError("coefficients must be decimal strings or integers");
}

// vars are checked only for count; names are informational
template <int N>
SparsePoly<N> poly_from_json(const json& j) {
    try {
        SparsePoly<N> p(j.at("degree").get<int>());
        if (j.contains("vars")) require(j.at("vars").size() == N, "polynomial has the wrong number of variables");
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exp").get<std::vector<int>>();
            require(e.size() == N, "exponent vector of the wrong length");
            std::array<int, N> ea{};
            std::copy(e.begin(), e.end(), ea.begin());
            p.add(ea, coef_from_json(t.at("coef")));
        }
        return p;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("polynomial file: ") + e.what());
    }
}

inline int poly_arity(const json& j) {
    if (j.contains("vars")) return static_cast<int>(j.at("vars").size());
    require(j.contains("terms") && !j.at("terms").empty(), "cannot infer the number of variables");
    return static_cast<int>(j.at("terms")[0].at("exp").size());
}

// h(t) file: one variable; "degree" is the code length
struct HPolyFile {
    int n = 0;
    std::vector<BigInt> coefficients;  // index = power of t
};

inline HPolyFile hpoly_from_json(const json& j) {
    HPolyFile h;
    try {
        h.n = j.at("degree").get<int>();
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exp").get<std::vector<int>>();
            require(e.size() == 1 && e[0] >= 0, "h polynomial terms need one non-negative exponent");
            if (static_cast<size_t>(e[0]) >= h.coefficients.size()) h.coefficients.resize(e[0] + 1, 0);
            h.coefficients[e[0]] += coef_from_json(t.at("coef"));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("h polynomial file: ") + e.what());
    }
    return h;
}

// ---- parameter text ----

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
        require(a != std::string::npos, "empty entry in list '" + s + "'");
        item = item.substr(a, b - a + 1);
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ValidationError("not an integer: '" + item + "'");
        }
        require(pos == item.size(), "not an integer: '" + item + "'");
        out.push_back(v);
    }
    require(!out.empty(), "empty list");
    return out;
}

inline CirculantSeed parse_seed(const std::string& s) {
    auto v = parse_int_list(s);
    for (int x : v) require(x >= 0 && x < 4, "seed entries must lie in 0..3");
    return v;
}

// "alpha,beta,gamma;r1,...,r_{eta-1}"
inline BorderParams parse_border(const std::string& s) {
    auto semi = s.find(';');
    require(semi != std::string::npos, "border parameters look like 'alpha,beta,gamma;r1,...'");
    auto head = parse_int_list(s.substr(0, semi));
    require(head.size() == 3, "border head needs exactly alpha,beta,gamma");
    for (int x : head) require(x >= 0 && x < 4, "alpha, beta, gamma must lie in 0..3");
    return BorderParams{head[0], head[1], head[2], parse_seed(s.substr(semi + 1))};
}

inline std::string format_rational(const BigRational& r) {
    auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace z4lat::io

#endif
