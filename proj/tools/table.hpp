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

#ifndef Z4LAT_TOOLS_TABLE_HPP
#define Z4LAT_TOOLS_TABLE_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <z4lat/z4lat.hpp>

// Reproducible rows of the published secrecy gain table, with reference values.
namespace z4lat::cli {

constexpr double kTableTol = 5e-3;

struct TableRow {
    int n = 0;
    std::string name;
    double xi = 0, ref_xi = 0;
    double tau = 0, ref_tau = 0;
    double bound = 0;
    std::optional<double> ref_bound;
    bool pass = false;
};

inline Z4Matrix octacode_block() {
    return Z4Matrix::from_rows({{3, 1, 2, 1}, {1, 2, 3, 1}, {3, 3, 3, 2}, {2, 3, 1, 1}});
}

inline SwePoly c8_swe() {
    SwePoly p(8);
    p.add({0, 0, 8}, 1);
    p.add({0, 8, 0}, 64);
    p.add({1, 2, 5}, 12);
    p.add({1, 6, 1}, 64);
    p.add({2, 0, 6}, 16);
    p.add({3, 2, 3}, 40);
    p.add({4, 0, 4}, 30);
    p.add({5, 2, 1}, 12);
    p.add({6, 0, 2}, 16);
    p.add({8, 0, 0}, 1);
    return p;
}

inline Z4Code nested_dim12() {
    auto bits = [](const std::vector<std::string>& rows) {
        std::vector<F2Vector> out;
        for (const auto& r : rows) {
            F2Vector v;
            for (char ch : r) v.push_back(static_cast<std::uint8_t>(ch - '0'));
            out.push_back(v);
        }
        return BinaryCode(12, out);
    };
    std::vector<std::string> a1{"101110001111", "010001111111"};
    std::vector<std::string> a2 = a1;
    for (const char* r : {"000000001111", "000001111110", "011110000111", "000110001111", "000000111111",
                          "000000011000", "000000001100", "001010001111"})
        a2.push_back(r);
    return nested_sum(bits(a1), bits(a2));
}

// extended Z4 lift of the binary Golay code: shifts of g plus an overall parity entry
inline Z4Code golay_z4() {
    const std::vector<int> g{3, 2, 1, 0, 1, 1, 1, 2, 0, 0, 3, 1};
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 12; ++i) {
        std::vector<int> r(24, 0);
        int s = 0;
        for (int j = 0; j < 12; ++j) {
            r[i + j] = g[j];
            s += g[j];
        }
        r[23] = (4 - s % 4) % 4;
        rows.push_back(r);
    }
    return standard_form(Z4Matrix::from_rows(rows, 24));
}

inline std::vector<TableRow> table_rows(int threads = 1, double tol = kTableTol) {
    struct Spec {
        int n;
        std::string name;
        std::function<SwePoly()> swe_of;
        double ref_xi, ref_tau;
        std::optional<double> ref_bound;
    };
    auto code = [threads](std::function<Z4Code()> f) {
        return [f, threads] { return swe(f(), threads, EnumerationBudget{24}); };
    };
    const CirculantSeed s6{0, 1, 2}, s12{0, 2, 1, 2, 2, 2};
    const BorderParams b4{0, 2, 2, {1}};
    std::vector<Spec> specs{
        {4, "bdcc 0,2,2;1", code([&] { return bdcc(b4); }), 1.052, 0.939, 1},
        {5, "oext bdcc 0,2,2;1", code([&] { return odd_extension({bordered_block(b4), {0, 0}, {0, 0}}); }), 1.052, 0.835, 1},
        {6, "pdcc 0,1,2", code([&] { return pdcc(s6); }), 1.172, 0.853, 1},
        {7, "oext pdcc 0,1,2", code([&] { return odd_extension({circulant(s6), {0, 0, 0}, {0, 0, 0}}); }), 1.172, 0.788, 1},
        {8, "octacode", code([] { return standard_form(double_circulant_generator(octacode_block())); }), 1.333, 0.831, 1.333},
        {8, "C8", c8_swe, 1.282, 0.801, 1.333},
        {9, "oext octacode", code([] { return odd_extension({octacode_block(), {0, 0, 0, 0}, {0, 0, 0, 0}}); }), 1.333, 0.776, 1.391},
        {12, "pdcc 0,2,1,2,2,2", code([&] { return pdcc(s12); }), 1.657, 0.787, 1.6},
        {12, "A1+2A2", code(nested_dim12), 1.6, 0.767, 1.6},
        {13, "oext pdcc 0,2,1,2,2,2", code([&] { return odd_extension({circulant(s12), {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}}); }), 1.704, 0.764, 1.684},
        {16, "rm_z4(4)", code([] { return rm_z4(4); }), 1.778, 0.701, 2.246},
        {24, "Golay Z4", code(golay_z4), 4.063, 0.816, 4.063},
    };
    std::vector<TableRow> rows;
    for (const auto& s : specs) {
        SwePoly p = s.swe_of();
        TableRow r;
        r.n = s.n;
        r.name = s.name;
        r.xi = static_cast<double>(secrecy_gain(p).xi);
        r.tau = static_cast<double>(tau_threshold(lattice_a4(p, 400)));
        r.bound = static_cast<double>(static_cast<long double>(typeI_upper_bound(s.n).value));
        r.ref_xi = s.ref_xi;
        r.ref_tau = s.ref_tau;
        r.ref_bound = s.ref_bound;
        r.pass = std::fabs(r.xi - r.ref_xi) <= tol && std::fabs(r.tau - r.ref_tau) <= tol &&
                 (!r.ref_bound || std::fabs(r.bound - *r.ref_bound) <= tol);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace z4lat::cli

#endif
