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

#ifndef Z4LAT_TESTS_SUPPORT_HPP
#define Z4LAT_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include <z4lat/io.hpp>
#include <z4lat/z4lat.hpp>

#ifndef Z4LAT_DATA_DIR
#define Z4LAT_DATA_DIR "data"
#endif

// Brute-force oracles and random inputs shared by the test programs.
namespace z4lat::testing {

inline std::string data_path(const std::string& name) { return std::string(Z4LAT_DATA_DIR) + "/" + name; }

inline Z4Code load_code(const std::string& name) { return io::to_z4_code(io::read_code_file(data_path(name))); }
inline BinaryCode load_binary(const std::string& name) { return io::to_binary_code(io::read_code_file(data_path(name))); }
inline SwePoly load_swe(const std::string& name) { return io::poly_from_json<3>(io::read_json_file(data_path(name))); }
inline WePoly load_we(const std::string& name) { return io::poly_from_json<2>(io::read_json_file(data_path(name))); }

inline Z4Matrix octacode_block() {
    return Z4Matrix::from_rows({{3, 1, 2, 1}, {1, 2, 3, 1}, {3, 3, 3, 2}, {2, 3, 1, 1}});
}
inline Z4Code octacode() { return standard_form(double_circulant_generator(octacode_block())); }

inline SwePoly octacode_swe() {
    SwePoly p(8);
    p.add({8, 0, 0}, 1);
    p.add({0, 8, 0}, 16);
    p.add({0, 0, 8}, 1);
    p.add({4, 0, 4}, 14);
    p.add({3, 4, 1}, 112);
    p.add({1, 4, 3}, 112);
    return p;
}

inline SwePoly bdcc4_swe() {
    SwePoly p(4);
    p.add({4, 0, 0}, 1);
    p.add({3, 0, 1}, 1);
    p.add({2, 1, 1}, 4);
    p.add({2, 0, 2}, 1);
    p.add({1, 2, 1}, 2);
    p.add({1, 0, 3}, 1);
    p.add({0, 3, 1}, 4);
    p.add({0, 2, 2}, 2);
    return p;
}

// every Z4 combination of the rows, as a set
inline std::set<Z4Vector> span_z4(const std::vector<Z4Vector>& rows, int n) {
    std::set<Z4Vector> s{Z4Vector(n, 0)};
    for (const auto& r : rows) {
        std::set<Z4Vector> next;
        for (const auto& v : s)
            for (int c = 0; c < 4; ++c) {
                Z4Vector w(v);
                for (int j = 0; j < n; ++j) w[j] = z4(w[j] + c * r[j]);
                next.insert(w);
            }
        s.swap(next);
    }
    return s;
}

inline std::set<Z4Vector> span_z4(const Z4Matrix& g) {
    std::vector<Z4Vector> rows;
    for (int i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
    return span_z4(rows, g.cols());
}

inline std::set<Z4Vector> codeword_set(const Z4Code& c) {
    std::set<Z4Vector> s;
    CodewordStream st(c);
    Z4Vector v;
    while (st.next(v)) s.insert(v);
    return s;
}

inline SwePoly naive_swe(const std::set<Z4Vector>& words, int n) {
    SwePoly p(n);
    for (const auto& v : words) {
        int c[4] = {0, 0, 0, 0};
        for (auto x : v) ++c[x];
        p.add({c[0], c[1] + c[3], c[2]}, 1);
    }
    return p;
}

inline std::set<F2Vector> span_f2(const std::vector<F2Vector>& rows, int n) {
    std::set<F2Vector> s{F2Vector(n, 0)};
    for (const auto& r : rows) {
        std::set<F2Vector> next(s);
        for (const auto& v : s) {
            F2Vector w(v);
            for (int j = 0; j < n; ++j) w[j] ^= r[j];
            next.insert(w);
        }
        s.swap(next);
    }
    return s;
}

class Random {
public:
    explicit Random(std::uint64_t seed) : g_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }

    Z4Matrix z4_matrix(int rows, int cols) {
        Z4Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = static_cast<std::uint8_t>(uniform(0, 3));
        return m;
    }

    // random code with n in [nmin, nmax], rows up to n
    Z4Code z4_code(int nmin, int nmax) {
        int n = uniform(nmin, nmax);
        return standard_form(z4_matrix(uniform(1, n), n));
    }

    BinaryCode binary_code(int n, int maxrows) {
        std::vector<F2Vector> rows(uniform(0, maxrows), F2Vector(n));
        for (auto& r : rows)
            for (auto& x : r) x = static_cast<std::uint8_t>(uniform(0, 1));
        return BinaryCode(n, rows);
    }

    CirculantSeed seed(int eta) {
        CirculantSeed r(eta);
        for (auto& x : r) x = uniform(0, 3);
        return r;
    }

    std::vector<int> bits(int k) {
        std::vector<int> v(k);
        for (auto& x : v) x = uniform(0, 1);
        return v;
    }

    std::mt19937_64& engine() { return g_; }

private:
    std::mt19937_64 g_;
};

}  // namespace z4lat::testing

#endif
