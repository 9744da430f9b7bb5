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

#ifndef Z4LAT_CONSTRUCTIONS_HPP
#define Z4LAT_CONSTRUCTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "binary.hpp"
#include "enumerators.hpp"
#include "z4.hpp"

namespace z4lat {

// ---- nested binary sums A1 + 2 A2 ----

inline bool closure_check(const BinaryCode& a1, const BinaryCode& a2, std::pair<int, int>* offending = nullptr) {
    require(a1.n() == a2.n(), "closure_check needs codes of equal length");
    if (!a2.contains(a1)) {
        if (offending) *offending = {-1, -1};
        return false;
    }
    const auto& g = a1.generator();
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (!a2.contains(hadamard(g[i], g[j]))) {
                if (offending) *offending = {static_cast<int>(i), static_cast<int>(j)};
                return false;
            }
    return true;
}

inline Z4Code nested_sum(const BinaryCode& a1, const BinaryCode& a2) {
    std::pair<int, int> bad;
    if (!closure_check(a1, a2, &bad)) {
        if (bad.first < 0) throw ClosureViolation("A1 is not contained in A2", -1, -1);
        throw ClosureViolation("product of A1 basis rows " + std::to_string(bad.first) + " and " +
                                   std::to_string(bad.second) + " is not in A2",
                               bad.first, bad.second);
    }
    const int n = a1.n();
    std::vector<std::vector<int>> rows;
    std::vector<F2Vector> span = a1.generator();
    for (const auto& g : a1.generator()) rows.emplace_back(g.begin(), g.end());
    for (const auto& g : a2.generator()) {
        if (BinaryCode(n, span).contains(g)) continue;
        span.push_back(g);
        std::vector<int> r(g.begin(), g.end());
        for (auto& v : r) v *= 2;
        rows.push_back(r);
    }
    return standard_form(Z4Matrix::from_rows(rows, n));
}

inline bool fsd_precondition_check(const BinaryCode& a1, const BinaryCode& a2) {
    require(a1.n() == a2.n(), "fsd_precondition_check needs codes of equal length");
    require(a1.n() % 2 == 0, "nested FSD construction needs even length");
    return we(a1) == we(a2.dual()) && we(a2) == we(a1.dual());
}

// ---- Reed-Muller ----

inline BinaryCode reed_muller(int r, int v) {
    require(v >= 0 && v <= 20, "reed_muller: v out of range");
    require(r >= 0 && r <= v, "reed_muller: r must satisfy 0 <= r <= v");
    const int n = 1 << v;
    std::vector<F2Vector> rows;
    // graded-lex monomials; point p has x_i = bit (v-i) of p, so x1 is the most significant
    for (int d = 0; d <= r; ++d) {
        std::vector<int> idx(d);
        for (int i = 0; i < d; ++i) idx[i] = i;
        for (;;) {
            F2Vector row(n);
            for (int p = 0; p < n; ++p) {
                int val = 1;
                for (int i : idx) val &= (p >> (v - 1 - i)) & 1;
                row[p] = static_cast<std::uint8_t>(val);
            }
            rows.push_back(row);
            int k = d - 1;
            while (k >= 0 && idx[k] == v - d + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int i = k + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return BinaryCode(n, rows);
}

inline Z4Code rm_z4(int m) {
    require(m >= 3, "rm_z4 needs m >= 3");
    return nested_sum(reed_muller(1, m), reed_muller(m - 2, m));
}

// ---- double circulant codes ----

using CirculantSeed = std::vector<int>;

struct BorderParams {
    int alpha = 0, beta = 0, gamma = 0;
    CirculantSeed r;  // length eta - 1
    int eta() const { return static_cast<int>(r.size()) + 1; }
};

struct OddExtensionParams {
    Z4Matrix B;
    std::vector<int> a, c;
};

// row i is the i-fold right cyclic shift of r
inline Z4Matrix circulant(const CirculantSeed& r) {
    const int e = static_cast<int>(r.size());
    Z4Matrix m(e, e);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) m(i, j) = z4(r[((j - i) % e + e) % e]);
    return m;
}

inline Z4Matrix bordered_block(const BorderParams& p) {
    const int e = p.eta();
    require(e >= 2, "bordered circulant needs eta >= 2");
    Z4Matrix b(e, e), r = circulant(p.r);
    b(0, 0) = z4(p.alpha);
    for (int j = 1; j < e; ++j) b(0, j) = z4(p.beta);
    for (int i = 1; i < e; ++i) {
        b(i, 0) = z4(p.gamma);
        for (int j = 1; j < e; ++j) b(i, j) = r(i - 1, j - 1);
    }
    return b;
}

// (I | B)
inline Z4Matrix double_circulant_generator(const Z4Matrix& b) {
    const int e = b.rows();
    Z4Matrix g(e, 2 * e);
    for (int i = 0; i < e; ++i) {
        g(i, i) = 1;
        for (int j = 0; j < e; ++j) g(i, e + j) = b(i, j);
    }
    return g;
}

inline Z4Code pdcc(const CirculantSeed& r) {
    require(!r.empty(), "pdcc needs eta >= 1");
    return standard_form(double_circulant_generator(circulant(r)));
}

inline Z4Code bdcc(const BorderParams& p) { return standard_form(double_circulant_generator(bordered_block(p))); }

struct BdccConditions {
    std::array<bool, 4> holds{};
    bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

inline BdccConditions bdcc_self_dual_conditions(const BorderParams& p) {
    const int e = p.eta();
    long long sr = 0, sr2 = 0, cross = 0;
    for (size_t i = 0; i < p.r.size(); ++i) {
        sr += p.r[i];
        sr2 += p.r[i] * p.r[i];
        for (size_t j = i + 1; j < p.r.size(); ++j) cross += p.r[i] * p.r[j];
    }
    const long long a = p.alpha, b = p.beta, g = p.gamma;
    BdccConditions c;
    c.holds[0] = z4(a * a + (e - 1) * b * b) == 3;
    c.holds[1] = z4(a * g + b * sr) == 0;
    c.holds[2] = z4(g * g + sr2) == 3;
    c.holds[3] = z4((e - 2) * g * g + 2 * cross) == 0;
    return c;
}

// isodual when beta = gamma = 0 or both nonzero
inline bool bdcc_isodual_predicate(const BorderParams& p) {
    return (z4(p.beta) == 0) == (z4(p.gamma) == 0);
}

inline bool no_self_dual_pdcc_check(int eta, int max_eta = 8) {
    if (eta > max_eta)
        throw BudgetExceeded("pdcc seed sweep for eta=" + std::to_string(eta) + " exceeds the limit",
                             pow2(2u * eta));
    require(eta >= 1, "eta must be positive");
    const long long total = 1LL << (2 * eta);
    CirculantSeed r(eta);
    for (long long s = 0; s < total; ++s) {
        for (int i = 0; i < eta; ++i) r[i] = static_cast<int>((s >> (2 * i)) & 3);
        Z4Matrix g = double_circulant_generator(circulant(r));
        if ((g * g.transpose()).is_zero()) return false;
    }
    return true;
}

inline Z4Matrix odd_extension_generator(const OddExtensionParams& p) {
    const int e = p.B.rows();
    require(p.B.cols() == e, "odd extension needs a square B");
    require(static_cast<int>(p.a.size()) == e && static_cast<int>(p.c.size()) == e, "a and c must have length eta");
    for (int i = 0; i < e; ++i) require((p.a[i] == 0 || p.a[i] == 1) && (p.c[i] == 0 || p.c[i] == 1), "a, c must be binary");
    Z4Matrix g(e + 1, 2 * e + 1);
    for (int i = 0; i < e; ++i) {
        g(i, i) = 1;
        g(i, e) = z4(p.a[i]);
        for (int j = 0; j < e; ++j) g(i, e + 1 + j) = p.B(i, j);
    }
    g(e, e) = 2;
    for (int j = 0; j < e; ++j) g(e, e + 1 + j) = z4(2 * p.c[j]);
    return g;
}

inline Z4Code odd_extension(const OddExtensionParams& p) { return standard_form(odd_extension_generator(p)); }

inline bool oext_self_dual_check(const OddExtensionParams& p) {
    const int e = p.B.rows();
    Z4Matrix bbt = p.B * p.B.transpose();
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            if (z4(p.a[i] * p.a[j] + bbt(i, j)) != (i == j ? 3 : 0)) return false;
    for (int i = 0; i < e; ++i) {
        long long s = 2 * p.a[i];
        for (int j = 0; j < e; ++j) s += 2 * p.c[j] * p.B(i, j);
        if (z4(s) != 0) return false;
    }
    return true;
}

}  // namespace z4lat

#endif
