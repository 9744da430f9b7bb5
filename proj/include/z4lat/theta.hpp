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

#ifndef Z4LAT_THETA_HPP
#define Z4LAT_THETA_HPP

#include <array>
#include <cmath>
#include <vector>

#include "poly.hpp"
#include "qseries.hpp"

namespace z4lat {

constexpr int kDefaultTruncation = 200;

// p(s_1, ..., s_N) with memoised powers of each series. The majorant is
// sum |coef| prod M_i, built directly rather than by chaining closures.
template <int N, class Coeff>
QSeries substitute_series(const SparsePoly<N, Coeff>& p, const std::array<QSeries, N>& s) {
    int T = s[0].truncation();
    for (const auto& x : s) T = std::min(T, x.truncation());
    std::array<std::vector<QSeries>, N> pw;
    for (int i = 0; i < N; ++i) {
        int maxe = 0;
        for (const auto& [e, c] : p.terms()) maxe = std::max(maxe, e[i]);
        pw[i].push_back(QSeries::constant(T, 1));
        QSeries base = s[i].truncated(T);
        for (int k = 1; k <= maxe; ++k) pw[i].push_back(pw[i].back() * base);
    }
    QSeries out(T);
    std::vector<BigInt> acc(static_cast<size_t>(T) + 1, 0);
    for (const auto& [e, c] : p.terms()) {
        QSeries t = pw[0][e[0]];
        for (int i = 1; i < N; ++i)
            if (e[i]) t = t * pw[i][e[i]];
        for (int k = 0; k <= T; ++k)
            if (t[k] != 0) acc[k] += BigInt(c) * t[k];
    }
    for (int k = 0; k <= T; ++k) out.set(k, acc[k]);

    bool all = true;
    for (const auto& x : s) all = all && static_cast<bool>(x.majorant());
    if (all) {
        std::vector<std::pair<std::array<int, N>, long double>> terms;
        for (const auto& [e, c] : p.terms()) terms.emplace_back(e, std::fabs(static_cast<long double>(c)));
        std::array<QSeries::Majorant, N> ms;
        for (int i = 0; i < N; ++i) ms[i] = s[i].majorant();
        out.set_majorant([terms, ms](long double tau) {
            std::array<long double, N> v;
            for (int i = 0; i < N; ++i) v[i] = ms[i](tau);
            long double sum = 0;
            for (const auto& [e, c] : terms) {
                long double t = c;
                for (int i = 0; i < N; ++i)
                    if (e[i]) t *= std::pow(v[i], static_cast<long double>(e[i]));
                sum += t;
            }
            return sum;
        });
    }
    return out;
}

// Theta of (1/2)(C + 4Z^n): swe(theta3(4z), theta2(z)/2, theta2(4z))
inline QSeries theta_a4(const SwePoly& p, int T = kDefaultTruncation) {
    return substitute_series<3>(p, {jacobi_theta(3, 4, T), jacobi_theta(2, 1, T).divided_exact(2), jacobi_theta(2, 4, T)});
}

// 2-level Construction C: jwe(theta3(4z), theta2(4z), theta2(z)/2, theta2(z)/2)
inline QSeries theta_construction_c(const JwePoly& p, int T = kDefaultTruncation) {
    QSeries half = jacobi_theta(2, 1, T).divided_exact(2);
    return substitute_series<4>(p, {jacobi_theta(3, 4, T), jacobi_theta(2, 4, T), half, half});
}

// (1/sqrt 2)(A + 2Z^n): W(theta3(2z), theta2(2z))
inline QSeries theta_binary_a(const WePoly& w, int T = kDefaultTruncation) {
    return substitute_series<2>(w, {jacobi_theta(3, 2, T), jacobi_theta(2, 2, T)});
}

// Numeric values at z = i tau straight from theta constants (no truncation).
inline long double theta_a4_value(const SwePoly& p, long double tau) {
    return p.eval({jacobi::theta3(4 * tau), jacobi::theta2(tau) / 2, jacobi::theta2(4 * tau)});
}
inline long double theta_binary_a_value(const WePoly& w, long double tau) {
    return w.eval({jacobi::theta3(2 * tau), jacobi::theta2(2 * tau)});
}

struct LatticeSpec {
    int n = 0;
    long double volume = 1;
    QSeries theta;
};

// Lambda_A4(C): volume 2^n / |C|
inline LatticeSpec lattice_a4(const SwePoly& p, int T = kDefaultTruncation) {
    LatticeSpec l;
    l.n = p.degree();
    l.volume = std::pow(2.0L, static_cast<long double>(p.degree())) / static_cast<long double>(p.mass());
    l.theta = theta_a4(p, T);
    return l;
}

inline LatticeSpec lattice_zn(int n, int T = kDefaultTruncation) {
    return LatticeSpec{n, 1, jacobi_theta(3, 1, T).pow(n)};
}

inline long double jacobi_identity_check(const LatticeSpec& l, const LatticeSpec& dual, long double tau,
                                         long double tol = 1e-12L) {
    require(l.n == dual.n, "dimension mismatch");
    long double lhs = eval_qseries(l.theta, tau, tol).value;
    long double rhs = dual.volume * std::pow(tau, -l.n / 2.0L) * eval_qseries(dual.theta, 1 / tau, tol).value;
    return std::fabs(lhs - rhs);
}

}  // namespace z4lat

#endif
