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

#ifndef Z4LAT_SECRECY_HPP
#define Z4LAT_SECRECY_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "enumerators.hpp"
#include "theta.hpp"

namespace z4lat {

using UPoly = std::vector<BigInt>;       // dense univariate, index = exponent
using QPoly = std::vector<BigRational>;  // same with rational coefficients

// ---- h(t) = swe(1+t, (1-t^4)^{1/4}, 1-t) ----

inline long double h_of_t(const SwePoly& p, long double t) {
    require(t > 0 && t < 1, "h(t) is defined for 0 < t < 1");
    return p.eval({1 + t, std::pow(1 - t * t * t * t, 0.25L), 1 - t});
}

inline long double t_of_tau(long double tau) {
    require(tau > 0, "t(tau) needs tau > 0");
    return jacobi::theta4(tau) / jacobi::theta3(tau);
}

// inverse of the increasing map tau -> t(tau)
inline long double tau_of_t(long double t) {
    require(t > 0 && t < 1, "tau(t) needs 0 < t < 1");
    long double lo = -8, hi = 8;
    for (int it = 0; it < 200; ++it) {
        long double mid = (lo + hi) / 2;
        (t_of_tau(std::exp(mid)) < t ? lo : hi) = mid;
    }
    return std::exp((lo + hi) / 2);
}

// Xi(tau) through the theta constants; volume-normalised against nu Z^n.
inline long double secrecy_function_theta(const SwePoly& p, long double tau) {
    const int n = p.degree();
    long double vol = std::pow(2.0L, static_cast<long double>(n)) / static_cast<long double>(p.mass());
    long double nu2 = std::pow(vol, 2.0L / n);
    return std::pow(jacobi::theta3(tau * nu2), static_cast<long double>(n)) / theta_a4_value(p, tau);
}
inline long double secrecy_function_h(const SwePoly& p, long double tau) {
    return std::pow(2.0L, static_cast<long double>(p.degree())) / h_of_t(p, t_of_tau(tau));
}

namespace detail {

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline UPoly upoly_pow(const UPoly& a, int k) {
    UPoly r{1};
    for (int i = 0; i < k; ++i) r = upoly_mul(r, a);
    return r;
}

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigRational qeval(const QPoly& p, const BigRational& x) {
    BigRational s = 0;
    for (size_t i = p.size(); i-- > 0;) s = s * x + p[i];
    return s;
}

inline QPoly qrem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRational f = a.back() / b.back();
        size_t sh = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline int sign_changes(const std::vector<QPoly>& seq, const BigRational& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        BigRational v = qeval(p, x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

// Exact h as a polynomial in t; needs every b-exponent divisible by 4.
inline UPoly h_polynomial_t(const SwePoly& p) {
    UPoly h;
    const UPoly one_plus{1, 1}, one_minus{1, -1}, one_minus_t4{1, 0, 0, 0, -1};
    for (const auto& [e, c] : p.terms()) {
        if (e[1] % 4) throw NotGleasonForm("b-exponent " + std::to_string(e[1]) + " is not divisible by 4");
        UPoly t = detail::upoly_mul(detail::upoly_pow(one_plus, e[0]), detail::upoly_pow(one_minus, e[2]));
        t = detail::upoly_mul(t, detail::upoly_pow(one_minus_t4, e[1] / 4));
        if (h.size() < t.size()) h.resize(t.size(), 0);
        for (size_t i = 0; i < t.size(); ++i) h[i] += c * t[i];
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

// h(t) -> h as a polynomial in v = t^4; fails when other powers of t survive.
inline UPoly h_polynomial_v(const UPoly& ht) {
    UPoly hv;
    for (size_t i = 0; i < ht.size(); ++i) {
        if (ht[i] == 0) continue;
        if (i % 4) throw NotGleasonForm("h(t) has a t^" + std::to_string(i) + " term; not a polynomial in t^4");
        if (hv.size() <= i / 4) hv.resize(i / 4 + 1, 0);
        hv[i / 4] = ht[i];
    }
    return hv;
}

struct BetaVector {
    int ell = 0;
    std::vector<BigRational> betas;  // beta_0 .. beta_ell
};

// h(v) = 2^n sum_s beta_s (v - v^2)^s, solved from the lowest power of v upward.
inline BetaVector beta_from_hv(const UPoly& hv, int n) {
    BetaVector b;
    b.ell = n / 8;
    const BigInt scale = pow2(static_cast<unsigned>(n));
    QPoly r(std::max<size_t>(hv.size(), static_cast<size_t>(2 * b.ell + 1)), 0);
    for (size_t i = 0; i < hv.size(); ++i) r[i] = BigRational(hv[i], scale);
    for (int s = 0; s <= b.ell; ++s) {
        BigRational beta = r[s];
        b.betas.push_back(beta);
        if (beta == 0) continue;
        // (v - v^2)^s = sum_i C(s,i) (-1)^i v^{s+i}
        BigInt binom = 1;
        for (int i = 0; i <= s; ++i) {
            if (s + i >= static_cast<int>(r.size())) r.resize(s + i + 1, 0);
            r[s + i] -= beta * BigRational(i % 2 ? -binom : binom);
            binom = binom * (s - i) / (i + 1);
        }
    }
    for (const auto& x : r)
        if (x != 0) throw NotGleasonForm("h is outside the span of (v - v^2)^s, s <= floor(n/8)");
    return b;
}

inline BetaVector beta_extract(const SwePoly& p) { return beta_from_hv(h_polynomial_v(h_polynomial_t(p)), p.degree()); }

// h given directly as a polynomial in t (coefficients indexed by power of t)
inline BetaVector beta_from_h_t(const UPoly& ht, int n) { return beta_from_hv(h_polynomial_v(ht), n); }

// g(u) = sum_{s>=1} s beta_s u^{s-1} < 0 on (0, 1/4], decided with a Sturm sequence.
inline bool strong_condition_check(const BetaVector& b) {
    QPoly g;
    for (size_t s = 1; s < b.betas.size(); ++s) g.push_back(BigRational(static_cast<long>(s)) * b.betas[s]);
    detail::trim(g);
    if (g.empty()) return false;
    // strip roots at u = 0; they do not affect the sign on (0, 1/4]
    size_t z = 0;
    while (z < g.size() && g[z] == 0) ++z;
    g.erase(g.begin(), g.begin() + static_cast<long>(z));
    const BigRational quarter(1, 4);
    if (detail::qeval(g, quarter) >= 0) return false;
    if (g.size() == 1) return true;
    std::vector<QPoly> seq{g};
    QPoly d;
    for (size_t i = 1; i < g.size(); ++i) d.push_back(BigRational(static_cast<long>(i)) * g[i]);
    detail::trim(d);
    seq.push_back(d);
    while (seq.back().size() > 1) {
        QPoly r = detail::qrem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        seq.push_back(r);
    }
    int roots = detail::sign_changes(seq, BigRational(0)) - detail::sign_changes(seq, quarter);
    return roots == 0;
}

struct ExactGain {
    BigRational value;
    bool certified = false;  // strong condition holds, so this is the supremum
};

inline ExactGain gain_from_beta(const BetaVector& b) {
    BigRational s = 0, w = 1;
    for (const auto& beta : b.betas) {
        s += beta * w;
        w /= 4;
    }
    if (s == 0) throw ValidationError("gain_from_beta: zero denominator");
    return {1 / s, strong_condition_check(b)};
}

struct SecrecyReport {
    long double t_star = 0;
    long double tau_star = 0;
    long double xi = 0;
    std::optional<BigRational> exact_xi;
    std::optional<BetaVector> beta;
    bool at_symmetry_point = false;
    bool strong_condition_verified = false;
    bool fsd = true;
};

inline const long double kSymmetryT = std::pow(2.0L, -0.25L);

// argmin of f on (lo, hi): grid scan, then golden section inside the best bracket
inline long double minimise_scalar(const std::function<long double(long double)>& f, long double lo, long double hi,
                                   int grid, long double tol) {
    int best = 1;
    long double fb = f(lo + (hi - lo) * 1 / (grid + 1));
    for (int i = 2; i <= grid; ++i) {
        long double v = f(lo + (hi - lo) * i / (grid + 1));
        if (v < fb) {
            fb = v;
            best = i;
        }
    }
    long double a = lo + (hi - lo) * (best - 1) / (grid + 1), b = lo + (hi - lo) * (best + 1) / (grid + 1);
    const long double gr = (std::sqrt(5.0L) - 1) / 2;
    long double c = b - gr * (b - a), d = a + gr * (b - a);
    long double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2;
}

inline SecrecyReport secrecy_gain(const SwePoly& p) {
    SecrecyReport r;
    const int n = p.degree();
    r.fsd = swe_is_formally_self_dual(p);
    const long double full = std::pow(2.0L, static_cast<long double>(n));
    auto f = [&](long double t) { return h_of_t(p, t); };
    r.t_star = minimise_scalar(f, 0, 1, 1024, 1e-10L);
    r.xi = full / f(r.t_star);
    if (r.xi < 1) r.xi = 1;  // uncoded baseline
    r.tau_star = tau_of_t(r.t_star);
    r.at_symmetry_point = std::fabs(r.t_star - kSymmetryT) < 1e-6L;
    if (r.fsd) {
        try {
            BetaVector b = beta_extract(p);
            auto g = gain_from_beta(b);
            r.beta = b;
            r.strong_condition_verified = g.certified;
            if (g.certified) r.exact_xi = g.value;
        } catch (const NotGleasonForm&) {
        }
    }
    return r;
}

// ---- Type I upper bound ----

struct UpperBound {
    BigRational value;
    bool positivity_holds = true;
};

inline UpperBound typeI_upper_bound(int n) {
    require(n >= 2 && n <= 40, "typeI_upper_bound supports 2 <= n <= 40");
    const int ell = n / 8, L = ell + 1;
    // integer-q series, first L coefficients
    auto mul = [L](const UPoly& a, const UPoly& b) {
        UPoly r(L, 0);
        for (int i = 0; i < L; ++i)
            for (int j = 0; i + j < L; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto pw = [&](const UPoly& a, int k) {
        UPoly r(L, 0);
        r[0] = 1;
        for (int i = 0; i < k; ++i) r = mul(r, a);
        return r;
    };
    UPoly th3(L, 0), th4(L, 0);
    th3[0] = th4[0] = 1;
    for (int m = 1; m * m < L; ++m) {
        th3[m * m] = 2;
        th4[m * m] = m % 2 ? -2 : 2;
    }
    UPoly t3_4 = pw(th3, 4), t4_4 = pw(th4, 4);
    UPoly e8 = pw(th3, 8);
    UPoly cross = mul(t3_4, t4_4), t4_8 = mul(t4_4, t4_4);
    for (int i = 0; i < L; ++i) e8[i] = e8[i] - cross[i] + t4_8[i];

    std::vector<std::vector<BigRational>> S(L, std::vector<BigRational>(L));
    for (int s = 0; s <= ell; ++s) {
        UPoly col = mul(pw(th3, n - 8 * s), pw(e8, s));
        for (int r = 0; r < L; ++r) S[r][s] = col[r];
    }
    // solve S^T y = omega, then omega S^{-1} e_j = y_j
    std::vector<BigRational> omega(L);
    omega[0] = 1;
    for (int s = 1; s < L; ++s) omega[s] = omega[s - 1] * BigRational(3, 4);
    std::vector<std::vector<BigRational>> a(L, std::vector<BigRational>(L + 1));
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) a[i][j] = S[j][i];
        a[i][L] = omega[i];
    }
    for (int c = 0; c < L; ++c) {
        int piv = -1;
        for (int i = c; i < L; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error("singular S matrix in the upper bound", "internal");
        std::swap(a[piv], a[c]);
        for (int i = 0; i < L; ++i)
            if (i != c && a[i][c] != 0) {
                BigRational f = a[i][c] / a[c][c];
                for (int j = c; j <= L; ++j) a[i][j] -= f * a[c][j];
            }
    }
    std::vector<BigRational> y(L);
    for (int i = 0; i < L; ++i) y[i] = a[i][L] / a[i][i];
    UpperBound ub;
    ub.value = 1 / y[0];
    for (int j = 1; j < L; ++j)
        if (y[j] <= 0) ub.positivity_holds = false;
    return ub;
}

// ---- flatness ----

inline long double flatness_factor(const LatticeSpec& l, long double tau, long double tol = 1e-12L) {
    require(tau > 0, "flatness needs tau > 0");
    auto v = eval_qseries(l.theta, tau, tol);
    return l.volume * std::pow(tau, l.n / 2.0L) * v.value - 1;
}

inline long double tau_threshold(const LatticeSpec& l, long double tol = 1e-12L) {
    const long double target = 1.0L / l.n;
    if (flatness_factor(l, 1, tol) <= target) return 1;
    long double lo = 0.5L;
    while (flatness_factor(l, lo, tol) > target) {
        lo /= 2;
        if (lo < 1e-3L) throw ValidationError("no tau with flatness below 1/n found");
    }
    long double hi = 1;
    while (hi - lo > 1e-7L) {
        long double mid = (lo + hi) / 2;
        (flatness_factor(l, mid, tol) <= target ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

// ---- binary Construction A packings ----

inline bool we_is_formally_self_dual(const WePoly& w) {
    BigInt m = w.mass();
    if (m * m != pow2(static_cast<unsigned>(w.degree()))) return false;
    auto t = substitute_linear<BigInt>(w, WePoly::Forms{{{1, 1}, {1, -1}}});
    auto d = exact_divide(t, m);
    return d && *d == w;
}

inline SecrecyReport secrecy_gain_binary(const WePoly& w, int n = -1) {
    if (n < 0) n = w.degree();
    require(n == w.degree(), "length does not match the weight enumerator degree");
    SecrecyReport r;
    r.fsd = we_is_formally_self_dual(w);
    // volume 2^{n/2}/|C|, compared against nu Z^n of the same volume
    long double vol = std::pow(2.0L, n / 2.0L) / static_cast<long double>(w.mass());
    long double nu2 = std::pow(vol, 2.0L / n);
    auto negxi = [&](long double lt) {
        long double tau = std::exp(lt);
        return -std::pow(jacobi::theta3(tau * nu2), static_cast<long double>(n)) / theta_binary_a_value(w, tau);
    };
    long double lt = minimise_scalar(negxi, -3, 3, 600, 1e-10L);
    r.tau_star = std::exp(lt);
    r.xi = -negxi(lt);
    r.t_star = t_of_tau(r.tau_star);
    r.at_symmetry_point = std::fabs(r.tau_star - 1) < 1e-6L;
    return r;
}

}  // namespace z4lat

#endif
