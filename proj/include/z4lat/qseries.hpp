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

#ifndef Z4LAT_QSERIES_HPP
#define Z4LAT_QSERIES_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

namespace z4lat {

// Jacobi theta constants at z = i*tau, evaluated numerically.
// Small tau goes through the modular transformation so the sums stay short.
namespace jacobi {

inline long double pi() { return 3.141592653589793238462643383279502884L; }

inline long double theta3_direct(long double tau) {
    long double s = 1;
    for (int m = 1;; ++m) {
        long double t = std::exp(-pi() * tau * m * m);
        s += 2 * t;
        if (t < 1e-40L) break;
    }
    return s;
}
inline long double theta4_direct(long double tau) {
    long double s = 1;
    for (int m = 1;; ++m) {
        long double t = std::exp(-pi() * tau * m * m);
        s += (m % 2 ? -2 : 2) * t;
        if (t < 1e-40L) break;
    }
    return s;
}
inline long double theta2_direct(long double tau) {
    long double s = 0;
    for (int m = 0;; ++m) {
        long double h = m + 0.5L;
        long double t = std::exp(-pi() * tau * h * h);
        s += 2 * t;
        if (t < 1e-40L) break;
    }
    return s;
}

inline long double theta3(long double tau) {
    require(tau > 0, "theta needs tau > 0");
    return tau >= 1 ? theta3_direct(tau) : theta3_direct(1 / tau) / std::sqrt(tau);
}
inline long double theta2(long double tau) {
    require(tau > 0, "theta needs tau > 0");
    return tau >= 1 ? theta2_direct(tau) : theta4_direct(1 / tau) / std::sqrt(tau);
}
inline long double theta4(long double tau) {
    require(tau > 0, "theta needs tau > 0");
    return tau >= 1 ? theta4_direct(tau) : theta2_direct(1 / tau) / std::sqrt(tau);
}

inline long double theta(int kind, long double tau) {
    switch (kind) {
        case 2: return theta2(tau);
        case 3: return theta3(tau);
        case 4: return theta4(tau);
        default: throw ValidationError("theta kind must be 2, 3 or 4");
    }
}

}  // namespace jacobi

// Truncated q-series on the quarter-unit grid: coefficient c[e] belongs to q^{e/4}.
// Terms beyond the truncation are unknown. An optional majorant
// M(tau) >= sum_e |c_e| exp(-pi tau e / 4) over the full, untruncated series
// backs the tail certificate in eval_qseries.
class QSeries {
public:
    using Majorant = std::function<long double(long double)>;

    QSeries() = default;
    explicit QSeries(int truncation) : c_(static_cast<size_t>(truncation) + 1, 0) {
        require(truncation >= 0, "truncation must be non-negative");
    }

    static QSeries constant(int truncation, const BigInt& v) {
        QSeries s(truncation);
        s.c_[0] = v;
        BigInt av = abs(v);
        long double m = static_cast<long double>(av);
        s.majorant_ = [m](long double) { return m; };
        return s;
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& operator[](int e) const { return c_[e]; }
    BigInt coefficient(int e) const { return e >= 0 && e <= truncation() ? c_[e] : BigInt(0); }
    void set(int e, const BigInt& v) {
        if (e >= 0 && e <= truncation()) c_[e] = v;
    }
    const std::vector<BigInt>& coefficients() const { return c_; }

    const Majorant& majorant() const { return majorant_; }
    void set_majorant(Majorant m) { majorant_ = std::move(m); }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

    QSeries truncated(int t) const {
        QSeries r(std::min(t, truncation()));
        for (int e = 0; e <= r.truncation(); ++e) r.c_[e] = c_[e];
        r.majorant_ = majorant_;
        return r;
    }

    friend QSeries operator+(const QSeries& x, const QSeries& y) {
        QSeries r(std::min(x.truncation(), y.truncation()));
        for (int e = 0; e <= r.truncation(); ++e) r.c_[e] = x.c_[e] + y.c_[e];
        if (x.majorant_ && y.majorant_) {
            auto mx = x.majorant_, my = y.majorant_;
            r.majorant_ = [mx, my](long double t) { return mx(t) + my(t); };
        }
        return r;
    }

    friend QSeries operator-(const QSeries& x, const QSeries& y) {
        QSeries r(std::min(x.truncation(), y.truncation()));
        for (int e = 0; e <= r.truncation(); ++e) r.c_[e] = x.c_[e] - y.c_[e];
        if (x.majorant_ && y.majorant_) {
            auto mx = x.majorant_, my = y.majorant_;
            r.majorant_ = [mx, my](long double t) { return mx(t) + my(t); };
        }
        return r;
    }

    friend QSeries operator*(const QSeries& x, const QSeries& y) {
        QSeries r(std::min(x.truncation(), y.truncation()));
        const int t = r.truncation();
        std::vector<int> nzx, nzy;
        for (int e = 0; e <= t; ++e) {
            if (x.c_[e] != 0) nzx.push_back(e);
            if (y.c_[e] != 0) nzy.push_back(e);
        }
        for (int i : nzx)
            for (int j : nzy) {
                if (i + j > t) break;
                r.c_[i + j] += x.c_[i] * y.c_[j];
            }
        if (x.majorant_ && y.majorant_) {
            auto mx = x.majorant_, my = y.majorant_;
            r.majorant_ = [mx, my](long double tau) { return mx(tau) * my(tau); };
        }
        return r;
    }

    QSeries scaled(const BigInt& k) const {
        QSeries r = *this;
        for (auto& v : r.c_) v *= k;
        if (majorant_) {
            auto m = majorant_;
            long double f = static_cast<long double>(BigInt(abs(k)));
            r.majorant_ = [m, f](long double t) { return f * m(t); };
        }
        return r;
    }

    QSeries divided_exact(const BigInt& d) const {
        require(d != 0, "division of a series by zero");
        QSeries r = *this;
        for (auto& v : r.c_) {
            if (v % d != 0) throw ValidationError("scalar division leaves a remainder");
            v /= d;
        }
        if (majorant_) {
            auto m = majorant_;
            long double f = static_cast<long double>(BigInt(abs(d)));
            r.majorant_ = [m, f](long double t) { return m(t) / f; };
        }
        return r;
    }

    QSeries pow(int k) const {
        require(k >= 0, "negative series power");
        QSeries r = constant(truncation(), 1), base = *this;
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    // true when every nonzero exponent is a multiple of 4 (integer powers of q)
    bool integral_exponents() const {
        for (int e = 0; e <= truncation(); ++e)
            if (c_[e] != 0 && e % 4) return false;
        return true;
    }

private:
    std::vector<BigInt> c_;
    Majorant majorant_;
};

// theta_kind(scale * z) truncated at T quarter-units; scale in {1, 2, 4}
inline QSeries jacobi_theta(int kind, int scale, int T) {
    require(kind >= 2 && kind <= 4, "theta kind must be 2, 3 or 4");
    require(scale == 1 || scale == 2 || scale == 4, "argument scale must be 1, 2 or 4");
    require(T >= 0, "truncation must be non-negative");
    QSeries s(T);
    if (kind == 2) {
        // exponents (m + 1/2)^2 -> (2m+1)^2 quarter units, two signs of m each
        for (int m = 0;; ++m) {
            long e = static_cast<long>(scale) * (2 * m + 1) * (2 * m + 1);
            if (e > T) break;
            s.set(static_cast<int>(e), 2);
        }
    } else {
        s.set(0, 1);
        for (int m = 1;; ++m) {
            long e = 4L * scale * m * m;
            if (e > T) break;
            s.set(static_cast<int>(e), (kind == 4 && m % 2) ? -2 : 2);
        }
    }
    const long double sc = scale;
    if (kind == 2)
        s.set_majorant([sc](long double tau) { return jacobi::theta2(sc * tau); });
    else
        s.set_majorant([sc](long double tau) { return jacobi::theta3(sc * tau); });
    return s;
}

struct EvalResult {
    long double value = 0;
    long double tail_bound = 0;
};

// Certificate: for any tau' < tau, with x = e^{-pi tau/4}, y = e^{-pi tau'/4},
//   sum_{e > T} |c_e| x^e <= (x/y)^{T+1} (M(tau') - sum_{e <= T} |c_e| y^e).
inline long double tail_bound(const QSeries& s, long double tau) {
    if (!s.majorant()) return std::numeric_limits<long double>::infinity();
    const long double T1 = s.truncation() + 1;
    std::vector<std::pair<int, long double>> head;
    for (int e = 0; e <= s.truncation(); ++e)
        if (s[e] != 0) head.emplace_back(e, std::fabs(static_cast<long double>(s[e])));
    long double best = std::numeric_limits<long double>::infinity();
    for (int k = 1; k < 240; ++k) {
        long double tp = tau * std::pow(10.0L, -3.0L * k / 240.0L);  // tau' from ~tau down to tau/1000
        long double m = s.majorant()(tp), known = 0;
        for (const auto& [e, c] : head) known += c * std::exp(-jacobi::pi() * tp * e / 4);
        // slack covers rounding in the subtraction
        long double rest = std::max<long double>(m - known, 0) + 64 * std::numeric_limits<long double>::epsilon() * m;
        long double lb = -jacobi::pi() * (tau - tp) * T1 / 4 + std::log(rest);
        best = std::min(best, lb);
    }
    return std::exp(best);
}

// Value at z = i tau. tol is relative to max(1, |value|); pass infinity to skip the check.
inline EvalResult eval_qseries(const QSeries& s, long double tau, long double tol = 1e-12L) {
    require(tau > 0, "eval_qseries needs tau > 0");
    EvalResult r;
    const long double x = -jacobi::pi() * tau / 4;
    for (int e = s.truncation(); e >= 0; --e)
        if (s[e] != 0) r.value += static_cast<long double>(s[e]) * std::exp(x * e);
    r.tail_bound = tail_bound(s, tau);
    if (!std::isinf(tol) && !(r.tail_bound <= tol * std::max<long double>(1, std::fabs(r.value))))
        throw TailBoundError("truncation T=" + std::to_string(s.truncation()) + " too short at tau=" +
                                 std::to_string(static_cast<double>(tau)),
                             static_cast<double>(r.tail_bound));
    return r;
}

inline std::string quarter_exponent(int e) {
    int num = e, den = 4;
    while (den > 1 && num % 2 == 0) {
        num /= 2;
        den /= 2;
    }
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace z4lat

#endif
