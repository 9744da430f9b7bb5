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

#ifndef Z4LAT_POLY_HPP
#define Z4LAT_POLY_HPP

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"

namespace z4lat {

// Homogeneous polynomial in N variables, sparse and sorted by exponent tuple.
template <int N, class Coeff = BigInt>
class SparsePoly {
public:
    using Exp = std::array<int, N>;
    using Forms = std::array<std::array<int, N>, N>;
    using coeff_type = Coeff;
    static constexpr int arity = N;

    SparsePoly() = default;
    explicit SparsePoly(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Exp, Coeff>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Exp& e, const Coeff& c) {
        require(std::accumulate(e.begin(), e.end(), 0) == degree_, "exponents must sum to the degree");
        for (int x : e) require(x >= 0, "negative exponent");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Coeff coefficient(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    Coeff mass() const {
        Coeff s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const SparsePoly& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

    friend SparsePoly operator+(const SparsePoly& x, const SparsePoly& y) {
        require(x.degree_ == y.degree_, "degree mismatch in sum");
        SparsePoly r = x;
        for (const auto& [e, c] : y.terms_) r.add(e, c);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& x, const SparsePoly& y) {
        SparsePoly r(x.degree_ + y.degree_);
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) {
                Exp e;
                for (int i = 0; i < N; ++i) e[i] = ex[i] + ey[i];
                r.add(e, cx * cy);
            }
        return r;
    }

    template <class To>
    SparsePoly<N, To> cast() const {
        SparsePoly<N, To> r(degree_);
        for (const auto& [e, c] : terms_) r.add(e, To(c));
        return r;
    }

    long double eval(const std::array<long double, N>& x) const {
        long double s = 0;
        for (const auto& [e, c] : terms_) {
            long double t = static_cast<long double>(c);
            for (int i = 0; i < N; ++i)
                if (e[i]) t *= std::pow(x[i], static_cast<long double>(e[i]));
            s += t;
        }
        return s;
    }

    std::string to_string(const std::array<const char*, N>& vars) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Coeff mag = c < 0 ? Coeff(-c) : c;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            bool unit = mag == 1;
            bool any = std::any_of(e.begin(), e.end(), [](int v) { return v != 0; });
            if (!unit || !any) os << mag;
            for (int i = 0; i < N; ++i)
                if (e[i]) {
                    os << vars[i];
                    if (e[i] > 1) os << '^' << e[i];
                }
        }
        return os.str();
    }

private:
    int degree_ = 0;
    std::map<Exp, Coeff> terms_;
};

using WePoly = SparsePoly<2>;
using SwePoly = SparsePoly<3>;
using JwePoly = SparsePoly<4>;
template <int N>
using RationalPoly = SparsePoly<N, BigRational>;

namespace detail {

// Dense homogeneous scratch: index over the first N-1 exponents, last one implied.
template <int N, class Acc>
struct DenseHomogeneous {
    int degree;
    int side;
    std::vector<Acc> a;

    explicit DenseHomogeneous(int d) : degree(d), side(d + 1) {
        size_t sz = 1;
        for (int i = 0; i < N - 1; ++i) sz *= static_cast<size_t>(side);
        a.assign(sz, Acc(0));
    }
    size_t index(const std::array<int, N>& e) const {
        size_t k = 0;
        for (int i = 0; i < N - 1; ++i) k = k * side + e[i];
        return k;
    }
    std::array<int, N> exponent(size_t k) const {
        std::array<int, N> e{};
        int used = 0;
        for (int i = N - 2; i >= 0; --i) {
            e[i] = static_cast<int>(k % side);
            k /= side;
            used += e[i];
        }
        e[N - 1] = degree - used;
        return e;
    }
};

template <int N, class Acc>
using SparseTerms = std::vector<std::pair<std::array<int, N>, Acc>>;

template <int N, class Acc>
SparseTerms<N, Acc> multiply_terms(const SparseTerms<N, Acc>& x, const SparseTerms<N, Acc>& y) {
    std::map<std::array<int, N>, Acc> m;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y) {
            std::array<int, N> e;
            for (int i = 0; i < N; ++i) e[i] = ex[i] + ey[i];
            m[e] += cx * cy;
        }
    SparseTerms<N, Acc> out;
    for (auto& [e, c] : m)
        if (c != 0) out.emplace_back(e, c);
    return out;
}

}  // namespace detail

// p(L_1, ..., L_N) for integer linear forms L_i, expanded exactly.
// Acc is the accumulator type; it must hold every intermediate coefficient.
template <class Acc, int N, class Coeff>
SparsePoly<N, Coeff> substitute_linear(const SparsePoly<N, Coeff>& p,
                                       const typename SparsePoly<N, Coeff>::Forms& forms) {
    const int n = p.degree();
    // powers[i][k] = L_i^k
    std::array<std::vector<detail::SparseTerms<N, Acc>>, N> powers;
    for (int i = 0; i < N; ++i) {
        detail::SparseTerms<N, Acc> lin;
        for (int v = 0; v < N; ++v)
            if (forms[i][v]) {
                std::array<int, N> e{};
                e[v] = 1;
                lin.emplace_back(e, Acc(forms[i][v]));
            }
        powers[i].push_back({{std::array<int, N>{}, Acc(1)}});
        int maxe = 0;
        for (const auto& [e, c] : p.terms()) maxe = std::max(maxe, e[i]);
        for (int k = 1; k <= maxe; ++k) powers[i].push_back(detail::multiply_terms<N, Acc>(powers[i].back(), lin));
    }

    detail::DenseHomogeneous<N, Acc> acc(n);
    for (const auto& [e, c] : p.terms()) {
        // multiply the factors pairwise, smallest first
        std::array<int, N> ord;
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(),
                  [&](int x, int y) { return powers[x][e[x]].size() < powers[y][e[y]].size(); });
        detail::SparseTerms<N, Acc> prod = powers[ord[0]][e[ord[0]]];
        for (int t = 1; t < N - 1; ++t) prod = detail::multiply_terms<N, Acc>(prod, powers[ord[t]][e[ord[t]]]);
        const auto& last = powers[ord[N - 1]][e[ord[N - 1]]];
        const Acc cc = Acc(c);
        for (const auto& [ex, cx] : prod) {
            Acc scaled = cx * cc;
            for (const auto& [ey, cy] : last) {
                std::array<int, N> s;
                for (int i = 0; i < N; ++i) s[i] = ex[i] + ey[i];
                acc.a[acc.index(s)] += scaled * cy;
            }
        }
    }
    SparsePoly<N, Coeff> out(n);
    for (size_t k = 0; k < acc.a.size(); ++k)
        if (acc.a[k] != 0) {
            auto e = acc.exponent(k);
            if (e[N - 1] < 0) continue;
            out.add(e, Coeff(acc.a[k]));
        }
    return out;
}

// Divides every coefficient by d; nullopt when some coefficient is not a multiple.
template <int N>
std::optional<SparsePoly<N>> exact_divide(const SparsePoly<N>& p, const BigInt& d) {
    SparsePoly<N> r(p.degree());
    for (const auto& [e, c] : p.terms()) {
        if (c % d != 0) return std::nullopt;
        r.add(e, c / d);
    }
    return r;
}

template <int N>
RationalPoly<N> scale(const SparsePoly<N>& p, const BigRational& f) {
    RationalPoly<N> r(p.degree());
    for (const auto& [e, c] : p.terms()) r.add(e, BigRational(c) * f);
    return r;
}

template <int N>
std::optional<SparsePoly<N>> to_integral(const RationalPoly<N>& p) {
    SparsePoly<N> r(p.degree());
    for (const auto& [e, c] : p.terms()) {
        if (denominator(c) != 1) return std::nullopt;
        r.add(e, numerator(c));
    }
    return r;
}

}  // namespace z4lat

#endif
