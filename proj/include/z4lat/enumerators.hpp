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

#ifndef Z4LAT_ENUMERATORS_HPP
#define Z4LAT_ENUMERATORS_HPP

#include <bit>
#include <string>
#include <utility>

#include "binary.hpp"
#include "poly.hpp"
#include "z4.hpp"

namespace z4lat {

inline WePoly we(const BinaryCode& a, const EnumerationBudget& b = {}) {
    const int n = a.n();
    std::vector<BigInt> cnt(n + 1, 0);
    if (n <= 64) {
        std::vector<std::uint64_t> tally(n + 1, 0);
        for (auto w : a.codewords(b)) ++tally[std::popcount(w)];
        for (int i = 0; i <= n; ++i) cnt[i] = tally[i];
    } else {
        throw ValidationError("binary enumeration supports n <= 64");
    }
    WePoly p(n);
    for (int w = 0; w <= n; ++w) p.add({n - w, w}, cnt[w]);
    return p;
}

inline SwePoly swe_from_census(const SweCensus& s) {
    SwePoly p(s.n);
    for (int j = 0; j <= s.n; ++j)
        for (int k = 0; j + k <= s.n; ++k)
            if (auto c = s.at(j, k)) p.add({s.n - j - k, j, k}, BigInt(c));
    return p;
}

inline SwePoly swe(const Z4Code& c, int threads = 1, const EnumerationBudget& b = {}) {
    return swe_from_census(swe_census(c, threads, b));
}

inline JwePoly jwe(const BinaryCode& a1, const BinaryCode& a2, const EnumerationBudget& b = {}) {
    require(a1.n() == a2.n(), "jwe needs codes of equal length");
    const int n = a1.n();
    if (a1.k() + a2.k() > b.log2_max)
        throw BudgetExceeded("jwe needs 2^" + std::to_string(a1.k() + a2.k()) + " pairs", pow2(a1.k() + a2.k()));
    auto c1 = a1.codewords(b), c2 = a2.codewords(b);
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::map<std::array<int, 3>, std::uint64_t> tally;
    for (auto x : c1)
        for (auto y : c2) {
            int d11 = std::popcount(x & y), d10 = std::popcount(x & ~y), d01 = std::popcount(~x & y & mask);
            ++tally[{d01, d10, d11}];
        }
    JwePoly p(n);
    for (const auto& [e, c] : tally) p.add({n - e[0] - e[1] - e[2], e[0], e[1], e[2]}, BigInt(c));
    return p;
}

namespace detail {

// __int128 when every intermediate fits comfortably, BigInt otherwise
template <int N>
SparsePoly<N> substitute_integral(const SparsePoly<N>& p, const typename SparsePoly<N>::Forms& forms,
                                  int log2_form_sum) {
    BigInt absmass = 0;
    for (const auto& [e, c] : p.terms()) absmass += abs(c);
    long bits = static_cast<long>(msb(absmass + 1)) + 1 + static_cast<long>(log2_form_sum) * p.degree();
    if (bits < 120) {
        SparsePoly<N, __int128> q(p.degree());
        for (const auto& [e, c] : p.terms()) q.add(e, c.template convert_to<__int128>());
        auto r = substitute_linear<__int128>(q, forms);
        SparsePoly<N> out(p.degree());
        for (const auto& [e, c] : r.terms()) {
            __int128 v = c;
            bool neg = v < 0;
            unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
            BigInt b = static_cast<std::uint64_t>(u >> 64);
            b <<= 64;
            b += static_cast<std::uint64_t>(u);
            out.add(e, neg ? BigInt(-b) : b);
        }
        return out;
    }
    return substitute_linear<BigInt>(p, forms);
}

inline const std::array<std::array<int, 3>, 3> kSweForms{{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}}};
inline const std::array<std::array<int, 4>, 4> kJweForms{
    {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}};

}  // namespace detail

// (1/size) p(a+2b+c, a-c, a-2b+c); size defaults to the coefficient mass of p,
// i.e. the cardinality of the code p enumerates.
inline RationalPoly<3> macwilliams_swe(const SwePoly& p, const BigInt& size) {
    require(size != 0, "MacWilliams normaliser is zero");
    return scale(detail::substitute_integral(p, detail::kSweForms, 2), BigRational(1, size));
}
inline RationalPoly<3> macwilliams_swe(const SwePoly& p) { return macwilliams_swe(p, p.mass()); }

inline RationalPoly<3> macwilliams_swe(const RationalPoly<3>& p) {
    BigRational m = p.mass();
    require(m != 0, "MacWilliams normaliser is zero");
    auto r = substitute_linear<BigRational>(p, detail::kSweForms);
    RationalPoly<3> out(p.degree());
    for (const auto& [e, c] : r.terms()) out.add(e, c / m);
    return out;
}

inline RationalPoly<4> macwilliams_jwe(const JwePoly& p, const BigInt& size1, const BigInt& size2) {
    require(size1 != 0 && size2 != 0, "MacWilliams normaliser is zero");
    return scale(detail::substitute_integral(p, detail::kJweForms, 2), BigRational(1, size1 * size2));
}
inline RationalPoly<4> macwilliams_jwe(const JwePoly& p) {
    BigInt m = p.mass();
    require(m != 0, "MacWilliams normaliser is zero");
    return scale(detail::substitute_integral(p, detail::kJweForms, 2), BigRational(1, m));
}

inline RationalPoly<4> macwilliams_jwe(const RationalPoly<4>& p) {
    BigRational m = p.mass();
    require(m != 0, "MacWilliams normaliser is zero");
    auto r = substitute_linear<BigRational>(p, detail::kJweForms);
    RationalPoly<4> out(p.degree());
    for (const auto& [e, c] : r.terms()) out.add(e, c / m);
    return out;
}

// FSD test on an swe alone: |C|^2 = 4^n and MacWilliams fixed point.
inline bool swe_is_formally_self_dual(const SwePoly& p) {
    BigInt m = p.mass();
    if (m * m != pow2(2u * p.degree())) return false;
    auto t = to_integral(macwilliams_swe(p, m));
    return t && *t == p;
}

inline bool is_formally_self_dual(const Z4Code& c, int threads = 1, const EnumerationBudget& b = {}) {
    if (2 * c.log2_size() != 2 * c.n()) return false;
    return swe_is_formally_self_dual(swe(c, threads, b));
}

inline bool is_self_dual(const Z4Code& c) {
    if (c.log2_size() != c.n()) return false;
    Z4Matrix g = c.generator();
    return (g * g.transpose()).is_zero();
}

enum class CodeType { TypeI, TypeII, Neither, NotFSD };

inline std::string to_string(CodeType t) {
    switch (t) {
        case CodeType::TypeI: return "I";
        case CodeType::TypeII: return "II";
        case CodeType::Neither: return "neither";
        default: return "not-fsd";
    }
}

// Euclidean weight of a codeword with swe exponent (n0, j, k) is j + 4k.
inline CodeType classify_type(const SwePoly& p) {
    if (!swe_is_formally_self_dual(p)) return CodeType::NotFSD;
    bool all8 = true;
    for (const auto& [e, c] : p.terms()) {
        int eu = e[1] + 4 * e[2];
        if (eu % 4) return CodeType::Neither;
        if (eu % 8) all8 = false;
    }
    return all8 ? CodeType::TypeII : CodeType::TypeI;
}
inline CodeType classify_type(const Z4Code& c, int threads = 1) { return classify_type(swe(c, threads)); }

struct MinDistances {
    int lee = 0;
    int euclid = 0;
};

inline MinDistances min_distances(const SwePoly& p) {
    MinDistances d{-1, -1};
    for (const auto& [e, c] : p.terms()) {
        if (e[0] == p.degree()) continue;
        int lee = e[1] + 2 * e[2], eu = e[1] + 4 * e[2];
        if (d.lee < 0 || lee < d.lee) d.lee = lee;
        if (d.euclid < 0 || eu < d.euclid) d.euclid = eu;
    }
    if (d.lee < 0) throw ValidationError("code has no nonzero codeword; distances undefined");
    return d;
}
inline MinDistances min_distances(const Z4Code& c, int threads = 1) { return min_distances(swe(c, threads)); }

// W_{C_g}(x,y) = swe(x^2, xy, y^2)
inline WePoly gray_we_from_swe(const SwePoly& p) {
    WePoly w(2 * p.degree());
    for (const auto& [e, c] : p.terms()) w.add({2 * e[0] + e[1], e[1] + 2 * e[2]}, c);
    return w;
}

// Gray image 0->00, 1->01, 2->11, 3->10
inline F2Vector gray_map(const Z4Vector& x) {
    static const std::uint8_t hi[4] = {0, 0, 1, 1}, lo[4] = {0, 1, 1, 0};
    F2Vector out;
    out.reserve(2 * x.size());
    for (auto v : x) {
        out.push_back(hi[v]);
        out.push_back(lo[v]);
    }
    return out;
}

}  // namespace z4lat

#endif
