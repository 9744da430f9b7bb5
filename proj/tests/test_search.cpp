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

#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace z4lat;
using namespace z4lat::testing;

namespace {

constexpr double kTableTol = 5e-3;

SearchSpace space(Family f, int eta, bool symmetry = false) {
    SearchSpace s;
    s.family = f;
    s.eta = eta;
    s.symmetry = symmetry;
    return s;
}

using SweTerms = std::decay_t<decltype(SwePoly(1).terms())>;

std::set<SweTerms> distinct_swes(const SearchSpace& s, const std::vector<std::uint64_t>& idx) {
    std::set<SweTerms> out;
    for (auto i : idx) out.insert(swe(build_candidate(s, candidate_params(s, i))).terms());
    return out;
}

std::vector<std::uint64_t> all_indices(const SearchSpace& s) {
    std::vector<std::uint64_t> v(candidate_count(s));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// cycle lengths of the seed permutation for rotation `rot`, optionally reversed
std::vector<int> cycles(int m, int rot, bool rev) {
    std::vector<int> perm(m), out;
    for (int i = 0; i < m; ++i) perm[i] = ((rev ? (m - i) % m : i) + rot) % m;
    std::vector<bool> seen(m, false);
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

// orbit count under rotation, reversal and negation, by Burnside
long burnside(int m, int head) {
    long sum = 0, order = 0;
    for (int neg = 0; neg < 2; ++neg)
        for (int rev = 0; rev < 2; ++rev)
            for (int rot = 0; rot < m; ++rot) {
                long fix = 1;
                for (int len : cycles(m, rot, rev)) fix *= (neg && len % 2) ? 2 : 4;
                for (int h = 0; h < head; ++h) fix *= neg ? 2 : 4;
                sum += fix;
                ++order;
            }
    return sum / order;
}

}  // namespace

TEST(Params, CountsAndText) {
    EXPECT_EQ(candidate_count(space(Family::Pdcc, 3)), 64u);
    EXPECT_EQ(candidate_count(space(Family::Bdcc, 3)), 1024u);
    EXPECT_EQ(candidate_count(space(Family::OextPdcc, 6)), 4096u);
    SearchSpace b = space(Family::Bdcc, 3);
    EXPECT_EQ(candidate_params(b, 0), (std::vector<int>{0, 0, 0, 0, 0}));
    EXPECT_EQ(candidate_params(b, 1), (std::vector<int>{0, 0, 0, 0, 1}));
    EXPECT_EQ(params_text(b, {2, 1, 1, 0, 2}), "2,1,1;0,2");
    EXPECT_EQ(params_text(space(Family::OextPdcc, 2), {0, 1, 1, 0}), "a=0,1;c=1,0");
    EXPECT_EQ(parse_family("oext-bdcc"), Family::OextBdcc);
    EXPECT_THROW(parse_family("cyclic"), ValidationError);
}

TEST(Params, LexicographicIndexOrder) {
    SearchSpace s = space(Family::Pdcc, 3);
    for (std::uint64_t i = 1; i < candidate_count(s); ++i)
        EXPECT_LT(candidate_params(s, i - 1), candidate_params(s, i));
}

TEST(Search, PureLengthFour) {
    auto o = run_search(space(Family::Pdcc, 2));
    EXPECT_TRUE(o.complete);
    EXPECT_EQ(o.candidates_total, 16u);
    EXPECT_EQ(o.fsd_count, 16u);
    // the bordered code is the better length-4 code
    EXPECT_LE(o.best_xi, 1.052 + kTableTol);
    EXPECT_NEAR(run_search(space(Family::Bdcc, 2)).best_xi, 1.052, kTableTol);
}

TEST(Search, LengthSix) {
    auto p = run_search(space(Family::Pdcc, 3));
    auto b = run_search(space(Family::Bdcc, 3));
    EXPECT_NEAR(p.best_xi, 1.172, kTableTol);
    EXPECT_EQ(p.results.front().params_text, "0,1,2");
    EXPECT_NEAR(b.best_xi, 1.1266, 1e-4);
    EXPECT_NEAR(std::max(p.best_xi, b.best_xi), 1.172, kTableTol);
}

TEST(Search, BorderedLengthEight) {
    auto o = run_search(space(Family::Bdcc, 4, true));
    EXPECT_NEAR(o.best_xi, 4.0 / 3.0, 1e-9);
    EXPECT_GT(o.reduction_factor, 4.0);
}

TEST(Search, OddExtensionOfPureTwelve) {
    SearchSpace s = space(Family::OextPdcc, 6);
    s.base_seed = CirculantSeed{0, 2, 1, 2, 2, 2};
    auto o = run_search(s);
    EXPECT_NEAR(o.best_xi, 1.704, kTableTol);
    EXPECT_EQ(o.candidates_total, 4096u);
    for (const auto& r : o.results) EXPECT_EQ(r.swe.degree(), 13);
}

TEST(Search, RankingOrder) {
    auto o = run_search(space(Family::Bdcc, 3));
    ASSERT_FALSE(o.results.empty());
    for (size_t i = 0; i < o.results.size(); ++i) {
        EXPECT_EQ(o.results[i].rank, static_cast<int>(i) + 1);
        if (i == 0) continue;
        const auto &a = o.results[i - 1], &b = o.results[i];
        EXPECT_TRUE(a.xi > b.xi || (a.xi == b.xi && a.params < b.params));
    }
}

TEST(Search, DeterministicAcrossThreads) {
    for (Family f : {Family::Pdcc, Family::Bdcc}) {
        SearchSpace s = space(f, 3);
        auto a = run_search(s, {}, 1), b = run_search(s, {}, 3), c = run_search(s, {}, 8);
        ASSERT_EQ(a.results.size(), b.results.size());
        ASSERT_EQ(a.results.size(), c.results.size());
        for (size_t i = 0; i < a.results.size(); ++i) {
            EXPECT_EQ(a.results[i].params, b.results[i].params);
            EXPECT_EQ(a.results[i].params, c.results[i].params);
            EXPECT_EQ(a.results[i].xi, c.results[i].xi);
            EXPECT_EQ(a.results[i].swe, c.results[i].swe);
        }
        EXPECT_EQ(a.fsd_count, c.fsd_count);
    }
}

TEST(Search, ReportedFsdCandidatesAreSound) {
    SearchSpace s = space(Family::Bdcc, 3);
    auto o = run_search(s);
    for (size_t i = 0; i < o.results.size(); i += 7) {
        const auto& r = o.results[i];
        Z4Code c = build_candidate(s, r.params);
        EXPECT_EQ(swe(c), r.swe);
        EXPECT_EQ(swe(dual_generator(c)), r.swe) << r.params_text;
        EXPECT_EQ(min_distances(r.swe).lee, r.d_lee);
    }
}

TEST(Search, BudgetsMarkIncomplete) {
    SearchBudget few;
    few.max_candidates = 10;
    auto o = run_search(space(Family::Bdcc, 3), few);
    EXPECT_FALSE(o.complete);
    EXPECT_EQ(o.candidates_visited, 10u);
    SearchBudget none;
    none.max_seconds = 0;
    EXPECT_FALSE(run_search(space(Family::Pdcc, 3), none).complete);
    SearchBudget tiny;
    tiny.enumeration = EnumerationBudget{4};
    EXPECT_THROW(run_search(space(Family::Pdcc, 3), tiny), BudgetExceeded);
}

TEST(Search, OddExtensionNeedsBase) {
    EXPECT_THROW(run_search(space(Family::OextPdcc, 2)), ValidationError);
    EXPECT_THROW(run_search(space(Family::Bdcc, 1)), ValidationError);
}

TEST(Symmetry, OrbitsPreserveTheSwe) {
    Random rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        SearchSpace s = space(trial % 2 ? Family::Bdcc : Family::Pdcc, rng.uniform(2, 5));
        auto p = candidate_params(s, static_cast<std::uint64_t>(rng.uniform(0, static_cast<int>(candidate_count(s)) - 1)));
        SwePoly ref = swe(build_candidate(s, p));
        for (const auto& q : symmetry_orbit(s, p)) EXPECT_EQ(swe(build_candidate(s, q)), ref);
    }
}

TEST(Symmetry, ZeroSeedIsCanonical) {
    for (int eta = 1; eta <= 5; ++eta) EXPECT_TRUE(is_canonical(space(Family::Pdcc, eta), std::vector<int>(eta, 0)));
    EXPECT_TRUE(is_canonical(space(Family::Bdcc, 3), std::vector<int>(5, 0)));
}

TEST(Symmetry, DistinctSwesSurviveReduction) {
    for (auto [f, eta] : {std::pair{Family::Pdcc, 2}, {Family::Pdcc, 3}, {Family::Bdcc, 2}, {Family::Bdcc, 3}}) {
        SearchSpace s = space(f, eta);
        auto canon = symmetry_reduce(s);
        EXPECT_LE(canon.size(), candidate_count(s));
        EXPECT_EQ(distinct_swes(s, canon), distinct_swes(s, all_indices(s))) << to_string(f) << eta;
    }
}

TEST(Symmetry, ClassCountMatchesBurnside) {
    for (int eta = 1; eta <= 5; ++eta)
        EXPECT_EQ(static_cast<long>(symmetry_reduce(space(Family::Pdcc, eta)).size()), burnside(eta, 0)) << eta;
    for (int eta = 2; eta <= 4; ++eta)
        EXPECT_EQ(static_cast<long>(symmetry_reduce(space(Family::Bdcc, eta)).size()), burnside(eta - 1, 3)) << eta;
}

TEST(Symmetry, SameBestWithAndWithoutReduction) {
    for (auto [f, eta] : {std::pair{Family::Pdcc, 2}, {Family::Pdcc, 3}, {Family::Bdcc, 2}, {Family::Bdcc, 3}}) {
        auto full = run_search(space(f, eta)), reduced = run_search(space(f, eta, true));
        EXPECT_EQ(full.best_xi, reduced.best_xi) << to_string(f) << eta;
        EXPECT_LT(reduced.candidates_total, full.candidates_total);
    }
}
