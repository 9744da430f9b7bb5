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

#include "support.hpp"

using namespace z4lat;
using namespace z4lat::testing;

namespace {

const CirculantSeed kSeed12{0, 2, 1, 2, 2, 2};

BinaryCode code2(std::vector<F2Vector> rows) {
    int n = static_cast<int>(rows.front().size());
    return BinaryCode(n, std::move(rows));
}

// (a + c)^n
SwePoly a_plus_c_power(int n) {
    SwePoly p(n);
    BigInt binom = 1;
    for (int i = 0; i <= n; ++i) {
        p.add({n - i, 0, i}, binom);
        binom = binom * (n - i) / (i + 1);
    }
    return p;
}

// A1 random, A2 = A1 + its pairwise products + random extra rows
std::pair<BinaryCode, BinaryCode> random_chain(Random& rng, int n) {
    BinaryCode a1 = rng.binary_code(n, 3);
    std::vector<F2Vector> rows = a1.generator();
    for (size_t i = 0; i < a1.generator().size(); ++i)
        for (size_t j = i + 1; j < a1.generator().size(); ++j)
            rows.push_back(hadamard(a1.generator()[i], a1.generator()[j]));
    BinaryCode extra = rng.binary_code(n, 2);
    for (const auto& r : extra.generator()) rows.push_back(r);
    return {a1, BinaryCode(n, rows)};
}

bool gram_is_zero(const Z4Matrix& g) { return (g * g.transpose()).is_zero(); }

}  // namespace

TEST(Closure, SmallExamples) {
    F2Vector one{1, 1};
    EXPECT_TRUE(closure_check(BinaryCode::full(5), BinaryCode::full(5)));
    EXPECT_TRUE(closure_check(code2({one}), code2({one})));
    EXPECT_FALSE(closure_check(code2({one}), code2({{1, 0}})));
    EXPECT_TRUE(closure_check(reed_muller(1, 4), reed_muller(2, 4)));
    EXPECT_FALSE(closure_check(reed_muller(1, 4), reed_muller(1, 4)));
    EXPECT_THROW(closure_check(BinaryCode::full(2), BinaryCode::full(3)), ValidationError);
}

TEST(Closure, ViolationReportsThePair) {
    BinaryCode a = code2({{1, 1, 0, 0}, {0, 1, 1, 0}});
    try {
        nested_sum(a, a);
        FAIL() << "expected a closure violation";
    } catch (const ClosureViolation& e) {
        EXPECT_EQ(e.first(), 0);
        EXPECT_EQ(e.second(), 1);
    }
    EXPECT_THROW(nested_sum(BinaryCode::full(2), code2({{1, 1}})), ClosureViolation);
}

TEST(NestedSum, TwelveDimensionalExample) {
    BinaryCode a1 = load_binary("codes_dim12_A1.json"), a2 = load_binary("codes_dim12_A2.json");
    Z4Code c = nested_sum(a1, a2);
    EXPECT_EQ(c.n(), 12);
    EXPECT_EQ(c.log2_size(), a1.k() + a2.k());
    SwePoly s = swe(c);
    EXPECT_EQ(s, load_swe("codes_dim12_swe.json"));
    EXPECT_EQ(s.terms().size(), 16u);
    EXPECT_EQ(s.coefficient({2, 8, 2}), BigInt(1152));
    EXPECT_EQ(s.coefficient({8, 0, 4}), BigInt(111));
    EXPECT_TRUE(fsd_precondition_check(a1, a2));
    EXPECT_FALSE(a2 == a1.dual());
}

TEST(NestedSum, ZeroInsideFull) {
    for (int n = 1; n <= 6; ++n) {
        Z4Code c = nested_sum(BinaryCode::zero(n), BinaryCode::full(n));
        EXPECT_EQ(c.k1(), 0);
        EXPECT_EQ(c.k2(), n);
        EXPECT_EQ(swe(c), a_plus_c_power(n));
    }
}

TEST(NestedSum, DualHasSwappedResidueAndTorsion) {
    Random rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform(2, 8);
        auto [a1, a2] = random_chain(rng, n);
        ASSERT_TRUE(closure_check(a1, a2));
        Z4Code c = nested_sum(a1, a2);
        ASSERT_EQ(c.log2_size(), a1.k() + a2.k());
        auto dual_words = codeword_set(dual_generator(c));
        ASSERT_EQ(BigInt(dual_words.size()), pow2(2 * n - a1.k() - a2.k()));
        std::vector<F2Vector> residue, torsion;
        for (const auto& w : dual_words) {
            F2Vector r(n), t(n);
            bool even = true;
            for (int j = 0; j < n; ++j) {
                r[j] = w[j] & 1;
                t[j] = w[j] >> 1;
                even = even && r[j] == 0;
            }
            residue.push_back(r);
            if (even) torsion.push_back(t);
        }
        ASSERT_EQ(BinaryCode(n, residue), a2.dual());
        ASSERT_EQ(BinaryCode(n, torsion), a1.dual());
    }
}

TEST(NestedSum, DualLawWhenLiftsAreOrthogonal) {
    // A1 = A2 = R(1,3) fails closure, so use the self-dual octacode chain R(1,3) in R(2,3)
    BinaryCode a1 = reed_muller(1, 3), a2 = reed_muller(2, 3);
    Z4Code c = nested_sum(a1, a2);
    EXPECT_EQ(codeword_set(dual_generator(c)), codeword_set(nested_sum(a2.dual(), a1.dual())));
    BinaryCode z = BinaryCode::zero(5), f = BinaryCode::full(5);
    EXPECT_EQ(codeword_set(dual_generator(nested_sum(z, f))), codeword_set(nested_sum(f.dual(), z.dual())));
}

TEST(FsdPrecondition, TrivialCases) {
    EXPECT_TRUE(fsd_precondition_check(BinaryCode::zero(4), BinaryCode::full(4)));
    Random rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        BinaryCode a1 = rng.binary_code(6, 3);
        EXPECT_TRUE(fsd_precondition_check(a1, a1.dual()));
    }
    EXPECT_THROW(fsd_precondition_check(BinaryCode::zero(3), BinaryCode::full(3)), ValidationError);
}

TEST(ReedMuller, Dimensions) {
    EXPECT_EQ(reed_muller(0, 3), code2({F2Vector(8, 1)}));
    EXPECT_EQ(reed_muller(1, 4).k(), 5);
    EXPECT_EQ(reed_muller(2, 4).k(), 11);
    EXPECT_EQ(reed_muller(3, 3).k(), 8);
    EXPECT_THROW(reed_muller(4, 3), ValidationError);
    EXPECT_THROW(reed_muller(-1, 3), ValidationError);
}

TEST(ReedMuller, ContainsMonomialRows) {
    // x1 is the most significant bit of the evaluation point
    BinaryCode r = reed_muller(1, 2);
    EXPECT_EQ(r.k(), 3);
    EXPECT_TRUE(r.contains(F2Vector{0, 0, 1, 1}));
    EXPECT_TRUE(r.contains(F2Vector{0, 1, 0, 1}));
    EXPECT_FALSE(r.contains(F2Vector{0, 0, 0, 1}));
    EXPECT_TRUE(reed_muller(2, 2).contains(F2Vector{0, 0, 0, 1}));
}

TEST(ReedMuller, DualIsComplementaryOrder) {
    for (int v = 1; v <= 5; ++v)
        for (int r = 0; r < v; ++r) {
            BinaryCode a = reed_muller(r, v), b = reed_muller(v - r - 1, v);
            EXPECT_EQ(a.k() + b.k(), 1 << v);
            EXPECT_EQ(a.dual(), b) << "r=" << r << " v=" << v;
        }
}

TEST(RmZ4, SmallestChainIsGuarded) {
    // x1 x2 has degree two, so R(1,3) is not closed under products
    BinaryCode r = reed_muller(1, 3);
    EXPECT_FALSE(closure_check(r, r));
    EXPECT_THROW(rm_z4(3), ClosureViolation);
    EXPECT_THROW(rm_z4(2), ValidationError);
}

TEST(RmZ4, SixteenAndThirtyTwo) {
    Z4Code c16 = rm_z4(4);
    EXPECT_EQ(c16.n(), 16);
    EXPECT_EQ(c16.k1(), 5);
    EXPECT_EQ(c16.k2(), 6);
    EXPECT_EQ(c16.log2_size(), 16);
    EXPECT_TRUE(is_formally_self_dual(c16));

    // self-orthogonal with 2^n words, so self-dual; no enumeration needed
    Z4Code c32 = rm_z4(5);
    EXPECT_EQ(c32.log2_size(), 32);
    EXPECT_TRUE(gram_is_zero(c32.generator()));
}

TEST(DoubleCirculant, BorderedGenerator) {
    Z4Matrix g = double_circulant_generator(bordered_block({0, 2, 2, {1}}));
    EXPECT_EQ(g.to_rows(), (std::vector<std::vector<int>>{{1, 0, 0, 2}, {0, 1, 2, 1}}));
    Z4Code c = bdcc({0, 2, 2, {1}});
    EXPECT_EQ(c.k1(), 2);
    EXPECT_EQ(c.k2(), 0);
}

TEST(DoubleCirculant, CirculantShiftsRight) {
    EXPECT_EQ(circulant({1, 2, 3}).to_rows(), (std::vector<std::vector<int>>{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}));
}

TEST(DoubleCirculant, PureTwelveMatchesFixture) {
    Z4Code c = pdcc(kSeed12);
    EXPECT_EQ(codeword_set(c), codeword_set(load_code("pdcc12_seed.json")));
    EXPECT_TRUE(is_formally_self_dual(c));
}

TEST(DoubleCirculant, ZeroSeedSwapsWithItsDual) {
    // (I | 0) and (0 | I) differ by swapping halves
    Z4Code c = pdcc({0, 0});
    EXPECT_EQ(c.k1(), 2);
    EXPECT_TRUE(is_formally_self_dual(c));
    EXPECT_FALSE(is_self_dual(c));
}

TEST(DoubleCirculant, PureCodesAreFormallySelfDual) {
    Random rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        CirculantSeed r = rng.seed(rng.uniform(1, 4));
        bool zero = std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
        if (zero) continue;
        Z4Code c = pdcc(r);
        EXPECT_EQ(c.k1(), static_cast<int>(r.size()));
        EXPECT_EQ(swe_is_formally_self_dual(swe(c)), is_formally_self_dual(c));
    }
}

TEST(DoubleCirculant, EqualBordersGiveFsd) {
    for (int eta = 2; eta <= 3; ++eta) {
        int total = 1 << (2 * (eta + 2));
        for (int s = 0; s < total; ++s) {
            BorderParams p{s & 3, (s >> 2) & 3, (s >> 4) & 3, {}};
            for (int i = 0; i < eta - 1; ++i) p.r.push_back((s >> (6 + 2 * i)) & 3);
            if (p.beta != p.gamma) continue;
            ASSERT_TRUE(bdcc_isodual_predicate(p));
            ASSERT_TRUE(is_formally_self_dual(bdcc(p))) << "s=" << s << " eta=" << eta;
        }
    }
}

TEST(DoubleCirculant, UnequalNonzeroBordersNeedNotBeFsd) {
    BorderParams p{1, 2, 1, {0}};
    EXPECT_TRUE(bdcc_isodual_predicate(p));
    EXPECT_FALSE(is_formally_self_dual(bdcc(p)));
}

TEST(BorderedConditions, Examples) {
    EXPECT_FALSE(bdcc_self_dual_conditions({0, 2, 2, {1}}).all());
    auto c = bdcc_self_dual_conditions({1, 0, 0, {0, 0}});
    EXPECT_FALSE(c.holds[0]);
    EXPECT_TRUE(bdcc_isodual_predicate({1, 0, 0, {2}}));
    EXPECT_TRUE(bdcc_isodual_predicate({1, 1, 3, {2}}));
    EXPECT_FALSE(bdcc_isodual_predicate({1, 0, 3, {2}}));
}

TEST(BorderedConditions, EquivalentToGramForSmallEta) {
    for (int eta = 2; eta <= 3; ++eta) {
        int total = 1 << (2 * (eta + 2));
        int self_dual = 0;
        for (int s = 0; s < total; ++s) {
            BorderParams p{s & 3, (s >> 2) & 3, (s >> 4) & 3, {}};
            for (int i = 0; i < eta - 1; ++i) p.r.push_back((s >> (6 + 2 * i)) & 3);
            bool gram = gram_is_zero(double_circulant_generator(bordered_block(p)));
            ASSERT_EQ(bdcc_self_dual_conditions(p).all(), gram) << "s=" << s << " eta=" << eta;
            self_dual += gram;
        }
        // a norm of 3 needs three odd entries, and then the border row is not orthogonal
        EXPECT_EQ(self_dual, 0);
    }
}

TEST(BorderedConditions, WitnessAtEtaFour) {
    int witnesses = 0;
    for (int s = 0; s < (1 << 12); ++s) {
        BorderParams p{s & 3, (s >> 2) & 3, (s >> 4) & 3, {(s >> 6) & 3, (s >> 8) & 3, (s >> 10) & 3}};
        bool gram = gram_is_zero(double_circulant_generator(bordered_block(p)));
        // the conditions are necessary
        if (gram) ASSERT_TRUE(bdcc_self_dual_conditions(p).all());
        witnesses += gram;
    }
    EXPECT_GT(witnesses, 0);
}

TEST(PureSelfDual, NoneForSmallEta) {
    for (int eta = 1; eta <= 4; ++eta) EXPECT_TRUE(no_self_dual_pdcc_check(eta));
    EXPECT_THROW(no_self_dual_pdcc_check(9), BudgetExceeded);
}

TEST(OddExtension, ThirteenFromPureTwelve) {
    OddExtensionParams p{circulant(kSeed12), {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
    Z4Code c = odd_extension(p);
    EXPECT_EQ(c.n(), 13);
    EXPECT_EQ(c.k1(), 6);
    EXPECT_EQ(c.k2(), 1);
    EXPECT_EQ(codeword_set(c), codeword_set(load_code("n13k6_oext.json")));
    EXPECT_TRUE(is_formally_self_dual(c));
    EXPECT_FALSE(is_self_dual(c));
    EXPECT_FALSE(oext_self_dual_check(p));
    EXPECT_EQ(min_distances(c).lee, 4);
}

TEST(OddExtension, NineIsSelfDual) {
    Z4Matrix b = Z4Matrix::from_rows({{2, 1, 1, 1}, {1, 1, 2, 3}, {1, 3, 1, 2}, {1, 2, 3, 1}});
    OddExtensionParams p{b, {0, 0, 0, 0}, {0, 0, 0, 0}};
    EXPECT_TRUE(oext_self_dual_check(p));
    Z4Code c = odd_extension(p);
    EXPECT_EQ(codeword_set(c), codeword_set(load_code("n9k14k21.json")));
    EXPECT_TRUE(is_self_dual(c));
}

TEST(OddExtension, IdentityBlockIsNotSelfDual) {
    Z4Matrix id = Z4Matrix::from_rows({{1, 0}, {0, 1}});
    EXPECT_FALSE(oext_self_dual_check({id, {0, 0}, {0, 0}}));
    EXPECT_THROW(odd_extension({id, {0, 2}, {0, 0}}), ValidationError);
    EXPECT_THROW(odd_extension({id, {0}, {0, 0}}), ValidationError);
}

TEST(OddExtension, SelfDualCheckMatchesGram) {
    Random rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        int eta = rng.uniform(1, 4);
        OddExtensionParams p{rng.z4_matrix(eta, eta), rng.bits(eta), rng.bits(eta)};
        EXPECT_EQ(oext_self_dual_check(p), gram_is_zero(odd_extension_generator(p)));
    }
}

TEST(OddExtension, ZeroBordersMultiplyByAPlusC) {
    Random rng(35);
    for (int trial = 0; trial < 40; ++trial) {
        int eta = rng.uniform(1, 5);
        Z4Matrix b = rng.z4_matrix(eta, eta);
        std::vector<int> zero(eta, 0);
        SwePoly lhs = swe(odd_extension({b, zero, zero}));
        SwePoly rhs = swe(standard_form(double_circulant_generator(b))) * a_plus_c_power(1);
        EXPECT_EQ(lhs, rhs);
    }
}
