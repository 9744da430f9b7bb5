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
using io::json;

TEST(CodeJson, RejectsBadInput) {
    EXPECT_THROW(io::code_from_json(json::parse(R"({"ring":3,"n":2,"generator":[[1,0]]})")), ValidationError);
    EXPECT_THROW(io::code_from_json(json::parse(R"({"ring":4,"n":0,"generator":[]})")), ValidationError);
    EXPECT_THROW(io::code_from_json(json::parse(R"({"ring":4,"n":3,"generator":[[1,0]]})")), ValidationError);
    EXPECT_THROW(io::code_from_json(json::parse(R"({"ring":2,"n":2,"generator":[[2,0]]})")), ValidationError);
    EXPECT_THROW(io::code_from_json(json::parse(R"({"ring":4,"generator":[[1]]})")), ValidationError);
    EXPECT_THROW(io::code_from_json(json::parse(R"({"ring":4,"n":1,"generator":"x"})")), ValidationError);
    EXPECT_THROW(io::read_json_file(data_path("no_such_file.json")), ValidationError);
}

TEST(CodeJson, RingMismatch) {
    auto binary = io::read_code_file(data_path("codes_dim12_A1.json"));
    EXPECT_EQ(binary.ring, 2);
    EXPECT_THROW(io::to_z4_code(binary), ValidationError);
    EXPECT_THROW(io::to_binary_code(io::read_code_file(data_path("octacode.json"))), ValidationError);
}

TEST(CodeJson, RoundTrip) {
    Random rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        Z4Code c = rng.z4_code(1, 7);
        Z4Code back = io::to_z4_code(io::code_from_json(io::code_to_json(c)));
        EXPECT_EQ(back.n(), c.n());
        EXPECT_EQ(back.log2_size(), c.log2_size());
        EXPECT_EQ(codeword_set(back), codeword_set(c));
    }
}

TEST(PolyJson, RoundTrip) {
    json j = io::poly_to_json(octacode_swe(), {"a", "b", "c"});
    EXPECT_EQ(j["degree"], 8);
    EXPECT_EQ(j["terms"][0]["exp"], json::parse("[8,0,0]"));
    EXPECT_TRUE(j["terms"][0]["coef"].is_string());
    EXPECT_EQ(io::poly_from_json<3>(j), octacode_swe());
    EXPECT_EQ(io::poly_arity(j), 3);
    EXPECT_THROW(io::poly_to_json(octacode_swe(), {"a", "b"}), ValidationError);
}

TEST(PolyJson, BigCoefficients) {
    const std::string big = "123456789012345678901234567890";
    json j = json::parse(R"({"degree":2,"terms":[{"exp":[2,0],"coef":")" + big + R"("},{"exp":[0,2],"coef":7}]})");
    WePoly w = io::poly_from_json<2>(j);
    EXPECT_EQ(w.coefficient({2, 0}).str(), big);
    EXPECT_EQ(w.coefficient({0, 2}), BigInt(7));
    EXPECT_EQ(io::poly_arity(j), 2);
    EXPECT_EQ(io::poly_to_json(w, {"x", "y"})["terms"][0]["coef"], big);
}

TEST(PolyJson, RejectsBadInput) {
    EXPECT_THROW(io::poly_from_json<3>(json::parse(R"({"degree":2,"terms":[{"exp":[2,0],"coef":"1"}]})")),
                 ValidationError);
    EXPECT_THROW(io::poly_from_json<2>(json::parse(R"({"degree":2,"vars":["x"],"terms":[]})")), ValidationError);
    EXPECT_THROW(io::poly_from_json<2>(json::parse(R"({"degree":2,"terms":[{"exp":[2,0],"coef":"1.5"}]})")),
                 ValidationError);
    EXPECT_THROW(io::poly_from_json<2>(json::parse(R"({"terms":[]})")), ValidationError);
    EXPECT_THROW(io::poly_arity(json::parse(R"({"degree":2,"terms":[]})")), ValidationError);
}

TEST(ParseBigint, AcceptsSignsOnly) {
    EXPECT_EQ(io::parse_bigint("-42"), BigInt(-42));
    EXPECT_EQ(io::parse_bigint("+42"), BigInt(42));
    EXPECT_EQ(io::parse_bigint("0"), BigInt(0));
    for (const char* bad : {"", "-", "1e3", "12a", " 1", "0x10"}) EXPECT_THROW(io::parse_bigint(bad), ValidationError) << bad;
}

TEST(HPoly, ReadsCoefficientsByPower) {
    auto h = io::hpoly_from_json(io::read_json_file(data_path("c26_h.json")));
    EXPECT_EQ(h.n, 26);
    ASSERT_FALSE(h.coefficients.empty());
    EXPECT_EQ(h.coefficients.size(), 17u);
    EXPECT_EQ(h.coefficients[0], BigInt(67108864));
    EXPECT_EQ(h.coefficients[1], BigInt(0));
    EXPECT_THROW(io::hpoly_from_json(json::parse(R"({"degree":4,"terms":[{"exp":[1,1],"coef":"1"}]})")), ValidationError);
    EXPECT_THROW(io::hpoly_from_json(json::parse(R"({"degree":4,"terms":[{"exp":[-1],"coef":"1"}]})")), ValidationError);
}

TEST(ParamText, SeedsAndBorders) {
    EXPECT_EQ(io::parse_seed("0, 2,1"), (CirculantSeed{0, 2, 1}));
    EXPECT_THROW(io::parse_seed("0,4"), ValidationError);
    EXPECT_THROW(io::parse_seed("0,,1"), ValidationError);
    EXPECT_THROW(io::parse_seed("1x"), ValidationError);
    EXPECT_THROW(io::parse_seed(""), ValidationError);
    BorderParams b = io::parse_border("2,1,1;0,2");
    EXPECT_EQ(b.alpha, 2);
    EXPECT_EQ(b.beta, 1);
    EXPECT_EQ(b.gamma, 1);
    EXPECT_EQ(b.r, (CirculantSeed{0, 2}));
    EXPECT_THROW(io::parse_border("2,1,1"), ValidationError);
    EXPECT_THROW(io::parse_border("2,1;0"), ValidationError);
    EXPECT_THROW(io::parse_border("2,1,5;0"), ValidationError);
}

TEST(ParamText, RoundTripsSearchText) {
    SearchSpace s;
    s.family = Family::Bdcc;
    s.eta = 3;
    for (std::uint64_t i = 0; i < candidate_count(s); i += 37) {
        auto p = candidate_params(s, i);
        BorderParams b = io::parse_border(params_text(s, p));
        EXPECT_EQ((std::vector<int>{b.alpha, b.beta, b.gamma, b.r[0], b.r[1]}), p);
    }
}

TEST(FormatRational, LowestTerms) {
    EXPECT_EQ(io::format_rational(BigRational(8, 6)), "4/3");
    EXPECT_EQ(io::format_rational(BigRational(-6, 3)), "-2");
    EXPECT_EQ(io::format_rational(BigRational(0)), "0");
    EXPECT_EQ(io::format_rational(BigRational(1024, 231)), "1024/231");
}
