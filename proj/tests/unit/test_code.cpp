#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cweg/automorphism.hpp"
#include "cweg/code.hpp"
#include "cweg/errors.hpp"
#include "fixtures.hpp"

using namespace cweg;

TEST(Code, FromRows) {
    auto c = code_from_strings(2, {"11"}, CodeType::TypeI2);
    EXPECT_EQ(c.dim(), 1u);
    auto c2 = code_from_strings(2, {"11", "11"}, CodeType::TypeI2);
    EXPECT_EQ(c, c2);
    EXPECT_EQ(c2.dim(), 1u);
    EXPECT_THROW(code_from_strings(2, {"11", "011"}, CodeType::TypeI2), ShapeMismatch);
    EXPECT_THROW(code_from_strings(2, {"12"}, CodeType::TypeI2), std::invalid_argument);
    EXPECT_THROW(code_from_strings(3, {"12"}, CodeType::TypeI2), ShapeMismatch);
    auto t = fixtures::tetracode();
    EXPECT_EQ(t.dim(), 2u);
    EXPECT_EQ(dual_code(t), t);
}

TEST(Code, RrefIsCanonical) {
    auto a = code_from_strings(2, {"11110000", "00111100", "00001111", "01010101"}, CodeType::TypeII2);
    auto b = code_from_strings(2, {"01010101", "11001100", "00001111", "11111111", "10100101"}, CodeType::TypeII2);
    EXPECT_EQ(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < a.dim(); ++r) EXPECT_EQ(a.basis()[r][a.pivots()[i]], r == i ? 1 : 0);
}

TEST(Code, Duality) {
    auto i2 = fixtures::i2();
    EXPECT_EQ(dual_code(i2), i2);
    std::vector<Word> full;
    for (unsigned j = 0; j < 5; ++j) {
        Word w(5, 0);
        w[j] = 1;
        full.push_back(w);
    }
    auto f = code_from_rows(2, 5, full, CodeType::TypeI2);
    EXPECT_EQ(dual_code(f).dim(), 0u);
    EXPECT_EQ(dual_code(dual_code(f)), f);
    auto e8 = fixtures::e8();
    EXPECT_EQ(dual_code(e8), e8);

    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        unsigned n = 3 + rng() % 10, k = 1 + rng() % n;
        std::vector<Word> rows(k, Word(n));
        for (auto& r : rows)
            for (auto& x : r) x = rng() % 3;
        auto c = code_from_rows(3, n, rows, CodeType::TypeQ);
        auto d = dual_code(c);
        EXPECT_EQ(d.dim(), n - c.dim());
        EXPECT_EQ(dual_code(d), c);
        for (const auto& u : c.basis())
            for (const auto& v : d.basis()) {
                unsigned s = 0;
                for (unsigned j = 0; j < n; ++j) s += u[j] * v[j];
                EXPECT_EQ(s % 3, 0u);
            }
    }
}

TEST(Code, CheckType) {
    EXPECT_TRUE(check_type(fixtures::i2()));
    EXPECT_FALSE(check_type(fixtures::i2().retagged(CodeType::TypeII2)));
    EXPECT_TRUE(check_type(fixtures::e8()));
    EXPECT_TRUE(check_type(fixtures::tetracode()));
    EXPECT_FALSE(check_type(fixtures::tetracode().retagged(CodeType::TypeQ1)));
    for (const auto& [name, c] : fixtures::table_codes()) {
        EXPECT_TRUE(check_type(c)) << name;
        EXPECT_EQ(c.dim() * 2, c.length()) << name;
    }
}

TEST(Code, Enumeration) {
    EXPECT_EQ(codewords(fixtures::i2()).size(), 2u);
    auto wd = weight_distribution(fixtures::e8());
    EXPECT_EQ(wd, (std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1}));
    auto e16 = weight_distribution(fixtures::E16());
    EXPECT_EQ(e16[0], 1u);
    EXPECT_EQ(e16[2], 0u);
    EXPECT_EQ(e16[4], 28u);
    EXPECT_EQ(e16[6], 0u);
    EXPECT_EQ(e16[8], 198u);
    EXPECT_EQ(e16[12], 28u);
    EXPECT_EQ(e16[16], 1u);
    // bitset and generic orders agree
    auto c = fixtures::F16();
    auto bits = binary_codewords(c);
    auto gen = codewords(c);
    ASSERT_EQ(bits.size(), gen.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        std::uint64_t b = 0;
        for (unsigned j = 0; j < 16; ++j) b |= std::uint64_t(gen[i][j]) << j;
        EXPECT_EQ(b, bits[i]);
    }
    EXPECT_THROW(codeword_count(fixtures::E16(), 100), BudgetExceeded);
}

TEST(Code, EvenWeightsEverywhere) {
    for (const auto& [name, c] : fixtures::table_codes()) {
        auto wd = weight_distribution(c);
        for (std::size_t w = 1; w < wd.size(); w += 2) EXPECT_EQ(wd[w], 0u) << name;
    }
    auto wd = weight_distribution(fixtures::E16().retagged(CodeType::TypeII2));
    for (std::size_t w = 0; w < wd.size(); ++w)
        if (w % 4) EXPECT_EQ(wd[w], 0u);
}

TEST(Automorphism, SmallCodes) {
    EXPECT_EQ(*aut_order(fixtures::i2()), BigInt(2));
    EXPECT_EQ(*aut_order(fixtures::e8()), BigInt(1344));
    EXPECT_EQ(*aut_order(fixtures::make({"1111"})), BigInt(24));  // not self-dual, still a code
}

TEST(Automorphism, LengthSixteenOrders) {
    const std::vector<std::pair<std::string, unsigned long>> expect = {
        {"E16", 5160960},     {"F16", 73728},     {"A8^2", 3612672}, {"D14+i2", 112896},
        {"B12+i2^2", 184320}, {"A8+i2^4", 516096}, {"i2^8", 10321920}};
    auto codes = fixtures::table_codes();
    for (std::size_t i = 0; i < codes.size(); ++i) {
        auto r = automorphism_group(codes[i].code);
        ASSERT_TRUE(r.order.has_value()) << codes[i].name;
        EXPECT_EQ(*r.order, BigInt(expect[i].second)) << codes[i].name;
        for (const auto& g : r.generators) EXPECT_TRUE(is_automorphism(codes[i].code, g));
        // divides N!
        EXPECT_EQ(factorial(16) % *r.order, 0);
    }
}

TEST(Automorphism, InvariantUnderPermutationAndRowOrder) {
    std::mt19937 rng(5);
    auto c = fixtures::F16();
    for (int it = 0; it < 3; ++it) {
        std::vector<unsigned> perm(16);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto pc = permuted(c, perm);
        EXPECT_EQ(*aut_order(pc), BigInt(73728));
        auto rows = pc.basis();
        std::reverse(rows.begin(), rows.end());
        EXPECT_EQ(*aut_order(code_from_rows(2, 16, rows, CodeType::TypeI2)), BigInt(73728));
    }
}

TEST(Automorphism, LimitsReportUnknown) {
    AutOptions opt;
    opt.max_length = 8;
    EXPECT_FALSE(aut_order(fixtures::E16(), opt).has_value());
    opt.max_length = 20;
    opt.max_nodes = 3;
    EXPECT_FALSE(aut_order(fixtures::i2_8(), opt).has_value());
    EXPECT_FALSE(aut_order(fixtures::tetracode()).has_value());
}
