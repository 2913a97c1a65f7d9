#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cweg/errors.hpp"
#include "cweg/weight_enumerator.hpp"
#include "fixtures.hpp"
#include "reference_tables.hpp"

using namespace cweg;

namespace {

Rat prof_at(const std::map<std::vector<unsigned>, CycNum>& prof, std::vector<unsigned> key) {
    auto it = prof.find(key);
    return it == prof.end() ? Rat(0) : it->second.rational_value();
}

}  // namespace

TEST(Cwe, GenusOneSmall) {
    Poly e = cwe(fixtures::i2(), 1);
    Poly expect(2, 1, 2, 8);
    expect.add_term({2, 0}, CycNum(8, Rat(1)));
    expect.add_term({0, 2}, CycNum(8, Rat(1)));
    EXPECT_EQ(e, expect);
    Poly z = cwe(fixtures::e8(), 0);
    EXPECT_EQ(z.size(), 1u);
    EXPECT_EQ(z.coeff({8}), CycNum(8, Rat(1)));
}

TEST(Cwe, GenusOneLengthSixteen) {
    const std::vector<std::vector<long>> t2 = {{1, 0, 28, 0, 198}, {1, 0, 12, 64, 102}, {1, 0, 28, 0, 198}, {1, 1, 14, 63, 98},
                                              {1, 2, 16, 62, 94}, {1, 4, 20, 60, 86},  {1, 8, 28, 56, 70}};
    auto codes = fixtures::table_codes();
    for (std::size_t i = 0; i < codes.size(); ++i) {
        auto prof = tuple_profile(cwe(codes[i].code, 1));
        EXPECT_EQ(prof_at(prof, {16}), Rat(t2[i][0])) << codes[i].name;
        EXPECT_EQ(prof_at(prof, {14, 2}), Rat(t2[i][1])) << codes[i].name;
        EXPECT_EQ(prof_at(prof, {12, 4}), Rat(t2[i][2])) << codes[i].name;
        EXPECT_EQ(prof_at(prof, {10, 6}), Rat(t2[i][3])) << codes[i].name;
        EXPECT_EQ(prof_at(prof, {8, 8}), Rat(t2[i][4])) << codes[i].name;
    }
}

TEST(Cwe, GenusTwoSelectedEntries) {
    auto e16 = tuple_profile(cwe(fixtures::E16(), 2));
    EXPECT_EQ(prof_at(e16, {8, 4, 4}), Rat(420));
    EXPECT_EQ(prof_at(e16, {4, 4, 4, 4}), Rat(29400));
    auto f16 = tuple_profile(cwe(fixtures::F16(), 2));
    EXPECT_EQ(prof_at(f16, {6, 6, 4}), Rat(192));
    EXPECT_EQ(prof_at(f16, {8, 4, 2, 2}), Rat(576));
    EXPECT_EQ(prof_at(f16, {4, 4, 4, 4}), Rat(8088));
}

TEST(Cwe, FastKernelMatchesGeneric) {
    EXPECT_EQ(cwe_binary_fast(fixtures::i2_8(), 1), cwe_generic(fixtures::i2_8(), 1));
    EXPECT_EQ(cwe_binary_fast(fixtures::E16(), 2), cwe_generic(fixtures::E16(), 2));
    EXPECT_EQ(cwe_binary_fast(fixtures::e8(), 2), cwe_generic(fixtures::e8(), 2));
    EXPECT_EQ(cwe_binary_fast(fixtures::e8(), 3), cwe_generic(fixtures::e8(), 3));
    EXPECT_EQ(cwe_binary_fast(fixtures::i2(), 4), cwe_generic(fixtures::i2(), 4));
    set_enumeration_threads(3);
    EXPECT_EQ(cwe_binary_fast(fixtures::F16(), 2), cwe_generic(fixtures::F16(), 2));
    set_enumeration_threads(0);
}

TEST(Cwe, MassAndIntegrality) {
    for (const auto& [name, c] : fixtures::table_codes()) {
        for (unsigned g = 1; g <= 2; ++g) {
            Poly e = cwe(c, g);
            EXPECT_EQ(e.coefficient_sum(), CycNum(8, Rat(1LL << (g * c.length() / 2)))) << name;
            for (const auto& [ex, k] : e.terms()) {
                ASSERT_TRUE(k.is_rational());
                EXPECT_TRUE(k.rational_value().is_integer());
                EXPECT_GT(k.rational_value().sign(), 0);
            }
        }
    }
    auto t = cwe(fixtures::tetracode(), 1);
    EXPECT_EQ(t.nvars(), 3u);
    EXPECT_EQ(t.coefficient_sum(), CycNum(12, Rat(9)));
    // 1 zero word, 8 words of weight 3: the nonzero columns of a weight-3 word are never all equal
    EXPECT_EQ(t.coeff({4, 0, 0}), CycNum(12, Rat(1)));
}

TEST(Cwe, PermutationInvariance) {
    std::mt19937 rng(9);
    for (const auto& c : {fixtures::F16(), fixtures::B12i2sq()}) {
        std::vector<unsigned> perm(c.length());
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(cwe(permuted(c, perm), 2), cwe(c, 2));
    }
}

TEST(Cwe, Budget) {
    EXPECT_THROW(cwe(fixtures::E16(), 3, 1000), BudgetExceeded);
    EXPECT_THROW(cwe_generic(fixtures::E16(), 2, 1000), BudgetExceeded);
}

TEST(Cwe, FullLengthSixteenTables) {
    for (const auto& row : reference::kLength16) {
        const LinearCode* code = nullptr;
        auto codes = fixtures::table_codes();
        for (const auto& nc : codes)
            if (nc.name == row.name) code = &nc.code;
        ASSERT_NE(code, nullptr) << row.name;
        auto p1 = tuple_profile(cwe(*code, 1));
        EXPECT_EQ(p1.size(), static_cast<std::size_t>(std::count_if(row.genus1.begin(), row.genus1.end(), [](long v) { return v != 0; }))) << row.name;
        for (std::size_t i = 0; i < row.genus1.size(); ++i) EXPECT_EQ(prof_at(p1, reference::kGenus1Keys[i]), Rat(row.genus1[i])) << row.name;
        auto p2 = tuple_profile(cwe(*code, 2));
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < row.genus1.size(); ++i) {
            EXPECT_EQ(prof_at(p2, reference::kGenus1Keys[i]), Rat(row.genus1[i])) << row.name;
            nonzero += row.genus1[i] != 0;
        }
        for (std::size_t i = 0; i < row.genus2.size(); ++i) {
            EXPECT_EQ(prof_at(p2, reference::kGenus2Keys[i]), Rat(row.genus2[i])) << row.name;
            nonzero += row.genus2[i] != 0;
        }
        EXPECT_EQ(p2.size(), nonzero) << row.name;
    }
}
