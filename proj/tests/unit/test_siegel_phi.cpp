#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cweg/clifford_weil.hpp"
#include "cweg/errors.hpp"
#include "cweg/siegel_phi.hpp"
#include "cweg/weight_enumerator.hpp"
#include "fixtures.hpp"

using namespace cweg;

namespace {

CycNum q(long long a, long long b = 1) { return CycNum(8, Rat(a, b)); }

Poly random_poly(unsigned p, unsigned g, unsigned deg, std::mt19937& rng, unsigned terms) {
    const unsigned n = conductor_for(p);
    Poly out(p, g, deg, n);
    for (unsigned t = 0; t < terms; ++t) {
        Exps e(out.nvars(), 0);
        for (unsigned k = 0; k < deg; ++k) ++e[rng() % out.nvars()];
        out.add_term(e, CycNum::zeta(n, rng() % n) * Rat(static_cast<long long>(rng() % 7) - 3, 1 + rng() % 3));
    }
    return out;
}

std::vector<NamedCode> table_named() {
    std::vector<NamedCode> out;
    for (const auto& [name, c] : fixtures::table_codes()) out.push_back({name, c});
    return out;
}

Poly combo(const std::vector<std::pair<LinearCode, Rat>>& parts, unsigned g) {
    Poly out(2, g, parts.front().first.length(), 8);
    for (const auto& [c, k] : parts) {
        Poly e = cwe(c, g);
        e *= k;
        out += e;
    }
    return out;
}

Poly f1() {
    Poly f(2, 1, 16, 8);
    f.add_term({12, 4}, q(1));
    f.add_term({4, 12}, q(1));
    f.add_term({10, 6}, q(-4));
    f.add_term({6, 10}, q(-4));
    f.add_term({8, 8}, q(6));
    return f;
}

}  // namespace

TEST(Phi, RuleInstances) {
    EXPECT_EQ(phi_op(Poly::monomial(2, 1, {5, 0}, q(1)), 1), Poly::monomial(2, 0, {5}, q(1)));
    EXPECT_TRUE(phi_op(Poly::monomial(2, 1, {0, 5}, q(1)), 1).is_zero());
    EXPECT_EQ(phi_op_w(Poly::monomial(2, 1, {0, 5}, q(1)), 1, {1}), Poly::monomial(2, 0, {5}, q(1)));
    // genus 2, drop the last coordinate: x00 -> x0, x10 -> x1
    Poly a = Poly::monomial(2, 2, {1, 0, 2, 0}, q(3));
    EXPECT_EQ(phi_op(a, 1), Poly::monomial(2, 1, {1, 2}, q(3)));
    EXPECT_EQ(lift_op(Poly::monomial(2, 1, {1, 2}, q(3)), 1), a);
    EXPECT_EQ(lift_op_w(Poly::monomial(2, 1, {1, 2}, q(3)), 1, {1}), Poly::monomial(2, 2, {0, 1, 0, 2}, q(3)));
    EXPECT_THROW(phi_op(a, 3), std::out_of_range);
    EXPECT_THROW(phi_op_w(a, 1, {2}), ShapeMismatch);
    EXPECT_THROW(phi_op_w(a, 1, {0, 0}), ShapeMismatch);
}

TEST(Phi, WZeroMatchesPhi) {
    std::mt19937 rng(11);
    for (int it = 0; it < 10; ++it) {
        Poly a = random_poly(3, 2, 3, rng, 8);
        EXPECT_EQ(phi_op_w(a, 1, {0}), phi_op(a, 1));
        EXPECT_EQ(phi_op_w(a, 2, {0, 0}), phi_op(a, 2));
    }
}

TEST(Phi, EnumeratorsDropOneGenus) {
    EXPECT_EQ(phi_op(cwe(fixtures::i2(), 1), 1), cwe(fixtures::i2(), 0));
    EXPECT_EQ(phi_op(cwe(fixtures::e8(), 2), 1), cwe(fixtures::e8(), 1));
    EXPECT_EQ(phi_op(cwe(fixtures::E16(), 2), 1), cwe(fixtures::E16(), 1));
    EXPECT_EQ(phi_op(cwe(fixtures::E16(), 2), 2), cwe(fixtures::E16(), 0));
    EXPECT_EQ(phi_op(cwe(fixtures::tetracode(), 2), 1), cwe(fixtures::tetracode(), 1));
}

TEST(Phi, LiftIsRightInverseAndAdjoint) {
    std::mt19937 rng(12);
    for (unsigned p : {2u, 3u})
        for (unsigned g = 1; g <= 3; ++g)
            for (unsigned j = 1; j <= g; ++j) {
                Poly b = random_poly(p, g - j, 3, rng, 5);
                std::vector<unsigned> w(j);
                for (auto& x : w) x = rng() % p;
                EXPECT_EQ(phi_op_w(lift_op_w(b, j, w), j, w), b);
                Poly a = random_poly(p, g, 3, rng, 10);
                EXPECT_EQ(inner_product(lift_op(b, j), a), inner_product(b, phi_op(a, j)));
            }
}

TEST(Phi, CompositionConsistency) {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        Poly a = random_poly(2, 3, 4, rng, 20);
        EXPECT_EQ(phi_op(a, 3), phi_op(phi_op(phi_op(a, 1), 1), 1));
        EXPECT_EQ(phi_op_w(a, 2, {1, 0}), phi_op_w(phi_op_w(a, 1, {0}), 1, {1}));
    }
}

TEST(Phi, IdempotentSelfAdjointProjection) {
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            Poly a = Poly::monomial(2, 1, {static_cast<std::uint16_t>(n - k), static_cast<std::uint16_t>(k)}, q(1));
            Poly pa = lift_op(phi_op(a, 1), 1);
            EXPECT_EQ(lift_op(phi_op(pa, 1), 1), pa);
            for (unsigned l = 0; l <= n; ++l) {
                Poly b = Poly::monomial(2, 1, {static_cast<std::uint16_t>(n - l), static_cast<std::uint16_t>(l)}, q(1));
                EXPECT_EQ(inner_product(pa, b), inner_product(a, lift_op(phi_op(b, 1), 1)));
            }
        }
}

TEST(Phi, OrthogonalDecomposition) {
    std::mt19937 rng(14);
    for (int it = 0; it < 10; ++it) {
        Poly a = random_poly(3, 2, 3, rng, 12);
        Poly lifted = lift_op(phi_op(a, 1), 1);
        Poly rest = a - lifted;
        EXPECT_TRUE(phi_op(rest, 1).is_zero());
        EXPECT_TRUE(inner_product(rest, lifted).is_zero());
    }
}

TEST(Cusp, FormOneIsCuspidal) {
    EXPECT_TRUE(phi_op(f1(), 1).is_zero());
    auto chk = is_cusp(f1(), CodeType::TypeI2, true);
    EXPECT_TRUE(chk.ok());
    EXPECT_FALSE(is_cusp(cwe(fixtures::E16(), 1), CodeType::TypeI2, false).ok());
    EXPECT_FALSE(is_cusp(Poly(2, 1, 16, 8), CodeType::TypeI2, false).nonzero);
    // Phi-vanishing but not invariant
    EXPECT_FALSE(is_cusp(Poly::monomial(2, 1, {15, 1}, q(1)), CodeType::TypeI2, true).ok());
}

TEST(Cusp, DimensionsAtLengthSixteen) {
    auto codes = table_named();
    auto b1 = cusp_basis(codes, 1);
    EXPECT_EQ(b1.dimension(), 2u);
    Poly pf1 = combo({{fixtures::E16(), Rat(1, 16)}, {fixtures::F16(), Rat(-1, 16)}}, 1);
    Poly pf2 = combo({{fixtures::E16(), Rat(1, 8)}, {fixtures::i2_8(), Rat(-1, 8)}}, 1);
    EXPECT_EQ(pf1, f1());
    EXPECT_TRUE(in_span(b1.polys, pf1));
    EXPECT_TRUE(in_span(b1.polys, pf2));
    EXPECT_FALSE(in_span(b1.polys, cwe(fixtures::E16(), 1)));

    auto b2 = cusp_basis(codes, 2);
    ASSERT_EQ(b2.dimension(), 1u);
    Poly f = combo({{fixtures::A8i2_4(), Rat(1, 8)}, {fixtures::F16(), Rat(1, 8)}, {fixtures::B12i2sq(), Rat(-2, 8)}}, 2);
    EXPECT_TRUE(in_span(b2.polys, f));
    EXPECT_TRUE(is_cusp(f, CodeType::TypeI2, true).ok());
    for (const auto& bf : b2.polys)
        for (unsigned j = 1; j <= 2; ++j)
            for (unsigned w = 0; w < (1u << j); ++w) EXPECT_TRUE(phi_op_w(bf, j, decode_vec(w, 2, j)).is_zero());

    EXPECT_EQ(cusp_basis({{"E16", fixtures::E16()}}, 1).dimension(), 0u);
    EXPECT_EQ(cusp_basis({{"e8^2", fixtures::A8sq()}, {"E16", fixtures::E16()}}, 1).dimension(), 0u);
}

TEST(Cusp, DisplayAndSerialize) {
    auto b2 = cusp_basis(table_named(), 2);
    ASSERT_EQ(b2.dimension(), 1u);
    auto d = b2.display_combo(0);
    auto first = std::find_if(d.begin(), d.end(), [](const Rat& x) { return x.sign() != 0; });
    ASSERT_NE(first, d.end());
    EXPECT_GT(first->sign(), 0);
    for (const auto& x : d) EXPECT_TRUE(x.is_integer());
    std::string s = b2.serialize();
    EXPECT_EQ(s.rfind("cusp type=2I N=16 g=2 dim=1", 0), 0u) << s;
    EXPECT_NE(s.find("form 1:"), std::string::npos);
}

TEST(Cusp, OrderInvariant) {
    auto codes = table_named();
    auto base = cusp_basis(codes, 2);
    std::mt19937 rng(15);
    for (int it = 0; it < 3; ++it) {
        std::shuffle(codes.begin(), codes.end(), rng);
        EXPECT_TRUE(same_cusp_space(base, cusp_basis(codes, 2)));
    }
}
