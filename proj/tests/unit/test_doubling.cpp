#include <gtest/gtest.h>

#include "cweg/clifford_weil.hpp"
#include "cweg/doubling.hpp"
#include "cweg/errors.hpp"
#include "cweg/weight_enumerator.hpp"
#include "fixtures.hpp"

using namespace cweg;

namespace {

CycNum q(long long a, long long b = 1) { return CycNum(8, Rat(a, b)); }

Poly f1() {
    Poly f(2, 1, 16, 8);
    f.add_term({12, 4}, q(1));
    f.add_term({4, 12}, q(1));
    f.add_term({10, 6}, q(-4));
    f.add_term({6, 10}, q(-4));
    f.add_term({8, 8}, q(6));
    return f;
}

Rat fact_over(unsigned n, long long d) { return Rat(factorial(n)) / Rat(d); }

const CodeDatabase& db() {
    static const CodeDatabase d = bundled_db();
    return d;
}

}  // namespace

TEST(Dmap, Examples) {
    // X_(v1,v2) has index 2*v1 + v2 at genus 1
    Poly a = Poly::monomial(2, 2, {1, 0, 1, 0}, q(2));
    BipartitePoly expect(2, 1, 2, 2, 8);
    expect.add_term({1, 1}, {2, 0}, q(2));
    EXPECT_EQ(dmap(a), expect);
    EXPECT_EQ(dmap(cwe(fixtures::e8(), 2)), BipartitePoly::product(cwe(fixtures::e8(), 1), cwe(fixtures::e8(), 1)));
    EXPECT_EQ(dmap(cwe(fixtures::tetracode(), 2)),
              BipartitePoly::product(cwe(fixtures::tetracode(), 1), cwe(fixtures::tetracode(), 1)));
    EXPECT_THROW(dmap(cwe(fixtures::e8(), 1)), ShapeMismatch);
}

TEST(PairY, ProductAndConjugateLinearity) {
    Poly a = cwe(fixtures::E16(), 1);
    Poly b = cwe(fixtures::F16(), 1);
    Poly f = f1();
    Poly expect = a;
    expect *= inner_product(b, f);
    EXPECT_EQ(pair_y(BipartitePoly::product(a, b), f), expect);
    Poly fz = f;
    fz *= CycNum::zeta(8, 1);
    Poly ez = expect;
    ez *= CycNum::zeta(8, 7);
    EXPECT_EQ(pair_y(BipartitePoly::product(a, b), fz), ez);
}

TEST(SiegelWeil, Norms) {
    EXPECT_EQ(siegel_weil_norm(CodeType::TypeII2, 2, 8, 1), Rat(1, 72));
    EXPECT_EQ(siegel_weil_norm(CodeType::TypeI2, 2, 2, 1), Rat(1));  // empty product
    EXPECT_THROW(siegel_weil_norm(CodeType::TypeQ, 3, 4, 1), ValidationError);
}

TEST(SiegelWeil, EisensteinMatchesCosetSum) {
    Poly sw = eisenstein_sw(CodeType::TypeII2, 8, 1, db());
    EXPECT_EQ(sw, eisenstein_coset(CodeType::TypeII2, 2, 1, 8));
    Poly i16 = eisenstein_sw(CodeType::TypeI2, 16, 1, db());
    EXPECT_EQ(i16.coeff(Exps{16, 0}), q(129, 256));
    EXPECT_EQ(i16, eisenstein_coset(CodeType::TypeI2, 2, 1, 16));
    EXPECT_EQ(eisenstein_sw(CodeType::TypeI2, 8, 2, db()), eisenstein_coset(CodeType::TypeI2, 2, 2, 8));
    EXPECT_THROW(eisenstein_sw(CodeType::TypeII2, 24, 1, db()), ValidationError);
}

TEST(Constants, ClosedFormMatchesGroupOrders) {
    struct Row {
        CodeType t;
        unsigned p, n, g;
        Rat c;
    };
    for (const auto& r : {Row{CodeType::TypeII2, 2, 8, 1, Rat(1, 10)}, Row{CodeType::TypeII2, 2, 24, 2, Rat(3, 65536LL * 153)},
                          Row{CodeType::TypeQ, 3, 4, 1, Rat(1, 15)}, Row{CodeType::TypeQ1, 3, 6, 1, Rat(1, 5)},
                          Row{CodeType::TypeQ1, 3, 12, 2, Rat(2, 23247)}, Row{CodeType::TypeQ, 5, 8, 2, Rat(8, 4108125)}}) {
        EXPECT_EQ(const_c(r.t, r.p, r.n, r.g), r.c) << type_name(r.t) << " N=" << r.n;
        EXPECT_EQ(const_c_from_orders(r.t, r.p, r.n, r.g), r.c) << type_name(r.t) << " N=" << r.n;
    }
    EXPECT_THROW(const_c(CodeType::TypeI2, 2, 16, 1), ValidationError);
}

TEST(Constants, TypeOneConjecture) {
    EXPECT_EQ(const_conj(16, 1), fact_over(16, 64 * 3));
    EXPECT_EQ(const_conj(16, 2), fact_over(16, 1024 * 15));
    EXPECT_EQ(expected_scalar(CodeType::TypeI2, 2, 16, 1), const_conj(16, 1));
    for (unsigned n : {8u, 16u, 24u})
        for (unsigned g = 1; g <= 2; ++g) EXPECT_EQ(const_conj(n, g), const_conj_from_orders(n, g)) << n << " " << g;
    // At g = 3 the order formula carries an extra prod_{i<g} (2^i - 1) = 3.
    for (unsigned n : {8u, 16u, 24u}) EXPECT_EQ(const_conj_from_orders(n, 3) / const_conj(n, 3), Rat(3)) << n;
}

TEST(Constants, FactorialDisplay) {
    EXPECT_EQ(factorial_str(fact_over(16, 64 * 3), 16), "16!/(2^6*3)");
    EXPECT_EQ(factorial_str(fact_over(16, 1024 * 15), 16), "16!/(2^10*3*5)");
    EXPECT_EQ(factorial_str(Rat(factorial(8)), 8), "8!");
}

TEST(FitScalar, ProportionalAndNot) {
    Poly f = f1();
    Poly three = f;
    three *= Rat(3);
    auto fc = fit_scalar(f, three);
    EXPECT_TRUE(fc.proportional);
    ASSERT_TRUE(fc.scalar.has_value());
    EXPECT_EQ(*fc.scalar, q(3));
    EXPECT_TRUE(fc.residual.is_zero());
    auto bad = fit_scalar(f, cwe(fixtures::E16(), 1));
    EXPECT_FALSE(bad.proportional);
}

TEST(VerifyDoubling, TypeOneLengthSixteen) {
    auto r1 = verify_doubling(CodeType::TypeI2, 16, 1, db());
    EXPECT_EQ(r1.dimension(), 2u);
    EXPECT_TRUE(r1.consistent);
    EXPECT_TRUE(r1.match);
    for (const auto& f : r1.forms) {
        ASSERT_TRUE(f.scalar.has_value());
        EXPECT_EQ(*f.scalar, CycNum(8, fact_over(16, 64 * 3)));
        EXPECT_TRUE(f.residual.is_zero());
    }
    EXPECT_NE(r1.key_values().find("match=yes"), std::string::npos);
    EXPECT_NE(r1.text(true).find("16!/(2^6*3)"), std::string::npos);

    auto r2 = verify_doubling(CodeType::TypeI2, 16, 2, db());
    ASSERT_EQ(r2.dimension(), 1u);
    EXPECT_TRUE(r2.match);
    EXPECT_EQ(*r2.forms[0].scalar, CycNum(8, fact_over(16, 1024 * 15)));
}

TEST(VerifyDoubling, EmptyCuspSpace) {
    auto r = verify_doubling(CodeType::TypeII2, 16, 1, db());
    EXPECT_EQ(r.dimension(), 0u);
    EXPECT_FALSE(r.match);
    EXPECT_NE(r.key_values().find("dim=0"), std::string::npos);
    EXPECT_THROW(verify_doubling(CodeType::TypeII2, 24, 1, db()), ValidationError);
}

TEST(BasisExpansion, ReconstructsCuspForms) {
    auto e = basis_expansion(f1(), CodeType::TypeI2, 16, 1, db());
    EXPECT_TRUE(e.exact);
    EXPECT_EQ(e.reconstruction, f1());
    EXPECT_EQ(e.coefficients.size(), 7u);
    EXPECT_THROW(basis_expansion(cwe(fixtures::E16(), 1), CodeType::TypeI2, 16, 1, db()), ValidationError);
}
