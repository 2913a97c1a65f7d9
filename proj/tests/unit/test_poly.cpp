#include <gtest/gtest.h>

#include <random>

#include "cweg/errors.hpp"
#include "cweg/poly.hpp"

using namespace cweg;

namespace {

CycNum q(long long a, long long b = 1) { return CycNum(8, Rat(a, b)); }

Poly random_poly(unsigned p, unsigned g, unsigned deg, unsigned n, std::mt19937& rng, unsigned terms) {
    Poly out(p, g, deg, n);
    unsigned nv = out.nvars();
    std::uniform_int_distribution<int> c(-4, 4);
    for (unsigned t = 0; t < terms; ++t) {
        Exps e(nv, 0);
        for (unsigned k = 0; k < deg; ++k) ++e[rng() % nv];
        std::vector<Rat> raw(n);
        raw[rng() % n] = Rat(c(rng), 1 + (rng() % 3));
        out.add_term(e, cyc_reduce(raw, n));
    }
    return out;
}

Operator random_operator(unsigned p, unsigned g, unsigned n, std::mt19937& rng) {
    Operator m(p, g, n);
    for (unsigned i = 0; i < m.dim(); ++i)
        for (unsigned j = 0; j < m.dim(); ++j)
            if (rng() % 2) m.at(i, j) = CycNum::zeta(n, rng() % n) * Rat(static_cast<long long>(rng() % 3) - 1);
    return m;
}

// Oracle for the inner product: apply p(d/dx) to conj(q) term by term.
CycNum differential_inner(const Poly& a, const Poly& b) {
    CycNum total(a.conductor());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            // d^ea/dx^ea applied to x^eb is nonzero constant only if ea == eb (equal degree)
            bool ok = true;
            BigInt k = 1;
            for (std::size_t v = 0; v < ea.size(); ++v) {
                if (ea[v] > eb[v]) ok = false;
                for (unsigned t = 0; t < ea[v] && ok; ++t) k *= (eb[v] - t);
            }
            if (!ok || ea != eb) continue;
            total += ca * cb.conj() * Rat(k);
        }
    return total;
}

}  // namespace

TEST(Poly, InnerProductExamples) {
    auto x0sq = Poly::monomial(2, 1, {2, 0}, q(1));
    auto x0x1 = Poly::monomial(2, 1, {1, 1}, q(1));
    EXPECT_EQ(inner_product(x0sq, x0sq), q(2));
    EXPECT_EQ(inner_product(x0x1, x0x1), q(1));
    EXPECT_TRUE(inner_product(x0sq, x0x1).is_zero());

    // f1 = (12,4) - 4(10,6) + 6(8,8)
    Poly f1(2, 1, 16, 8);
    f1.add_term({12, 4}, q(1));
    f1.add_term({4, 12}, q(1));
    f1.add_term({10, 6}, q(-4));
    f1.add_term({6, 10}, q(-4));
    f1.add_term({8, 8}, q(6));
    BigInt expect = 2 * factorial(12) * factorial(4) + 32 * factorial(10) * factorial(6) + 36 * factorial(8) * factorial(8);
    EXPECT_EQ(inner_product(f1, f1), CycNum(8, Rat(expect)));
    EXPECT_THROW(inner_product(f1, x0sq), ShapeMismatch);
}

TEST(Poly, InnerProductMatchesDifferentialForm) {
    std::mt19937 rng(1);
    for (int it = 0; it < 20; ++it) {
        auto a = random_poly(2, 2, 3, 8, rng, 6);
        auto b = random_poly(2, 2, 3, 8, rng, 6);
        EXPECT_EQ(inner_product(a, b), differential_inner(a, b));
    }
}

TEST(Poly, InnerProductHermitian) {
    std::mt19937 rng(2);
    for (int it = 0; it < 30; ++it) {
        auto a = random_poly(2, 1, 5, 8, rng, 4);
        auto b = random_poly(2, 1, 5, 8, rng, 4);
        auto c = random_poly(2, 1, 5, 8, rng, 4);
        EXPECT_EQ(inner_product(a, b), inner_product(b, a).conj());
        EXPECT_EQ(inner_product(a + c, b), inner_product(a, b) + inner_product(c, b));
        EXPECT_EQ(inner_product(a * CycNum::zeta(8, 1), b), inner_product(a, b) * CycNum::zeta(8, 1));
        auto n = inner_product(a, a);
        EXPECT_EQ(n, n.conj());
        if (!a.is_zero()) EXPECT_FALSE(n.is_zero());
    }
}

TEST(Poly, ApplyOperatorExamples) {
    auto f = Poly::monomial(2, 1, {2, 1}, q(1));
    EXPECT_EQ(apply_operator(f, Operator::identity(2, 1, 8)), f);
    Operator swap(2, 1, 8);
    swap.at(0, 1) = q(1);
    swap.at(1, 0) = q(1);
    EXPECT_EQ(apply_operator(f, swap), Poly::monomial(2, 1, {1, 2}, q(1)));

    CycNum s = sqrt_prime_power(2, 1, 8).inverse();
    Operator h(2, 1, 8);
    h.at(0, 0) = s;
    h.at(0, 1) = s;
    h.at(1, 0) = s;
    h.at(1, 1) = -s;
    Poly e(2, 1, 2, 8);
    e.add_term({2, 0}, q(1));
    e.add_term({0, 2}, q(1));
    EXPECT_EQ(apply_operator(e, h), e);
    // (x0 + x1)^2 / 2 for a single monomial
    Poly img = apply_operator(Poly::monomial(2, 1, {2, 0}, q(1)), h);
    EXPECT_EQ(img.coeff({1, 1}), q(1));
    EXPECT_EQ(img.coeff({2, 0}), q(1, 2));
}

TEST(Poly, ActionIsRightActionForProduct) {
    std::mt19937 rng(3);
    for (int it = 0; it < 10; ++it) {
        auto a = random_poly(2, 2, 3, 8, rng, 5);
        auto m1 = random_operator(2, 2, 8, rng);
        auto m2 = random_operator(2, 2, 8, rng);
        EXPECT_EQ(apply_operator(apply_operator(a, m1), m2), apply_operator(a, m1 * m2));
    }
    auto a = random_poly(3, 1, 4, 12, rng, 6);
    auto m1 = random_operator(3, 1, 12, rng);
    auto m2 = random_operator(3, 1, 12, rng);
    EXPECT_EQ(apply_operator(apply_operator(a, m1), m2), apply_operator(a, m1 * m2));
}

TEST(Poly, ConjAndProfile) {
    auto f = Poly::monomial(2, 1, {4, 0}, CycNum::zeta(8, 2));
    EXPECT_EQ(conj_poly(f), Poly::monomial(2, 1, {4, 0}, -CycNum::zeta(8, 2)));
    EXPECT_EQ(conj_poly(conj_poly(f)), f);
    Poly e(2, 1, 2, 8);
    e.add_term({2, 0}, q(1));
    e.add_term({0, 2}, q(1));
    auto prof = tuple_profile(e);
    ASSERT_EQ(prof.size(), 1u);
    EXPECT_EQ(prof.begin()->first, (std::vector<unsigned>{2}));
    EXPECT_THROW(tuple_profile(f), ValidationError);  // orbit partly present
    e.add_term({2, 0}, q(1));
    EXPECT_THROW(tuple_profile(e), ValidationError);  // unequal on the orbit
}

TEST(Poly, SerializeRoundTrip) {
    std::mt19937 rng(4);
    auto a = random_poly(2, 2, 4, 8, rng, 10);
    EXPECT_EQ(Poly::parse(a.serialize()), a);
    auto b = random_poly(3, 1, 3, 12, rng, 5);
    EXPECT_EQ(Poly::parse(b.serialize()), b);
    EXPECT_THROW(Poly::parse("nonsense"), ParseError);
}

TEST(Poly, StrFormatting) {
    Poly e(2, 2, 2, 8);
    e.add_term({2, 0, 0, 0}, q(1));
    e.add_term({0, 1, 1, 0}, q(-3));
    EXPECT_EQ(e.str(), "x00^2 - 3*x01*x10");
    EXPECT_EQ(Poly(2, 1, 3, 8).str(), "0");
}
