#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cweg/cyclotomic.hpp"
#include "cweg/operator.hpp"

namespace cweg {

/// Dense exponent vector indexed by the variable encoding of F_p^g.
using Exps = std::vector<std::uint16_t>;

struct ExpsHash {
    std::size_t operator()(const Exps& e) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : e) h = (h ^ x) * 0x100000001b3ULL;
        return h;
    }
};

/// Homogeneous polynomial of degree N in the p^g variables x_v, v in F_p^g,
/// with coefficients in Q(zeta_n). Terms are kept in lexicographic order of
/// the exponent vector; zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Exps, CycNum>;

    Poly(unsigned p, unsigned g, unsigned degree, unsigned conductor);

    /// sum_v x_v^N
    static Poly power_sum(unsigned p, unsigned g, unsigned degree, unsigned conductor);
    static Poly monomial(unsigned p, unsigned g, const Exps& e, const CycNum& c);

    unsigned p() const noexcept { return p_; }
    unsigned genus() const noexcept { return g_; }
    unsigned degree() const noexcept { return deg_; }
    unsigned conductor() const noexcept { return n_; }
    unsigned nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exps& e, const CycNum& c);
    CycNum coeff(const Exps& e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const CycNum& s);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator*(Poly a, const CycNum& s) { return a *= s; }
    /// Product of polynomials in the same variables; degrees add.
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Sum of coefficients (the value at x = (1,...,1)).
    CycNum coefficient_sum() const;

    /// e.g. "x00^2*x11^2 + 3*x01^4"; variables are named by their F_p^g vectors.
    std::string str() const;
    std::string var_name(unsigned index) const;

    /// Header line then one "e0,e1,... [c0,c1,...]" line per term.
    std::string serialize() const;
    static Poly parse(const std::string& text);

    void check_compatible(const Poly& o, const char* what) const;

private:
    unsigned p_, g_, deg_, n_, nvars_;
    Terms terms_;
};

/// (a, b) = sum_m a_m conj(b_m) prod_v n_v(m)!
CycNum inner_product(const Poly& a, const Poly& b);

/// Substitute x_v -> sum_w M[v][w] x_w.
Poly apply_operator(const Poly& a, const Operator& m);

Poly conj_poly(const Poly& a);

/// Coefficients on orbits of exponent vectors under all permutations of the
/// variables, keyed by the nonzero exponents sorted in decreasing order.
/// Throws ValidationError if the coefficients are not constant on an orbit.
std::map<std::vector<unsigned>, CycNum> tuple_profile(const Poly& a);
std::string tuple_key_str(const std::vector<unsigned>& key);
std::string profile_str(const std::map<std::vector<unsigned>, CycNum>& prof);

/// prod_v n_v! for an exponent vector, as an exact integer.
BigInt factorial_weight(const Exps& e);

}  // namespace cweg
