#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cweg/rational.hpp"

namespace cweg {

/// Precomputed data for Q(zeta_n) = Q[x]/(Phi_n).
struct CycContext {
    unsigned n = 1;
    unsigned phi = 1;
    std::vector<long long> cyclo;                 // Phi_n, low degree first, monic
    std::vector<std::vector<long long>> power;    // power[k] = zeta^k in the power basis, 0 <= k < max(n, 2*phi-1)
    std::vector<unsigned> units;                  // k in [1,n) coprime to n
};

/// Cached per conductor; safe to call concurrently.
const CycContext& cyclotomic_context(unsigned n);

/// Phi_n via iterated division of x^n - 1 by Phi_d, d | n, d < n.
std::vector<long long> cyclotomic_polynomial(unsigned n);

/// Run-wide conductor for the field F_p: 8 for p = 2, 4p otherwise.
unsigned conductor_for(unsigned p);

class CycNum {
public:
    using Coeffs = boost::container::small_vector<Rat, 4>;

    CycNum() : CycNum(1u) {}
    explicit CycNum(unsigned n);
    CycNum(unsigned n, const Rat& r);

    static CycNum zeta(unsigned n, long long k);
    /// Scalar from coefficients already in canonical power-basis form.
    static CycNum from_basis(unsigned n, const std::vector<Rat>& coeffs);

    unsigned conductor() const noexcept { return ctx_->n; }
    const CycContext& context() const noexcept { return *ctx_; }
    const Coeffs& coeffs() const noexcept { return c_; }
    const Rat& coeff(unsigned k) const { return c_.at(k); }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    /// Throws std::domain_error if not rational.
    Rat rational_value() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator*=(const Rat& r);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator*(CycNum a, const Rat& r) { return a *= r; }
    friend CycNum operator*(const Rat& r, CycNum a) { return a *= r; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    friend bool operator==(const CycNum& a, const CycNum& b);

    /// zeta_n -> zeta_n^k for k coprime to n.
    CycNum galois(unsigned k) const;
    CycNum conj() const { return galois(ctx_->n - 1 == 0 ? 1 : ctx_->n - 1); }
    Rat norm() const;
    CycNum inverse() const;

    /// Human form, e.g. "1/2 - z^2 + 3*z^3" (z = zeta_n).
    std::string str() const;
    /// Coefficient vector "[a0,a1,...]".
    std::string basis_str() const;
    static CycNum parse_basis(unsigned n, std::string_view text);

    std::size_t hash() const noexcept;

private:
    const CycContext* ctx_;
    Coeffs c_;
};

CycNum cyc_reduce(const std::vector<Rat>& raw, unsigned n);
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_conj(const CycNum& a) { return a.conj(); }

/// Positive real square root of p^r inside Q(zeta_n); n must be conductor_for(p)
/// (or a multiple of it).
CycNum sqrt_prime_power(unsigned p, unsigned r, unsigned n);

}  // namespace cweg

template <>
struct std::hash<cweg::CycNum> {
    std::size_t operator()(const cweg::CycNum& c) const noexcept { return c.hash(); }
};
