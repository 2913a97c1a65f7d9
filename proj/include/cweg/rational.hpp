#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cweg {

using BigInt = mpz_class;

BigInt factorial(unsigned n);
BigInt ipow(const BigInt& base, unsigned exp);
std::string to_string(const BigInt& v);

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are held inline;
/// everything else lives in a GMP rational. The inline form is used whenever
/// it can represent the value, so the representation is canonical and
/// equality/hashing never has to look across the two forms.
class Rat {
public:
    Rat() noexcept = default;
    Rat(int v) : Rat(static_cast<long long>(v)) {}
    Rat(long v) : Rat(static_cast<long long>(v)) {}
    Rat(long long v);
    Rat(long long num, long long den);
    explicit Rat(const BigInt& v);
    Rat(const BigInt& num, const BigInt& den);
    explicit Rat(const mpq_class& q);

    Rat(const Rat& o);
    Rat(Rat&& o) noexcept = default;
    Rat& operator=(const Rat& o);
    Rat& operator=(Rat&& o) noexcept = default;
    ~Rat() = default;

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    BigInt numerator() const;
    BigInt denominator() const;
    mpq_class to_mpq() const;

    Rat operator-() const;
    Rat inverse() const;
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    friend bool operator==(const Rat& a, const Rat& b);
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// "n" or "n/d".
    std::string str() const;
    /// Accepts "n", "-n", "n/d"; the result is normalized.
    static Rat parse(std::string_view text);

    std::size_t hash() const noexcept;

private:
    void assign_big(mpq_class&& q);
    void assign_i128(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, int exp);

}  // namespace cweg

template <>
struct std::hash<cweg::Rat> {
    std::size_t operator()(const cweg::Rat& r) const noexcept { return r.hash(); }
};
