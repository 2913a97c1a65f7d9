#include "cweg/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cweg {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) { return v > __int128(kMin) && v <= __int128(kMax); }

void set_mpz_from_i128(mpz_class& out, __int128 v) {
    u128 m = abs128(v);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    auto lo = static_cast<std::uint64_t>(m);
    out = hi;
    out <<= 64;
    mpz_class low;
    mpz_import(low.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
    out += low;
    if (v < 0) out = -out;
}

void set_mpz_from_i64(mpz_class& out, std::int64_t v) {
    set_mpz_from_i128(out, v);
}

bool mpz_fits_small(const mpz_class& v) {
    // strictly inside (INT64_MIN, INT64_MAX]
    return mpz_sizeinbase(v.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_i64(const mpz_class& v) {
    std::uint64_t mag = 0;
    std::size_t count = 0;
    mpz_export(&mag, &count, 1, sizeof(mag), 0, 0, v.get_mpz_t());
    auto r = static_cast<std::int64_t>(mag);
    return sgn(v) < 0 ? -r : r;
}

}  // namespace

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt ipow(const BigInt& base, unsigned exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

Rat::Rat(long long v) {
    if (v == kMin) {
        assign_big(mpq_class(mpz_class(std::to_string(v))));
    } else {
        num_ = v;
    }
}

Rat::Rat(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    assign_i128(num, den);
}

Rat::Rat(const BigInt& v) { assign_big(mpq_class(v)); }

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("Rat: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    assign_big(std::move(q));
}

Rat::Rat(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

Rat::Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rat& Rat::operator=(const Rat& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    if (o.big_) {
        if (big_) {
            *big_ = *o.big_;
        } else {
            big_ = std::make_unique<mpq_class>(*o.big_);
        }
    } else {
        big_.reset();
    }
    return *this;
}

void Rat::assign_big(mpq_class&& q) {
    if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
        num_ = mpz_to_i64(q.get_num());
        den_ = mpz_to_i64(q.get_den());
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    if (big_) {
        *big_ = std::move(q);
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rat::assign_i128(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), u128(den));
    if (g > 1) {
        num /= __int128(g);
        den /= __int128(g);
    }
    if (fits(num) && fits(den)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q;
    set_mpz_from_i128(q.get_num(), num);
    set_mpz_from_i128(q.get_den(), den);
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rat::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    set_mpz_from_i64(q.get_num(), num_);
    set_mpz_from_i64(q.get_den(), den_);
    return q;
}

bool Rat::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

int Rat::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

BigInt Rat::numerator() const {
    if (big_) return big_->get_num();
    BigInt r;
    set_mpz_from_i64(r, num_);
    return r;
}

BigInt Rat::denominator() const {
    if (big_) return big_->get_den();
    BigInt r;
    set_mpz_from_i64(r, den_);
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    if (big_) {
        r.assign_big(mpq_class(-*big_));
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    if (big_) {
        mpq_class q = 1 / *big_;
        r.assign_big(std::move(q));
    } else {
        r.assign_i128(den_, num_);
    }
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
                num_ = s;
                return *this;
            }
        }
        __int128 n = __int128(num_) * o.den_ + __int128(o.num_) * den_;
        __int128 d = __int128(den_) * o.den_;
        assign_i128(n, d);
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(num_, o.num_, &s) && s != kMin) {
                num_ = s;
                return *this;
            }
        }
        __int128 n = __int128(num_) * o.den_ - __int128(o.num_) * den_;
        __int128 d = __int128(den_) * o.den_;
        assign_i128(n, d);
        return *this;
    }
    assign_big(to_mpq() - o.to_mpq());
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        std::int64_t g1 = std::gcd(num_, o.den_);
        std::int64_t g2 = std::gcd(o.num_, den_);
        __int128 n = __int128(num_ / g1) * (o.num_ / g2);
        __int128 d = __int128(den_ / g2) * (o.den_ / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_i128(n, d);
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rat& Rat::operator/=(const Rat& o) { return *this *= o.inverse(); }

Rat operator+(const Rat& a, const Rat& b) {
    Rat r(a);
    r += b;
    return r;
}
Rat operator-(const Rat& a, const Rat& b) {
    Rat r(a);
    r -= b;
    return r;
}
Rat operator*(const Rat& a, const Rat& b) {
    Rat r(a);
    r *= b;
    return r;
}
Rat operator/(const Rat& a, const Rat& b) {
    Rat r(a);
    r /= b;
    return r;
}

bool operator==(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value representable inline is never big
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = __int128(a.num_) * b.den_;
        __int128 r = __int128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::string Rat::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("Rat::parse: zero denominator");
    q.canonicalize();
    return Rat(q);
}

std::size_t Rat::hash() const noexcept {
    std::uint64_t h;
    if (big_) {
        h = mpz_get_ui(big_->get_num().get_mpz_t()) * 0x9E3779B97F4A7C15ULL ^
            mpz_get_ui(big_->get_den().get_mpz_t()) ^ (sgn(*big_) < 0 ? 0x5bd1e995ULL : 0);
    } else {
        // mpz_get_ui gives |value| mod 2^64, so mirror that for the inline form
        std::uint64_t n = num_ < 0 ? std::uint64_t(0) - std::uint64_t(num_) : std::uint64_t(num_);
        h = n * 0x9E3779B97F4A7C15ULL ^ std::uint64_t(den_) ^ (num_ < 0 ? 0x5bd1e995ULL : 0);
    }
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, int exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Rat result(1);
    Rat b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

}  // namespace cweg
