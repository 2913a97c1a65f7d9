#include "cweg/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cweg/errors.hpp"

namespace cweg {

namespace {

// Exact division of a by the monic polynomial b (both low degree first).
std::vector<long long> divide_monic(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> rem = a;
    std::size_t db = b.size() - 1;
    std::size_t da = a.size() - 1;
    std::vector<long long> q(da - db + 1, 0);
    for (std::size_t k = da + 1; k-- > db;) {
        long long lead = rem[k];
        if (lead == 0) continue;
        q[k - db] = lead;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= lead * b[i];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::unique_ptr<CycContext> build_context(unsigned n) {
    auto ctx = std::make_unique<CycContext>();
    ctx->n = n;
    ctx->cyclo = cyclotomic_polynomial(n);
    ctx->phi = static_cast<unsigned>(ctx->cyclo.size() - 1);
    unsigned phi = ctx->phi;
    std::size_t len = std::max<std::size_t>(n, 2 * phi - 1);
    ctx->power.assign(len, std::vector<long long>(phi, 0));
    for (unsigned k = 0; k < phi && k < len; ++k) ctx->power[k][k] = 1;
    for (std::size_t k = phi; k < len; ++k) {
        // x^k = x * x^{k-1}, then fold the x^phi term
        const auto& prev = ctx->power[k - 1];
        auto& cur = ctx->power[k];
        long long top = prev[phi - 1];
        for (unsigned i = phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        for (unsigned i = 0; i < phi; ++i) cur[i] -= top * ctx->cyclo[i];
    }
    for (unsigned k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) ctx->units.push_back(k);
    if (n == 1) ctx->units.push_back(1);
    return ctx;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
    return poly;
}

const CycContext& cyclotomic_context(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_context(n)).first;
    return *it->second;
}

unsigned conductor_for(unsigned p) { return p == 2 ? 8 : 4 * p; }

CycNum::CycNum(unsigned n) : ctx_(&cyclotomic_context(n)), c_(ctx_->phi) {}

CycNum::CycNum(unsigned n, const Rat& r) : CycNum(n) { c_[0] = r; }

CycNum CycNum::zeta(unsigned n, long long k) {
    CycNum z(n);
    long long m = ((k % n) + n) % n;
    const auto& row = z.ctx_->power[static_cast<std::size_t>(m)];
    for (unsigned i = 0; i < z.ctx_->phi; ++i) z.c_[i] = Rat(row[i]);
    return z;
}

CycNum CycNum::from_basis(unsigned n, const std::vector<Rat>& coeffs) {
    CycNum z(n);
    if (coeffs.size() != z.ctx_->phi) throw ShapeMismatch("basis vector has wrong length for conductor");
    for (unsigned i = 0; i < z.ctx_->phi; ++i) z.c_[i] = coeffs[i];
    return z;
}

bool CycNum::is_zero() const noexcept {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycNum::is_one() const noexcept {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

CycNum CycNum::operator-() const {
    CycNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.ctx_ != ctx_) throw ShapeMismatch("conductor mismatch in addition");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (o.ctx_ != ctx_) throw ShapeMismatch("conductor mismatch in subtraction");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const Rat& r) {
    if (r.is_zero()) {
        for (auto& x : c_) x = Rat();
        return *this;
    }
    if (r.is_one()) return *this;
    for (auto& x : c_)
        if (!x.is_zero()) x *= r;
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.ctx_ != b.ctx_) throw ShapeMismatch("conductor mismatch in multiplication");
    const CycContext& ctx = *a.ctx_;
    unsigned phi = ctx.phi;
    if (b.is_rational()) return a * b.c_[0];
    if (a.is_rational()) return b * a.c_[0];
    boost::container::small_vector<Rat, 8> raw(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNum out(ctx.n);
    for (unsigned i = 0; i < phi; ++i) out.c_[i] = std::move(raw[i]);
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (raw[k].is_zero()) continue;
        const auto& row = ctx.power[k];
        for (unsigned i = 0; i < phi; ++i)
            if (row[i] != 0) out.c_[i] += raw[k] * Rat(row[i]);
    }
    return out;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.ctx_ != b.ctx_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

CycNum CycNum::galois(unsigned k) const {
    unsigned n = ctx_->n;
    if (std::gcd(k, n) != 1 && n != 1) throw std::invalid_argument("galois exponent not a unit");
    CycNum out(n);
    for (unsigned j = 0; j < ctx_->phi; ++j) {
        if (c_[j].is_zero()) continue;
        std::size_t m = (static_cast<std::size_t>(j) * k) % n;
        const auto& row = ctx_->power[m];
        for (unsigned i = 0; i < ctx_->phi; ++i)
            if (row[i] != 0) out.c_[i] += c_[j] * Rat(row[i]);
    }
    return out;
}

Rat CycNum::norm() const {
    CycNum prod(ctx_->n, Rat(1));
    for (unsigned k : ctx_->units) prod *= galois(k);
    return prod.rational_value();
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    if (is_rational()) return CycNum(ctx_->n, c_[0].inverse());
    CycNum prod(ctx_->n, Rat(1));
    for (unsigned k : ctx_->units)
        if (k != 1) prod *= galois(k);
    Rat nrm = (prod * *this).rational_value();
    return prod * nrm.inverse();
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < c_.size(); ++i) {
        const Rat& r = c_[i];
        if (r.is_zero()) continue;
        bool neg = r.sign() < 0;
        Rat mag = r.abs();
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (i == 0) {
            os << mag;
        } else {
            if (!mag.is_one()) os << mag << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string CycNum::basis_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    return s + "]";
}

CycNum CycNum::parse_basis(unsigned n, std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("coefficient vector must be bracketed");
    std::vector<Rat> parts;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) comma = body.size();
        parts.push_back(Rat::parse(body.substr(start, comma - start)));
        start = comma + 1;
    }
    return from_basis(n, parts);
}

std::size_t CycNum::hash() const noexcept {
    std::size_t h = ctx_->n;
    for (const auto& r : c_) h = h * 1000003u ^ r.hash();
    return h;
}

CycNum cyc_reduce(const std::vector<Rat>& raw, unsigned n) {
    CycNum out(n);
    const CycContext& ctx = out.context();
    std::vector<Rat> acc(ctx.phi);
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k].is_zero()) continue;
        const auto& row = ctx.power[k % n];
        for (unsigned i = 0; i < ctx.phi; ++i)
            if (row[i] != 0) acc[i] += raw[k] * Rat(row[i]);
    }
    return CycNum::from_basis(n, acc);
}

CycNum sqrt_prime_power(unsigned p, unsigned r, unsigned n) {
    if (n % conductor_for(p) != 0)
        throw ShapeMismatch("conductor " + std::to_string(n) + " does not contain sqrt(" + std::to_string(p) + ")");
    CycNum out(n, Rat(ipow(BigInt(p), r / 2)));
    if (r % 2 == 0) return out;
    CycNum root(n);
    if (p == 2) {
        root = CycNum::zeta(n, n / 8) + CycNum::zeta(n, 7 * (n / 8));
    } else {
        CycNum gauss(n);
        for (unsigned t = 0; t < p; ++t) gauss += CycNum::zeta(n, static_cast<long long>(t * t % p) * (n / p));
        if (p % 4 == 1) {
            root = gauss;
        } else {
            root = -(CycNum::zeta(n, n / 4) * gauss);
        }
    }
    return out * root;
}

}  // namespace cweg
