#include "cweg/clifford_weil.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cweg/errors.hpp"

namespace cweg {

// ---------------------------------------------------------------------------
// Quadratic forms and generators

void check_type_field(CodeType type, unsigned p) {
    if (!is_prime(p) || p > kMaxPrime) throw ValidationError("unsupported field size " + std::to_string(p));
    if (type_is_binary(type) != (p == 2))
        throw ValidationError("type " + type_name(type) + " is not defined over F_" + std::to_string(p));
}

QuadraticForm QuadraticForm::zero(CodeType type, unsigned p, unsigned g) {
    check_type_field(type, p);
    QuadraticForm q;
    q.type = type;
    q.p = p;
    q.g = g;
    q.a.assign(g, 0);
    if (type == CodeType::TypeQ1) q.b.assign(g, 0);
    q.m.assign(g, std::vector<unsigned>(g, 0));
    return q;
}

std::string QuadraticForm::str() const {
    std::ostringstream os;
    os << "a=(";
    for (unsigned i = 0; i < g; ++i) os << (i ? "," : "") << a[i];
    os << ")";
    if (!b.empty()) {
        os << " b=(";
        for (unsigned i = 0; i < g; ++i) os << (i ? "," : "") << b[i];
        os << ")";
    }
    if (g > 1) {
        os << " m=(";
        bool first = true;
        for (unsigned i = 0; i < g; ++i)
            for (unsigned j = i + 1; j < g; ++j) {
                os << (first ? "" : ",") << m[i][j];
                first = false;
            }
        os << ")";
    }
    return os.str();
}

namespace {

unsigned diag_denominator(CodeType t, unsigned p) {
    switch (t) {
        case CodeType::TypeI2: return 2;
        case CodeType::TypeII2: return 4;
        default: return p;
    }
}

unsigned diag_range(CodeType t, unsigned p) { return t == CodeType::TypeII2 ? 4 : (t == CodeType::TypeI2 ? 2 : p); }

Rat frac_part(Rat r) {
    BigInt num = r.numerator(), den = r.denominator();
    BigInt q;
    mpz_fdiv_r(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rat(q, den);
}

// exponent k with exp(2 pi i r) = zeta_n^k, r in [0,1) with denominator dividing n
unsigned zeta_exponent(const Rat& r, unsigned n) {
    Rat k = r * Rat(static_cast<long long>(n));
    if (!k.is_integer()) throw ValidationError("phase " + r.str() + " is not an n-th root of unity, n = " + std::to_string(n));
    return static_cast<unsigned>(k.numerator().get_ui() % n);
}

unsigned det_rank(Matrix u, unsigned p) {
    unsigned g = static_cast<unsigned>(u.size());
    unsigned rank = 0;
    for (unsigned col = 0; col < g && rank < g; ++col) {
        unsigned piv = rank;
        while (piv < g && u[piv][col] % p == 0) ++piv;
        if (piv == g) continue;
        std::swap(u[piv], u[rank]);
        unsigned inv = 1;
        while ((u[rank][col] * inv) % p != 1) ++inv;
        for (unsigned r = 0; r < g; ++r) {
            if (r == rank || u[r][col] % p == 0) continue;
            unsigned f = (u[r][col] * inv) % p;
            for (unsigned c = 0; c < g; ++c) u[r][c] = (u[r][c] + (p - f) * (u[rank][c] % p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Rat quadform_eval(const QuadraticForm& phi, const std::vector<unsigned>& v) {
    if (v.size() != phi.g) throw ShapeMismatch("vector length differs from the genus of the form");
    const unsigned p = phi.p;
    const long long d = diag_denominator(phi.type, p);
    Rat total(0);
    for (unsigned i = 0; i < phi.g; ++i) {
        long long x = v[i] % p;
        total += Rat(static_cast<long long>(phi.a[i]) * x * x, d);
        if (phi.type == CodeType::TypeQ1) total += Rat(static_cast<long long>(phi.b[i]) * x, p);
        for (unsigned j = i + 1; j < phi.g; ++j)
            total += Rat(static_cast<long long>(phi.m[i][j] % p) * x * (v[j] % p), static_cast<long long>(p));
    }
    return frac_part(total);
}

std::vector<QuadraticForm> all_quadratic_forms(CodeType type, unsigned p, unsigned g) {
    QuadraticForm base = QuadraticForm::zero(type, p, g);
    std::vector<unsigned*> slots;
    std::vector<unsigned> ranges;
    for (unsigned i = 0; i < g; ++i) {
        slots.push_back(&base.a[i]);
        ranges.push_back(diag_range(type, p));
    }
    if (type == CodeType::TypeQ1)
        for (unsigned i = 0; i < g; ++i) {
            slots.push_back(&base.b[i]);
            ranges.push_back(p);
        }
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i + 1; j < g; ++j) {
            slots.push_back(&base.m[i][j]);
            ranges.push_back(p);
        }
    std::vector<QuadraticForm> out;
    while (true) {
        out.push_back(base);
        std::size_t k = 0;
        while (k < slots.size() && ++*slots[k] == ranges[k]) *slots[k++] = 0;
        if (k == slots.size()) break;
    }
    return out;
}

std::vector<Matrix> general_linear_group(unsigned p, unsigned g) {
    std::vector<Matrix> out;
    Matrix u(g, std::vector<unsigned>(g, 0));
    const unsigned cells = g * g;
    while (true) {
        if (det_rank(u, p) == g) out.push_back(u);
        unsigned k = 0;
        while (k < cells && ++u[k / g][k % g] == p) u[k / g][k % g] = 0, ++k;
        if (k == cells) break;
    }
    return out;
}

Operator gen_m(const Matrix& u, unsigned p) {
    const unsigned g = static_cast<unsigned>(u.size());
    for (const auto& row : u)
        if (row.size() != g) throw ShapeMismatch("m_u needs a square matrix");
    if (det_rank(u, p) != g) throw ValidationError("m_u needs an invertible matrix");
    const unsigned n = conductor_for(p);
    Operator op(p, g, n);
    for (unsigned idx = 0; idx < op.dim(); ++idx) {
        auto v = decode_vec(idx, p, g);
        std::vector<unsigned> uv(g, 0);
        for (unsigned i = 0; i < g; ++i) {
            unsigned s = 0;
            for (unsigned j = 0; j < g; ++j) s += (u[i][j] % p) * v[j];
            uv[i] = s % p;
        }
        op.at(idx, encode_vec(uv, p)) = CycNum(n, Rat(1));
    }
    std::ostringstream os;
    os << "m[";
    for (unsigned i = 0; i < g; ++i) {
        if (i) os << ";";
        for (unsigned j = 0; j < g; ++j) os << u[i][j];
    }
    os << "]";
    op.label = os.str();
    return op;
}

Operator gen_d(const QuadraticForm& phi) {
    const unsigned n = conductor_for(phi.p);
    Operator op(phi.p, phi.g, n);
    for (unsigned idx = 0; idx < op.dim(); ++idx)
        op.at(idx, idx) = CycNum::zeta(n, zeta_exponent(quadform_eval(phi, decode_vec(idx, phi.p, phi.g)), n));
    op.label = "d[" + phi.str() + "]";
    return op;
}

Operator gen_h(unsigned p, unsigned r, unsigned g) {
    if (r < 1 || r > g) throw std::out_of_range("h_r needs 1 <= r <= g");
    const unsigned n = conductor_for(p);
    const CycNum scale = sqrt_prime_power(p, r, n).inverse();
    Operator op(p, g, n);
    const unsigned block = ipow_u(p, r);
    for (unsigned idx = 0; idx < op.dim(); ++idx) {
        auto v = decode_vec(idx, p, g);
        for (unsigned wi = 0; wi < block; ++wi) {
            auto w = decode_vec(wi, p, r);
            auto target = v;
            unsigned dot = 0;
            for (unsigned i = 0; i < r; ++i) {
                target[i] = w[i];
                dot += w[i] * v[i];
            }
            op.at(idx, encode_vec(target, p)) = CycNum::zeta(n, (dot % p) * (n / p)) * scale;
        }
    }
    op.label = "h" + std::to_string(r);
    return op;
}

std::vector<Operator> parabolic_generators(CodeType type, unsigned p, unsigned g) {
    check_type_field(type, p);
    std::vector<Operator> out;
    for (const auto& u : general_linear_group(p, g)) out.push_back(gen_m(u, p));
    for (const auto& f : all_quadratic_forms(type, p, g)) out.push_back(gen_d(f));
    return out;
}

std::vector<Operator> clifford_weil_generators(CodeType type, unsigned p, unsigned g) {
    auto out = parabolic_generators(type, p, g);
    for (unsigned r = 1; r <= g; ++r) out.push_back(gen_h(p, r, g));
    return out;
}

GroupPrediction predicted_group(CodeType type, unsigned p, unsigned g) {
    check_type_field(type, p);
    GroupPrediction out;
    const BigInt q(p);
    if (type == CodeType::TypeI2) {
        out.centre = 2;
        out.kernel = ipow(q, g);
        BigInt o = ipow(q, g * g - g + 1) * (ipow(q, g) - 1);
        for (unsigned i = 1; i < g; ++i) o *= ipow(BigInt(4), i) - 1;
        out.classical = g == 0 ? BigInt(1) : o;
        out.classical_name = "O+_" + std::to_string(2 * g) + "(F_2)";
        return out;
    }
    BigInt sp = ipow(q, g * g);
    for (unsigned i = 1; i <= g; ++i) sp *= ipow(q, 2 * i) - 1;
    out.classical = sp;
    out.classical_name = "Sp_" + std::to_string(2 * g) + "(F_" + std::to_string(p) + ")";
    unsigned z = std::gcd(p + 1, 4u);
    switch (type) {
        case CodeType::TypeII2:
            out.centre = 8;
            out.kernel = ipow(q, g);
            break;
        case CodeType::TypeQ:
            out.centre = z;
            out.kernel = 1;
            break;
        default:
            out.centre = p * z;
            out.kernel = ipow(q, g);
            break;
    }
    return out;
}

BigInt predicted_coset_index(CodeType type, unsigned p, unsigned g) {
    if (type == CodeType::TypeI2) throw ValidationError("the coset-index formula holds for the symplectic types only");
    BigInt out = predicted_group(type, p, g).kernel;
    for (unsigned i = 1; i <= g; ++i) out *= ipow(BigInt(p), i) + 1;
    return out;
}

// ---------------------------------------------------------------------------
// Compact matrices: entries in Z[zeta_n][1/p] with a shared denominator p^e.

namespace {

struct Arith {
    unsigned p = 2, g = 0, n = 8, phi = 4, dim = 1;
    std::vector<std::vector<long long>> power;

    std::size_t entries() const { return static_cast<std::size_t>(dim) * dim; }
    std::size_t size() const { return entries() * phi; }
};

struct CMat {
    std::vector<std::int32_t> c;  // dim*dim*phi
    std::uint32_t e = 0;          // entries are c / p^e
    bool operator==(const CMat& o) const { return e == o.e && c == o.c; }
};

std::uint64_t hash_cmat(const CMat& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ m.e;
    for (auto x : m.c) h = (h ^ static_cast<std::uint32_t>(x)) * 0x100000001b3ULL;
    return h;
}

Arith make_arith(unsigned p, unsigned g, unsigned n) {
    Arith a;
    a.p = p;
    a.g = g;
    a.n = n;
    const auto& ctx = cyclotomic_context(n);
    a.phi = ctx.phi;
    a.dim = ipow_u(p, g);
    a.power = ctx.power;  // covers raw product exponents < 2*phi-1 and shifts < n
    return a;
}

std::int32_t narrow(long long x) {
    if (x > INT32_MAX || x < INT32_MIN) throw std::overflow_error("group element coefficient out of range");
    return static_cast<std::int32_t>(x);
}

void normalize_denominator(const Arith& a, CMat& m) {
    while (m.e > 0) {
        for (auto x : m.c)
            if (x % static_cast<std::int32_t>(a.p) != 0) return;
        for (auto& x : m.c) x /= static_cast<std::int32_t>(a.p);
        --m.e;
    }
}

CMat to_compact(const Arith& a, const Operator& op) {
    if (op.p() != a.p || op.genus() != a.g || op.conductor() != a.n) throw ShapeMismatch("operator shape differs from the group");
    BigInt den = 1;
    for (unsigned i = 0; i < a.dim; ++i)
        for (unsigned j = 0; j < a.dim; ++j)
            for (const auto& r : op.at(i, j).coeffs()) {
                BigInt d = r.denominator();
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            }
    std::uint32_t e = 0;
    BigInt pe = 1;
    while (pe % den != 0) {
        pe *= a.p;
        ++e;
        if (e > 64) throw ValidationError("operator entries are not in Z[zeta][1/p]");
    }
    CMat m;
    m.e = e;
    m.c.resize(a.size());
    for (unsigned i = 0; i < a.dim; ++i)
        for (unsigned j = 0; j < a.dim; ++j) {
            const auto& cf = op.at(i, j).coeffs();
            for (unsigned k = 0; k < a.phi; ++k) {
                Rat v = cf[k] * Rat(pe);
                if (!v.is_integer() || !v.numerator().fits_slong_p()) throw std::overflow_error("operator coefficient out of range");
                m.c[(static_cast<std::size_t>(i) * a.dim + j) * a.phi + k] = narrow(v.numerator().get_si());
            }
        }
    normalize_denominator(a, m);
    return m;
}

Operator from_compact(const Arith& a, const CMat& m, unsigned shift = 0) {
    Operator op(a.p, a.g, a.n);
    const Rat den(ipow(BigInt(a.p), m.e));
    const CycNum z = CycNum::zeta(a.n, shift);
    std::vector<Rat> cf(a.phi);
    for (unsigned i = 0; i < a.dim; ++i)
        for (unsigned j = 0; j < a.dim; ++j) {
            const std::int32_t* src = &m.c[(static_cast<std::size_t>(i) * a.dim + j) * a.phi];
            bool zero = true;
            for (unsigned k = 0; k < a.phi; ++k) {
                cf[k] = Rat(static_cast<long long>(src[k])) / den;
                zero = zero && src[k] == 0;
            }
            if (zero) continue;
            op.at(i, j) = CycNum::from_basis(a.n, cf);
            if (shift) op.at(i, j) *= z;
        }
    return op;
}

bool entry_zero(const std::int32_t* x, unsigned phi) {
    for (unsigned k = 0; k < phi; ++k)
        if (x[k]) return false;
    return true;
}

// Nonzero column lists per row, for sparse products.
struct Sparsity {
    std::vector<std::vector<unsigned>> rows;
};

Sparsity sparsity(const Arith& a, const CMat& m) {
    Sparsity s;
    s.rows.resize(a.dim);
    for (unsigned i = 0; i < a.dim; ++i)
        for (unsigned j = 0; j < a.dim; ++j)
            if (!entry_zero(&m.c[(static_cast<std::size_t>(i) * a.dim + j) * a.phi], a.phi)) s.rows[i].push_back(j);
    return s;
}

CMat multiply(const Arith& a, const CMat& x, const Sparsity& xs, const CMat& y, const Sparsity& ys) {
    const unsigned phi = a.phi, dim = a.dim, raw_len = 2 * phi - 1;
    CMat out;
    out.e = x.e + y.e;
    out.c.assign(a.size(), 0);
    std::vector<long long> raw(static_cast<std::size_t>(dim) * raw_len);
    for (unsigned i = 0; i < dim; ++i) {
        std::fill(raw.begin(), raw.end(), 0);
        std::vector<char> touched(dim, 0);
        for (unsigned k : xs.rows[i]) {
            const std::int32_t* xv = &x.c[(static_cast<std::size_t>(i) * dim + k) * phi];
            for (unsigned j : ys.rows[k]) {
                const std::int32_t* yv = &y.c[(static_cast<std::size_t>(k) * dim + j) * phi];
                long long* r = &raw[static_cast<std::size_t>(j) * raw_len];
                touched[j] = 1;
                for (unsigned s = 0; s < phi; ++s) {
                    if (!xv[s]) continue;
                    for (unsigned t = 0; t < phi; ++t) r[s + t] += static_cast<long long>(xv[s]) * yv[t];
                }
            }
        }
        for (unsigned j = 0; j < dim; ++j) {
            if (!touched[j]) continue;
            const long long* r = &raw[static_cast<std::size_t>(j) * raw_len];
            std::int32_t* dst = &out.c[(static_cast<std::size_t>(i) * dim + j) * phi];
            std::vector<long long> acc(r, r + phi);
            for (unsigned d = phi; d < raw_len; ++d) {
                if (!r[d]) continue;
                for (unsigned t = 0; t < phi; ++t) acc[t] += r[d] * a.power[d][t];
            }
            for (unsigned t = 0; t < phi; ++t) dst[t] = narrow(acc[t]);
        }
    }
    normalize_denominator(a, out);
    return out;
}

void shift_entry(const Arith& a, const std::int32_t* src, unsigned k, long long* dst) {
    for (unsigned t = 0; t < a.phi; ++t) dst[t] = 0;
    for (unsigned s = 0; s < a.phi; ++s) {
        if (!src[s]) continue;
        const auto& pw = a.power[(s + k) % a.n];
        for (unsigned t = 0; t < a.phi; ++t) dst[t] += src[s] * pw[t];
    }
}

// Scale m by the root of unity making its first nonzero entry lexicographically
// least; returns j with (input) = zeta^j * (output).
unsigned canonicalize(const Arith& a, CMat& m) {
    std::size_t first = 0;
    while (first < a.entries() && entry_zero(&m.c[first * a.phi], a.phi)) ++first;
    if (first == a.entries()) return 0;
    std::vector<long long> best(a.phi), cur(a.phi);
    unsigned best_k = 0;
    shift_entry(a, &m.c[first * a.phi], 0, best.data());
    for (unsigned k = 1; k < a.n; ++k) {
        shift_entry(a, &m.c[first * a.phi], k, cur.data());
        if (cur < best) {
            best = cur;
            best_k = k;
        }
    }
    if (best_k != 0) {
        std::vector<long long> tmp(a.phi);
        for (std::size_t idx = first; idx < a.entries(); ++idx) {
            std::int32_t* x = &m.c[idx * a.phi];
            if (entry_zero(x, a.phi)) continue;
            shift_entry(a, x, best_k, tmp.data());
            for (unsigned t = 0; t < a.phi; ++t) x[t] = narrow(tmp[t]);
        }
    }
    return (a.n - best_k) % a.n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Closure

class ClosureData {
public:
    Arith arith;
    std::vector<Operator> generators;
    std::vector<CMat> gens;           // canonical forms
    std::vector<unsigned> gen_shift;  // generator = zeta^shift * canonical
    std::vector<Sparsity> gen_sparse;
    std::vector<CMat> classes;
    std::vector<unsigned> shift;  // class element = zeta^shift * canonical
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
    unsigned step = 0;  // scalars in the group are zeta^(step * k)

    std::optional<std::size_t> find(const CMat& m) const {
        auto it = index.find(hash_cmat(m));
        if (it == index.end()) return std::nullopt;
        for (auto i : it->second)
            if (classes[i] == m) return i;
        return std::nullopt;
    }
    std::size_t insert(CMat m, unsigned s) {
        auto h = hash_cmat(m);
        classes.push_back(std::move(m));
        shift.push_back(s);
        index[h].push_back(static_cast<std::uint32_t>(classes.size() - 1));
        return classes.size() - 1;
    }
    void add_scalar(unsigned k) { step = std::gcd(step, k % arith.n); }
    unsigned scalar_order() const { return arith.n / step; }

    // Canonical class of m (as compact), with its zeta offset.
    std::pair<CMat, unsigned> canon(CMat m) const {
        unsigned j = canonicalize(arith, m);
        return {std::move(m), j};
    }
};

GroupClosure::GroupClosure() : d_(std::make_unique<ClosureData>()) {}
GroupClosure::~GroupClosure() = default;
GroupClosure::GroupClosure(GroupClosure&&) noexcept = default;
GroupClosure& GroupClosure::operator=(GroupClosure&&) noexcept = default;

unsigned GroupClosure::p() const noexcept { return d_->arith.p; }
unsigned GroupClosure::genus() const noexcept { return d_->arith.g; }
unsigned GroupClosure::conductor() const noexcept { return d_->arith.n; }
std::size_t GroupClosure::class_count() const noexcept { return d_->classes.size(); }
unsigned GroupClosure::scalar_order() const noexcept { return d_->scalar_order(); }
BigInt GroupClosure::order() const { return BigInt(static_cast<unsigned long>(class_count())) * scalar_order(); }
const std::vector<Operator>& GroupClosure::generators() const noexcept { return d_->generators; }

bool GroupClosure::contains(const Operator& m) const {
    if (m.p() != p() || m.genus() != genus() || m.conductor() != conductor()) return false;
    CMat c;
    try {
        c = to_compact(d_->arith, m);
    } catch (const ValidationError&) {
        return false;
    } catch (const std::overflow_error&) {
        return false;
    }
    auto [cm, j] = d_->canon(std::move(c));
    auto idx = d_->find(cm);
    if (!idx) return false;
    unsigned diff = (j + d_->arith.n - d_->shift[*idx]) % d_->arith.n;
    return diff % d_->step == 0;
}

Operator GroupClosure::class_element(std::size_t i) const {
    Operator op = from_compact(d_->arith, d_->classes.at(i), d_->shift.at(i));
    return op;
}

GroupClosure closure_of(std::vector<Operator> generators, std::uint64_t cap) {
    if (generators.empty()) throw ValidationError("closure needs at least one generator");
    const Operator& g0 = generators.front();
    GroupClosure out;
    ClosureData& d = *out.d_;
    d.arith = make_arith(g0.p(), g0.genus(), g0.conductor());
    d.step = d.arith.n;
    for (const auto& op : generators) {
        auto [cm, j] = d.canon(to_compact(d.arith, op));
        d.gen_sparse.push_back(sparsity(d.arith, cm));
        d.gens.push_back(std::move(cm));
        d.gen_shift.push_back(j);
    }
    d.generators = std::move(generators);

    auto [id, j0] = d.canon(to_compact(d.arith, Operator::identity(d.arith.p, d.arith.g, d.arith.n)));
    d.insert(std::move(id), j0);
    for (std::size_t cur = 0; cur < d.classes.size(); ++cur) {
        Sparsity cs = sparsity(d.arith, d.classes[cur]);
        for (std::size_t s = 0; s < d.gens.size(); ++s) {
            auto [prod, j] = d.canon(multiply(d.arith, d.classes[cur], cs, d.gens[s], d.gen_sparse[s]));
            unsigned total = (d.shift[cur] + d.gen_shift[s] + j) % d.arith.n;
            if (auto hit = d.find(prod)) {
                d.add_scalar((total + d.arith.n - d.shift[*hit]) % d.arith.n);
            } else {
                d.insert(std::move(prod), total);
                if (d.classes.size() > cap)
                    throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
            }
        }
    }
    if (static_cast<std::uint64_t>(d.classes.size()) * d.scalar_order() > cap)
        throw CapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
    return out;
}

namespace {

void check_cap(CodeType type, unsigned p, unsigned g, std::uint64_t cap) {
    BigInt pred = predicted_group(type, p, g).order();
    if (pred > BigInt(static_cast<unsigned long>(cap)))
        throw CapExceeded("predicted order " + to_string(pred) + " of the genus-" + std::to_string(g) + " group exceeds the cap " +
                          std::to_string(cap));
}

}  // namespace

GroupClosure group_closure(CodeType type, unsigned p, unsigned g, std::uint64_t cap) {
    check_type_field(type, p);
    check_cap(type, p, g, cap);
    return closure_of(clifford_weil_generators(type, p, g), cap);
}

GroupClosure parabolic_closure(CodeType type, unsigned p, unsigned g, std::uint64_t cap) {
    check_type_field(type, p);
    check_cap(type, p, g, cap);
    auto gens = parabolic_generators(type, p, g);
    const unsigned n = conductor_for(p);
    const unsigned z = predicted_group(type, p, g).centre;
    Operator centre = Operator::identity(p, g, n).scaled(CycNum::zeta(n, n / z));
    centre.label = "z";
    gens.push_back(std::move(centre));
    return closure_of(std::move(gens), cap);
}

namespace {

struct CosetLabels {
    std::vector<int> label;           // per class of G
    std::vector<std::size_t> first;  // a class in each projective coset
};

CosetLabels right_coset_labels(const GroupClosure& gc, const GroupClosure& pc) {
    const ClosureData& g = gc.data();
    const ClosureData& p = pc.data();
    if (g.arith.p != p.arith.p || g.arith.g != p.arith.g || g.arith.n != p.arith.n)
        throw ShapeMismatch("subgroup and group act on different spaces");
    for (const auto& op : p.generators)
        if (!gc.contains(op)) throw ValidationError("generator " + op.label + " of the subgroup is not in the group");
    CosetLabels out;
    out.label.assign(g.classes.size(), -1);
    for (std::size_t start = 0; start < g.classes.size(); ++start) {
        if (out.label[start] >= 0) continue;
        int id = static_cast<int>(out.first.size());
        out.first.push_back(start);
        std::vector<std::size_t> queue{start};
        out.label[start] = id;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            Sparsity xs = sparsity(g.arith, g.classes[queue[q]]);
            for (std::size_t s = 0; s < p.gens.size(); ++s) {
                auto [prod, j] = g.canon(multiply(g.arith, p.gens[s], p.gen_sparse[s], g.classes[queue[q]], xs));
                auto hit = g.find(prod);
                if (!hit) throw ValidationError("subgroup element times group element left the group");
                if (out.label[*hit] < 0) {
                    out.label[*hit] = id;
                    queue.push_back(*hit);
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Operator> coset_reps(const GroupClosure& gc, const GroupClosure& pc) {
    auto labels = right_coset_labels(gc, pc);
    const ClosureData& g = gc.data();
    const ClosureData& p = pc.data();
    if (p.step % g.step != 0) throw ValidationError("subgroup scalars are not contained in the group scalars");
    const unsigned split = p.step / g.step;
    std::vector<Operator> out;
    for (std::size_t c = 0; c < labels.first.size(); ++c)
        for (unsigned t = 0; t < split; ++t) {
            Operator op = from_compact(g.arith, g.classes[labels.first[c]], (g.shift[labels.first[c]] + t * g.step) % g.arith.n);
            op.label = "coset" + std::to_string(out.size());
            out.push_back(std::move(op));
        }
    if (BigInt(static_cast<unsigned long>(out.size())) * pc.order() != gc.order())
        throw ValidationError("coset count " + std::to_string(out.size()) + " is not |G|/|P|");
    return out;
}

Poly eisenstein_coset(CodeType type, unsigned p, unsigned g, unsigned n, std::uint64_t cap) {
    const unsigned z = predicted_group(type, p, g).centre;
    if (n % z != 0) throw ValidationError("length " + std::to_string(n) + " is not divisible by |Z| = " + std::to_string(z));
    auto gc = group_closure(type, p, g, cap);
    auto pc = parabolic_closure(type, p, g, cap);
    auto reps = coset_reps(gc, pc);
    const unsigned cond = conductor_for(p);
    Poly seed(p, g, n, cond);
    if (type == CodeType::TypeQ) {
        Exps e(ipow_u(p, g), 0);
        e[0] = static_cast<std::uint16_t>(n);
        seed.add_term(e, CycNum(cond, Rat(1)));
    } else {
        seed = Poly::power_sum(p, g, n, cond);
    }
    Poly total(p, g, n, cond);
    for (const auto& r : reps) total += apply_operator(seed, r);
    total *= Rat(1, static_cast<long long>(reps.size()));
    return total;
}

Operator delta_embed(const Operator& a, const Operator& b) {
    if (a.p() != b.p() || a.genus() != b.genus() || a.conductor() != b.conductor())
        throw ShapeMismatch("delta embedding needs operators of equal shape");
    const unsigned dim = a.dim();
    Operator out(a.p(), 2 * a.genus(), a.conductor());
    for (unsigned v1 = 0; v1 < dim; ++v1)
        for (unsigned w1 = 0; w1 < dim; ++w1) {
            const CycNum& x = a.at(v1, w1);
            if (x.is_zero()) continue;
            for (unsigned v2 = 0; v2 < dim; ++v2)
                for (unsigned w2 = 0; w2 < dim; ++w2) {
                    const CycNum& y = b.at(v2, w2);
                    if (!y.is_zero()) out.at(v1 * dim + v2, w1 * dim + w2) = x * y;
                }
        }
    out.label = "D(" + a.label + "," + b.label + ")";
    return out;
}

Operator tau_operator(CodeType type, unsigned p, unsigned g, unsigned r) {
    check_type_field(type, p);
    if (r > g) throw std::out_of_range("tau_r needs 0 <= r <= g");
    const unsigned n = conductor_for(p);
    const unsigned gg = 2 * g;
    Operator out(p, gg, n);
    if (r == 0) {
        out = Operator::identity(p, gg, n);
        out.label = "tau0";
        return out;
    }
    const unsigned zp = n / p;  // zeta_p = zeta_n^zp
    const Rat scale = Rat(1) / Rat(ipow(BigInt(p), r));
    // coordinates of X_1: the first r of each genus-g half
    auto in_x1 = [&](unsigned i) { return (i < g && i < r) || (i >= g && i - g < r); };
    for (unsigned vi = 0; vi < out.dim(); ++vi) {
        auto v = decode_vec(vi, p, gg);
        unsigned outer = 0;  // phi(v) = sum_{i<r} v_i v_{g+i} / p
        for (unsigned i = 0; i < r; ++i) outer += v[i] * v[g + i];
        for (unsigned wi = 0; wi < out.dim(); ++wi) {
            auto w = decode_vec(wi, p, gg);
            bool same = true;
            for (unsigned i = 0; i < gg && same; ++i)
                if (!in_x1(i) && v[i] != w[i]) same = false;
            if (!same) continue;
            // beta(w, nu v) with nu swapping the two X_1 halves, then d_{phi_r}(w)
            unsigned phase = outer;
            for (unsigned i = 0; i < r; ++i) phase += w[i] * v[g + i] + w[g + i] * v[i] + w[i] * w[g + i];
            out.at(vi, wi) = CycNum::zeta(n, (phase % p) * zp) * scale;
        }
    }
    out.label = "tau" + std::to_string(r);
    return out;
}

bool DoubleCosetReport::ok() const {
    if (!disjoint || !covers) return false;
    return std::all_of(tau_in_group.begin(), tau_in_group.end(), [](bool b) { return b; });
}

DoubleCosetReport double_coset_cover(CodeType type, unsigned p, unsigned g, std::uint64_t cap) {
    auto big = group_closure(type, p, 2 * g, cap);
    auto par = parabolic_closure(type, p, 2 * g, cap);
    const ClosureData& G = big.data();
    if (par.data().step != G.step) throw ValidationError("parabolic subgroup does not contain the scalars of the group");
    auto labels = right_coset_labels(big, par);
    DoubleCosetReport rep;
    rep.cosets = labels.first.size();

    std::vector<CMat> delta;
    std::vector<Sparsity> delta_sparse;
    const Operator id = Operator::identity(p, g, conductor_for(p));
    for (const auto& gen : clifford_weil_generators(type, p, g)) {
        for (const Operator& d : {delta_embed(gen, id), delta_embed(id, gen)}) {
            auto [cm, j] = G.canon(to_compact(G.arith, d));
            (void)j;
            delta_sparse.push_back(sparsity(G.arith, cm));
            delta.push_back(std::move(cm));
        }
    }

    std::vector<int> owner(rep.cosets, -1);
    rep.disjoint = true;
    for (unsigned r = 0; r <= g; ++r) {
        Operator tau = tau_operator(type, p, g, r);
        bool inside = big.contains(tau);
        rep.tau_in_group.push_back(inside);
        if (!inside) {
            rep.cell_sizes.push_back(0);
            continue;
        }
        auto [tc, j] = G.canon(to_compact(G.arith, tau));
        (void)j;
        std::size_t start = *G.find(tc);
        std::vector<int> seen(rep.cosets, 0);
        std::vector<int> queue{labels.label[start]};
        seen[queue[0]] = 1;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            std::size_t cls = labels.first[queue[q]];
            Sparsity xs = sparsity(G.arith, G.classes[cls]);
            for (std::size_t s = 0; s < delta.size(); ++s) {
                auto [prod, jj] = G.canon(multiply(G.arith, G.classes[cls], xs, delta[s], delta_sparse[s]));
                (void)jj;
                auto hit = G.find(prod);
                if (!hit) throw ValidationError("delta image is not in the genus-2g group");
                int lab = labels.label[*hit];
                if (!seen[lab]) {
                    seen[lab] = 1;
                    queue.push_back(lab);
                }
            }
        }
        rep.cell_sizes.push_back(queue.size());
        for (int lab : queue) {
            if (owner[lab] >= 0) rep.disjoint = false;
            owner[lab] = static_cast<int>(r);
        }
    }
    rep.covers = std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; });
    return rep;
}

}  // namespace cweg
