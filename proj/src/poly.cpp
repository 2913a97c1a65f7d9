#include "cweg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "cweg/errors.hpp"

namespace cweg {

namespace {

const BigInt& small_factorial(unsigned n) {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(257);
        t[0] = 1;
        for (unsigned i = 1; i < t.size(); ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n >= table.size()) throw std::out_of_range("factorial table exhausted");
    return table[n];
}

using Acc = std::unordered_map<Exps, CycNum, ExpsHash>;
using Linear = std::vector<std::pair<unsigned, CycNum>>;

Acc times_linear(const Acc& cur, const Linear& form) {
    Acc out;
    out.reserve(cur.size() * form.size());
    for (const auto& [m, c] : cur)
        for (const auto& [w, a] : form) {
            Exps e = m;
            ++e[w];
            auto [it, fresh] = out.try_emplace(std::move(e), c * a);
            if (!fresh) it->second += c * a;
        }
    return out;
}

class Substituter {
public:
    Substituter(const std::vector<std::pair<Exps, CycNum>>& items, std::vector<Linear> forms, unsigned nvars)
        : items_(items), forms_(std::move(forms)), nvars_(nvars) {}

    Acc result;

    // Terms [lo,hi) share their first v exponents; `partial` is the image of that prefix.
    void run(unsigned v, std::size_t lo, std::size_t hi, const Acc& partial) {
        if (v == nvars_) {
            for (std::size_t i = lo; i < hi; ++i) {
                const CycNum& c = items_[i].second;
                for (const auto& [m, a] : partial) {
                    auto [it, fresh] = result.try_emplace(m, c * a);
                    if (!fresh) it->second += c * a;
                }
            }
            return;
        }
        Acc cur = partial;
        unsigned e = 0;
        std::size_t i = lo;
        while (i < hi) {
            unsigned target = items_[i].first[v];
            std::size_t j = i;
            while (j < hi && items_[j].first[v] == target) ++j;
            for (; e < target; ++e) cur = times_linear(cur, forms_[v]);
            run(v + 1, i, j, cur);
            i = j;
        }
    }

private:
    const std::vector<std::pair<Exps, CycNum>>& items_;
    std::vector<Linear> forms_;
    unsigned nvars_;
};

}  // namespace

BigInt factorial_weight(const Exps& e) {
    BigInt r = 1;
    for (auto x : e)
        if (x > 1) r *= small_factorial(x);
    return r;
}

Poly::Poly(unsigned p, unsigned g, unsigned degree, unsigned conductor)
    : p_(p), g_(g), deg_(degree), n_(conductor), nvars_(ipow_u(p, g)) {
    // touch the context so the conductor is validated up front
    (void)cyclotomic_context(conductor);
}

Poly Poly::power_sum(unsigned p, unsigned g, unsigned degree, unsigned conductor) {
    Poly out(p, g, degree, conductor);
    for (unsigned v = 0; v < out.nvars_; ++v) {
        Exps e(out.nvars_, 0);
        e[v] = static_cast<std::uint16_t>(degree);
        out.add_term(e, CycNum(conductor, Rat(1)));
    }
    return out;
}

Poly Poly::monomial(unsigned p, unsigned g, const Exps& e, const CycNum& c) {
    unsigned deg = 0;
    for (auto x : e) deg += x;
    Poly out(p, g, deg, c.conductor());
    out.add_term(e, c);
    return out;
}

void Poly::check_compatible(const Poly& o, const char* what) const {
    if (o.p_ != p_ || o.g_ != g_ || o.deg_ != deg_ || o.n_ != n_)
        throw ShapeMismatch(std::string(what) + ": polynomials of different shape");
}

void Poly::add_term(const Exps& e, const CycNum& c) {
    if (e.size() != nvars_) throw ShapeMismatch("exponent vector has wrong length");
    if (c.conductor() != n_) throw ShapeMismatch("coefficient conductor mismatch");
    unsigned d = 0;
    for (auto x : e) d += x;
    if (d != deg_) throw ShapeMismatch("term of degree " + std::to_string(d) + " in a degree " + std::to_string(deg_) + " polynomial");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycNum Poly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycNum(n_) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o, "addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o, "subtraction");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const CycNum& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.p_ != b.p_ || a.g_ != b.g_ || a.n_ != b.n_) throw ShapeMismatch("product of polynomials in different rings");
    Acc acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + eb[i]);
            auto [it, fresh] = acc.try_emplace(std::move(e), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    Poly out(a.p_, a.g_, a.deg_ + b.deg_, a.n_);
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.terms_.emplace(e, std::move(c));
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    return a.p_ == b.p_ && a.g_ == b.g_ && a.deg_ == b.deg_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

CycNum Poly::coefficient_sum() const {
    CycNum s(n_);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string Poly::var_name(unsigned index) const {
    std::string s = "x";
    if (g_ == 0) return s;
    for (unsigned d : decode_vec(index, p_, g_)) s += static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
    return s;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent of x_0 first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coef;
        bool neg = false;
        if (c.is_rational()) {
            Rat r = c.rational_value();
            neg = r.sign() < 0;
            Rat mag = r.abs();
            if (!mag.is_one()) coef = mag.str() + "*";
        } else {
            coef = "(" + c.str() + ")*";
        }
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string mono;
        for (unsigned v = 0; v < nvars_; ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(v);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            os << (coef.empty() ? "1" : coef.substr(0, coef.size() - 1));
        } else {
            os << coef << mono;
        }
        first = false;
    }
    return os.str();
}

std::string Poly::serialize() const {
    std::ostringstream os;
    os << "poly p=" << p_ << " g=" << g_ << " N=" << deg_ << " conductor=" << n_ << " terms=" << terms_.size() << "\n";
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << " " << c.basis_str() << "\n";
    }
    return os.str();
}

Poly Poly::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty polynomial text");
    ++lineno;
    unsigned p = 0, g = 0, deg = 0, n = 0;
    std::size_t count = 0;
    if (std::sscanf(line.c_str(), "poly p=%u g=%u N=%u conductor=%u terms=%zu", &p, &g, &deg, &n, &count) != 5)
        throw ParseError(lineno, "bad polynomial header");
    Poly out(p, g, deg, n);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) throw ParseError(lineno, "expected exponents and coefficients");
        Exps e;
        std::istringstream es(line.substr(0, sp));
        std::string tok;
        while (std::getline(es, tok, ',')) e.push_back(static_cast<std::uint16_t>(std::stoul(tok)));
        try {
            out.add_term(e, CycNum::parse_basis(n, line.substr(sp + 1)));
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
    }
    if (out.size() != count) throw ParseError(lineno, "term count does not match header");
    return out;
}

CycNum inner_product(const Poly& a, const Poly& b) {
    a.check_compatible(b, "inner product");
    CycNum s(a.conductor());
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& large = a.size() <= b.size() ? b : a;
    for (const auto& [e, c] : small.terms()) {
        auto it = large.terms().find(e);
        if (it == large.terms().end()) continue;
        const CycNum& ca = &small == &a ? c : it->second;
        const CycNum& cb = &small == &a ? it->second : c;
        s += (ca * cb.conj()) * Rat(factorial_weight(e));
    }
    return s;
}

Poly apply_operator(const Poly& a, const Operator& m) {
    if (m.dim() != a.nvars() || m.conductor() != a.conductor() || m.p() != a.p())
        throw ShapeMismatch("operator does not act on this polynomial ring");
    unsigned nv = a.nvars();
    Poly out(a.p(), a.genus(), a.degree(), a.conductor());
    if (m.is_monomial()) {
        std::vector<unsigned> target(nv);
        std::vector<CycNum> scale(nv);
        for (unsigned v = 0; v < nv; ++v)
            for (unsigned w = 0; w < nv; ++w)
                if (!m.at(v, w).is_zero()) {
                    target[v] = w;
                    scale[v] = m.at(v, w);
                }
        for (const auto& [e, c] : a.terms()) {
            Exps f(nv, 0);
            CycNum k = c;
            for (unsigned v = 0; v < nv; ++v) {
                if (!e[v]) continue;
                f[target[v]] = e[v];
                if (!scale[v].is_one())
                    for (unsigned t = 0; t < e[v]; ++t) k *= scale[v];
            }
            out.add_term(f, k);
        }
        return out;
    }
    std::vector<Linear> forms(nv);
    for (unsigned v = 0; v < nv; ++v)
        for (unsigned w = 0; w < nv; ++w)
            if (!m.at(v, w).is_zero()) forms[v].emplace_back(w, m.at(v, w));
    std::vector<std::pair<Exps, CycNum>> items(a.terms().begin(), a.terms().end());
    Substituter sub(items, std::move(forms), nv);
    Acc start;
    start.emplace(Exps(nv, 0), CycNum(a.conductor(), Rat(1)));
    sub.run(0, 0, items.size(), start);
    for (const auto& [e, c] : sub.result)
        if (!c.is_zero()) out.add_term(e, c);
    return out;
}

Poly conj_poly(const Poly& a) {
    Poly out(a.p(), a.genus(), a.degree(), a.conductor());
    for (const auto& [e, c] : a.terms()) out.add_term(e, c.conj());
    return out;
}

std::map<std::vector<unsigned>, CycNum> tuple_profile(const Poly& a) {
    std::map<std::vector<unsigned>, std::vector<const CycNum*>> groups;
    for (const auto& [e, c] : a.terms()) {
        std::vector<unsigned> key;
        for (auto x : e)
            if (x) key.push_back(x);
        std::sort(key.rbegin(), key.rend());
        groups[key].push_back(&c);
    }
    std::map<std::vector<unsigned>, CycNum> out;
    for (const auto& [key, cs] : groups) {
        for (const CycNum* c : cs)
            if (!(*c == *cs.front()))
                throw ValidationError("coefficients differ on the orbit " + tuple_key_str(key));
        // number of distinct arrangements of the multiset (with zeros) over nvars slots
        std::map<unsigned, unsigned> mult;
        for (unsigned x : key) ++mult[x];
        mult[0] = a.nvars() - static_cast<unsigned>(key.size());
        BigInt orbit = small_factorial(a.nvars());
        for (auto& [v, k] : mult) orbit /= small_factorial(k);
        if (BigInt(static_cast<unsigned long>(cs.size())) != orbit)
            throw ValidationError("orbit " + tuple_key_str(key) + " is only partly present");
        out.emplace(key, *cs.front());
    }
    return out;
}

std::string tuple_key_str(const std::vector<unsigned>& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
}

std::string profile_str(const std::map<std::vector<unsigned>, CycNum>& prof) {
    std::ostringstream os;
    // descending key order matches the usual table layout
    for (auto it = prof.rbegin(); it != prof.rend(); ++it) os << tuple_key_str(it->first) << ": " << it->second.str() << "\n";
    return os.str();
}

}  // namespace cweg
