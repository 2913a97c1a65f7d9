#include "cweg/doubling.hpp"

#include <sstream>

#include "cweg/clifford_weil.hpp"
#include "cweg/errors.hpp"
#include "cweg/weight_enumerator.hpp"

namespace cweg {

BipartitePoly::BipartitePoly(unsigned p, unsigned g, unsigned x_degree, unsigned y_degree, unsigned conductor)
    : p_(p), g_(g), dx_(x_degree), dy_(y_degree), n_(conductor) {}

BipartitePoly BipartitePoly::product(const Poly& a, const Poly& b) {
    a.check_compatible(Poly(b.p(), b.genus(), a.degree(), b.conductor()), "bipartite product");
    BipartitePoly out(a.p(), a.genus(), a.degree(), b.degree(), a.conductor());
    for (const auto& [ex, cx] : a.terms()) {
        Poly y = b;
        y *= cx;
        out.terms_.emplace(ex, std::move(y));
    }
    return out;
}

std::size_t BipartitePoly::size() const {
    std::size_t s = 0;
    for (const auto& [ex, y] : terms_) s += y.size();
    return s;
}

void BipartitePoly::add_term(const Exps& ex, const Exps& ey, const CycNum& c) {
    auto it = terms_.find(ex);
    if (it == terms_.end()) it = terms_.emplace(ex, Poly(p_, g_, dy_, n_)).first;
    it->second.add_term(ey, c);
    if (it->second.is_zero()) terms_.erase(it);
}

bool operator==(const BipartitePoly& a, const BipartitePoly& b) {
    return a.p_ == b.p_ && a.g_ == b.g_ && a.dx_ == b.dx_ && a.dy_ == b.dy_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

BipartitePoly dmap(const Poly& a) {
    if (a.genus() % 2 != 0) throw ShapeMismatch("the doubling map needs an even genus");
    const unsigned g = a.genus() / 2;
    const unsigned dim = ipow_u(a.p(), g);
    BipartitePoly out(a.p(), g, a.degree(), a.degree(), a.conductor());
    for (const auto& [e, c] : a.terms()) {
        Exps ex(dim, 0), ey(dim, 0);
        for (unsigned v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            ex[v / dim] += e[v];
            ey[v % dim] += e[v];
        }
        out.add_term(ex, ey, c);
    }
    return out;
}

Poly pair_y(const BipartitePoly& a, const Poly& f) {
    if (f.p() != a.p() || f.genus() != a.genus() || f.conductor() != a.conductor())
        throw ShapeMismatch("pairing needs f in the y variables of the same genus and field");
    unsigned dx = 0;
    if (!a.terms().empty()) {
        for (auto x : a.terms().begin()->first) dx += x;
        if (a.terms().begin()->second.degree() != f.degree()) throw ShapeMismatch("degree of f differs from the y-degree");
    }
    Poly out(a.p(), a.genus(), dx, a.conductor());
    for (const auto& [ex, y] : a.terms()) {
        CycNum c = inner_product(y, f);
        if (!c.is_zero()) out.add_term(ex, c);
    }
    return out;
}

Rat siegel_weil_norm(CodeType type, unsigned p, unsigned n, unsigned h) {
    check_type_field(type, p);
    if (type == CodeType::TypeQ) throw ValidationError("no Siegel-Weil normalization is provided for type Q");
    if (n % 2) throw ShapeMismatch("length must be even");
    const BigInt q(p);
    const BigInt qh = ipow(q, h);
    BigInt den = 1;
    unsigned lo = type == CodeType::TypeI2 ? 1 : 0;
    unsigned hi = n / 2 - 1;  // exclusive for 2II/Q1, inclusive for 2I
    if (type == CodeType::TypeI2) ++hi;
    for (unsigned i = lo; i < hi; ++i) den *= qh + ipow(q, i);
    return Rat(BigInt(1), den);
}

ClassEnumerators class_enumerators(CodeType type, unsigned n, unsigned g, const CodeDatabase& db) {
    ClassEnumerators out;
    out.classes = db.complete_classes(type, n);
    for (const auto* r : out.classes) out.cwes.push_back(cwe(r->code, g));
    return out;
}

Poly eisenstein_sw(CodeType type, unsigned n, unsigned g, const CodeDatabase& db) {
    auto ce = class_enumerators(type, n, g, db);
    if (ce.classes.empty()) throw ValidationError("no classes");
    const unsigned p = ce.classes.front()->p;
    Poly out(p, g, n, conductor_for(p));
    const Rat nf(factorial(n));
    for (std::size_t i = 0; i < ce.classes.size(); ++i) out += ce.cwes[i] * (nf / Rat(*ce.classes[i]->aut));
    out *= siegel_weil_norm(type, p, n, g);
    return out;
}

Poly doubling_pairing_sw(CodeType type, unsigned n, unsigned g, const ClassEnumerators& ce, const Poly& f) {
    if (ce.classes.empty()) throw ValidationError("no classes");
    const unsigned p = ce.classes.front()->p;
    if (f.genus() != g || f.degree() != n || f.p() != p) throw ShapeMismatch("form does not match (N, g, field)");
    Poly out(p, g, n, conductor_for(p));
    for (std::size_t i = 0; i < ce.classes.size(); ++i) {
        CycNum c = inner_product(ce.cwes[i], f) * (Rat(1) / Rat(*ce.classes[i]->aut));
        if (!c.is_zero()) out += ce.cwes[i] * c;
    }
    out *= Rat(factorial(n)) * siegel_weil_norm(type, p, n, 2 * g);
    return out;
}

Poly doubling_pairing_sw(CodeType type, unsigned n, unsigned g, const CodeDatabase& db, const Poly& f) {
    return doubling_pairing_sw(type, n, g, class_enumerators(type, n, g, db), f);
}

namespace {

Rat big(const BigInt& b) { return Rat(b); }

Rat qpow(unsigned p, long long e) {
    BigInt b = ipow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rat(BigInt(1), b) : Rat(b);
}

BigInt orthogonal_plus_order(unsigned g) {
    if (g == 0) return 1;
    BigInt o = ipow(BigInt(2), g * g - g + 1) * (ipow(BigInt(2), g) - 1);
    for (unsigned i = 1; i < g; ++i) o *= ipow(BigInt(4), i) - 1;
    return o;
}

BigInt symplectic_order(unsigned p, unsigned g) {
    BigInt o = ipow(BigInt(p), g * g);
    for (unsigned i = 1; i <= g; ++i) o *= ipow(BigInt(p), 2 * i) - 1;
    return o;
}

}  // namespace

Rat const_c(CodeType type, unsigned p, unsigned n, unsigned g) {
    check_type_field(type, p);
    if (type == CodeType::TypeI2) throw ValidationError("type 2I has no proven constant; use const_conj");
    const long long gg = g, nn = n;
    long long e = gg * gg - nn * gg / 2;
    if (type != CodeType::TypeQ) e += 2 * gg;
    if ((nn * gg) % 2) throw ShapeMismatch("N*g must be even");
    Rat out = qpow(p, e);
    for (unsigned i = 1; i <= g; ++i) out *= big(ipow(BigInt(p), i) - 1) / big(ipow(BigInt(p), g + i) + 1);
    return out;
}

Rat const_c_from_orders(CodeType type, unsigned p, unsigned n, unsigned g) {
    if (type == CodeType::TypeI2) throw ValidationError("orthogonal type; use const_conj_from_orders");
    const BigInt k1 = predicted_group(type, p, g).kernel;
    const BigInt k2 = predicted_group(type, p, 2 * g).kernel;
    const BigInt u1 = k1 * k1 * symplectic_order(p, g);
    const BigInt u2 = k2 * k2 * symplectic_order(p, 2 * g);
    BigInt siegel = ipow(BigInt(p), 4 * g * g);
    for (unsigned i = 1; i <= 2 * g; ++i) siegel *= ipow(BigInt(p), i) - 1;
    const BigInt par = k2 * siegel;
    return qpow(p, -static_cast<long long>(n) * g / 2) * big(k1 * k1 * u1 * par) / big(u2);
}

Rat const_conj(unsigned n, unsigned g) {
    const long long gg = g, nn = n;
    Rat out = Rat(factorial(n)) * qpow(2, 2 * gg - nn * gg / 2) * qpow(2, gg * gg - gg) * big(ipow(BigInt(2), g) - 1);
    for (unsigned i = g; i < 2 * g; ++i) out /= big(ipow(BigInt(2), i) + 1);
    return out;
}

Rat const_conj_from_orders(unsigned n, unsigned g) {
    BigInt par = ipow(BigInt(2), 2 * g * (2 * g - 1));
    for (unsigned i = 1; i <= 2 * g; ++i) par *= ipow(BigInt(2), i) - 1;
    const long long gg = g, nn = n;
    return Rat(factorial(n)) * qpow(2, 2 * gg - nn * gg / 2) * big(orthogonal_plus_order(g) * par) / big(orthogonal_plus_order(2 * g));
}

Rat const_b(CodeType type, unsigned p, unsigned n, unsigned g) { return siegel_weil_norm(type, p, n, 2 * g); }

Rat expected_scalar(CodeType type, unsigned p, unsigned n, unsigned g) {
    if (type == CodeType::TypeI2) return const_conj(n, g);
    return const_c(type, p, n, g) * Rat(factorial(n));
}

namespace {

std::string prime_powers(BigInt x) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const BigInt& prime, unsigned e) {
        os << (first ? "" : "*") << to_string(prime);
        if (e > 1) os << "^" << e;
        first = false;
    };
    for (unsigned long q = 2; q < 100000 && x > 1; ++q) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(x.get_mpz_t(), q)) {
            x /= q;
            ++e;
        }
        if (e) emit(BigInt(q), e);
    }
    if (x > 1) emit(x, 1);
    return os.str();
}

}  // namespace

std::string factorial_str(const Rat& x, unsigned n) {
    if (x.is_zero()) return "0";
    Rat r = x / Rat(factorial(n));
    std::string out = (r.sign() < 0 ? "-" : "") + std::to_string(n) + "!";
    BigInt num = r.abs().numerator(), den = r.denominator();
    if (num != 1) out += "*" + (prime_powers(num).find('*') != std::string::npos ? "(" + prime_powers(num) + ")" : prime_powers(num));
    if (den != 1) {
        std::string d = prime_powers(den);
        out += "/" + (d.find('*') != std::string::npos || d.find('^') != std::string::npos ? "(" + d + ")" : d);
    }
    return out;
}

FormCheck fit_scalar(const Poly& f, const Poly& pairing) {
    FormCheck out;
    out.form = f;
    out.pairing = pairing;
    Poly target = conj_poly(f);
    out.residual = pairing;
    if (target.is_zero()) {
        out.proportional = pairing.is_zero();
        if (out.proportional) out.scalar = CycNum(f.conductor());
        return out;
    }
    const auto& [e0, c0] = *target.terms().begin();
    CycNum mu = pairing.coeff(e0) / c0;
    Poly scaled = target;
    scaled *= mu;
    out.residual = pairing - scaled;
    out.proportional = out.residual.is_zero();
    if (out.proportional) out.scalar = mu;
    return out;
}

VerificationReport verify_doubling(CodeType type, unsigned n, unsigned g, const CodeDatabase& db) {
    auto ce = class_enumerators(type, n, g, db);
    if (ce.classes.empty()) throw ValidationError("no classes");
    VerificationReport rep;
    rep.type = type;
    rep.p = ce.classes.front()->p;
    rep.length = n;
    rep.genus = g;
    for (const auto* r : ce.classes) rep.names.push_back(r->name);
    rep.expected = expected_scalar(type, rep.p, n, g);
    rep.expected_source = type == CodeType::TypeI2 ? "conjecture" : "theorem";
    CuspBasis basis = cusp_basis_from(type, rep.names, ce.cwes);
    for (std::size_t i = 0; i < basis.polys.size(); ++i) {
        FormCheck fc = fit_scalar(basis.polys[i], doubling_pairing_sw(type, n, g, ce, basis.polys[i]));
        fc.combo = basis.display_combo(i);
        rep.forms.push_back(std::move(fc));
    }
    rep.consistent = !rep.forms.empty();
    for (const auto& f : rep.forms)
        if (!f.scalar || !(*f.scalar == *rep.forms.front().scalar)) rep.consistent = false;
    rep.match = rep.consistent && rep.forms.front().scalar->is_rational() && rep.forms.front().scalar->rational_value() == rep.expected;
    return rep;
}

std::string VerificationReport::text(bool factorial) const {
    auto show = [&](const Rat& x) { return factorial ? factorial_str(x, length) : x.str(); };
    std::ostringstream os;
    os << "doubling identity: type " << type_name(type) << ", N = " << length << ", g = " << genus << "\n";
    os << "classes: " << names.size() << ", cusp dimension: " << dimension() << "\n";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto& f = forms[i];
        os << "form " << i + 1 << ":";
        for (std::size_t k = 0; k < names.size() && k < f.combo.size(); ++k)
            if (!f.combo[k].is_zero()) os << " " << f.combo[k].str() << "*" << names[k];
        os << "\n";
        if (f.scalar) {
            os << "  scalar: " << (f.scalar->is_rational() ? show(f.scalar->rational_value()) : f.scalar->str()) << "\n";
            os << "  residual: 0\n";
        } else {
            os << "  not proportional; residual has " << f.residual.size() << " terms:\n  " << f.residual.str() << "\n";
        }
    }
    os << "expected (" << expected_source << "): " << show(expected) << "\n";
    os << "match: " << (match ? "yes" : "no") << "\n";
    return os.str();
}

std::string VerificationReport::key_values() const {
    std::ostringstream os;
    os << "type=" << type_name(type) << "\n";
    os << "N=" << length << "\n";
    os << "g=" << genus << "\n";
    os << "dim=" << dimension() << "\n";
    if (consistent && forms.front().scalar->is_rational()) {
        const Rat mu = forms.front().scalar->rational_value();
        os << "scalar=" << mu.str() << "\n";
        os << "scalar_over_factorial=" << (mu / Rat(factorial(length))).str() << "\n";
    } else {
        os << "scalar=none\n";
    }
    os << "expected=" << expected.str() << "\n";
    os << "match=" << (match ? "yes" : "no") << "\n";
    return os.str();
}

BasisExpansion basis_expansion(const Poly& f, CodeType type, unsigned n, unsigned g, const ClassEnumerators& ce) {
    if (ce.classes.empty()) throw ValidationError("no classes");
    if (f.is_zero() || f.genus() != g || f.degree() != n) throw ValidationError("input is not a nonzero form of the given genus and length");
    if (!phi_op(f, 1).is_zero()) throw ValidationError("input is not annihilated by the Phi operator, so it is not a cusp form");
    const unsigned p = ce.classes.front()->p;
    const Rat scale = const_b(type, p, n, g) / expected_scalar(type, p, n, g) * Rat(factorial(n));
    BasisExpansion out{{}, Poly(p, g, n, conductor_for(p)), false};
    for (std::size_t i = 0; i < ce.classes.size(); ++i) {
        CycNum c = inner_product(f, ce.cwes[i]) * (scale / Rat(*ce.classes[i]->aut));
        out.coefficients.emplace_back(ce.classes[i]->name, c);
        if (!c.is_zero()) out.reconstruction += ce.cwes[i] * c;
    }
    out.exact = out.reconstruction == f;
    return out;
}

BasisExpansion basis_expansion(const Poly& f, CodeType type, unsigned n, unsigned g, const CodeDatabase& db) {
    return basis_expansion(f, type, n, g, class_enumerators(type, n, g, db));
}

}  // namespace cweg
