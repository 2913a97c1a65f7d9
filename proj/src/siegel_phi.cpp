#include "cweg/siegel_phi.hpp"

#include <numeric>
#include <sstream>

#include "cweg/clifford_weil.hpp"
#include "cweg/errors.hpp"
#include "cweg/linalg.hpp"
#include "cweg/weight_enumerator.hpp"

namespace cweg {

namespace {

unsigned tail_index(const std::vector<unsigned>& w, unsigned p, unsigned j) {
    if (w.size() != j) throw ShapeMismatch("twist vector has length " + std::to_string(w.size()) + ", expected " + std::to_string(j));
    for (auto x : w)
        if (x >= p) throw ShapeMismatch("twist vector entry outside F_p");
    return encode_vec(w, p);
}

}  // namespace

Poly phi_op_w(const Poly& a, unsigned j, const std::vector<unsigned>& w) {
    if (j > a.genus()) throw std::out_of_range("phi operator needs j <= g");
    const unsigned p = a.p();
    const unsigned tail = tail_index(w, p, j);
    const unsigned block = ipow_u(p, j);
    Poly out(p, a.genus() - j, a.degree(), a.conductor());
    for (const auto& [e, c] : a.terms()) {
        bool keep = true;
        Exps f(out.nvars(), 0);
        for (unsigned v = 0; v < e.size() && keep; ++v) {
            if (!e[v]) continue;
            if (v % block != tail) keep = false;
            else f[v / block] = e[v];
        }
        if (keep) out.add_term(f, c);
    }
    return out;
}

Poly phi_op(const Poly& a, unsigned j) { return phi_op_w(a, j, std::vector<unsigned>(j, 0)); }

Poly lift_op_w(const Poly& a, unsigned j, const std::vector<unsigned>& w) {
    const unsigned p = a.p();
    const unsigned tail = tail_index(w, p, j);
    const unsigned block = ipow_u(p, j);
    Poly out(p, a.genus() + j, a.degree(), a.conductor());
    for (const auto& [e, c] : a.terms()) {
        Exps f(out.nvars(), 0);
        for (unsigned v = 0; v < e.size(); ++v) f[v * block + tail] = e[v];
        out.add_term(f, c);
    }
    return out;
}

Poly lift_op(const Poly& a, unsigned j) { return lift_op_w(a, j, std::vector<unsigned>(j, 0)); }

std::vector<Rat> CuspBasis::display_combo(std::size_t i) const {
    const auto& row = combos.at(i);
    BigInt den = 1, num = 0;
    for (const auto& r : row) {
        BigInt d = r.denominator();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& r : row) {
        BigInt n = (r * Rat(den)).numerator();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    if (num == 0) return row;
    Rat scale = Rat(den) / Rat(num);
    for (const auto& r : row)
        if (!r.is_zero()) {
            if (r.sign() < 0) scale = -scale;
            break;
        }
    std::vector<Rat> out;
    for (const auto& r : row) out.push_back(r * scale);
    return out;
}

std::string CuspBasis::serialize(bool with_polys) const {
    std::ostringstream os;
    os << "cusp type=" << type_name(type) << " N=" << length << " g=" << genus << " dim=" << dimension() << "\n";
    for (std::size_t i = 0; i < combos.size(); ++i) {
        os << "form " << i + 1 << ":";
        auto row = display_combo(i);
        for (std::size_t k = 0; k < names.size(); ++k)
            if (!row[k].is_zero()) os << " " << row[k].str() << "*" << names[k];
        os << "\n";
        if (with_polys) os << polys[i].serialize();
    }
    return os.str();
}

CuspBasis cusp_basis_from(CodeType type, const std::vector<std::string>& names, const std::vector<Poly>& cwes) {
    if (names.size() != cwes.size()) throw ShapeMismatch("one enumerator per code name is needed");
    CuspBasis out;
    out.type = type;
    out.names = names;
    if (cwes.empty()) return out;
    out.length = cwes.front().degree();
    out.genus = cwes.front().genus();
    if (out.genus == 0) return out;
    // restrict to an independent subset so kernel vectors give independent forms
    auto indep = independent_subset(cwes);
    std::vector<Poly> images;
    for (auto i : indep) images.push_back(phi_op(cwes[i], 1));
    const auto ker = kernel(coefficient_matrix(images), static_cast<unsigned>(indep.size()));
    // reduced echelon order of the kernel, first nonzero coefficient 1
    RatMatrix rows;
    for (const auto& k : ker) {
        std::vector<Rat> row(names.size());
        for (std::size_t t = 0; t < indep.size(); ++t) row[indep[t]] = k[t];
        rows.push_back(std::move(row));
    }
    Echelon e = rref(rows, static_cast<unsigned>(names.size()));
    for (auto& row : e.rows) {
        Poly f(cwes.front().p(), out.genus, out.length, cwes.front().conductor());
        for (std::size_t t = 0; t < names.size(); ++t)
            if (!row[t].is_zero()) f += cwes[t] * row[t];
        out.polys.push_back(std::move(f));
        out.combos.push_back(std::move(row));
    }
    return out;
}

CuspBasis cusp_basis(const std::vector<NamedCode>& codes, unsigned g) {
    std::vector<std::string> names;
    std::vector<Poly> cwes;
    for (const auto& c : codes) {
        if (!codes.empty() && (c.code.length() != codes.front().code.length() || c.code.type() != codes.front().code.type()))
            throw ShapeMismatch("cusp basis needs codes of one length and type");
        names.push_back(c.name);
        cwes.push_back(cwe(c.code, g));
    }
    CodeType type = codes.empty() ? CodeType::TypeI2 : codes.front().code.type();
    return cusp_basis_from(type, names, cwes);
}

bool in_span(const std::vector<Poly>& basis, const Poly& f) {
    std::vector<Poly> all = basis;
    all.push_back(f);
    return independent_subset(all).size() == independent_subset(basis).size();
}

bool same_cusp_space(const CuspBasis& a, const CuspBasis& b) {
    if (a.dimension() != b.dimension()) return false;
    for (const auto& f : b.polys)
        if (!in_span(a.polys, f)) return false;
    return true;
}

CuspCheck is_cusp(const Poly& f, CodeType type, bool check_invariance) {
    CuspCheck out;
    out.nonzero = !f.is_zero();
    out.phi_vanishes = f.genus() > 0 && phi_op(f, 1).is_zero();
    if (check_invariance) {
        bool inv = true;
        for (const auto& gamma : clifford_weil_generators(type, f.p(), f.genus()))
            if (!(apply_operator(f, gamma) == f)) {
                inv = false;
                break;
            }
        out.invariant = inv;
    }
    return out;
}

}  // namespace cweg
