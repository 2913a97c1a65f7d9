#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cweg/database.hpp"
#include "cweg/poly.hpp"
#include "cweg/siegel_phi.hpp"

namespace cweg {

/// Polynomial in x_v, y_w (v, w in F_p^g), grouped by the x-exponent; each
/// x-monomial carries its y-polynomial.
class BipartitePoly {
public:
    BipartitePoly(unsigned p, unsigned g, unsigned x_degree, unsigned y_degree, unsigned conductor);
    /// a(x) * b(y)
    static BipartitePoly product(const Poly& a, const Poly& b);

    unsigned p() const noexcept { return p_; }
    unsigned genus() const noexcept { return g_; }
    unsigned conductor() const noexcept { return n_; }
    const std::map<Exps, Poly>& terms() const noexcept { return terms_; }
    std::size_t size() const;

    void add_term(const Exps& ex, const Exps& ey, const CycNum& c);
    friend bool operator==(const BipartitePoly&, const BipartitePoly&);

private:
    unsigned p_, g_, dx_, dy_, n_;
    std::map<Exps, Poly> terms_;
};

/// X_(v1,v2) -> x_v1 y_v2, for a polynomial of genus 2g.
BipartitePoly dmap(const Poly& a);

/// Inner product in the y variables against f: sum over x-monomials of
/// (y-part, f)_g times the x-monomial.
Poly pair_y(const BipartitePoly& a, const Poly& f);

/// prod (p^h + p^i)^(-1): over 1 <= i <= N/2-1 for 2I, 0 <= i < N/2-1 for 2II and Q1.
Rat siegel_weil_norm(CodeType type, unsigned p, unsigned n, unsigned h);

/// b_g * sum over classes of (N!/|Aut C|) cwe_g(C).
Poly eisenstein_sw(CodeType type, unsigned n, unsigned g, const CodeDatabase& db);

struct ClassEnumerators {
    std::vector<const CodeRecord*> classes;
    std::vector<Poly> cwes;
};
ClassEnumerators class_enumerators(CodeType type, unsigned n, unsigned g, const CodeDatabase& db);

/// N! * b_2g * sum over classes of (1/|Aut C|) (cwe_g(C), f)_g cwe_g(C).
Poly doubling_pairing_sw(CodeType type, unsigned n, unsigned g, const CodeDatabase& db, const Poly& f);
Poly doubling_pairing_sw(CodeType type, unsigned n, unsigned g, const ClassEnumerators& ce, const Poly& f);

/// Closed-form constant c of the doubling identity (2II, Q, Q1).
Rat const_c(CodeType type, unsigned p, unsigned n, unsigned g);
/// Conjectured scalar for type 2I, including the factor N!.
Rat const_conj(unsigned n, unsigned g);
/// The same scalar from the orthogonal group orders.
Rat const_conj_from_orders(unsigned n, unsigned g);
/// c from |U_g|, |P_2g|, |U_2g| and |ker lambda|, for the symplectic types.
Rat const_c_from_orders(CodeType type, unsigned p, unsigned n, unsigned g);
/// Normalization b of the basis expansion: the Siegel-Weil product at genus 2g.
Rat const_b(CodeType type, unsigned p, unsigned n, unsigned g);
/// c*N! for 2II/Q/Q1, the conjectured value for 2I.
Rat expected_scalar(CodeType type, unsigned p, unsigned n, unsigned g);

/// x / N! written with prime powers, e.g. "16!/(2^6*3)".
std::string factorial_str(const Rat& x, unsigned n);

struct FormCheck {
    std::vector<Rat> combo;
    Poly form = Poly(2, 0, 0, 8);
    Poly pairing = Poly(2, 0, 0, 8);
    std::optional<CycNum> scalar;  // empty when not proportional
    Poly residual = Poly(2, 0, 0, 8);
    bool proportional = false;
};

struct VerificationReport {
    CodeType type = CodeType::TypeI2;
    unsigned p = 2, length = 0, genus = 0;
    std::vector<std::string> names;
    std::vector<FormCheck> forms;
    Rat expected;
    std::string expected_source;
    bool consistent = false;  // one scalar for every form
    bool match = false;

    unsigned dimension() const { return static_cast<unsigned>(forms.size()); }
    std::string text(bool factorial = false) const;
    std::string key_values() const;
};

/// Fits pairing = mu * conj(f); the residual must vanish identically.
FormCheck fit_scalar(const Poly& f, const Poly& pairing);

VerificationReport verify_doubling(CodeType type, unsigned n, unsigned g, const CodeDatabase& db);

struct BasisExpansion {
    std::vector<std::pair<std::string, CycNum>> coefficients;
    Poly reconstruction;
    bool exact = false;
};

/// f = b/(cN!) * sum over codes of (f, cwe_g(C)) cwe_g(C). Throws ValidationError
/// if f is not annihilated by Phi.
BasisExpansion basis_expansion(const Poly& f, CodeType type, unsigned n, unsigned g, const CodeDatabase& db);
BasisExpansion basis_expansion(const Poly& f, CodeType type, unsigned n, unsigned g, const ClassEnumerators& ce);

}  // namespace cweg
