#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cweg/code.hpp"
#include "cweg/poly.hpp"

namespace cweg {

/// Keeps variables x_(v_1..v_g) with (v_{g-j+1}..v_g) = w and drops the last j
/// coordinates; every other variable goes to 0. Result has genus g - j.
Poly phi_op_w(const Poly& a, unsigned j, const std::vector<unsigned>& w);
/// The w = 0 case.
Poly phi_op(const Poly& a, unsigned j);

/// x_(v_1..v_{g-j}) -> x_(v_1..v_{g-j}, w); left inverse of phi_op_w.
Poly lift_op_w(const Poly& a, unsigned j, const std::vector<unsigned>& w);
Poly lift_op(const Poly& a, unsigned j);

/// Basis of the cusp forms inside the span of the given enumerators.
struct CuspBasis {
    CodeType type = CodeType::TypeI2;
    unsigned length = 0;
    unsigned genus = 0;
    std::vector<std::string> names;
    std::vector<std::vector<Rat>> combos;  // one row per form, over `names`
    std::vector<Poly> polys;

    unsigned dimension() const { return static_cast<unsigned>(combos.size()); }
    /// Row scaled to coprime integers with a positive first entry.
    std::vector<Rat> display_combo(std::size_t i) const;
    /// Header, then one line per form; optional polynomial dumps.
    std::string serialize(bool with_polys = false) const;
};

struct NamedCode {
    std::string name;
    LinearCode code;
};

/// Cusp space of span{cwe_g(C_i)} by exact elimination. Rows are normalized so the
/// first nonzero coefficient is 1.
CuspBasis cusp_basis(const std::vector<NamedCode>& codes, unsigned g);
/// Same, from enumerators already computed (one per name).
CuspBasis cusp_basis_from(CodeType type, const std::vector<std::string>& names, const std::vector<Poly>& cwes);

/// True if the row spaces of the two bases' polynomials coincide.
bool same_cusp_space(const CuspBasis& a, const CuspBasis& b);
/// True if f lies in the span of the basis polynomials.
bool in_span(const std::vector<Poly>& basis, const Poly& f);

struct CuspCheck {
    bool nonzero = false;
    bool phi_vanishes = false;
    std::optional<bool> invariant;  // empty when the generator check was skipped
    bool ok() const { return nonzero && phi_vanishes && invariant.value_or(true); }
};

/// Phi-vanishing for arbitrary input, plus invariance under every Clifford-Weil
/// generator of the type when check_invariance is set.
CuspCheck is_cusp(const Poly& f, CodeType type, bool check_invariance);

}  // namespace cweg
