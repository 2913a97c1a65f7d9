#pragma once

#include <string>
#include <vector>

#include "cweg/cyclotomic.hpp"

namespace cweg {

/// Variable index of v in F_p^g: sum v_i p^(g-i), first coordinate most significant.
unsigned encode_vec(const std::vector<unsigned>& v, unsigned p);
std::vector<unsigned> decode_vec(unsigned index, unsigned p, unsigned g);
unsigned ipow_u(unsigned base, unsigned exp);

/// A p^g x p^g matrix over Q(zeta_n), acting on polynomials by
/// x_v -> sum_w M[v][w] x_w. Acting by A and then by B equals acting by A*B.
class Operator {
public:
    Operator(unsigned p, unsigned g, unsigned conductor);
    static Operator identity(unsigned p, unsigned g, unsigned conductor);

    unsigned p() const noexcept { return p_; }
    unsigned genus() const noexcept { return g_; }
    unsigned conductor() const noexcept { return n_; }
    unsigned dim() const noexcept { return dim_; }

    CycNum& at(unsigned r, unsigned c) { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
    const CycNum& at(unsigned r, unsigned c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }

    Operator operator*(const Operator& o) const;
    Operator scaled(const CycNum& s) const;
    friend bool operator==(const Operator& a, const Operator& b);

    Operator conj_transpose() const;
    bool is_identity() const;
    bool is_unitary() const;
    /// Exactly one nonzero entry per row and per column.
    bool is_monomial() const;

    std::string label;

    /// Row-major entry list, one row per line.
    std::string str() const;
    std::size_t hash() const noexcept;

private:
    unsigned p_, g_, n_, dim_;
    std::vector<CycNum> m_;
};

}  // namespace cweg
