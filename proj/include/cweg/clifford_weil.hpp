#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cweg/code.hpp"
#include "cweg/operator.hpp"
#include "cweg/poly.hpp"

namespace cweg {

using Matrix = std::vector<std::vector<unsigned>>;

/// Second-degree character on F_p^g: sum_i phi_i(v_i) + sum_{i<j} m_ij v_i v_j / p,
/// with phi_i(x) = a_i x^2/2 (2I), a_i x^2/4 (2II), a_i x^2/p (Q), (a_i x^2 + b_i x)/p (Q1).
struct QuadraticForm {
    CodeType type = CodeType::TypeI2;
    unsigned p = 2;
    unsigned g = 0;
    std::vector<unsigned> a;  // diagonal labels
    std::vector<unsigned> b;  // linear labels, Q1 only
    Matrix m;                 // g x g, only i < j used

    static QuadraticForm zero(CodeType type, unsigned p, unsigned g);
    std::string str() const;
};

/// Value of the form mod 1, in [0, 1).
Rat quadform_eval(const QuadraticForm& phi, const std::vector<unsigned>& v);

/// Every form of the type at genus g.
std::vector<QuadraticForm> all_quadratic_forms(CodeType type, unsigned p, unsigned g);

/// Checks the type / field pairing (binary types need p = 2, Q and Q1 an odd prime).
void check_type_field(CodeType type, unsigned p);

/// All invertible g x g matrices over F_p.
std::vector<Matrix> general_linear_group(unsigned p, unsigned g);

/// x_v -> x_{uv}. Throws ValidationError if u is singular.
Operator gen_m(const Matrix& u, unsigned p);
/// x_v -> exp(2 pi i phi(v)) x_v.
Operator gen_d(const QuadraticForm& phi);
/// Fourier transform on the first r coordinates, scaled by 1/sqrt(p^r).
Operator gen_h(unsigned p, unsigned r, unsigned g);

/// Full generator list: every m_u, every d_phi, and h_r for 1 <= r <= g.
std::vector<Operator> clifford_weil_generators(CodeType type, unsigned p, unsigned g);
std::vector<Operator> parabolic_generators(CodeType type, unsigned p, unsigned g);

/// Order data for the Clifford-Weil group: |Z| * |ker lambda|^2 * |G_g|.
struct GroupPrediction {
    unsigned centre = 1;
    BigInt kernel;     // |ker lambda^(g)|
    BigInt classical;  // |O+_2g(F_2)| or |Sp_2g(F_p)|
    std::string classical_name;
    BigInt order() const { return BigInt(centre) * kernel * kernel * classical; }
};
GroupPrediction predicted_group(CodeType type, unsigned p, unsigned g);

/// |ker lambda^(g)| * prod_{i=1..g} (p^i + 1).
BigInt predicted_coset_index(CodeType type, unsigned p, unsigned g);

inline constexpr std::uint64_t kDefaultGroupCap = 200000;

class ClosureData;

/// A finite matrix group. Stored as classes modulo scalar roots of unity, with
/// the group's scalar subgroup recorded separately, so order() counts honest
/// matrices: classes * scalars.
class GroupClosure {
public:
    GroupClosure();
    ~GroupClosure();
    GroupClosure(GroupClosure&&) noexcept;
    GroupClosure& operator=(GroupClosure&&) noexcept;

    unsigned p() const noexcept;
    unsigned genus() const noexcept;
    unsigned conductor() const noexcept;
    BigInt order() const;
    std::size_t class_count() const noexcept;
    /// Number of scalar matrices in the group.
    unsigned scalar_order() const noexcept;
    const std::vector<Operator>& generators() const noexcept;

    bool contains(const Operator& m) const;
    /// One group element per class.
    Operator class_element(std::size_t i) const;

    const ClosureData& data() const { return *d_; }

private:
    friend GroupClosure closure_of(std::vector<Operator>, std::uint64_t);
    std::unique_ptr<ClosureData> d_;
};

/// Breadth-first closure of the generators. Throws CapExceeded above cap elements.
GroupClosure closure_of(std::vector<Operator> generators, std::uint64_t cap = kDefaultGroupCap);

/// Throws CapExceeded when the predicted order exceeds cap.
GroupClosure group_closure(CodeType type, unsigned p, unsigned g, std::uint64_t cap = kDefaultGroupCap);
/// Generated by m_u, d_phi and the centre Z of C_g.
GroupClosure parabolic_closure(CodeType type, unsigned p, unsigned g, std::uint64_t cap = kDefaultGroupCap);

/// One representative per right coset P*sigma. Throws ValidationError if P is not in G.
std::vector<Operator> coset_reps(const GroupClosure& g, const GroupClosure& p);

/// Average of the seed over P\C_g: seed sum_v x_v^N, or x_0^N for type Q.
Poly eisenstein_coset(CodeType type, unsigned p, unsigned g, unsigned n, std::uint64_t cap = kDefaultGroupCap);

/// pi(tau_r) on the genus-2g variables.
Operator tau_operator(CodeType type, unsigned p, unsigned g, unsigned r);

/// Tensor product: X_(v1,v2) = x_v1 (x) y_v2.
Operator delta_embed(const Operator& a, const Operator& b);

struct DoubleCosetReport {
    std::size_t cosets = 0;               // |P_2g \ C_2g|
    std::vector<std::size_t> cell_sizes;  // cosets in P tau_r Delta, r = 0..g
    std::vector<bool> tau_in_group;
    bool disjoint = false;
    bool covers = false;
    bool ok() const;
};

/// Checks C_2g = disjoint union over r of P_2g pi(tau_r) Delta(C_g x C_g).
DoubleCosetReport double_coset_cover(CodeType type, unsigned p, unsigned g, std::uint64_t cap = kDefaultGroupCap);

}  // namespace cweg
