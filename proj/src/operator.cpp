#include "cweg/operator.hpp"

#include <sstream>

#include "cweg/errors.hpp"

namespace cweg {

unsigned ipow_u(unsigned base, unsigned exp) {
    unsigned r = 1;
    while (exp--) r *= base;
    return r;
}

unsigned encode_vec(const std::vector<unsigned>& v, unsigned p) {
    unsigned idx = 0;
    for (unsigned x : v) idx = idx * p + x;
    return idx;
}

std::vector<unsigned> decode_vec(unsigned index, unsigned p, unsigned g) {
    std::vector<unsigned> v(g);
    for (unsigned i = g; i-- > 0;) {
        v[i] = index % p;
        index /= p;
    }
    return v;
}

Operator::Operator(unsigned p, unsigned g, unsigned conductor)
    : p_(p), g_(g), n_(conductor), dim_(ipow_u(p, g)), m_(static_cast<std::size_t>(dim_) * dim_, CycNum(conductor)) {}

Operator Operator::identity(unsigned p, unsigned g, unsigned conductor) {
    Operator op(p, g, conductor);
    for (unsigned i = 0; i < op.dim_; ++i) op.at(i, i) = CycNum(conductor, Rat(1));
    op.label = "id";
    return op;
}

Operator Operator::operator*(const Operator& o) const {
    if (o.dim_ != dim_ || o.n_ != n_ || o.p_ != p_) throw ShapeMismatch("operator shapes differ");
    Operator out(p_, g_, n_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned k = 0; k < dim_; ++k) {
            const CycNum& a = at(i, k);
            if (a.is_zero()) continue;
            for (unsigned j = 0; j < dim_; ++j) {
                const CycNum& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    if (!label.empty() && !o.label.empty()) out.label = label + "*" + o.label;
    return out;
}

Operator Operator::scaled(const CycNum& s) const {
    Operator out(*this);
    for (auto& x : out.m_)
        if (!x.is_zero()) x *= s;
    return out;
}

bool operator==(const Operator& a, const Operator& b) {
    return a.p_ == b.p_ && a.g_ == b.g_ && a.n_ == b.n_ && a.m_ == b.m_;
}

Operator Operator::conj_transpose() const {
    Operator out(p_, g_, n_);
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

bool Operator::is_identity() const {
    for (unsigned i = 0; i < dim_; ++i)
        for (unsigned j = 0; j < dim_; ++j) {
            const CycNum& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Operator::is_unitary() const { return (*this * conj_transpose()).is_identity(); }

bool Operator::is_monomial() const {
    std::vector<unsigned> col_count(dim_, 0);
    for (unsigned i = 0; i < dim_; ++i) {
        unsigned nz = 0;
        for (unsigned j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero()) {
                ++nz;
                ++col_count[j];
            }
        if (nz != 1) return false;
    }
    for (unsigned c : col_count)
        if (c != 1) return false;
    return true;
}

std::string Operator::str() const {
    std::ostringstream os;
    if (!label.empty()) os << "# " << label << "\n";
    for (unsigned i = 0; i < dim_; ++i) {
        for (unsigned j = 0; j < dim_; ++j) os << (j ? "  " : "") << at(i, j).str();
        os << "\n";
    }
    return os.str();
}

std::size_t Operator::hash() const noexcept {
    std::size_t h = dim_;
    for (const auto& x : m_) h = h * 31 + x.hash();
    return h;
}

}  // namespace cweg
