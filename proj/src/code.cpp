#include "cweg/code.hpp"

#include <bit>
#include <stdexcept>

#include "cweg/errors.hpp"

namespace cweg {

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
    unsigned r = 1;
    unsigned e = p - 2;
    unsigned b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// In-place RREF over F_p; returns pivot columns. Zero rows are removed.
std::vector<unsigned> rref(std::vector<Word>& m, unsigned p, unsigned n) {
    std::vector<unsigned> pivots;
    std::size_t r = 0;
    for (unsigned col = 0; col < n && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        unsigned inv = inv_mod(m[r][col], p);
        for (auto& x : m[r]) x = static_cast<std::uint8_t>(x * inv % p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            unsigned f = m[i][col];
            for (unsigned j = 0; j < n; ++j)
                m[i][j] = static_cast<std::uint8_t>((m[i][j] + (p - f) * m[r][j]) % p);
        }
        pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    return pivots;
}

void check_type_field(unsigned p, CodeType t) {
    if (!is_prime(p) || p > kMaxPrime) throw ShapeMismatch("unsupported field size " + std::to_string(p));
    if (type_is_binary(t) != (p == 2))
        throw ShapeMismatch("type " + type_name(t) + " does not fit the field F_" + std::to_string(p));
}

}  // namespace

std::string type_name(CodeType t) {
    switch (t) {
        case CodeType::TypeI2: return "2I";
        case CodeType::TypeII2: return "2II";
        case CodeType::TypeQ: return "Q";
        case CodeType::TypeQ1: return "Q1";
    }
    return "?";
}

CodeType parse_type(std::string_view s) {
    if (s == "2I") return CodeType::TypeI2;
    if (s == "2II") return CodeType::TypeII2;
    if (s == "Q") return CodeType::TypeQ;
    if (s == "Q1") return CodeType::TypeQ1;
    throw std::invalid_argument("unknown code type '" + std::string(s) + "' (expected 2I, 2II, Q or Q1)");
}

bool type_is_binary(CodeType t) { return t == CodeType::TypeI2 || t == CodeType::TypeII2; }

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

LinearCode::LinearCode(unsigned p, unsigned length, std::vector<Word> rref_rows, CodeType type)
    : p_(p), n_(length), rows_(std::move(rref_rows)), type_(type) {
    check_type_field(p, type);
    for (const auto& r : rows_) {
        if (r.size() != n_) throw ShapeMismatch("basis row has wrong length");
        unsigned j = 0;
        while (j < n_ && r[j] == 0) ++j;
        if (j == n_) throw std::invalid_argument("zero basis row");
        pivots_.push_back(j);
    }
}

bool LinearCode::contains(const Word& w) const {
    if (w.size() != n_) return false;
    Word v = w;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        unsigned f = v[pivots_[i]];
        if (f == 0) continue;
        for (unsigned j = 0; j < n_; ++j) v[j] = static_cast<std::uint8_t>((v[j] + (p_ - f) * rows_[i][j]) % p_);
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

std::vector<std::uint64_t> LinearCode::basis_bits() const {
    if (p_ != 2 || n_ > 64) throw ShapeMismatch("bitset form needs p = 2 and N <= 64");
    std::vector<std::uint64_t> out;
    for (const auto& r : rows_) {
        std::uint64_t b = 0;
        for (unsigned j = 0; j < n_; ++j)
            if (r[j]) b |= std::uint64_t(1) << j;
        out.push_back(b);
    }
    return out;
}

bool LinearCode::contains_bits(std::uint64_t w) const {
    auto bits = basis_bits();
    for (std::size_t i = 0; i < bits.size(); ++i)
        if ((w >> pivots_[i]) & 1) w ^= bits[i];
    return w == 0;
}

LinearCode code_from_rows(unsigned p, unsigned length, const std::vector<Word>& rows, CodeType type) {
    check_type_field(p, type);
    std::vector<Word> m;
    for (const auto& r : rows) {
        if (r.size() != length) throw ShapeMismatch("row length " + std::to_string(r.size()) + " != " + std::to_string(length));
        for (auto x : r)
            if (x >= p) throw std::invalid_argument("entry " + std::to_string(x) + " out of range for F_" + std::to_string(p));
        m.push_back(r);
    }
    rref(m, p, length);
    return LinearCode(p, length, std::move(m), type);
}

LinearCode code_from_strings(unsigned p, const std::vector<std::string>& rows, CodeType type) {
    if (rows.empty()) throw std::invalid_argument("no generator rows");
    std::vector<Word> m;
    for (const auto& s : rows) {
        Word w;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit '" + std::string(1, ch) + "' in row " + s);
            w.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        m.push_back(std::move(w));
    }
    return code_from_rows(p, static_cast<unsigned>(rows.front().size()), m, type);
}

LinearCode dual_code(const LinearCode& c) {
    unsigned n = c.length(), p = c.p();
    const auto& rows = c.basis();
    const auto& piv = c.pivots();
    std::vector<bool> is_piv(n, false);
    for (unsigned j : piv) is_piv[j] = true;
    // kernel of the RREF matrix: one vector per free column
    std::vector<Word> ker;
    for (unsigned f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Word v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i) v[piv[i]] = static_cast<std::uint8_t>((p - rows[i][f]) % p);
        ker.push_back(std::move(v));
    }
    if (ker.empty()) return LinearCode(p, n, {}, c.type());
    return code_from_rows(p, n, ker, c.type());
}

bool is_self_dual(const LinearCode& c) { return c.length() == 2 * c.dim() && dual_code(c) == c; }

bool check_type(const LinearCode& c) {
    if (!is_self_dual(c)) return false;
    switch (c.type()) {
        case CodeType::TypeI2:
        case CodeType::TypeQ:
            return true;
        case CodeType::TypeII2:
            // doubly-even on a basis plus self-orthogonality gives it everywhere
            for (const auto& r : c.basis()) {
                unsigned w = 0;
                for (auto x : r) w += x;
                if (w % 4) return false;
            }
            return true;
        case CodeType::TypeQ1:
            return c.contains(Word(c.length(), 1));
    }
    return false;
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    if (a.p() != b.p()) throw ShapeMismatch("direct sum over different fields");
    unsigned n = a.length() + b.length();
    std::vector<Word> rows;
    for (const auto& r : a.basis()) {
        Word w(r);
        w.resize(n, 0);
        rows.push_back(std::move(w));
    }
    for (const auto& r : b.basis()) {
        Word w(a.length(), 0);
        w.insert(w.end(), r.begin(), r.end());
        rows.push_back(std::move(w));
    }
    CodeType t;
    if (a.p() == 2) {
        t = (a.type() == CodeType::TypeII2 && b.type() == CodeType::TypeII2) ? CodeType::TypeII2 : CodeType::TypeI2;
    } else {
        t = (a.type() == CodeType::TypeQ1 && b.type() == CodeType::TypeQ1) ? CodeType::TypeQ1 : CodeType::TypeQ;
    }
    return code_from_rows(a.p(), n, rows, t);
}

LinearCode permuted(const LinearCode& c, const std::vector<unsigned>& perm) {
    unsigned n = c.length();
    if (perm.size() != n) throw ShapeMismatch("permutation has wrong size");
    std::vector<bool> seen(n, false);
    for (unsigned x : perm) {
        if (x >= n || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
    std::vector<Word> rows;
    for (const auto& r : c.basis()) {
        Word w(n, 0);
        for (unsigned j = 0; j < n; ++j) w[perm[j]] = r[j];
        rows.push_back(std::move(w));
    }
    return code_from_rows(c.p(), n, rows, c.type());
}

std::uint64_t codeword_count(const LinearCode& c, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < c.dim(); ++i) {
        if (count > budget / c.p())
            throw BudgetExceeded("code has " + std::to_string(c.p()) + "^" + std::to_string(c.dim()) +
                                 " codewords, over the budget of " + std::to_string(budget));
        count *= c.p();
    }
    if (count > budget) throw BudgetExceeded("codeword budget exceeded");
    return count;
}

void for_each_codeword(const LinearCode& c, const std::function<void(const Word&)>& fn, std::uint64_t budget) {
    std::uint64_t total = codeword_count(c, budget);
    unsigned k = c.dim(), n = c.length(), p = c.p();
    std::vector<unsigned> coef(k, 0);
    Word w(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        fn(w);
        // odometer on coefficients, last row least significant
        for (unsigned i = k; i-- > 0;) {
            const auto& row = c.basis()[i];
            for (unsigned j = 0; j < n; ++j) w[j] = static_cast<std::uint8_t>((w[j] + row[j]) % p);
            if (++coef[i] < p) break;
            coef[i] = 0;  // wrapped: adding the row p times returned w to its previous value
        }
    }
}

std::vector<Word> codewords(const LinearCode& c, std::uint64_t budget) {
    std::vector<Word> out;
    out.reserve(codeword_count(c, budget));
    for_each_codeword(c, [&](const Word& w) { out.push_back(w); }, budget);
    return out;
}

std::vector<std::uint64_t> binary_codewords(const LinearCode& c, std::uint64_t budget) {
    auto bits = c.basis_bits();
    std::uint64_t total = codeword_count(c, budget);
    unsigned k = c.dim();
    std::vector<std::uint64_t> out(total, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        unsigned low = static_cast<unsigned>(std::countr_zero(idx));
        // bit `low` of idx is the coefficient of row k-1-low
        out[idx] = out[idx & (idx - 1)] ^ bits[k - 1 - low];
    }
    return out;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c) {
    std::vector<std::uint64_t> dist(c.length() + 1, 0);
    if (c.p() == 2 && c.length() <= 64) {
        for (auto w : binary_codewords(c)) ++dist[static_cast<unsigned>(std::popcount(w))];
        return dist;
    }
    for_each_codeword(c, [&](const Word& w) {
        unsigned wt = 0;
        for (auto x : w) wt += x != 0;
        ++dist[wt];
    });
    return dist;
}

std::string word_str(const Word& w) {
    std::string s;
    for (auto x : w) s += static_cast<char>('0' + x);
    return s;
}

}  // namespace cweg
