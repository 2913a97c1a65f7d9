#include "cweg/linalg.hpp"

#include <map>

#include "cweg/errors.hpp"

namespace cweg {

Echelon rref(RatMatrix m, unsigned columns) {
    for (const auto& row : m)
        if (row.size() != columns) throw ShapeMismatch("ragged matrix");
    Echelon out;
    out.columns = columns;
    std::size_t rank = 0;
    for (unsigned col = 0; col < columns && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        Rat inv = m[rank][col].inverse();
        for (unsigned c = col; c < columns; ++c)
            if (!m[rank][c].is_zero()) m[rank][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (unsigned c = col; c < columns; ++c)
                if (!m[rank][c].is_zero()) m[r][c] -= f * m[rank][c];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    out.rows = std::move(m);
    return out;
}

std::vector<std::vector<Rat>> kernel(const RatMatrix& m, unsigned columns) {
    Echelon e = rref(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> out;
    for (unsigned free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(columns);
        v[free] = Rat(1);
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

RatMatrix coefficient_matrix(const std::vector<Poly>& polys) {
    if (polys.empty()) return {};
    for (const auto& p : polys) polys.front().check_compatible(p, "coefficient matrix");
    const unsigned phi = cyclotomic_context(polys.front().conductor()).phi;
    std::map<std::pair<Exps, unsigned>, std::size_t> row_of;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms())
            for (unsigned k = 0; k < phi; ++k)
                if (!c.coeff(k).is_zero()) row_of.emplace(std::make_pair(e, k), 0);
    std::size_t r = 0;
    for (auto& [key, idx] : row_of) idx = r++;
    RatMatrix m(row_of.size(), std::vector<Rat>(polys.size()));
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [e, c] : polys[j].terms())
            for (unsigned k = 0; k < phi; ++k)
                if (!c.coeff(k).is_zero()) m[row_of.at({e, k})][j] = c.coeff(k);
    return m;
}

std::vector<unsigned> independent_subset(const std::vector<Poly>& polys) {
    if (polys.empty()) return {};
    Echelon e = rref(coefficient_matrix(polys), static_cast<unsigned>(polys.size()));
    return e.pivots;
}

}  // namespace cweg
