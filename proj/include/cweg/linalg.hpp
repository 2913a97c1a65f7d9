#pragma once

#include <vector>

#include "cweg/poly.hpp"
#include "cweg/rational.hpp"

namespace cweg {

using RatMatrix = std::vector<std::vector<Rat>>;

struct Echelon {
    RatMatrix rows;               // reduced row echelon form, zero rows dropped
    std::vector<unsigned> pivots;  // pivot column of each row
    unsigned columns = 0;
    unsigned rank() const { return static_cast<unsigned>(pivots.size()); }
};

/// Exact Gauss-Jordan elimination; pivots are the first nonzero entries.
Echelon rref(RatMatrix m, unsigned columns);

/// Basis of {x : M x = 0}, one vector per free column, with a 1 in that column.
std::vector<std::vector<Rat>> kernel(const RatMatrix& m, unsigned columns);

/// Coefficient matrix of a list of polynomials: one column per polynomial, one row
/// per (monomial, power-basis index) that occurs. All inputs must be compatible.
RatMatrix coefficient_matrix(const std::vector<Poly>& polys);

/// Indices of a maximal linearly independent subset, earliest first.
std::vector<unsigned> independent_subset(const std::vector<Poly>& polys);

}  // namespace cweg
