#pragma once

#include <cstdint>

#include "cweg/code.hpp"
#include "cweg/poly.hpp"

namespace cweg {

inline constexpr std::uint64_t kDefaultTupleBudget = std::uint64_t(1) << 32;

/// |C|^g, or BudgetExceeded when above budget.
std::uint64_t tuple_count(const LinearCode& c, unsigned g, std::uint64_t budget = kDefaultTupleBudget);

/// Genus-g complete weight enumerator: for each g-tuple of codewords, the
/// monomial prod_v x_v^(number of coordinates whose column equals v).
/// Dispatches to the bit-packed kernel for binary codes.
Poly cwe(const LinearCode& c, unsigned g, std::uint64_t budget = kDefaultTupleBudget);

/// Reference path: explicit column counting over all tuples, any prime.
Poly cwe_generic(const LinearCode& c, unsigned g, std::uint64_t budget = kDefaultTupleBudget);

/// Binary kernel: the 2^g column-pattern masks of a tuple are built by AND/ANDNOT
/// and counted with popcount. Requires p = 2, N <= 64, g <= 4.
Poly cwe_binary_fast(const LinearCode& c, unsigned g, std::uint64_t budget = kDefaultTupleBudget);

/// Worker threads for the binary kernel (0 = hardware concurrency).
void set_enumeration_threads(unsigned n);

}  // namespace cweg
