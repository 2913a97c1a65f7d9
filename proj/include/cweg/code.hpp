#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cweg {

enum class CodeType { TypeI2, TypeII2, TypeQ, TypeQ1 };

/// "2I", "2II", "Q", "Q1".
std::string type_name(CodeType t);
CodeType parse_type(std::string_view s);
bool type_is_binary(CodeType t);

bool is_prime(unsigned p);
inline constexpr unsigned kMaxPrime = 13;

using Word = std::vector<std::uint8_t>;

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t(1) << 24;

/// A linear code over F_p held by its reduced row-echelon basis.
class LinearCode {
public:
    LinearCode(unsigned p, unsigned length, std::vector<Word> rref_rows, CodeType type);

    unsigned p() const noexcept { return p_; }
    unsigned length() const noexcept { return n_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(rows_.size()); }
    CodeType type() const noexcept { return type_; }
    const std::vector<Word>& basis() const noexcept { return rows_; }
    const std::vector<unsigned>& pivots() const noexcept { return pivots_; }

    bool contains(const Word& w) const;
    /// Basis rows as bitsets (coordinate j is bit j); p = 2 and N <= 64 only.
    std::vector<std::uint64_t> basis_bits() const;
    bool contains_bits(std::uint64_t w) const;

    /// Same code, different tag.
    LinearCode retagged(CodeType t) const { return LinearCode(p_, n_, rows_, t); }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    unsigned p_;
    unsigned n_;
    std::vector<Word> rows_;
    std::vector<unsigned> pivots_;
    CodeType type_;
};

/// Span of the rows in canonical RREF; dependent rows are dropped.
LinearCode code_from_rows(unsigned p, unsigned length, const std::vector<Word>& rows, CodeType type);
/// Rows given as digit strings such as "1011".
LinearCode code_from_strings(unsigned p, const std::vector<std::string>& rows, CodeType type);

LinearCode dual_code(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
bool check_type(const LinearCode& c);

/// Direct sum with the matrix blocks placed on the diagonal.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

/// sigma C: coordinate j of a codeword moves to position perm[j].
LinearCode permuted(const LinearCode& c, const std::vector<unsigned>& perm);

/// p^k, or BudgetExceeded if it exceeds budget.
std::uint64_t codeword_count(const LinearCode& c, std::uint64_t budget = kDefaultCodewordBudget);

/// All codewords in generator-coefficient lexicographic order (first row most significant).
void for_each_codeword(const LinearCode& c, const std::function<void(const Word&)>& fn,
                       std::uint64_t budget = kDefaultCodewordBudget);
std::vector<Word> codewords(const LinearCode& c, std::uint64_t budget = kDefaultCodewordBudget);
/// Binary codewords as bitsets, same order as for_each_codeword.
std::vector<std::uint64_t> binary_codewords(const LinearCode& c, std::uint64_t budget = kDefaultCodewordBudget);

/// Hamming weight distribution, index = weight.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c);

std::string word_str(const Word& w);

}  // namespace cweg
