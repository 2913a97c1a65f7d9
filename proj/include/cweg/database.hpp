#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cweg/code.hpp"
#include "cweg/rational.hpp"

namespace cweg {

struct CodeRecord {
    std::string name;
    unsigned p = 2;
    CodeType type = CodeType::TypeI2;
    unsigned length = 0;
    std::vector<std::string> rows;  // as given in the source
    std::optional<BigInt> aut;
    std::string note;
    LinearCode code = LinearCode(2, 0, {}, CodeType::TypeI2);

    friend bool operator==(const CodeRecord& a, const CodeRecord& b);
};

/// `complete TYPE N COUNT`: every class of (type, N) is present.
struct Completeness {
    CodeType type = CodeType::TypeI2;
    unsigned length = 0;
    unsigned count = 0;
    friend bool operator==(const Completeness&, const Completeness&) = default;
};

struct DbOptions {
    bool verify_aut = true;
    unsigned verify_aut_max_length = 16;
};

class CodeDatabase {
public:
    std::vector<CodeRecord> records;
    std::vector<Completeness> complete;

    const CodeRecord* find(const std::string& name) const;
    /// Throws ValidationError naming the missing code.
    const CodeRecord& at(const std::string& name) const;
    std::vector<const CodeRecord*> classes(CodeType type, unsigned length) const;
    bool is_complete(CodeType type, unsigned length) const;
    /// Throws ValidationError unless (type, N) is declared complete with aut orders.
    std::vector<const CodeRecord*> complete_classes(CodeType type, unsigned length) const;
    /// Appends another database; names must stay unique.
    void merge(const CodeDatabase& other);

    /// Records in the database format, generators written in reduced echelon form.
    std::string serialize() const;
    friend bool operator==(const CodeDatabase&, const CodeDatabase&) = default;
};

/// Parses and validates: syntax errors carry line numbers; type checks, duplicate
/// names, aut orders (N <= 16) and complete counts are enforced.
CodeDatabase parse_db(const std::string& text, const DbOptions& opt = {});
CodeDatabase load_db(const std::string& path, const DbOptions& opt = {});

/// Database compiled into the library; the length-24 doubly-even classes are
/// appended when literature is set.
CodeDatabase bundled_db(bool literature = false, const DbOptions& opt = {});

}  // namespace cweg
