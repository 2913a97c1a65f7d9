#pragma once

#include <string>
#include <vector>

#include "cweg/code.hpp"

namespace fixtures {

using cweg::CodeType;
using cweg::LinearCode;

inline std::vector<std::string> d_rows(unsigned n) {
    std::vector<std::string> rows;
    for (unsigned j = 0; 2 * j + 4 <= n; ++j) rows.push_back(std::string(2 * j, '0') + "1111" + std::string(n - 2 * j - 4, '0'));
    return rows;
}

inline std::vector<std::string> dsum(const std::vector<std::vector<std::string>>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.front().size();
    std::vector<std::string> out;
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (const auto& r : p) out.push_back(std::string(off, '0') + r + std::string(total - off - r.size(), '0'));
        off += p.front().size();
    }
    return out;
}

inline const std::vector<std::string> kI2 = {"11"};
inline const std::vector<std::string> kE8 = {"11110000", "00111100", "00001111", "01010101"};
inline const std::vector<std::string> kE7 = {"0001111", "0110011", "1010101"};

inline LinearCode make(const std::vector<std::string>& rows, CodeType t = CodeType::TypeI2) {
    return cweg::code_from_strings(2, rows, t);
}

inline LinearCode i2() { return make(kI2); }
inline LinearCode e8(CodeType t = CodeType::TypeII2) { return make(kE8, t); }

inline LinearCode E16() {
    auto rows = d_rows(16);
    rows.push_back("0101010101010101");
    return make(rows);
}

inline LinearCode F16() {
    auto rows = dsum({d_rows(8), d_rows(8)});
    rows.push_back("0101010111000000");
    rows.push_back("1100000001010101");
    return make(rows);
}

inline LinearCode A8sq() { return make(dsum({kE8, kE8})); }

inline LinearCode D14i2() {
    std::vector<std::string> rows;
    for (const auto& r : dsum({kE7, kE7})) rows.push_back(r + "00");
    rows.push_back(std::string(14, '1') + "00");
    rows.push_back(std::string(14, '0') + "11");
    return make(rows);
}

inline LinearCode B12i2sq() {
    auto b12 = d_rows(12);
    b12.push_back("010101010101");
    return make(dsum({b12, kI2, kI2}));
}

inline LinearCode A8i2_4() { return make(dsum({kE8, kI2, kI2, kI2, kI2})); }

inline LinearCode i2_8() { return make(dsum({kI2, kI2, kI2, kI2, kI2, kI2, kI2, kI2})); }

struct Named {
    std::string name;
    LinearCode code;
};

inline std::vector<Named> table_codes() {
    return {{"E16", E16()},       {"F16", F16()},           {"A8^2", A8sq()},   {"D14+i2", D14i2()},
            {"B12+i2^2", B12i2sq()}, {"A8+i2^4", A8i2_4()}, {"i2^8", i2_8()}};
}

inline LinearCode tetracode() { return cweg::code_from_strings(3, {"1012", "0111"}, CodeType::TypeQ); }

}  // namespace fixtures
