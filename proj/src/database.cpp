#include "cweg/database.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cweg/automorphism.hpp"
#include "cweg/bundled_data.hpp"
#include "cweg/errors.hpp"

namespace cweg {

bool operator==(const CodeRecord& a, const CodeRecord& b) {
    return a.name == b.name && a.p == b.p && a.type == b.type && a.length == b.length && a.aut == b.aut && a.note == b.note &&
           a.code == b.code && a.code.type() == b.code.type();
}

const CodeRecord* CodeDatabase::find(const std::string& name) const {
    for (const auto& r : records)
        if (r.name == name) return &r;
    return nullptr;
}

const CodeRecord& CodeDatabase::at(const std::string& name) const {
    if (const auto* r = find(name)) return *r;
    throw ValidationError("no code named '" + name + "' in the database");
}

std::vector<const CodeRecord*> CodeDatabase::classes(CodeType type, unsigned length) const {
    std::vector<const CodeRecord*> out;
    for (const auto& r : records)
        if (r.type == type && r.length == length) out.push_back(&r);
    return out;
}

bool CodeDatabase::is_complete(CodeType type, unsigned length) const {
    for (const auto& c : complete)
        if (c.type == type && c.length == length) {
            auto cls = classes(type, length);
            if (cls.size() != c.count) return false;
            for (const auto* r : cls)
                if (!r->aut) return false;
            return true;
        }
    return false;
}

std::vector<const CodeRecord*> CodeDatabase::complete_classes(CodeType type, unsigned length) const {
    if (!is_complete(type, length))
        throw ValidationError("the database does not declare a complete set of " + type_name(type) + " codes of length " +
                              std::to_string(length));
    return classes(type, length);
}

void CodeDatabase::merge(const CodeDatabase& other) {
    for (const auto& r : other.records) {
        if (find(r.name)) throw ValidationError("duplicate code name '" + r.name + "' while merging databases");
        records.push_back(r);
    }
    for (const auto& c : other.complete) complete.push_back(c);
}

std::string CodeDatabase::serialize() const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << "code " << r.name << "\n";
        os << "field " << r.p << "\n";
        os << "type " << type_name(r.type) << "\n";
        os << "length " << r.length << "\n";
        if (r.aut) os << "aut " << to_string(*r.aut) << "\n";
        if (!r.note.empty()) os << "note " << r.note << "\n";
        for (const auto& row : r.code.basis()) os << "gen " << word_str(row) << "\n";
        os << "end\n\n";
    }
    for (const auto& c : complete) os << "complete " << type_name(c.type) << " " << c.length << " " << c.count << "\n";
    return os.str();
}

namespace {

unsigned parse_unsigned(const std::string& s, std::size_t line, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + s + "'");
    try {
        return static_cast<unsigned>(std::stoul(s));
    } catch (const std::exception&) {
        throw ParseError(line, std::string("value out of range for ") + what);
    }
}

CodeType parse_type_at(const std::string& s, std::size_t line) {
    try {
        return parse_type(s);
    } catch (const std::exception& e) {
        throw ParseError(line, e.what());
    }
}

struct Pending {
    CodeRecord rec;
    std::size_t line = 0;
    bool has_field = false, has_type = false, has_length = false;
};

void finish_record(Pending& pend, std::size_t line, const DbOptions& opt) {
    CodeRecord& r = pend.rec;
    if (!pend.has_field || !pend.has_type || !pend.has_length)
        throw ParseError(line, "code '" + r.name + "' needs field, type and length");
    if (!is_prime(r.p) || r.p > kMaxPrime) throw ParseError(pend.line, "code '" + r.name + "' has unsupported field " + std::to_string(r.p));
    std::vector<Word> rows;
    for (const auto& s : r.rows) {
        if (s.size() != r.length)
            throw ValidationError("code '" + r.name + "': generator '" + s + "' does not have length " + std::to_string(r.length));
        Word w;
        for (char ch : s) {
            if (ch < '0' || static_cast<unsigned>(ch - '0') >= r.p)
                throw ValidationError("code '" + r.name + "': generator '" + s + "' has a symbol outside F_" + std::to_string(r.p));
            w.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        rows.push_back(std::move(w));
    }
    try {
        r.code = code_from_rows(r.p, r.length, rows, r.type);
    } catch (const std::exception& e) {
        throw ValidationError("code '" + r.name + "': " + e.what());
    }
    if (!check_type(r.code)) throw ValidationError("code '" + r.name + "' is not a self-dual code of type " + type_name(r.type));
    if (opt.verify_aut && r.aut && r.length <= opt.verify_aut_max_length && r.p == 2) {
        AutOptions ao;
        ao.max_length = opt.verify_aut_max_length;
        auto found = aut_order(r.code, ao);
        if (!found) throw ValidationError("code '" + r.name + "': automorphism search hit its effort bound");
        if (*found != *r.aut)
            throw ValidationError("code '" + r.name + "': declared aut " + to_string(*r.aut) + " but the search finds " + to_string(*found));
    }
}

}  // namespace

CodeDatabase parse_db(const std::string& text, const DbOptions& opt) {
    CodeDatabase db;
    std::set<std::string> names;
    std::optional<Pending> cur;
    std::vector<std::pair<Completeness, std::size_t>> decls;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos || raw[start] == '#') continue;
        std::string body = raw.substr(start);
        std::size_t sp = body.find_first_of(" \t");
        std::string key = body.substr(0, sp);
        std::string rest;
        if (sp != std::string::npos) {
            std::size_t vs = body.find_first_not_of(" \t", sp);
            if (vs != std::string::npos) rest = body.substr(vs);
        }
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();

        if (key == "code") {
            if (cur) throw ParseError(line, "code '" + cur->rec.name + "' is missing 'end'");
            if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) throw ParseError(line, "code needs a single-word name");
            if (!names.insert(rest).second) throw ParseError(line, "duplicate code name '" + rest + "'");
            cur.emplace();
            cur->rec.name = rest;
            cur->line = line;
            continue;
        }
        if (key == "complete") {
            if (cur) throw ParseError(line, "'complete' inside a code record");
            std::istringstream ws(rest);
            std::string t, n, c, extra;
            ws >> t >> n >> c;
            if (c.empty() || (ws >> extra)) throw ParseError(line, "expected 'complete TYPE N COUNT'");
            Completeness decl{parse_type_at(t, line), parse_unsigned(n, line, "length"), parse_unsigned(c, line, "count")};
            decls.emplace_back(decl, line);
            continue;
        }
        if (!cur) throw ParseError(line, "'" + key + "' outside a code record");
        CodeRecord& r = cur->rec;
        if (key == "field") {
            r.p = parse_unsigned(rest, line, "field");
            cur->has_field = true;
        } else if (key == "type") {
            r.type = parse_type_at(rest, line);
            cur->has_type = true;
        } else if (key == "length") {
            r.length = parse_unsigned(rest, line, "length");
            cur->has_length = true;
        } else if (key == "aut") {
            if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(line, "aut needs a positive integer");
            r.aut = BigInt(rest);
            if (*r.aut == 0) throw ParseError(line, "aut needs a positive integer");
        } else if (key == "note") {
            r.note = rest;
        } else if (key == "gen") {
            if (rest.empty()) throw ParseError(line, "empty generator row");
            r.rows.push_back(rest);
        } else if (key == "end") {
            finish_record(*cur, line, opt);
            db.records.push_back(std::move(cur->rec));
            cur.reset();
        } else {
            throw ParseError(line, "unknown keyword '" + key + "'");
        }
    }
    if (cur) throw ParseError(line, "code '" + cur->rec.name + "' is missing 'end'");
    for (const auto& [decl, at] : decls) {
        db.complete.push_back(decl);
        auto cls = db.classes(decl.type, decl.length);
        if (cls.size() != decl.count)
            throw ValidationError("line " + std::to_string(at) + ": complete " + type_name(decl.type) + " " + std::to_string(decl.length) +
                                  " declares " + std::to_string(decl.count) + " classes but " + std::to_string(cls.size()) +
                                  " are present");
        for (const auto* r : cls)
            if (!r->aut) throw ValidationError("code '" + r->name + "' is in a complete set but has no aut order");
    }
    return db;
}

CodeDatabase load_db(const std::string& path, const DbOptions& opt) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open database '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_db(ss.str(), opt);
}

CodeDatabase bundled_db(bool literature, const DbOptions& opt) {
    CodeDatabase db = parse_db(bundled::kCodes, opt);
    if (literature) db.merge(parse_db(bundled::kLiterature, opt));
    return db;
}

}  // namespace cweg
