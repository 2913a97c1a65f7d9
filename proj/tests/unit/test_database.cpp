#include <gtest/gtest.h>

#include "cweg/database.hpp"
#include "cweg/errors.hpp"

using namespace cweg;

namespace {

std::string rec(const std::string& name, const std::string& type, const std::string& gens, const std::string& extra = "") {
    std::string s = "code " + name + "\nfield 2\ntype " + type + "\nlength 2\n" + extra;
    s += "gen " + gens + "\nend\n";
    return s;
}

}  // namespace

TEST(Database, BundledLengthSixteen) {
    auto db = bundled_db();
    const std::vector<std::pair<std::string, long>> auts = {{"E16", 5160960},      {"F16", 73728},      {"A8^2", 3612672},
                                                            {"D14+i2", 112896},    {"B12+i2^2", 184320}, {"A8+i2^4", 516096},
                                                            {"i2^8", 10321920}};
    for (const auto& [name, aut] : auts) {
        const auto& r = db.at(name);
        ASSERT_TRUE(r.aut.has_value()) << name;
        EXPECT_EQ(*r.aut, BigInt(aut)) << name;
        EXPECT_EQ(r.length, 16u);
        EXPECT_EQ(r.type, CodeType::TypeI2);
    }
    EXPECT_EQ(db.classes(CodeType::TypeI2, 16).size(), 7u);
    EXPECT_TRUE(db.is_complete(CodeType::TypeI2, 16));
    EXPECT_TRUE(db.is_complete(CodeType::TypeII2, 16));
    EXPECT_FALSE(db.is_complete(CodeType::TypeII2, 24));
    EXPECT_THROW(db.complete_classes(CodeType::TypeII2, 24), ValidationError);
    EXPECT_THROW(db.at("nope"), ValidationError);
    EXPECT_EQ(db.find("nope"), nullptr);
}

TEST(Database, LiteratureAddsLengthTwentyFour) {
    auto db = bundled_db(true);
    EXPECT_EQ(db.complete_classes(CodeType::TypeII2, 24).size(), 9u);
    EXPECT_EQ(db.classes(CodeType::TypeI2, 16).size(), 7u);
}

TEST(Database, LoadFromFile) {
    auto db = load_db(std::string(CWEG_DATA_DIR) + "/codes.db");
    EXPECT_EQ(db, bundled_db());
    EXPECT_THROW(load_db(std::string(CWEG_DATA_DIR) + "/missing.db"), std::exception);
}

TEST(Database, TypeChecks) {
    EXPECT_NO_THROW(parse_db(rec("i2", "2I", "11")));
    EXPECT_THROW(parse_db(rec("i2", "2II", "11")), ValidationError);
    EXPECT_THROW(parse_db(rec("x", "2I", "10")), ValidationError);   // not self-dual
    EXPECT_THROW(parse_db(rec("x", "2I", "111")), ValidationError);  // wrong row length
    EXPECT_THROW(parse_db(rec("x", "2I", "12")), ValidationError);   // bad symbol
    EXPECT_THROW(parse_db(rec("i2", "2I", "11", "aut 4\n")), ValidationError);
    EXPECT_NO_THROW(parse_db(rec("i2", "2I", "11", "aut 2\n")));
    DbOptions lax;
    lax.verify_aut = false;
    EXPECT_NO_THROW(parse_db(rec("i2", "2I", "11", "aut 4\n"), lax));
}

TEST(Database, SyntaxErrors) {
    EXPECT_THROW(parse_db(rec("i2", "2I", "11") + rec("i2", "2I", "11")), ParseError);
    EXPECT_THROW(parse_db("code a\nfield 2\nbogus 1\nend\n"), ParseError);
    EXPECT_THROW(parse_db("code a\nfield 2\ntype 2I\nlength 2\ngen 11\n"), ParseError);
    EXPECT_THROW(parse_db("code a\nfield x\nend\n"), ParseError);
    try {
        parse_db("# comment\n\ncode a\nfield 2\nbogus 1\nend\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find('5'), std::string::npos) << e.what();
    }
}

TEST(Database, CompleteCounts) {
    EXPECT_NO_THROW(parse_db(rec("i2", "2I", "11", "aut 2\n") + "complete 2I 2 1\n"));
    EXPECT_THROW(parse_db(rec("i2", "2I", "11", "aut 2\n") + "complete 2I 2 2\n"), ValidationError);
    EXPECT_THROW(parse_db(rec("i2", "2I", "11") + "complete 2I 2 1\n"), ValidationError);  // aut order missing
}

TEST(Database, RoundTripAndMerge) {
    auto db = bundled_db(true);
    EXPECT_EQ(parse_db(db.serialize()), db);
    auto a = parse_db(rec("i2", "2I", "11"));
    auto b = a;
    EXPECT_THROW(a.merge(b), ValidationError);
    auto c = parse_db(rec("j2", "2I", "11"));
    a.merge(c);
    EXPECT_EQ(a.records.size(), 2u);
}

TEST(Database, MassFormula) {
    // sum over classes of N!/|Aut C| counts all self-dual (doubly-even) codes
    auto db = bundled_db(true);
    auto mass = [&](CodeType t, unsigned n) {
        Rat total(0);
        for (const auto* r : db.complete_classes(t, n)) total += Rat(factorial(n)) / Rat(*r->aut);
        return total;
    };
    auto count = [](unsigned first, unsigned last) {
        BigInt c = 1;
        for (unsigned i = first; i <= last; ++i) c *= (BigInt(1) << i) + 1;
        return Rat(c);
    };
    for (unsigned n : {2u, 8u, 16u}) EXPECT_EQ(mass(CodeType::TypeI2, n), count(1, n / 2 - 1)) << n;
    for (unsigned n : {8u, 16u, 24u}) EXPECT_EQ(mass(CodeType::TypeII2, n), count(0, n / 2 - 2)) << n;
}
