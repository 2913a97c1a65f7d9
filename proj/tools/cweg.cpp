#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "cweg/automorphism.hpp"
#include "cweg/clifford_weil.hpp"
#include "cweg/database.hpp"
#include "cweg/doubling.hpp"
#include "cweg/errors.hpp"
#include "cweg/selftest.hpp"
#include "cweg/siegel_phi.hpp"
#include "cweg/weight_enumerator.hpp"

using namespace cweg;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Common {
    std::string db_path;
    bool literature = false;
    std::string type = "2I";
    unsigned field = 0;
    unsigned length = 0;
    unsigned genus = 1;
};

CodeDatabase open_db(const Common& c) {
    if (c.db_path.empty()) return bundled_db(c.literature);
    CodeDatabase db = load_db(c.db_path);
    if (c.literature) db.merge(bundled_db(true));
    return db;
}

unsigned field_of(const Common& c, CodeType t) {
    if (c.field) return c.field;
    return type_is_binary(t) ? 2 : 3;
}

std::string tuple_str(const std::vector<unsigned>& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
}

void add_db_options(CLI::App* sub, Common& c) {
    sub->add_option("--db", c.db_path, "code database file (default: bundled data)");
    sub->add_flag("--literature-data", c.literature, "include the length-24 doubly-even classes");
}

void add_shape_options(CLI::App* sub, Common& c, bool with_length = true) {
    sub->add_option("--type", c.type, "2I, 2II, Q or Q1")->required();
    if (with_length) sub->add_option("--length", c.length, "code length N")->required();
    sub->add_option("--genus", c.genus, "genus g")->required();
    sub->add_option("--field", c.field, "field size for Q / Q1 (default 3)");
}

int cmd_cwe(const Common& c, const std::string& name, bool tuples) {
    auto db = open_db(c);
    const auto& r = db.at(name);
    Poly e = cwe(r.code, c.genus);
    if (!tuples) {
        std::cout << e.str() << "\n";
        return kOk;
    }
    for (const auto& [key, k] : tuple_profile(e)) std::cout << tuple_str(key) << " " << k.str() << "\n";
    return kOk;
}

int cmd_cusp(const Common& c, bool polys) {
    CodeType t = parse_type(c.type);
    auto ce = class_enumerators(t, c.length, c.genus, open_db(c));
    std::vector<std::string> names;
    for (const auto* r : ce.classes) names.push_back(r->name);
    std::cout << cusp_basis_from(t, names, ce.cwes).serialize(polys);
    return kOk;
}

int cmd_verify(const Common& c, bool factorial) {
    auto rep = verify_doubling(parse_type(c.type), c.length, c.genus, open_db(c));
    std::cout << rep.text(factorial);
    return rep.match ? kOk : kMismatch;
}

int cmd_eisenstein(const Common& c, const std::string& method, bool compare) {
    CodeType t = parse_type(c.type);
    unsigned p = field_of(c, t);
    auto coset = [&] { return eisenstein_coset(t, p, c.genus, c.length); };
    auto sw = [&] { return eisenstein_sw(t, c.length, c.genus, open_db(c)); };
    if (!compare) {
        std::cout << (method == "coset" ? coset() : sw()).str() << "\n";
        return kOk;
    }
    Poly a = coset(), b = sw();
    auto fit = fit_scalar(a, b);
    if (!fit.proportional) {
        std::cout << "coset and siegel-weil series are not proportional\n";
        return kMismatch;
    }
    std::cout << "ratio siegel-weil/coset = " << fit.scalar->str() << "\n";
    return *fit.scalar == CycNum(a.conductor(), Rat(1)) ? kOk : kMismatch;
}

int cmd_constants(const Common& c) {
    CodeType t = parse_type(c.type);
    unsigned p = field_of(c, t);
    const unsigned n = c.length, g = c.genus;
    if (t == CodeType::TypeI2) {
        Rat conj = const_conj(n, g), orders = const_conj_from_orders(n, g);
        std::cout << "conjecture = " << conj.str() << " = " << factorial_str(conj, n) << "\n";
        std::cout << "conjecture_from_orders = " << orders.str() << "\n";
        std::cout << "b = " << const_b(t, p, n, g).str() << "\n";
        return conj == orders ? kOk : kMismatch;
    }
    Rat cc = const_c(t, p, n, g), orders = const_c_from_orders(t, p, n, g);
    std::cout << "c = " << cc.str() << "\n";
    std::cout << "c_from_orders = " << orders.str() << "\n";
    std::cout << "c*N! = " << (cc * Rat(factorial(n))).str() << "\n";
    if (t != CodeType::TypeQ) std::cout << "b = " << const_b(t, p, n, g).str() << "\n";
    return cc == orders ? kOk : kMismatch;
}

int cmd_group(const Common& c, bool parabolic, std::uint64_t cap) {
    CodeType t = parse_type(c.type);
    unsigned p = field_of(c, t);
    auto pred = predicted_group(t, p, c.genus);
    auto g = group_closure(t, p, c.genus, cap);
    bool ok = g.order() == pred.order();
    std::cout << "order = " << g.order().get_str() << "\n";
    std::cout << "predicted = " << pred.centre << " * " << pred.kernel.get_str() << "^2 * " << pred.classical.get_str() << " ("
              << pred.classical_name << ") = " << pred.order().get_str() << "\n";
    std::cout << "scalars = " << g.scalar_order() << "\n";
    if (parabolic) {
        auto par = parabolic_closure(t, p, c.genus, cap);
        auto reps = coset_reps(g, par);
        std::cout << "parabolic_order = " << par.order().get_str() << "\n";
        std::cout << "coset_index = " << reps.size() << "\n";
        if (t != CodeType::TypeI2) {
            BigInt idx = predicted_coset_index(t, p, c.genus);
            std::cout << "predicted_coset_index = " << idx.get_str() << "\n";
            ok = ok && idx == BigInt(static_cast<unsigned long>(reps.size()));
        }
    }
    std::cout << "match = " << (ok ? "yes" : "no") << "\n";
    return ok ? kOk : kMismatch;
}

int cmd_aut(const Common& c, const std::string& name) {
    auto db = open_db(c);
    const auto& r = db.at(name);
    auto order = aut_order(r.code);
    if (!order) {
        std::cout << "aut search hit its effort bound\n";
        return kMismatch;
    }
    std::cout << order->get_str() << "\n";
    if (r.aut && *r.aut != *order) {
        std::cout << "database records " << r.aut->get_str() << "\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_selftest(unsigned seed) {
    bool ok = true;
    run_property_suite(seed, [&](const PropertyResult& r) {
        ok = ok && r.pass;
        std::printf("%s  %-58s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete weight enumerators, Clifford-Weil groups and the doubling identity for self-dual codes"};
    app.require_subcommand(1);
    Common c;

    std::string name;
    bool tuples = false, polys = false, factorial = false, compare = false, parabolic = false;
    std::string method = "coset";
    std::uint64_t cap = kDefaultGroupCap;
    unsigned seed = 1;

    auto* s_cwe = app.add_subcommand("cwe", "print cwe_g of a database code");
    add_db_options(s_cwe, c);
    s_cwe->add_option("--code", name, "code name")->required();
    s_cwe->add_option("--genus", c.genus, "genus g")->required();
    s_cwe->add_flag("--tuples", tuples, "print orbit coefficients instead of monomials");

    auto* s_cusp = app.add_subcommand("cusp", "cusp forms spanned by the classes of a complete set");
    add_db_options(s_cusp, c);
    add_shape_options(s_cusp, c);
    s_cusp->add_flag("--polys", polys, "also print the polynomials");

    auto* s_ver = app.add_subcommand("verify-doubling", "fit the doubling scalar on every cusp form");
    add_db_options(s_ver, c);
    add_shape_options(s_ver, c);
    s_ver->add_flag("--factorial", factorial, "show scalars as N!/(...)");

    auto* s_eis = app.add_subcommand("eisenstein", "Eisenstein series by coset sum or Siegel-Weil formula");
    add_db_options(s_eis, c);
    add_shape_options(s_eis, c);
    s_eis->add_option("--method", method, "coset or siegel-weil")->check(CLI::IsMember({"coset", "siegel-weil"}));
    s_eis->add_flag("--compare", compare, "compute both and report the ratio");

    auto* s_const = app.add_subcommand("constants", "closed-form constants and their group-order derivations");
    add_shape_options(s_const, c);

    auto* s_group = app.add_subcommand("group", "closure of the Clifford-Weil group against the predicted order");
    add_shape_options(s_group, c, false);
    s_group->add_flag("--parabolic", parabolic, "also close the parabolic subgroup and count cosets");
    s_group->add_option("--cap", cap, "maximum group order");

    auto* s_aut = app.add_subcommand("aut", "automorphism group order of a binary code");
    add_db_options(s_aut, c);
    s_aut->add_option("--code", name, "code name")->required();

    auto* s_self = app.add_subcommand("selftest", "property suite at desk scale");
    s_self->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*s_cwe) return cmd_cwe(c, name, tuples);
        if (*s_cusp) return cmd_cusp(c, polys);
        if (*s_ver) return cmd_verify(c, factorial);
        if (*s_eis) return cmd_eisenstein(c, method, compare);
        if (*s_const) return cmd_constants(c);
        if (*s_group) return cmd_group(c, parabolic, cap);
        if (*s_aut) return cmd_aut(c, name);
        if (*s_self) return cmd_selftest(seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
