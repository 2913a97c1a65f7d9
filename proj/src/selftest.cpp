#include "cweg/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "cweg/clifford_weil.hpp"
#include "cweg/database.hpp"
#include "cweg/doubling.hpp"
#include "cweg/siegel_phi.hpp"
#include "cweg/weight_enumerator.hpp"

namespace cweg {

namespace {

struct FieldType {
    CodeType type;
    unsigned p;
};

const std::vector<FieldType>& all_types() {
    static const std::vector<FieldType> t = {
        {CodeType::TypeI2, 2}, {CodeType::TypeII2, 2}, {CodeType::TypeQ, 3}, {CodeType::TypeQ1, 3}};
    return t;
}

Poly random_poly(unsigned p, unsigned g, unsigned deg, std::mt19937& rng, unsigned terms, bool cyclotomic = true) {
    const unsigned n = conductor_for(p);
    Poly out(p, g, deg, n);
    const unsigned nv = out.nvars();
    for (unsigned t = 0; t < terms; ++t) {
        Exps e(nv, 0);
        for (unsigned k = 0; k < deg; ++k) ++e[rng() % nv];
        CycNum c(n, Rat(static_cast<long long>(rng() % 7) - 3, 1 + rng() % 4));
        if (cyclotomic) c *= CycNum::zeta(n, rng() % n);
        out.add_term(e, c);
    }
    return out;
}

std::vector<unsigned> random_vec(unsigned p, unsigned len, std::mt19937& rng) {
    std::vector<unsigned> w(len);
    for (auto& x : w) x = rng() % p;
    return w;
}

struct Suite {
    std::vector<PropertyResult> results;
    std::function<void(const PropertyResult&)> progress;

    void run(const std::string& name, const std::function<std::string()>& body) {
        PropertyResult r;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.pass = r.detail.rfind("FAIL", 0) != 0;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("FAIL: exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(r);
        if (progress) progress(r);
    }
};

std::string fail(const std::string& what) { return "FAIL: " + what; }

}  // namespace

std::vector<PropertyResult> run_property_suite(unsigned seed, const std::function<void(const PropertyResult&)>& progress) {
    Suite s;
    s.progress = progress;
    std::mt19937 rng(seed);
    const CodeDatabase db = bundled_db(false);

    s.run("generators are unitary (g <= 2)", [&]() -> std::string {
        std::size_t count = 0;
        for (const auto& [t, p] : all_types())
            for (unsigned g = 1; g <= 2; ++g)
                for (const auto& op : clifford_weil_generators(t, p, g)) {
                    if (!op.is_unitary()) return fail(type_name(t) + " generator " + op.label);
                    ++count;
                }
        return std::to_string(count) + " generators";
    });

    s.run("d and m compose as homomorphisms", [&]() -> std::string {
        for (const auto& [t, p] : all_types())
            for (unsigned g = 1; g <= 2; ++g) {
                auto forms = all_quadratic_forms(t, p, g);
                for (int it = 0; it < 10; ++it) {
                    const auto& f1 = forms[rng() % forms.size()];
                    const auto& f2 = forms[rng() % forms.size()];
                    Operator prod = gen_d(f1) * gen_d(f2);
                    for (unsigned v = 0; v < prod.dim(); ++v) {
                        auto vec = decode_vec(v, p, g);
                        Rat phase = quadform_eval(f1, vec) + quadform_eval(f2, vec);
                        unsigned n = conductor_for(p);
                        Rat k = phase * Rat(static_cast<long long>(n));
                        if (!(prod.at(v, v) == CycNum::zeta(n, k.numerator().get_si()))) return fail("d_phi product at " + type_name(t));
                    }
                }
                auto gl = general_linear_group(p, g);
                for (int it = 0; it < 10; ++it) {
                    const auto& u1 = gl[rng() % gl.size()];
                    const auto& u2 = gl[rng() % gl.size()];
                    Matrix uu(g, std::vector<unsigned>(g, 0));
                    for (unsigned i = 0; i < g; ++i)
                        for (unsigned j = 0; j < g; ++j) {
                            unsigned acc = 0;
                            for (unsigned k = 0; k < g; ++k) acc += u2[i][k] * u1[k][j];
                            uu[i][j] = acc % p;
                        }
                    // x_v -> x_{u1 v} -> x_{u2 u1 v}
                    if (!(gen_m(u1, p) * gen_m(u2, p) == gen_m(uu, p))) return fail("m_u product over F_" + std::to_string(p));
                }
            }
        return "ok";
    });

    s.run("inner product is invariant under C_g", [&]() -> std::string {
        std::size_t checks = 0;
        for (const auto& [t, p] : all_types())
            for (unsigned g = 1; g <= 2; ++g) {
                auto gens = clifford_weil_generators(t, p, g);
                for (int it = 0; it < 6; ++it) {
                    const unsigned deg = 2 + rng() % 3;
                    Poly a = random_poly(p, g, deg, rng, 4), b = random_poly(p, g, deg, rng, 4);
                    const Operator& gm = gens[rng() % gens.size()];
                    if (!(inner_product(apply_operator(a, gm), apply_operator(b, gm)) == inner_product(a, b)))
                        return fail(type_name(t) + " generator " + gm.label);
                    ++checks;
                }
            }
        return std::to_string(checks) + " random pairs";
    });

    s.run("Phi after lift is the identity", [&]() -> std::string {
        for (const auto& [t, p] : all_types())
            for (unsigned g = 1; g <= 3; ++g)
                for (unsigned j = 1; j <= g; ++j)
                    for (int it = 0; it < 4; ++it) {
                        Poly a = random_poly(p, g - j, 3, rng, 5);
                        auto w = random_vec(p, j, rng);
                        if (!(phi_op_w(lift_op_w(a, j, w), j, w) == a)) return fail("twisted lift at g=" + std::to_string(g));
                        if (!(phi_op(lift_op(a, j), j) == a)) return fail("lift at g=" + std::to_string(g));
                    }
        return "ok";
    });

    s.run("lift and Phi are adjoint", [&]() -> std::string {
        for (unsigned p : {2u, 3u})
            for (unsigned g = 1; g <= 2; ++g)
                for (unsigned j = 1; j <= g; ++j)
                    for (int it = 0; it < 5; ++it) {
                        Poly q = random_poly(p, g - j, 4, rng, 4);
                        Poly a = random_poly(p, g, 4, rng, 8);
                        if (!(inner_product(lift_op(q, j), a) == inner_product(q, phi_op(a, j))))
                            return fail("p=" + std::to_string(p) + " g=" + std::to_string(g));
                    }
        return "ok";
    });

    s.run("Phi composes one step at a time", [&]() -> std::string {
        for (unsigned p : {2u, 3u})
            for (int it = 0; it < 5; ++it) {
                Poly a = random_poly(p, 3, 3, rng, 10);
                auto w = random_vec(p, 2, rng);
                // the trailing coordinate goes first
                Poly step = phi_op_w(phi_op_w(a, 1, {w[1]}), 1, {w[0]});
                if (!(phi_op_w(a, 2, w) == step)) return fail("p=" + std::to_string(p));
            }
        return "ok";
    });

    s.run("lift o Phi is a self-adjoint idempotent (g=1, N<=8)", [&]() -> std::string {
        for (unsigned n = 1; n <= 8; ++n) {
            Poly any(2, 1, n, 8);
            std::vector<Poly> basis;
            for (unsigned k = 0; k <= n; ++k)
                basis.push_back(Poly::monomial(2, 1, {static_cast<std::uint16_t>(n - k), static_cast<std::uint16_t>(k)}, CycNum(8, Rat(1))));
            for (const auto& a : basis) {
                Poly pa = lift_op(phi_op(a, 1), 1);
                if (!(lift_op(phi_op(pa, 1), 1) == pa)) return fail("idempotence at N=" + std::to_string(n));
                for (const auto& b : basis)
                    if (!(inner_product(pa, b) == inner_product(a, lift_op(phi_op(b, 1), 1))))
                        return fail("self-adjointness at N=" + std::to_string(n));
            }
        }
        return "ok";
    });

    s.run("orthogonal decomposition into kernel and lift parts", [&]() -> std::string {
        for (unsigned p : {2u, 3u})
            for (int it = 0; it < 5; ++it) {
                Poly a = random_poly(p, 2, 4, rng, 10);
                Poly lifted = lift_op(phi_op(a, 1), 1);
                Poly cusp = a - lifted;
                if (!phi_op(cusp, 1).is_zero()) return fail("kernel part is not in ker Phi");
                if (!inner_product(cusp, lifted).is_zero()) return fail("parts are not orthogonal");
            }
        return "ok";
    });

    s.run("Phi(cwe_g) = cwe_{g-1} on bundled codes", [&]() -> std::string {
        std::size_t checks = 0;
        for (const auto& r : db.records)
            for (unsigned g = 1; g <= 2; ++g) {
                if (!(phi_op(cwe(r.code, g), 1) == cwe(r.code, g - 1))) return fail(r.name + " at g=" + std::to_string(g));
                ++checks;
            }
        return std::to_string(checks) + " cases";
    });

    s.run("D(cwe_2(C)) = cwe_1(C,x) cwe_1(C,y) on bundled codes", [&]() -> std::string {
        for (const auto& r : db.records) {
            Poly c1 = cwe(r.code, 1);
            if (!(dmap(cwe(r.code, 2)) == BipartitePoly::product(c1, c1))) return fail(r.name);
        }
        return std::to_string(db.records.size()) + " codes";
    });

    s.run("pairing through D agrees with the restriction identity", [&]() -> std::string {
        for (const auto& r : db.records) {
            if (r.length > 16) continue;
            Poly c1 = cwe(r.code, 1);
            Poly f = random_poly(r.p, 1, r.length, rng, 5);
            Poly lhs = pair_y(dmap(cwe(r.code, 2)), f);
            Poly rhs = c1;
            rhs *= inner_product(c1, f);
            if (!(lhs == rhs)) return fail(r.name);
        }
        return "ok";
    });

    // cusp forms of the complete bundled sets
    struct Space {
        CodeType type;
        unsigned n, g;
        ClassEnumerators ce;
        CuspBasis basis;
    };
    std::vector<Space> spaces;
    for (const auto& c : db.complete)
        for (unsigned g = 1; g <= 2; ++g) {
            Space sp{c.type, c.length, g, class_enumerators(c.type, c.length, g, db), {}};
            std::vector<std::string> names;
            for (const auto* r : sp.ce.classes) names.push_back(r->name);
            sp.basis = cusp_basis_from(c.type, names, sp.ce.cwes);
            spaces.push_back(std::move(sp));
        }

    s.run("Phi^(w) annihilates the bundled cusp forms", [&]() -> std::string {
        std::size_t checks = 0;
        for (const auto& sp : spaces)
            for (const auto& f : sp.basis.polys)
                for (unsigned j = 1; j <= sp.g; ++j)
                    for (unsigned wi = 0; wi < ipow_u(f.p(), j); ++wi) {
                        if (!phi_op_w(f, j, decode_vec(wi, f.p(), j)).is_zero())
                            return fail(type_name(sp.type) + " N=" + std::to_string(sp.n) + " g=" + std::to_string(sp.g));
                        ++checks;
                    }
        return std::to_string(checks) + " (form, j, w) cases";
    });

    s.run("bundled cusp forms are C_g-invariant", [&]() -> std::string {
        std::size_t forms = 0;
        for (const auto& sp : spaces)
            for (const auto& f : sp.basis.polys) {
                if (!is_cusp(f, sp.type, true).ok()) return fail(type_name(sp.type) + " N=" + std::to_string(sp.n));
                ++forms;
            }
        return std::to_string(forms) + " forms";
    });

    s.run("basis expansion reconstructs the bundled cusp forms", [&]() -> std::string {
        std::size_t forms = 0;
        for (const auto& sp : spaces)
            for (const auto& f : sp.basis.polys) {
                if (!basis_expansion(f, sp.type, sp.n, sp.g, sp.ce).exact)
                    return fail(type_name(sp.type) + " N=" + std::to_string(sp.n) + " g=" + std::to_string(sp.g));
                ++forms;
            }
        return std::to_string(forms) + " forms";
    });

    s.run("cusp basis does not depend on code order", [&]() -> std::string {
        for (const auto& sp : spaces) {
            std::vector<std::size_t> order(sp.ce.cwes.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::string> names;
            std::vector<Poly> cwes;
            for (auto i : order) {
                names.push_back(sp.basis.names[i]);
                cwes.push_back(sp.ce.cwes[i]);
            }
            if (!same_cusp_space(sp.basis, cusp_basis_from(sp.type, names, cwes))) return fail(type_name(sp.type));
        }
        return "ok";
    });

    s.run("Eisenstein series is C_g-invariant", [&]() -> std::string {
        struct Case {
            CodeType t;
            unsigned p, g, n;
        };
        for (const auto& c : {Case{CodeType::TypeII2, 2, 1, 8}, Case{CodeType::TypeI2, 2, 1, 16}, Case{CodeType::TypeI2, 2, 2, 8},
                              Case{CodeType::TypeQ, 3, 1, 4}, Case{CodeType::TypeQ1, 3, 1, 12}}) {
            Poly e = eisenstein_coset(c.t, c.p, c.g, c.n);
            for (const auto& gm : clifford_weil_generators(c.t, c.p, c.g))
                if (!(apply_operator(e, gm) == e)) return fail(type_name(c.t) + " generator " + gm.label);
        }
        return "ok";
    });

    s.run("enumerator kernels agree", [&]() -> std::string {
        for (const auto& r : db.records) {
            if (r.p != 2 || r.length > 16) continue;
            if (!(cwe_binary_fast(r.code, 2) == cwe_generic(r.code, 2))) return fail(r.name);
        }
        return "ok";
    });

    return s.results;
}

}  // namespace cweg
