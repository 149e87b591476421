// Acceptance gate: eight end-to-end criteria, one pass/fail line each.
// Exit status is nonzero if any criterion fails.

#include "fixtures_common.hpp"
#include "grl/analysis.hpp"
#include "grl/constructions.hpp"
#include "grl/graded_algebra.hpp"
#include "grl/ideals.hpp"
#include "grl/json_io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace grl;
using namespace grl::testfix;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (error.empty()) {
        std::cout << "PASS criterion " << number << ": " << title << " (" << ms
                  << " ms)\n";
    } else {
        ++g_failures;
        std::cout << "FAIL criterion " << number << ": " << title << " — "
                  << error << " (" << ms << " ms)\n";
    }
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

GradedAlgebra load_fixture(const std::string& name) {
    std::ifstream in(fs::path(GRL_FIXTURES_DIR) / name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    json j;
    in >> j;
    return algebra_from_json(j);
}

// R_s R_t as a subspace (span of all pairwise basis products)
Subspace component_product(const GradedAlgebra& a, int s, int t) {
    std::vector<Element> prods;
    for (std::size_t i : a.basis_of_degree(s))
        for (std::size_t j : a.basis_of_degree(t))
            prods.push_back(a.basis_element(i) * a.basis_element(j));
    return a.span(prods);
}

void check_lemma_and_commutant_props(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();

    // Lemma (a): the unit decomposes over identity degrees only
    auto parts = identity_decomposition(a);
    Element total = a.zero();
    for (auto& [obj, part] : parts) total = total + part;
    require(total == a.unit(), "identity components do not sum to the unit");

    // Lemma (b)+(c): the support subcategory carries every nonzero component
    // and is a groupoid when the grading groupoid is one
    auto sup = support_subcategory(a);
    require(validate(sup.subcategory).ok(), "support subcategory invalid");
    std::size_t supported = 0;
    for (int s : sup.morphism_map) supported += a.basis_of_degree(s).size();
    require(supported == a.dim(), "support subcategory misses components");
    if (g.has_inverses())
        require(sup.subcategory.has_inverses(),
                "support of a groupoid grading is not a groupoid");

    // Lemma (d): R_s R_{s^-1} = R_{c(s)} iff R_s R_t = R_{st} for all
    // composable t, checked as stated on every morphism
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        bool lhs = component_product(a, int(s), g.inverse[s]) ==
                   a.component_subspace(g.identity_of[g.cod[s]]);
        bool rhs = true;
        for (std::size_t t = 0; t < g.num_morphisms; ++t) {
            if (g.dom[s] != g.cod[t]) continue;
            if (!(component_product(a, int(s), int(t)) ==
                  a.component_subspace(g.compose(int(s), int(t)))))
                rhs = false;
        }
        require(lhs == rhs, "lemma (d) biconditional fails at morphism " +
                                std::to_string(s));
    }

    // Prop (a): C_R(R_0)_s equals the degreewise commutant against every
    // identity component; prop (d): zero when c(s) != d(s); both are asserted
    // inside graded_commutant, so computing it exercises them
    auto gc = graded_commutant(a);

    // Prop (b): C(R_0)_s C(R_0)_t lands in C(R_0)_{st}, or vanishes
    Subspace c = commutant(a, principal_component(a));
    for (auto& [s, cs] : gc)
        for (auto& [t, ct] : gc) {
            for (std::size_t i = 0; i < cs.dim(); ++i)
                for (std::size_t j = 0; j < ct.dim(); ++j) {
                    Element prod = a.element(cs.basis.row(i)) *
                                   a.element(ct.basis.row(j));
                    if (g.compose(s, t) == Groupoid::kUndefined)
                        require(prod.is_zero(),
                                "prop (b): product of non-composable degrees");
                    else
                        require(gc.at(g.compose(s, t)).contains(prod),
                                "prop (b): product escapes the commutant");
                }
        }

    // and the degreewise pieces reassemble the direct computation
    std::size_t dim_sum = 0;
    for (auto& [s, cs] : gc) dim_sum += cs.dim();
    require(dim_sum == c.dim(), "graded commutant does not fill C_R(R_0)");
}

}  // namespace

int main() {
    criterion(1, "matrix construction reproduces the worked example", [] {
        GradedAlgebra a = rex(FieldDesc::rational());
        G2 g2;
        auto e = [&](int i, int j) { return rex_matrix_unit(a, i, j); };
        require(a.dim() == 13, "wrong dimension");
        require(a.component_subspace(g2.e) == a.span({e(1, 1), e(3, 3)}),
                "R_e basis mismatch");
        require(a.component_subspace(g2.f) ==
                    a.span({e(2, 2), e(4, 4), e(4, 5), e(5, 4), e(5, 5)}),
                "R_f basis mismatch");
        require(a.component_subspace(g2.s) ==
                    a.span({e(1, 2), e(3, 4), e(3, 5)}),
                "R_s basis mismatch");
        require(a.component_subspace(g2.t) ==
                    a.span({e(2, 1), e(4, 3), e(5, 3)}),
                "R_t basis mismatch");
        require(is_strongly_graded(a).strongly_graded, "not strongly graded");
        require(is_free_rank_one(a, g2.s).status ==
                    Freeness::NotFreeByDimension,
                "R_s should fail freeness by dimension (5 vs 3)");
        require(is_free_rank_one(a, g2.t).status ==
                    Freeness::NotFreeByDimension,
                "R_t should fail freeness by dimension (5 vs 3)");
    });

    criterion(2, "theorem 5 witnesses over GF(2) for four groupoids", [] {
        struct Case {
            std::string name;
            Groupoid g;
            std::size_t nontrivial_parts;
        };
        std::vector<Case> cases = {
            {"G2", build_thin_connected(2), 1},
            {"Z2", z2_group(), 1},
            {"thin-3", build_thin_connected(3), 1},
            {"Z2 + G2",
             disjoint_union({z2_group(), build_thin_connected(2)}), 2},
        };
        for (auto& c : cases) {
            auto [a, rep] = build_theorem5_witness(c.g, FieldDesc::gfp(2));
            require(validate_grading(a).ok(), c.name + ": grading invalid");
            require(rep.strongly_graded, c.name + ": not strongly graded");
            require(rep.non_free_witnesses.size() == c.nontrivial_parts,
                    c.name + ": missing non-free witness");
            for (int s : rep.non_free_witnesses) {
                auto fr = is_free_rank_one(a, s).status;
                require(fr == Freeness::NotFreeByDimension ||
                            fr == Freeness::NotFree,
                        c.name + ": witness morphism is actually free");
            }
        }
    });

    criterion(3, "center via sigma equals the direct center on all bundled "
                 "strongly graded fixtures", [] {
        for (const char* name : {"rex-q.json", "rex-gf2.json", "kz2-gf2.json",
                                 "swap-gf2.json"}) {
            GradedAlgebra a = load_fixture(name);
            require(is_strongly_graded(a).strongly_graded,
                    std::string(name) + ": not strongly graded");
            require(center_via_sigma(a) == center_direct(a),
                    std::string(name) + ": center mismatch");
        }
        GradedAlgebra a = load_fixture("rex-q.json");
        auto e = [&](int i, int j) { return rex_matrix_unit(a, i, j); };
        Subspace brute = commutant(a, a.full_subspace());
        require(brute.dim() == 2, "rex center is not 2-dimensional");
        require(brute == a.span({e(1, 1) + e(2, 2),
                                 e(3, 3) + e(4, 4) + e(5, 5)}),
                "rex center basis mismatch");
        require(center_direct(a) == brute, "direct center disagrees with "
                                           "brute-force commutant");
    });

    criterion(4, "sigma functoriality suite on rex and the swap algebra", [] {
        for (const char* name : {"rex-q.json", "swap-gf2.json"}) {
            GradedAlgebra a = load_fixture(name);
            for (const auto& r : check_sigma_functor(a))
                require(r.pass, std::string(name) + ": " + r.name + " failed" +
                                    (r.detail.empty() ? "" : ": " + r.detail));
        }
    });

    criterion(5, "theorem 3 exhaustive on rex over GF(2), 8191 ideals", [] {
        auto rep = verify_theorem3(load_fixture("rex-gf2.json"),
                                   CheckMode::Exhaustive);
        require(rep.hypotheses_ok, "hypotheses failed: " +
                                       rep.hypothesis_failure);
        require(rep.instances_checked == 8191, "expected 8191 instances, got " +
                                      std::to_string(rep.instances_checked));
        require(rep.failures.empty(), "found failing principal ideals");
        require(rep.pass, "theorem 3 reported failure");
    });

    criterion(6, "theorem 4 both branches over GF(2)", [] {
        std::ifstream in1(fs::path(GRL_FIXTURES_DIR) / "skew-swap-gf2.json");
        json j1;
        in1 >> j1;
        auto rep1 = verify_theorem4(skew_system_from_json(j1),
                                    CheckMode::Exhaustive);
        require(rep1.pass && rep1.instances_checked == 15,
                "swap branch failed");

        std::ifstream in2(fs::path(GRL_FIXTURES_DIR) / "groupalg-gf2.json");
        json j2;
        in2 >> j2;
        auto rep2 = verify_theorem4(skew_system_from_json(j2),
                                    CheckMode::Exhaustive);
        require(rep2.pass, "group algebra branch failed");
        bool not_mc = false, sep = false, phi = false;
        for (auto& n : rep2.notes) {
            if (n == "maximal commutative: no") not_mc = true;
            if (n == "separating ideal meets A: no") sep = true;
            if (n == "phi vanishes on the ideal: yes") phi = true;
        }
        require(not_mc, "non-maximal-commutativity not detected");
        require(sep, "separating ideal intersects A");
        require(phi, "phi does not vanish on the separating ideal");
    });

    criterion(7, "lemma and commutant propositions hold; mutations are caught", [] {
        for (const char* name : {"rex-q.json", "rex-gf2.json", "kz2-gf2.json",
                                 "swap-gf2.json"})
            check_lemma_and_commutant_props(load_fixture(name));

        // mutation 1: delete one structure constant -> grading validator
        GradedAlgebra a = rex(FieldDesc::rational());
        auto entries = a.structure_entries();
        std::vector<SparseEntry> damaged(entries.begin() + 1, entries.end());
        GradedAlgebra mutant1(a.groupoid(), a.dim(), a.field(),
                              std::vector<int>(a.degrees()), damaged,
                              std::vector<Scalar>(a.unit_coeffs()));
        require(!validate_grading(mutant1).ok(),
                "deleted structure constant not caught");

        // mutation 2: delete one off-diagonal basis vector -> strongness
        std::size_t victim = rex_unit_index(3, 4);
        std::vector<int> degree;
        std::vector<Scalar> unit;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (i == victim) continue;
            degree.push_back(a.degree(i));
            unit.push_back(a.unit_coeffs()[i]);
        }
        std::vector<SparseEntry> kept;
        auto remap = [&](std::size_t i) { return i < victim ? i : i - 1; };
        for (const auto& e : entries) {
            if (e.i == victim || e.j == victim || e.k == victim) continue;
            kept.push_back({remap(e.i), remap(e.j), remap(e.k), e.value});
        }
        GradedAlgebra mutant2(a.groupoid(), a.dim() - 1, a.field(),
                              std::move(degree), kept, std::move(unit));
        // losing e34 already breaks associativity of the structure constants,
        // so either the validator or the strongness check must flag it
        bool valid = validate_grading(mutant2).ok();
        bool strong = valid && is_strongly_graded(mutant2).strongly_graded;
        require(!valid || !strong, "deleted basis vector not caught");
    });

    criterion(8, "crossed-product cocycle axioms and the degenerate fixture", [] {
        std::ifstream in1(fs::path(GRL_FIXTURES_DIR) / "crossed-neg1-q.json");
        json j1;
        in1 >> j1;
        CrossedSystem sys = crossed_system_from_json(j1);
        require(sys.validate().ok(), "eqs (1)-(4) fail on the -1 cocycle");
        GradedAlgebra a = build_crossed_product(sys);
        int e = a.groupoid().identity_of[0], g = 1 - e;
        Element ue = a.basis_element(std::size_t(e));
        Element ug = a.basis_element(std::size_t(g));
        require(ug * ug == ue.scaled(-Scalar::one(a.field())),
                "u_g * u_g != -u_e");

        std::ifstream in2(fs::path(GRL_FIXTURES_DIR) / "crossed-zero-gf2.json");
        json j2;
        in2 >> j2;
        CrossedSystem zero = crossed_system_from_json(j2);
        require(zero.validate().ok(), "zero cocycle should satisfy (1)-(4)");
        GradedAlgebra az = build_crossed_product(zero);
        auto nip = nonzero_ideal_property(az);
        require(!nip.holds, "degenerate fixture passes the ideal property");
        require(nip.witness.has_value() && !nip.witness->is_zero(),
                "missing nonzero kernel witness");
    });

    if (g_failures == 0) {
        std::cout << "all 8 acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
