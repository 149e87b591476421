#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures_common.hpp"
#include "grl/analysis.hpp"

using namespace grl;
using namespace grl::testfix;

namespace {

// brute-force commutant oracle: solve [x, b] = 0 against every basis b of s
// by scanning the full algebra basis for each coefficient pattern is what the
// library does; here we instead verify the returned space elementwise.
bool commutes_with_all(const Subspace& c, const Subspace& s) {
    for (std::size_t i = 0; i < c.dim(); ++i) {
        Element x = c.algebra->element(c.basis.row(i));
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Element y = s.algebra->element(s.basis.row(j));
            if (!(x * y == y * x)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("commutant of the principal component in the matrix example") {
    GradedAlgebra a = rex(FieldDesc::rational());
    auto e = [&](int i, int j) { return rex_matrix_unit(a, i, j); };
    Subspace r0 = principal_component(a);
    Subspace c = commutant(a, r0);
    CHECK(c.dim() == 4);
    CHECK(c == a.span({e(1, 1), e(2, 2), e(3, 3), e(4, 4) + e(5, 5)}));
    CHECK(commutes_with_all(c, r0));
    // e44 alone does not commute with R_0 (e45 moves it)
    CHECK_FALSE(c.contains(e(4, 4)));
}

TEST_CASE("commutant of the full algebra is the center") {
    GradedAlgebra a = rex(FieldDesc::gfp(5));
    CHECK(commutant(a, a.full_subspace()) == center_direct(a));
}

TEST_CASE("graded commutant splits degreewise") {
    GradedAlgebra a = rex(FieldDesc::rational());
    G2 g2;
    auto e = [&](int i, int j) { return rex_matrix_unit(a, i, j); };
    auto parts = graded_commutant(a);  // throws on internal inconsistency
    CHECK(parts.at(g2.e) == a.span({e(1, 1), e(3, 3)}));
    CHECK(parts.at(g2.f) == a.span({e(2, 2), e(4, 4) + e(5, 5)}));
    CHECK(parts.at(g2.s).dim() == 0);
    CHECK(parts.at(g2.t).dim() == 0);
    std::size_t total = 0;
    for (auto& [s, sub] : parts) total += sub.dim();
    CHECK(total == commutant(a, principal_component(a)).dim());
}

TEST_CASE("maximal commutativity") {
    SUBCASE("requires a commutative principal component") {
        // R_0 of the matrix example contains a full 2x2 block
        CHECK_THROWS_AS(is_maximal_commutative(rex(FieldDesc::rational())),
                        std::invalid_argument);
    }
    SUBCASE("the swap skew algebra is maximal commutative") {
        GradedAlgebra a = build_skew_algebra(swap_system(FieldDesc::gfp(2)));
        CHECK(is_maximal_commutative(a));
        CHECK(is_maximal_commutative(
            build_skew_algebra(swap_system(FieldDesc::rational()))));
    }
    SUBCASE("the group algebra of Z2 is not") {
        GradedAlgebra a = group_algebra_z2(FieldDesc::rational());
        CHECK_FALSE(is_maximal_commutative(a));
        // indeed everything commutes with the scalars
        CHECK(commutant(a, principal_component(a)).dim() == a.dim());
    }
}

TEST_CASE("center of the matrix example") {
    GradedAlgebra a = rex(FieldDesc::rational());
    auto e = [&](int i, int j) { return rex_matrix_unit(a, i, j); };
    Subspace z = center_direct(a);
    CHECK(z.dim() == 2);
    CHECK(z == a.span({e(1, 1) + e(2, 2), e(3, 3) + e(4, 4) + e(5, 5)}));
    CHECK(commutes_with_all(z, a.full_subspace()));
}

TEST_CASE("sigma sections") {
    GradedAlgebra a = rex(FieldDesc::rational());
    G2 g2;
    SUBCASE("a section exists at every morphism of a strong grading") {
        for (std::size_t s = 0; s < g2.g.num_morphisms; ++s) {
            SigmaSection sec = find_sigma_section(a, int(s));
            // sum a_i b_i = 1_{c(s)} by construction; spot-check through apply
            Element id_dom = identity_decomposition(a).at(g2.g.dom[s]);
            Element id_cod = identity_decomposition(a).at(g2.g.cod[s]);
            CHECK(sec.apply(id_dom) == id_cod);
            for (auto& [ai, bi] : sec.pairs) {
                CHECK(a.component_subspace(int(s)).contains(ai));
                CHECK(a.component_subspace(g2.g.inverse[s]).contains(bi));
            }
        }
    }
    SUBCASE("alternate sections exist when the solution space is big") {
        SigmaSection s1 = find_sigma_section(a, g2.s, false);
        SigmaSection s2 = find_sigma_section(a, g2.s, true);
        // both are sections, and they differ as pair data
        // identity_decomposition is keyed by object; s goes from object 1 to 0
        Element id_f = identity_decomposition(a).at(1);
        Element id_e = identity_decomposition(a).at(0);
        CHECK(s1.apply(id_f) == id_e);
        CHECK(s2.apply(id_f) == id_e);
    }
    SUBCASE("one-dimensional components force a unique section") {
        GradedAlgebra kz2 = group_algebra_z2(FieldDesc::rational());
        int g = kz2.degree(1) == 0 ? 0 : 1;
        CHECK_THROWS_AS(find_sigma_section(kz2, g, true), std::runtime_error);
    }
    SUBCASE("no section exists when the grading is not strong") {
        FieldDesc f = FieldDesc::rational();
        Groupoid z2 = z2_group();
        int e = z2.identity_of[0], g = 1 - e;
        std::vector<SparseEntry> table = {
            {0, 0, 0, Scalar::one(f)},
            {0, 1, 1, Scalar::one(f)},
            {1, 0, 1, Scalar::one(f)},
        };
        GradedAlgebra trunc(z2, 2, f, {e, g}, table,
                            {Scalar::one(f), Scalar::zero(f)});
        CHECK_THROWS_AS(find_sigma_section(trunc, g), std::invalid_argument);
    }
}

TEST_CASE("sigma action on the swap skew algebra") {
    GradedAlgebra a = build_skew_algebra(swap_system(FieldDesc::rational()));
    const Groupoid& z2 = a.groupoid();
    int e = z2.identity_of[0], g = 1 - e;
    SigmaAction act = build_sigma_action(a);
    // C_R(R_0) = R_0 = A here, so sigma_g should act as the swap on A
    REQUIRE(act.object_commutant[0].dim() == 2);
    std::size_t b0 = a.basis_of_degree(e)[0], b1 = a.basis_of_degree(e)[1];
    CHECK(sigma_apply(act, g, a.basis_element(b0)) == a.basis_element(b1));
    CHECK(sigma_apply(act, g, a.basis_element(b1)) == a.basis_element(b0));
    CHECK(sigma_apply(act, e, a.basis_element(b0)) == a.basis_element(b0));
}

TEST_CASE("sigma functor checks all pass on the worked examples") {
    for (auto make : {+[] { return rex(FieldDesc::rational()); },
                      +[] { return rex(FieldDesc::gfp(3)); },
                      +[] {
                          return build_skew_algebra(
                              swap_system(FieldDesc::gfp(2)));
                      },
                      +[] { return group_algebra_z2(FieldDesc::rational()); }}) {
        GradedAlgebra a = make();
        auto results = check_sigma_functor(a);
        CHECK(results.size() == 7);
        for (const auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("section independence is vacuous for unique sections") {
    auto results = check_sigma_functor(group_algebra_z2(FieldDesc::rational()));
    bool found = false;
    for (const auto& r : results)
        if (r.name == "sigma_section_independent") {
            found = true;
            CHECK(r.pass);
            CHECK(r.vacuous);
        }
    CHECK(found);
}

TEST_CASE("center via sigma agrees with the direct center") {
    for (auto make : {+[] { return rex(FieldDesc::rational()); },
                      +[] { return rex(FieldDesc::gfp(7)); },
                      +[] {
                          return build_skew_algebra(
                              swap_system(FieldDesc::rational()));
                      },
                      +[] { return group_algebra_z2(FieldDesc::gfp(2)); }}) {
        GradedAlgebra a = make();
        CHECK(center_via_sigma(a) == center_direct(a));
    }
    // and the expected values themselves
    GradedAlgebra swap = build_skew_algebra(swap_system(FieldDesc::rational()));
    CHECK(center_direct(swap).dim() == 1);
    CHECK(center_direct(swap).contains(swap.unit()));
    CHECK(center_direct(group_algebra_z2(FieldDesc::rational())).dim() == 2);
}
