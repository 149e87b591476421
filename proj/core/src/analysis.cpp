#include "grl/analysis.hpp"

#include <stdexcept>

namespace grl {

namespace {

// Coordinates of v in the rref basis rs; nullopt if v is outside the span.
std::optional<std::vector<Scalar>> coords_in(const Matrix& rs,
                                             std::vector<Scalar> v) {
    std::vector<Scalar> coords;
    coords.reserve(rs.rows());
    for (std::size_t i = 0; i < rs.rows(); ++i) {
        std::size_t pc = 0;
        while (pc < rs.cols() && rs.at(i, pc).is_zero()) ++pc;
        Scalar f = v[pc] / rs.at(i, pc);
        coords.push_back(f);
        for (std::size_t j = pc; j < rs.cols(); ++j)
            v[j] -= f * rs.at(i, j);
    }
    for (const auto& s : v)
        if (!s.is_zero()) return std::nullopt;
    return coords;
}

Subspace component_of_object(const GradedAlgebra& a, int e) {
    return a.component_subspace(a.groupoid().identity_of[e]);
}

// 1_e C_R(R_e) 1_e: the part of the commutant sitting in the corner at e.
// sigma_s is only defined between these corners; outside them sigma at an
// identity morphism need not be the identity map.
Subspace corner_commutant(const GradedAlgebra& a, int e) {
    const std::size_t n = a.dim();
    Element one_e = component(a.unit(), a.groupoid().identity_of[e]);
    Matrix eqs(2 * n, n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        Element left = mul(one_e, a.basis_element(i)) - a.basis_element(i);
        Element right = mul(a.basis_element(i), one_e) - a.basis_element(i);
        for (std::size_t k = 0; k < n; ++k) {
            eqs.at(k, i) = left.coeffs[k];
            eqs.at(n + k, i) = right.coeffs[k];
        }
    }
    Matrix corner = row_space(nullspace(eqs));
    Subspace comm = commutant(a, component_of_object(a, e));
    return {&a, rowspace_intersect(comm.basis, corner)};
}

// Z(R_e) = C_R(R_e) ∩ R_e
Subspace center_of_component(const GradedAlgebra& a, int e) {
    Subspace comp = component_of_object(a, e);
    Subspace comm = commutant(a, comp);
    return {&a, rowspace_intersect(comm.basis, comp.basis)};
}

}  // namespace

Subspace commutant(const GradedAlgebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    Matrix eqs(0, n, a.field());
    for (std::size_t r = 0; r < s.basis.rows(); ++r) {
        Element y = a.element(s.basis.row(r));
        // rows: coefficient of b_k in (b_i y - y b_i), one equation block per y
        Matrix block(n, n, a.field());
        for (std::size_t i = 0; i < n; ++i) {
            Element comm = mul(a.basis_element(i), y) - mul(y, a.basis_element(i));
            for (std::size_t k = 0; k < n; ++k) block.at(k, i) = comm.coeffs[k];
        }
        eqs = eqs.vstack(block);
    }
    return {&a, row_space(nullspace(eqs))};
}

std::map<int, Subspace> graded_commutant(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    Subspace c = commutant(a, principal_component(a));

    std::map<int, Subspace> out;
    Matrix direct_sum(0, a.dim(), a.field());
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        Subspace cs{&a, rowspace_intersect(c.basis,
                                           a.component_subspace(int(s)).basis)};
        if (g.cod[s] == g.dom[s]) {
            // C_R(R_0)_s must equal C_{R_s}(R_{d(s)})
            Subspace comm_ds = commutant(a, component_of_object(a, g.dom[s]));
            Matrix expect = rowspace_intersect(
                comm_ds.basis, a.component_subspace(int(s)).basis);
            if (!(cs.basis == expect))
                throw std::logic_error(
                    "graded commutant mismatch at morphism " + std::to_string(s));
        } else if (cs.dim() != 0) {
            throw std::logic_error(
                "graded commutant nonzero at non-loop morphism " +
                std::to_string(s));
        }
        for (std::size_t r = 0; r < cs.basis.rows(); ++r)
            direct_sum.append_row(cs.basis.row(r));
        out[int(s)] = std::move(cs);
    }
    if (!(row_space(direct_sum) == c.basis))
        throw std::logic_error("degreewise commutant does not sum to C_R(R_0)");
    return out;
}

bool is_maximal_commutative(const GradedAlgebra& a) {
    Subspace r0 = principal_component(a);
    for (std::size_t i = 0; i < r0.basis.rows(); ++i)
        for (std::size_t j = i + 1; j < r0.basis.rows(); ++j) {
            Element x = a.element(r0.basis.row(i)),
                    y = a.element(r0.basis.row(j));
            if (!(mul(x, y) == mul(y, x)))
                throw std::invalid_argument(
                    "principal component is not commutative");
        }
    return commutant(a, r0) == r0;
}

Subspace center_direct(const GradedAlgebra& a) {
    return commutant(a, a.full_subspace());
}

Element SigmaSection::apply(const Element& x) const {
    Element acc = x.algebra->zero();
    for (const auto& [ai, bi] : pairs) acc = acc + mul(mul(ai, x), bi);
    return acc;
}

SigmaSection find_sigma_section(const GradedAlgebra& a, int s, bool alternate) {
    const Groupoid& g = a.groupoid();
    if (!g.has_inverses())
        throw std::invalid_argument("sigma section needs inverses");
    int sinv = g.inverse[s];
    auto basis_a = a.basis_of_degree(s);
    auto basis_b = a.basis_of_degree(sinv);
    const std::size_t nu = basis_a.size() * basis_b.size();
    Element target = component(a.unit(), g.identity_of[g.cod[s]]);

    // one column per unknown coefficient c_{ij}, one row per algebra basis k
    Matrix m(a.dim(), nu, a.field());
    for (std::size_t i = 0; i < basis_a.size(); ++i)
        for (std::size_t j = 0; j < basis_b.size(); ++j) {
            Element p = mul(a.basis_element(basis_a[i]),
                            a.basis_element(basis_b[j]));
            for (std::size_t k = 0; k < a.dim(); ++k)
                m.at(k, i * basis_b.size() + j) = p.coeffs[k];
        }
    Matrix rhs(a.dim(), 1, a.field());
    for (std::size_t k = 0; k < a.dim(); ++k) rhs.at(k, 0) = target.coeffs[k];

    RrefResult r = rref(m.hstack(rhs));
    std::vector<Scalar> sol(nu, Scalar::zero(a.field()));
    for (std::size_t k = 0; k < r.rank; ++k) {
        if (r.pivots[k] == nu)
            throw std::invalid_argument(
                "no sigma section at morphism " + std::to_string(s) +
                " (grading not strong there)");
        sol[r.pivots[k]] = r.reduced.at(k, nu);
    }
    if (alternate) {
        Matrix ker = nullspace(m);
        if (ker.rows() == 0)
            throw std::runtime_error("no alternate section");
        for (std::size_t j = 0; j < nu; ++j) sol[j] += ker.at(0, j);
    }

    SigmaSection sec;
    sec.morphism = s;
    for (std::size_t i = 0; i < basis_a.size(); ++i)
        for (std::size_t j = 0; j < basis_b.size(); ++j) {
            const Scalar& c = sol[i * basis_b.size() + j];
            if (c.is_zero()) continue;
            sec.pairs.emplace_back(a.basis_element(basis_a[i]).scaled(c),
                                   a.basis_element(basis_b[j]));
        }
    return sec;
}

SigmaAction build_sigma_action(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    SigmaAction act;
    act.algebra = &a;
    for (std::size_t e = 0; e < g.num_objects; ++e)
        act.object_commutant.push_back(corner_commutant(a, int(e)));
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        act.sections.push_back(find_sigma_section(a, int(s)));
        const Subspace& dom_c = act.object_commutant[g.dom[s]];
        const Subspace& cod_c = act.object_commutant[g.cod[s]];
        Matrix map(dom_c.dim(), cod_c.dim(), a.field());
        for (std::size_t i = 0; i < dom_c.dim(); ++i) {
            Element img = act.sections.back().apply(a.element(dom_c.basis.row(i)));
            auto co = coords_in(cod_c.basis, img.coeffs);
            if (!co)
                throw std::logic_error(
                    "sigma image escapes the codomain commutant at morphism " +
                    std::to_string(s));
            for (std::size_t j = 0; j < cod_c.dim(); ++j) map.at(i, j) = (*co)[j];
        }
        act.maps.push_back(std::move(map));
    }
    return act;
}

Element sigma_apply(const SigmaAction& act, int s, const Element& x) {
    const Groupoid& g = act.algebra->groupoid();
    if (!act.object_commutant[g.dom[s]].contains(x))
        throw std::invalid_argument("element outside C_R(R_{d(s)})");
    return act.sections[s].apply(x);
}

std::vector<CheckResult> check_sigma_functor(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    SigmaAction act = build_sigma_action(a);
    std::vector<CheckResult> out;

    {
        CheckResult c{"sigma_identity"};
        for (std::size_t e = 0; e < g.num_objects; ++e) {
            int id = g.identity_of[e];
            if (!(act.maps[id] ==
                  Matrix::identity(act.object_commutant[e].dim(), a.field()))) {
                c.pass = false;
                c.detail = "sigma at identity of object " + std::to_string(e) +
                           " is not the identity map";
            }
        }
        out.push_back(c);
    }
    {
        CheckResult c{"sigma_functorial"};
        for (std::size_t s = 0; s < g.num_morphisms; ++s)
            for (std::size_t t = 0; t < g.num_morphisms; ++t) {
                if (g.dom[s] != g.cod[t]) continue;
                int st = g.compose(int(s), int(t));
                if (!(act.maps[st] == act.maps[t] * act.maps[s])) {
                    c.pass = false;
                    c.detail = "sigma_(st) != sigma_s o sigma_t at (" +
                               std::to_string(s) + "," + std::to_string(t) + ")";
                }
            }
        out.push_back(c);
    }
    {
        CheckResult c{"sigma_multiplicative"};
        for (std::size_t s = 0; s < g.num_morphisms; ++s) {
            const Subspace& dc = act.object_commutant[g.dom[s]];
            for (std::size_t i = 0; i < dc.dim(); ++i)
                for (std::size_t j = 0; j < dc.dim(); ++j) {
                    Element x = a.element(dc.basis.row(i)),
                            y = a.element(dc.basis.row(j));
                    if (!(act.sections[s].apply(mul(x, y)) ==
                          mul(act.sections[s].apply(x), act.sections[s].apply(y)))) {
                        c.pass = false;
                        c.detail = "multiplicativity fails at morphism " +
                                   std::to_string(s);
                    }
                }
        }
        out.push_back(c);
    }
    {
        CheckResult c{"sigma_section_independent"};
        bool any = false;
        for (std::size_t s = 0; s < g.num_morphisms; ++s) {
            SigmaSection alt;
            try {
                alt = find_sigma_section(a, int(s), /*alternate=*/true);
            } catch (const std::runtime_error&) {
                continue;  // unique section at s
            }
            any = true;
            const Subspace& dc = act.object_commutant[g.dom[s]];
            for (std::size_t i = 0; i < dc.dim(); ++i) {
                Element x = a.element(dc.basis.row(i));
                if (!(act.sections[s].apply(x) == alt.apply(x))) {
                    c.pass = false;
                    c.detail = "section choice changes sigma at morphism " +
                               std::to_string(s);
                }
            }
        }
        c.vacuous = !any;
        out.push_back(c);
    }
    {
        CheckResult c{"sigma_characterization"};
        for (std::size_t s = 0; s < g.num_morphisms; ++s) {
            const Subspace& dc = act.object_commutant[g.dom[s]];
            for (std::size_t i = 0; i < dc.dim(); ++i) {
                Element x = a.element(dc.basis.row(i));
                Element sx = act.sections[s].apply(x);
                for (std::size_t r : a.basis_of_degree(int(s))) {
                    Element rs = a.basis_element(r);
                    if (!(mul(sx, rs) == mul(rs, x))) {
                        c.pass = false;
                        c.detail = "sigma_s(x) r_s != r_s x at morphism " +
                                   std::to_string(s);
                    }
                }
            }
        }
        out.push_back(c);
    }
    {
        CheckResult c{"sigma_preserves_commutant"};
        for (std::size_t s = 0; s < g.num_morphisms; ++s) {
            const Subspace& dc = act.object_commutant[g.dom[s]];
            const Subspace& cc = act.object_commutant[g.cod[s]];
            for (std::size_t i = 0; i < dc.dim(); ++i)
                if (!cc.contains(act.sections[s].apply(a.element(dc.basis.row(i))))) {
                    c.pass = false;
                    c.detail = "image leaves C_R(R_{c(s)}) at morphism " +
                               std::to_string(s);
                }
        }
        out.push_back(c);
    }
    {
        CheckResult c{"sigma_preserves_center"};
        for (std::size_t s = 0; s < g.num_morphisms; ++s) {
            Subspace zd = center_of_component(a, g.dom[s]);
            Subspace zc = center_of_component(a, g.cod[s]);
            for (std::size_t i = 0; i < zd.dim(); ++i)
                if (!zc.contains(act.sections[s].apply(a.element(zd.basis.row(i))))) {
                    c.pass = false;
                    c.detail = "image leaves Z(R_{c(s)}) at morphism " +
                               std::to_string(s);
                }
        }
        out.push_back(c);
    }
    return out;
}

Subspace center_via_sigma(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    SigmaAction act = build_sigma_action(a);

    std::vector<std::size_t> offset(g.num_objects + 1, 0);
    for (std::size_t e = 0; e < g.num_objects; ++e)
        offset[e + 1] = offset[e] + act.object_commutant[e].dim();
    const std::size_t total = offset[g.num_objects];

    // unknowns: coordinates of x_e in the C_R(R_e) bases, concatenated;
    // constraints: sigma_s(x_{d(s)}) = x_{c(s)} in codomain coordinates
    Matrix eqs(0, total, a.field());
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        int d = g.dom[s], c = g.cod[s];
        std::size_t cdim = act.object_commutant[c].dim();
        Matrix block(cdim, total, a.field());
        for (std::size_t j = 0; j < cdim; ++j) {
            for (std::size_t i = 0; i < act.object_commutant[d].dim(); ++i)
                block.at(j, offset[d] + i) = act.maps[s].at(i, j);
            block.at(j, offset[c] + j) -= Scalar::one(a.field());
        }
        eqs = eqs.vstack(block);
    }

    Matrix sols = nullspace(eqs);
    Matrix embedded(0, a.dim(), a.field());
    for (std::size_t r = 0; r < sols.rows(); ++r) {
        std::vector<Scalar> v(a.dim(), Scalar::zero(a.field()));
        for (std::size_t e = 0; e < g.num_objects; ++e)
            for (std::size_t i = 0; i < act.object_commutant[e].dim(); ++i)
                for (std::size_t k = 0; k < a.dim(); ++k)
                    v[k] += sols.at(r, offset[e] + i) *
                            act.object_commutant[e].basis.at(i, k);
        embedded.append_row(v);
    }
    return {&a, row_space(embedded)};
}

}  // namespace grl
