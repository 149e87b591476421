#include "grl/graded_algebra.hpp"

#include <stdexcept>

namespace grl {

bool Element::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

Element Element::operator+(const Element& o) const {
    if (algebra != o.algebra) throw std::invalid_argument("algebra mismatch");
    Element r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    if (algebra != o.algebra) throw std::invalid_argument("algebra mismatch");
    Element r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

Element Element::operator*(const Element& o) const { return mul(*this, o); }

Element Element::scaled(const Scalar& c) const {
    Element r = *this;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

bool Element::operator==(const Element& o) const {
    return algebra == o.algebra && coeffs == o.coeffs;
}

bool Subspace::contains(const Element& x) const {
    return in_row_space(basis, x.coeffs);
}

GradedAlgebra::GradedAlgebra(Groupoid groupoid, std::size_t dim,
                             FieldDesc field, std::vector<int> degree,
                             const std::vector<SparseEntry>& structure,
                             std::vector<Scalar> unit)
    : groupoid_(std::move(groupoid)), dim_(dim), field_(field),
      degree_(std::move(degree)), unit_(std::move(unit)) {
    if (degree_.size() != dim_)
        throw std::invalid_argument("degree list length != dim");
    for (int d : degree_)
        if (d < 0 || std::size_t(d) >= groupoid_.num_morphisms)
            throw std::invalid_argument("degree is not a morphism index");
    if (unit_.size() != dim_)
        throw std::invalid_argument("unit coefficient length != dim");
    table_.assign(dim_ * dim_, std::vector<Scalar>(dim_, Scalar::zero(field_)));
    for (const auto& e : structure) {
        if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
            throw std::invalid_argument("structure index out of range");
        if (e.value.field() != field_) throw FieldMismatch();
        table_[e.i * dim_ + e.j][e.k] += e.value;
    }
    for (const auto& c : unit_)
        if (c.field() != field_) throw FieldMismatch();
}

std::vector<SparseEntry> GradedAlgebra::structure_entries() const {
    std::vector<SparseEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (!table_[i * dim_ + j][k].is_zero())
                    out.push_back({i, j, k, table_[i * dim_ + j][k]});
    return out;
}

Element GradedAlgebra::zero() const {
    return {this, std::vector<Scalar>(dim_, Scalar::zero(field_))};
}

Element GradedAlgebra::unit() const { return {this, unit_}; }

Element GradedAlgebra::basis_element(std::size_t i) const {
    Element e = zero();
    e.coeffs[i] = Scalar::one(field_);
    return e;
}

Element GradedAlgebra::element(std::vector<Scalar> coeffs) const {
    if (coeffs.size() != dim_)
        throw std::invalid_argument("coefficient length != dim");
    return {this, std::move(coeffs)};
}

std::vector<std::size_t> GradedAlgebra::basis_of_degree(int s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i)
        if (degree_[i] == s) out.push_back(i);
    return out;
}

Subspace GradedAlgebra::subspace(const Matrix& rows) const {
    return {this, row_space(rows)};
}

Subspace GradedAlgebra::span(const std::vector<Element>& gens) const {
    Matrix m(0, dim_, field_);
    for (const auto& g : gens) {
        if (g.algebra != this) throw std::invalid_argument("algebra mismatch");
        m.append_row(g.coeffs);
    }
    return subspace(m);
}

Subspace GradedAlgebra::component_subspace(int s) const {
    Matrix m(0, dim_, field_);
    for (std::size_t i : basis_of_degree(s))
        m.append_row(basis_element(i).coeffs);
    return subspace(m);
}

Subspace GradedAlgebra::full_subspace() const {
    return {this, Matrix::identity(dim_, field_)};
}

Element mul(const Element& x, const Element& y) {
    if (x.algebra == nullptr || x.algebra != y.algebra)
        throw std::invalid_argument("algebra mismatch in mul");
    const GradedAlgebra& a = *x.algebra;
    Element r = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (y.coeffs[j].is_zero()) continue;
            Scalar c = x.coeffs[i] * y.coeffs[j];
            const auto& prod = a.basis_product(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!prod[k].is_zero()) r.coeffs[k] += c * prod[k];
        }
    }
    return r;
}

Element component(const Element& x, int s) {
    const GradedAlgebra& a = *x.algebra;
    Element r = a.zero();
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.degree(i) == s) r.coeffs[i] = x.coeffs[i];
    return r;
}

ValidationReport validate_grading(const GradedAlgebra& a) {
    ValidationReport rep;
    const Groupoid& g = a.groupoid();
    const std::size_t n = a.dim();

    // grading law on basis pairs
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int s = a.degree(i), t = a.degree(j);
            const auto& prod = a.basis_product(i, j);
            if (g.dom[s] != g.cod[t]) {
                for (std::size_t k = 0; k < n; ++k)
                    if (!prod[k].is_zero()) {
                        rep.violations.push_back(
                            {"grading",
                             "b" + std::to_string(i) + "*b" + std::to_string(j) +
                                 " nonzero but degrees not composable"});
                        break;
                    }
            } else {
                int st = g.compose(s, t);
                for (std::size_t k = 0; k < n; ++k)
                    if (!prod[k].is_zero() && a.degree(k) != st) {
                        rep.violations.push_back(
                            {"grading",
                             "b" + std::to_string(i) + "*b" + std::to_string(j) +
                                 " has support outside degree " +
                                 std::to_string(st)});
                        break;
                    }
            }
        }

    // unit laws
    Element one = a.unit();
    for (std::size_t i = 0; i < n; ++i) {
        Element b = a.basis_element(i);
        if (!(mul(one, b) == b) || !(mul(b, one) == b))
            rep.violations.push_back({"unit-law", "b" + std::to_string(i)});
    }
    if (one.is_zero()) rep.violations.push_back({"unit-law", "unit is zero"});

    // associativity on all basis triples
    for (std::size_t i = 0; i < n; ++i) {
        Element bi = a.basis_element(i);
        for (std::size_t j = 0; j < n; ++j) {
            Element bij = mul(bi, a.basis_element(j));
            for (std::size_t k = 0; k < n; ++k) {
                Element bk = a.basis_element(k);
                if (!(mul(bij, bk) == mul(bi, mul(a.basis_element(j), bk))))
                    rep.violations.push_back(
                        {"associativity", "(" + std::to_string(i) + "," +
                                              std::to_string(j) + "," +
                                              std::to_string(k) + ")"});
            }
        }
    }
    return rep;
}

std::map<int, Element> identity_decomposition(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    Element one = a.unit();
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        if (g.is_identity(int(s))) continue;
        if (!component(one, int(s)).is_zero())
            throw std::invalid_argument(
                "unit has a nonzero component at non-identity degree " +
                std::to_string(s));
    }
    std::map<int, Element> out;
    for (std::size_t e = 0; e < g.num_objects; ++e)
        out[int(e)] = component(one, g.identity_of[e]);
    return out;
}

SupportSubcategory support_subcategory(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    auto ones = identity_decomposition(a);
    std::vector<bool> live_obj(g.num_objects);
    for (std::size_t e = 0; e < g.num_objects; ++e)
        live_obj[e] = !ones[int(e)].is_zero();

    SupportSubcategory out;
    std::vector<int> mor_local(g.num_morphisms, -1),
        obj_local(g.num_objects, -1);
    for (std::size_t e = 0; e < g.num_objects; ++e)
        if (live_obj[e]) {
            obj_local[e] = int(out.object_map.size());
            out.object_map.push_back(int(e));
        }
    for (std::size_t s = 0; s < g.num_morphisms; ++s)
        if (live_obj[g.dom[s]] && live_obj[g.cod[s]]) {
            mor_local[s] = int(out.morphism_map.size());
            out.morphism_map.push_back(int(s));
        }

    Groupoid& h = out.subcategory;
    h.num_objects = out.object_map.size();
    h.num_morphisms = out.morphism_map.size();
    for (int s : out.morphism_map) {
        h.dom.push_back(obj_local[g.dom[s]]);
        h.cod.push_back(obj_local[g.cod[s]]);
    }
    h.compose_table.assign(h.num_morphisms,
                           std::vector<int>(h.num_morphisms, Groupoid::kUndefined));
    for (std::size_t i = 0; i < h.num_morphisms; ++i)
        for (std::size_t j = 0; j < h.num_morphisms; ++j) {
            int c = g.compose(out.morphism_map[i], out.morphism_map[j]);
            if (c != Groupoid::kUndefined) h.compose_table[i][j] = mor_local[c];
        }
    for (int e : out.object_map)
        h.identity_of.push_back(mor_local[g.identity_of[e]]);
    if (g.has_inverses()) {
        h.inverse.resize(h.num_morphisms);
        for (std::size_t i = 0; i < h.num_morphisms; ++i)
            h.inverse[i] = mor_local[g.inverse[out.morphism_map[i]]];
    }
    return out;
}

StrongGradingResult is_strongly_graded(const GradedAlgebra& a) {
    const Groupoid& g = a.groupoid();
    if (!g.has_inverses())
        throw std::invalid_argument("is_strongly_graded needs an inverse table");
    StrongGradingResult res;
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        int sinv = g.inverse[s];
        std::vector<Element> prods;
        for (std::size_t i : a.basis_of_degree(int(s)))
            for (std::size_t j : a.basis_of_degree(sinv))
                prods.push_back(mul(a.basis_element(i), a.basis_element(j)));
        Subspace achieved = a.span(prods);
        Subspace target = a.component_subspace(g.identity_of[g.cod[s]]);
        if (!(achieved == target)) {
            res.strongly_graded = false;
            res.failing_morphism = int(s);
            res.achieved = achieved;
            return res;
        }
    }
    return res;
}

Subspace principal_component(const GradedAlgebra& a) {
    Matrix m(0, a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.groupoid().is_identity(a.degree(int(i))))
            m.append_row(a.basis_element(i).coeffs);
    return a.subspace(m);
}

}  // namespace grl
