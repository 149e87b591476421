#pragma once

#include "grl/groupoid.hpp"
#include "grl/matrix.hpp"

#include <map>
#include <memory>
#include <vector>

namespace grl {

class GradedAlgebra;

// Coefficient vector over an algebra's basis.
struct Element {
    const GradedAlgebra* algebra = nullptr;
    std::vector<Scalar> coeffs;

    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;  // algebra product
    Element scaled(const Scalar& c) const;
    bool operator==(const Element& o) const;
};

// Linear subspace of an algebra, held as a zero-row-free rref basis matrix so
// equality of subspaces is equality of matrices.
struct Subspace {
    const GradedAlgebra* algebra = nullptr;
    Matrix basis;  // rref, rows independent

    std::size_t dim() const { return basis.rows(); }
    bool contains(const Element& x) const;
    bool operator==(const Subspace& o) const {
        return algebra == o.algebra && basis == o.basis;
    }
};

struct SparseEntry {
    std::size_t i, j, k;
    Scalar value;
};

// Finite-dimensional unital algebra graded by a category: every basis vector
// carries a degree (a morphism), products come from structure constants.
class GradedAlgebra {
  public:
    GradedAlgebra(Groupoid groupoid, std::size_t dim, FieldDesc field,
                  std::vector<int> degree, const std::vector<SparseEntry>& structure,
                  std::vector<Scalar> unit);

    const Groupoid& groupoid() const { return groupoid_; }
    std::size_t dim() const { return dim_; }
    const FieldDesc& field() const { return field_; }
    int degree(std::size_t basis_index) const { return degree_[basis_index]; }
    const std::vector<int>& degrees() const { return degree_; }
    const std::vector<Scalar>& unit_coeffs() const { return unit_; }
    std::vector<SparseEntry> structure_entries() const;

    Element zero() const;
    Element unit() const;
    Element basis_element(std::size_t i) const;
    Element element(std::vector<Scalar> coeffs) const;

    // product of basis vectors i, j as a coefficient vector
    const std::vector<Scalar>& basis_product(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    std::vector<std::size_t> basis_of_degree(int s) const;
    Subspace subspace(const Matrix& rows) const;
    Subspace span(const std::vector<Element>& gens) const;
    Subspace component_subspace(int s) const;   // R_s
    Subspace full_subspace() const;             // R itself

  private:
    Groupoid groupoid_;
    std::size_t dim_;
    FieldDesc field_;
    std::vector<int> degree_;
    std::vector<std::vector<Scalar>> table_;  // dense dim x dim products
    std::vector<Scalar> unit_;
};

Element mul(const Element& x, const Element& y);

// Projection of x onto the degree-s span.
Element component(const Element& x, int s);

// Associativity, unit laws, and the grading law on all basis pairs/triples.
ValidationReport validate_grading(const GradedAlgebra& a);

// The decomposition 1_R = sum of 1_e over objects, for cancellable gradings.
// Throws std::invalid_argument if the unit has a nonzero component at a
// non-identity degree.
std::map<int, Element> identity_decomposition(const GradedAlgebra& a);

struct SupportSubcategory {
    Groupoid subcategory;
    std::vector<int> morphism_map;  // sub morphism -> original morphism
    std::vector<int> object_map;    // sub object -> original object
};

// The subcategory H of morphisms s with 1_{d(s)} != 0 != 1_{c(s)}.
SupportSubcategory support_subcategory(const GradedAlgebra& a);

struct StrongGradingResult {
    bool strongly_graded = true;
    int failing_morphism = -1;
    std::optional<Subspace> achieved;  // span R_s R_{s^-1} at the failure
};

// Checks span(R_s R_{s^-1}) = R_{c(s)} for every morphism s.
StrongGradingResult is_strongly_graded(const GradedAlgebra& a);

// Span of all identity-degree basis vectors, R_0.
Subspace principal_component(const GradedAlgebra& a);

}  // namespace grl
