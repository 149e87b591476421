#pragma once

#include "grl/graded_algebra.hpp"

#include <optional>

namespace grl {

// Plain finite-dimensional unital associative algebra, used for the component
// rings of skew and crossed systems.
struct FiniteAlgebra {
    FieldDesc field;
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Scalar>>> table;  // [i][j] -> coeffs
    std::vector<Scalar> unit;

    std::vector<Scalar> mul(const std::vector<Scalar>& x,
                            const std::vector<Scalar>& y) const;
    ValidationReport validate() const;

    static FiniteAlgebra ground_field(const FieldDesc& f);
    // K x K x ... x K with componentwise product
    static FiniteAlgebra product_field(const FieldDesc& f, std::size_t copies);
};

// {A, G, sigma}: one component ring per object, a linear map per morphism.
struct SkewSystem {
    Groupoid groupoid;
    FieldDesc field;
    std::vector<FiniteAlgebra> components;  // per object
    std::vector<Matrix> sigma;              // per morphism: A_{d(s)} -> A_{c(s)}

    ValidationReport validate() const;
};

// {A, G, sigma, alpha} over a one-object groupoid (a group).
struct CrossedSystem {
    Groupoid group;
    FieldDesc field;
    FiniteAlgebra ring;
    std::vector<Matrix> sigma;                       // per group element
    std::vector<std::vector<std::vector<Scalar>>> alpha;  // [s][t] -> element of A

    ValidationReport validate() const;
};

// Section s_1..s_n of morphisms defining the subspace grading of M_n(K).
struct MatrixGradingSpec {
    Groupoid groupoid;
    FieldDesc field;
    std::vector<int> section;
};

// Basis {a u_s}, product (a u_s)(b u_t) = a sigma_s(b) u_{st}.
// Throws std::invalid_argument when the system fails validation.
GradedAlgebra build_skew_algebra(const SkewSystem& sys);

// Basis {a u_s}, product (a u_s)(b u_t) = a sigma_s(b) alpha(s,t) u_{st}.
GradedAlgebra build_crossed_product(const CrossedSystem& sys);

// Matrix units e_ij with s_i s = s_j get degree s; requires a cancellable
// groupoid so the degrees are well defined and the sum is direct.
GradedAlgebra build_matrix_graded(const MatrixGradingSpec& spec);

enum class Freeness { Free, NotFreeByDimension, NotFree, Undetermined };

struct FreenessResult {
    Freeness status = Freeness::Undetermined;
    std::optional<Element> generator;  // u with x -> x*u bijective, when Free
};

// Whether R_s is free on one generator as a left R_{c(s)}-module. Finite
// fields enumerate candidates up to `cap`; the rational path samples
// deterministically and can report Undetermined.
FreenessResult is_free_rank_one(const GradedAlgebra& a, int s,
                                std::uint64_t cap = std::uint64_t(1) << 20);

struct Theorem5Report {
    bool strongly_graded = false;
    // per nontrivial connected component: a morphism with a non-free component
    std::vector<int> non_free_witnesses;
    std::vector<std::vector<int>> sections_used;  // per component, global indices
    std::vector<std::string> notes;
};

// A ring strongly graded by g with, per nontrivial connected component, some
// component that is not free of rank one. Throws std::invalid_argument when g
// has only identity morphisms.
std::pair<GradedAlgebra, Theorem5Report> build_theorem5_witness(
    const Groupoid& g, const FieldDesc& field);

}  // namespace grl
