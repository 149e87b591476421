#pragma once

#include "grl/graded_algebra.hpp"

#include <map>

namespace grl {

// {x in R : xy = yx for every basis y of s}
Subspace commutant(const GradedAlgebra& a, const Subspace& s);

// C_R(R_0) split by degree: morphism -> C_R(R_0) ∩ R_s.
// Asserts the degreewise description of the commutant of the principal
// component and its compatibility with the direct computation; violations
// throw std::logic_error since they indicate corrupt data.
std::map<int, Subspace> graded_commutant(const GradedAlgebra& a);

// R_0 commutative (precondition, std::invalid_argument otherwise) and equal
// to its own commutant.
bool is_maximal_commutative(const GradedAlgebra& a);

// Center as the nullspace of all basis commutator maps.
Subspace center_direct(const GradedAlgebra& a);

// Paired homogeneous elements with sum(a_i * b_i) = 1_{c(s)}.
struct SigmaSection {
    int morphism = -1;
    std::vector<std::pair<Element, Element>> pairs;

    Element apply(const Element& x) const;  // sum a_i x b_i
};

// Solves for a section at s; throws std::invalid_argument when none exists
// (the grading is not strong at s). When alternate is true, returns a second,
// different section if the solution space allows one; otherwise throws
// std::runtime_error("no alternate section").
SigmaSection find_sigma_section(const GradedAlgebra& a, int s,
                                bool alternate = false);

// The grading-induced maps sigma_s on the commutants C_R(R_e), materialized
// as matrices on commutant bases.
struct SigmaAction {
    const GradedAlgebra* algebra = nullptr;
    std::vector<SigmaSection> sections;       // per morphism
    std::vector<Subspace> object_commutant;   // per object: C_R(R_e)
    std::vector<Matrix> maps;  // per morphism: domain-basis -> codomain coords
};

SigmaAction build_sigma_action(const GradedAlgebra& a);

// sigma_s(x); x must lie in C_R(R_{d(s)}).
Element sigma_apply(const SigmaAction& act, int s, const Element& x);

struct CheckResult {
    std::string name;
    bool pass = true;
    bool vacuous = false;
    std::string detail;
};

// sigma_e = id, functoriality, multiplicativity, section independence,
// the characterization sigma_s(x) r_s = r_s x, and the commutant/center
// containments of the images.
std::vector<CheckResult> check_sigma_functor(const GradedAlgebra& a);

// Center from the compatibility system sigma_s(x_{d(s)}) = x_{c(s)}.
Subspace center_via_sigma(const GradedAlgebra& a);

}  // namespace grl
