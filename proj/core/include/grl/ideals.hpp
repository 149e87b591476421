#pragma once

#include "grl/graded_algebra.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace grl {

struct Ideal {
    const GradedAlgebra* algebra = nullptr;
    Subspace basis;
};

// Smallest two-sided ideal containing the generators: adjoin b*x and x*b for
// every algebra basis b until the span is stable.
Ideal ideal_closure(const GradedAlgebra& a, const std::vector<Element>& generators);

Subspace intersect_with(const Ideal& i, const Subspace& s);

struct NonzeroIdealResult {
    bool holds = true;
    int failing_morphism = -1;
    std::optional<Element> witness;  // nonzero x in R_s with x * R_{s^-1} = 0
};

// For each morphism s the left kernel {x in R_s : x R_{s^-1} = 0} must be
// zero.
NonzeroIdealResult nonzero_ideal_property(const GradedAlgebra& a);

enum class CheckMode { Exhaustive, Sampled };

struct TheoremReport {
    std::string theorem;
    std::string mode;
    bool hypotheses_ok = true;
    std::string hypothesis_failure;
    bool pass = false;
    std::uint64_t instances_checked = 0;
    std::vector<std::vector<Scalar>> failures;  // witness coefficient vectors
    std::vector<std::string> notes;
};

// Hard cap on exhaustive element enumeration; overridable by callers (the CLI
// wires GRL_MAX_EXHAUSTIVE through here).
inline constexpr std::uint64_t kDefaultMaxExhaustive = std::uint64_t(1) << 20;

// Every nonzero principal ideal must intersect the commutant of Z(R_0)
// nontrivially. Exhaustive mode enumerates all nonzero elements over a finite
// field; sampled mode draws `trials` elements from `seed`.
TheoremReport verify_theorem3(const GradedAlgebra& a, CheckMode mode,
                              std::uint64_t trials = 0, std::uint64_t seed = 0,
                              std::uint64_t max_exhaustive = kDefaultMaxExhaustive,
                              const std::optional<Subspace>& target_override =
                                  std::nullopt);

struct SkewSystem;  // constructions.hpp

// Both directions of the maximal-commutative <-> nonzero-intersection
// equivalence for a skew category algebra with commutative components. When A
// is not maximal commutative the explicit separating ideal is constructed and
// its zero intersection with A confirmed.
TheoremReport verify_theorem4(const SkewSystem& sys, CheckMode mode,
                              std::uint64_t trials = 0, std::uint64_t seed = 0,
                              std::uint64_t max_exhaustive = kDefaultMaxExhaustive);

// Shared enumeration helper: visits all nonzero coefficient vectors of length
// dim over GF(p) (mode Exhaustive) or `trials` seeded pseudo-random nonzero
// vectors. Returns the number visited.
std::uint64_t for_each_test_element(
    const GradedAlgebra& a, CheckMode mode, std::uint64_t trials,
    std::uint64_t seed, std::uint64_t max_exhaustive,
    const std::function<void(const Element&)>& fn);

}  // namespace grl
