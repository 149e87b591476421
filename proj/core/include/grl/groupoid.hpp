#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace grl {

struct Violation {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool cancellable = false;
    bool ok() const { return violations.empty(); }
};

// Finite category given by tables. Morphisms and objects are dense indices;
// compose[s][t] is the composite s∘t when d(s)=c(t), kUndefined otherwise.
// The inverse table is optional: categories that are not groupoids are
// admitted.
struct Groupoid {
    static constexpr int kUndefined = -1;

    std::size_t num_objects = 0;
    std::size_t num_morphisms = 0;
    std::vector<int> dom;          // morphism -> object
    std::vector<int> cod;          // morphism -> object
    std::vector<std::vector<int>> compose_table;  // [s][t], kUndefined if not composable
    std::vector<int> inverse;      // morphism -> morphism; empty if absent
    std::vector<int> identity_of;  // object -> identity morphism

    bool has_inverses() const { return !inverse.empty(); }
    bool composable(int s, int t) const;
    int compose(int s, int t) const;  // kUndefined when not composable
    bool is_identity(int s) const {
        return dom[s] == cod[s] && identity_of[dom[s]] == s;
    }

    bool operator==(const Groupoid&) const = default;
};

// Checks structural well-formedness plus the category/groupoid axioms:
// composability domains, associativity, identity laws, inverse laws when the
// table is present. Also reports cancellability of the composition.
ValidationReport validate(const Groupoid& g);

struct ComponentSplit {
    std::vector<int> object_class;             // object -> component index
    std::vector<Groupoid> parts;
    std::vector<std::vector<int>> part_objects;    // part -> global objects
    std::vector<std::vector<int>> part_morphisms;  // part -> global morphisms
};

// Objects e,f share a class iff some morphism e -> f exists; each class
// yields the full subcategory on its objects.
ComponentSplit connected_components(const Groupoid& g);

// The unique thin connected groupoid on k objects (k^2 morphisms).
Groupoid build_thin_connected(std::size_t k);

// One-object groupoid from a group Cayley table (table[i][j] = i*j).
// Throws std::invalid_argument unless the table is a group table.
Groupoid build_group(const std::vector<std::vector<int>>& table);

// Reindexed disjoint union; rejects an empty list.
Groupoid disjoint_union(const std::vector<Groupoid>& parts);

}  // namespace grl
