#include "grl/groupoid.hpp"

#include <numeric>
#include <stdexcept>

namespace grl {

bool Groupoid::composable(int s, int t) const {
    if (s < 0 || t < 0 || std::size_t(s) >= num_morphisms ||
        std::size_t(t) >= num_morphisms)
        throw std::out_of_range("morphism index out of range");
    return dom[s] == cod[t];
}

int Groupoid::compose(int s, int t) const {
    return compose_table[s][t];
}

namespace {

void structural_check(const Groupoid& g, ValidationReport& rep) {
    auto bad = [&](const std::string& d) {
        rep.violations.push_back({"structure", d});
    };
    if (g.num_objects == 0) bad("no objects");
    if (g.dom.size() != g.num_morphisms || g.cod.size() != g.num_morphisms)
        bad("dom/cod table size mismatch");
    if (g.compose_table.size() != g.num_morphisms)
        bad("compose table size mismatch");
    for (const auto& row : g.compose_table)
        if (row.size() != g.num_morphisms) bad("ragged compose table");
    if (g.identity_of.size() != g.num_objects) bad("identity_of size mismatch");
    if (!g.inverse.empty() && g.inverse.size() != g.num_morphisms)
        bad("inverse table size mismatch");
}

}  // namespace

ValidationReport validate(const Groupoid& g) {
    ValidationReport rep;
    structural_check(g, rep);
    if (!rep.ok()) return rep;
    const std::size_t m = g.num_morphisms;

    for (std::size_t e = 0; e < g.num_objects; ++e) {
        int id = g.identity_of[e];
        if (id < 0 || std::size_t(id) >= m || g.dom[id] != int(e) ||
            g.cod[id] != int(e))
            rep.violations.push_back(
                {"identity", "identity_of(" + std::to_string(e) +
                                 ") is not an endomorphism of the object"});
    }

    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            int c = g.compose_table[s][t];
            bool defined = c != Groupoid::kUndefined;
            bool should = g.dom[s] == g.cod[t];
            if (defined != should) {
                rep.violations.push_back(
                    {"domain-mismatch",
                     "compose(" + std::to_string(s) + "," + std::to_string(t) +
                         ") " + (defined ? "defined" : "undefined") +
                         " but dom/cod " + (should ? "match" : "differ")});
                continue;
            }
            if (defined) {
                if (c < 0 || std::size_t(c) >= m || g.dom[c] != g.dom[t] ||
                    g.cod[c] != g.cod[s])
                    rep.violations.push_back(
                        {"composition",
                         "composite of (" + std::to_string(s) + "," +
                             std::to_string(t) + ") has wrong dom/cod"});
            }
        }
    if (!rep.ok()) return rep;

    // associativity on all triply-composable triples
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            if (g.dom[s] != g.cod[t]) continue;
            for (std::size_t r = 0; r < m; ++r) {
                if (g.dom[t] != g.cod[r]) continue;
                if (g.compose(g.compose(s, t), r) !=
                    g.compose(s, g.compose(t, r)))
                    rep.violations.push_back(
                        {"associativity", "(" + std::to_string(s) + "," +
                                              std::to_string(t) + "," +
                                              std::to_string(r) + ")"});
            }
        }

    for (std::size_t s = 0; s < m; ++s) {
        if (g.compose(g.identity_of[g.cod[s]], int(s)) != int(s) ||
            g.compose(int(s), g.identity_of[g.dom[s]]) != int(s))
            rep.violations.push_back(
                {"identity-law", "morphism " + std::to_string(s)});
    }

    if (g.has_inverses()) {
        for (std::size_t s = 0; s < m; ++s) {
            int inv = g.inverse[s];
            if (inv < 0 || std::size_t(inv) >= m || g.dom[inv] != g.cod[s] ||
                g.cod[inv] != g.dom[s] ||
                g.compose(int(s), inv) != g.identity_of[g.cod[s]] ||
                g.compose(inv, int(s)) != g.identity_of[g.dom[s]]) {
                rep.violations.push_back(
                    {"inverse-law", "morphism " + std::to_string(s)});
            }
        }
    }

    // left/right cancellation on the composition table
    rep.cancellable = true;
    for (std::size_t s = 0; s < m && rep.cancellable; ++s)
        for (std::size_t t = 0; t < m && rep.cancellable; ++t)
            for (std::size_t u = t + 1; u < m; ++u) {
                if (g.dom[s] == g.cod[t] && g.dom[s] == g.cod[u] &&
                    g.compose(int(s), int(t)) == g.compose(int(s), int(u))) {
                    rep.cancellable = false;
                    break;
                }
                if (g.cod[s] == g.dom[t] && g.cod[s] == g.dom[u] &&
                    g.compose(int(t), int(s)) == g.compose(int(u), int(s))) {
                    rep.cancellable = false;
                    break;
                }
            }
    return rep;
}

ComponentSplit connected_components(const Groupoid& g) {
    if (!validate(g).ok())
        throw std::invalid_argument("connected_components: invalid groupoid");
    ComponentSplit split;
    split.object_class.assign(g.num_objects, -1);

    // union-find over objects
    std::vector<int> parent(g.num_objects);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t s = 0; s < g.num_morphisms; ++s)
        parent[find(g.dom[s])] = find(g.cod[s]);

    int next = 0;
    for (std::size_t e = 0; e < g.num_objects; ++e) {
        int root = find(int(e));
        if (split.object_class[root] == -1) split.object_class[root] = next++;
        split.object_class[e] = split.object_class[root];
    }

    split.part_objects.resize(next);
    split.part_morphisms.resize(next);
    std::vector<int> obj_local(g.num_objects), mor_local(g.num_morphisms);
    for (std::size_t e = 0; e < g.num_objects; ++e) {
        int c = split.object_class[e];
        obj_local[e] = int(split.part_objects[c].size());
        split.part_objects[c].push_back(int(e));
    }
    for (std::size_t s = 0; s < g.num_morphisms; ++s) {
        int c = split.object_class[g.dom[s]];
        mor_local[s] = int(split.part_morphisms[c].size());
        split.part_morphisms[c].push_back(int(s));
    }

    for (int c = 0; c < next; ++c) {
        Groupoid part;
        part.num_objects = split.part_objects[c].size();
        part.num_morphisms = split.part_morphisms[c].size();
        part.identity_of.resize(part.num_objects);
        for (int gm : split.part_morphisms[c]) {
            part.dom.push_back(obj_local[g.dom[gm]]);
            part.cod.push_back(obj_local[g.cod[gm]]);
        }
        part.compose_table.assign(
            part.num_morphisms,
            std::vector<int>(part.num_morphisms, Groupoid::kUndefined));
        for (std::size_t i = 0; i < part.num_morphisms; ++i)
            for (std::size_t j = 0; j < part.num_morphisms; ++j) {
                int gij = g.compose(split.part_morphisms[c][i],
                                    split.part_morphisms[c][j]);
                if (gij != Groupoid::kUndefined)
                    part.compose_table[i][j] = mor_local[gij];
            }
        for (int ge : split.part_objects[c])
            part.identity_of[obj_local[ge]] = mor_local[g.identity_of[ge]];
        if (g.has_inverses()) {
            part.inverse.resize(part.num_morphisms);
            for (std::size_t i = 0; i < part.num_morphisms; ++i)
                part.inverse[i] = mor_local[g.inverse[split.part_morphisms[c][i]]];
        }
        split.parts.push_back(std::move(part));
    }
    return split;
}

Groupoid build_thin_connected(std::size_t k) {
    if (k == 0) throw std::invalid_argument("build_thin_connected: k = 0");
    Groupoid g;
    g.num_objects = k;
    g.num_morphisms = k * k;
    // morphism (i,j) : j -> i, index i*k + j
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            g.cod.push_back(int(i));
            g.dom.push_back(int(j));
        }
    g.compose_table.assign(g.num_morphisms,
                           std::vector<int>(g.num_morphisms, Groupoid::kUndefined));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                g.compose_table[i * k + j][j * k + l] = int(i * k + l);
    g.inverse.resize(g.num_morphisms);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g.inverse[i * k + j] = int(j * k + i);
    for (std::size_t i = 0; i < k; ++i)
        g.identity_of.push_back(int(i * k + i));
    return g;
}

Groupoid build_group(const std::vector<std::vector<int>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("empty Cayley table");
    for (const auto& row : table) {
        if (row.size() != n) throw std::invalid_argument("ragged Cayley table");
        for (int v : row)
            if (v < 0 || std::size_t(v) >= n)
                throw std::invalid_argument("Cayley entry out of range");
    }
    // locate two-sided identity
    int id = -1;
    for (std::size_t e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (std::size_t s = 0; s < n; ++s)
            ok = ok && table[e][s] == int(s) && table[s][e] == int(s);
        if (ok) id = int(e);
    }
    if (id < 0) throw std::invalid_argument("Cayley table has no identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("Cayley table not associative");
    std::vector<int> inv(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == id && table[b][a] == id) inv[a] = int(b);
        if (inv[a] < 0)
            throw std::invalid_argument("Cayley table missing an inverse");
    }

    Groupoid g;
    g.num_objects = 1;
    g.num_morphisms = n;
    g.dom.assign(n, 0);
    g.cod.assign(n, 0);
    g.compose_table = table;
    g.inverse = inv;
    g.identity_of = {id};
    return g;
}

Groupoid disjoint_union(const std::vector<Groupoid>& parts) {
    if (parts.empty())
        throw std::invalid_argument("disjoint_union of no parts");
    Groupoid g;
    bool all_inv = true;
    for (const auto& p : parts) all_inv = all_inv && p.has_inverses();
    std::size_t obj_off = 0, mor_off = 0;
    for (const auto& p : parts) {
        obj_off += p.num_objects;
        mor_off += p.num_morphisms;
    }
    g.num_objects = obj_off;
    g.num_morphisms = mor_off;
    g.compose_table.assign(mor_off,
                           std::vector<int>(mor_off, Groupoid::kUndefined));
    obj_off = mor_off = 0;
    for (const auto& p : parts) {
        for (std::size_t s = 0; s < p.num_morphisms; ++s) {
            g.dom.push_back(p.dom[s] + int(obj_off));
            g.cod.push_back(p.cod[s] + int(obj_off));
            for (std::size_t t = 0; t < p.num_morphisms; ++t)
                if (p.compose_table[s][t] != Groupoid::kUndefined)
                    g.compose_table[mor_off + s][mor_off + t] =
                        p.compose_table[s][t] + int(mor_off);
            if (all_inv) g.inverse.push_back(p.inverse[s] + int(mor_off));
        }
        for (std::size_t e = 0; e < p.num_objects; ++e)
            g.identity_of.push_back(p.identity_of[e] + int(mor_off));
        obj_off += p.num_objects;
        mor_off += p.num_morphisms;
    }
    return g;
}

}  // namespace grl
