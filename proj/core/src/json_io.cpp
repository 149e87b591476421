#include "grl/json_io.hpp"

namespace grl {

json field_to_json(const FieldDesc& f) {
    json j;
    j["kind"] = f.kind == FieldDesc::Kind::Rational ? "rational" : "gfp";
    if (f.kind == FieldDesc::Kind::Gfp) j["p"] = f.p;
    return j;
}

FieldDesc field_from_json(const json& j) {
    std::string kind = j.at("kind");
    if (kind == "rational") return FieldDesc::rational();
    if (kind == "gfp") return FieldDesc::gfp(j.at("p").get<std::int64_t>());
    throw std::invalid_argument("unknown field kind: " + kind);
}

json groupoid_to_json(const Groupoid& g) {
    json j;
    j["objects"] = g.num_objects;
    j["morphisms"] = g.num_morphisms;
    j["dom"] = g.dom;
    j["cod"] = g.cod;
    json rows = json::array();
    for (const auto& row : g.compose_table) {
        json r = json::array();
        for (int v : row)
            r.push_back(v == Groupoid::kUndefined ? json(nullptr) : json(v));
        rows.push_back(r);
    }
    j["compose"] = rows;
    j["inverse"] = g.has_inverses() ? json(g.inverse) : json(nullptr);
    j["identity_of"] = g.identity_of;
    return j;
}

Groupoid groupoid_from_json(const json& j) {
    Groupoid g;
    g.num_objects = j.at("objects").get<std::size_t>();
    g.num_morphisms = j.at("morphisms").get<std::size_t>();
    g.dom = j.at("dom").get<std::vector<int>>();
    g.cod = j.at("cod").get<std::vector<int>>();
    for (const auto& row : j.at("compose")) {
        std::vector<int> r;
        for (const auto& v : row)
            r.push_back(v.is_null() ? Groupoid::kUndefined : v.get<int>());
        g.compose_table.push_back(std::move(r));
    }
    if (j.contains("inverse") && !j.at("inverse").is_null())
        g.inverse = j.at("inverse").get<std::vector<int>>();
    if (j.contains("identity_of")) {
        g.identity_of = j.at("identity_of").get<std::vector<int>>();
    } else {
        // recover identities from the composition table
        g.identity_of.assign(g.num_objects, -1);
        for (std::size_t s = 0; s < g.num_morphisms; ++s) {
            if (g.dom[s] != g.cod[s]) continue;
            if (g.compose_table[s][s] == int(s)) {
                bool is_id = true;
                for (std::size_t t = 0; t < g.num_morphisms && is_id; ++t) {
                    if (g.dom[t] == g.dom[s] &&
                        g.compose_table[s][t] != int(t))
                        is_id = false;
                    if (g.cod[t] == g.dom[s] &&
                        g.compose_table[t][s] != int(t))
                        is_id = false;
                }
                if (is_id) g.identity_of[g.dom[s]] = int(s);
            }
        }
    }
    return g;
}

namespace {

json scalars_to_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

std::vector<Scalar> scalars_from_json(const FieldDesc& f, const json& j) {
    std::vector<Scalar> out;
    for (const auto& s : j) out.push_back(Scalar::parse(f, s.get<std::string>()));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(scalars_to_json(m.row(i)));
    return rows;
}

Matrix matrix_from_json(const FieldDesc& f, std::size_t rows, std::size_t cols,
                        const json& j) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i) {
        auto r = scalars_from_json(f, j.at(i));
        if (r.size() != cols) throw std::invalid_argument("ragged matrix json");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = r[c];
    }
    return m;
}

json component_to_json(const FiniteAlgebra& a) {
    json j;
    j["dim"] = a.dim;
    json entries = json::array();
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t jj = 0; jj < a.dim; ++jj)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!a.table[i][jj][k].is_zero())
                    entries.push_back(
                        json::array({i, jj, k, a.table[i][jj][k].to_string()}));
    j["structure"] = entries;
    j["unit"] = scalars_to_json(a.unit);
    return j;
}

FiniteAlgebra component_from_json(const FieldDesc& f, const json& j) {
    FiniteAlgebra a;
    a.field = f;
    a.dim = j.at("dim").get<std::size_t>();
    a.table.assign(a.dim, std::vector<std::vector<Scalar>>(
                              a.dim, std::vector<Scalar>(a.dim, Scalar::zero(f))));
    for (const auto& e : j.at("structure")) {
        std::size_t i = e.at(0), jj = e.at(1), k = e.at(2);
        a.table.at(i).at(jj).at(k) += Scalar::parse(f, e.at(3).get<std::string>());
    }
    a.unit = scalars_from_json(f, j.at("unit"));
    return a;
}

}  // namespace

json algebra_to_json(const GradedAlgebra& a) {
    json j;
    j["groupoid"] = groupoid_to_json(a.groupoid());
    j["dim"] = a.dim();
    j["degree"] = a.degrees();
    json entries = json::array();
    for (const auto& e : a.structure_entries())
        entries.push_back(json::array({e.i, e.j, e.k, e.value.to_string()}));
    j["structure"] = entries;
    j["unit"] = scalars_to_json(a.unit_coeffs());
    j["field"] = field_to_json(a.field());
    return j;
}

GradedAlgebra algebra_from_json(const json& j) {
    FieldDesc f = field_from_json(j.at("field"));
    Groupoid g = groupoid_from_json(j.at("groupoid"));
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<int> degree = j.at("degree").get<std::vector<int>>();
    std::vector<SparseEntry> structure;
    for (const auto& e : j.at("structure"))
        structure.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                             e.at(2).get<std::size_t>(),
                             Scalar::parse(f, e.at(3).get<std::string>())});
    std::vector<Scalar> unit = scalars_from_json(f, j.at("unit"));
    return GradedAlgebra(std::move(g), dim, f, std::move(degree), structure,
                         std::move(unit));
}

json skew_system_to_json(const SkewSystem& sys) {
    json j;
    j["field"] = field_to_json(sys.field);
    j["groupoid"] = groupoid_to_json(sys.groupoid);
    json comps = json::array();
    for (const auto& c : sys.components) comps.push_back(component_to_json(c));
    j["components"] = comps;
    json maps = json::array();
    for (const auto& m : sys.sigma) maps.push_back(matrix_to_json(m));
    j["sigma"] = maps;
    return j;
}

SkewSystem skew_system_from_json(const json& j) {
    SkewSystem sys;
    sys.field = field_from_json(j.at("field"));
    sys.groupoid = groupoid_from_json(j.at("groupoid"));
    for (const auto& c : j.at("components"))
        sys.components.push_back(component_from_json(sys.field, c));
    for (std::size_t s = 0; s < sys.groupoid.num_morphisms; ++s) {
        std::size_t r = sys.components.at(sys.groupoid.dom[s]).dim;
        std::size_t c = sys.components.at(sys.groupoid.cod[s]).dim;
        sys.sigma.push_back(matrix_from_json(sys.field, r, c, j.at("sigma").at(s)));
    }
    return sys;
}

json crossed_system_to_json(const CrossedSystem& sys) {
    json j;
    j["field"] = field_to_json(sys.field);
    j["group"] = groupoid_to_json(sys.group);
    j["ring"] = component_to_json(sys.ring);
    json maps = json::array();
    for (const auto& m : sys.sigma) maps.push_back(matrix_to_json(m));
    j["sigma"] = maps;
    json alpha = json::array();
    for (const auto& row : sys.alpha) {
        json r = json::array();
        for (const auto& v : row) r.push_back(scalars_to_json(v));
        alpha.push_back(r);
    }
    j["alpha"] = alpha;
    return j;
}

CrossedSystem crossed_system_from_json(const json& j) {
    CrossedSystem sys;
    sys.field = field_from_json(j.at("field"));
    sys.group = groupoid_from_json(j.at("group"));
    sys.ring = component_from_json(sys.field, j.at("ring"));
    for (std::size_t s = 0; s < sys.group.num_morphisms; ++s)
        sys.sigma.push_back(matrix_from_json(sys.field, sys.ring.dim,
                                             sys.ring.dim, j.at("sigma").at(s)));
    for (const auto& row : j.at("alpha")) {
        std::vector<std::vector<Scalar>> r;
        for (const auto& v : row) r.push_back(scalars_from_json(sys.field, v));
        sys.alpha.push_back(std::move(r));
    }
    return sys;
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    j["basis"] = matrix_to_json(s.basis);
    return j;
}

json report_to_json(const ValidationReport& r) {
    json j;
    j["ok"] = r.ok();
    j["cancellable"] = r.cancellable;
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"rule", viol.rule}, {"detail", viol.detail}});
    j["violations"] = v;
    return j;
}

std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

}  // namespace grl
