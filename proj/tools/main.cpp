// grl: build, validate, analyze, and check groupoid-graded algebras.
//
// Exit codes: 0 success/pass, 1 usage or load error, 2 theorem hypothesis
// failure, 3 theorem conclusion failure.

#include "grl/analysis.hpp"
#include "grl/constructions.hpp"
#include "grl/graded_algebra.hpp"
#include "grl/ideals.hpp"
#include "grl/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using grl::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitConclusion = 3;

grl::FieldDesc parse_field(const std::string& text) {
    if (text == "rational") return grl::FieldDesc::rational();
    if (text.rfind("gf:", 0) == 0)
        return grl::FieldDesc::gfp(std::stoll(text.substr(3)));
    throw std::invalid_argument("bad --field value '" + text +
                                "' (expected rational or gf:p)");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path,
          const std::string& format) {
    std::string text;
    if (format == "json") {
        text = grl::dump_stable(j);
    } else {
        // plain-text rendering: one "key: value" line per top-level entry
        std::ostringstream os;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_structured())
                os << it.key() << ": " << it.value().dump() << "\n";
            else
                os << it.key() << ": "
                   << (it.value().is_string() ? it.value().get<std::string>()
                                              : it.value().dump())
                   << "\n";
        }
        text = os.str();
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

std::uint64_t exhaustive_cap() {
    if (const char* env = std::getenv("GRL_MAX_EXHAUSTIVE"))
        return std::stoull(env);
    return grl::kDefaultMaxExhaustive;
}

json theorem_report_to_json(const grl::TheoremReport& rep) {
    json j;
    j["theorem"] = rep.theorem;
    j["mode"] = rep.mode;
    j["hypotheses_ok"] = rep.hypotheses_ok;
    if (!rep.hypotheses_ok) j["hypothesis_failure"] = rep.hypothesis_failure;
    j["pass"] = rep.pass;
    j["instances_checked"] = rep.instances_checked;
    json fails = json::array();
    for (const auto& w : rep.failures) {
        json coeffs = json::array();
        for (const auto& c : w) coeffs.push_back(c.to_string());
        fails.push_back(coeffs);
    }
    j["failures"] = fails;
    j["notes"] = rep.notes;
    return j;
}

enum class FixtureKind { Groupoid, Algebra, SkewSystem, CrossedSystem };

FixtureKind detect_kind(const json& j) {
    if (j.contains("components")) return FixtureKind::SkewSystem;
    if (j.contains("alpha")) return FixtureKind::CrossedSystem;
    if (j.contains("degree")) return FixtureKind::Algebra;
    if (j.contains("compose")) return FixtureKind::Groupoid;
    throw std::invalid_argument("unrecognized fixture shape");
}

int cmd_validate(const std::string& path, const std::string& out,
                 const std::string& format) {
    json j = load_json(path);
    grl::ValidationReport rep;
    std::string kind;
    switch (detect_kind(j)) {
        case FixtureKind::Groupoid:
            kind = "groupoid";
            rep = grl::validate(grl::groupoid_from_json(j));
            break;
        case FixtureKind::Algebra:
            kind = "algebra";
            rep = grl::validate_grading(grl::algebra_from_json(j));
            break;
        case FixtureKind::SkewSystem:
            kind = "skew_system";
            rep = grl::skew_system_from_json(j).validate();
            break;
        case FixtureKind::CrossedSystem:
            kind = "crossed_system";
            rep = grl::crossed_system_from_json(j).validate();
            break;
    }
    json out_j = grl::report_to_json(rep);
    out_j["fixture_kind"] = kind;
    emit(out_j, out, format);
    return rep.ok() ? kExitOk : kExitError;
}

struct ConstructArgs {
    std::string kind;
    std::size_t objects = 2;
    std::size_t cyclic = 0;
    std::string table_path;
    std::string groupoid_path;
    std::string system_path;
    std::string section;
    std::string field = "rational";
    std::string out;
    std::string format = "json";
};

std::vector<int> parse_section(const std::string& text) {
    std::vector<int> sec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) sec.push_back(std::stoi(item));
    return sec;
}

int cmd_construct(const ConstructArgs& a) {
    grl::FieldDesc field = parse_field(a.field);
    json fixture;
    json report;

    if (a.kind == "thin") {
        if (a.objects == 0) throw std::invalid_argument("--objects must be >= 1");
        fixture = grl::groupoid_to_json(grl::build_thin_connected(a.objects));
    } else if (a.kind == "group") {
        std::vector<std::vector<int>> table;
        if (a.cyclic > 0) {
            table.assign(a.cyclic, std::vector<int>(a.cyclic));
            for (std::size_t i = 0; i < a.cyclic; ++i)
                for (std::size_t j = 0; j < a.cyclic; ++j)
                    table[i][j] = int((i + j) % a.cyclic);
        } else if (!a.table_path.empty()) {
            table = load_json(a.table_path).get<std::vector<std::vector<int>>>();
        } else {
            throw std::invalid_argument("group needs --cyclic N or --table PATH");
        }
        fixture = grl::groupoid_to_json(grl::build_group(table));
    } else if (a.kind == "matrix-graded") {
        grl::Groupoid g = grl::groupoid_from_json(load_json(a.groupoid_path));
        grl::GradedAlgebra alg =
            grl::build_matrix_graded({g, field, parse_section(a.section)});
        fixture = grl::algebra_to_json(alg);
    } else if (a.kind == "skew") {
        grl::SkewSystem sys = grl::skew_system_from_json(load_json(a.system_path));
        fixture = grl::algebra_to_json(grl::build_skew_algebra(sys));
    } else if (a.kind == "crossed") {
        grl::CrossedSystem sys =
            grl::crossed_system_from_json(load_json(a.system_path));
        fixture = grl::algebra_to_json(grl::build_crossed_product(sys));
    } else if (a.kind == "theorem5") {
        grl::Groupoid g = grl::groupoid_from_json(load_json(a.groupoid_path));
        auto [alg, rep] = grl::build_theorem5_witness(g, field);
        fixture = grl::algebra_to_json(alg);
        report["strongly_graded"] = rep.strongly_graded;
        report["non_free_witnesses"] = rep.non_free_witnesses;
        report["sections_used"] = rep.sections_used;
        report["notes"] = rep.notes;
    } else {
        throw std::invalid_argument("unknown construct kind '" + a.kind + "'");
    }

    if (!report.is_null()) {
        // fixture goes to --out (or stdout), the construction report to stdout
        emit(fixture, a.out, "json");
        if (!a.out.empty()) emit(report, "", a.format);
    } else {
        emit(fixture, a.out, "json");
    }
    return kExitOk;
}

int cmd_analyze(const std::string& path, std::vector<std::string> reports,
                const std::string& out, const std::string& format) {
    grl::GradedAlgebra a = grl::algebra_from_json(load_json(path));
    if (reports.empty())
        reports = {"grading", "strong",  "commutant",
                   "center",  "sigma",   "ideal-property"};

    grl::ValidationReport grading = grl::validate_grading(a);
    if (!grading.ok()) {
        emit(grl::report_to_json(grading), out, format);
        return kExitError;
    }
    auto strong = grl::is_strongly_graded(a);

    json j;
    for (const std::string& r : reports) {
        if (r == "grading") {
            j["grading"] = grl::report_to_json(grading);
        } else if (r == "strong") {
            json s;
            s["strongly_graded"] = strong.strongly_graded;
            if (!strong.strongly_graded) {
                s["failing_morphism"] = strong.failing_morphism;
                if (strong.achieved)
                    s["achieved"] = grl::subspace_to_json(*strong.achieved);
            }
            j["strong"] = s;
        } else if (r == "commutant") {
            json c;
            c["commutant_of_principal"] = grl::subspace_to_json(
                grl::commutant(a, grl::principal_component(a)));
            json by_degree = json::object();
            for (auto& [s, sub] : grl::graded_commutant(a))
                by_degree[std::to_string(s)] = grl::subspace_to_json(sub);
            c["by_degree"] = by_degree;
            j["commutant"] = c;
        } else if (r == "center") {
            json c;
            c["center_direct"] = grl::subspace_to_json(grl::center_direct(a));
            if (strong.strongly_graded) {
                c["center_via_sigma"] =
                    grl::subspace_to_json(grl::center_via_sigma(a));
                c["equal"] = grl::center_via_sigma(a) == grl::center_direct(a);
            }
            j["center"] = c;
        } else if (r == "sigma") {
            if (!strong.strongly_graded) {
                j["sigma"] = {{"skipped", "grading is not strong"}};
                continue;
            }
            json checks = json::array();
            for (const auto& c : grl::check_sigma_functor(a)) {
                json e;
                e["name"] = c.name;
                e["pass"] = c.pass;
                e["vacuous"] = c.vacuous;
                if (!c.detail.empty()) e["detail"] = c.detail;
                checks.push_back(e);
            }
            j["sigma"] = checks;
        } else if (r == "ideal-property") {
            auto res = grl::nonzero_ideal_property(a);
            json p;
            p["holds"] = res.holds;
            if (!res.holds) {
                p["failing_morphism"] = res.failing_morphism;
                json w = json::array();
                for (const auto& c : res.witness->coeffs)
                    w.push_back(c.to_string());
                p["witness"] = w;
            }
            j["ideal-property"] = p;
        } else {
            throw std::invalid_argument("unknown report '" + r + "'");
        }
    }
    emit(j, out, format);
    return kExitOk;
}

struct CheckArgs {
    std::string theorem;
    std::string path;
    std::string mode = "exhaustive";
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "json";
};

// Shared body for the verify_theorem3 family (t1, t2, t3, corollary differ
// only in hypotheses and target subspace).
int run_t3_family(const CheckArgs& args, const std::string& name,
                  const grl::GradedAlgebra& a,
                  const std::optional<grl::Subspace>& target,
                  const std::string& hypothesis_failure) {
    grl::TheoremReport rep;
    if (!hypothesis_failure.empty()) {
        rep.theorem = name;
        rep.mode = args.mode;
        rep.hypotheses_ok = false;
        rep.hypothesis_failure = hypothesis_failure;
    } else {
        rep = grl::verify_theorem3(
            a, args.mode == "exhaustive" ? grl::CheckMode::Exhaustive
                                         : grl::CheckMode::Sampled,
            args.trials, args.seed.value_or(0), exhaustive_cap(), target);
        rep.theorem = name;
    }
    emit(theorem_report_to_json(rep), args.out, args.format);
    if (!rep.hypotheses_ok) return kExitHypothesis;
    return rep.pass ? kExitOk : kExitConclusion;
}

int cmd_check(const CheckArgs& args) {
    if (args.mode == "sampled" && !args.seed)
        throw std::invalid_argument("sampled mode requires an explicit --seed");
    if (args.mode == "sampled" && args.trials == 0)
        throw std::invalid_argument("sampled mode requires --trials");
    grl::CheckMode mode = args.mode == "exhaustive" ? grl::CheckMode::Exhaustive
                                                    : grl::CheckMode::Sampled;
    json fixture = load_json(args.path);

    if (args.theorem == "t4") {
        grl::SkewSystem sys = grl::skew_system_from_json(fixture);
        auto vrep = sys.validate();
        if (!vrep.ok()) {
            grl::TheoremReport rep;
            rep.theorem = "theorem4";
            rep.mode = args.mode;
            rep.hypotheses_ok = false;
            rep.hypothesis_failure = "system invalid: " +
                                     vrep.violations.front().rule + ": " +
                                     vrep.violations.front().detail;
            emit(theorem_report_to_json(rep), args.out, args.format);
            return kExitHypothesis;
        }
        grl::TheoremReport rep = grl::verify_theorem4(
            sys, mode, args.trials, args.seed.value_or(0), exhaustive_cap());
        emit(theorem_report_to_json(rep), args.out, args.format);
        if (!rep.hypotheses_ok) return kExitHypothesis;
        return rep.pass ? kExitOk : kExitConclusion;
    }

    if (args.theorem == "t3") {
        grl::GradedAlgebra a = grl::algebra_from_json(fixture);
        return run_t3_family(args, "theorem3", a, std::nullopt, "");
    }

    if (args.theorem == "t1") {
        // strongly group-graded with commutative principal component;
        // target T = commutant of R_0
        grl::GradedAlgebra a = grl::algebra_from_json(fixture);
        std::string hyp;
        if (a.groupoid().num_objects != 1)
            hyp = "theorem 1 needs a group grading (one object)";
        else if (!grl::is_strongly_graded(a).strongly_graded)
            hyp = "grading is not strong";
        else {
            grl::Subspace r0 = grl::principal_component(a);
            for (std::size_t i = 0; i < r0.dim() && hyp.empty(); ++i)
                for (std::size_t j = i + 1; j < r0.dim(); ++j) {
                    grl::Element x = a.element(r0.basis.row(i));
                    grl::Element y = a.element(r0.basis.row(j));
                    if (!(x * y == y * x)) {
                        hyp = "principal component is not commutative";
                        break;
                    }
                }
        }
        std::optional<grl::Subspace> target;
        if (hyp.empty())
            target = grl::commutant(a, grl::principal_component(a));
        return run_t3_family(args, "theorem1", a, target, hyp);
    }

    if (args.theorem == "t2") {
        // crossed product with commutative A, automorphic sigma, and
        // alpha(s, s^-1) a non-zero-divisor; target T = commutant of A
        grl::CrossedSystem sys = grl::crossed_system_from_json(fixture);
        auto vrep = sys.validate();
        std::string hyp;
        if (!vrep.ok())
            hyp = "system invalid: " + vrep.violations.front().rule;
        for (std::size_t i = 0; hyp.empty() && i < sys.ring.dim; ++i)
            for (std::size_t j = i + 1; j < sys.ring.dim; ++j)
                if (sys.ring.table[i][j] != sys.ring.table[j][i]) {
                    hyp = "coefficient ring is not commutative";
                    break;
                }
        for (std::size_t s = 0; hyp.empty() && s < sys.sigma.size(); ++s)
            if (grl::rref(sys.sigma[s]).rank != sys.ring.dim)
                hyp = "sigma_" + std::to_string(s) + " is not an automorphism";
        if (hyp.empty()) {
            const grl::Groupoid& g = sys.group;
            for (std::size_t s = 0; s < g.num_morphisms && hyp.empty(); ++s) {
                // left multiplication by alpha(s, s^-1) must be injective
                const auto& al = sys.alpha[s][g.inverse[s]];
                grl::Matrix m(sys.ring.dim, sys.ring.dim, sys.field);
                for (std::size_t i = 0; i < sys.ring.dim; ++i) {
                    std::vector<grl::Scalar> b(sys.ring.dim,
                                               grl::Scalar::zero(sys.field));
                    b[i] = grl::Scalar::one(sys.field);
                    auto prod = sys.ring.mul(al, b);
                    for (std::size_t k = 0; k < sys.ring.dim; ++k)
                        m.at(i, k) = prod[k];
                }
                if (grl::rref(m).rank != sys.ring.dim)
                    hyp = "alpha(s, s^-1) is a zero divisor at s = " +
                          std::to_string(s);
            }
        }
        if (!hyp.empty()) {
            grl::TheoremReport rep;
            rep.theorem = "theorem2";
            rep.mode = args.mode;
            rep.hypotheses_ok = false;
            rep.hypothesis_failure = hyp;
            emit(theorem_report_to_json(rep), args.out, args.format);
            return kExitHypothesis;
        }
        grl::GradedAlgebra a = grl::build_crossed_product(sys);
        grl::Subspace target = grl::commutant(a, grl::principal_component(a));
        return run_t3_family(args, "theorem2", a, target, "");
    }

    if (args.theorem == "corollary") {
        // R_0 maximal commutative; target T = R_0 itself
        grl::GradedAlgebra a = grl::algebra_from_json(fixture);
        std::string hyp;
        try {
            if (!grl::is_maximal_commutative(a))
                hyp = "principal component is not maximal commutative";
        } catch (const std::invalid_argument& e) {
            hyp = e.what();
        }
        std::optional<grl::Subspace> target;
        if (hyp.empty()) target = grl::principal_component(a);
        return run_t3_family(args, "corollary", a, target, hyp);
    }

    throw std::invalid_argument("unknown theorem '" + args.theorem + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"groupoid-graded algebra toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json";

    auto* validate = app.add_subcommand("validate", "validate a JSON fixture");
    validate->add_option("fixture", in_path, "fixture path")->required();
    validate->add_option("--out", out_path, "output path (default stdout)");
    validate->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "build a fixture");
    construct->add_option("kind", cons.kind,
                          "thin|group|matrix-graded|skew|crossed|theorem5")
        ->required();
    construct->add_option("--objects", cons.objects, "object count (thin)");
    construct->add_option("--cyclic", cons.cyclic, "cyclic group order (group)");
    construct->add_option("--table", cons.table_path, "Cayley table JSON (group)");
    construct->add_option("--groupoid", cons.groupoid_path,
                          "groupoid fixture (matrix-graded, theorem5)");
    construct->add_option("--system", cons.system_path,
                          "system fixture (skew, crossed)");
    construct->add_option("--section", cons.section,
                          "comma-separated morphism list (matrix-graded)");
    construct->add_option("--field", cons.field, "rational|gf:p");
    construct->add_option("--out", cons.out, "output path (default stdout)");
    construct->add_option("--format", cons.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reports;
    auto* analyze = app.add_subcommand("analyze", "analyze an algebra fixture");
    analyze->add_option("fixture", in_path, "algebra fixture path")->required();
    analyze->add_option("--reports", reports,
                        "grading,strong,commutant,center,sigma,ideal-property")
        ->delimiter(',');
    analyze->add_option("--out", out_path, "output path (default stdout)");
    analyze->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    CheckArgs chk;
    std::uint64_t seed_value = 0;
    auto* check = app.add_subcommand("check", "verify a theorem on a fixture");
    check->add_option("theorem", chk.theorem, "t1|t2|t3|t4|corollary")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "corollary"}));
    check->add_option("fixture", chk.path, "fixture path")->required();
    check->add_option("--mode", chk.mode, "exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    check->add_option("--trials", chk.trials, "sample count (sampled mode)");
    auto* seed_opt = check->add_option("--seed", seed_value, "RNG seed (sampled mode)");
    check->add_option("--out", chk.out, "output path (default stdout)");
    check->add_option("--format", chk.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (validate->parsed()) return cmd_validate(in_path, out_path, format);
        if (construct->parsed()) return cmd_construct(cons);
        if (analyze->parsed())
            return cmd_analyze(in_path, reports, out_path, format);
        if (check->parsed()) {
            if (seed_opt->count() > 0) chk.seed = seed_value;
            return cmd_check(chk);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
