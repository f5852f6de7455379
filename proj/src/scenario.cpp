#include "ncb/scenario.hpp"

#include <fstream>
#include <sstream>

#include "ncb/errors.hpp"
#include "ncb/flat_bundle.hpp"
#include "ncb/hilbert.hpp"
#include "ncb/linalg.hpp"
#include "ncb/oracle.hpp"
#include "ncb/torus.hpp"

namespace ncb {

namespace {

constexpr const char* kFormatVersion = "1.0";
constexpr const char* kOuternessDisclaimer =
    "strict outerness of the action is not certified by this finite-dimensional model; "
    "only the Hilbert-module/Galois-condition layer is verified";

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& field)
        : std::runtime_error("schema violation at field '" + field + "'") {}
};

const Json& field(const Json& j, const std::string& name) {
    if (!j.is_object() || !j.contains(name)) throw SchemaError(name);
    return j.at(name);
}

cdouble parse_complex(const Json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw SchemaError(where + " (complex number: scalar or [re, im])");
}

Mat parse_matrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SchemaError(where);
    int rows = static_cast<int>(j.size());
    int cols = -1;
    Mat m;
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array()) throw SchemaError(where);
        if (cols < 0) {
            cols = static_cast<int>(row.size());
            m = Mat::Zero(rows, cols);
        }
        if (static_cast<int>(row.size()) != cols) throw SchemaError(where + " (ragged matrix)");
        for (int c = 0; c < cols; ++c) m(r, c) = parse_complex(row[c], where);
    }
    return m;
}

FiniteGroup parse_group(const Json& j) {
    if (j.contains("cyclic")) return make_cyclic_group(field(j, "cyclic").get<int>());
    if (j.contains("product")) {
        const Json& p = field(j, "product");
        if (!p.is_array() || p.size() != 2) throw SchemaError("group.product");
        return product_group(parse_group(p[0]), parse_group(p[1]));
    }
    if (j.contains("table"))
        return group_from_table(field(j, "table").get<std::vector<std::vector<int>>>());
    throw SchemaError("group (expected cyclic, product or table)");
}

AlgebraPtr parse_algebra(const Json& j) {
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "A";
    return make_algebra(field(j, "blocks").get<std::vector<int>>(), label);
}

AlgebraElement parse_element(const AlgebraPtr& alg, const Json& j, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != alg->num_blocks())
        throw SchemaError(where + " (one block matrix per algebra block)");
    AlgebraElement a = zero_element(alg);
    for (int i = 0; i < alg->num_blocks(); ++i) {
        Mat b = parse_matrix(j[i], where);
        if (b.rows() != alg->block_sizes[i] || b.cols() != alg->block_sizes[i])
            throw SchemaError(where + " (block shape mismatch)");
        a.blocks[i] = std::move(b);
    }
    return a;
}

GroupAction parse_action(const Json& j) {
    FiniteGroup group = parse_group(field(j, "group"));
    AlgebraPtr algebra = parse_algebra(field(j, "algebra"));
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "trivial") return trivial_action(group, algebra);
    if (kind == "permutation")
        return permutation_action(group, algebra,
                                  field(j, "perms").get<std::vector<std::vector<int>>>());
    if (kind == "automorphisms") {
        const Json& autos = field(j, "automorphisms");
        if (!autos.is_array() || static_cast<int>(autos.size()) != group.order)
            throw SchemaError("action.automorphisms");
        GroupAction act;
        act.group = group;
        act.algebra = algebra;
        for (const Json& a : autos) {
            Automorphism phi;
            phi.block_dest = field(a, "perm").get<std::vector<int>>();
            for (const Json& u : field(a, "unitaries"))
                phi.unitaries.push_back(parse_matrix(u, "action.automorphisms.unitaries"));
            act.automorphisms.push_back(std::move(phi));
        }
        return act;
    }
    throw SchemaError("action.kind");
}

LocalSystem parse_local_system(const Json& j, const FiniteGroup& group) {
    if (j.contains("trivial")) return trivial_system(group, field(j, "trivial").get<int>());
    if (j.contains("character")) {
        const Json& c = field(j, "character");
        if (!c.is_array() || c.size() != 2) throw SchemaError("local_system.character");
        LocalSystem sys = character_system(c[0].get<int>(), c[1].get<int>());
        if (sys.group.table != group.table)
            throw SchemaError("local_system.character (group is not the cyclic group of the scenario)");
        return sys;
    }
    if (j.contains("matrices")) {
        std::vector<Mat> rho;
        for (const Json& m : field(j, "matrices"))
            rho.push_back(parse_matrix(m, "local_system.matrices"));
        return make_local_system(group, std::move(rho));
    }
    throw SchemaError("local_system (expected trivial, character or matrices)");
}

Json echo(const Json& scenario) {
    return scenario;  // scenarios are small; echo verbatim for reproducibility
}

void add_outerness_warning_if_noncommutative(Json& report, const AlgebraPtr& algebra) {
    if (!algebra->commutative()) report["warnings"].push_back(kOuternessDisclaimer);
}

Json violations_json(const std::vector<ActionViolation>& violations) {
    Json out = Json::array();
    for (const auto& v : violations) {
        Json item;
        item["law"] = v.law;
        item["g"] = v.g;
        item["h"] = v.h;
        item["residual"] = v.residual;
        out.push_back(item);
    }
    return out;
}

// --- per-kind evaluators ------------------------------------------------

void eval_galois_check(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    GroupAction action = parse_action(field(payload, "action"));
    GaloisCandidate cand;
    cand.module = make_hilbert_module(action, opt.tolerance);
    for (const Json& e : field(payload, "frame_e"))
        cand.frame_e.push_back(parse_element(action.algebra, e, "frame_e"));
    for (const Json& x : field(payload, "frame_xi"))
        cand.frame_xi.push_back(parse_element(action.algebra, x, "frame_xi"));
    GaloisReport gr = verify_galois_conditions(cand, opt.tolerance);
    Json results;
    results["inner_product_normalization"] = "1/|G| averaged (normalized convention)";
    for (int i = 0; i < 4; ++i) {
        Json cond;
        cond["condition"] = i + 1;
        cond["description"] = gr.details[i];
        cond["residual"] = gr.condition_residuals[i];
        cond["tolerance"] = opt.tolerance;
        results["conditions"].push_back(cond);
    }
    results["verdict"] = gr.verdict;
    report["results"] = results;
    add_outerness_warning_if_noncommutative(report, action.algebra);
    verdict = gr.verdict;
}

void eval_cotensor(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    FiniteGroup group = parse_group(field(payload, "group"));
    std::vector<Mat> right, left;
    for (const Json& m : field(payload, "right")) right.push_back(parse_matrix(m, "right"));
    for (const Json& m : field(payload, "left")) left.push_back(parse_matrix(m, "left"));
    GModuleRight M = make_right_module(group, std::move(right), opt.tolerance);
    GModuleLeft N = make_left_module(group, std::move(left), opt.tolerance);
    CotensorSubspace sub = cotensor_modules(M, N, opt.tolerance);
    report["results"]["dimension"] = sub.dimension;
    verdict = true;
    if (opt.with_oracle) {
        OracleResult orc = oracle_cotensor_dim(M, N);
        report["oracle"]["dimension"] = orc.value;
        report["oracle"]["method"] = orc.method;
        verdict = orc.value == sub.dimension;
        report["results"]["oracle_agreement"] = verdict;
    }
}

void eval_borel(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    FiniteGroup group = parse_group(field(payload, "group"));
    if (payload.contains("x_set")) {
        GSet x = make_right_gset(group, field(payload, "x_set").get<std::vector<std::vector<int>>>());
        GSet y = make_left_gset(group, field(payload, "y_set").get<std::vector<std::vector<int>>>());
        BorelResult borel =
            borel_construction(gset_function_action(x), gset_function_action_left(y), opt.tolerance);
        BorelOrbitResult orbits = commutative_oracle(x, y);
        report["results"]["linear_dimension"] = borel.linear_dimension;
        report["results"]["algebra_dimension"] = borel.algebra_dimension;
        report["results"]["orbit_count"] = orbits.orbit_count;
        verdict = borel.algebra_dimension == orbits.orbit_count;
        if (opt.with_oracle) {
            OracleResult orc = oracle_borel_orbits(x, y);
            report["oracle"]["orbit_count"] = orc.value;
            report["oracle"]["method"] = orc.method;
            verdict = verdict && orc.value == orbits.orbit_count;
        }
    } else {
        GroupAction a = parse_action(field(payload, "right_action"));
        GroupAction b = parse_action(field(payload, "left_action"));
        BorelResult borel = borel_construction(a, b, opt.tolerance);
        report["results"]["linear_dimension"] = borel.linear_dimension;
        report["results"]["algebra_dimension"] = borel.algebra_dimension;
        add_outerness_warning_if_noncommutative(report, a.algebra);
        verdict = true;
    }
}

void eval_flat_bundle(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    GroupAction action = parse_action(field(payload, "action"));
    LocalSystem system = parse_local_system(field(payload, "local_system"), action.group);
    FlatBundleModule mod = flat_bundle_module(action, system, opt.tolerance);
    double idem = spectral_norm(mod.projection * mod.projection - mod.projection);
    double sa = spectral_norm(mod.projection.adjoint() - mod.projection);
    report["results"]["module_dimension"] = mod.dimension;
    report["results"]["rank_data"] = mod.rank_data;
    report["results"]["base_block_sizes"] = mod.base_block_sizes;
    report["results"]["idempotent_residual"] = idem;
    report["results"]["self_adjoint_residual"] = sa;
    report["results"]["action_convention"] =
        "left action converted to right via a.g := alpha_{g^-1}(a)";
    add_outerness_warning_if_noncommutative(report, action.algebra);
    verdict = idem <= opt.tolerance && sa <= opt.tolerance;
}

void eval_k_class(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    GroupAction action = parse_action(field(payload, "action"));
    LocalSystem system = parse_local_system(field(payload, "local_system"), action.group);
    KClass cls = k_class(action, system, opt.tolerance);
    std::vector<int> difference;
    for (size_t i = 0; i < cls.plus.size(); ++i) difference.push_back(cls.plus[i] - cls.minus[i]);
    report["results"]["plus"] = cls.plus;
    report["results"]["minus"] = cls.minus;
    report["results"]["class"] = difference;
    report["results"]["provenance"] = cls.provenance;
    report["results"]["k_theory_note"] =
        "unreduced per-block rank vectors; the difference vector is exposed as the class";
    add_outerness_warning_if_noncommutative(report, action.algebra);
    verdict = true;
}

void eval_torus_cover(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    int q = field(payload, "q").get<int>();
    int p = field(payload, "p").get<int>();
    int m = field(payload, "m").get<int>();
    int n = field(payload, "n").get<int>();
    TorusCoverScenario cover = torus_cover(q, p, m, n, opt.tolerance);
    auto violations = check_action(cover.action, opt.tolerance);
    report["results"]["fixed_dimension"] = cover.base.dimension;
    report["results"]["dimension_law"] = cover.base.dimension * m * n == q * q;
    report["results"]["action_violations"] = violations_json(violations);
    add_outerness_warning_if_noncommutative(report, cover.total.algebra);
    verdict = violations.empty() && cover.base.dimension * m * n == q * q;
}

ConnectionForm parse_connection(const Json& payload) {
    if (payload.contains("c_u"))
        return paper_connection(field(payload, "c_u").get<double>(),
                                field(payload, "c_v").get<double>());
    return make_connection(parse_matrix(field(payload, "coeff_u"), "coeff_u"),
                           parse_matrix(field(payload, "coeff_v"), "coeff_v"));
}

void eval_torus_connection(const Json& payload, const RunOptions& opt, Json& report,
                           bool& verdict) {
    ConnectionForm conn = parse_connection(payload);
    Mat curv = curvature(conn);
    double norm = spectral_norm(curv);
    report["results"]["rank"] = conn.rank;
    report["results"]["curvature_norm"] = norm;
    report["results"]["flat"] = norm <= opt.tolerance;
    verdict = norm <= opt.tolerance;
}

void eval_descent(const Json& payload, const RunOptions& opt, Json& report, bool& verdict) {
    int q = field(payload, "q").get<int>();
    int p = field(payload, "p").get<int>();
    int m = field(payload, "m").get<int>();
    int n = field(payload, "n").get<int>();
    TorusCoverScenario cover = torus_cover(q, p, m, n, opt.tolerance);
    LocalSystem system = parse_local_system(field(payload, "local_system"), cover.action.group);
    ConnectionForm conn = parse_connection(payload);
    ConnectionForm lifted = lift_connection(conn, cover);
    DescentResult descent = twisted_descent(cover, system, lifted, opt.tolerance);
    double curv = spectral_norm(descent.descended_curvature);
    report["results"]["module_dimension"] = descent.module_dimension;
    report["results"]["base_rank"] = descent.base_rank;
    report["results"]["well_definedness_residual"] = descent.well_definedness_residual;
    report["results"]["descended_curvature_norm"] = curv;
    if (descent.reproduction_residual)
        report["results"]["reproduction_residual"] = *descent.reproduction_residual;
    add_outerness_warning_if_noncommutative(report, cover.total.algebra);
    verdict = curv <= opt.tolerance;
}

}  // namespace

RunResult run_scenario_json(const Json& scenario, const RunOptions& options) {
    RunResult out;
    Json& report = out.report;
    report["format_version"] = kFormatVersion;
    report["warnings"] = Json::array();
    try {
        std::string kind = field(scenario, "kind").get<std::string>();
        RunOptions opt = options;
        if (scenario.contains("tolerance")) opt.tolerance = scenario.at("tolerance").get<double>();
        report["kind"] = kind;
        report["tolerance"] = opt.tolerance;
        report["scenario"] = echo(scenario);

        bool verdict = false;
        const Json& payload = field(scenario, "payload");
        if (kind == "galois-check") eval_galois_check(payload, opt, report, verdict);
        else if (kind == "cotensor") eval_cotensor(payload, opt, report, verdict);
        else if (kind == "borel") eval_borel(payload, opt, report, verdict);
        else if (kind == "flat-bundle") eval_flat_bundle(payload, opt, report, verdict);
        else if (kind == "k-class") eval_k_class(payload, opt, report, verdict);
        else if (kind == "torus-cover") eval_torus_cover(payload, opt, report, verdict);
        else if (kind == "torus-connection") eval_torus_connection(payload, opt, report, verdict);
        else if (kind == "descent") eval_descent(payload, opt, report, verdict);
        else throw SchemaError("kind");

        report["verdict"] = verdict;
        out.exit_code = verdict ? 0 : 1;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        report["verdict"] = nullptr;
        out.exit_code = 2;
    }
    return out;
}

RunResult run_scenario_file(const std::string& path, const RunOptions& options) {
    std::ifstream in(path);
    if (!in) {
        RunResult out;
        out.exit_code = 2;
        out.report["format_version"] = kFormatVersion;
        out.report["error"] = "cannot open scenario file: " + path;
        out.report["verdict"] = nullptr;
        return out;
    }
    Json scenario;
    try {
        scenario = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        RunResult out;
        out.exit_code = 2;
        out.report["format_version"] = kFormatVersion;
        out.report["error"] = std::string("parse failure: ") + e.what();
        out.report["verdict"] = nullptr;
        return out;
    }
    return run_scenario_json(scenario, options);
}

std::string render_human(const Json& report) {
    std::ostringstream os;
    if (report.contains("error")) {
        os << "ERROR: " << report.at("error").get<std::string>() << "\n";
        return os.str();
    }
    os << "scenario kind: " << report.at("kind").get<std::string>() << "\n";
    os << "tolerance:     " << report.at("tolerance").get<double>() << "\n";
    if (report.contains("results")) {
        for (const auto& [key, value] : report.at("results").items())
            os << "  " << key << ": " << value.dump() << "\n";
    }
    if (report.contains("oracle")) {
        for (const auto& [key, value] : report.at("oracle").items())
            os << "  oracle." << key << ": " << value.dump() << "\n";
    }
    for (const auto& w : report.at("warnings")) os << "warning: " << w.get<std::string>() << "\n";
    os << "verdict: "
       << (report.at("verdict").is_null() ? "error"
                                          : (report.at("verdict").get<bool>() ? "PASS" : "FAIL"))
       << "\n";
    return os.str();
}

}  // namespace ncb
