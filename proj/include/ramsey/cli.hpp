#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "constants.hpp"
#include "embeddings.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "formats.hpp"
#include "partition.hpp"
#include "primes.hpp"
#include "product.hpp"
#include "rates.hpp"
#include "small_graph.hpp"
#include "tree_concat.hpp"

namespace ramsey::cli {

using nlohmann::json;

inline std::string fmt12(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

inline void add_base(json& result, const std::string& name, const GrowthRate& g,
                     const std::string& tag, const std::string& note = "") {
    json row{{"name", name}, {"base", g.base()}, {"log_base", g.log_base}, {"tag", tag}};
    if (!note.empty()) row["note"] = note;
    result["outputs"].push_back(std::move(row));
}

inline void add_value(json& result, const std::string& name, const json& value,
                      const std::string& tag, const std::string& note = "") {
    json row{{"name", name}, {"value", value}, {"tag", tag}};
    if (!note.empty()) row["note"] = note;
    result["outputs"].push_back(std::move(row));
}

inline void print_human(std::ostream& out, const json& result) {
    out << "subcommand: " << result["subcommand"].get<std::string>() << "\n";
    if (result.contains("inputs") && !result["inputs"].empty()) {
        out << "inputs:";
        for (auto& [k, v] : result["inputs"].items()) {
            out << " " << k << "=";
            if (v.is_number_float())
                out << fmt12(v.get<double>());
            else
                out << v.dump();
        }
        out << "\n";
    }
    if (result.contains("outputs")) {
        out << std::left << std::setw(42) << "name" << std::setw(20) << "base" << std::setw(20)
            << "log_base" << "tag" << "\n";
        for (const auto& row : result["outputs"]) {
            out << std::left << std::setw(42) << row["name"].get<std::string>();
            if (row.contains("base")) {
                out << std::setw(20) << fmt12(row["base"].get<double>()) << std::setw(20)
                    << fmt12(row["log_base"].get<double>());
            } else {
                json v = row["value"];
                std::string s = v.is_number_float() ? fmt12(v.get<double>()) : v.dump();
                if (s.size() >= 40)
                    out << s << "  ";
                else
                    out << std::setw(40) << s;
            }
            out << row["tag"].get<std::string>();
            if (row.contains("note")) out << "  (" << row["note"].get<std::string>() << ")";
            out << "\n";
        }
    }
    if (result.contains("status")) {
        const auto& st = result["status"];
        if (st.is_string())
            out << "status: " << st.get<std::string>() << "\n";
        else
            out << "status: error (" << st["kind"].get<std::string>()
                << "): " << st["message"].get<std::string>() << "\n";
    }
}

inline void emit(std::ostream& out, const json& result, bool as_json) {
    if (as_json)
        out << result.dump(2) << "\n";
    else
        print_human(out, result);
}

inline json plan_to_json(const PartitionPlan& plan) {
    json blocks = json::array();
    for (const auto& b : plan.blocks)
        blocks.push_back({{"nu", b.nu},
                          {"rho_share", b.rho_share},
                          {"sigma_share", b.sigma_share},
                          {"local_rho", b.local_rho()},
                          {"local_sigma", b.local_sigma()}});
    return blocks;
}

inline std::vector<SmallGraph> read_graphs_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graphs file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw UsageError("graphs file: invalid JSON: " + std::string(e.what()));
    }
    if (!doc.contains("graphs") || !doc["graphs"].is_array())
        throw UsageError("graphs file: expected a top-level \"graphs\" array");
    std::vector<SmallGraph> out;
    for (const auto& g : doc["graphs"]) {
        if (!g.contains("n")) throw UsageError("graphs file: every graph needs \"n\"");
        SmallGraph sg(g["n"].get<int>());
        if (g.contains("edges")) {
            for (const auto& e : g["edges"]) {
                if (!e.is_array() || e.size() != 2)
                    throw UsageError("graphs file: edges must be [u,v] pairs");
                sg.add_edge(e[0].get<int>(), e[1].get<int>());
            }
        } else if (g.contains("adj")) {
            const auto& adj = g["adj"];
            for (size_t u = 0; u < adj.size(); ++u)
                for (const auto& v : adj[u])
                    if (static_cast<int>(u) < v.get<int>())
                        sg.add_edge(static_cast<int>(u), v.get<int>());
        } else {
            throw UsageError("graphs file: every graph needs \"edges\" or \"adj\"");
        }
        out.push_back(std::move(sg));
    }
    if (out.empty()) throw UsageError("graphs file: no graphs given");
    return out;
}

inline std::vector<std::vector<double>> read_points_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open points file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw UsageError("points file: invalid JSON: " + std::string(e.what()));
    }
    if (!doc.contains("points") || !doc["points"].is_array())
        throw UsageError("points file: expected a top-level \"points\" array");
    std::vector<std::vector<double>> pts;
    for (const auto& p : doc["points"]) pts.push_back(p.get<std::vector<double>>());
    return pts;
}

namespace detail {

// Configurable knobs a JSON config file may default; flags always win.
struct Knobs {
    std::uint64_t seed = 20260822;
    int starts = 64;
    double tol = 1e-8;
    int trials = 100;
    std::uint64_t budget = 1ull << 24;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* starts_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* budget_opt = nullptr;

    void attach(CLI::App* cmd, bool with_optimizer, bool with_verify) {
        seed_opt = cmd->add_option("--seed", seed, "random seed (echoed in output)");
        budget_opt = cmd->add_option("--budget", budget, "search node budget");
        if (with_optimizer) {
            starts_opt = cmd->add_option("--starts", starts, "multistart count");
            tol_opt = cmd->add_option("--tol", tol, "optimizer tolerance");
        }
        if (with_verify) trials_opt = cmd->add_option("--trials", trials, "random trial count");
    }

    void apply_config(const json& cfg) {
        auto take = [&](const char* key, CLI::Option* opt, auto& slot) {
            using T = std::decay_t<decltype(slot)>;
            if (cfg.contains(key) && (opt == nullptr || opt->count() == 0))
                slot = cfg[key].get<T>();
        };
        take("seed", seed_opt, seed);
        take("starts", starts_opt, starts);
        take("tol", tol_opt, tol);
        take("trials", trials_opt, trials);
        take("budget", budget_opt, budget);
    }
};

inline json load_config(const std::string& explicit_path) {
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* env = std::getenv("RAMSEY_CLI_CONFIG")) path = env;
    }
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw UsageError("config file: invalid JSON: " + std::string(e.what()));
    }
    if (!cfg.is_object()) throw UsageError("config file: expected a JSON object");
    return cfg;
}

inline ForbiddenConfig make_config(const std::string& kind, int k, Norm norm,
                                   const std::vector<double>& sides,
                                   const std::vector<double>& scalings) {
    if (kind == "two-point") return ForbiddenConfig::two_point(norm);
    if (kind == "simplex") return ForbiddenConfig::simplex(k, norm);
    if (kind == "semicross") return ForbiddenConfig::semicross(k, norm, scalings);
    if (kind == "right-triangle") {
        if (sides.size() != 2)
            throw UsageError("right-triangle needs --sides a,b (the two catheti)");
        return ForbiddenConfig::right_triangle(sides[0], sides[1]);
    }
    if (kind == "acute-triangle") {
        if (sides.size() != 3) throw UsageError("acute-triangle needs --sides a,b,c");
        return ForbiddenConfig::acute_triangle(sides[0], sides[1], sides[2]);
    }
    if (kind == "triangle-manhattan") {
        if (sides.size() != 3) throw UsageError("triangle-manhattan needs --sides a,b,c");
        return ForbiddenConfig::manhattan_triangle(sides[0], sides[1], sides[2]);
    }
    if (kind == "baton") {
        if (scalings.empty()) throw UsageError("baton needs --scalings g1,g2,...");
        return ForbiddenConfig::baton(scalings);
    }
    throw UsageError("unknown configuration kind: " + kind);
}

inline std::string chromatic_tag(const ForbiddenConfig& cfg) {
    using Kind = ForbiddenConfig::Kind;
    if (cfg.norm == Norm::manhattan)
        return cfg.kind == Kind::two_point ? "Theorem 3.1" : "Theorem 3.2";
    switch (cfg.kind) {
        case Kind::two_point: return "Theorem 1.1";
        case Kind::simplex:
        case Kind::semicross: return "Theorem 1.4";
        case Kind::right_triangle:
        case Kind::acute_triangle: return "Theorem 1.5";
        default: return "plumbing";
    }
}

struct SuiteOutcome {
    int trials = 0;
    int violations = 0;
    json details = json::array();
};

// Random-pair homomorphism suite: any vertex subset larger than the summed
// independence numbers must contain a homomorphic copy of every two-edge tree.
inline SuiteOutcome tree_suite(int trials, std::uint64_t seed, int max_vertices) {
    SuiteOutcome oc;
    std::mt19937_64 rng(seed);
    std::vector<EdgeOrderedTree> trees;
    {
        // every labeled tree on {0,1,2} with both edge orders
        const std::array<std::pair<int, int>, 3> all_edges{{{0, 1}, {0, 2}, {1, 2}}};
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = 0; b < 3; ++b) {
                if (a == b) continue;
                EdgeOrderedTree t;
                t.edges = {all_edges[a], all_edges[b]};
                trees.push_back(t);
            }
    }
    for (int t = 0; t < trials; ++t) {
        int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 1));
        auto random_graph = [&] {
            SmallGraph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1u) g.add_edge(u, v);
            return g;
        };
        std::vector<SmallGraph> pair{random_graph(), random_graph()};
        int bound = independence_number(pair[0]) + independence_number(pair[1]);
        oc.trials++;
        std::uint32_t all = pair[0].vertex_mask();
        for (std::uint32_t w = 0; w <= all; ++w) {
            if (std::popcount(w) <= bound) continue;
            for (const auto& tree : trees) {
                if (!find_tree_homomorphism(pair, tree, w)) {
                    oc.violations++;
                    oc.details.push_back({{"trial", t}, {"w", w}, {"bound", bound}});
                }
            }
        }
    }
    return oc;
}

// Orthogonal star/path suite on random instances with small products.
inline SuiteOutcome ortho_suite(int trials, std::uint64_t seed, std::uint64_t budget) {
    SuiteOutcome oc;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int k = 2 + static_cast<int>(rng() % 2);
        std::vector<SmallGraph> gs;
        int prod = 1;
        for (int i = 0; i < k; ++i) {
            int n = 2 + static_cast<int>(rng() % 2);
            if (prod * n > 16) n = 2;
            prod *= n;
            SmallGraph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1u) g.add_edge(u, v);
            gs.push_back(std::move(g));
        }
        for (OrthoShape shape : {OrthoShape::star, OrthoShape::path}) {
            auto res = max_orthogonal_free(gs, shape, budget);
            long long bound = orthogonal_free_bound(gs);
            oc.trials++;
            if (res.max_size > bound) {
                oc.violations++;
                oc.details.push_back({{"trial", t},
                                      {"shape", shape_name(shape)},
                                      {"max_size", res.max_size},
                                      {"bound", bound}});
            }
        }
    }
    return oc;
}

// Family fuzz suite: shift identity + weak-sunflower preservation +
// complement duality + partition pigeonhole on random families.
inline SuiteOutcome family_suite(int trials, std::uint64_t seed) {
    SuiteOutcome oc;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int n = 4 + static_cast<int>(rng() % 9); // 4..12
        std::uint32_t full = (1u << n) - 1u;
        int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        // random r-uniform family
        std::vector<std::uint32_t> pool;
        for (std::uint32_t m = 0; m <= full; ++m)
            if (std::popcount(m) == r) pool.push_back(m);
        std::shuffle(pool.begin(), pool.end(), rng);
        size_t want = std::min(pool.size(), size_t(6 + rng() % 10));
        SetFamily f(n, {pool.begin(), pool.begin() + static_cast<long>(want)});
        oc.trials++;
        bool ok = true;
        try {
            std::uint32_t g = static_cast<std::uint32_t>(rng()) & full;
            auto shifted = symdiff_shift(f, g, n / 2); // identity certified inside
            // preservation: a weak sunflower among kept shifted members pulls
            // back to one among their preimages
            if (shifted.family.members.size() >= 3) {
                auto found = find_weak_sunflower(shifted.family, 3);
                if (found) {
                    SetFamily pre(n, {});
                    for (int idx : *found)
                        pre.members.push_back(
                            f.members[static_cast<size_t>(shifted.preimage[static_cast<size_t>(idx)])]);
                    auto back = find_weak_sunflower(pre, 3);
                    if (!back) ok = false;
                }
            }
            // duality: f s-avoiding iff complements (n-2r+s)-avoiding
            int s = static_cast<int>(rng() % static_cast<std::uint64_t>(r + 1));
            bool direct = is_s_avoiding(f, s);
            bool dual = is_s_avoiding(complement_family(f), n - 2 * r + s);
            if (direct != dual) ok = false;
        } catch (const CertificationError&) {
            ok = false;
        }
        if (!ok) {
            oc.violations++;
            oc.details.push_back({{"trial", t}, {"n", n}, {"r", r}});
        }
    }
    return oc;
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exponential lower-bound toolkit for forbidden configurations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string config_path;
    app.add_flag("--json", as_json, "emit JSON instead of the human table");
    app.add_option("--config-file", config_path,
                   "JSON config with default seeds/budgets (env RAMSEY_CLI_CONFIG)")
        ->envname("RAMSEY_CLI_CONFIG");

    // constants
    auto* c_constants = app.add_subcommand("constants", "named constants and derived bases");

    // bound
    auto* c_bound = app.add_subcommand("bound", "bound base for a forbidden configuration");
    std::string b_kind;
    int b_k = 2, b_c = 1, b_n = 100;
    double b_rho = 0.5, b_sigma = 0.25, b_eps = 0.1;
    std::string b_norm = "euclidean";
    std::vector<double> b_sides, b_scalings;
    bool b_allow_c2 = false;
    c_bound->add_option("--config", b_kind,
                        "two-point|simplex|semicross|right-triangle|acute-triangle|"
                        "triangle-manhattan|baton|sunflower|intersection|clique|"
                        "semicross-log|simplex-threshold")
        ->required();
    c_bound->add_option("--k", b_k, "dimension parameter");
    c_bound->add_option("--norm", b_norm, "euclidean|manhattan");
    c_bound->add_option("--rho", b_rho, "set-size fraction");
    c_bound->add_option("--sigma", b_sigma, "intersection fraction");
    c_bound->add_option("--c", b_c, "prime-decomposition class (1, 3, 4)");
    c_bound->add_flag("--allow-c2", b_allow_c2, "permit the conjecture-conditional c=2");
    c_bound->add_option("--sides", b_sides, "triangle side lengths")->delimiter(',');
    c_bound->add_option("--scalings", b_scalings, "semicross/baton scalings")->delimiter(',');
    c_bound->add_option("--n", b_n, "dimension for finite-n values");
    c_bound->add_option("--eps", b_eps, "epsilon for the threshold");

    // optimize-partition
    auto* c_opt = app.add_subcommand("optimize-partition", "asymmetric partition search");
    double o_rho = 0.5, o_sigma = 0.15;
    int o_k = 3;
    std::uint64_t o_certify_n = 0;
    c_opt->add_option("--rho", o_rho, "set-size fraction")->required();
    c_opt->add_option("--sigma", o_sigma, "intersection fraction")->required();
    c_opt->add_option("--k", o_k, "number of blocks (3 or 4)");
    c_opt->add_option("--certify-n", o_certify_n,
                      "emit a finite-n prime certificate at this dimension");
    detail::Knobs o_knobs;
    o_knobs.attach(c_opt, true, false);

    // prime-split
    auto* c_prime = app.add_subcommand("prime-split", "prime decompositions of an integer");
    std::uint64_t p_target = 0;
    int p_parts = 3;
    std::vector<double> p_props;
    c_prime->add_option("--target", p_target, "integer to split")->required();
    c_prime->add_option("--parts", p_parts, "2, 3, or 4 (2 is conjecture-conditional)");
    c_prime->add_option("--proportions", p_props, "three positive reals summing to 1")
        ->delimiter(',');

    // compose
    auto* c_compose = app.add_subcommand("compose", "compose two product constructions");
    SuperRamseyParams q1, q2;
    int comp_iterate = 0;
    c_compose->add_option("--eps1", q1.epsilon)->required();
    c_compose->add_option("--c1", q1.c)->required();
    c_compose->add_option("--m1", q1.m)->required();
    c_compose->add_option("--eps2", q2.epsilon);
    c_compose->add_option("--c2", q2.c);
    c_compose->add_option("--m2", q2.m);
    c_compose->add_option("--iterate", comp_iterate, "self-compose the first construction k times");

    // embed
    auto* c_embed = app.add_subcommand("embed", "embedding parameters for a shape");
    std::string e_shape, e_points_path;
    std::vector<double> e_sides;
    int e_k = 2;
    std::string e_norm = "euclidean";
    c_embed->add_option("--shape", e_shape, "right|acute|triangle-manhattan|simplex|grid")
        ->required();
    c_embed->add_option("--sides", e_sides, "triangle side lengths")->delimiter(',');
    c_embed->add_option("--k", e_k, "simplex dimension");
    c_embed->add_option("--norm", e_norm, "euclidean|manhattan");
    c_embed->add_option("--points", e_points_path, "JSON file with a \"points\" array");

    // verify
    auto* c_verify = app.add_subcommand("verify", "run the property suites");
    std::string v_suite = "all", v_graphs_path, v_family_path, v_shape = "both";
    int v_max_vertices = 4, v_sunflower_k = 0, v_avoid_s = -1;
    detail::Knobs v_knobs;
    c_verify->add_option("--suite", v_suite, "tree-concat|family|all");
    c_verify->add_option("--graphs", v_graphs_path, "JSON graph instances to check");
    c_verify->add_option("--shape", v_shape, "star|path|both");
    c_verify->add_option("--max-vertices", v_max_vertices, "vertex cap for random graphs");
    c_verify->add_option("--family", v_family_path, "family file to check");
    c_verify->add_option("--sunflower-k", v_sunflower_k, "search the family for a weak k-sunflower");
    c_verify->add_option("--avoid-s", v_avoid_s, "check the family is s-avoiding");
    v_knobs.attach(c_verify, false, true);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ramsey");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    json result{{"subcommand", ""}, {"inputs", json::object()}, {"outputs", json::array()},
                {"status", "ok"}};
    int code = 0;
    try {
        json cfg = detail::load_config(config_path);
        o_knobs.apply_config(cfg);
        v_knobs.apply_config(cfg);

        if (app.got_subcommand(c_constants)) {
            result["subcommand"] = "constants";
            add_base(result, "psi2", named_constant("psi2"), "Theorem 1.1");
            add_value(result, "psi2_argmax", psi2_argmax(), "Theorem 1.1",
                      "maximizer of (1+x+x^3)/(1+x^2+x^4)");
            add_base(result, "psi1", named_constant("psi1"), "Theorem 3.1");
            add_base(result, "psi", named_constant("psi"), "Theorem 1.3");
            add_base(result, "simplex-euclidean-k2",
                     chromatic_base(ForbiddenConfig::simplex(2, Norm::euclidean)), "Theorem 1.4");
            add_base(result, "simplex-euclidean-k3",
                     chromatic_base(ForbiddenConfig::simplex(3, Norm::euclidean)), "Theorem 1.4");
            add_base(result, "right-triangle",
                     chromatic_base(ForbiddenConfig::right_triangle(3, 4)), "Theorem 1.5");
            add_base(result, "acute-triangle",
                     chromatic_base(ForbiddenConfig::acute_triangle(1, 1, 1)), "Theorem 1.5");
            add_base(result, "triangle-manhattan",
                     chromatic_base(ForbiddenConfig::manhattan_triangle(3, 4, 5)), "Theorem 3.2");
            add_base(result, "simplex-manhattan-k3",
                     chromatic_base(ForbiddenConfig::simplex(3, Norm::manhattan)), "Theorem 3.2");
            add_base(result, "sunflower-k3", sunflower_base(3), "Theorem 1.3");
            add_base(result, "intersection-centered-c1",
                     forbidden_intersection_base(0.5, 0.25, 1), "Theorem 1.6", "tight");
            add_base(result, "intersection-centered-c3",
                     forbidden_intersection_base(0.5, 0.25, 3), "Theorem 1.8");
            add_base(result, "partition-symmetric-rho.5-sigma.15",
                     plan_rate(PartitionPlan::symmetric(0.5, 0.15, 3), 0.5), "§3.3",
                     "three symmetric blocks");
            add_base(result, "intersection-rho.5-sigma.15-c1",
                     forbidden_intersection_base(0.5, 0.15, 1), "Theorem 1.6",
                     "tight target for the partition experiment");
        } else if (app.got_subcommand(c_bound)) {
            result["subcommand"] = "bound";
            auto& in = result["inputs"];
            in["config"] = b_kind;
            Norm norm = b_norm == "manhattan" ? Norm::manhattan : Norm::euclidean;
            if (b_norm != "manhattan" && b_norm != "euclidean")
                throw UsageError("unknown norm: " + b_norm);
            if (b_kind == "sunflower") {
                in["k"] = b_k;
                add_base(result, "sunflower-k" + std::to_string(b_k), sunflower_base(b_k),
                         "Theorem 1.3");
            } else if (b_kind == "intersection") {
                in["rho"] = b_rho;
                in["sigma"] = b_sigma;
                in["c"] = b_c;
                std::string tag = b_c == 1 ? "Theorem 1.6" : "Theorem 1.8";
                std::string note = b_c == 2 ? "conjecture-conditional two-prime split" : "";
                add_base(result, "intersection",
                         forbidden_intersection_base(b_rho, b_sigma, b_c, b_allow_c2), tag, note);
            } else if (b_kind == "clique") {
                in["rho"] = b_rho;
                in["sigma"] = b_sigma;
                in["k"] = b_k;
                in["c"] = b_c;
                add_base(result, "clique", clique_base(b_rho, b_sigma, b_k, b_c), "Theorem 1.9");
            } else if (b_kind == "semicross-log") {
                in["n"] = b_n;
                in["k"] = b_k;
                add_value(result, "semicross-log", semicross_chromatic_log(b_n, b_k), "plumbing",
                          "n ln(psi2) - ln(k), o(1) dropped");
            } else if (b_kind == "simplex-threshold") {
                in["n"] = b_n;
                in["eps"] = b_eps;
                add_value(result, "simplex-threshold",
                          simplex_dimension_threshold(b_n, b_eps), "Problem 1",
                          "floor((ln psi2 - eps) n / ln n), o(1) dropped");
            } else {
                in["k"] = b_k;
                in["norm"] = b_norm;
                if (!b_sides.empty()) in["sides"] = b_sides;
                if (!b_scalings.empty()) in["scalings"] = b_scalings;
                ForbiddenConfig cfg2 = detail::make_config(b_kind, b_k, norm, b_sides, b_scalings);
                add_base(result, b_kind, chromatic_base(cfg2), detail::chromatic_tag(cfg2),
                         "o(1) dropped");
            }
        } else if (app.got_subcommand(c_opt)) {
            result["subcommand"] = "optimize-partition";
            auto& in = result["inputs"];
            in["rho"] = o_rho;
            in["sigma"] = o_sigma;
            in["k"] = o_k;
            in["starts"] = o_knobs.starts;
            in["seed"] = o_knobs.seed;
            in["tol"] = o_knobs.tol;
            OptimizeConfig oc;
            oc.starts = o_knobs.starts;
            oc.seed = o_knobs.seed;
            oc.tol = o_knobs.tol;
            auto res = optimize_plan(o_rho, o_sigma, o_k, oc);
            add_base(result, "optimized", res.rate, "§3.3", "partitioned bound");
            add_base(result, "symmetric", res.symmetric_rate, "§3.3");
            add_base(result, "c1-barrier", res.c1_barrier, "Theorem 1.6",
                     "floor for this technique");
            add_value(result, "improved_over_symmetric", res.improved_over_symmetric, "plumbing");
            add_value(result, "evaluations", res.evaluations, "plumbing");
            add_value(result, "plan", plan_to_json(res.plan), "plumbing");
            if (o_certify_n > 0) {
                auto cert = certify_plan(res.plan, o_rho, o_certify_n);
                json parts = json::array();
                for (auto p : cert.split.parts) parts.push_back(p);
                add_value(result, "certificate",
                          json{{"n", cert.n},
                               {"target", cert.target},
                               {"primes", parts},
                               {"deviation", cert.split.deviation},
                               {"proportions", cert.proportions}},
                          "§3.3", "per-block set-minus-intersection differences");
            }
        } else if (app.got_subcommand(c_prime)) {
            result["subcommand"] = "prime-split";
            auto& in = result["inputs"];
            in["target"] = p_target;
            in["parts"] = p_parts;
            PrimeSplit split;
            if (!p_props.empty()) {
                if (p_props.size() != 3)
                    throw UsageError("--proportions needs exactly three values");
                in["proportions"] = p_props;
                split = proportional_prime_split(p_target, {p_props[0], p_props[1], p_props[2]});
            } else if (p_parts == 2) {
                split = two_prime_probe(p_target);
            } else {
                split = near_equal_prime_split(p_target, p_parts);
            }
            json parts = json::array();
            for (auto p : split.parts) parts.push_back(p);
            add_value(result, "parts", parts, "§3.3",
                      split.conjecture_conditional ? "conjecture-conditional existence" : "");
            add_value(result, "deviation", split.deviation, "§3.3",
                      "max distance from the per-part anchor");
        } else if (app.got_subcommand(c_compose)) {
            result["subcommand"] = "compose";
            auto& in = result["inputs"];
            in["eps1"] = q1.epsilon;
            in["c1"] = q1.c;
            in["m1"] = q1.m;
            ComposedProduct comp;
            if (comp_iterate > 0) {
                in["iterate"] = comp_iterate;
                comp = iterated_rate(q1, comp_iterate);
            } else {
                in["eps2"] = q2.epsilon;
                in["c2"] = q2.c;
                in["m2"] = q2.m;
                comp = composed_rate(q1, q2);
            }
            add_base(result, "composed", comp.base, "Theorem 1.2");
            add_value(result, "eta", comp.eta, "Theorem 1.2", "exponent balancing the two rates");
            add_value(result, "epsilon", comp.params.epsilon, "Theorem 1.2");
            add_value(result, "c", comp.params.c, "Theorem 1.2");
            add_value(result, "m", comp.params.m, "Theorem 1.2");
            add_value(result, "summand_log_rate_1", comp.summand_log_rate_1, "Theorem 1.2");
            add_value(result, "summand_log_rate_2", comp.summand_log_rate_2, "Theorem 1.2");
        } else if (app.got_subcommand(c_embed)) {
            result["subcommand"] = "embed";
            auto& in = result["inputs"];
            in["shape"] = e_shape;
            if (e_shape == "right" || e_shape == "acute") {
                if (e_sides.size() != 3) throw UsageError("--sides a,b,c required");
                in["sides"] = e_sides;
                auto spec = euclidean_triangle_to_semicross(e_sides[0], e_sides[1], e_sides[2]);
                bool ok = validate_triangle_embedding(spec, e_sides[0], e_sides[1], e_sides[2],
                                                      Norm::euclidean);
                add_value(result, "semicross_scalings", spec.scalings, "§3.1");
                add_value(result, "validated", ok, "plumbing", "pairwise distances at 1e-12");
            } else if (e_shape == "triangle-manhattan") {
                if (e_sides.size() != 3) throw UsageError("--sides a,b,c required");
                in["sides"] = e_sides;
                auto spec = manhattan_triangle_to_semicross(e_sides[0], e_sides[1], e_sides[2]);
                bool ok = validate_triangle_embedding(spec, e_sides[0], e_sides[1], e_sides[2],
                                                      Norm::manhattan);
                add_value(result, "semicross_scalings", spec.scalings, "§3.2");
                add_value(result, "validated", ok, "plumbing", "pairwise distances at 1e-12");
            } else if (e_shape == "simplex") {
                in["k"] = e_k;
                in["norm"] = e_norm;
                Norm norm = e_norm == "manhattan" ? Norm::manhattan : Norm::euclidean;
                auto emb = simplex_to_semicross(e_k, norm);
                add_value(result, "semicross_scalings", emb.spec.scalings,
                          norm == Norm::euclidean ? "§3.1" : "§3.2");
                add_value(result, "side", emb.side, "plumbing", "realized simplex side length");
                add_value(result, "unit_rescale", emb.unit_rescale, "plumbing",
                          "multiply scalings by this for a unit simplex");
            } else if (e_shape == "grid") {
                if (e_points_path.empty()) throw UsageError("--points file required");
                in["points"] = e_points_path;
                auto pts = read_points_json(e_points_path);
                auto batons = finite_set_to_grid(pts);
                json arr = json::array();
                for (const auto& b : batons) arr.push_back(b.scalings);
                add_value(result, "batons", arr, "§3.2",
                          "per-coordinate gap lists; empty = single point");
            } else {
                throw UsageError("unknown shape: " + e_shape);
            }
        } else if (app.got_subcommand(c_verify)) {
            result["subcommand"] = "verify";
            auto& in = result["inputs"];
            in["suite"] = v_suite;
            in["seed"] = v_knobs.seed;
            in["trials"] = v_knobs.trials;
            in["budget"] = v_knobs.budget;
            int violations = 0;
            if (!v_family_path.empty()) {
                SetFamily fam = read_family_file(v_family_path);
                in["family"] = v_family_path;
                add_value(result, "family_size", fam.members.size(), "plumbing");
                if (v_sunflower_k >= 3) {
                    auto found = find_weak_sunflower(fam, v_sunflower_k);
                    add_value(result, "weak_sunflower",
                              found ? json(*found) : json(nullptr), "Theorem 1.3",
                              found ? "member indices" : "none found");
                }
                if (v_avoid_s >= 0)
                    add_value(result, "s_avoiding", is_s_avoiding(fam, v_avoid_s), "plumbing",
                              "s = " + std::to_string(v_avoid_s));
            } else if (v_suite == "family" || v_suite == "all") {
                auto oc = detail::family_suite(v_knobs.trials, v_knobs.seed);
                violations += oc.violations;
                add_value(result, "family_suite",
                          json{{"trials", oc.trials}, {"violations", oc.violations}},
                          "§3.4", "shift identity, preservation, duality");
            }
            if (v_graphs_path.empty()) {
                if (v_suite == "tree-concat" || v_suite == "all") {
                    auto oc = detail::tree_suite(v_knobs.trials, v_knobs.seed, v_max_vertices);
                    violations += oc.violations;
                    add_value(result, "tree_suite",
                              json{{"trials", oc.trials}, {"violations", oc.violations}},
                              "Lemma 2.1", "homomorphisms above the independence bound");
                    auto oc2 = detail::ortho_suite(v_knobs.trials, v_knobs.seed + 1, v_knobs.budget);
                    violations += oc2.violations;
                    add_value(result, "ortho_suite",
                              json{{"trials", oc2.trials}, {"violations", oc2.violations}},
                              "Lemma 2.2", "orthogonal star/path bound");
                }
            } else {
                in["graphs"] = v_graphs_path;
                auto gs = read_graphs_json(v_graphs_path);
                for (OrthoShape shape : {OrthoShape::star, OrthoShape::path}) {
                    if (v_shape != "both" && v_shape != shape_name(shape)) continue;
                    auto rep = verify_concat_bound(gs, shape, v_knobs.trials, v_knobs.seed);
                    violations += rep.violations;
                    add_value(result, std::string("concat_bound_") + shape_name(shape),
                              json{{"trials", rep.trials},
                                   {"violations", rep.violations},
                                   {"worst_slack", rep.worst_slack}},
                              "Lemma 2.2");
                }
            }
            add_value(result, "violations", violations, "plumbing");
            if (violations > 0)
                throw CertificationError("verify: " + std::to_string(violations) +
                                         " violations of certified properties");
        }
    } catch (const UsageError& e) {
        result["status"] = json{{"kind", "usage"}, {"message", e.what()}};
        code = 2;
        err << "error (usage): " << e.what() << "\n";
    } catch (const CertificationError& e) {
        result["status"] = json{{"kind", "certification"}, {"message", e.what()}};
        code = 3;
        err << "error (certification): " << e.what() << "\n";
    } catch (const CapacityError& e) {
        result["status"] = json{{"kind", "capacity"}, {"message", e.what()}};
        code = 1;
        err << "error (capacity): " << e.what() << "\n";
    } catch (const DomainError& e) {
        result["status"] = json{{"kind", "domain"}, {"message", e.what()}};
        code = 1;
        err << "error (domain): " << e.what() << "\n";
    }
    emit(out, result, as_json);
    return code;
}

} // namespace ramsey::cli
