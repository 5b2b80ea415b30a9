// plbgraph: generate power-law graphs, verify degree-bound properties, run
// greedy/exact solvers, evaluate closed-form guarantees, and build the
// hardness-reduction embeddings. All reports are JSON on stdout (or --out).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "plb/bounds.hpp"
#include "plb/embed.hpp"
#include "plb/experiment.hpp"
#include "plb/generators.hpp"
#include "plb/graph.hpp"
#include "plb/oracles.hpp"
#include "plb/plb_check.hpp"
#include "plb/solvers.hpp"
#include "plb/weights.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << doc.dump(2) << "\n";
    }
}

json plb_report_json(const plb::PlbReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["beta"] = rep.beta;
    j["t"] = rep.t;
    j["c1_fit"] = rep.c1_fit;
    j["c2_fit"] = rep.c2_fit;
    j["c3_fit"] = rep.c3_fit;
    j["per_bucket"] = json::array();
    for (const auto& row : rep.per_bucket)
        j["per_bucket"].push_back({{"d", row.d}, {"count", row.count}, {"unit_bound", row.unit_bound}});
    j["worst_vertex"] = rep.worst_vertex ? json(*rep.worst_vertex) : json(nullptr);
    j["witness_bucket_u"] = rep.witness_bucket_u;
    j["witness_bucket_l"] = rep.witness_bucket_l;
    j["pass_u"] = rep.pass_u ? json(*rep.pass_u) : json(nullptr);
    j["pass_l"] = rep.pass_l ? json(*rep.pass_l) : json(nullptr);
    j["pass_n"] = rep.pass_n ? json(*rep.pass_n) : json(nullptr);
    return j;
}

json solve_result_json(const plb::SolveResult& res) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["problem"] = plb::problem_name(res.problem);
    j["algorithm"] = res.algorithm;
    j["size"] = res.solution.size();
    j["valid"] = res.valid;
    j["solution"] = res.solution;
    if (res.trace) {
        j["trace"] = json::array();
        for (const auto& step : *res.trace)
            j["trace"].push_back({{"chosen", step.chosen}, {"gain", step.gain}});
    }
    return j;
}

json scalar_json(const plb::bounds::Scalar& s) {
    json j;
    j["value"] = s.value;
    j["exact"] = s.exact ? json(plb::bounds::rational_to_string(*s.exact)) : json(nullptr);
    return j;
}

plb::bounds::Scalar scalar_arg(const std::string& text) {
    try {
        return plb::bounds::Scalar::from_decimal(text);
    } catch (const std::invalid_argument&) {
        return plb::bounds::Scalar::from_double(std::stod(text));
    }
}

json gadget_json(const plb::EmbedResult& res) {
    json arr = json::array();
    for (const auto& rec : res.gadget_inventory)
        arr.push_back({{"bucket", rec.bucket},
                       {"kind", plb::gadget_kind_name(rec.kind)},
                       {"count", rec.count},
                       {"size", rec.size}});
    return arr;
}

json experiment_json(const plb::ExperimentReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["model"] = rep.spec.model;
    json params;
    params["n"] = rep.spec.n;
    params["beta_prime"] = rep.spec.beta_prime;
    params["w_min"] = rep.spec.w_min;
    params["dim"] = rep.spec.dim;
    params["alpha"] = rep.spec.alpha;
    params["alpha_h"] = rep.spec.alpha_h;
    params["c_h"] = rep.spec.c_h;
    params["t_h"] = rep.spec.t_h;
    params["e_alpha"] = rep.spec.e_alpha;
    params["beta_gen"] = rep.spec.beta_gen;
    params["simple"] = rep.spec.simple;
    j["params"] = params;
    j["beta"] = rep.beta;
    j["t"] = rep.t;
    j["seeds"] = rep.seeds;
    j["per_trial"] = json::array();
    for (const auto& ts : rep.per_trial) {
        json row;
        row["seed"] = ts.seed;
        row["c1_fit"] = ts.c1_fit;
        row["c2_fit"] = ts.c2_fit;
        row["c3_fit"] = ts.c3_fit;
        row["n"] = ts.n;
        row["m"] = ts.m;
        row["max_degree"] = ts.max_degree;
        row["tail_slope"] = ts.tail_slope ? json(*ts.tail_slope) : json(nullptr);
        j["per_trial"].push_back(row);
    }
    json agg;
    agg["c1_median"] = rep.aggregates.c1_median;
    agg["c1_max"] = rep.aggregates.c1_max;
    agg["c2_median"] = rep.aggregates.c2_median;
    agg["c2_min"] = rep.aggregates.c2_min;
    agg["c3_median"] = rep.aggregates.c3_median;
    agg["c3_max"] = rep.aggregates.c3_max;
    agg["tail_slope_median"] =
        rep.aggregates.tail_slope_median ? json(*rep.aggregates.tail_slope_median) : json(nullptr);
    j["aggregates"] = agg;
    return j;
}

json ratio_rows_json(const std::vector<plb::RatioRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json r;
        r["instance"] = row.instance_id;
        if (row.skipped) {
            r["skipped"] = true;
            r["reason"] = row.reason;
        } else {
            r["check"] = row.check;
            r["measured"] = row.measured;
            r["reference"] = row.reference;
            r["ratio"] = row.ratio;
            r["bound"] = row.bound;
            r["bound_respected"] = row.respected;
        }
        arr.push_back(r);
    }
    return arr;
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec, std::uint64_t base, std::size_t count) {
    std::vector<std::uint64_t> seeds;
    if (!spec.empty()) {
        std::size_t pos = 0;
        while (pos < spec.size()) {
            auto comma = spec.find(',', pos);
            if (comma == std::string::npos) comma = spec.size();
            seeds.push_back(std::stoull(spec.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) seeds.push_back(base + i);
    }
    return seeds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-law bounded graph toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "reports are JSON (always on; accepted for compatibility)");

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a random graph");
    std::string gen_model, gen_out, gen_dump_weights;
    plb::GenSpec spec;
    std::uint64_t gen_seed = 1;
    gen->add_option("--model", gen_model, "chung-lu | girg | hyperbolic | abplg")->required();
    gen->add_option("--n", spec.n, "vertex count (chung-lu, girg, hyperbolic)");
    gen->add_option("--beta-prime", spec.beta_prime, "weight exponent > 2");
    gen->add_option("--wmin", spec.w_min, "minimum weight >= 1");
    gen->add_option("--dim", spec.dim, "torus dimension (girg)");
    gen->add_option("--alpha", spec.alpha, "decay exponent > 1 (girg)");
    gen->add_option("--alpha-h", spec.alpha_h, "radial dispersion (hyperbolic)");
    gen->add_option("--c-h", spec.c_h, "radius offset (hyperbolic)");
    gen->add_option("--t-h", spec.t_h, "temperature (hyperbolic)");
    gen->add_option("--e-alpha", spec.e_alpha, "scale e^alpha >= 1 (abplg)");
    gen->add_option("--beta", spec.beta_gen, "degree exponent > 1 (abplg)");
    gen->add_flag("--simple", spec.simple, "erase parallels/loops (abplg)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "edge-list output path")->required();
    gen->add_option("--dump-weights", gen_dump_weights, "also write the weight sequence, one per line");

    // ---- check --------------------------------------------------------
    auto* check = app.add_subcommand("check", "fit / check the degree-bound properties");
    std::string check_in;
    plb::PlbParams check_params;
    double check_c1 = -1, check_c2 = -1, check_c3 = -1;
    check->add_option("--in", check_in, "input edge list")->required();
    check->add_option("--beta", check_params.beta, "exponent > 1")->required();
    check->add_option("--t", check_params.t, "shift >= 0");
    check->add_option("--c1", check_c1, "upper-bound constant to check");
    check->add_option("--c2", check_c2, "lower-bound constant to check");
    check->add_option("--c3", check_c3, "neighborhood constant to check");
    check->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // ---- solve --------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "run a greedy / matching solver");
    std::string solve_problem, solve_algo = "greedy", solve_in;
    bool solve_trace = false;
    solve->add_option("--problem", solve_problem, "mds | cds | mis | mvc")->required();
    solve->add_option("--algo", solve_algo, "greedy | matching");
    solve->add_option("--in", solve_in, "input edge list")->required();
    solve->add_flag("--trace", solve_trace, "include per-step log");
    solve->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // ---- exact --------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "exact optimum on a small instance");
    std::string exact_problem, exact_in;
    std::size_t exact_budget = 0;
    exact->add_option("--problem", exact_problem, "mds | mis | mvc | cds")->required();
    exact->add_option("--in", exact_in, "input edge list")->required();
    exact->add_option("--budget", exact_budget, "vertex limit override");
    exact->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // ---- bound --------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "closed-form constants and guarantees");
    std::string bound_which, b_c1 = "1", b_c2 = "0.05", b_beta = "3", b_t = "0", b_gamma = "0", b_c = "1";
    std::string bound_problem = "mds", bound_mode = "multigraph", bound_gkind = "linear";
    double b_n = 0, b_m = 0, b_cc = 2, b_bigc = 1, b_dmin = 1;
    unsigned b_a = 1, b_b = 2;
    bool b_connected = false;
    bound->add_option("--which", bound_which, "a | b | bundle | pvl | mis-lb | hardness | lemma22 | zeta")->required();
    bound->add_option("--c1", b_c1, "PLB-U constant (decimal)");
    bound->add_option("--c2", b_c2, "PLB-L constant (decimal)");
    bound->add_option("--beta", b_beta, "exponent (decimal)");
    bound->add_option("--t", b_t, "shift (decimal)");
    bound->add_option("--gamma", b_gamma, "MIS base-bound slack (decimal)");
    bound->add_option("--problem", bound_problem, "mds | mis | mvc (hardness)");
    bound->add_option("--mode", bound_mode, "multigraph | simple (hardness)");
    bound->add_option("--g-kind", bound_gkind, "linear | log1p (pvl)");
    bound->add_option("--pvl-c", b_cc, "doubling constant c (pvl)");
    bound->add_option("--pvl-C", b_bigc, "additive constant C (pvl)");
    bound->add_option("--n", b_n, "graph size (pvl)");
    bound->add_option("--m", b_m, "volume lower bound M (pvl)");
    bound->add_option("--dmin", b_dmin, "minimum degree (mis-lb)");
    bound->add_flag("--connected", b_connected, "connected graph with dmin=1 (mis-lb)");
    bound->add_option("--a", b_a, "a (lemma22)");
    bound->add_option("--b", b_b, "b (lemma22)");
    bound->add_option("--c", b_c, "exponent c > 0 (lemma22, decimal)");
    bound->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // ---- embed --------------------------------------------------------
    auto* embed = app.add_subcommand("embed", "embed a cubic graph into a PLB graph");
    std::string embed_mode, embed_in, embed_out, embed_report;
    double e_beta = 3, e_t = 0, e_c2 = 0.02;
    embed->add_option("--mode", embed_mode, "multi | simple")->required();
    embed->add_option("--in", embed_in, "cubic input edge list")->required();
    embed->add_option("--beta", e_beta, "exponent");
    embed->add_option("--t", e_t, "shift >= 0");
    embed->add_option("--c2", e_c2, "lower-bound constant");
    embed->add_option("--out", embed_out, "edge-list output path")->required();
    embed->add_option("--report", embed_report, "JSON report path (default stdout)");

    // ---- experiment ---------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "fit PLB constants across seeds");
    plb::GenSpec exp_spec;
    std::string exp_model, exp_seeds_list;
    double exp_beta = 2.5, exp_t = 0, exp_eta = 0.5;
    std::uint64_t exp_seed = 1;
    std::size_t exp_num_seeds = 10;
    int exp_jobs = 1;
    bool exp_beta_given = false;
    experiment->add_option("--model", exp_model, "chung-lu | girg | hyperbolic | abplg")->required();
    experiment->add_option("--n", exp_spec.n, "vertex count");
    experiment->add_option("--beta-prime", exp_spec.beta_prime, "weight exponent");
    experiment->add_option("--wmin", exp_spec.w_min, "minimum weight");
    experiment->add_option("--dim", exp_spec.dim, "torus dimension");
    experiment->add_option("--alpha", exp_spec.alpha, "girg decay exponent");
    experiment->add_option("--alpha-h", exp_spec.alpha_h, "hyperbolic dispersion");
    experiment->add_option("--c-h", exp_spec.c_h, "hyperbolic radius offset");
    experiment->add_option("--t-h", exp_spec.t_h, "hyperbolic temperature");
    experiment->add_option("--e-alpha", exp_spec.e_alpha, "abplg scale");
    experiment->add_option("--beta-gen", exp_spec.beta_gen, "abplg exponent");
    experiment->add_flag("--simple", exp_spec.simple, "abplg simple mode");
    experiment->add_option("--beta", exp_beta, "check exponent (default beta'-eta)")->each([&](const std::string&) { exp_beta_given = true; });
    experiment->add_option("--t", exp_t, "check shift");
    experiment->add_option("--eta", exp_eta, "exponent slack, check at beta'-eta unless --beta given");
    experiment->add_option("--seeds", exp_seeds_list, "comma-separated explicit seeds");
    experiment->add_option("--seed", exp_seed, "base seed (seeds are seed..seed+k-1)");
    experiment->add_option("--num-seeds", exp_num_seeds, "number of trials");
    experiment->add_option("--jobs", exp_jobs, "worker threads");
    experiment->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // ---- ratio-study ---------------------------------------------------
    auto* study = app.add_subcommand("ratio-study", "greedy vs exact oracle bound checks");
    std::string study_family = "random-plb";
    std::size_t study_count = 10, study_size = 20;
    double study_beta = 3, study_t = 0;
    std::uint64_t study_seed = 1;
    study->add_option("--family", study_family, "random-plb | embedded");
    study->add_option("--count", study_count, "number of instances");
    study->add_option("--size", study_size, "instance size (within oracle budgets)");
    study->add_option("--beta", study_beta, "fit exponent");
    study->add_option("--t", study_t, "fit shift");
    study->add_option("--seed", study_seed, "base seed");
    study->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            spec.model = gen_model;
            plb::Graph g = plb::generate(spec, gen_seed);
            plb::save_graph(g, gen_out);
            if (!gen_dump_weights.empty()) {
                auto ws = plb::power_law_weights(spec.n, spec.beta_prime, spec.w_min);
                std::ofstream wout(gen_dump_weights, std::ios::binary);
                if (!wout) throw std::runtime_error("cannot write " + gen_dump_weights);
                plb::write_weights(ws, wout);
            }
            json j;
            j["schema_version"] = kSchemaVersion;
            j["model"] = gen_model;
            j["seed"] = gen_seed;
            j["n"] = g.num_vertices();
            j["edge_pairs"] = g.num_edge_pairs();
            j["edges"] = g.num_edges();
            j["max_degree"] = g.max_degree();
            j["out"] = gen_out;
            emit(j, out_path);
        } else if (*check) {
            if (check_c1 >= 0) check_params.c1 = check_c1;
            if (check_c2 >= 0) check_params.c2 = check_c2;
            if (check_c3 >= 0) check_params.c3 = check_c3;
            plb::Graph g = plb::load_graph(check_in);
            emit(plb_report_json(plb::check_plb(g, check_params)), out_path);
        } else if (*solve) {
            plb::Graph g = plb::load_graph(solve_in);
            plb::Problem problem = plb::problem_from_name(solve_problem);
            plb::SolveResult res;
            if (solve_algo == "matching") {
                if (problem != plb::Problem::Mvc)
                    throw std::invalid_argument("matching algorithm only solves mvc");
                res = plb::matching_vc(g);
            } else if (solve_algo == "greedy") {
                switch (problem) {
                    case plb::Problem::Mds: res = plb::greedy_mds(g, solve_trace); break;
                    case plb::Problem::Cds: res = plb::greedy_cds(g, solve_trace); break;
                    case plb::Problem::Mis: res = plb::greedy_mis(g, solve_trace); break;
                    case plb::Problem::Mvc: res = plb::greedy_vc_degree(g, solve_trace); break;
                }
            } else {
                throw std::invalid_argument("unknown algorithm: " + solve_algo);
            }
            emit(solve_result_json(res), out_path);
        } else if (*exact) {
            plb::Graph g = plb::load_graph(exact_in);
            plb::Problem problem = plb::problem_from_name(exact_problem);
            plb::OracleResult res;
            switch (problem) {
                case plb::Problem::Mds: res = exact_budget ? plb::exact_mds(g, exact_budget) : plb::exact_mds(g); break;
                case plb::Problem::Mis: res = exact_budget ? plb::exact_mis(g, exact_budget) : plb::exact_mis(g); break;
                case plb::Problem::Mvc: res = exact_budget ? plb::exact_mvc(g, exact_budget) : plb::exact_mvc(g); break;
                case plb::Problem::Cds: res = exact_budget ? plb::exact_cds(g, exact_budget) : plb::exact_cds(g); break;
            }
            json j;
            j["schema_version"] = kSchemaVersion;
            j["problem"] = exact_problem;
            j["size"] = res.size;
            j["witness"] = res.witness;
            emit(j, out_path);
        } else if (*bound) {
            namespace bd = plb::bounds;
            json j;
            j["schema_version"] = kSchemaVersion;
            j["which"] = bound_which;
            auto c1 = scalar_arg(b_c1), c2 = scalar_arg(b_c2), beta = scalar_arg(b_beta),
                 t = scalar_arg(b_t), gamma = scalar_arg(b_gamma);
            if (bound_which == "a") {
                j["result"] = scalar_json(bd::const_a(beta, t));
            } else if (bound_which == "b") {
                j["result"] = scalar_json(bd::const_b(c1, beta, t));
            } else if (bound_which == "bundle") {
                auto g2 = bd::guarantee_bundle(c1, beta, t);
                j["a"] = scalar_json(g2.a);
                j["b"] = scalar_json(g2.b);
                j["mds_lb_fraction"] = scalar_json(g2.mds_lb_fraction);
                j["greedy_ds_ratio"] = scalar_json(g2.greedy_ds_ratio);
                j["cds_ratio"] = scalar_json(g2.cds_ratio);
            } else if (bound_which == "pvl") {
                bd::PvlKind kind;
                if (bound_gkind == "linear")
                    kind = bd::PvlKind::Linear;
                else if (bound_gkind == "log1p")
                    kind = bd::PvlKind::Log1p;
                else
                    throw std::invalid_argument("unsupported g kind: " + bound_gkind);
                j["result"] = scalar_json(bd::pvl_bound(kind, b_cc, b_bigc, c1, beta, t, b_n, b_m));
            } else if (bound_which == "mis-lb") {
                j["result"] = scalar_json(
                    bd::mis_plbl_lower(c2, beta, t, static_cast<unsigned>(b_dmin), b_connected));
            } else if (bound_which == "hardness") {
                bd::HardnessProblem hp;
                if (bound_problem == "mds") hp = bd::HardnessProblem::Mds;
                else if (bound_problem == "mis") hp = bd::HardnessProblem::Mis;
                else if (bound_problem == "mvc") hp = bd::HardnessProblem::Mvc;
                else throw std::invalid_argument("hardness problem must be mds|mis|mvc");
                bd::HardnessMode hm;
                if (bound_mode == "multigraph") hm = bd::HardnessMode::Multigraph;
                else if (bound_mode == "simple") hm = bd::HardnessMode::Simple;
                else throw std::invalid_argument("hardness mode must be multigraph|simple");
                auto res = bd::hardness_factor(hp, hm, c1, c2, beta, t, gamma);
                j["factor"] = scalar_json(res.factor);
                j["growth_c"] = scalar_json(res.growth_c);
                j["bracket"] = res.bracket;
            } else if (bound_which == "lemma22") {
                auto res = bd::lemma22_bound(b_a, b_b, scalar_arg(b_c));
                j["lhs"] = scalar_json(res.lhs);
                j["rhs"] = scalar_json(res.rhs);
                j["holds"] = res.lhs.value <= res.rhs.value;
            } else if (bound_which == "zeta") {
                j["result"] = {{"value", bd::zeta(beta.value)}, {"exact", nullptr}};
            } else {
                throw std::invalid_argument("unknown bound kind: " + bound_which);
            }
            emit(j, out_path);
        } else if (*embed) {
            plb::Graph cubic = plb::load_graph(embed_in);
            plb::EmbedResult res;
            if (embed_mode == "multi")
                res = plb::embed_multigraph(cubic, e_beta, e_t, e_c2);
            else if (embed_mode == "simple")
                res = plb::embed_simple(cubic, e_beta, e_t, e_c2);
            else
                throw std::invalid_argument("embed mode must be multi|simple");
            plb::save_graph(res.graph, embed_out);
            json j;
            j["schema_version"] = kSchemaVersion;
            j["mode"] = embed_mode;
            j["beta"] = res.params.beta;
            j["t"] = res.params.t;
            j["c2"] = res.params.c2;
            j["n_input"] = res.params.n_input;
            j["n_total"] = res.params.n_total;
            j["c_growth"] = res.params.c_growth;
            j["parity_bumped"] = res.params.parity_bumped;
            j["d_built"] = res.params.d_built;
            j["c1_fit"] = res.params.c1_fit;
            j["c3_fit"] = res.params.c3_fit;
            j["growth_C"] = {{"mds", res.growth_C.mds}, {"mis", res.growth_C.mis}, {"mvc", res.growth_C.mvc}};
            j["gadgets"] = gadget_json(res);
            j["input_component_map"] = res.input_component_map;
            j["out"] = embed_out;
            emit(j, embed_report.empty() ? out_path : embed_report);
        } else if (*experiment) {
            exp_spec.model = exp_model;
            double beta = exp_beta_given ? exp_beta : exp_spec.beta_prime - exp_eta;
            auto seeds = parse_seeds(exp_seeds_list, exp_seed, exp_num_seeds);
            auto rep = plb::run_experiment(exp_spec, beta, exp_t, seeds, exp_jobs);
            emit(experiment_json(rep), out_path);
        } else if (*study) {
            plb::StudyFamily family;
            if (study_family == "random-plb") family = plb::StudyFamily::RandomPlb;
            else if (study_family == "embedded") family = plb::StudyFamily::Embedded;
            else throw std::invalid_argument("family must be random-plb|embedded");
            auto rows = plb::ratio_study(family, study_count, study_size, study_beta, study_t, study_seed);
            json j;
            j["schema_version"] = kSchemaVersion;
            j["family"] = study_family;
            j["beta"] = study_beta;
            j["t"] = study_t;
            j["seed"] = study_seed;
            j["rows"] = ratio_rows_json(rows);
            bool all = true;
            for (const auto& row : rows)
                if (!row.skipped && !row.respected) all = false;
            j["all_bounds_respected"] = all;
            emit(j, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
