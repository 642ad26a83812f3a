#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riglab/asymptotics.hpp"
#include "riglab/consensus.hpp"
#include "riglab/coupling.hpp"
#include "riglab/errors.hpp"
#include "riglab/graph_io.hpp"
#include "riglab/props.hpp"
#include "riglab/sampling.hpp"
#include "riglab/sweep.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    int threads = 0;  // 0: RIGLAB_THREADS env or 1
    std::string out;
    std::string format = "csv";
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RIGLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(g.out);
        if (!f) throw riglab::io_error("cannot open for writing: " + g.out);
        f << text;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw riglab::io_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

riglab::SizeDistribution parse_dist(std::int64_t P, const std::string& spec) {
    if (spec.rfind("point:", 0) == 0)
        return riglab::SizeDistribution::point_mass(P, std::stoll(spec.substr(6)));
    if (spec.rfind("uniform:", 0) == 0) {
        auto rest = spec.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw riglab::invalid_parameter("expected uniform:lo:hi");
        return riglab::SizeDistribution::uniform_range(
            P, std::stoll(rest.substr(0, colon)), std::stoll(rest.substr(colon + 1)));
    }
    if (!spec.empty() && spec[0] == '@') {
        json j = json::parse(read_file(spec.substr(1)));
        return riglab::SizeDistribution(j.at("P").get<std::int64_t>(),
                                        j.at("pmf").get<std::vector<double>>());
    }
    throw riglab::invalid_parameter("size distribution must be point:K, uniform:lo:hi or @file");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

int run_verify_battery(const GlobalOpts& g, int trials);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"riglab: a laboratory for random intersection graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "base seed")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads (RIGLAB_THREADS as fallback)");
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "sample a graph and write it as an edge list");
    std::string gen_model = "uniform";
    int gen_n = 0;
    std::int64_t gen_P = 1, gen_K = 1;
    double gen_p = 0, gen_phat = 0;
    std::string gen_dist, gen_assignment_out;
    gen->add_option("--model", gen_model, "binomial|uniform|general|er")->required();
    gen->add_option("-n,--nodes", gen_n, "node count")->required();
    gen->add_option("-P,--pool", gen_P, "object pool size");
    gen->add_option("-K,--set-size", gen_K, "uniform model set size");
    gen->add_option("-p,--prob", gen_p, "binomial model inclusion probability");
    gen->add_option("--p-hat", gen_phat, "er model edge probability");
    gen->add_option("--dist", gen_dist, "general model sizes: point:K | uniform:lo:hi | @file");
    gen->add_option("--assignment-out", gen_assignment_out, "also write the object sets as JSON");

    // ---- check ----
    auto* chk = app.add_subcommand("check", "run a property checker on a graph file");
    std::string chk_in, chk_prop = "connectivity";
    int chk_k = 1, chk_cap = riglab::kRobustnessDefaultCap, chk_budget = 10000;
    chk->add_option("--in", chk_in, "edge-list file")->required();
    chk->add_option("--property", chk_prop,
                    "connectivity|min_degree|robustness|robustness_screen")
        ->required();
    chk->add_option("-k", chk_k, "property level");
    chk->add_option("--cap", chk_cap, "exhaustive robustness cap");
    chk->add_option("--budget", chk_budget, "screen falsification budget");

    // ---- threshold ----
    auto* thr = app.add_subcommand("threshold", "scaling deviation and predicted limit");
    std::string thr_model = "uniform";
    int thr_n = 0, thr_k = 1;
    std::int64_t thr_P = 1, thr_K = 0;
    double thr_p = -1, thr_mean = -1;
    thr->add_option("--model", thr_model, "binomial|uniform|general")->required();
    thr->add_option("-n,--nodes", thr_n)->required();
    thr->add_option("-P,--pool", thr_P)->required();
    thr->add_option("-K,--set-size", thr_K);
    thr->add_option("-p,--prob", thr_p);
    thr->add_option("--mean", thr_mean, "general model mean set size");
    thr->add_option("-k", thr_k)->required();

    // ---- curve ----
    auto* crv = app.add_subcommand("curve", "predicted transition curve over a grid");
    std::string crv_model = "binomial";
    int crv_n = 0, crv_k = 1, crv_count = 0;
    std::int64_t crv_P = 1;
    double crv_from = 0, crv_to = 0;
    std::string crv_grid;
    crv->add_option("--model", crv_model, "binomial|uniform|general")->required();
    crv->add_option("-n,--nodes", crv_n)->required();
    crv->add_option("-P,--pool", crv_P)->required();
    crv->add_option("-k", crv_k)->required();
    crv->add_option("--from", crv_from);
    crv->add_option("--to", crv_to);
    crv->add_option("--count", crv_count);
    crv->add_option("--grid", crv_grid, "explicit comma-separated grid");

    // ---- couple ----
    auto* cpl = app.add_subcommand("couple", "coupling brackets and verification batteries");
    std::string cpl_model = "binomial";
    int cpl_n = 0;
    std::int64_t cpl_P = 1;
    double cpl_p = 0, cpl_mean = 0, cpl_var = 0;
    bool cpl_verify = false;
    int cpl_trials = 1000;
    cpl->add_option("--model", cpl_model, "binomial|general");
    cpl->add_option("-n,--nodes", cpl_n);
    cpl->add_option("-P,--pool", cpl_P);
    cpl->add_option("-p,--prob", cpl_p);
    cpl->add_option("--mean", cpl_mean);
    cpl->add_option("--var", cpl_var);
    cpl->add_flag("--verify", cpl_verify, "run containment/dominance batteries");
    cpl->add_option("--trials", cpl_trials, "battery trial count");

    // ---- consensus ----
    auto* cns = app.add_subcommand("consensus", "simulate trimmed-mean consensus");
    std::string cns_in, cns_config, cns_adversaries, cns_strategy = "constant", cns_x0;
    std::string cns_model, cns_dist;
    int cns_n = 0, cns_h = 0, cns_rounds = 10000;
    std::int64_t cns_P = 1, cns_K = 1;
    double cns_p = 0, cns_phat = 0;
    double cns_value = 0, cns_lo = 0, cns_hi = 1, cns_tol = 1e-9, cns_alpha = 0.01;
    cns->add_option("--in", cns_in, "topology edge-list file");
    cns->add_option("--model", cns_model, "or sample: binomial|uniform|general|er");
    cns->add_option("-n,--nodes", cns_n);
    cns->add_option("-P,--pool", cns_P);
    cns->add_option("-K,--set-size", cns_K);
    cns->add_option("-p,--prob", cns_p);
    cns->add_option("--p-hat", cns_phat);
    cns->add_option("--dist", cns_dist);
    cns->add_option("--config", cns_config, "JSON config file");
    cns->add_option("-H,--trim", cns_h, "adversary tolerance h (values trimmed per side)");
    cns->add_option("--adversaries", cns_adversaries, "comma-separated node ids");
    cns->add_option("--strategy", cns_strategy, "constant|oscillate|max_push");
    cns->add_option("--value", cns_value, "constant strategy value");
    cns->add_option("--lo", cns_lo, "oscillate low value");
    cns->add_option("--hi", cns_hi, "oscillate high value");
    cns->add_option("--rounds", cns_rounds, "max rounds");
    cns->add_option("--tol", cns_tol, "convergence threshold on benign spread");
    cns->add_option("--alpha", cns_alpha, "weight floor");
    cns->add_option("--x0", cns_x0, "comma-separated initial values (default: seeded U[0,1])");

    // ---- sweep / fig presets ----
    auto* swp = app.add_subcommand("sweep", "Monte Carlo sweep from a JSON config or preset");
    std::string swp_config, swp_preset;
    int swp_trials = 0;
    swp->add_option("--config", swp_config, "JSON config file");
    swp->add_option("--preset", swp_preset, "fig1|fig2|small-robust");
    swp->add_option("--trials", swp_trials, "override trials per point");

    auto* fig1 = app.add_subcommand("fig1", "binomial transition sweep preset (n=2000, P=20000)");
    auto* fig2 = app.add_subcommand("fig2", "uniform transition sweep preset (n=2000, P=20000)");
    int fig_trials = 0;
    bool fig_seed_set = false;
    for (auto* fig : {fig1, fig2}) {
        fig->add_option("--trials", fig_trials, "override trials per point");
    }
    (void)fig_seed_set;

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    const bool seed_given = app.count("--seed") > 0;

    try {
        if (gen->parsed()) {
            riglab::Seed seed{g.seed};
            std::ostringstream os;
            riglab::ObjectAssignment assignment;
            riglab::Graph graph;
            auto kind = riglab::model_kind_from_string(gen_model);
            switch (kind) {
                case riglab::ModelKind::uniform: {
                    auto s = riglab::sample_uniform_rig(gen_n, gen_P, gen_K, seed);
                    graph = std::move(s.graph);
                    assignment = std::move(s.assignment);
                    break;
                }
                case riglab::ModelKind::binomial: {
                    auto s = riglab::sample_binomial_rig(gen_n, gen_P, gen_p, seed);
                    graph = std::move(s.graph);
                    assignment = std::move(s.assignment);
                    break;
                }
                case riglab::ModelKind::general: {
                    auto dist = parse_dist(gen_P, gen_dist);
                    auto s = riglab::sample_general_rig(gen_n, dist, seed);
                    graph = std::move(s.graph);
                    assignment = std::move(s.assignment);
                    break;
                }
                case riglab::ModelKind::er:
                    graph = riglab::sample_er(gen_n, gen_phat, seed);
                    break;
            }
            riglab::write_edge_list(os, graph);
            emit(g, os.str());
            if (!gen_assignment_out.empty()) {
                if (kind == riglab::ModelKind::er)
                    throw riglab::invalid_parameter("er model has no object assignment");
                std::ofstream f(gen_assignment_out);
                f << riglab::assignment_to_json(assignment) << '\n';
            }
            return 0;
        }

        if (chk->parsed()) {
            riglab::Graph graph = riglab::read_edge_list_file(chk_in);
            auto t0 = std::chrono::steady_clock::now();
            json out;
            out["property"] = chk_prop;
            out["k"] = chk_k;
            auto prop = riglab::property_from_string(chk_prop);
            switch (prop) {
                case riglab::PropertyKind::connectivity: {
                    auto v = riglab::connectivity_verdict(graph, chk_k);
                    out["holds"] = v.holds;
                    if (!v.holds) {
                        if (!v.separator.empty()) out["witness"]["separator"] = v.separator;
                        if (v.has_pair)
                            out["witness"]["disconnected_pair"] = {v.pair_u, v.pair_v};
                    }
                    break;
                }
                case riglab::PropertyKind::min_degree: {
                    int d = riglab::min_degree(graph);
                    out["holds"] = d >= chk_k;
                    out["min_degree"] = d;
                    break;
                }
                case riglab::PropertyKind::robustness: {
                    auto v = riglab::is_k_robust(graph, chk_k, chk_cap);
                    out["holds"] = v.holds;
                    if (!v.holds) {
                        out["witness"]["A"] = v.witness_a;
                        out["witness"]["B"] = v.witness_b;
                    }
                    break;
                }
                case riglab::PropertyKind::robustness_screen: {
                    auto v = riglab::robustness_screen(graph, chk_k, riglab::Seed{g.seed},
                                                       chk_budget);
                    out["outcome"] =
                        v.certified_false() ? "certified_false" : "undecided";
                    if (v.certified_false()) {
                        out["holds"] = false;
                        out["reason"] = v.reason;
                        if (!v.witness_a.empty()) {
                            out["witness"]["A"] = v.witness_a;
                            out["witness"]["B"] = v.witness_b;
                        }
                    }
                    break;
                }
            }
            auto t1 = std::chrono::steady_clock::now();
            out["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            emit(g, out.dump(2));
            return 0;
        }

        if (thr->parsed()) {
            riglab::ScalingReport rep;
            auto kind = riglab::model_kind_from_string(thr_model);
            if (kind == riglab::ModelKind::binomial) {
                if (thr_p < 0) throw riglab::invalid_parameter("binomial model needs -p");
                rep = riglab::alpha_from_scaling_binomial(thr_n, thr_P, thr_p, thr_k);
            } else if (kind == riglab::ModelKind::uniform) {
                if (thr_K < 1) throw riglab::invalid_parameter("uniform model needs -K");
                rep = riglab::alpha_from_scaling_uniform(thr_n, thr_P, thr_K, thr_k);
            } else if (kind == riglab::ModelKind::general) {
                if (thr_mean <= 0) throw riglab::invalid_parameter("general model needs --mean");
                rep = riglab::alpha_from_scaling_general(thr_n, thr_P, thr_mean, thr_k);
            } else {
                throw riglab::invalid_parameter("threshold supports binomial|uniform|general");
            }
            json out{{"model", rep.model},   {"n", rep.n},
                     {"P", rep.P},           {"param", rep.param},
                     {"k", rep.k},           {"lhs", rep.lhs},
                     {"c_n", rep.c_n},       {"alpha_n", rep.alpha_n},
                     {"predicted_limit", rep.predicted_limit}};
            emit(g, out.dump(2));
            return 0;
        }

        if (crv->parsed()) {
            std::vector<double> grid;
            if (!crv_grid.empty()) {
                grid = parse_double_list(crv_grid);
            } else {
                if (crv_count < 1)
                    throw riglab::invalid_parameter("curve needs --grid or --from/--to/--count");
                for (int i = 0; i < crv_count; ++i)
                    grid.push_back(crv_count == 1
                                       ? crv_from
                                       : crv_from + (crv_to - crv_from) * i / (crv_count - 1));
            }
            riglab::ScalingModel model;
            auto kind = riglab::model_kind_from_string(crv_model);
            if (kind == riglab::ModelKind::binomial) model = riglab::ScalingModel::binomial;
            else if (kind == riglab::ModelKind::uniform) model = riglab::ScalingModel::uniform;
            else if (kind == riglab::ModelKind::general) model = riglab::ScalingModel::general;
            else throw riglab::invalid_parameter("curve supports binomial|uniform|general");
            auto points = riglab::predicted_curve(model, crv_n, crv_P, crv_k, grid);
            if (g.format == "json") {
                json arr = json::array();
                for (const auto& pt : points)
                    arr.push_back({{"param", pt.param},
                                   {"alpha_n", pt.alpha_n},
                                   {"predicted_limit", pt.predicted_limit}});
                emit(g, arr.dump(2));
            } else {
                std::ostringstream os;
                os << "param,alpha_n,predicted_limit\n";
                char buf[128];
                for (const auto& pt : points) {
                    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g\n", pt.param,
                                  pt.alpha_n, pt.predicted_limit);
                    os << buf;
                }
                emit(g, os.str());
            }
            return 0;
        }

        if (cpl->parsed()) {
            if (cpl_verify) return run_verify_battery(g, cpl_trials);
            auto kind = riglab::model_kind_from_string(cpl_model);
            if (kind == riglab::ModelKind::binomial) {
                auto b = riglab::binomial_size_bracket(cpl_n, cpl_P, cpl_p);
                auto er = riglab::er_minorant_p_hat(cpl_n, cpl_P, cpl_p);
                json out{{"K_minus", b.K_minus},
                         {"K_plus", b.K_plus},
                         {"p_hat", er.p_hat},
                         {"p_hat_clamped", er.clamped},
                         {"hyp_p_n_ln_n", er.p_ratio},
                         {"hyp_p2P_ln_n", er.p2P_ratio}};
                emit(g, out.dump(2));
            } else if (kind == riglab::ModelKind::general) {
                auto e = riglab::size_bracket_epsilon(cpl_n, cpl_mean, cpl_var);
                json out{{"eps_n", e.eps},
                         {"bracket_lo", e.lo},
                         {"bracket_hi", e.hi},
                         {"in_regime", e.in_regime}};
                if (!e.in_regime)
                    std::cerr << "warning: eps_n >= 1/ln n; variance condition out of regime\n";
                emit(g, out.dump(2));
            } else {
                throw riglab::invalid_parameter("couple supports binomial|general");
            }
            return 0;
        }

        if (cns->parsed()) {
            riglab::Graph graph;
            if (!cns_in.empty()) {
                graph = riglab::read_edge_list_file(cns_in);
            } else if (!cns_model.empty()) {
                riglab::ModelSpec spec;
                spec.kind = riglab::model_kind_from_string(cns_model);
                spec.n = cns_n;
                spec.P = cns_P;
                spec.p = cns_p;
                spec.K = cns_K;
                spec.p_hat = cns_phat;
                if (spec.kind == riglab::ModelKind::general)
                    spec.dist = std::make_shared<riglab::SizeDistribution>(
                        parse_dist(cns_P, cns_dist));
                graph = riglab::sample_model(spec, riglab::Seed{g.seed}.child(0));
            } else {
                throw riglab::invalid_parameter("consensus needs --in or --model");
            }

            riglab::ConsensusConfig cfg;
            if (!cns_config.empty()) {
                json j = json::parse(read_file(cns_config));
                cfg.h = j.value("h", 0);
                cfg.adversaries = j.value("adversaries", std::vector<int>{});
                cfg.strategy = riglab::adversary_strategy_from_string(
                    j.value("strategy", std::string("constant")));
                cfg.constant_value = j.value("value", 0.0);
                cfg.oscillate_lo = j.value("lo", 0.0);
                cfg.oscillate_hi = j.value("hi", 1.0);
                cfg.weight_floor = j.value("weight_floor", 0.01);
                cfg.max_rounds = j.value("max_rounds", 10000);
                cfg.tol = j.value("tol", 1e-9);
            } else {
                cfg.h = cns_h;
                cfg.adversaries = parse_int_list(cns_adversaries);
                cfg.strategy = riglab::adversary_strategy_from_string(cns_strategy);
                cfg.constant_value = cns_value;
                cfg.oscillate_lo = cns_lo;
                cfg.oscillate_hi = cns_hi;
                cfg.weight_floor = cns_alpha;
                cfg.max_rounds = cns_rounds;
                cfg.tol = cns_tol;
            }

            std::vector<double> x0;
            if (!cns_x0.empty()) {
                x0 = parse_double_list(cns_x0);
            } else {
                riglab::Rng rng = riglab::Seed{g.seed}.child(1).rng();
                x0.resize(graph.node_count());
                for (double& x : x0) x = rng.next_double();
            }

            auto trace = riglab::run_filtered_consensus(graph, x0, cfg,
                                                        riglab::Seed{g.seed}.child(2));
            std::ostringstream os;
            os << "round,spread,min,max\n";
            char buf[160];
            std::vector<char> is_adv(graph.node_count(), 0);
            for (int a : cfg.adversaries) is_adv[a] = 1;
            for (std::size_t r = 0; r < trace.values.size(); ++r) {
                double lo = 0, hi = 0;
                bool first = true;
                for (int v = 0; v < graph.node_count(); ++v) {
                    if (is_adv[v]) continue;
                    double x = trace.values[r][v];
                    if (first) { lo = hi = x; first = false; }
                    lo = std::min(lo, x);
                    hi = std::max(hi, x);
                }
                std::snprintf(buf, sizeof(buf), "%zu,%.10g,%.10g,%.10g\n", r,
                              trace.spread[r], lo, hi);
                os << buf;
            }
            emit(g, os.str());
            std::cerr << (trace.converged ? "converged" : "did not converge") << " after "
                      << trace.rounds_run << " rounds; h_local="
                      << (trace.h_local ? "true" : "false")
                      << " safety=" << (trace.safety_ok ? "ok" : "VIOLATED") << '\n';
            return 0;
        }

        if (swp->parsed() || fig1->parsed() || fig2->parsed()) {
            riglab::SweepConfig cfg;
            if (fig1->parsed()) cfg = riglab::preset_fig1();
            else if (fig2->parsed()) cfg = riglab::preset_fig2();
            else if (!swp_preset.empty()) {
                if (swp_preset == "fig1") cfg = riglab::preset_fig1();
                else if (swp_preset == "fig2") cfg = riglab::preset_fig2();
                else if (swp_preset == "small-robust") cfg = riglab::preset_small_robust();
                else throw riglab::invalid_parameter("unknown preset: " + swp_preset);
            } else if (!swp_config.empty()) {
                cfg = riglab::sweep_config_from_json(read_file(swp_config));
            } else {
                throw riglab::invalid_parameter("sweep needs --config or --preset");
            }
            if (seed_given) cfg.seed = g.seed;
            int trials_override = swp->parsed() ? swp_trials : fig_trials;
            if (trials_override > 0) cfg.trials = trials_override;
            cfg.threads = resolve_threads(g.threads);
            auto rows = riglab::run_sweep(cfg);
            if (g.format == "json") {
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"model", r.model},
                                   {"n", r.n},
                                   {"P", r.P},
                                   {"param_name", r.param_name},
                                   {"param_value", r.param_value},
                                   {"k", r.k},
                                   {"property", r.property},
                                   {"trials", r.trials},
                                   {"successes", r.successes},
                                   {"empirical_prob", r.empirical_prob},
                                   {"stderr", r.stderr_},
                                   {"alpha_n", r.alpha_n},
                                   {"predicted_limit", r.predicted_limit}});
                emit(g, arr.dump(2));
            } else {
                emit(g, riglab::sweep_to_csv(rows));
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

namespace {

int run_verify_battery(const GlobalOpts& g, int trials) {
    using namespace riglab;
    bool all_ok = true;
    std::ostringstream report;
    Seed seed{g.seed};

    {  // nested-sampler containment
        int held = 0;
        Rng param_rng = seed.child(10).rng();
        for (int i = 0; i < trials; ++i) {
            std::int64_t P = 5 + static_cast<std::int64_t>(param_rng.next_below(20));
            std::int64_t K2 = 1 + static_cast<std::int64_t>(param_rng.next_below(
                                      static_cast<std::uint64_t>(P)));
            std::int64_t K1 = 1 + static_cast<std::int64_t>(param_rng.next_below(
                                      static_cast<std::uint64_t>(K2)));
            int n = 2 + static_cast<int>(param_rng.next_below(12));
            auto pair = nested_uniform_pair(n, P, K1, K2, seed.child(11).child(i));
            held += pair.subgraph_holds;
        }
        bool ok = held == trials;
        all_ok = all_ok && ok;
        report << (ok ? "PASS" : "FAIL") << " nested uniform containment: " << held << "/"
               << trials << "\n";
    }
    {
        int held = 0;
        Rng param_rng = seed.child(20).rng();
        for (int i = 0; i < trials; ++i) {
            std::int64_t P = 5 + static_cast<std::int64_t>(param_rng.next_below(30));
            double p2 = param_rng.next_double();
            double p1 = p2 * param_rng.next_double();
            int n = 2 + static_cast<int>(param_rng.next_below(12));
            auto pair = nested_binomial_pair(n, P, p1, p2, seed.child(21).child(i));
            held += pair.subgraph_holds;
        }
        bool ok = held == trials;
        all_ok = all_ok && ok;
        report << (ok ? "PASS" : "FAIL") << " nested binomial containment: " << held << "/"
               << trials << "\n";
    }
    {  // size bracket containment frequency
        int held = 0;
        const int seeds = 200;
        for (int i = 0; i < seeds; ++i)
            held += binomial_bracket_holds(500, 1000000, 2e-4, seed.child(30).child(i));
        bool ok = held >= 198;
        all_ok = all_ok && ok;
        report << (ok ? "PASS" : "FAIL") << " binomial size bracket: " << held << "/" << seeds
               << "\n";
    }
    {  // dominance of the binomial graph over its coupled ER graph
        const std::int64_t P = 120000;
        const double p = 3.2e-4;
        auto er_minorant = er_minorant_p_hat(500, P, p);
        GraphSampler lo = [&](Seed s) { return sample_er(500, er_minorant.p_hat, s); };
        GraphSampler hi = [&](Seed s) { return sample_binomial_rig(500, P, p, s).graph; };
        GraphPredicate prop = [](const Graph& gr) { return is_k_connected(gr, 1); };
        auto rep = dominance_test(lo, hi, prop, std::max(trials, 1000), seed.child(40),
                                  resolve_threads(g.threads));
        bool ok = rep.z < 3.0;
        all_ok = all_ok && ok;
        report << (ok ? "PASS" : "FAIL") << " er-minorant dominance: z = " << rep.z
               << " (p_lo = " << rep.p_lo << ", p_hi = " << rep.p_hi << ")\n";
    }
    emit(g, report.str());
    return all_ok ? 0 : 1;
}

}  // namespace
