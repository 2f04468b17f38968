#include "hypercen/cli.hpp"

#include "hypercen/adapt.hpp"
#include "hypercen/centrality.hpp"
#include "hypercen/errors.hpp"
#include "hypercen/io.hpp"
#include "hypercen/manifest.hpp"
#include "hypercen/netgen.hpp"
#include "hypercen/propagation.hpp"
#include "hypercen/rng.hpp"
#include "hypercen/spectral.hpp"
#include "hypercen/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace hypercen::cli {

namespace {

int log_level() {
    const char* env = std::getenv("HYPERCEN_LOG");
    if (env == nullptr) return 1;
    const std::string value(env);
    if (value == "quiet") return 0;
    if (value == "debug") return 2;
    return 1;
}

void log_info(const std::string& message) {
    if (log_level() >= 1) std::cerr << "[hypercen] " << message << "\n";
}

void log_debug(const std::string& message) {
    if (log_level() >= 2) std::cerr << "[hypercen] " << message << "\n";
}

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

// Outputs are buffered and written together, then the manifest describing
// the run lands next to the primary output.
struct RunContext {
    std::string subcommand;
    std::vector<std::string> argv;
    std::map<std::string, std::string> flags;
    std::vector<std::string> input_paths;
    std::vector<std::pair<std::string, std::string>> outputs;  // path, content
    std::string primary_output;  // empty when everything goes to stdout

    void add_output(const std::string& path, const std::string& content) {
        if (primary_output.empty()) primary_output = path;
        outputs.emplace_back(path, content);
    }

    void emit(const std::string& path_or_empty, const std::string& content) {
        if (path_or_empty.empty())
            std::cout << content;
        else
            add_output(path_or_empty, content);
    }

    void finish() {
        for (const auto& [path, content] : outputs) io::write_file(path, content);
        if (primary_output.empty()) return;
        RunManifest manifest;
        manifest.subcommand = subcommand;
        manifest.argv = argv;
        manifest.flags = flags;
        manifest.version = kVersion;
        for (const auto& path : input_paths)
            manifest.input_digests[path] = file_digest(path);
        for (const auto& [path, content] : outputs)
            manifest.output_digests[path] = "sha256:" + sha256_hex(content);
        io::write_file(RunManifest::path_for(primary_output), manifest.to_json());
        log_debug("manifest written to " + RunManifest::path_for(primary_output));
    }
};

netgen::StartMode parse_start(const std::string& value) {
    if (value == "new") return netgen::StartMode::new_node;
    if (value == "random") return netgen::StartMode::random_existing;
    return netgen::StartMode::preferential_by_degree;
}

netgen::PreferenceMode parse_pref(const std::string& value) {
    if (value == "degree") return netgen::PreferenceMode::degree;
    if (value == "centrality") return netgen::PreferenceMode::centrality;
    if (value == "localcentrality") return netgen::PreferenceMode::local_centrality;
    return netgen::PreferenceMode::cluster_coefficient;
}

std::string topology_csv(const netgen::TopologyReport& report,
                         const std::function<std::string(int)>& label) {
    std::ostringstream out;
    out << "node,degree,centrality,cluster_coeff\n";
    for (int i = 0; i < report.degrees.size(); ++i) {
        out << label(i) << ',' << report.degrees(i) << ','
            << (report.centrality_valid ? fmt(report.centrality(i)) : "nan") << ','
            << fmt(report.cluster(i)) << '\n';
    }
    return out.str();
}

// ---- subcommand argument bags -------------------------------------------

struct GenArgs {
    std::string mode = "graph";
    std::string start = "new";
    std::string pref = "degree";
    int iterations = 0;
    int links = 1;
    double weight = 0.1;
    double beta = 0.5;
    double p_join = 0.5;
    std::uint64_t seed = 0;
    std::string output;
    std::string report;
};

struct CentralityArgs {
    std::string input;
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double beta1 = 1.0;
    double beta2 = 0.5;
    std::string method = "solve";
    bool rescale = false;
    std::string output;
};

struct SpectrumArgs {
    std::string input;
    std::string side = "node";
    std::string output;
};

struct SimulateArgs {
    std::string input;
    double beta1 = 1.0;
    double beta2 = 0.5;
    int walks = 10000;
    std::uint64_t seed = 0;
    int max_hops = 64;
    int threads = 1;
    std::string mode = "hyper";
    std::string output;
};

struct LearnArgs {
    std::string input;
    int steps = 100;
    double rate = 0.1;
    double punish = 0.0;
    std::uint64_t seed = 0;
    int dimension = 4;
    double kappa = 0.5;
    std::string output;
};

struct AnalyzeArgs {
    std::string input;
    double beta = 0.5;
    std::string output;
    std::string sweep_prefix;
};

struct ProjectArgs {
    std::string input;
    std::string output;
};

struct ConvertArgs {
    std::string input;
    std::string to = "json";
    std::string output;
};

// ---- handlers -------------------------------------------------------------

void run_gen(const GenArgs& args, RunContext& ctx) {
    netgen::GenConfig config;
    config.mode = args.mode == "hyper" ? netgen::NetMode::hypergraph : netgen::NetMode::graph;
    config.start = parse_start(args.start);
    config.preference = parse_pref(args.pref);
    config.iterations = args.iterations;
    config.links_per_step = args.links;
    config.edge_weight = args.weight;
    config.beta = args.beta;
    config.p_join = args.p_join;
    config.rng_seed = args.seed;

    const auto net = netgen::grow(config, [](const std::string& m) { log_info(m); });
    log_info("grew network: " + std::to_string(net.node_count()) + " nodes, " +
             std::to_string(net.fallback_events) + " preference fallback events");

    ctx.add_output(args.output, io::to_json(net.as_hypergraph()));
    if (!args.report.empty()) {
        const auto report = netgen::analyze(net.analysis_adjacency(), config.beta);
        if (!report.centrality_valid) log_info(report.centrality_note);
        ctx.add_output(args.report, topology_csv(report, [](int i) {
                           return "n" + std::to_string(i + 1);
                       }));
    }
}

void run_centrality(const CentralityArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const auto file = io::load(args.input);

    centrality::HyperCentralityParams params;
    params.alpha1 = args.alpha1;
    params.alpha2 = args.alpha2;
    params.beta1 = args.beta1;
    params.beta2 = args.beta2;

    centrality::CentralityResult result;
    if (file.directed()) {
        if (args.method == "series")
            throw DomainError("UNSUPPORTED",
                              "series method is not available for directed hypergraphs");
        result = centrality::general_centrality_directed(file.directed_hypergraph(), params);
    } else {
        const auto method = args.method == "series" ? centrality::Method::neumann_series
                                                    : centrality::Method::direct_solve;
        result = centrality::general_centrality_hyper(file.hyper, params, method);
    }
    if (args.rescale) result = centrality::rescale_to_average(result);
    if (result.meta.non_communicative)
        log_info("non-communicative regime: |beta1*beta2| * lambda_max = " +
                 fmt(std::abs(args.beta1 * args.beta2) * result.meta.lambda_max) +
                 " exceeds 1; the communication interpretation does not apply");

    std::ostringstream csv;
    csv << "id,kind,score\n";
    for (int i = 0; i < result.node_scores.size(); ++i)
        csv << file.hyper.node_label(i) << ",node," << fmt(result.node_scores(i)) << '\n';
    if (result.edge_scores)
        for (int j = 0; j < result.edge_scores->size(); ++j)
            csv << file.hyper.edge_label(j) << ",edge," << fmt((*result.edge_scores)(j)) << '\n';
    ctx.emit(args.output, csv.str());
}

void run_spectrum(const SpectrumArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const auto file = io::load(args.input);
    const Eigen::MatrixXd& w = file.hyper.weights();
    const Eigen::MatrixXd m =
        args.side == "edge" ? Eigen::MatrixXd(w.transpose() * w) : Eigen::MatrixXd(w * w.transpose());
    const Eigen::VectorXd values = spectral::spectrum(m);
    std::ostringstream csv;
    csv << "index,eigenvalue\n";
    for (int i = 0; i < values.size(); ++i) csv << i << ',' << fmt(values(i)) << '\n';
    ctx.emit(args.output, csv.str());
}

void run_simulate(const SimulateArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const auto file = io::load(args.input);
    if (file.directed())
        throw DomainError("UNSUPPORTED", "simulate expects an undirected hypergraph");

    propagation::PropagationConfig config;
    config.pass_probability_edge = args.beta1;
    config.pass_probability_node = args.beta2;
    config.walks_per_node = args.walks;
    config.rng_seed = args.seed;
    config.max_hops = args.max_hops;
    config.threads = args.threads;

    const auto stats = args.mode == "projected"
                           ? propagation::simulate_graph(project(file.hyper).adjacency, config)
                           : propagation::simulate_hyper(file.hyper, config);
    log_info("truncation bound " + fmt(stats.truncation_bound));

    std::ostringstream csv;
    csv << "id,estimate,stderr,mean_chain_length\n";
    for (int i = 0; i < stats.estimate.size(); ++i)
        csv << file.hyper.node_label(i) << ',' << fmt(stats.estimate(i)) << ','
            << fmt(stats.standard_error(i)) << ',' << fmt(stats.mean_chain_length(i)) << '\n';
    ctx.emit(args.output, csv.str());
}

void run_learn(const LearnArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const auto file = io::load(args.input);
    if (file.directed())
        throw DomainError("UNSUPPORTED", "learn expects an undirected hypergraph");
    Hypergraph h = file.hyper;

    Rng rng(args.seed);
    const auto processor = adapt::linear_contraction(args.kappa);
    adapt::LearningConfig config;
    config.rate = args.rate;
    config.punishment = args.punish;

    std::ostringstream csv;
    csv << "step,kind,node,edge,old_weight,new_weight\n";
    for (int step = 0; step < args.steps; ++step) {
        std::vector<std::pair<int, int>> support;
        for (int j = 0; j < h.edge_count(); ++j)
            for (int i = 0; i < h.node_count(); ++i)
                if (h.weight(i, j) > 0.0) support.emplace_back(i, j);
        if (support.empty()) {
            log_info("no incident pairs left at step " + std::to_string(step));
            break;
        }
        const auto [node, edge] = support[rng.below(support.size())];
        adapt::Challenge challenge;
        challenge.values.resize(args.dimension);
        for (int d = 0; d < args.dimension; ++d)
            challenge.values(d) = 2.0 * rng.uniform01() - 1.0;
        const auto outcome = adapt::delta_update_inplace(h, node, edge, challenge, processor, config);
        csv << step << ",delta," << h.node_label(node) << ',' << h.edge_label(edge) << ','
            << fmt(outcome.old_weight) << ',' << fmt(outcome.new_weight) << '\n';
        if (config.punishment > 0.0) {
            support.clear();
            for (int j = 0; j < h.edge_count(); ++j)
                for (int i = 0; i < h.node_count(); ++i)
                    if (h.weight(i, j) > 0.0) support.emplace_back(i, j);
            if (!support.empty()) {
                const auto [pn, pe] = support[rng.below(support.size())];
                const auto punished = adapt::punish_inplace(h, pn, pe, config);
                csv << step << ",punish," << h.node_label(pn) << ',' << h.edge_label(pe) << ','
                    << fmt(punished.old_weight) << ',' << fmt(punished.new_weight) << '\n';
            }
        }
    }
    ctx.emit(args.output, csv.str());
}

void run_analyze(const AnalyzeArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const auto file = io::load(args.input);
    const Eigen::MatrixXd a = file.directed()
                                  ? project(file.directed_hypergraph()).adjacency
                                  : project(file.hyper).adjacency;
    const auto report = netgen::analyze(a, args.beta);
    log_info("lambda_max=" + fmt(report.lambda_max) +
             (report.fit.valid
                  ? " fit_slope=" + fmt(report.fit.slope) + " fit_r2=" + fmt(report.fit.r2)
                  : " fit=degenerate"));
    if (!report.centrality_valid) log_info(report.centrality_note);

    const auto label = [&](int i) { return file.hyper.node_label(i); };
    ctx.emit(args.output, topology_csv(report, label));

    if (!args.sweep_prefix.empty()) {
        for (int tenth = 0; tenth <= 10; ++tenth) {
            const double beta = tenth / 10.0;
            const auto sweep_report = netgen::analyze(a, beta);
            if (!sweep_report.centrality_valid) log_info(sweep_report.centrality_note);
            ctx.add_output(args.sweep_prefix + "beta_" + fmt(beta) + ".csv",
                           topology_csv(sweep_report, label));
        }
    }
}

void run_project(const ProjectArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const auto file = io::load(args.input);
    const ProjectedGraph projected =
        file.directed() ? project(file.directed_hypergraph()) : project(file.hyper);
    std::ostringstream csv;
    csv << "source,target,weight\n";
    for (int i = 0; i < projected.adjacency.rows(); ++i)
        for (int j = 0; j < projected.adjacency.cols(); ++j)
            if (projected.adjacency(i, j) != 0.0)
                csv << file.hyper.node_label(i) << ',' << file.hyper.node_label(j) << ','
                    << fmt(projected.adjacency(i, j)) << '\n';
    ctx.emit(args.output, csv.str());
}

void run_convert(const ConvertArgs& args, RunContext& ctx) {
    ctx.input_paths.push_back(args.input);
    const bool csv_input =
        args.input.size() >= 4 && args.input.substr(args.input.size() - 4) == ".csv";
    if (args.to == "csv") {
        const Hypergraph h =
            csv_input ? io::load_matrix_csv(args.input) : io::load(args.input).hyper;
        ctx.emit(args.output, io::to_matrix_csv(h));
        return;
    }
    if (csv_input) {
        ctx.emit(args.output, io::to_json(io::load_matrix_csv(args.input)));
        return;
    }
    const auto file = io::load(args.input);
    ctx.emit(args.output,
             file.directed() ? io::to_json(file.directed_hypergraph()) : io::to_json(file.hyper));
}

} // namespace

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"hypercen: centrality, communication simulation, learning and growth "
                 "on weighted graphs and hypergraphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Grow a network by preferential attachment");
    gen_cmd->add_option("--mode", gen.mode, "Network kind")
        ->check(CLI::IsMember({"graph", "hyper"}))
        ->capture_default_str();
    gen_cmd->add_option("--start", gen.start, "Starting node rule")
        ->check(CLI::IsMember({"new", "random", "prefdegree"}))
        ->capture_default_str();
    gen_cmd->add_option("--pref", gen.pref, "Attachment preference")
        ->check(CLI::IsMember({"degree", "centrality", "localcentrality", "cluster"}))
        ->capture_default_str();
    gen_cmd->add_option("--iters", gen.iterations, "Growth steps")->capture_default_str();
    gen_cmd->add_option("--m", gen.links, "Links per step")->capture_default_str();
    gen_cmd->add_option("--weight", gen.weight, "Weight of every new link")
        ->capture_default_str();
    gen_cmd->add_option("--beta", gen.beta, "Beta for centrality preferences and the report")
        ->capture_default_str();
    gen_cmd->add_option("--pjoin", gen.p_join, "Hypergraph mode: chance to join an existing edge")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    gen_cmd->add_option("--output", gen.output, "Network file (JSON)")->required();
    gen_cmd->add_option("--report", gen.report, "Per-node topology report CSV");

    CentralityArgs cen;
    auto* cen_cmd = app.add_subcommand("centrality", "Node and edge centrality of a hypergraph");
    cen_cmd->add_option("--input", cen.input, "Hypergraph file")->required();
    cen_cmd->add_option("--alpha1", cen.alpha1, "Node-side scale")->capture_default_str();
    cen_cmd->add_option("--alpha2", cen.alpha2, "Edge-side scale")->capture_default_str();
    cen_cmd->add_option("--beta1", cen.beta1, "Edge relay chance")->capture_default_str();
    cen_cmd->add_option("--beta2", cen.beta2, "Node selection chance")->capture_default_str();
    cen_cmd->add_option("--method", cen.method, "Computation route")
        ->check(CLI::IsMember({"solve", "series"}))
        ->capture_default_str();
    cen_cmd->add_flag("--rescale", cen.rescale, "Scale node scores to sum of squares = |V|");
    cen_cmd->add_option("--output", cen.output, "CSV output (stdout when omitted)");

    SpectrumArgs spec;
    auto* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues of the projection");
    spec_cmd->add_option("--input", spec.input, "Hypergraph file")->required();
    spec_cmd->add_option("--side", spec.side, "node: W*W^T, edge: W^T*W")
        ->check(CLI::IsMember({"node", "edge"}))
        ->capture_default_str();
    spec_cmd->add_option("--output", spec.output, "CSV output (stdout when omitted)");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo communication counts");
    sim_cmd->add_option("--input", sim.input, "Hypergraph file")->required();
    sim_cmd->add_option("--beta1", sim.beta1, "Edge relay chance")->capture_default_str();
    sim_cmd->add_option("--beta2", sim.beta2, "Node selection chance")->capture_default_str();
    sim_cmd->add_option("--walks", sim.walks, "Walks per start node")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--max-hops", sim.max_hops, "Hop cap per walk")->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
    sim_cmd->add_option("--mode", sim.mode, "hyper: alternating walk, projected: walk on W*W^T")
        ->check(CLI::IsMember({"hyper", "projected"}))
        ->capture_default_str();
    sim_cmd->add_option("--output", sim.output, "CSV output (stdout when omitted)");

    LearnArgs learn;
    auto* learn_cmd = app.add_subcommand("learn", "Delta-rule learning demo loop");
    learn_cmd->add_option("--input", learn.input, "Hypergraph file")->required();
    learn_cmd->add_option("--steps", learn.steps, "Learning steps")->capture_default_str();
    learn_cmd->add_option("--rate", learn.rate, "Reward step r")->capture_default_str();
    learn_cmd->add_option("--punish", learn.punish, "Punishment step p")->capture_default_str();
    learn_cmd->add_option("--seed", learn.seed, "RNG seed")->capture_default_str();
    learn_cmd->add_option("--dim", learn.dimension, "Challenge dimension")->capture_default_str();
    learn_cmd->add_option("--kappa", learn.kappa, "Default processor contraction")
        ->capture_default_str();
    learn_cmd->add_option("--output", learn.output, "Weight-change CSV (stdout when omitted)");

    AnalyzeArgs ana;
    auto* ana_cmd = app.add_subcommand("analyze", "Topology report of the projected network");
    ana_cmd->add_option("--input", ana.input, "Hypergraph file")->required();
    ana_cmd->add_option("--beta", ana.beta, "Beta for the centrality column")
        ->capture_default_str();
    ana_cmd->add_option("--output", ana.output, "Report CSV (stdout when omitted)");
    ana_cmd->add_option("--sweep", ana.sweep_prefix,
                        "Also write reports for beta = 0..1 step 0.1 under this path prefix");

    ProjectArgs proj;
    auto* proj_cmd = app.add_subcommand("project", "Node-to-node projection as CSV");
    proj_cmd->add_option("--input", proj.input, "Hypergraph file")->required();
    proj_cmd->add_option("--output", proj.output, "CSV output (stdout when omitted)");

    ConvertArgs conv;
    auto* conv_cmd = app.add_subcommand("convert", "Convert between JSON and matrix CSV");
    conv_cmd->add_option("--input", conv.input, "Hypergraph file (.json or .csv)")->required();
    conv_cmd->add_option("--to", conv.to, "Target format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    conv_cmd->add_option("--output", conv.output, "Output file (stdout when omitted)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hypercen");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    RunContext ctx;
    ctx.argv = args;

    try {
        if (app.got_subcommand(gen_cmd)) {
            ctx.subcommand = "gen";
            ctx.flags = {{"mode", gen.mode},
                         {"start", gen.start},
                         {"pref", gen.pref},
                         {"iters", std::to_string(gen.iterations)},
                         {"m", std::to_string(gen.links)},
                         {"weight", fmt(gen.weight)},
                         {"beta", fmt(gen.beta)},
                         {"pjoin", fmt(gen.p_join)},
                         {"seed", std::to_string(gen.seed)},
                         {"output", gen.output},
                         {"report", gen.report}};
            run_gen(gen, ctx);
        } else if (app.got_subcommand(cen_cmd)) {
            ctx.subcommand = "centrality";
            ctx.flags = {{"input", cen.input},
                         {"alpha1", fmt(cen.alpha1)},
                         {"alpha2", fmt(cen.alpha2)},
                         {"beta1", fmt(cen.beta1)},
                         {"beta2", fmt(cen.beta2)},
                         {"method", cen.method},
                         {"rescale", cen.rescale ? "true" : "false"},
                         {"output", cen.output}};
            run_centrality(cen, ctx);
        } else if (app.got_subcommand(spec_cmd)) {
            ctx.subcommand = "spectrum";
            ctx.flags = {{"input", spec.input}, {"side", spec.side}, {"output", spec.output}};
            run_spectrum(spec, ctx);
        } else if (app.got_subcommand(sim_cmd)) {
            ctx.subcommand = "simulate";
            ctx.flags = {{"input", sim.input},
                         {"beta1", fmt(sim.beta1)},
                         {"beta2", fmt(sim.beta2)},
                         {"walks", std::to_string(sim.walks)},
                         {"seed", std::to_string(sim.seed)},
                         {"max-hops", std::to_string(sim.max_hops)},
                         {"threads", std::to_string(sim.threads)},
                         {"mode", sim.mode},
                         {"output", sim.output}};
            run_simulate(sim, ctx);
        } else if (app.got_subcommand(learn_cmd)) {
            ctx.subcommand = "learn";
            ctx.flags = {{"input", learn.input},
                         {"steps", std::to_string(learn.steps)},
                         {"rate", fmt(learn.rate)},
                         {"punish", fmt(learn.punish)},
                         {"seed", std::to_string(learn.seed)},
                         {"dim", std::to_string(learn.dimension)},
                         {"kappa", fmt(learn.kappa)},
                         {"output", learn.output}};
            run_learn(learn, ctx);
        } else if (app.got_subcommand(ana_cmd)) {
            ctx.subcommand = "analyze";
            ctx.flags = {{"input", ana.input},
                         {"beta", fmt(ana.beta)},
                         {"output", ana.output},
                         {"sweep", ana.sweep_prefix}};
            run_analyze(ana, ctx);
        } else if (app.got_subcommand(proj_cmd)) {
            ctx.subcommand = "project";
            ctx.flags = {{"input", proj.input}, {"output", proj.output}};
            run_project(proj, ctx);
        } else if (app.got_subcommand(conv_cmd)) {
            ctx.subcommand = "convert";
            ctx.flags = {{"input", conv.input}, {"to", conv.to}, {"output", conv.output}};
            run_convert(conv, ctx);
        }
        ctx.finish();
    } catch (const DomainError& e) {
        std::cerr << "error_code=" << e.code();
        if (!e.detail().empty()) std::cerr << ' ' << e.detail();
        std::cerr << '\n';
        log_info(e.what());
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error_code=INTERNAL\n";
        log_info(e.what());
        return 2;
    }
    return 0;
}

} // namespace hypercen::cli
