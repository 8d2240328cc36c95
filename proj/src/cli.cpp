#include "mdim/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim/edgelist.hpp"
#include "mdim/embed.hpp"
#include "mdim/experiments.hpp"
#include "mdim/generators.hpp"
#include "mdim/graph.hpp"
#include "mdim/hamming.hpp"
#include "mdim/ich.hpp"
#include "mdim/resolving.hpp"
#include "mdim/tree_dim.hpp"
#include "mdim/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdim {

namespace {

using nlohmann::json;

// Usage problems detected after CLI11 parsing (bad family name, wrong arity).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json base_record(const char* subcommand) {
    return json{{"tool", "mdim"}, {"version", kVersion}, {"subcommand", subcommand}};
}

std::vector<std::string> to_labels(const std::vector<int>& ids, const LabeledGraph& g) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(g.labels[v]);
    return out;
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

long long parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("gen: ") + what + " must be an integer, got '" + tok + "'");
    }
}

double parse_real(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("gen: ") + what + " must be a number, got '" + tok + "'");
    }
}

std::string verdict_string(HammingVerdict::Result r) {
    switch (r) {
        case HammingVerdict::Result::resolving: return "resolving";
        case HammingVerdict::Result::not_resolving: return "not_resolving";
        case HammingVerdict::Result::sampled_pass: return "sampled_pass";
    }
    return "unknown";
}

json verdict_record(const HammingSpace& space, const HammingVerdict& verdict, bool exhaustive) {
    json j = {{"k", space.k},
              {"a", space.a},
              {"mode", exhaustive ? "exhaustive" : "sampled"},
              {"result", verdict_string(verdict.result)},
              {"pairs_checked", verdict.pairs_checked}};
    if (verdict.counterexample)
        j["counterexample"] = {verdict.counterexample->first, verdict.counterexample->second};
    return j;
}

json set_record(const ResolvingSet& set, const LabeledGraph& g) {
    return json{{"set", to_labels(set.vertices, g)},
                {"size", set.vertices.size()},
                {"method", method_name(set.method)},
                {"verified", set.verified}};
}

HammingResolvingSet load_hamming_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_hamming_set(in, path);
}

void emit(std::ostream& out, const json& j, bool text) {
    if (!text) {
        out << j.dump(2) << "\n";
        return;
    }
    // Human-oriented flat dump; not a stable format.
    for (const auto& [key, value] : j.items()) {
        if (key == "tool" || key == "version" || key == "subcommand") continue;
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"metric dimension toolkit: exact solvers, the entropy greedy heuristic, tree "
                 "formula, Hamming-space machinery, and seeded experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int threads = 0;
    app.add_option("--threads", threads, "cap the OpenMP worker count (0 = runtime default)");

    std::string format = "json";

    // ---- exact / doubly-exact / ich / tree / verify ------------------------
    std::string graph_path;
    int cap = 32;
    std::vector<std::string> set_labels;

    auto* exact = app.add_subcommand("exact", "minimum resolving set by exhaustive search");
    exact->add_option("file", graph_path, "edge-list file")->required();
    exact->add_option("--cap", cap, "refuse graphs with more vertices than this (default 32)");
    exact->add_option("--format", format, "json|text");
    exact->callback([&] {
        apply_threads(threads);
        const LabeledGraph lg = read_edge_list_file(graph_path);
        const ResolvingSet set = min_resolving_bruteforce(apsp(lg.graph), {cap});
        json j = base_record("exact");
        j["params"] = {{"file", graph_path}, {"cap", cap}};
        j["n"] = lg.graph.num_vertices();
        j["beta"] = set.vertices.size();
        j.update(set_record(set, lg));
        emit(out, j, format == "text");
    });

    auto* doubly = app.add_subcommand("doubly-exact", "minimum doubly resolving set");
    doubly->add_option("file", graph_path, "edge-list file")->required();
    doubly->add_option("--cap", cap, "vertex-count cap (default 32)");
    doubly->add_option("--format", format, "json|text");
    doubly->callback([&] {
        apply_threads(threads);
        const LabeledGraph lg = read_edge_list_file(graph_path);
        const std::vector<int> set = min_doubly_resolving_bruteforce(apsp(lg.graph), {cap});
        json j = base_record("doubly-exact");
        j["params"] = {{"file", graph_path}, {"cap", cap}};
        j["n"] = lg.graph.num_vertices();
        j["size"] = set.size();
        j["set"] = to_labels(set, lg);
        emit(out, j, format == "text");
    });

    auto* ich_cmd = app.add_subcommand("ich", "entropy-greedy resolving set with trace");
    ich_cmd->add_option("file", graph_path, "edge-list file")->required();
    ich_cmd->add_option("--format", format, "json|text");
    ich_cmd->callback([&] {
        apply_threads(threads);
        const LabeledGraph lg = read_edge_list_file(graph_path);
        const IchResult result = ich_run(apsp(lg.graph));
        json j = base_record("ich");
        j["params"] = {{"file", graph_path}};
        j["n"] = lg.graph.num_vertices();
        j.update(set_record(result.set, lg));
        json trace = json::array();
        for (std::size_t i = 0; i < result.trace.size(); ++i)
            trace.push_back({{"step", i + 1},
                             {"vertex", lg.labels[result.trace[i].vertex]},
                             {"entropy", result.trace[i].entropy}});
        j["trace"] = trace;
        emit(out, j, format == "text");
    });

    auto* tree = app.add_subcommand("tree", "exact resolving set for trees via the leaf formula");
    tree->add_option("file", graph_path, "edge-list file")->required();
    tree->add_option("--format", format, "json|text");
    tree->callback([&] {
        apply_threads(threads);
        const LabeledGraph lg = read_edge_list_file(graph_path);
        const ResolvingSet set = tree_metric_dimension(lg.graph);
        json j = base_record("tree");
        j["params"] = {{"file", graph_path}};
        j["n"] = lg.graph.num_vertices();
        j["beta"] = set.vertices.size();
        const TreeClassification cls =
            lg.graph.num_vertices() > 1 ? classify_tree(lg.graph) : TreeClassification{};
        j["leaves"] = cls.leaves.size();
        j["exterior_major"] = cls.exterior_major.size();
        j.update(set_record(set, lg));
        emit(out, j, format == "text");
    });

    auto* verify = app.add_subcommand("verify", "test a vertex set for (doubly) resolvability");
    verify->add_option("file", graph_path, "edge-list file")->required();
    verify->add_option("--set", set_labels, "comma-separated vertex labels")
        ->required()
        ->delimiter(',');
    verify->add_option("--format", format, "json|text");
    verify->callback([&] {
        apply_threads(threads);
        const LabeledGraph lg = read_edge_list_file(graph_path);
        std::vector<int> ids;
        for (const auto& label : set_labels) ids.push_back(lg.id_of(label));
        const DistanceMatrix d = apsp(lg.graph);
        json j = base_record("verify");
        j["params"] = {{"file", graph_path}, {"set", set_labels}};
        j["resolving"] = is_resolving(d, ids);
        if (ids.size() >= 2 && is_connected(lg.graph)) {
            j["doubly_resolving"] = is_doubly_resolving(d, ids);
        } else {
            j["doubly_resolving"] = nullptr;
            j["note"] = ids.size() < 2 ? "doubly resolving needs at least 2 vertices"
                                       : "doubly resolving is undefined on disconnected graphs";
        }
        emit(out, j, format == "text");
    });

    // ---- gen ----------------------------------------------------------------
    std::vector<std::string> gen_args;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string sbm_blocks, sbm_probs;

    auto* gen = app.add_subcommand(
        "gen", "emit an edge list: path N | complete N | complete-bipartite S T | empty N | "
               "hypercube K | er N P | tree N | sbm --blocks ... --probs ... | union A B | join A B");
    gen->add_option("family", gen_args, "family name and its parameters")->required();
    gen->add_option("--seed", seed, "RNG seed for randomized families (default 0)");
    gen->add_option("--blocks", sbm_blocks, "sbm: comma-separated block sizes");
    gen->add_option("--probs", sbm_probs, "sbm: comma-separated row-major block matrix");
    gen->add_option("-o,--output", out_path, "write to file instead of stdout");
    gen->callback([&] {
        const std::string family = gen_args.empty() ? "" : gen_args[0];
        const auto arity = [&](std::size_t want) {
            if (gen_args.size() != want + 1)
                throw UsageError("gen " + family + ": expected " + std::to_string(want) +
                                 " parameter(s)");
        };
        Graph g;
        bool randomized = false;
        if (family == "path") {
            arity(1);
            g = path_graph(static_cast<int>(parse_int(gen_args[1], "n")));
        } else if (family == "complete") {
            arity(1);
            g = complete_graph(static_cast<int>(parse_int(gen_args[1], "n")));
        } else if (family == "complete-bipartite") {
            arity(2);
            g = complete_bipartite(static_cast<int>(parse_int(gen_args[1], "s")),
                                   static_cast<int>(parse_int(gen_args[2], "t")));
        } else if (family == "empty") {
            arity(1);
            g = empty_graph(static_cast<int>(parse_int(gen_args[1], "n")));
        } else if (family == "hypercube") {
            arity(1);
            g = hypercube(static_cast<int>(parse_int(gen_args[1], "k")));
        } else if (family == "er") {
            arity(2);
            randomized = true;
            g = erdos_renyi(static_cast<int>(parse_int(gen_args[1], "n")),
                            parse_real(gen_args[2], "p"), RngSeed{seed});
        } else if (family == "tree") {
            arity(1);
            randomized = true;
            g = uniform_random_tree(static_cast<int>(parse_int(gen_args[1], "n")), RngSeed{seed});
        } else if (family == "sbm") {
            arity(0);
            if (sbm_blocks.empty() || sbm_probs.empty())
                throw UsageError("gen sbm: --blocks and --probs are required");
            randomized = true;
            std::vector<int> block_of;
            std::vector<int> sizes;
            {
                std::istringstream ss(sbm_blocks);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    sizes.push_back(static_cast<int>(parse_int(tok, "block size")));
            }
            for (std::size_t b = 0; b < sizes.size(); ++b)
                for (int i = 0; i < sizes[b]; ++i) block_of.push_back(static_cast<int>(b));
            std::vector<double> flat;
            {
                std::istringstream ss(sbm_probs);
                std::string tok;
                while (std::getline(ss, tok, ',')) flat.push_back(parse_real(tok, "probability"));
            }
            const std::size_t b = sizes.size();
            if (flat.size() != b * b)
                throw UsageError("gen sbm: --probs needs " + std::to_string(b * b) + " entries");
            std::vector<std::vector<double>> probs(b, std::vector<double>(b));
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = 0; j < b; ++j) probs[i][j] = flat[i * b + j];
            g = stochastic_block_model(block_of, probs, RngSeed{seed});
        } else if (family == "union" || family == "join") {
            arity(2);
            const LabeledGraph a = read_edge_list_file(gen_args[1]);
            const LabeledGraph b = read_edge_list_file(gen_args[2]);
            g = family == "union" ? disjoint_union(a.graph, b.graph) : join(a.graph, b.graph);
        } else {
            throw UsageError("gen: unknown family '" + family + "'");
        }

        std::ofstream file;
        std::ostream* sink = &out;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
            sink = &file;
        }
        if (randomized) *sink << "# seed " << seed << "\n";
        write_edge_list(*sink, g);
    });

    // ---- hamming ------------------------------------------------------------
    auto* hamming = app.add_subcommand("hamming", "implicit Hamming-graph operations");
    hamming->require_subcommand(1);

    int ham_a = 0, ham_k = 0;
    std::string set_path;
    bool sampled = false;
    std::uint64_t pairs = 1'000'000;
    std::uint64_t exhaustive_cap = 1'000'000;

    auto* beta2 = hamming->add_subcommand("beta2", "closed-form beta(H_{2,a})");
    beta2->add_option("a", ham_a, "alphabet size")->required();
    beta2->add_option("--format", format, "json|text");
    beta2->callback([&] {
        json j = base_record("hamming beta2");
        j["a"] = ham_a;
        j["beta"] = beta_h2(ham_a);
        emit(out, j, format == "text");
    });

    auto* table = hamming->add_subcommand("table", "known beta(Q_k), exact to k=10, bounds to 17");
    table->add_option("k", ham_k, "hypercube dimension")->required();
    table->add_option("--format", format, "json|text");
    table->callback([&] {
        const HypercubeReference ref = hypercube_reference(ham_k);
        json j = base_record("hamming table");
        j["k"] = ham_k;
        j["value"] = ref.value;
        j["kind"] = ref.exact ? "exact" : "upper_bound";
        emit(out, j, format == "text");
    });

    auto* hverify = hamming->add_subcommand("verify", "check a set file for resolvability");
    hverify->add_option("--set-file", set_path, "resolving-set file (header: k a alphabet)")
        ->required();
    hverify->add_flag("--sampled", sampled, "sample random pairs instead of streaming a^k vertices");
    hverify->add_option("--pairs", pairs, "sampled mode: number of random pairs (default 1e6)");
    hverify->add_option("--seed", seed, "sampled mode: RNG seed (default 0)");
    hverify->add_option("--cap", exhaustive_cap, "exhaustive mode: max a^k (default 1e6)");
    hverify->add_option("--format", format, "json|text");
    hverify->callback([&] {
        apply_threads(threads);
        const HammingResolvingSet set = load_hamming_set(set_path);
        HammingVerifyOptions opts;
        opts.exhaustive_cap = exhaustive_cap;
        opts.sample_pairs = pairs;
        opts.seed = RngSeed{seed};
        const HammingVerdict verdict = verify_hamming_resolving(set.space, set.vertices, !sampled, opts);
        json j = base_record("hamming verify");
        j["params"] = {{"set_file", set_path}, {"size", set.vertices.size()}, {"seed", seed}};
        j.update(verdict_record(set.space, verdict, !sampled));
        emit(out, j, format == "text");
    });

    auto* haugment = hamming->add_subcommand(
        "augment", "lift a resolving set from H_{k,a} to H_{k+1,a} (adds at most floor(a/2))");
    haugment->add_option("--set-file", set_path, "verified base set file")->required();
    haugment->add_option("--cap", exhaustive_cap, "max a^(k+1) for verification (default 1e6)");
    haugment->add_option("-o,--output", out_path, "write the lifted set to a file");
    haugment->callback([&] {
        apply_threads(threads);
        HammingResolvingSet base = load_hamming_set(set_path);
        HammingVerifyOptions opts;
        opts.exhaustive_cap = exhaustive_cap;
        // A set file carries no verification status; establish it here.
        const HammingVerdict check = verify_hamming_resolving(base.space, base.vertices, true, opts);
        if (check.result != HammingVerdict::Result::resolving)
            throw std::runtime_error("base set is not resolving; counterexample " +
                                     check.counterexample->first + " / " +
                                     check.counterexample->second);
        base.mode = HammingVerifiedMode::exhaustive;
        const HammingResolvingSet lifted = augment(base, opts);
        if (out_path.empty()) {
            write_hamming_set(out, lifted);
        } else {
            std::ofstream file(out_path);
            if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
            write_hamming_set(file, lifted);
            json j = base_record("hamming augment");
            j["written"] = out_path;
            j["size"] = lifted.vertices.size();
            j["verified"] = "exhaustive";
            emit(out, j, false);
        }
    });

    // ---- embed ----------------------------------------------------------------
    std::string seq_path, alphabet_name;

    auto* embed = app.add_subcommand("embed", "per-k-mer distance vectors against a resolving set");
    embed->add_option("file", seq_path, "FASTA or one-sequence-per-line text")->required();
    embed->add_option("--set-file", set_path, "resolving-set file; defines k and the alphabet")
        ->required();
    embed->add_option("--alphabet", alphabet_name, "dna|protein|custom:<symbols> (checked against the set file)");
    embed->add_flag("--sampled", sampled, "verify the set by sampling (for large spaces)");
    embed->add_option("--pairs", pairs, "sampled verification pairs (default 1e6)");
    embed->add_option("--seed", seed, "sampled verification seed (default 0)");
    embed->add_option("--cap", exhaustive_cap, "exhaustive verification cap (default 1e6)");
    embed->add_option("--format", format, "json|csv");
    embed->callback([&] {
        apply_threads(threads);
        HammingResolvingSet set = load_hamming_set(set_path);

        SequenceAlphabet alphabet = SequenceAlphabet::custom(set.space.alphabet);
        if (alphabet.symbols == SequenceAlphabet::dna().symbols) alphabet.name = "dna";
        if (alphabet.symbols == SequenceAlphabet::protein().symbols) alphabet.name = "protein";
        if (!alphabet_name.empty()) {
            SequenceAlphabet requested =
                alphabet_name == "dna"       ? SequenceAlphabet::dna()
                : alphabet_name == "protein" ? SequenceAlphabet::protein()
                : alphabet_name.rfind("custom:", 0) == 0
                    ? SequenceAlphabet::custom(alphabet_name.substr(7))
                    : throw UsageError("embed: unknown alphabet '" + alphabet_name + "'");
            if (requested.symbols != set.space.alphabet)
                throw std::runtime_error("embed: alphabet does not match the set file's alphabet");
            alphabet = requested;
        }

        HammingVerifyOptions opts;
        opts.exhaustive_cap = exhaustive_cap;
        opts.sample_pairs = pairs;
        opts.seed = RngSeed{seed};
        const HammingVerdict verdict = verify_hamming_resolving(set.space, set.vertices, !sampled, opts);
        if (verdict.result == HammingVerdict::Result::not_resolving)
            throw std::runtime_error("embed: set is not resolving; counterexample " +
                                     verdict.counterexample->first + " / " +
                                     verdict.counterexample->second);
        set.mode = sampled ? HammingVerifiedMode::sampled : HammingVerifiedMode::exhaustive;
        set.sampled_pairs = pairs;
        set.sampled_seed = RngSeed{seed};

        std::ifstream in(seq_path);
        if (!in) throw std::runtime_error("cannot open " + seq_path);
        const std::vector<SequenceRecord> records = read_sequences(in);
        std::vector<EmbeddedSequence> embeddings;
        embeddings.reserve(records.size());
        for (const auto& rec : records)
            embeddings.push_back(
                embed_sequence(rec.sequence, rec.id, set.space.k, alphabet, set));

        if (format == "csv") {
            write_embedding_csv(out, embeddings);
        } else {
            json j = base_record("embed");
            j["params"] = {{"set_file", set_path},
                           {"file", seq_path},
                           {"k", set.space.k},
                           {"alphabet", alphabet.name},
                           {"verification", sampled ? "sampled_pass" : "exhaustive"},
                           {"seed", seed}};
            j["dimension"] = set.vertices.size();
            json seqs = json::array();
            for (const auto& e : embeddings)
                seqs.push_back({{"id", e.source_id}, {"vectors", e.vectors}});
            j["sequences"] = seqs;
            emit(out, j, false);
        }
    });

    // ---- experiment -----------------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "seeded random-graph experiments");
    experiment->require_subcommand(1);

    int exp_n = 100, exp_trials = 100, exp_samples = 100;
    double exp_p = 0.5;
    std::string strategy_str = "random";

    auto* er = experiment->add_subcommand("er", "resolve rate of bound-sized sets on G(n,p)");
    er->add_option("--n", exp_n, "graph size (default 100)");
    er->add_option("--p", exp_p, "edge probability (default 0.5)");
    er->add_option("--trials", exp_trials, "number of trials (default 100)");
    er->add_option("--strategy", strategy_str, "random|high-degree (default random)");
    er->add_option("--seed", seed, "master seed (default 0)");
    er->add_option("--format", format, "json|csv");
    er->callback([&] {
        apply_threads(threads);
        ErStrategy strategy;
        if (strategy_str == "random")
            strategy = ErStrategy::random_set;
        else if (strategy_str == "high-degree")
            strategy = ErStrategy::high_degree;
        else
            throw UsageError("experiment er: unknown strategy '" + strategy_str + "'");
        const ErReport report = er_resolving_trial(exp_n, exp_p, exp_trials, strategy, RngSeed{seed});
        if (format == "csv") {
            write_csv(out, report);
            return;
        }
        json j = base_record("experiment er");
        j["params"] = {{"n", report.n},          {"p", report.p},
                       {"trials", report.trials}, {"strategy", strategy_name(report.strategy)},
                       {"seed", seed},            {"set_size", report.set_size}};
        j["summary"] = {{"success_rate", report.trials ? json(report.success_rate) : json(nullptr)},
                        {"monte_carlo_se", report.trials ? json(report.monte_carlo_se) : json(nullptr)},
                        {"connected_fraction",
                         report.trials ? json(report.connected_fraction) : json(nullptr)},
                        {"wall_ms", report.wall_ms}};
        json recs = json::array();
        for (const auto& rec : report.records)
            recs.push_back({{"trial", rec.trial}, {"connected", rec.connected}, {"resolved", rec.resolved}});
        j["trials"] = recs;
        emit(out, j, false);
    });

    auto* tree_dist = experiment->add_subcommand("tree-dist", "metric dimension of uniform random trees");
    tree_dist->add_option("--n", exp_n, "tree size (default 100)");
    tree_dist->add_option("--samples", exp_samples, "number of sampled trees (default 100)");
    tree_dist->add_option("--seed", seed, "master seed (default 0)");
    tree_dist->add_option("--format", format, "json|csv");
    tree_dist->callback([&] {
        apply_threads(threads);
        const TreeDistReport report = tree_dim_distribution(exp_n, exp_samples, RngSeed{seed});
        if (format == "csv") {
            write_csv(out, report);
            return;
        }
        json j = base_record("experiment tree-dist");
        j["params"] = {{"n", report.n}, {"samples", report.samples}, {"seed", seed}};
        j["summary"] = {{"mean_beta_over_n", report.mean_beta_over_n},
                        {"var_beta_over_n", report.var_beta_over_n},
                        {"mean_standardized", report.mean_standardized},
                        {"var_standardized", report.var_standardized},
                        {"skewness", report.skewness},
                        {"mu", kTreeDimMu},
                        {"sigma2", kTreeDimSigma2},
                        {"wall_ms", report.wall_ms}};
        json recs = json::array();
        for (const auto& rec : report.records)
            recs.push_back({{"sample", rec.sample}, {"beta", rec.beta}, {"standardized", rec.standardized}});
        j["samples"] = recs;
        emit(out, j, false);
    });

    // ---- parse ------------------------------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mdim");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace mdim
