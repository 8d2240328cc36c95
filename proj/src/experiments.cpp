#include "mdim/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "mdim/generators.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/tree_dim.hpp"

namespace mdim {

const char* strategy_name(ErStrategy s) {
    return s == ErStrategy::random_set ? "random_set" : "high_degree";
}

int er_bound_size(int n, double p) {
    if (n < 2) throw std::invalid_argument("er_bound_size requires n >= 2");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("er_bound_size requires 0 < p < 1");
    const double denom = std::log(p * p + (1.0 - p) * (1.0 - p));
    return static_cast<int>(std::ceil(-3.0 * std::log(static_cast<double>(n)) / denom));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> pick_random_set(int n, int m, Rng& rng) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < m; ++i) {
        const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(m);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> pick_high_degree_set(const Graph& g, int m) {
    std::vector<int> ids(g.num_vertices());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    ids.resize(m);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

ErReport er_resolving_trial(int n, double p, int trials, ErStrategy strategy, RngSeed seed) {
    if (trials < 0) throw std::invalid_argument("trials must be >= 0");
    const int m = er_bound_size(n, p);
    if (m >= n) throw std::invalid_argument("bound size " + std::to_string(m) +
                                            " is not below n = " + std::to_string(n));

    const auto start = Clock::now();
    ErReport report;
    report.n = n;
    report.p = p;
    report.trials = trials;
    report.strategy = strategy;
    report.seed = seed;
    report.set_size = m;
    report.records.resize(trials);

    // One graph stream and one selection stream per trial, both derived from
    // the master seed, so records do not depend on scheduling.
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const Graph g = erdos_renyi(n, p, RngSeed{stream_seed(seed, 2 * static_cast<std::uint64_t>(t))});
        Rng pick(stream_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
        const std::vector<int> set =
            strategy == ErStrategy::random_set ? pick_random_set(n, m, pick) : pick_high_degree_set(g, m);
        const DistanceMatrix d = apsp_serial(g);
        report.records[t] = {t, is_connected(g), is_resolving(d, set)};
    }

    int resolved = 0, connected = 0;
    for (const auto& rec : report.records) {
        resolved += rec.resolved;
        connected += rec.connected;
    }
    if (trials == 0) {
        report.success_rate = std::numeric_limits<double>::quiet_NaN();
        report.monte_carlo_se = std::numeric_limits<double>::quiet_NaN();
        report.connected_fraction = std::numeric_limits<double>::quiet_NaN();
    } else {
        report.success_rate = static_cast<double>(resolved) / trials;
        report.monte_carlo_se =
            std::sqrt(report.success_rate * (1.0 - report.success_rate) / trials);
        report.connected_fraction = static_cast<double>(connected) / trials;
    }
    report.wall_ms = elapsed_ms(start);
    return report;
}

TreeDistReport tree_dim_distribution(int n, int samples, RngSeed seed) {
    if (n < 3) throw std::invalid_argument("tree_dim_distribution requires n >= 3");
    if (samples < 1) throw std::invalid_argument("tree_dim_distribution requires samples >= 1");

    const auto start = Clock::now();
    TreeDistReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.records.resize(samples);

    const double scale = std::sqrt(kTreeDimSigma2 * n);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < samples; ++s) {
        const Graph t = uniform_random_tree(n, RngSeed{stream_seed(seed, static_cast<std::uint64_t>(s))});
        const int beta = static_cast<int>(tree_metric_dimension(t).vertices.size());
        report.records[s] = {s, beta, (beta - kTreeDimMu * n) / scale};
    }

    double mean = 0;
    for (const auto& rec : report.records) mean += rec.beta;
    mean /= samples;
    double var = 0, std_mean = 0;
    for (const auto& rec : report.records) {
        var += (rec.beta - mean) * (rec.beta - mean);
        std_mean += rec.standardized;
    }
    var = samples > 1 ? var / (samples - 1) : 0.0;
    std_mean /= samples;
    double std_var = 0, m3 = 0;
    for (const auto& rec : report.records) {
        const double d = rec.standardized - std_mean;
        std_var += d * d;
        m3 += d * d * d;
    }
    std_var = samples > 1 ? std_var / (samples - 1) : 0.0;
    m3 /= samples;

    report.mean_beta_over_n = mean / n;
    report.var_beta_over_n = var / n;
    report.mean_standardized = std_mean;
    report.var_standardized = std_var;
    report.skewness = std_var > 0 ? m3 / std::pow(std_var, 1.5) : 0.0;
    report.wall_ms = elapsed_ms(start);
    return report;
}

void write_csv(std::ostream& out, const ErReport& report) {
    out << "trial,connected,resolved\n";
    for (const auto& rec : report.records)
        out << rec.trial << "," << rec.connected << "," << rec.resolved << "\n";
}

void write_csv(std::ostream& out, const TreeDistReport& report) {
    out << "sample,beta,standardized\n";
    for (const auto& rec : report.records)
        out << rec.sample << "," << rec.beta << "," << rec.standardized << "\n";
}

}  // namespace mdim
