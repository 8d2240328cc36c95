#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdim/rng.hpp"

namespace mdim {

// Random-tree limiting distribution constants for the standardized value
// (beta - mu n) / sqrt(sigma2 n).
inline constexpr double kTreeDimMu = 0.14076941;
inline constexpr double kTreeDimSigma2 = 0.063748151;

// ceil(-3 ln(n) / ln(p^2 + (1-p)^2)). Throws for p in {0, 1}.
int er_bound_size(int n, double p);

enum class ErStrategy { random_set, high_degree };

struct ErTrialRecord {
    int trial;
    bool connected;
    bool resolved;
};

struct ErReport {
    int n = 0;
    double p = 0;
    int trials = 0;
    ErStrategy strategy = ErStrategy::random_set;
    RngSeed seed;
    int set_size = 0;
    std::vector<ErTrialRecord> records;
    double success_rate = 0;      // NaN when trials == 0
    double monte_carlo_se = 0;    // sqrt(r(1-r)/trials)
    double connected_fraction = 0;
    double wall_ms = 0;
};

// Per trial: sample G(n,p), pick a set of er_bound_size(n,p) vertices by the
// strategy, test resolvability (unreachable-aware; disconnected samples are
// kept, not resampled). Trials run in parallel on per-trial seed streams, so
// records are independent of thread count and execution order.
ErReport er_resolving_trial(int n, double p, int trials, ErStrategy strategy, RngSeed seed);

struct TreeDistRecord {
    int sample;
    int beta;
    double standardized;
};

struct TreeDistReport {
    int n = 0;
    int samples = 0;
    RngSeed seed;
    std::vector<TreeDistRecord> records;
    double mean_beta_over_n = 0;
    double var_beta_over_n = 0;  // sample variance of beta, divided by n
    double mean_standardized = 0;
    double var_standardized = 0;
    double skewness = 0;  // of the standardized values
    double wall_ms = 0;
};

// Per sample: uniform labeled tree (Prufer), beta via the tree formula.
TreeDistReport tree_dim_distribution(int n, int samples, RngSeed seed);

// One row per trial/sample, header included.
void write_csv(std::ostream& out, const ErReport& report);
void write_csv(std::ostream& out, const TreeDistReport& report);

const char* strategy_name(ErStrategy s);

}  // namespace mdim
