#include "mdim/ich.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdim {

SignatureBag make_signature_bag(const DistanceMatrix& d, std::span<const int> r) {
    SignatureBag bag;
    const int n = d.num_vertices();
    bag.total = static_cast<std::size_t>(n);
    for (int u = 0; u < n; ++u) {
        std::vector<Dist> key;
        key.reserve(r.size());
        const auto row = d.row(u);
        for (int ri : r) key.push_back(row[ri]);
        ++bag.counts[key];
    }
    return bag;
}

double entropy(const SignatureBag& bag) {
    if (bag.total == 0) throw std::invalid_argument("entropy of an empty bag");
    double acc = 0.0;
    for (const auto& [key, count] : bag.counts)
        acc += static_cast<double>(count) * std::log2(static_cast<double>(count));
    // log2(total) - acc/total is exactly log2(total) when every class is a
    // singleton (acc == 0), which is what the greedy termination tests rely on.
    return std::log2(static_cast<double>(bag.total)) - acc / static_cast<double>(bag.total);
}

namespace {

// Entropy of the partition refined by the candidate column, via sorted
// (class, distance) runs. Deterministic regardless of thread count: each
// candidate is scored wholly inside one thread with a fixed iteration order.
double refined_entropy(const std::vector<std::uint32_t>& cls, std::span<const Dist> column, int n,
                       double log2_n, std::vector<std::pair<std::uint32_t, Dist>>& scratch) {
    scratch.clear();
    scratch.reserve(n);
    for (int u = 0; u < n; ++u) scratch.emplace_back(cls[u], column[u]);
    std::sort(scratch.begin(), scratch.end());
    double acc = 0.0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= scratch.size(); ++i) {
        if (i < scratch.size() && scratch[i] == scratch[i - 1]) {
            ++run;
            continue;
        }
        if (run > 1) acc += static_cast<double>(run) * std::log2(static_cast<double>(run));
        run = 1;
    }
    return log2_n - acc / static_cast<double>(n);
}

template <bool Parallel>
IchResult ich_impl(const DistanceMatrix& d) {
    const int n = d.num_vertices();
    if (n < 1) throw std::invalid_argument("ich requires n >= 1");

    IchResult result;
    result.set.method = Method::ich;
    if (n == 1) {
        result.set.verified = true;  // the empty set resolves K_1
        return result;
    }

    const double log2_n = std::log2(static_cast<double>(n));
    std::vector<std::uint32_t> cls(n, 0);
    std::uint32_t num_classes = 1;
    std::vector<char> in_set(n, 0);
    std::vector<double> scores(n);

    while (num_classes < static_cast<std::uint32_t>(n)) {
        if constexpr (Parallel) {
#pragma omp parallel
            {
                std::vector<std::pair<std::uint32_t, Dist>> scratch;
#pragma omp for schedule(dynamic, 8)
                for (int v = 0; v < n; ++v) {
                    scores[v] = in_set[v] ? -1.0 : refined_entropy(cls, d.row(v), n, log2_n, scratch);
                }
            }
        } else {
            std::vector<std::pair<std::uint32_t, Dist>> scratch;
            for (int v = 0; v < n; ++v)
                scores[v] = in_set[v] ? -1.0 : refined_entropy(cls, d.row(v), n, log2_n, scratch);
        }

        // argmax with lowest-id tie-break
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (in_set[v]) continue;
            if (best < 0 || scores[v] > scores[best]) best = v;
        }

        in_set[best] = 1;
        result.set.vertices.push_back(best);
        result.trace.push_back({best, scores[best]});

        // refine the partition with the chosen column
        std::vector<std::pair<std::pair<std::uint32_t, Dist>, int>> keys;
        keys.reserve(n);
        const auto column = d.row(best);
        for (int u = 0; u < n; ++u) keys.push_back({{cls[u], column[u]}, u});
        std::sort(keys.begin(), keys.end());
        std::uint32_t next_id = 0;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i > 0 && keys[i].first != keys[i - 1].first) ++next_id;
            cls[keys[i].second] = next_id;
        }
        num_classes = next_id + 1;
    }

    result.set.verified = is_resolving(d, result.set.vertices);
    if (!result.set.verified)
        throw std::logic_error("ich terminated on a non-resolving set");  // cannot happen
    return result;
}

}  // namespace

IchResult ich_run(const DistanceMatrix& d) { return ich_impl<true>(d); }
IchResult ich_run_serial(const DistanceMatrix& d) { return ich_impl<false>(d); }

}  // namespace mdim
