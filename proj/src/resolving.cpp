#include "mdim/resolving.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace mdim {

const char* method_name(Method m) {
    switch (m) {
        case Method::brute_force: return "brute_force";
        case Method::ich: return "ich";
        case Method::tree_formula: return "tree_formula";
        case Method::hamming_augment: return "hamming_augment";
        case Method::user_supplied: return "user_supplied";
    }
    return "unknown";
}

namespace {

void check_ids(const DistanceMatrix& d, std::span<const int> r) {
    for (int v : r)
        if (v < 0 || v >= d.num_vertices())
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

std::vector<int> unique_sorted(std::span<const int> r) {
    std::vector<int> s(r.begin(), r.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t mix(std::uint64_t h, Dist v) {
    h ^= v;
    return h * kFnvPrime;
}

// Signature-collision check via open-addressed hashing of rows restricted to
// R, aborting at the first colliding pair. Behaviorally identical to the
// definitional pairwise comparison.
struct ResolveScratch {
    std::vector<std::uint32_t> table;  // vertex id + 1, 0 = empty
    std::vector<std::uint64_t> hashes;

    bool distinct_signatures(const DistanceMatrix& d, std::span<const int> r) {
        const int n = d.num_vertices();
        std::size_t cap = 16;
        while (cap < static_cast<std::size_t>(n) * 2) cap <<= 1;
        table.assign(cap, 0);
        hashes.resize(n);
        const std::size_t mask = cap - 1;
        for (int u = 0; u < n; ++u) {
            std::uint64_t h = kFnvOffset;
            const auto row = d.row(u);
            for (int ri : r) h = mix(h, row[ri]);
            hashes[u] = h;
            std::size_t slot = h & mask;
            for (;;) {
                const std::uint32_t occupant = table[slot];
                if (occupant == 0) {
                    table[slot] = static_cast<std::uint32_t>(u) + 1;
                    break;
                }
                const int o = static_cast<int>(occupant) - 1;
                if (hashes[o] == h) {
                    bool equal = true;
                    const auto orow = d.row(o);
                    for (int ri : r)
                        if (orow[ri] != row[ri]) {
                            equal = false;
                            break;
                        }
                    if (equal) return false;
                }
                slot = (slot + 1) & mask;
            }
        }
        return true;
    }
};

thread_local ResolveScratch t_scratch;

// Binomial coefficients saturating at 2^63; enumeration ranks stay exact far
// beyond anything a brute force can visit.
constexpr std::uint64_t kBinomCap = 1ULL << 63;

std::vector<std::vector<std::uint64_t>> binomial_table(int n, int k) {
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= std::min(i, k); ++j) {
            const std::uint64_t a = c[i - 1][j - 1];
            const std::uint64_t b = c[i - 1][j];
            c[i][j] = (a >= kBinomCap - b) ? kBinomCap : a + b;
        }
    }
    return c;
}

// rank-th k-subset of 0..n-1 in lexicographic order.
void unrank_combination(std::uint64_t rank, int n, int k,
                        const std::vector<std::vector<std::uint64_t>>& binom,
                        std::vector<int>& out) {
    out.resize(k);
    int x = 0;
    for (int i = 0; i < k; ++i) {
        for (;;) {
            const std::uint64_t block = binom[n - 1 - x][k - 1 - i];
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        out[i] = x++;
    }
}

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_cap(const DistanceMatrix& d, const BruteForceOptions& opts) {
    const int n = d.num_vertices();
    if (n < 1) throw std::invalid_argument("brute force requires n >= 1");
    if (n > opts.vertex_cap)
        throw std::runtime_error("brute force refused: n=" + std::to_string(n) + " exceeds cap " +
                                 std::to_string(opts.vertex_cap) + " (raise the cap to override)");
}

}  // namespace

std::vector<Signature> phi(const DistanceMatrix& d, std::span<const int> r) {
    if (r.empty()) throw std::invalid_argument("phi requires a non-empty reference set");
    check_ids(d, r);
    std::vector<char> seen(d.num_vertices(), 0);
    for (int v : r) {
        if (seen[v]) throw std::invalid_argument("duplicate vertex id in reference set: " + std::to_string(v));
        seen[v] = 1;
    }
    std::vector<Signature> out;
    out.reserve(d.num_vertices());
    for (int u = 0; u < d.num_vertices(); ++u) {
        Signature sig;
        sig.vertex = u;
        sig.coords.reserve(r.size());
        const auto row = d.row(u);
        for (int ri : r) sig.coords.push_back(row[ri]);
        out.push_back(std::move(sig));
    }
    return out;
}

bool is_resolving(const DistanceMatrix& d, std::span<const int> r) {
    check_ids(d, r);
    const std::vector<int> s = unique_sorted(r);
    if (s.empty()) return d.num_vertices() <= 1;
    return t_scratch.distinct_signatures(d, s);
}

bool is_resolving_rows(const std::vector<std::vector<Dist>>& rows, int n) {
    if (rows.empty()) return n <= 1;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (const auto& row : rows) {
            if (row[a] != row[b]) return row[a] < row[b];
        }
        return false;
    });
    for (int i = 0; i + 1 < n; ++i) {
        bool equal = true;
        for (const auto& row : rows)
            if (row[order[i]] != row[order[i + 1]]) {
                equal = false;
                break;
            }
        if (equal) return false;
    }
    return true;
}

ResolvingSet min_resolving_bruteforce_serial(const DistanceMatrix& d, BruteForceOptions opts) {
    check_cap(d, opts);
    const int n = d.num_vertices();
    ResolvingSet out;
    out.method = Method::brute_force;
    out.verified = true;
    if (n == 1) return out;

    std::vector<int> comb;
    for (int k = 1; k <= n - 1; ++k) {
        comb.resize(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            if (t_scratch.distinct_signatures(d, comb)) {
                out.vertices = comb;
                return out;
            }
        } while (next_combination(comb, n));
    }
    // Any n-1 vertices resolve a graph with pairwise-distinct vertices; only
    // zero-weight twins (d(u,v) = 0 for u != v) can land here.
    throw std::runtime_error(
        "graph has indistinguishable vertices (distance-0 pair); no resolving set exists");
}

ResolvingSet min_resolving_bruteforce(const DistanceMatrix& d, BruteForceOptions opts) {
    check_cap(d, opts);
    const int n = d.num_vertices();
    ResolvingSet out;
    out.method = Method::brute_force;
    out.verified = true;
    if (n == 1) return out;

    constexpr std::uint64_t kNotFound = ~0ULL;
    constexpr std::uint64_t kBlock = 16384;
    for (int k = 1; k <= n - 1; ++k) {
        const auto binom = binomial_table(n, k);
        const std::uint64_t total = binom[n][k];
        for (std::uint64_t start = 0; start < total; start += kBlock) {
            const std::uint64_t end = std::min(total, start + kBlock);
            std::uint64_t found = kNotFound;
#pragma omp parallel
            {
                std::vector<int> comb;
#pragma omp for schedule(static) reduction(min : found)
                for (std::uint64_t rank = start; rank < end; ++rank) {
                    unrank_combination(rank, n, k, binom, comb);
                    if (t_scratch.distinct_signatures(d, comb)) found = std::min(found, rank);
                }
            }
            if (found != kNotFound) {
                std::vector<int> comb;
                unrank_combination(found, n, k, binom, comb);
                out.vertices = comb;
                return out;
            }
        }
    }
    throw std::runtime_error(
        "graph has indistinguishable vertices (distance-0 pair); no resolving set exists");
}

bool is_doubly_resolving(const DistanceMatrix& d, std::span<const int> s) {
    check_ids(d, s);
    const std::vector<int> set = unique_sorted(s);
    if (set.size() < 2) throw std::invalid_argument("doubly resolving sets need at least 2 vertices");
    const int n = d.num_vertices();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (d(u, v) == kUnreachable)
                throw std::runtime_error("doubly resolving check requires a connected graph");

    // u, v are doubly resolved iff d(u,s) - d(v,s) is non-constant over s.
    for (int u = 0; u < n; ++u) {
        const auto urow = d.row(u);
        for (int v = u + 1; v < n; ++v) {
            const auto vrow = d.row(v);
            const std::int64_t first =
                static_cast<std::int64_t>(urow[set[0]]) - static_cast<std::int64_t>(vrow[set[0]]);
            bool separated = false;
            for (std::size_t i = 1; i < set.size(); ++i) {
                const std::int64_t diff = static_cast<std::int64_t>(urow[set[i]]) -
                                          static_cast<std::int64_t>(vrow[set[i]]);
                if (diff != first) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

std::vector<int> min_doubly_resolving_bruteforce(const DistanceMatrix& d, BruteForceOptions opts) {
    check_cap(d, opts);
    const int n = d.num_vertices();
    if (n < 2) throw std::invalid_argument("doubly resolving brute force requires n >= 2");
    std::vector<int> comb;
    for (int k = 2; k <= n; ++k) {
        comb.resize(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            if (is_doubly_resolving(d, comb)) return comb;
        } while (next_combination(comb, n));
    }
    throw std::runtime_error("no doubly resolving set found");  // unreachable: V qualifies
}

}  // namespace mdim
