#include "mdim/hamming.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdim {

namespace {

const char* kCanonicalSymbols =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

void check_space(int k, int a, std::string_view alphabet) {
    if (k < 1) throw std::invalid_argument("hamming space requires k >= 1");
    if (a < 2) throw std::invalid_argument("hamming space requires alphabet size >= 2");
    if (static_cast<int>(alphabet.size()) != a)
        throw std::invalid_argument("alphabet length does not match a");
    std::set<char> distinct(alphabet.begin(), alphabet.end());
    if (static_cast<int>(distinct.size()) != a)
        throw std::invalid_argument("alphabet symbols must be distinct");
}

}  // namespace

HammingSpace HammingSpace::canonical(int k, int a) {
    if (a > 62) throw std::invalid_argument("canonical alphabet supports a <= 62");
    HammingSpace s;
    s.k = k;
    s.a = a;
    s.alphabet.assign(kCanonicalSymbols, static_cast<std::size_t>(a));
    check_space(s.k, s.a, s.alphabet);
    return s;
}

HammingSpace HammingSpace::with_alphabet(int k, std::string alphabet) {
    HammingSpace s;
    s.k = k;
    s.a = static_cast<int>(alphabet.size());
    s.alphabet = std::move(alphabet);
    check_space(s.k, s.a, s.alphabet);
    return s;
}

std::uint64_t HammingSpace::vertex_count() const {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > (~0ULL) / static_cast<std::uint64_t>(a))
            throw std::runtime_error("a^k overflows 64 bits");
        count *= static_cast<std::uint64_t>(a);
    }
    return count;
}

int HammingSpace::symbol_index(char c) const {
    const auto pos = alphabet.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::string HammingSpace::label_of(std::uint64_t index) const {
    std::string label(static_cast<std::size_t>(k), alphabet[0]);
    for (int i = k - 1; i >= 0; --i) {
        label[i] = alphabet[index % a];
        index /= a;
    }
    return label;
}

std::uint64_t HammingSpace::index_of(std::string_view label) const {
    check_vertex(label);
    std::uint64_t index = 0;
    for (char c : label) index = index * a + static_cast<std::uint64_t>(symbol_index(c));
    return index;
}

void HammingSpace::check_vertex(std::string_view label) const {
    if (static_cast<int>(label.size()) != k)
        throw std::invalid_argument("vertex label length != k");
    for (char c : label)
        if (symbol_index(c) < 0)
            throw std::invalid_argument(std::string("symbol not in alphabet: '") + c + "'");
}

int hamming_distance(std::string_view u, std::string_view v) {
    if (u.size() != v.size()) throw std::invalid_argument("hamming distance of unequal lengths");
    int mismatches = 0;
    for (std::size_t i = 0; i < u.size(); ++i) mismatches += (u[i] != v[i]);
    return mismatches;
}

int hamming_distance(const HammingSpace& space, std::string_view u, std::string_view v) {
    space.check_vertex(u);
    space.check_vertex(v);
    return hamming_distance(u, v);
}

int beta_h2(int a) {
    if (a < 2) throw std::invalid_argument("beta_h2 requires a >= 2");
    return (2 * (2 * a - 1)) / 3;
}

HypercubeReference hypercube_reference(int k) {
    static constexpr int kValues[17] = {1, 2, 3, 4, 4, 5, 6, 6, 7, 7, 8, 8, 8, 9, 9, 10, 10};
    if (k < 1 || k > 17) throw std::invalid_argument("hypercube reference covers 1 <= k <= 17");
    return {kValues[k - 1], k <= 10};
}

namespace {

using Digits = std::vector<std::uint8_t>;

Digits to_digits(const HammingSpace& space, std::string_view label) {
    space.check_vertex(label);
    Digits d(label.size());
    for (std::size_t i = 0; i < label.size(); ++i)
        d[i] = static_cast<std::uint8_t>(space.symbol_index(label[i]));
    return d;
}

void decode_index(std::uint64_t index, int k, int a, std::uint8_t* out) {
    for (int i = k - 1; i >= 0; --i) {
        out[i] = static_cast<std::uint8_t>(index % a);
        index /= a;
    }
}

inline int digits_distance(const std::uint8_t* u, const std::uint8_t* v, int k) {
    int mismatches = 0;
    for (int i = 0; i < k; ++i) mismatches += (u[i] != v[i]);
    return mismatches;
}

void check_set(const HammingSpace& space, const std::vector<std::string>& set) {
    for (const auto& s : set) space.check_vertex(s);
    std::set<std::string> distinct(set.begin(), set.end());
    if (distinct.size() != set.size())
        throw std::invalid_argument("resolving set contains duplicate vertices");
}

template <bool Parallel>
HammingVerdict verify_exhaustive(const HammingSpace& space, const std::vector<std::string>& set,
                                 const HammingVerifyOptions& opts) {
    const std::uint64_t count = space.vertex_count();
    if (count > opts.exhaustive_cap)
        throw std::runtime_error("exhaustive verification refused: a^k = " + std::to_string(count) +
                                 " exceeds cap " + std::to_string(opts.exhaustive_cap));
    const int m = static_cast<int>(set.size());
    const int k = space.k;
    if (m == 0) {
        HammingVerdict verdict;
        if (count <= 1) {
            verdict.result = HammingVerdict::Result::resolving;
        } else {
            verdict.result = HammingVerdict::Result::not_resolving;
            verdict.counterexample = {space.label_of(0), space.label_of(1)};
        }
        return verdict;
    }

    std::vector<Digits> members;
    members.reserve(m);
    for (const auto& s : set) members.push_back(to_digits(space, s));

    const std::size_t n = static_cast<std::size_t>(count);
    std::vector<std::uint8_t> sigs(n * m);

    auto fill_range = [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint8_t> digits(k);
        for (std::size_t idx = begin; idx < end; ++idx) {
            decode_index(idx, k, space.a, digits.data());
            std::uint8_t* row = sigs.data() + idx * m;
            for (int j = 0; j < m; ++j)
                row[j] = static_cast<std::uint8_t>(digits_distance(digits.data(), members[j].data(), k));
        }
    };

    if constexpr (Parallel) {
#pragma omp parallel
        {
            int tid = 0, nth = 1;
#ifdef _OPENMP
            tid = omp_get_thread_num();
            nth = omp_get_num_threads();
#endif
            const std::size_t chunk = (n + nth - 1) / nth;
            const std::size_t begin = std::min(n, chunk * static_cast<std::size_t>(tid));
            const std::size_t end = std::min(n, begin + chunk);
            fill_range(begin, end);
        }
    } else {
        fill_range(0, n);
    }

    std::vector<std::uint64_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) {
        const int c = std::memcmp(sigs.data() + x * m, sigs.data() + y * m, m);
        return c != 0 ? c < 0 : x < y;
    });

    // Collisions are adjacent runs; report the lexicographically smallest
    // colliding pair. Labels sort like indices, so index order is label order.
    HammingVerdict verdict;
    verdict.result = HammingVerdict::Result::resolving;
    verdict.pairs_checked = count < 2 ? 0 : count * (count - 1) / 2;
    std::uint64_t best_u = ~0ULL, best_v = ~0ULL;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::memcmp(sigs.data() + order[i] * m, sigs.data() + order[i + 1] * m, m) == 0) {
            const std::uint64_t u = order[i], v = order[i + 1];
            if (u < best_u || (u == best_u && v < best_v)) {
                best_u = u;
                best_v = v;
            }
        }
    }
    if (best_u != ~0ULL) {
        verdict.result = HammingVerdict::Result::not_resolving;
        verdict.counterexample = {space.label_of(best_u), space.label_of(best_v)};
    }
    return verdict;
}

template <bool Parallel>
HammingVerdict verify_sampled(const HammingSpace& space, const std::vector<std::string>& set,
                              const HammingVerifyOptions& opts) {
    const std::uint64_t count = space.vertex_count();
    if (count < 2) throw std::invalid_argument("sampled verification needs at least 2 vertices");
    if (opts.sample_pairs == 0) throw std::invalid_argument("sampled verification needs pairs >= 1");
    const int m = static_cast<int>(set.size());
    const int k = space.k;

    std::vector<Digits> members;
    members.reserve(m);
    for (const auto& s : set) members.push_back(to_digits(space, s));

    const std::int64_t pairs = static_cast<std::int64_t>(opts.sample_pairs);
    std::uint64_t first_fail = ~0ULL;

    auto pair_collides = [&](std::uint64_t pair_index, std::uint64_t& u_out, std::uint64_t& v_out) {
        Rng rng(stream_seed(opts.seed, pair_index));
        std::uint64_t u = rng.next_below(count);
        std::uint64_t v = rng.next_below(count - 1);
        if (v >= u) ++v;
        u_out = u;
        v_out = v;
        std::vector<std::uint8_t> du(k), dv(k);
        decode_index(u, k, space.a, du.data());
        decode_index(v, k, space.a, dv.data());
        for (int j = 0; j < m; ++j)
            if (digits_distance(du.data(), members[j].data(), k) !=
                digits_distance(dv.data(), members[j].data(), k))
                return false;
        return true;
    };

    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) reduction(min : first_fail)
        for (std::int64_t i = 0; i < pairs; ++i) {
            std::uint64_t u, v;
            if (pair_collides(static_cast<std::uint64_t>(i), u, v))
                first_fail = std::min(first_fail, static_cast<std::uint64_t>(i));
        }
    } else {
        for (std::int64_t i = 0; i < pairs && first_fail == ~0ULL; ++i) {
            std::uint64_t u, v;
            if (pair_collides(static_cast<std::uint64_t>(i), u, v))
                first_fail = static_cast<std::uint64_t>(i);
        }
    }

    HammingVerdict verdict;
    verdict.pairs_checked = opts.sample_pairs;
    if (first_fail == ~0ULL) {
        verdict.result = HammingVerdict::Result::sampled_pass;
        return verdict;
    }
    std::uint64_t u, v;
    pair_collides(first_fail, u, v);
    verdict.result = HammingVerdict::Result::not_resolving;
    verdict.counterexample = {space.label_of(std::min(u, v)), space.label_of(std::max(u, v))};
    return verdict;
}

}  // namespace

HammingVerdict verify_hamming_resolving(const HammingSpace& space,
                                        const std::vector<std::string>& set, bool exhaustive,
                                        const HammingVerifyOptions& opts) {
    check_set(space, set);
    return exhaustive ? verify_exhaustive<true>(space, set, opts)
                      : verify_sampled<true>(space, set, opts);
}

HammingVerdict verify_hamming_resolving_serial(const HammingSpace& space,
                                               const std::vector<std::string>& set, bool exhaustive,
                                               const HammingVerifyOptions& opts) {
    check_set(space, set);
    return exhaustive ? verify_exhaustive<false>(space, set, opts)
                      : verify_sampled<false>(space, set, opts);
}

namespace {

// Signature classes with >= 2 members under the current set, streamed over
// the whole space. Groups keep index order; group order follows the smallest
// member, so refinement is deterministic.
std::vector<std::vector<std::uint64_t>> colliding_groups(const HammingSpace& space,
                                                         const std::vector<Digits>& members) {
    const std::uint64_t count = space.vertex_count();
    const std::size_t n = static_cast<std::size_t>(count);
    const int m = static_cast<int>(members.size());
    const int k = space.k;

    std::vector<std::uint8_t> sigs(n * static_cast<std::size_t>(m));
#pragma omp parallel
    {
        std::vector<std::uint8_t> digits(k);
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n); ++idx) {
            decode_index(static_cast<std::uint64_t>(idx), k, space.a, digits.data());
            std::uint8_t* row = sigs.data() + static_cast<std::size_t>(idx) * m;
            for (int j = 0; j < m; ++j)
                row[j] = static_cast<std::uint8_t>(digits_distance(digits.data(), members[j].data(), k));
        }
    }

    std::vector<std::uint64_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) {
        const int c = std::memcmp(sigs.data() + x * m, sigs.data() + y * m, m);
        return c != 0 ? c < 0 : x < y;
    });

    std::vector<std::vector<std::uint64_t>> groups;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && std::memcmp(sigs.data() + order[i] * m, sigs.data() + order[start] * m, m) == 0)
            continue;
        if (i - start >= 2) groups.emplace_back(order.begin() + start, order.begin() + i);
        start = i;
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return groups;
}

}  // namespace

HammingResolvingSet augment(const HammingResolvingSet& base, const HammingVerifyOptions& opts) {
    if (base.mode == HammingVerifiedMode::unverified)
        throw std::runtime_error("augment requires a verified (or sampled-pass) base set");
    const HammingSpace& src = base.space;
    check_set(src, base.vertices);

    HammingSpace target = src;
    target.k = src.k + 1;
    const std::uint64_t target_count = target.vertex_count();
    if (target_count > opts.exhaustive_cap)
        throw std::runtime_error("augment needs exhaustive verification of the target space; a^(k+1) = " +
                                 std::to_string(target_count) + " exceeds cap " +
                                 std::to_string(opts.exhaustive_cap));

    const char first = src.alphabet[0];
    std::vector<std::string> current;
    current.reserve(base.vertices.size());
    for (const auto& r : base.vertices) current.push_back(r + first);

    // Candidate pool: prefixes of the extended members (the base vertices)
    // and the all-first-symbol string, each extended by every symbol.
    std::vector<std::string> pool;
    {
        std::vector<std::string> prefixes = base.vertices;
        prefixes.push_back(std::string(static_cast<std::size_t>(src.k), first));
        std::set<std::string> seen(current.begin(), current.end());
        for (const auto& z : prefixes)
            for (char c : src.alphabet) {
                std::string cand = z + c;
                if (seen.insert(cand).second) pool.push_back(cand);
            }
        std::sort(pool.begin(), pool.end());
    }

    const int budget = src.a / 2;
    std::vector<Digits> member_digits;
    for (const auto& s : current) member_digits.push_back(to_digits(target, s));
    auto groups = colliding_groups(target, member_digits);

    int added = 0;
    std::vector<Digits> pool_digits;
    for (const auto& s : pool) pool_digits.push_back(to_digits(target, s));

    while (!groups.empty()) {
        if (added >= budget)
            throw std::runtime_error("augment budget exceeded: more than floor(a/2) = " +
                                     std::to_string(budget) + " additions needed for k+1 = " +
                                     std::to_string(target.k));

        // Score candidates by the residual class mass sum(c log2 c) after
        // splitting each colliding group on the distance to the candidate;
        // smaller is better (pure entropy gain). Ties keep the
        // lexicographically smallest candidate.
        std::vector<double> costs(pool.size(), -1.0);
#pragma omp parallel
        {
            std::vector<std::uint64_t> dist_counts(static_cast<std::size_t>(target.k) + 1);
            std::vector<std::uint8_t> digits(target.k);
#pragma omp for schedule(dynamic, 2)
            for (std::size_t c = 0; c < pool.size(); ++c) {
                bool taken = false;
                for (const auto& cur : current)
                    if (cur == pool[c]) taken = true;
                if (taken) continue;
                double cost = 0.0;
                for (const auto& group : groups) {
                    std::fill(dist_counts.begin(), dist_counts.end(), 0);
                    for (std::uint64_t idx : group) {
                        decode_index(idx, target.k, target.a, digits.data());
                        ++dist_counts[digits_distance(digits.data(), pool_digits[c].data(), target.k)];
                    }
                    for (std::uint64_t cnt : dist_counts)
                        if (cnt > 1) cost += static_cast<double>(cnt) * std::log2(static_cast<double>(cnt));
                }
                costs[c] = cost;
            }
        }

        int best = -1;
        for (std::size_t c = 0; c < pool.size(); ++c) {
            if (costs[c] < 0) continue;
            if (best < 0 || costs[c] < costs[best]) best = static_cast<int>(c);
        }
        if (best < 0) throw std::runtime_error("augment candidate pool exhausted");

        current.push_back(pool[best]);
        ++added;

        // Refine groups by distance to the new member.
        const Digits& chosen = pool_digits[best];
        std::vector<std::vector<std::uint64_t>> next;
        std::vector<std::uint8_t> digits(target.k);
        for (const auto& group : groups) {
            std::vector<std::vector<std::uint64_t>> buckets(static_cast<std::size_t>(target.k) + 1);
            for (std::uint64_t idx : group) {
                decode_index(idx, target.k, target.a, digits.data());
                buckets[digits_distance(digits.data(), chosen.data(), target.k)].push_back(idx);
            }
            for (auto& b : buckets)
                if (b.size() >= 2) next.push_back(std::move(b));
        }
        groups = std::move(next);
    }

    HammingResolvingSet out;
    out.space = target;
    out.vertices = std::move(current);
    const HammingVerdict verdict = verify_hamming_resolving(target, out.vertices, true, opts);
    if (verdict.result != HammingVerdict::Result::resolving)
        throw std::logic_error("augment produced a non-resolving set");  // cannot happen
    out.mode = HammingVerifiedMode::exhaustive;
    return out;
}

HammingResolvingSet read_hamming_set(std::istream& in, const std::string& filename) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    HammingResolvingSet out;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (!have_header) {
            if (tokens.size() != 3)
                throw std::runtime_error(filename + ":" + std::to_string(line_no) +
                                         ": expected header \"k a alphabet\"");
            int k = 0, a = 0;
            try {
                k = std::stoi(tokens[0]);
                a = std::stoi(tokens[1]);
            } catch (const std::exception&) {
                throw std::runtime_error(filename + ":" + std::to_string(line_no) +
                                         ": expected header \"k a alphabet\"");
            }
            if (static_cast<int>(tokens[2].size()) != a)
                throw std::runtime_error(filename + ":" + std::to_string(line_no) +
                                         ": alphabet length does not match a");
            out.space = HammingSpace::with_alphabet(k, tokens[2]);
            have_header = true;
            continue;
        }
        if (tokens.size() != 1)
            throw std::runtime_error(filename + ":" + std::to_string(line_no) +
                                     ": expected one vertex label per line");
        try {
            out.space.check_vertex(tokens[0]);
        } catch (const std::exception& e) {
            throw std::runtime_error(filename + ":" + std::to_string(line_no) + ": " + e.what());
        }
        out.vertices.push_back(tokens[0]);
    }
    if (!have_header) throw std::runtime_error(filename + ": missing header line \"k a alphabet\"");
    return out;
}

void write_hamming_set(std::ostream& out, const HammingResolvingSet& set) {
    out << set.space.k << " " << set.space.a << " " << set.space.alphabet << "\n";
    for (const auto& v : set.vertices) out << v << "\n";
}

}  // namespace mdim
