#pragma once

#include <span>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class Method {
    brute_force,
    ich,
    tree_formula,
    hamming_augment,
    user_supplied,
};

const char* method_name(Method m);

// Ordered vertex set whose distance vectors identify every vertex. The order
// defines the signature coordinates.
struct ResolvingSet {
    std::vector<int> vertices;
    Method method = Method::user_supplied;
    bool verified = false;
};

// Distance vector of one vertex to an ordered reference set.
struct Signature {
    int vertex;
    std::vector<Dist> coords;
};

// Signatures of every vertex (in id order) against the ordered set R.
// Throws on empty R, out-of-range or duplicate ids.
std::vector<Signature> phi(const DistanceMatrix& d, std::span<const int> r);

// True iff all n signatures against R are pairwise distinct. kUnreachable
// coordinates compare equal only to each other. The empty set resolves
// exactly the graphs with at most one vertex.
bool is_resolving(const DistanceMatrix& d, std::span<const int> r);

// Same check from precomputed distance rows (rows[i][u] = d(r_i, u)); used to
// verify sets on graphs too large for a full matrix.
bool is_resolving_rows(const std::vector<std::vector<Dist>>& rows, int n);

struct BruteForceOptions {
    // Enumeration is Theta(2^n) in the worst case; refuse larger inputs
    // unless the caller raises the cap explicitly.
    int vertex_cap = 32;
};

// Minimum resolving set: subsets enumerated by increasing size, lexicographic
// within a size, first hit returned. |result| = beta(G). n = 1 yields the
// empty set. The parallel version scans fixed-size rank blocks across OpenMP
// threads and keeps the lowest-rank hit, so it returns the same set as the
// serial one.
ResolvingSet min_resolving_bruteforce(const DistanceMatrix& d, BruteForceOptions opts = {});
ResolvingSet min_resolving_bruteforce_serial(const DistanceMatrix& d, BruteForceOptions opts = {});

// True iff every vertex pair u, v has r1, r2 in S with
// d(u,r1) - d(u,r2) != d(v,r1) - d(v,r2). Requires |S| >= 2 and a connected
// graph (differences are undefined across components).
bool is_doubly_resolving(const DistanceMatrix& d, std::span<const int> s);

// Minimum doubly resolving set, sizes ascending from 2, lexicographic within
// a size.
std::vector<int> min_doubly_resolving_bruteforce(const DistanceMatrix& d,
                                                 BruteForceOptions opts = {});

}  // namespace mdim
