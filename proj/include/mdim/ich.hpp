#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

// Multiset of vertex signatures: signature value -> multiplicity.
struct SignatureBag {
    std::map<std::vector<Dist>, std::size_t> counts;
    std::size_t total = 0;
};

SignatureBag make_signature_bag(const DistanceMatrix& d, std::span<const int> r);

// Shannon entropy of the bag in bits, computed as
// log2(total) - sum(c * log2(c)) / total so that a bag of singletons gives
// exactly log2(total). Throws on an empty bag.
double entropy(const SignatureBag& bag);

struct IchStep {
    int vertex;
    double entropy;  // bits, after adding this vertex
};

struct IchResult {
    ResolvingSet set;
    std::vector<IchStep> trace;
};

// Information Content Heuristic: repeatedly add the vertex maximizing the
// entropy of the signature multiset (ties broken by lowest id) until every
// signature is distinct, i.e. the entropy reaches log2(n) exactly. Candidate
// scoring inside one step is parallelized; the argmax reduction scans scores
// in id order, so the trace does not depend on the thread count.
IchResult ich_run(const DistanceMatrix& d);
IchResult ich_run_serial(const DistanceMatrix& d);

inline ResolvingSet ich(const DistanceMatrix& d) { return ich_run(d).set; }
inline std::vector<IchStep> ich_trace(const DistanceMatrix& d) { return ich_run(d).trace; }

}  // namespace mdim
