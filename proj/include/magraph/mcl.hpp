#pragma once

#include <map>
#include <string>
#include <vector>

#include "magraph/simgraph.hpp"

namespace magraph {

/// Markov-clustering parameters. The defaults are the canonical MCL choices.
struct MclParams {
    int expansion = 2;              ///< matrix power per iteration, >= 2
    double inflation = 2.0;         ///< entrywise power, > 1
    double prune_threshold = 1e-5;  ///< entries below are zeroed, >= 0
    int max_iters = 100;            ///< positive
    double convergence_eps = 1e-6;  ///< max entry change declaring a fixpoint, > 0
    bool add_self_loops = true;     ///< unit self-loop on every vertex

    void validate() const;
};

/// A partition of the graph's vertices. Cluster ids are contiguous integers
/// ordered by descending cluster size, ties by smallest member id; member
/// lists are sorted by id.
struct Clustering {
    std::map<std::string, int> assignment;
    std::vector<std::vector<std::string>> clusters;
    bool converged = true;  ///< false when max_iters was hit first
    int iterations = 0;
};

/// Markov clustering: iterate expansion -> inflation -> prune -> renormalize
/// on the column-stochastic matrix of g until the matrix change is below
/// convergence_eps (or max_iters is reached; the result then carries
/// converged = false). Clusters are read from the converged attractor
/// structure: attractors are vertices retaining diagonal mass, attractor
/// systems are connected groups of attractors, and every other vertex joins
/// the system of its strongest attractor (ties by smallest id).
Clustering mcl_cluster(const SimilarityGraph& g, const MclParams& params = {});

}  // namespace magraph
