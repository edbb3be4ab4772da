#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magraph/distance.hpp"
#include "magraph/types.hpp"

namespace magraph {

/// One similarity edge: canonical pair (i precedes j) with sim in [0, 1].
struct SimilarityEdge {
    std::string i;
    std::string j;
    double sim = 0.0;
};

/// Weighted undirected similarity graph. Isolated vertices are permitted;
/// threshold records the minimum similarity retained, when one was applied.
struct SimilarityGraph {
    std::vector<std::string> vertices;
    std::vector<SimilarityEdge> edges;
    std::optional<double> threshold;
};

/// Neighbourhood rule for knn_graph.
enum class KnnMode {
    Union,   ///< keep (u,v) if either is among the other's k nearest
    Mutual,  ///< keep (u,v) only if each is among the other's k nearest
};

/// Distance list to similarity graph: sim = 1 - delta / max delta.
/// The maximizing record(s) get sim = 0; zero-distance records get sim = 1.
/// Throws ParameterError on empty input and DataError when every distance
/// is zero (the conversion would divide by zero).
SimilarityGraph magsim(const std::vector<DistanceRecord>& distances);

/// Copy of g retaining exactly the edges with sim >= t (inclusive).
SimilarityGraph threshold_graph(const SimilarityGraph& g, double t);

/// Gaussian kernel exp(-||u - v||^2 / (2 sigma^2)), in (0, 1].
template <typename DerivedU, typename DerivedV>
double gaussian_kernel(const Eigen::DenseBase<DerivedU>& u,
                       const Eigen::DenseBase<DerivedV>& v, double sigma) {
    if (u.size() != v.size())
        throw DimensionError("gaussian_kernel: vertex dimensions " +
                             std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " differ");
    if (!(sigma > 0))
        throw ParameterError("gaussian_kernel: sigma must be > 0");
    double sq = (u.derived() - v.derived()).cwiseAbs2().sum();
    return std::exp(-sq / (2.0 * sigma * sigma));
}

/// Kernel graph: edge (u,v) with sim = kernel value iff the value is >= t.
/// No self-loops.
SimilarityGraph gaussian_graph(const std::vector<VertexVector>& vertices,
                               double sigma, double t);

/// k-nearest-neighbour kernel graph. Neighbour ranking is by descending
/// kernel value with ties broken by ascending vertex id; edge sim is the
/// kernel value.
SimilarityGraph knn_graph(const std::vector<VertexVector>& vertices, int k,
                          double sigma, KnnMode mode = KnnMode::Union);

/// Bridges a similarity graph into the distance pipeline: each similarity
/// becomes a 1-dimensional edge attribute vector over the given vertices.
MultiAttributedGraph to_multiattributed(const SimilarityGraph& g,
                                        const std::vector<VertexVector>& vertices);

}  // namespace magraph
