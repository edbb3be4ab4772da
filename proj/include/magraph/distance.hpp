#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "magraph/norms.hpp"
#include "magraph/types.hpp"

namespace magraph {

/// Parameters of the weighted distance: edge-attribute coefficients alpha
/// (length m, non-negative, summing to 1) and the edge-weightage exponent
/// gamma >= 0. Larger gamma lets strong ties shrink the distance more.
struct DistanceParams {
    WeightVector alpha;
    double gamma = 1.0;

    void validate() const;
};

/// One computed distance: canonical pair (i precedes j lexicographically)
/// plus the non-negative distance value.
struct DistanceRecord {
    std::string i;
    std::string j;
    double delta = 0.0;
};

/// Which vertex-pairs receive a distance record.
enum class PairsMode {
    AllPairs,       ///< every unordered pair; absent edges count as zero ties
    EdgeListOnly,   ///< only pairs present in the edge list
};

/// Aggregate edge weight omega = sum_k alpha_k * e_k >= 0.
/// The zero edge vector yields omega = 0.
double aggregate_edge_weight(const Eigen::VectorXd& e, const WeightVector& alpha);

/// Tie-shrink factor lambda = 1 / (1 + omega)^gamma, in (0, 1].
/// Equals 1 exactly iff omega = 0 or gamma = 0; monotonically decreasing
/// in omega (gamma >= 1) and in gamma (omega > 0).
double lambda_factor(double omega, double gamma);

/// Weighted distance sqrt(lambda) * ||u - v||_2. At omega = 0 this is
/// exactly the Euclidean distance.
template <typename DerivedU, typename DerivedV>
double weighted_distance(const Eigen::DenseBase<DerivedU>& u,
                         const Eigen::DenseBase<DerivedV>& v,
                         double omega, double gamma) {
    if (u.size() != v.size())
        throw DimensionError("weighted_distance: vertex dimensions " +
                             std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " differ");
    double euclid = norm_l2((u.derived() - v.derived()).eval());
    return std::sqrt(lambda_factor(omega, gamma)) * euclid;
}

/// Distance records for the selected pairs of the graph, in canonical pair
/// order (lexicographic by (i, j)). In AllPairs mode a pair without an edge
/// uses omega = 0 and therefore gets its plain Euclidean distance.
std::vector<DistanceRecord> magdist(const MultiAttributedGraph& graph,
                                    const DistanceParams& params,
                                    PairsMode mode = PairsMode::AllPairs);

}  // namespace magraph
