#pragma once

#include <Eigen/Core>
#include <string>
#include <unordered_map>
#include <vector>

#include "magraph/error.hpp"

namespace magraph {

/// A graph vertex: opaque string id plus an n-dimensional attribute vector.
struct VertexVector {
    std::string id;
    Eigen::VectorXd attrs;
};

/// An undirected edge carrying an m-dimensional non-negative attribute vector.
/// Stored in canonical order: src precedes dst lexicographically.
struct EdgeVector {
    std::string src;
    std::string dst;
    Eigen::VectorXd attrs;
};

/// Non-negative coefficients summing to 1; the alpha of the aggregate edge
/// weight and the diagonal weights of the weighted Euclidean norm.
struct WeightVector {
    Eigen::VectorXd weights;

    /// Throws ParameterError unless every weight is >= 0 and the sum is 1
    /// within 1e-9 absolute tolerance.
    void validate() const;

    /// Uniform weights 1/m, the default when the caller supplies none.
    static WeightVector uniform(Eigen::Index m);
};

/// Undirected graph whose vertices carry n-dimensional attribute vectors and
/// whose vertex-pairs may carry m-dimensional edge attribute vectors.
/// A pair with no stored edge is semantically the zero edge vector.
class MultiAttributedGraph {
public:
    /// Validates all invariants (unique ids, constant dimensions, finite
    /// values, canonical unique pairs, known endpoints) and canonicalizes
    /// edge endpoint order. Throws DataError / DimensionError /
    /// ReferentialError on violation.
    MultiAttributedGraph(std::vector<VertexVector> vertices,
                         std::vector<EdgeVector> edges);

    const std::vector<VertexVector>& vertices() const noexcept { return vertices_; }
    const std::vector<EdgeVector>& edges() const noexcept { return edges_; }

    /// Vertex attribute dimension; 0 only for a vertex-free graph.
    Eigen::Index vertex_dim() const noexcept { return n_; }
    /// Edge attribute dimension; 0 when the graph has no edges.
    Eigen::Index edge_dim() const noexcept { return m_; }

    /// Position of id in vertices(), or -1.
    std::ptrdiff_t vertex_index(const std::string& id) const;

    /// Edge attrs for the unordered pair {a, b}, or nullptr when absent.
    const Eigen::VectorXd* find_edge(const std::string& a, const std::string& b) const;

private:
    std::vector<VertexVector> vertices_;
    std::vector<EdgeVector> edges_;
    Eigen::Index n_ = 0;
    Eigen::Index m_ = 0;
    std::unordered_map<std::string, std::size_t> vertex_pos_;
    std::unordered_map<std::string, std::size_t> edge_pos_;  // key "a\nb", a < b

    static std::string pair_key(const std::string& a, const std::string& b);
};

}  // namespace magraph
