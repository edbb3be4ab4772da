#include "magraph/types.hpp"

#include <cmath>
#include <utility>

namespace magraph {

void WeightVector::validate() const {
    if (weights.size() == 0)
        throw ParameterError("weight vector: empty");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
        double w = weights[k];
        if (!std::isfinite(w) || w < 0)
            throw ParameterError("weight vector: weights must be finite and >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ParameterError("weight vector: weights must sum to 1, got " +
                             std::to_string(sum));
}

WeightVector WeightVector::uniform(Eigen::Index m) {
    if (m < 1)
        throw ParameterError("uniform weights: dimension must be >= 1");
    WeightVector w;
    w.weights = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    return w;
}

std::string MultiAttributedGraph::pair_key(const std::string& a, const std::string& b) {
    return a + '\n' + b;
}

MultiAttributedGraph::MultiAttributedGraph(std::vector<VertexVector> vertices,
                                           std::vector<EdgeVector> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (!vertices_.empty()) n_ = vertices_.front().attrs.size();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const VertexVector& v = vertices_[i];
        if (v.attrs.size() != n_)
            throw DimensionError("vertex '" + v.id + "': attribute dimension " +
                                 std::to_string(v.attrs.size()) + " != " +
                                 std::to_string(n_));
        if (n_ < 1)
            throw DimensionError("vertex '" + v.id + "': empty attribute vector");
        if (!v.attrs.allFinite())
            throw DataError("vertex '" + v.id + "': non-finite attribute");
        if (!vertex_pos_.emplace(v.id, i).second)
            throw DataError("duplicate vertex id '" + v.id + "'");
    }
    if (!edges_.empty()) m_ = edges_.front().attrs.size();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        EdgeVector& e = edges_[i];
        if (e.src == e.dst)
            throw DataError("self-loop edge on vertex '" + e.src + "'");
        if (e.dst < e.src) std::swap(e.src, e.dst);
        if (!vertex_pos_.count(e.src))
            throw ReferentialError("edge endpoint '" + e.src + "' is not a vertex");
        if (!vertex_pos_.count(e.dst))
            throw ReferentialError("edge endpoint '" + e.dst + "' is not a vertex");
        if (e.attrs.size() != m_)
            throw DimensionError("edge (" + e.src + "," + e.dst + "): attribute dimension " +
                                 std::to_string(e.attrs.size()) + " != " +
                                 std::to_string(m_));
        if (m_ < 1)
            throw DimensionError("edge (" + e.src + "," + e.dst + "): empty attribute vector");
        if (!e.attrs.allFinite() || (e.attrs.array() < 0).any())
            throw DataError("edge (" + e.src + "," + e.dst +
                            "): attributes must be finite and >= 0");
        if (!edge_pos_.emplace(pair_key(e.src, e.dst), i).second)
            throw DataError("duplicate edge for pair (" + e.src + "," + e.dst + ")");
    }
}

std::ptrdiff_t MultiAttributedGraph::vertex_index(const std::string& id) const {
    auto it = vertex_pos_.find(id);
    return it == vertex_pos_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

const Eigen::VectorXd* MultiAttributedGraph::find_edge(const std::string& a,
                                                       const std::string& b) const {
    const std::string& lo = a < b ? a : b;
    const std::string& hi = a < b ? b : a;
    auto it = edge_pos_.find(pair_key(lo, hi));
    return it == edge_pos_.end() ? nullptr : &edges_[it->second].attrs;
}

}  // namespace magraph
