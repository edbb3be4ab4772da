#include "magraph/distance.hpp"

#include <algorithm>
#include <cmath>

namespace magraph {

void DistanceParams::validate() const {
    alpha.validate();
    if (!std::isfinite(gamma) || gamma < 0)
        throw ParameterError("gamma must be finite and >= 0, got " +
                             std::to_string(gamma));
}

double aggregate_edge_weight(const Eigen::VectorXd& e, const WeightVector& alpha) {
    if (e.size() != alpha.weights.size())
        throw DimensionError("aggregate_edge_weight: edge dimension " +
                             std::to_string(e.size()) + " != alpha dimension " +
                             std::to_string(alpha.weights.size()));
    double omega = 0.0;
    for (Eigen::Index k = 0; k < e.size(); ++k)  // summation in input order
        omega += alpha.weights[k] * e[k];
    return omega;
}

double lambda_factor(double omega, double gamma) {
    if (!std::isfinite(omega) || omega < 0)
        throw ParameterError("lambda_factor: omega must be finite and >= 0");
    if (!std::isfinite(gamma) || gamma < 0)
        throw ParameterError("lambda_factor: gamma must be finite and >= 0");
    return 1.0 / std::pow(1.0 + omega, gamma);
}

std::vector<DistanceRecord> magdist(const MultiAttributedGraph& graph,
                                    const DistanceParams& params,
                                    PairsMode mode) {
    params.validate();
    if (graph.edge_dim() > 0 && params.alpha.weights.size() != graph.edge_dim())
        throw DimensionError("magdist: alpha dimension " +
                             std::to_string(params.alpha.weights.size()) +
                             " != edge dimension " + std::to_string(graph.edge_dim()));

    std::vector<DistanceRecord> records;
    auto emit = [&](const VertexVector& a, const VertexVector& b,
                    const Eigen::VectorXd* edge) {
        double omega = edge ? aggregate_edge_weight(*edge, params.alpha) : 0.0;
        DistanceRecord r;
        r.i = a.id < b.id ? a.id : b.id;
        r.j = a.id < b.id ? b.id : a.id;
        r.delta = weighted_distance(a.attrs, b.attrs, omega, params.gamma);
        records.push_back(std::move(r));
    };

    if (mode == PairsMode::AllPairs) {
        const auto& vs = graph.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                emit(vs[a], vs[b], graph.find_edge(vs[a].id, vs[b].id));
    } else {
        for (const EdgeVector& e : graph.edges()) {
            const auto& vs = graph.vertices();
            emit(vs[graph.vertex_index(e.src)], vs[graph.vertex_index(e.dst)], &e.attrs);
        }
    }
    std::sort(records.begin(), records.end(),
              [](const DistanceRecord& a, const DistanceRecord& b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
    return records;
}

}  // namespace magraph
