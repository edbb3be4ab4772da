#include "magraph/simgraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace magraph {

namespace {

void sort_edges(std::vector<SimilarityEdge>& edges) {
    std::sort(edges.begin(), edges.end(),
              [](const SimilarityEdge& a, const SimilarityEdge& b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
}

}  // namespace

SimilarityGraph magsim(const std::vector<DistanceRecord>& distances) {
    if (distances.empty())
        throw ParameterError("magsim: empty distance list");
    double dmax = 0.0;
    for (const DistanceRecord& r : distances) {
        if (!(r.delta >= 0) || !std::isfinite(r.delta))
            throw DataError("magsim: distance (" + r.i + "," + r.j +
                            ") must be finite and >= 0");
        dmax = std::max(dmax, r.delta);
    }
    if (dmax == 0.0)
        throw DataError("magsim: all distances are zero; similarity is undefined");

    SimilarityGraph g;
    std::set<std::string> ids;
    g.edges.reserve(distances.size());
    for (const DistanceRecord& r : distances) {
        ids.insert(r.i);
        ids.insert(r.j);
        g.edges.push_back({r.i, r.j, 1.0 - r.delta / dmax});
    }
    g.vertices.assign(ids.begin(), ids.end());
    sort_edges(g.edges);
    return g;
}

SimilarityGraph threshold_graph(const SimilarityGraph& g, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw ParameterError("threshold_graph: threshold must be in [0,1]");
    SimilarityGraph out;
    out.vertices = g.vertices;
    out.threshold = t;
    for (const SimilarityEdge& e : g.edges)
        if (e.sim >= t) out.edges.push_back(e);
    return out;
}

SimilarityGraph gaussian_graph(const std::vector<VertexVector>& vertices,
                               double sigma, double t) {
    if (vertices.size() < 2)
        throw ParameterError("gaussian_graph: need at least 2 vertices");
    SimilarityGraph g;
    g.threshold = t;
    g.vertices.reserve(vertices.size());
    for (const VertexVector& v : vertices) g.vertices.push_back(v.id);
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            double kappa = gaussian_kernel(vertices[a].attrs, vertices[b].attrs, sigma);
            if (kappa >= t) {
                const std::string& i = std::min(vertices[a].id, vertices[b].id);
                const std::string& j = std::max(vertices[a].id, vertices[b].id);
                g.edges.push_back({i, j, kappa});
            }
        }
    }
    sort_edges(g.edges);
    return g;
}

SimilarityGraph knn_graph(const std::vector<VertexVector>& vertices, int k,
                          double sigma, KnnMode mode) {
    const std::size_t n = vertices.size();
    if (k < 1 || static_cast<std::size_t>(k) >= n)
        throw ParameterError("knn_graph: k must satisfy 1 <= k < |V|");

    // Kernel matrix once; ranking reuses it for every vertex.
    Eigen::MatrixXd kappa(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        kappa(a, a) = 1.0;
        for (std::size_t b = a + 1; b < n; ++b) {
            double v = gaussian_kernel(vertices[a].attrs, vertices[b].attrs, sigma);
            kappa(a, b) = v;
            kappa(b, a) = v;
        }
    }

    std::vector<std::set<std::size_t>> nearest(n);
    std::vector<std::size_t> order(n);
    for (std::size_t a = 0; a < n; ++a) {
        order.clear();
        for (std::size_t b = 0; b < n; ++b)
            if (b != a) order.push_back(b);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (kappa(a, x) != kappa(a, y)) return kappa(a, x) > kappa(a, y);
            return vertices[x].id < vertices[y].id;
        });
        nearest[a].insert(order.begin(), order.begin() + k);
    }

    SimilarityGraph g;
    g.vertices.reserve(n);
    for (const VertexVector& v : vertices) g.vertices.push_back(v.id);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            bool ab = nearest[a].count(b) > 0;
            bool ba = nearest[b].count(a) > 0;
            bool keep = mode == KnnMode::Union ? (ab || ba) : (ab && ba);
            if (keep) {
                const std::string& i = std::min(vertices[a].id, vertices[b].id);
                const std::string& j = std::max(vertices[a].id, vertices[b].id);
                g.edges.push_back({i, j, kappa(a, b)});
            }
        }
    }
    sort_edges(g.edges);
    return g;
}

MultiAttributedGraph to_multiattributed(const SimilarityGraph& g,
                                        const std::vector<VertexVector>& vertices) {
    std::set<std::string> known;
    for (const VertexVector& v : vertices) known.insert(v.id);
    for (const std::string& id : g.vertices)
        if (!known.count(id))
            throw ReferentialError("to_multiattributed: graph vertex '" + id +
                                   "' has no attribute vector");
    std::vector<EdgeVector> edges;
    edges.reserve(g.edges.size());
    for (const SimilarityEdge& e : g.edges) {
        EdgeVector ev;
        ev.src = e.i;
        ev.dst = e.j;
        ev.attrs = Eigen::VectorXd::Constant(1, e.sim);
        edges.push_back(std::move(ev));
    }
    return MultiAttributedGraph(vertices, std::move(edges));
}

}  // namespace magraph
