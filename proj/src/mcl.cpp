#include "magraph/mcl.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace magraph {

void MclParams::validate() const {
    if (expansion < 2) throw ParameterError("mcl: expansion must be >= 2");
    if (!(inflation > 1) || !std::isfinite(inflation))
        throw ParameterError("mcl: inflation must be > 1");
    if (!(prune_threshold >= 0)) throw ParameterError("mcl: prune_threshold must be >= 0");
    if (max_iters < 1) throw ParameterError("mcl: max_iters must be >= 1");
    if (!(convergence_eps > 0)) throw ParameterError("mcl: convergence_eps must be > 0");
}

namespace {

/// Column-normalize in place; an all-zero column gets a unit self-entry so
/// the matrix stays stochastic (only arises for isolated vertices with
/// self-loops disabled).
void normalize_columns(Eigen::MatrixXd& M) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
        double s = M.col(c).sum();
        if (s > 0)
            M.col(c) /= s;
        else
            M(c, c) = 1.0;
    }
}

void assert_column_stochastic(const Eigen::MatrixXd& M) {
    for (Eigen::Index c = 0; c < M.cols(); ++c)
        if (std::abs(M.col(c).sum() - 1.0) > 1e-9)
            throw DataError("mcl: internal error, column " + std::to_string(c) +
                            " is not stochastic");
}

struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Clustering mcl_cluster(const SimilarityGraph& g, const MclParams& params) {
    params.validate();
    if (g.vertices.empty()) throw ParameterError("mcl: empty graph");

    const std::size_t n = g.vertices.size();
    std::unordered_map<std::string, std::size_t> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!pos.emplace(g.vertices[i], i).second)
            throw DataError("mcl: duplicate vertex id '" + g.vertices[i] + "'");
    }

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (const SimilarityEdge& e : g.edges) {
        auto a = pos.find(e.i), b = pos.find(e.j);
        if (a == pos.end() || b == pos.end())
            throw ReferentialError("mcl: edge endpoint not in vertex list");
        if (!std::isfinite(e.sim) || e.sim < 0)
            throw DataError("mcl: edge (" + e.i + "," + e.j +
                            ") weight must be finite and >= 0");
        M(a->second, b->second) = e.sim;
        M(b->second, a->second) = e.sim;
    }
    if (params.add_self_loops)
        M.diagonal().setConstant(1.0);
    normalize_columns(M);

    Clustering result;
    Eigen::MatrixXd next(n, n);
    for (int it = 1; it <= params.max_iters; ++it) {
        result.iterations = it;
        // expansion: M^expansion
        next = M * M;
        for (int p = 2; p < params.expansion; ++p) next = next * M;
        // inflation: entrywise power, then renormalize
        next = next.array().pow(params.inflation);
        normalize_columns(next);
        // prune tiny entries, then renormalize
        next = next.unaryExpr([&](double x) {
            return x < params.prune_threshold ? 0.0 : x;
        });
        normalize_columns(next);
        assert_column_stochastic(next);

        double change = (next - M).cwiseAbs().maxCoeff();
        M.swap(next);
        if (change < params.convergence_eps) {
            result.converged = true;
            break;
        }
        result.converged = false;
    }

    // Attractors: vertices retaining diagonal mass at the fixpoint.
    std::vector<std::size_t> attractors;
    std::vector<char> is_attractor(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (M(v, v) > params.prune_threshold) {
            is_attractor[v] = 1;
            attractors.push_back(v);
        }
    }
    if (attractors.empty()) {
        // Degenerate fixpoints (possible under extreme pruning) fall back to
        // the strongest row of each column so every vertex still lands in a
        // cluster; seed one attractor per column maximum.
        for (std::size_t v = 0; v < n; ++v) {
            Eigen::Index r;
            M.col(v).maxCoeff(&r);
            if (!is_attractor[r]) {
                is_attractor[r] = 1;
                attractors.push_back(static_cast<std::size_t>(r));
            }
        }
        std::sort(attractors.begin(), attractors.end());
    }

    // Attractor systems: weakly connected components of the attractor-to-
    // attractor flow above the prune threshold.
    DisjointSet ds(n);
    for (std::size_t a : attractors)
        for (std::size_t b : attractors)
            if (a < b && (M(a, b) > params.prune_threshold ||
                          M(b, a) > params.prune_threshold))
                ds.unite(a, b);

    // Every non-attractor joins the system of its strongest attractor;
    // ties go to the smallest vertex id.
    for (std::size_t v = 0; v < n; ++v) {
        if (is_attractor[v]) continue;
        std::size_t best = attractors.front();
        double best_mass = -1.0;
        for (std::size_t a : attractors) {
            double mass = M(a, v);
            if (mass > best_mass ||
                (mass == best_mass && g.vertices[a] < g.vertices[best])) {
                best = a;
                best_mass = mass;
            }
        }
        ds.unite(v, best);
    }

    std::unordered_map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t v = 0; v < n; ++v)
        groups[ds.find(v)].push_back(g.vertices[v]);

    result.clusters.reserve(groups.size());
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        result.clusters.push_back(std::move(members));
    }
    std::sort(result.clusters.begin(), result.clusters.end(),
              [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a.front() < b.front();
              });
    for (std::size_t c = 0; c < result.clusters.size(); ++c)
        for (const std::string& id : result.clusters[c])
            result.assignment[id] = static_cast<int>(c);
    return result;
}

}  // namespace magraph
