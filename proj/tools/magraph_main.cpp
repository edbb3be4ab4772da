#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "magraph/csv.hpp"
#include "magraph/distance.hpp"
#include "magraph/eval.hpp"
#include "magraph/mcl.hpp"
#include "magraph/simgraph.hpp"

namespace fs = std::filesystem;
using namespace magraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNonConvergence = 3;

/// Resolves the alpha flag against the graph's edge dimension: absent flag
/// means uniform weights; a present flag must match the dimension exactly.
WeightVector resolve_alpha(const std::vector<double>& flag_values, Eigen::Index m) {
    if (m == 0) {
        // Graph without edges: every pair has zero ties and alpha is unused;
        // a single dummy weight keeps DistanceParams valid.
        if (!flag_values.empty())
            std::cerr << "note: --alpha ignored, the edge list is empty\n";
        return WeightVector::uniform(1);
    }
    if (flag_values.empty()) return WeightVector::uniform(m);
    if (static_cast<Eigen::Index>(flag_values.size()) != m)
        throw ParameterError("alpha has " + std::to_string(flag_values.size()) +
                             " weights but the edge dimension is " + std::to_string(m));
    WeightVector alpha;
    alpha.weights = Eigen::Map<const Eigen::VectorXd>(
        flag_values.data(), static_cast<Eigen::Index>(flag_values.size()));
    alpha.validate();
    return alpha;
}

PairsMode parse_pairs_mode(const std::string& mode) {
    if (mode == "all") return PairsMode::AllPairs;
    if (mode == "edges") return PairsMode::EdgeListOnly;
    throw ParameterError("--pairs must be 'all' or 'edges', got '" + mode + "'");
}

struct MclFlags {
    double inflation = 2.0;
    int expansion = 2;
    double prune = 1e-5;
    int max_iters = 100;
    double eps = 1e-6;
    bool no_self_loops = false;

    MclParams to_params() const {
        MclParams p;
        p.inflation = inflation;
        p.expansion = expansion;
        p.prune_threshold = prune;
        p.max_iters = max_iters;
        p.convergence_eps = eps;
        p.add_self_loops = !no_self_loops;
        return p;
    }
};

void add_mcl_flags(CLI::App* cmd, MclFlags& flags) {
    cmd->add_option("--inflation", flags.inflation, "Inflation exponent (> 1)")
        ->capture_default_str();
    cmd->add_option("--expansion", flags.expansion, "Expansion power (>= 2)")
        ->capture_default_str();
    cmd->add_option("--prune", flags.prune, "Prune threshold for small entries")
        ->capture_default_str();
    cmd->add_option("--max-iters", flags.max_iters, "Iteration limit")
        ->capture_default_str();
    cmd->add_option("--eps", flags.eps, "Convergence threshold on matrix change")
        ->capture_default_str();
    cmd->add_flag("--no-self-loops", flags.no_self_loops,
                  "Do not add unit self-loops before normalization");
}

int warn_non_convergence(const Clustering& clustering, bool strict) {
    if (clustering.converged) return kExitOk;
    std::cerr << "warning: MCL did not converge within the iteration limit ("
              << clustering.iterations << " iterations); clustering is best-effort\n";
    return strict ? kExitNonConvergence : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted-distance graph pipeline: multi-attributed distances, "
                 "similarity graphs, Markov clustering, evaluation"};
    app.require_subcommand(1);

    bool strict = false;
    app.add_flag("--strict", strict,
                 "Escalate non-convergence warnings to exit code 3");

    int exit_code = kExitOk;

    // ---------------------------------------------------------------- dist
    auto* dist = app.add_subcommand(
        "dist", "Weighted distances over a multi-attributed graph");
    dist->fallthrough();
    struct {
        std::string vertices, edges, out, pairs = "all";
        std::vector<double> alpha;
        double gamma = 1.0;
    } dist_args;
    dist->add_option("--vertices", dist_args.vertices, "Vertex CSV (id,a1,...,an)")
        ->required()->check(CLI::ExistingFile);
    dist->add_option("--edges", dist_args.edges, "Edge CSV (src,dst,e1,...,em)")
        ->required()->check(CLI::ExistingFile);
    dist->add_option("--alpha", dist_args.alpha,
                     "Comma-separated edge-attribute weights (default: uniform)")
        ->delimiter(',');
    dist->add_option("--gamma", dist_args.gamma, "Edge-weightage exponent (>= 0)")
        ->capture_default_str();
    dist->add_option("--pairs", dist_args.pairs,
                     "Pair selection: 'all' or 'edges'")
        ->capture_default_str()->check(CLI::IsMember({"all", "edges"}));
    dist->add_option("--out", dist_args.out, "Output distance CSV")->required();
    dist->callback([&] {
        auto vertices = read_vertices_file(dist_args.vertices);
        auto edges = read_edges_file(dist_args.edges);
        MultiAttributedGraph graph(std::move(vertices), std::move(edges));
        DistanceParams params;
        params.alpha = resolve_alpha(dist_args.alpha, graph.edge_dim());
        params.gamma = dist_args.gamma;
        auto records = magdist(graph, params, parse_pairs_mode(dist_args.pairs));
        write_distances_file(dist_args.out, records);
        std::cerr << "dist: " << records.size() << " pairs -> " << dist_args.out << "\n";
    });

    // ------------------------------------------------------------- simgraph
    auto* simgraph = app.add_subcommand(
        "simgraph", "Distance list to similarity graph (sim = 1 - delta/max)");
    simgraph->fallthrough();
    struct {
        std::string distances, out;
        std::optional<double> min_sim;
    } sim_args;
    simgraph->add_option("--distances", sim_args.distances, "Distance CSV (i,j,delta)")
        ->required()->check(CLI::ExistingFile);
    simgraph->add_option("--min-sim", sim_args.min_sim,
                         "Drop edges with similarity below this value")
        ->check(CLI::Range(0.0, 1.0));
    simgraph->add_option("--out", sim_args.out, "Output similarity CSV")->required();
    simgraph->callback([&] {
        auto records = read_distances_file(sim_args.distances);
        SimilarityGraph g = magsim(records);
        if (sim_args.min_sim) g = threshold_graph(g, *sim_args.min_sim);
        write_similarity_file(sim_args.out, g);
        std::cerr << "simgraph: " << g.edges.size() << " edges -> " << sim_args.out << "\n";
    });

    // ------------------------------------------------------------- gaussian
    auto* gaussian = app.add_subcommand(
        "gaussian", "Gaussian-kernel similarity graph with threshold");
    gaussian->fallthrough();
    struct {
        std::string vertices, out;
        double sigma = 1.0, threshold = 0.55;
    } gauss_args;
    gaussian->add_option("--vertices", gauss_args.vertices, "Vertex CSV")
        ->required()->check(CLI::ExistingFile);
    gaussian->add_option("--sigma", gauss_args.sigma, "Kernel width (> 0)")
        ->capture_default_str();
    gaussian->add_option("--threshold", gauss_args.threshold,
                         "Keep edges with kernel value >= threshold")
        ->capture_default_str();
    gaussian->add_option("--out", gauss_args.out, "Output similarity CSV")->required();
    gaussian->callback([&] {
        auto vertices = read_vertices_file(gauss_args.vertices);
        SimilarityGraph g = gaussian_graph(vertices, gauss_args.sigma, gauss_args.threshold);
        write_similarity_file(gauss_args.out, g);
        std::cerr << "gaussian: " << g.vertices.size() << " vertices, "
                  << g.edges.size() << " edges -> " << gauss_args.out << "\n";
    });

    // ------------------------------------------------------------------ knn
    auto* knn = app.add_subcommand(
        "knn", "k-nearest-neighbour similarity graph (Gaussian kernel)");
    knn->fallthrough();
    struct {
        std::string vertices, out, mode = "union";
        int k = 10;
        double sigma = 1.0;
    } knn_args;
    knn->add_option("--vertices", knn_args.vertices, "Vertex CSV")
        ->required()->check(CLI::ExistingFile);
    knn->add_option("--k", knn_args.k, "Neighbour count (1 <= k < |V|)")
        ->capture_default_str();
    knn->add_option("--mode", knn_args.mode, "Neighbourhood rule: union or mutual")
        ->capture_default_str()->check(CLI::IsMember({"union", "mutual"}));
    knn->add_option("--sigma", knn_args.sigma, "Kernel width (> 0)")
        ->capture_default_str();
    knn->add_option("--out", knn_args.out, "Output similarity CSV")->required();
    knn->callback([&] {
        auto vertices = read_vertices_file(knn_args.vertices);
        KnnMode mode = knn_args.mode == "union" ? KnnMode::Union : KnnMode::Mutual;
        SimilarityGraph g = knn_graph(vertices, knn_args.k, knn_args.sigma, mode);
        write_similarity_file(knn_args.out, g);
        std::cerr << "knn: " << g.edges.size() << " edges -> " << knn_args.out << "\n";
    });

    // ------------------------------------------------------------------ mcl
    auto* mcl = app.add_subcommand("mcl", "Markov clustering of a similarity graph");
    mcl->fallthrough();
    struct {
        std::string graph, out;
        MclFlags flags;
    } mcl_args;
    mcl->add_option("--graph", mcl_args.graph, "Similarity CSV (i,j,sim)")
        ->required()->check(CLI::ExistingFile);
    add_mcl_flags(mcl, mcl_args.flags);
    mcl->add_option("--out", mcl_args.out, "Output cluster CSV (id,cluster)")->required();
    mcl->callback([&] {
        SimilarityGraph g = read_similarity_file(mcl_args.graph);
        Clustering clustering = mcl_cluster(g, mcl_args.flags.to_params());
        write_clusters_file(mcl_args.out, clustering);
        std::cerr << "mcl: " << clustering.clusters.size() << " clusters in "
                  << clustering.iterations << " iterations -> " << mcl_args.out << "\n";
        exit_code = warn_non_convergence(clustering, strict);
    });

    // ----------------------------------------------------------------- eval
    auto* eval = app.add_subcommand(
        "eval", "Contingency table and TPR/FPR for a clustering");
    eval->fallthrough();
    struct {
        std::string clusters, labels, out;
    } eval_args;
    eval->add_option("--clusters", eval_args.clusters, "Cluster CSV (id,cluster)")
        ->required()->check(CLI::ExistingFile);
    eval->add_option("--labels", eval_args.labels, "Label CSV (id,label)")
        ->required()->check(CLI::ExistingFile);
    eval->add_option("--out", eval_args.out, "Output report CSV")->required();
    eval->callback([&] {
        Clustering clustering = read_clusters_file(eval_args.clusters);
        LabeledDataset dataset = read_labels_file(eval_args.labels);
        EvaluationReport report = tpr_fpr(contingency(clustering, dataset));
        std::ofstream out(eval_args.out, std::ios::binary);
        if (!out) throw DataError("cannot open file for writing: " + eval_args.out);
        out << render_csv(report);
        std::cout << render_text(report);
    });

    // ------------------------------------------------------------- pipeline
    auto* pipeline = app.add_subcommand(
        "pipeline",
        "Full run: Gaussian graph -> weighted distances -> similarity graph -> "
        "MCL -> evaluation");
    pipeline->fallthrough();
    struct {
        std::string vertices, labels, out, pairs = "all";
        double sigma = 1.0, threshold = 0.55, gamma = 1.0;
        std::vector<double> alpha;
        std::optional<double> min_sim;
        MclFlags mcl;
    } pipe_args;
    pipeline->add_option("--vertices", pipe_args.vertices, "Vertex CSV")
        ->required()->check(CLI::ExistingFile);
    pipeline->add_option("--labels", pipe_args.labels,
                         "Label CSV; when omitted the evaluation stage is skipped")
        ->check(CLI::ExistingFile);
    pipeline->add_option("--sigma", pipe_args.sigma, "Gaussian kernel width")
        ->capture_default_str();
    pipeline->add_option("--threshold", pipe_args.threshold,
                         "Gaussian graph edge threshold")
        ->capture_default_str();
    pipeline->add_option("--alpha", pipe_args.alpha,
                         "Comma-separated edge weights for the distance stage")
        ->delimiter(',');
    pipeline->add_option("--gamma", pipe_args.gamma, "Edge-weightage exponent")
        ->capture_default_str();
    pipeline->add_option("--pairs", pipe_args.pairs, "Distance pair selection")
        ->capture_default_str()->check(CLI::IsMember({"all", "edges"}));
    pipeline->add_option("--min-sim", pipe_args.min_sim,
                         "Drop similarity edges below this value before clustering")
        ->check(CLI::Range(0.0, 1.0));
    add_mcl_flags(pipeline, pipe_args.mcl);
    pipeline->add_option("--out", pipe_args.out, "Output directory")->required();
    pipeline->callback([&] {
        fs::create_directories(pipe_args.out);
        const fs::path dir(pipe_args.out);

        auto vertices = read_vertices_file(pipe_args.vertices);
        SimilarityGraph g1 = gaussian_graph(vertices, pipe_args.sigma, pipe_args.threshold);
        write_similarity_file((dir / "gaussian.csv").string(), g1);
        std::cerr << "pipeline: gaussian graph has " << g1.edges.size() << " edges\n";

        MultiAttributedGraph mag = to_multiattributed(g1, vertices);
        DistanceParams params;
        params.alpha = resolve_alpha(pipe_args.alpha, mag.edge_dim());
        params.gamma = pipe_args.gamma;
        auto records = magdist(mag, params, parse_pairs_mode(pipe_args.pairs));
        write_distances_file((dir / "distances.csv").string(), records);
        std::cerr << "pipeline: " << records.size() << " distance records\n";

        SimilarityGraph g2 = magsim(records);
        if (pipe_args.min_sim) g2 = threshold_graph(g2, *pipe_args.min_sim);
        write_similarity_file((dir / "similarity.csv").string(), g2);
        std::cerr << "pipeline: similarity graph has " << g2.edges.size() << " edges\n";

        Clustering clustering = mcl_cluster(g2, pipe_args.mcl.to_params());
        write_clusters_file((dir / "clusters.csv").string(), clustering);
        std::cerr << "pipeline: " << clustering.clusters.size() << " clusters in "
                  << clustering.iterations << " iterations\n";

        if (pipe_args.labels.empty()) {
            std::cerr << "warning: no labels provided; evaluation stage skipped\n";
        } else {
            LabeledDataset dataset = read_labels_file(pipe_args.labels);
            EvaluationReport report = tpr_fpr(contingency(clustering, dataset));
            std::ofstream csv(dir / "report.csv", std::ios::binary);
            if (!csv) throw DataError("cannot open report.csv for writing");
            csv << render_csv(report);
            std::ofstream txt(dir / "report.txt", std::ios::binary);
            if (!txt) throw DataError("cannot open report.txt for writing");
            txt << render_text(report);
            std::cerr << "pipeline: report written\n";
        }
        exit_code = warn_non_convergence(clustering, strict);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return exit_code;
}
