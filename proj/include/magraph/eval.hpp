#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "magraph/mcl.hpp"

namespace magraph {

/// Ground-truth class labels keyed by vertex id. Class order is the order of
/// first appearance in the source file; it fixes contingency column order and
/// majority tie-breaking.
struct LabeledDataset {
    std::unordered_map<std::string, std::string> labels;
    std::vector<std::string> classes;

    /// Index of label in classes, appending it when unseen.
    int class_index(const std::string& label);
};

/// Cluster-by-class count matrix: one row per cluster, one column per class.
struct ContingencyTable {
    std::vector<std::string> class_names;
    std::vector<std::vector<long long>> counts;

    long long grand_total() const;
    std::vector<long long> class_totals() const;
};

/// Per-cluster scores under majority matching.
struct ClusterScore {
    int majority_class = 0;   ///< column index of the cluster's majority class
    long long tp = 0;         ///< members of the majority class
    long long fp = 0;         ///< all other members
    double tpr = 0.0;         ///< tp / (total of majority class)
    double fpr = 0.0;         ///< fp / (total of all other classes)
};

struct EvaluationReport {
    ContingencyTable table;
    std::vector<ClusterScore> per_cluster;
    double avg_tpr = 0.0;  ///< unweighted mean over clusters
    double avg_fpr = 0.0;
};

/// Count matrix counts[c][l] = members of cluster c carrying class label l.
/// Every clustered vertex must be labelled.
ContingencyTable contingency(const Clustering& clustering, const LabeledDataset& dataset);

/// Majority matching: each cluster is matched to its majority class (ties by
/// class order); TP = matched-class members, FP = the rest, P/N = class
/// totals from the table. Averages are unweighted means over clusters.
EvaluationReport tpr_fpr(const ContingencyTable& table);

/// Human-readable report: contingency table plus per-cluster and average
/// TPR/FPR at full precision and rounded to 2 decimals.
std::string render_text(const EvaluationReport& report);

/// Machine-readable report CSV: one row per cluster
/// (cluster,size,majority_class,tp,fp,tpr,fpr) plus an `average` row.
std::string render_csv(const EvaluationReport& report);

}  // namespace magraph
