#include "magraph/eval.hpp"

#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace magraph {

namespace {

/// Shortest round-trip decimal form of a 64-bit float.
std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_2dp(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

int LabeledDataset::class_index(const std::string& label) {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k] == label) return static_cast<int>(k);
    classes.push_back(label);
    return static_cast<int>(classes.size() - 1);
}

long long ContingencyTable::grand_total() const {
    long long total = 0;
    for (const auto& row : counts)
        total = std::accumulate(row.begin(), row.end(), total);
    return total;
}

std::vector<long long> ContingencyTable::class_totals() const {
    std::vector<long long> totals(class_names.size(), 0);
    for (const auto& row : counts)
        for (std::size_t k = 0; k < row.size(); ++k) totals[k] += row[k];
    return totals;
}

ContingencyTable contingency(const Clustering& clustering, const LabeledDataset& dataset) {
    ContingencyTable table;
    table.class_names = dataset.classes;
    table.counts.assign(clustering.clusters.size(),
                        std::vector<long long>(dataset.classes.size(), 0));
    for (std::size_t c = 0; c < clustering.clusters.size(); ++c) {
        for (const std::string& id : clustering.clusters[c]) {
            auto it = dataset.labels.find(id);
            if (it == dataset.labels.end())
                throw DataError("contingency: vertex '" + id + "' has no label");
            std::ptrdiff_t col = -1;
            for (std::size_t k = 0; k < table.class_names.size(); ++k)
                if (table.class_names[k] == it->second) {
                    col = static_cast<std::ptrdiff_t>(k);
                    break;
                }
            if (col < 0)
                throw DataError("contingency: label '" + it->second +
                                "' missing from class list");
            ++table.counts[c][col];
        }
    }
    return table;
}

EvaluationReport tpr_fpr(const ContingencyTable& table) {
    if (table.counts.empty() || table.class_names.empty())
        throw ParameterError("tpr_fpr: empty contingency table");

    EvaluationReport report;
    report.table = table;
    const std::vector<long long> class_totals = table.class_totals();
    const long long grand = table.grand_total();

    double tpr_sum = 0.0, fpr_sum = 0.0;
    for (const auto& row : table.counts) {
        ClusterScore s;
        // majority class; ties resolved by class order (lowest column index)
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k] > row[s.majority_class]) s.majority_class = static_cast<int>(k);
        s.tp = row[s.majority_class];
        s.fp = std::accumulate(row.begin(), row.end(), 0LL) - s.tp;
        const long long p = class_totals[s.majority_class];
        const long long n = grand - p;
        s.tpr = p > 0 ? static_cast<double>(s.tp) / static_cast<double>(p) : 0.0;
        s.fpr = n > 0 ? static_cast<double>(s.fp) / static_cast<double>(n) : 0.0;
        tpr_sum += s.tpr;
        fpr_sum += s.fpr;
        report.per_cluster.push_back(s);
    }
    report.avg_tpr = tpr_sum / static_cast<double>(table.counts.size());
    report.avg_fpr = fpr_sum / static_cast<double>(table.counts.size());
    return report;
}

std::string render_text(const EvaluationReport& report) {
    std::ostringstream out;
    out << "contingency (rows = clusters, columns = classes)\n";
    out << "cluster";
    for (const std::string& c : report.table.class_names) out << '\t' << c;
    out << "\tTPR\tFPR\n";
    for (std::size_t c = 0; c < report.table.counts.size(); ++c) {
        out << 'C' << c;
        for (long long v : report.table.counts[c]) out << '\t' << v;
        out << '\t' << format_2dp(report.per_cluster[c].tpr) << '\t'
            << format_2dp(report.per_cluster[c].fpr) << '\n';
    }
    out << "average\tTPR " << format_2dp(report.avg_tpr) << " (" << format_double(report.avg_tpr)
        << ")\tFPR " << format_2dp(report.avg_fpr) << " (" << format_double(report.avg_fpr)
        << ")\n";
    return out.str();
}

std::string render_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "cluster,size,majority_class,tp,fp,tpr,fpr\n";
    for (std::size_t c = 0; c < report.table.counts.size(); ++c) {
        const ClusterScore& s = report.per_cluster[c];
        long long size = std::accumulate(report.table.counts[c].begin(),
                                         report.table.counts[c].end(), 0LL);
        out << c << ',' << size << ',' << report.table.class_names[s.majority_class]
            << ',' << s.tp << ',' << s.fp << ',' << format_double(s.tpr) << ','
            << format_double(s.fpr) << '\n';
    }
    out << "average,,,,," << format_double(report.avg_tpr) << ','
        << format_double(report.avg_fpr) << '\n';
    return out.str();
}

}  // namespace magraph
