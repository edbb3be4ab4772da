#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "magraph/eval.hpp"
#include "magraph/mcl.hpp"
#include "magraph/simgraph.hpp"
#include "magraph/types.hpp"

namespace magraph {

/// CSV conventions shared by all five formats:
///  - comma delimiter, UTF-8, no quoting (ids and labels must not contain
///    the delimiter or line breaks);
///  - LF line endings on write; LF and CRLF accepted on read, a UTF-8 BOM
///    is tolerated and never written;
///  - output always starts with a header row; on read a header is detected
///    as a first row whose numeric fields fail to parse (for the all-string
///    labels format, a literal `id,label` first row);
///  - floating-point values are written as shortest round-trip decimals, so
///    write -> read -> write is byte-identical.

std::vector<VertexVector> read_vertices(std::istream& in);
std::vector<VertexVector> read_vertices_file(const std::string& path);
void write_vertices(std::ostream& out, const std::vector<VertexVector>& vertices);
void write_vertices_file(const std::string& path, const std::vector<VertexVector>& vertices);

std::vector<EdgeVector> read_edges(std::istream& in);
std::vector<EdgeVector> read_edges_file(const std::string& path);
void write_edges(std::ostream& out, const std::vector<EdgeVector>& edges);
void write_edges_file(const std::string& path, const std::vector<EdgeVector>& edges);

std::vector<DistanceRecord> read_distances(std::istream& in);
std::vector<DistanceRecord> read_distances_file(const std::string& path);
void write_distances(std::ostream& out, const std::vector<DistanceRecord>& records);
void write_distances_file(const std::string& path, const std::vector<DistanceRecord>& records);

/// Similarity files carry the edge list; the vertex set of the returned
/// graph is the sorted union of edge endpoints.
SimilarityGraph read_similarity(std::istream& in);
SimilarityGraph read_similarity_file(const std::string& path);
void write_similarity(std::ostream& out, const SimilarityGraph& g);
void write_similarity_file(const std::string& path, const SimilarityGraph& g);

LabeledDataset read_labels(std::istream& in);
LabeledDataset read_labels_file(const std::string& path);
void write_labels(std::ostream& out, const LabeledDataset& dataset,
                  const std::vector<std::string>& id_order);
void write_labels_file(const std::string& path, const LabeledDataset& dataset,
                       const std::vector<std::string>& id_order);

/// Cluster assignments (`id,cluster`): clusters are grouped by the file's
/// non-negative integer ids in ascending order.
Clustering read_clusters(std::istream& in);
Clustering read_clusters_file(const std::string& path);
void write_clusters(std::ostream& out, const Clustering& clustering);
void write_clusters_file(const std::string& path, const Clustering& clustering);

}  // namespace magraph
