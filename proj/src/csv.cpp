#include "magraph/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace magraph {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

bool try_parse_double(const std::string& field, double& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

double parse_double(const std::string& field, std::size_t line, const char* what) {
    double v;
    if (!try_parse_double(field, v))
        throw ParseError(std::string("expected a number for ") + what + ", got '" +
                         field + "'", line);
    if (!std::isfinite(v))
        throw DataError(std::string(what) + " must be finite, got '" + field + "' (line " +
                        std::to_string(line) + ")");
    return v;
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

/// All data rows of the stream: CRLF-tolerant, BOM-tolerant, empty lines
/// skipped. Returns (fields, 1-based line number) pairs.
std::vector<std::pair<std::vector<std::string>, std::size_t>> read_rows(std::istream& in) {
    std::vector<std::pair<std::vector<std::string>, std::size_t>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' &&
            line[2] == '\xBF')
            line.erase(0, 3);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.emplace_back(split(line, ','), lineno);
    }
    return rows;
}

void check_id(const std::string& id, std::size_t line) {
    if (id.empty()) throw ParseError("empty id field", line);
}

void check_writable_token(const std::string& token, const char* what) {
    if (token.empty() || token.find(',') != std::string::npos ||
        token.find('\n') != std::string::npos || token.find('\r') != std::string::npos)
        throw DataError(std::string(what) + " '" + token +
                        "' cannot be written to CSV (empty or contains delimiter/newline)");
}

/// True when the row cannot be a data row because some field that must be
/// numeric does not parse; only the first row may be such a header.
bool is_header(const std::vector<std::string>& fields, std::size_t first_numeric) {
    double v;
    for (std::size_t k = first_numeric; k < fields.size(); ++k)
        if (!try_parse_double(fields[k], v)) return true;
    return false;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file for reading: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path);
    return out;
}

void check_stream_write(const std::ostream& out, const std::string& what) {
    if (!out) throw DataError("write failed: " + what);
}

}  // namespace

// ------------------------------------------------------------------ vertices

std::vector<VertexVector> read_vertices(std::istream& in) {
    auto rows = read_rows(in);
    std::vector<VertexVector> vertices;
    std::set<std::string> seen;
    std::size_t n = 0;
    bool first_data = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [fields, line] = rows[r];
        if (r == 0 && fields.size() >= 1 && is_header(fields, 1)) continue;
        if (fields.size() < 2)
            throw ParseError("vertex row needs id and at least one attribute", line);
        if (first_data) {
            n = fields.size() - 1;
            first_data = false;
        } else if (fields.size() - 1 != n) {
            throw ParseError("ragged row: expected " + std::to_string(n) +
                             " attributes, got " + std::to_string(fields.size() - 1), line);
        }
        VertexVector v;
        v.id = fields[0];
        check_id(v.id, line);
        if (!seen.insert(v.id).second)
            throw DataError("duplicate vertex id '" + v.id + "' (line " +
                            std::to_string(line) + ")");
        v.attrs.resize(static_cast<Eigen::Index>(n));
        for (std::size_t k = 0; k < n; ++k)
            v.attrs[static_cast<Eigen::Index>(k)] =
                parse_double(fields[k + 1], line, "vertex attribute");
        vertices.push_back(std::move(v));
    }
    return vertices;
}

void write_vertices(std::ostream& out, const std::vector<VertexVector>& vertices) {
    // An empty sequence still writes one attribute column so the header stays
    // recognizable as a header on re-read.
    const Eigen::Index n = vertices.empty() ? 1 : vertices.front().attrs.size();
    out << "id";
    for (Eigen::Index k = 0; k < n; ++k) out << ",a" << (k + 1);
    out << '\n';
    for (const VertexVector& v : vertices) {
        check_writable_token(v.id, "vertex id");
        if (v.attrs.size() != n)
            throw DimensionError("write_vertices: vertex '" + v.id +
                                 "' has inconsistent dimension");
        out << v.id;
        for (Eigen::Index k = 0; k < n; ++k) out << ',' << format_double(v.attrs[k]);
        out << '\n';
    }
    check_stream_write(out, "vertex CSV");
}

// --------------------------------------------------------------------- edges

std::vector<EdgeVector> read_edges(std::istream& in) {
    auto rows = read_rows(in);
    std::vector<EdgeVector> edges;
    std::set<std::pair<std::string, std::string>> seen;
    std::size_t m = 0;
    bool first_data = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [fields, line] = rows[r];
        if (r == 0 && fields.size() >= 2 && is_header(fields, 2)) continue;
        if (fields.size() < 3)
            throw ParseError("edge row needs src, dst and at least one attribute", line);
        if (first_data) {
            m = fields.size() - 2;
            first_data = false;
        } else if (fields.size() - 2 != m) {
            throw ParseError("ragged row: expected " + std::to_string(m) +
                             " attributes, got " + std::to_string(fields.size() - 2), line);
        }
        EdgeVector e;
        e.src = fields[0];
        e.dst = fields[1];
        check_id(e.src, line);
        check_id(e.dst, line);
        if (e.src == e.dst)
            throw DataError("self-loop edge on '" + e.src + "' (line " +
                            std::to_string(line) + ")");
        if (e.dst < e.src) std::swap(e.src, e.dst);
        if (!seen.emplace(e.src, e.dst).second)
            throw DataError("duplicate edge for pair (" + e.src + "," + e.dst +
                            ") (line " + std::to_string(line) + ")");
        e.attrs.resize(static_cast<Eigen::Index>(m));
        for (std::size_t k = 0; k < m; ++k) {
            double v = parse_double(fields[k + 2], line, "edge attribute");
            if (v < 0)
                throw DataError("negative edge attribute (line " + std::to_string(line) +
                                ")");
            e.attrs[static_cast<Eigen::Index>(k)] = v;
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

void write_edges(std::ostream& out, const std::vector<EdgeVector>& edges) {
    const Eigen::Index m = edges.empty() ? 1 : edges.front().attrs.size();
    out << "src,dst";
    for (Eigen::Index k = 0; k < m; ++k) out << ",e" << (k + 1);
    out << '\n';
    for (const EdgeVector& e : edges) {
        check_writable_token(e.src, "edge endpoint");
        check_writable_token(e.dst, "edge endpoint");
        if (e.attrs.size() != m)
            throw DimensionError("write_edges: edge (" + e.src + "," + e.dst +
                                 ") has inconsistent dimension");
        out << e.src << ',' << e.dst;
        for (Eigen::Index k = 0; k < m; ++k) out << ',' << format_double(e.attrs[k]);
        out << '\n';
    }
    check_stream_write(out, "edge CSV");
}

// ----------------------------------------------------------------- distances

std::vector<DistanceRecord> read_distances(std::istream& in) {
    auto rows = read_rows(in);
    std::vector<DistanceRecord> records;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [fields, line] = rows[r];
        if (r == 0 && fields.size() >= 3 && is_header(fields, 2)) continue;
        if (fields.size() != 3)
            throw ParseError("distance row needs exactly i, j, delta", line);
        DistanceRecord rec;
        rec.i = fields[0];
        rec.j = fields[1];
        check_id(rec.i, line);
        check_id(rec.j, line);
        rec.delta = parse_double(fields[2], line, "distance");
        if (rec.delta < 0)
            throw DataError("negative distance (line " + std::to_string(line) + ")");
        records.push_back(std::move(rec));
    }
    return records;
}

void write_distances(std::ostream& out, const std::vector<DistanceRecord>& records) {
    out << "i,j,delta\n";
    for (const DistanceRecord& r : records) {
        check_writable_token(r.i, "vertex id");
        check_writable_token(r.j, "vertex id");
        out << r.i << ',' << r.j << ',' << format_double(r.delta) << '\n';
    }
    check_stream_write(out, "distance CSV");
}

// ---------------------------------------------------------------- similarity

SimilarityGraph read_similarity(std::istream& in) {
    auto rows = read_rows(in);
    SimilarityGraph g;
    std::set<std::string> ids;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [fields, line] = rows[r];
        if (r == 0 && fields.size() >= 3 && is_header(fields, 2)) continue;
        if (fields.size() != 3)
            throw ParseError("similarity row needs exactly i, j, sim", line);
        SimilarityEdge e;
        e.i = fields[0];
        e.j = fields[1];
        check_id(e.i, line);
        check_id(e.j, line);
        e.sim = parse_double(fields[2], line, "similarity");
        if (e.sim < 0.0 || e.sim > 1.0)
            throw DataError("similarity outside [0,1] (line " + std::to_string(line) + ")");
        ids.insert(e.i);
        ids.insert(e.j);
        g.edges.push_back(std::move(e));
    }
    g.vertices.assign(ids.begin(), ids.end());
    return g;
}

void write_similarity(std::ostream& out, const SimilarityGraph& g) {
    out << "i,j,sim\n";
    for (const SimilarityEdge& e : g.edges) {
        check_writable_token(e.i, "vertex id");
        check_writable_token(e.j, "vertex id");
        out << e.i << ',' << e.j << ',' << format_double(e.sim) << '\n';
    }
    check_stream_write(out, "similarity CSV");
}

// -------------------------------------------------------------------- labels

LabeledDataset read_labels(std::istream& in) {
    auto rows = read_rows(in);
    LabeledDataset ds;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [fields, line] = rows[r];
        // both fields are strings, so the header is the literal id,label row
        if (r == 0 && fields.size() == 2 && fields[0] == "id" && fields[1] == "label")
            continue;
        if (fields.size() != 2)
            throw ParseError("label row needs exactly id, label", line);
        check_id(fields[0], line);
        if (fields[1].empty())
            throw DataError("empty label for id '" + fields[0] + "' (line " +
                            std::to_string(line) + ")");
        auto [it, inserted] = ds.labels.emplace(fields[0], fields[1]);
        if (!inserted)
            throw DataError("duplicate label row for id '" + fields[0] + "' (line " +
                            std::to_string(line) + ")");
        ds.class_index(fields[1]);  // registers first-appearance class order
    }
    return ds;
}

void write_labels(std::ostream& out, const LabeledDataset& dataset,
                  const std::vector<std::string>& id_order) {
    out << "id,label\n";
    for (const std::string& id : id_order) {
        auto it = dataset.labels.find(id);
        if (it == dataset.labels.end())
            throw DataError("write_labels: id '" + id + "' has no label");
        check_writable_token(id, "id");
        check_writable_token(it->second, "label");
        out << id << ',' << it->second << '\n';
    }
    check_stream_write(out, "label CSV");
}

// ------------------------------------------------------------------ clusters

Clustering read_clusters(std::istream& in) {
    auto rows = read_rows(in);
    std::map<long long, std::vector<std::string>> groups;
    std::set<std::string> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [fields, line] = rows[r];
        if (r == 0 && fields.size() >= 2 && is_header(fields, 1)) continue;
        if (fields.size() != 2)
            throw ParseError("cluster row needs exactly id, cluster", line);
        check_id(fields[0], line);
        long long cluster;
        auto res = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(),
                                   cluster);
        if (res.ec != std::errc{} || res.ptr != fields[1].data() + fields[1].size())
            throw ParseError("expected an integer cluster id, got '" + fields[1] + "'",
                             line);
        if (cluster < 0)
            throw DataError("negative cluster id (line " + std::to_string(line) + ")");
        if (!seen.insert(fields[0]).second)
            throw DataError("duplicate cluster row for id '" + fields[0] + "' (line " +
                            std::to_string(line) + ")");
        groups[cluster].push_back(fields[0]);
    }
    Clustering c;
    for (auto& [cluster_id, members] : groups) {
        std::sort(members.begin(), members.end());
        for (const std::string& id : members)
            c.assignment[id] = static_cast<int>(c.clusters.size());
        c.clusters.push_back(std::move(members));
    }
    return c;
}

void write_clusters(std::ostream& out, const Clustering& clustering) {
    out << "id,cluster\n";
    for (const auto& [id, cluster] : clustering.assignment) {
        check_writable_token(id, "id");
        out << id << ',' << cluster << '\n';
    }
    check_stream_write(out, "cluster CSV");
}

// ------------------------------------------------------------- file wrappers

std::vector<VertexVector> read_vertices_file(const std::string& path) {
    auto in = open_input(path);
    return read_vertices(in);
}
void write_vertices_file(const std::string& path, const std::vector<VertexVector>& vertices) {
    auto out = open_output(path);
    write_vertices(out, vertices);
}
std::vector<EdgeVector> read_edges_file(const std::string& path) {
    auto in = open_input(path);
    return read_edges(in);
}
void write_edges_file(const std::string& path, const std::vector<EdgeVector>& edges) {
    auto out = open_output(path);
    write_edges(out, edges);
}
std::vector<DistanceRecord> read_distances_file(const std::string& path) {
    auto in = open_input(path);
    return read_distances(in);
}
void write_distances_file(const std::string& path, const std::vector<DistanceRecord>& records) {
    auto out = open_output(path);
    write_distances(out, records);
}
SimilarityGraph read_similarity_file(const std::string& path) {
    auto in = open_input(path);
    return read_similarity(in);
}
void write_similarity_file(const std::string& path, const SimilarityGraph& g) {
    auto out = open_output(path);
    write_similarity(out, g);
}
LabeledDataset read_labels_file(const std::string& path) {
    auto in = open_input(path);
    return read_labels(in);
}
void write_labels_file(const std::string& path, const LabeledDataset& dataset,
                       const std::vector<std::string>& id_order) {
    auto out = open_output(path);
    write_labels(out, dataset, id_order);
}
Clustering read_clusters_file(const std::string& path) {
    auto in = open_input(path);
    return read_clusters(in);
}
void write_clusters_file(const std::string& path, const Clustering& clustering) {
    auto out = open_output(path);
    write_clusters(out, clustering);
}

}  // namespace magraph
