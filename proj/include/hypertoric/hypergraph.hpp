#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypertoric {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

/// 0/1 exponent matrix of the monomial map sending each edge variable to
/// the product of its vertex variables: rows are vertices, columns edges.
struct IncidenceMatrix {
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    std::vector<std::int64_t> data;  // row-major

    std::int64_t operator()(std::size_t v, std::size_t e) const { return data[v * n_edges + e]; }

    std::int64_t column_sum(std::size_t e) const {
        std::int64_t s = 0;
        for (std::size_t v = 0; v < n_vertices; ++v) s += (*this)(v, e);
        return s;
    }

    std::int64_t row_sum(std::size_t v) const {
        std::int64_t s = 0;
        for (std::size_t e = 0; e < n_edges; ++e) s += (*this)(v, e);
        return s;
    }
};

/// A simple hypergraph on vertices {0, ..., n-1}: no repeated edges, every
/// edge a nonempty set of vertices. Edge order is part of the value; edge
/// ids index into edges(). Vertex labels are optional display metadata.
class Hypergraph {
public:
    Hypergraph(std::int64_t n_vertices, std::vector<std::vector<VertexId>> edges,
               std::vector<std::string> vertex_labels = {},
               std::vector<std::string> edge_labels = {},
               std::vector<std::vector<VertexId>> partition = {})
        : n_vertices_(n_vertices),
          edges_(std::move(edges)),
          vertex_labels_(std::move(vertex_labels)),
          edge_labels_(std::move(edge_labels)),
          partition_(std::move(partition)) {
        if (n_vertices_ < 0) throw std::invalid_argument("hypergraph: negative vertex count");
        if (!vertex_labels_.empty() &&
            vertex_labels_.size() != static_cast<std::size_t>(n_vertices_))
            throw std::invalid_argument("hypergraph: label count != vertex count");
        if (!edge_labels_.empty() && edge_labels_.size() != edges_.size())
            throw std::invalid_argument("hypergraph: edge label count != edge count");
        std::set<std::vector<VertexId>> seen;
        for (auto& edge : edges_) {
            std::sort(edge.begin(), edge.end());
            edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
            if (edge.empty()) throw std::invalid_argument("hypergraph: empty edge");
            if (edge.front() < 0 || edge.back() >= n_vertices_)
                throw std::invalid_argument("hypergraph: vertex id out of range");
            if (!seen.insert(edge).second)
                throw std::invalid_argument("hypergraph: repeated edge");
        }
    }

    std::int64_t n_vertices() const { return n_vertices_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

    const std::vector<VertexId>& edge(EdgeId e) const {
        check_edge(e);
        return edges_[static_cast<std::size_t>(e)];
    }

    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<std::string>& edge_labels() const { return edge_labels_; }
    const std::vector<std::vector<VertexId>>& partition() const { return partition_; }

    std::string vertex_name(VertexId v) const {
        if (!vertex_labels_.empty()) return vertex_labels_[static_cast<std::size_t>(v)];
        return std::to_string(v);
    }

    std::string edge_name(EdgeId e) const {
        if (!edge_labels_.empty()) return edge_labels_[static_cast<std::size_t>(e)];
        return "e" + std::to_string(e);
    }

    /// Edge id of a given vertex set, if present.
    std::optional<EdgeId> edge_index_of(std::vector<VertexId> vertices) const {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == vertices) return static_cast<EdgeId>(i);
        return std::nullopt;
    }

    /// Edge id by label, if this hypergraph carries edge labels.
    std::optional<EdgeId> edge_index_of_label(const std::string& label) const {
        for (std::size_t i = 0; i < edge_labels_.size(); ++i)
            if (edge_labels_[i] == label) return static_cast<EdgeId>(i);
        return std::nullopt;
    }

    void check_edge(EdgeId e) const {
        if (e < 0 || static_cast<std::size_t>(e) >= edges_.size())
            throw std::out_of_range("hypergraph: unknown edge id " + std::to_string(e));
    }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_vertices_)
            throw std::out_of_range("hypergraph: unknown vertex id " + std::to_string(v));
    }

    bool operator==(const Hypergraph& other) const {
        return n_vertices_ == other.n_vertices_ && edges_ == other.edges_;
    }

private:
    std::int64_t n_vertices_;
    std::vector<std::vector<VertexId>> edges_;
    std::vector<std::string> vertex_labels_;
    std::vector<std::string> edge_labels_;
    std::vector<std::vector<VertexId>> partition_;
};

/// deg(v; H): number of edges containing v.
inline std::int64_t degree(const Hypergraph& h, VertexId v) {
    h.check_vertex(v);
    std::int64_t d = 0;
    for (const auto& edge : h.edges())
        if (std::binary_search(edge.begin(), edge.end(), v)) ++d;
    return d;
}

/// k when every edge has size k; absent for mixed sizes or no edges.
inline std::optional<std::int64_t> is_uniform(const Hypergraph& h) {
    if (h.edges().empty()) return std::nullopt;
    std::size_t k = h.edges().front().size();
    for (const auto& edge : h.edges())
        if (edge.size() != k) return std::nullopt;
    return static_cast<std::int64_t>(k);
}

/// True iff every edge meets each partition block exactly once. The blocks
/// must cover the vertex set disjointly.
inline bool is_kpartite(const Hypergraph& h, const std::vector<std::vector<VertexId>>& partition) {
    std::vector<int> block_of(static_cast<std::size_t>(h.n_vertices()), -1);
    for (std::size_t b = 0; b < partition.size(); ++b) {
        for (VertexId v : partition[b]) {
            h.check_vertex(v);
            if (block_of[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("partition: blocks are not disjoint");
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    for (int b : block_of)
        if (b == -1) throw std::invalid_argument("partition: does not cover the vertex set");

    for (const auto& edge : h.edges()) {
        std::vector<int> hits(partition.size(), 0);
        for (VertexId v : edge) ++hits[static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)])];
        for (int c : hits)
            if (c != 1) return false;
    }
    return true;
}

/// True iff every vertex of H has degree exactly r; isolated vertices make
/// this false for r > 0.
inline bool is_regular(const Hypergraph& h, std::int64_t r) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(h.n_vertices()), 0);
    for (const auto& edge : h.edges())
        for (VertexId v : edge) ++deg[static_cast<std::size_t>(v)];
    for (std::int64_t d : deg)
        if (d != r) return false;
    return true;
}

/// Subhypergraph induced by a vertex set W: the edges entirely inside W,
/// with the vertex universe reindexed to 0..|W|-1 in ascending original
/// order. Labels of kept vertices and edges are carried over.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<VertexId>& w) {
    std::vector<VertexId> kept(w);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    std::map<VertexId, VertexId> new_id;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        h.check_vertex(kept[i]);
        new_id[kept[i]] = static_cast<VertexId>(i);
    }

    std::vector<std::vector<VertexId>> edges;
    std::vector<std::string> edge_labels;
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
        const auto& edge = h.edges()[i];
        bool inside = std::all_of(edge.begin(), edge.end(),
                                  [&](VertexId v) { return new_id.count(v) > 0; });
        if (!inside) continue;
        std::vector<VertexId> mapped;
        mapped.reserve(edge.size());
        for (VertexId v : edge) mapped.push_back(new_id[v]);
        edges.push_back(std::move(mapped));
        if (!h.edge_labels().empty()) edge_labels.push_back(h.edge_labels()[i]);
    }

    std::vector<std::string> labels;
    if (!h.vertex_labels().empty()) {
        labels.reserve(kept.size());
        for (VertexId v : kept) labels.push_back(h.vertex_labels()[static_cast<std::size_t>(v)]);
    }
    return Hypergraph(static_cast<std::int64_t>(kept.size()), std::move(edges),
                      std::move(labels), std::move(edge_labels));
}

inline IncidenceMatrix incidence_matrix(const Hypergraph& h) {
    IncidenceMatrix m;
    m.n_vertices = static_cast<std::size_t>(h.n_vertices());
    m.n_edges = h.n_edges();
    m.data.assign(m.n_vertices * m.n_edges, 0);
    for (std::size_t e = 0; e < h.n_edges(); ++e)
        for (VertexId v : h.edges()[e]) m.data[static_cast<std::size_t>(v) * m.n_edges + e] = 1;
    return m;
}

}  // namespace hypertoric
