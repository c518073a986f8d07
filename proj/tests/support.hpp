#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <hypertoric/balanced.hpp>
#include <hypertoric/hypergraph.hpp>
#include <hypertoric/multiset.hpp>

// Test-only reference implementations and fixture helpers. The oracles
// here stay deliberately naive and independent of the library's search
// strategies.
namespace test_support {

using namespace hypertoric;

inline Multiset edges_by_labels(const Hypergraph& h, const std::vector<std::string>& labels) {
    std::vector<Multiset::Element> elems;
    for (const auto& label : labels) {
        auto e = h.edge_index_of_label(label);
        if (!e) throw std::runtime_error("fixture: unknown edge label " + label);
        elems.push_back(*e);
    }
    return Multiset::from_elements(elems);
}

inline BalancedEdgeSet walk_by_labels(const Hypergraph& h, const std::vector<std::string>& blue,
                                      const std::vector<std::string>& red) {
    return BalancedEdgeSet(h, edges_by_labels(h, blue), edges_by_labels(h, red));
}

/// Every submultiset of m, by direct recursion.
inline std::vector<Multiset> all_submultisets(const Multiset& m) {
    std::vector<Multiset> subs{Multiset{}};
    for (const auto& [elem, mult] : m.entries()) {
        std::vector<Multiset> grown;
        for (const auto& sub : subs)
            for (std::int64_t c = 0; c <= mult; ++c)
                grown.push_back(c == 0 ? sub : sum_of(sub, Multiset({{elem, c}})));
        subs = std::move(grown);
    }
    return subs;
}

/// Literal translation of primitivity: no other nonempty balanced pair
/// nested inside, with the shared-edge convention that colors meeting in
/// an edge are never primitive.
inline bool naive_is_primitive(const BalancedEdgeSet& b) {
    if (b.empty()) return false;
    if (!intersection_of(b.blue, b.red).empty()) return false;
    for (const auto& blue_sub : all_submultisets(b.blue)) {
        for (const auto& red_sub : all_submultisets(b.red)) {
            if (blue_sub.empty() && red_sub.empty()) continue;
            if (blue_sub == b.blue && red_sub == b.red) continue;
            if (vertex_degrees(*b.host, blue_sub) == vertex_degrees(*b.host, red_sub)) return false;
        }
    }
    return true;
}

/// All exponent vectors with the given incidence image, by plain
/// recursion over edges with no pruning beyond nonnegativity.
inline std::vector<std::vector<std::int64_t>> naive_fiber(const Hypergraph& h,
                                                          const std::vector<std::int64_t>& image) {
    std::vector<std::vector<std::int64_t>> points;
    std::vector<std::int64_t> current(h.n_edges(), 0);
    std::vector<std::int64_t> remaining = image;
    auto dfs = [&](auto&& self, std::size_t e) -> void {
        if (e == h.n_edges()) {
            for (std::int64_t r : remaining)
                if (r != 0) return;
            points.push_back(current);
            return;
        }
        std::int64_t bound = std::numeric_limits<std::int64_t>::max();
        for (VertexId v : h.edges()[e]) bound = std::min(bound, remaining[static_cast<std::size_t>(v)]);
        for (std::int64_t c = 0; c <= bound; ++c) {
            current[e] = c;
            for (VertexId v : h.edges()[e]) remaining[static_cast<std::size_t>(v)] -= c;
            self(self, e + 1);
            for (VertexId v : h.edges()[e]) remaining[static_cast<std::size_t>(v)] += c;
            current[e] = 0;
        }
    };
    dfs(dfs, 0);
    std::sort(points.begin(), points.end());
    return points;
}

/// Random simple hypergraph with no isolated vertices avoided on purpose;
/// used for the proposition-level property corpora.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices = 8, int max_edges = 10) {
    std::uniform_int_distribution<int> n_dist(3, max_vertices);
    int n = n_dist(rng);
    std::uniform_int_distribution<int> m_dist(2, max_edges);
    std::uniform_int_distribution<int> size_dist(2, 3);
    std::uniform_int_distribution<int> v_dist(0, n - 1);
    int target = m_dist(rng);
    std::set<std::vector<VertexId>> edges;
    for (int attempts = 0; attempts < 200 && static_cast<int>(edges.size()) < target; ++attempts) {
        std::set<VertexId> edge;
        int size = size_dist(rng);
        while (static_cast<int>(edge.size()) < size) edge.insert(v_dist(rng));
        edges.insert(std::vector<VertexId>(edge.begin(), edge.end()));
    }
    return Hypergraph(n, std::vector<std::vector<VertexId>>(edges.begin(), edges.end()));
}

}  // namespace test_support
