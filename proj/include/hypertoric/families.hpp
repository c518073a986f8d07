#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "balanced.hpp"
#include "hypergraph.hpp"
#include "multiset.hpp"
#include "splitting.hpp"

namespace hypertoric {

/// Complete k-partite hypergraph with d vertices per block: the edges are
/// the d^k transversals, ordered lexicographically by block choices.
inline Hypergraph complete_kpartite(std::int64_t k, std::int64_t d) {
    if (k < 2 || d < 2) throw std::invalid_argument("complete_kpartite: need k >= 2 and d >= 2");
    std::vector<std::vector<VertexId>> partition(static_cast<std::size_t>(k));
    for (std::int64_t b = 0; b < k; ++b)
        for (std::int64_t t = 0; t < d; ++t)
            partition[static_cast<std::size_t>(b)].push_back(b * d + t);

    std::vector<std::vector<VertexId>> edges;
    std::vector<VertexId> pick(static_cast<std::size_t>(k), 0);
    while (true) {
        std::vector<VertexId> edge;
        for (std::int64_t b = 0; b < k; ++b)
            edge.push_back(b * d + pick[static_cast<std::size_t>(b)]);
        edges.push_back(std::move(edge));
        std::int64_t b = k - 1;
        while (b >= 0 && pick[static_cast<std::size_t>(b)] == d - 1) pick[static_cast<std::size_t>(b--)] = 0;
        if (b < 0) break;
        ++pick[static_cast<std::size_t>(b)];
    }
    return Hypergraph(k * d, std::move(edges), {}, {}, std::move(partition));
}

/// Margin-index hypergraph of the no-3-way-interaction model on a x b x c
/// tables: vertices are the three pairwise margin index sets, and edge
/// (i,j,k) joins x_ij, y_ik, z_jk. 3-uniform and 3-partite.
inline Hypergraph no_three_way(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 2 || b < 2 || c < 2) throw std::invalid_argument("no_three_way: dimensions must be >= 2");
    auto x_id = [&](std::int64_t i, std::int64_t j) { return i * b + j; };
    auto y_id = [&](std::int64_t i, std::int64_t k) { return a * b + i * c + k; };
    auto z_id = [&](std::int64_t j, std::int64_t k) { return a * b + a * c + j * c + k; };

    std::vector<std::string> vertex_labels(static_cast<std::size_t>(a * b + a * c + b * c));
    std::vector<std::vector<VertexId>> partition(3);
    for (std::int64_t i = 0; i < a; ++i)
        for (std::int64_t j = 0; j < b; ++j) {
            vertex_labels[static_cast<std::size_t>(x_id(i, j))] =
                "x" + std::to_string(i) + std::to_string(j);
            partition[0].push_back(x_id(i, j));
        }
    for (std::int64_t i = 0; i < a; ++i)
        for (std::int64_t k = 0; k < c; ++k) {
            vertex_labels[static_cast<std::size_t>(y_id(i, k))] =
                "y" + std::to_string(i) + std::to_string(k);
            partition[1].push_back(y_id(i, k));
        }
    for (std::int64_t j = 0; j < b; ++j)
        for (std::int64_t k = 0; k < c; ++k) {
            vertex_labels[static_cast<std::size_t>(z_id(j, k))] =
                "z" + std::to_string(j) + std::to_string(k);
            partition[2].push_back(z_id(j, k));
        }

    std::vector<std::vector<VertexId>> edges;
    std::vector<std::string> edge_labels;
    for (std::int64_t i = 0; i < a; ++i)
        for (std::int64_t j = 0; j < b; ++j)
            for (std::int64_t k = 0; k < c; ++k) {
                edges.push_back({x_id(i, j), y_id(i, k), z_id(j, k)});
                edge_labels.push_back("e" + std::to_string(i) + std::to_string(j) + std::to_string(k));
            }
    return Hypergraph(a * b + a * c + b * c, std::move(edges), std::move(vertex_labels),
                      std::move(edge_labels), std::move(partition));
}

/// The 12-vertex, 16-edge, 3-uniform 3-partite hypergraph of the
/// group-based phylogenetic model, with its printed edge names.
inline Hypergraph group_based_16() {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<VertexId>> partition(3);
    for (const char* prefix : {"x", "y", "z"}) {
        for (int t = 1; t <= 4; ++t) vertex_labels.push_back(prefix + std::to_string(t));
    }
    for (int b = 0; b < 3; ++b)
        for (int t = 0; t < 4; ++t) partition[static_cast<std::size_t>(b)].push_back(b * 4 + t);

    auto x = [](int t) { return static_cast<VertexId>(t - 1); };
    auto y = [](int t) { return static_cast<VertexId>(4 + t - 1); };
    auto z = [](int t) { return static_cast<VertexId>(8 + t - 1); };

    struct Row {
        int i, j, k;
    };
    const std::vector<Row> table = {
        {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {1, 4, 4},
        {2, 2, 1}, {2, 1, 2}, {2, 4, 3}, {2, 3, 4},
        {3, 3, 1}, {3, 4, 2}, {3, 1, 3}, {3, 2, 4},
        {4, 4, 1}, {4, 3, 2}, {4, 2, 3}, {4, 1, 4},
    };
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::string> edge_labels;
    for (const auto& row : table) {
        edges.push_back({x(row.i), y(row.j), z(row.k)});
        edge_labels.push_back("e" + std::to_string(row.i) + std::to_string(row.j) +
                              std::to_string(row.k));
    }
    return Hypergraph(12, std::move(edges), std::move(vertex_labels), std::move(edge_labels),
                      std::move(partition));
}

/// Cumulant-coordinate hypergraph on n vertices: with full=true all
/// subsets of size >= 2, otherwise only sizes 2 and 3. Edges ordered by
/// size then lexicographically.
inline Hypergraph cumulant_hypergraph(std::int64_t n, bool full) {
    if (n < 2) throw std::invalid_argument("cumulant_hypergraph: need n >= 2");
    std::vector<std::vector<VertexId>> edges;
    std::int64_t max_size = full ? n : std::min<std::int64_t>(3, n);
    for (std::int64_t size = 2; size <= max_size; ++size) {
        std::vector<VertexId> subset(static_cast<std::size_t>(size));
        auto dfs = [&](auto&& self, std::int64_t start, std::int64_t depth) -> void {
            if (depth == size) {
                edges.push_back(subset);
                return;
            }
            for (std::int64_t v = start; v < n; ++v) {
                subset[static_cast<std::size_t>(depth)] = v;
                self(self, v + 1, depth + 1);
            }
        };
        dfs(dfs, 0, 0);
    }
    std::vector<std::string> edge_labels;
    for (const auto& edge : edges) {
        std::string label = "e";
        for (VertexId v : edge) label += std::to_string(v + 1);
        edge_labels.push_back(label);
    }
    return Hypergraph(n, std::move(edges), {}, std::move(edge_labels));
}

/// The alternating-cycle walk of degree 2*min(r,c) on no_three_way(2,r,c):
/// blue edges (0,t,t) and (1,t,t+1 mod m), red edges (1,t,t) and
/// (0,t,t+1 mod m). The host must be no_three_way(2,r,c).
inline BalancedEdgeSet slim_table_walk(const Hypergraph& host, std::int64_t r, std::int64_t c) {
    if (r < 2 || c < 2) throw std::invalid_argument("slim_table_walk: need r, c >= 2");
    if (!(host == no_three_way(2, r, c)))
        throw std::invalid_argument("slim_table_walk: host is not no_three_way(2, r, c)");
    auto edge_id = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
        return static_cast<Multiset::Element>(i * (r * c) + j * c + k);
    };
    const std::int64_t m = std::min(r, c);
    std::vector<Multiset::Element> blue, red;
    for (std::int64_t t = 0; t < m; ++t) {
        blue.push_back(edge_id(0, t, t));
        blue.push_back(edge_id(1, t, (t + 1) % m));
        red.push_back(edge_id(1, t, t));
        red.push_back(edge_id(0, t, (t + 1) % m));
    }
    return BalancedEdgeSet(host, Multiset::from_elements(blue), Multiset::from_elements(red));
}

namespace detail {

inline std::int64_t edge_size(const Hypergraph& h, Multiset::Element e) {
    return static_cast<std::int64_t>(h.edge(e).size());
}

inline std::int64_t count_3edges(const Hypergraph& h, const Multiset& color) {
    std::int64_t count = 0;
    for (const auto& [e, mult] : color.entries())
        if (edge_size(h, e) == 3) count += mult;
    return count;
}

inline EdgeId require_edge(const Hypergraph& h, std::vector<VertexId> vertices) {
    auto id = h.edge_index_of(std::move(vertices));
    if (!id) throw std::invalid_argument("host hypergraph is missing a required edge");
    return *id;
}

/// Pairs a multiset of six vertices (each multiplicity <= 2) into three
/// 2-element edges, always joining the most frequent remaining vertex
/// with the next most frequent distinct one.
inline std::vector<std::vector<VertexId>> pair_six_vertices(std::vector<VertexId> slots) {
    std::vector<std::vector<VertexId>> pairs;
    while (!slots.empty()) {
        std::map<VertexId, int> counts;
        for (VertexId v : slots) ++counts[v];
        auto most = [&](std::optional<VertexId> skip) {
            VertexId best = -1;
            int best_count = 0;
            for (const auto& [v, cnt] : counts)
                if ((!skip || v != *skip) && cnt > best_count) {
                    best = v;
                    best_count = cnt;
                }
            return best;
        };
        VertexId a = most(std::nullopt);
        VertexId b = most(a);
        if (b < 0) throw std::logic_error("pair_six_vertices: cannot pair without repeats");
        pairs.push_back({std::min(a, b), std::max(a, b)});
        slots.erase(std::find(slots.begin(), slots.end(), a));
        slots.erase(std::find(slots.begin(), slots.end(), b));
    }
    return pairs;
}

}  // namespace detail

/// Walks whose colors have equal size and exactly one 3-edge each, over a
/// host with edge sizes 2 and 3 only.
inline bool in_cumulant_bh(const BalancedEdgeSet& e) {
    const Hypergraph& h = *e.host;
    for (const auto* color : {&e.blue, &e.red})
        for (const auto& [edge, mult] : color->entries()) {
            std::int64_t size = detail::edge_size(h, edge);
            if (size != 2 && size != 3) return false;
        }
    return e.blue.size() == e.red.size() && detail::count_3edges(h, e.blue) == 1 &&
           detail::count_3edges(h, e.red) == 1;
}

/// Constructive splitting certificate for cumulant walks, executing the
/// local case analysis around the red 3-edge. For a primitive walk with
/// exactly one 3-edge per color and degree above 3, the output is a
/// proper decomposition whose halves stay in that class with strictly
/// smaller degree. Walks with more 3-edges on one color are first reduced
/// by trading two 3-edges for three 2-edges, which yields a blue or red
/// classified decomposition instead.
inline Decomposition cumulant_split_certificate(const BalancedEdgeSet& e_set) {
    const Hypergraph& h = *e_set.host;
    for (const auto& edge : h.edges())
        if (edge.size() != 2 && edge.size() != 3)
            throw std::invalid_argument("cumulant_split_certificate: host has edges outside sizes 2..3");
    if (!is_balanced(e_set)) throw std::invalid_argument("cumulant_split_certificate: not balanced");
    if (!intersection_of(e_set.blue, e_set.red).empty())
        throw std::invalid_argument("cumulant_split_certificate: colors share an edge");

    const std::int64_t blue3 = detail::count_3edges(h, e_set.blue);
    const std::int64_t red3 = detail::count_3edges(h, e_set.red);

    if (blue3 >= 2 || red3 >= 2) {
        // Trade two 3-edges of the heavier color for three 2-edges.
        const bool reduce_red = red3 >= blue3;
        const Multiset& heavy = reduce_red ? e_set.red : e_set.blue;
        std::vector<Multiset::Element> threes;
        for (const auto& [edge, mult] : heavy.entries())
            if (detail::edge_size(h, edge) == 3)
                for (std::int64_t i = 0; i < mult && threes.size() < 2; ++i) threes.push_back(edge);
        Multiset pair_of_threes = Multiset::from_elements(threes);

        std::vector<VertexId> slots;
        for (Multiset::Element e : threes)
            for (VertexId v : h.edge(e)) slots.push_back(v);
        std::vector<Multiset::Element> two_ids;
        for (auto& pair : detail::pair_six_vertices(slots))
            two_ids.push_back(detail::require_edge(h, pair));
        Multiset s = Multiset::from_elements(two_ids);

        Decomposition d;
        if (reduce_red) {
            d.gamma1 = BalancedEdgeSet(h, e_set.blue, sum_of(difference_of(e_set.red, pair_of_threes), s));
            d.gamma2 = BalancedEdgeSet(h, s, pair_of_threes);
        } else {
            d.gamma1 = BalancedEdgeSet(h, pair_of_threes, s);
            d.gamma2 = BalancedEdgeSet(h, sum_of(difference_of(e_set.blue, pair_of_threes), s), e_set.red);
        }
        if (d.gamma1.blue == d.gamma1.red)
            throw std::invalid_argument(
                "cumulant_split_certificate: walk is itself a 3-edge/2-edge trade; nothing to reduce");
        d.separator = s;
        d.classification = classify_separator(s, d.gamma1.red, d.gamma2.blue);
        DecompositionCheck check = check_decomposition(add_splitting(e_set, s), d);
        if (!check.valid)
            throw std::logic_error("cumulant_split_certificate: reduction decomposition invalid: " +
                                   check.reason);
        return d;
    }

    if (blue3 != 1 || red3 != 1)
        throw std::invalid_argument("cumulant_split_certificate: walk has no 3-edges to split on");
    if (e_set.blue.size() <= 3)
        throw std::invalid_argument("cumulant_split_certificate: degree must exceed 3");

    // The unique red 3-edge.
    Multiset::Element e1 = -1;
    for (const auto& [edge, mult] : e_set.red.entries())
        if (detail::edge_size(h, edge) == 3) e1 = edge;
    const auto& e1v = h.edge(e1);

    // Lowest-indexed blue 2-edge meeting e1.
    Multiset::Element e2 = -1;
    for (const auto& [edge, mult] : e_set.blue.entries()) {
        if (detail::edge_size(h, edge) != 2) continue;
        bool meets = false;
        for (VertexId v : h.edge(edge))
            if (std::binary_search(e1v.begin(), e1v.end(), v)) meets = true;
        if (meets) {
            e2 = edge;
            break;
        }
    }
    if (e2 < 0)
        throw std::logic_error("cumulant_split_certificate: red 3-edge meets no blue 2-edge");
    const auto& e2v = h.edge(e2);

    Multiset s;
    Multiset gamma2_blue, gamma2_red;

    const bool e2_inside = std::includes(e1v.begin(), e1v.end(), e2v.begin(), e2v.end());
    if (e2_inside) {
        // Case 1: e1 = e2 ∪ {v3}.
        VertexId v3 = -1;
        for (VertexId v : e1v)
            if (!std::binary_search(e2v.begin(), e2v.end(), v)) v3 = v;
        Multiset::Element e3 = -1;
        for (const auto& [edge, mult] : e_set.red.entries()) {
            if (detail::edge_size(h, edge) != 2) continue;
            if (!std::binary_search(h.edge(edge).begin(), h.edge(edge).end(), v3)) {
                e3 = edge;
                break;
            }
        }
        if (e3 < 0) throw std::logic_error("cumulant_split_certificate: case 1 has no avoiding 2-edge");
        std::vector<VertexId> e4v = h.edge(e3);
        e4v.push_back(v3);
        Multiset::Element e4 = detail::require_edge(h, e4v);
        s = Multiset({{e4, 1}});
        gamma2_blue = Multiset::from_elements({e2, e4});
        gamma2_red = Multiset::from_elements({e1, e3});
    } else {
        VertexId v1 = -1, v2 = -1;
        for (VertexId v : e2v)
            (std::binary_search(e1v.begin(), e1v.end(), v) ? v1 : v2) = v;

        // Red 2-edges through v2, split by whether they meet e1.
        Multiset::Element meeting = -1, disjoint = -1;
        for (const auto& [edge, mult] : e_set.red.entries()) {
            if (detail::edge_size(h, edge) != 2) continue;
            const auto& ev = h.edge(edge);
            if (!std::binary_search(ev.begin(), ev.end(), v2)) continue;
            VertexId other = ev[0] == v2 ? ev[1] : ev[0];
            bool hits_e1 = std::binary_search(e1v.begin(), e1v.end(), other);
            if (hits_e1 && meeting < 0) meeting = edge;
            if (!hits_e1 && disjoint < 0) disjoint = edge;
        }

        if (meeting >= 0) {
            // Case 2: e1 = {v1, v3, v4}, e3 = {v2, v3}.
            Multiset::Element e3 = meeting;
            const auto& e3v = h.edge(e3);
            VertexId v3 = e3v[0] == v2 ? e3v[1] : e3v[0];
            VertexId v4 = -1;
            for (VertexId v : e1v)
                if (v != v1 && v != v3) v4 = v;

            Multiset::Element e4 = -1;
            for (const auto& [edge, mult] : e_set.red.entries()) {
                if (detail::edge_size(h, edge) != 2) continue;
                if (!std::binary_search(h.edge(edge).begin(), h.edge(edge).end(), v3)) {
                    e4 = edge;
                    break;
                }
            }
            if (e4 < 0)
                throw std::logic_error("cumulant_split_certificate: case 2 has no avoiding 2-edge");
            const auto& e4v = h.edge(e4);
            VertexId v5, v6;
            if (e4v[0] == v4 || e4v[1] == v4) {
                v6 = v4;
                v5 = e4v[0] == v4 ? e4v[1] : e4v[0];
            } else {
                v5 = e4v[0];
                v6 = e4v[1];
            }
            Multiset::Element e5 = detail::require_edge(h, {v3, v4, v5});
            Multiset::Element e6 = detail::require_edge(h, {v3, v6});
            s = Multiset::from_elements({e5, e6});
            gamma2_blue = Multiset::from_elements({e2, e5, e6});
            gamma2_red = Multiset::from_elements({e1, e3, e4});
        } else {
            // Case 3: e3 = {v2, v'} with e3 disjoint from e1.
            if (disjoint < 0)
                throw std::logic_error("cumulant_split_certificate: v2 is uncovered among red 2-edges");
            Multiset::Element e3 = disjoint;
            std::vector<VertexId> e4v;
            for (VertexId v : e1v)
                if (v != v1) e4v.push_back(v);
            const auto& e3v = h.edge(e3);
            e4v.push_back(e3v[0] == v2 ? e3v[1] : e3v[0]);
            Multiset::Element e4 = detail::require_edge(h, e4v);
            s = Multiset({{e4, 1}});
            gamma2_blue = Multiset::from_elements({e2, e4});
            gamma2_red = Multiset::from_elements({e1, e3});
        }
    }

    Decomposition d;
    d.separator = s;
    d.gamma2 = BalancedEdgeSet(h, gamma2_blue, gamma2_red);
    d.gamma1 = BalancedEdgeSet(h, difference_of(sum_of(e_set.blue, s), gamma2_blue),
                               difference_of(sum_of(e_set.red, s), gamma2_red));
    d.classification = classify_separator(d.separator, d.gamma1.red, d.gamma2.blue);

    DecompositionCheck check = check_decomposition(add_splitting(e_set, s), d);
    if (!check.valid || check.classification != SeparatorClass::proper)
        throw std::logic_error("cumulant_split_certificate: constructed decomposition invalid: " +
                               check.reason);
    if (!in_cumulant_bh(d.gamma1) || !in_cumulant_bh(d.gamma2) ||
        d.gamma1.blue.size() >= e_set.blue.size() || d.gamma2.blue.size() >= e_set.blue.size())
        throw std::logic_error("cumulant_split_certificate: parts fail the degree-reduction claim");
    return d;
}

/// Telescoping rewriting of a big edge against a disjoint cover by 2- and
/// 3-edges: the l-1 relations, each expressing one union edge as the
/// product of its first part and the remaining union, with their monomial
/// cofactors. Their weighted sum is exactly t_e - prod(parts), which is
/// verified symbolically.
inline std::vector<std::pair<Multiset, Binomial>> edge_refinement_rewrite(
    const Hypergraph& h, const std::vector<VertexId>& e,
    const std::vector<std::vector<VertexId>>& parts) {
    std::vector<VertexId> whole(e);
    std::sort(whole.begin(), whole.end());
    std::vector<VertexId> covered;
    for (const auto& part : parts) {
        if (part.size() != 2 && part.size() != 3)
            throw std::invalid_argument("edge_refinement_rewrite: part sizes must be 2 or 3");
        covered.insert(covered.end(), part.begin(), part.end());
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
        throw std::invalid_argument("edge_refinement_rewrite: parts are not pairwise disjoint");
    if (covered != whole)
        throw std::invalid_argument("edge_refinement_rewrite: parts do not cover the edge");

    std::vector<std::pair<Multiset, Binomial>> relations;
    if (parts.size() <= 1) return relations;

    // Suffix unions U_j = parts[j] ∪ ... ∪ parts[l-1].
    std::vector<std::vector<VertexId>> suffix(parts.size());
    suffix.back() = parts.back();
    std::sort(suffix.back().begin(), suffix.back().end());
    for (std::size_t j = parts.size() - 1; j-- > 0;) {
        suffix[j] = suffix[j + 1];
        suffix[j].insert(suffix[j].end(), parts[j].begin(), parts[j].end());
        std::sort(suffix[j].begin(), suffix[j].end());
    }

    Multiset cofactor;
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        EdgeId union_edge = detail::require_edge(h, suffix[j]);
        EdgeId part_edge = detail::require_edge(h, parts[j]);
        EdgeId rest_edge = detail::require_edge(h, suffix[j + 1]);
        Binomial rel(Multiset({{union_edge, 1}}),
                     sum_of(Multiset({{part_edge, 1}}), Multiset({{rest_edge, 1}})));
        relations.emplace_back(cofactor, rel);
        cofactor = sum_of(cofactor, Multiset({{part_edge, 1}}));
    }

    Polynomial expanded;
    for (const auto& [m, rel] : relations) poly_add_term(expanded, m, rel);
    Polynomial expected;
    poly_add(expected, Multiset({{detail::require_edge(h, whole), 1}}), 1);
    Multiset product;
    for (const auto& part : parts)
        product = sum_of(product, Multiset({{detail::require_edge(h, part), 1}}));
    poly_add(expected, product, -1);
    if (expanded != expected)
        throw std::logic_error("edge_refinement_rewrite: telescoping identity failed");
    return relations;
}

}  // namespace hypertoric
