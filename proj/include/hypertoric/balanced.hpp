#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypergraph.hpp"
#include "multiset.hpp"

namespace hypertoric {

/// Per-vertex degree vector of an edge multiset: entry v counts edge
/// copies containing v.
inline std::vector<std::int64_t> vertex_degrees(const Hypergraph& h, const Multiset& edges) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(h.n_vertices()), 0);
    for (const auto& [e, mult] : edges.entries()) {
        h.check_edge(e);
        for (VertexId v : h.edge(e)) deg[static_cast<std::size_t>(v)] += mult;
    }
    return deg;
}

/// A bicolored edge multiset over a host hypergraph. The host is held by
/// pointer and must outlive the set. The balancing condition (every
/// covered vertex has equal blue and red degree) is a property checked by
/// is_balanced, not a constructor invariant, so unbalanced colorings can
/// be represented and rejected.
struct BalancedEdgeSet {
    const Hypergraph* host = nullptr;
    Multiset blue;
    Multiset red;

    BalancedEdgeSet() = default;

    BalancedEdgeSet(const Hypergraph& h, Multiset blue_edges, Multiset red_edges)
        : host(&h), blue(std::move(blue_edges)), red(std::move(red_edges)) {
        for (const auto& [e, mult] : blue.entries()) h.check_edge(e);
        for (const auto& [e, mult] : red.entries()) h.check_edge(e);
    }

    /// |E| = number of edge copies over both colors.
    std::int64_t size() const { return blue.size() + red.size(); }

    bool empty() const { return blue.empty() && red.empty(); }

    std::int64_t deg_blue(VertexId v) const { return color_degree(blue, v); }
    std::int64_t deg_red(VertexId v) const { return color_degree(red, v); }

    /// V(E): vertices covered by at least one copy.
    std::vector<VertexId> covered_vertices() const {
        std::vector<bool> seen(static_cast<std::size_t>(host->n_vertices()), false);
        for (const auto* color : {&blue, &red})
            for (const auto& [e, mult] : color->entries())
                for (VertexId v : host->edge(e)) seen[static_cast<std::size_t>(v)] = true;
        std::vector<VertexId> out;
        for (std::size_t v = 0; v < seen.size(); ++v)
            if (seen[v]) out.push_back(static_cast<VertexId>(v));
        return out;
    }

    bool operator==(const BalancedEdgeSet& other) const {
        return blue == other.blue && red == other.red;
    }

private:
    std::int64_t color_degree(const Multiset& color, VertexId v) const {
        host->check_vertex(v);
        std::int64_t d = 0;
        for (const auto& [e, mult] : color.entries())
            if (std::binary_search(host->edge(e).begin(), host->edge(e).end(), v)) d += mult;
        return d;
    }
};

/// Condition (*): deg_blue(v) = deg_red(v) at every vertex.
inline bool is_balanced(const BalancedEdgeSet& b) {
    return vertex_degrees(*b.host, b.blue) == vertex_degrees(*b.host, b.red);
}

/// max(deg_red(v), deg_blue(v)) with respect to the bicolored multiset.
inline std::int64_t maxdeg(VertexId v, const BalancedEdgeSet& b) {
    return std::max(b.deg_blue(v), b.deg_red(v));
}

/// Adds S to both colors; balance is preserved.
inline BalancedEdgeSet add_splitting(const BalancedEdgeSet& b, const Multiset& s) {
    for (const auto& [e, mult] : s.entries()) b.host->check_edge(e);
    return BalancedEdgeSet(*b.host, sum_of(b.blue, s), sum_of(b.red, s));
}

/// A difference of two monomials in the edge variables, stored with the
/// common factor of the two exponent vectors cancelled. The zero binomial
/// (both sides empty) is representable; basis computations never emit it.
struct Binomial {
    Multiset plus;
    Multiset minus;

    Binomial() = default;

    Binomial(Multiset p, Multiset m) {
        Multiset shared = intersection_of(p, m);
        plus = difference_of(p, shared);
        minus = difference_of(m, shared);
    }

    /// Total degree: max of the two monomial degrees.
    std::int64_t degree() const { return std::max(plus.size(), minus.size()); }

    bool is_zero() const { return plus.empty() && minus.empty(); }

    bool operator==(const Binomial&) const = default;
    auto operator<=>(const Binomial&) const = default;
};

/// True when the two exponent vectors have the same image under the
/// incidence matrix, i.e. the binomial lies in the toric ideal.
inline bool kernel_condition_holds(const Hypergraph& h, const Binomial& b) {
    return vertex_degrees(h, b.plus) == vertex_degrees(h, b.minus);
}

/// Compares sparse exponent vectors as if dense: at the first edge index
/// where they differ, the larger multiplicity wins.
inline bool dense_lex_less(const Multiset& a, const Multiset& b) {
    auto ia = a.entries().begin(), ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        if (ia->first != ib->first) {
            // The earlier-indexed side has a positive entry where the other
            // has zero, so it is dense-lex greater.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == a.entries().end() && ib != b.entries().end();
}

/// Sign normalization for storing bases: the lex-greater exponent vector
/// becomes the plus side.
inline Binomial canonical_sign(Binomial b) {
    if (dense_lex_less(b.plus, b.minus)) std::swap(b.plus, b.minus);
    return b;
}

/// f_E: blue multiplicities minus red multiplicities as exponent vectors.
/// Shared blue/red edges cancel in the stored form. Rejects the empty set.
inline Binomial binomial_of(const BalancedEdgeSet& b) {
    if (b.empty()) throw std::invalid_argument("binomial_of: empty balanced edge set");
    if (!is_balanced(b)) throw std::invalid_argument("binomial_of: input is not balanced");
    return Binomial(b.blue, b.red);
}

/// Walk of a binomial: blue = plus, red = minus. Inverse of binomial_of on
/// reduced binomials.
inline BalancedEdgeSet balanced_of_binomial(const Hypergraph& h, const Binomial& b) {
    if (b.is_zero()) throw std::invalid_argument("balanced_of_binomial: zero binomial");
    if (!kernel_condition_holds(h, b))
        throw std::invalid_argument("balanced_of_binomial: kernel condition violated");
    return BalancedEdgeSet(h, b.plus, b.minus);
}

/// Primitivity: no other nonempty balanced edge set nested color-wise
/// inside. Walks with an edge shared between the colors always have the
/// one-copy subset nested inside (or reduce to the zero binomial), so they
/// are never primitive. Decided by exhaustive search over sub-multisets of
/// each color, matched through their vertex-degree images.
inline bool is_primitive(const BalancedEdgeSet& b) {
    if (!is_balanced(b)) throw std::invalid_argument("is_primitive: input is not balanced");
    if (b.empty()) return false;
    if (!intersection_of(b.blue, b.red).empty()) return false;

    const Hypergraph& h = *b.host;
    const auto blue_entries = b.blue.entries();
    std::map<std::vector<std::int64_t>, std::int64_t> blue_images;

    std::vector<Multiset::Entry> current;
    auto enumerate_blue = [&](auto&& self, std::size_t idx) -> void {
        if (idx == blue_entries.size()) {
            ++blue_images[vertex_degrees(h, Multiset(current))];
            return;
        }
        const auto [e, mult] = blue_entries[idx];
        for (std::int64_t c = 0; c <= mult; ++c) {
            if (c > 0) current.emplace_back(e, c);
            self(self, idx + 1);
            if (c > 0) current.pop_back();
        }
    };
    enumerate_blue(enumerate_blue, 0);

    const auto red_entries = b.red.entries();
    bool witness = false;
    auto enumerate_red = [&](auto&& self, std::size_t idx) -> void {
        if (witness) return;
        if (idx == red_entries.size()) {
            Multiset sub(current);
            if (sub.empty()) return;
            auto it = blue_images.find(vertex_degrees(h, sub));
            if (it == blue_images.end()) return;
            // A matching blue subset exists; discount the full pair itself.
            std::int64_t needed = (sub == b.red) ? 2 : 1;
            if (it->second >= needed) witness = true;
            return;
        }
        const auto [e, mult] = red_entries[idx];
        for (std::int64_t c = 0; c <= mult && !witness; ++c) {
            if (c > 0) current.emplace_back(e, c);
            self(self, idx + 1);
            if (c > 0) current.pop_back();
        }
    };
    current.clear();
    enumerate_red(enumerate_red, 0);
    return !witness;
}

}  // namespace hypertoric
