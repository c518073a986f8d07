#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "balanced.hpp"
#include "hypergraph.hpp"
#include "multiset.hpp"
#include "parallel.hpp"

namespace hypertoric {

using ExponentVector = std::vector<std::int64_t>;
using DegreeVector = std::vector<std::int64_t>;

inline ExponentVector dense_exponents(const Multiset& m, std::size_t n_edges) {
    ExponentVector u(n_edges, 0);
    for (const auto& [e, mult] : m.entries()) u[static_cast<std::size_t>(e)] = mult;
    return u;
}

inline Multiset sparse_exponents(const ExponentVector& u) {
    std::vector<Multiset::Entry> entries;
    for (std::size_t e = 0; e < u.size(); ++e)
        if (u[e] > 0) entries.emplace_back(static_cast<std::int64_t>(e), u[e]);
    return Multiset(std::move(entries));
}

inline std::int64_t total_degree(const ExponentVector& u) {
    return std::accumulate(u.begin(), u.end(), std::int64_t{0});
}

/// All exponent vectors with a common image under the incidence matrix.
struct Fiber {
    DegreeVector degree_vector;
    std::vector<ExponentVector> points;  // sorted lexicographically
    bool complete = true;                // false when the cap excluded points
};

/// Enumerates every u >= 0 with A*u = deg_vec and total degree <= cap by
/// backtracking over edge multiplicities with remaining-degree pruning.
/// Fibers are finite (each edge consumes at least one unit of remaining
/// degree), so a cap of sum(deg_vec) is always exhaustive.
inline Fiber enumerate_fiber(const Hypergraph& h, const DegreeVector& deg_vec, std::int64_t cap) {
    if (deg_vec.size() != static_cast<std::size_t>(h.n_vertices()))
        throw std::invalid_argument("enumerate_fiber: degree vector has wrong length");
    for (std::int64_t d : deg_vec)
        if (d < 0) throw std::invalid_argument("enumerate_fiber: negative degree vector");

    const std::size_t m = h.n_edges();
    // Last edge index covering each vertex; -1 when uncovered.
    std::vector<std::ptrdiff_t> last_cover(static_cast<std::size_t>(h.n_vertices()), -1);
    for (std::size_t e = 0; e < m; ++e)
        for (VertexId v : h.edges()[e]) last_cover[static_cast<std::size_t>(v)] = static_cast<std::ptrdiff_t>(e);

    Fiber fiber;
    fiber.degree_vector = deg_vec;
    for (std::size_t v = 0; v < deg_vec.size(); ++v)
        if (deg_vec[v] > 0 && last_cover[v] < 0) return fiber;  // empty, complete

    DegreeVector remaining = deg_vec;
    ExponentVector current(m, 0);

    auto dfs = [&](auto&& self, std::size_t e, std::int64_t used) -> void {
        if (e == m) {
            for (std::int64_t r : remaining)
                if (r != 0) return;
            fiber.points.push_back(current);
            return;
        }
        std::int64_t vertex_bound = cap;
        for (VertexId v : h.edges()[e])
            vertex_bound = std::min(vertex_bound, remaining[static_cast<std::size_t>(v)]);
        std::int64_t bound = std::min(vertex_bound, cap - used);
        if (bound < vertex_bound) fiber.complete = false;
        for (std::int64_t c = 0; c <= bound; ++c) {
            if (c > 0) {
                current[e] = c;
                for (VertexId v : h.edges()[e]) --remaining[static_cast<std::size_t>(v)];
            }
            // Vertices whose coverage ends at this edge must be settled.
            bool feasible = true;
            for (std::size_t v = 0; v < remaining.size() && feasible; ++v)
                if (last_cover[v] == static_cast<std::ptrdiff_t>(e) && remaining[v] != 0) feasible = false;
            if (feasible) self(self, e + 1, used + c);
        }
        if (current[e] > 0) {
            for (VertexId v : h.edges()[e]) remaining[static_cast<std::size_t>(v)] += current[e];
            current[e] = 0;
        }
    };
    dfs(dfs, 0, 0);
    std::sort(fiber.points.begin(), fiber.points.end());
    return fiber;
}

namespace detail {

inline bool dominates_le(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

template <class Fn>
void for_each_monomial(const Hypergraph& h, std::int64_t cap, Fn&& fn) {
    const std::size_t m = h.n_edges();
    ExponentVector current(m, 0);
    auto dfs = [&](auto&& self, std::size_t e, std::int64_t used) -> void {
        if (e == m) {
            if (used > 0) fn(current);
            return;
        }
        for (std::int64_t c = 0; used + c <= cap; ++c) {
            current[e] = c;
            self(self, e + 1, used + c);
        }
        current[e] = 0;
    };
    dfs(dfs, 0, 0);
}

inline DegreeVector image_of(const Hypergraph& h, const ExponentVector& u) {
    DegreeVector img(static_cast<std::size_t>(h.n_vertices()), 0);
    for (std::size_t e = 0; e < u.size(); ++e)
        if (u[e] > 0)
            for (VertexId v : h.edges()[e]) img[static_cast<std::size_t>(v)] += u[e];
    return img;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smallest index as root
        parent[b] = a;
        return true;
    }
};

/// Applies one move to every applicable point of a fiber.
inline void apply_move(const std::vector<ExponentVector>& points,
                       const std::map<ExponentVector, std::size_t>& index_of,
                       const ExponentVector& plus, const ExponentVector& minus, UnionFind& uf) {
    const std::size_t m = plus.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!dominates_le(plus, points[i])) continue;
        ExponentVector moved(m);
        for (std::size_t e = 0; e < m; ++e) moved[e] = points[i][e] - plus[e] + minus[e];
        auto it = index_of.find(moved);
        if (it == index_of.end())
            throw std::logic_error("fiber move left the fiber; enumeration incomplete");
        uf.unite(i, it->second);
    }
}

}  // namespace detail

/// Dense move representation used by fiber-graph connectivity.
struct Move {
    ExponentVector plus;
    ExponentVector minus;
};

inline std::vector<Move> moves_of(const std::vector<Binomial>& elements, std::size_t n_edges) {
    std::vector<Move> moves;
    moves.reserve(elements.size());
    for (const auto& b : elements)
        moves.push_back({dense_exponents(b.plus, n_edges), dense_exponents(b.minus, n_edges)});
    return moves;
}

/// Component index (root point index) per fiber point under a move set.
inline std::vector<std::size_t> fiber_components(const std::vector<ExponentVector>& points,
                                                 const std::vector<Move>& moves) {
    std::map<ExponentVector, std::size_t> index_of;
    for (std::size_t i = 0; i < points.size(); ++i) index_of[points[i]] = i;
    detail::UnionFind uf(points.size());
    for (const auto& mv : moves) {
        detail::apply_move(points, index_of, mv.plus, mv.minus, uf);
        detail::apply_move(points, index_of, mv.minus, mv.plus, uf);
    }
    std::vector<std::size_t> comp(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) comp[i] = uf.find(i);
    return comp;
}

/// True when the binomial's two monomials are connected in their fiber by
/// the given move set; this is ideal membership for binomials.
inline bool connected_by_moves(const Hypergraph& h, const Binomial& b,
                               const std::vector<Binomial>& moves) {
    DegreeVector img = vertex_degrees(h, b.plus);
    std::int64_t bound = std::accumulate(img.begin(), img.end(), std::int64_t{0});
    Fiber fiber = enumerate_fiber(h, img, bound);
    ExponentVector u = dense_exponents(b.plus, h.n_edges());
    ExponentVector v = dense_exponents(b.minus, h.n_edges());
    auto comp = fiber_components(fiber.points, moves_of(moves, h.n_edges()));
    auto iu = std::find(fiber.points.begin(), fiber.points.end(), u);
    auto iv = std::find(fiber.points.begin(), fiber.points.end(), v);
    if (iu == fiber.points.end() || iv == fiber.points.end())
        throw std::invalid_argument("connected_by_moves: binomial not in its own fiber");
    return comp[static_cast<std::size_t>(iu - fiber.points.begin())] ==
           comp[static_cast<std::size_t>(iv - fiber.points.begin())];
}

/// All primitive balanced edge sets with both monomial degrees at most the
/// cap, one sign representative each. Complete only within the cap.
struct GraverBasis {
    std::vector<Binomial> elements;
    std::int64_t degree_cap = 0;
};

inline GraverBasis graver_basis(const Hypergraph& h, std::int64_t degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("graver_basis: degree cap must be >= 1");
    const std::size_t m = h.n_edges();

    std::map<DegreeVector, std::vector<ExponentVector>> fibers;
    detail::for_each_monomial(h, degree_cap, [&](const ExponentVector& u) {
        fibers[detail::image_of(h, u)].push_back(u);
    });

    // Kernel pairs with disjoint support; the box-search witnesses of
    // primitivity are themselves such pairs, so a dominance filter over
    // the candidate list is exact within the cap.
    std::vector<std::pair<ExponentVector, ExponentVector>> candidates;
    for (const auto& [img, points] : fibers) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                bool disjoint = true;
                for (std::size_t e = 0; e < m && disjoint; ++e)
                    if (points[i][e] > 0 && points[j][e] > 0) disjoint = false;
                if (disjoint) candidates.emplace_back(points[i], points[j]);
            }
        }
    }

    std::vector<char> primitive(candidates.size(), 1);
    parallel_for_index(candidates.size(), [&](std::size_t i) {
        const auto& [u, v] = candidates[i];
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (j == i) continue;
            const auto& [a, b] = candidates[j];
            if ((detail::dominates_le(a, u) && detail::dominates_le(b, v)) ||
                (detail::dominates_le(b, u) && detail::dominates_le(a, v))) {
                primitive[i] = 0;
                return;
            }
        }
    });

    GraverBasis result;
    result.degree_cap = degree_cap;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (primitive[i])
            result.elements.push_back(canonical_sign(
                Binomial(sparse_exponents(candidates[i].first), sparse_exponents(candidates[i].second))));
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

/// A minimal generating set of the toric ideal, computed fiber by fiber.
struct MarkovBasis {
    std::vector<Binomial> elements;
    std::int64_t max_degree = 0;
    std::int64_t degree_cap = 0;
    bool truncated = false;  // some needed generator exceeded the cap
};

enum class TieBreak { lex, reverse_lex };

inline MarkovBasis markov_basis(const Hypergraph& h, std::int64_t degree_cap,
                                TieBreak tie = TieBreak::lex) {
    if (degree_cap < 1) throw std::invalid_argument("markov_basis: degree cap must be >= 1");
    const std::size_t m = h.n_edges();

    std::map<DegreeVector, std::size_t> seed_counts;
    detail::for_each_monomial(h, degree_cap, [&](const ExponentVector& u) {
        ++seed_counts[detail::image_of(h, u)];
    });

    // A generator of degree <= cap has both monomials among the seeds, so
    // single-seed fibers cannot contribute; skipping them keeps the sweep
    // exact for every degree within the cap.
    struct FiberWork {
        DegreeVector image;
        std::int64_t image_total;
        std::vector<ExponentVector> points;
    };
    std::vector<FiberWork> work;
    for (const auto& [img, count] : seed_counts) {
        if (count < 2) continue;
        std::int64_t total = std::accumulate(img.begin(), img.end(), std::int64_t{0});
        Fiber fiber = enumerate_fiber(h, img, total);
        work.push_back({img, total, std::move(fiber.points)});
    }
    std::sort(work.begin(), work.end(), [](const FiberWork& a, const FiberWork& b) {
        return std::tie(a.image_total, a.image) < std::tie(b.image_total, b.image);
    });

    auto candidate_key = [&](const ExponentVector& u, const ExponentVector& v) {
        ExponentVector p = u, q = v;
        // Same sign normalization as canonical_sign on the dense form.
        if (std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end())) std::swap(p, q);
        return std::make_pair(std::max(total_degree(u), total_degree(v)), std::make_pair(p, q));
    };
    auto candidate_less = [&](const auto& ka, const auto& kb) {
        if (ka.first != kb.first) return ka.first < kb.first;
        return tie == TieBreak::lex ? ka.second < kb.second : kb.second < ka.second;
    };

    std::vector<Binomial> basis;
    std::vector<Move> basis_moves;
    for (const auto& fw : work) {
        while (true) {
            auto comp = fiber_components(fw.points, basis_moves);
            bool connected = true;
            for (std::size_t i = 1; i < comp.size() && connected; ++i)
                if (comp[i] != comp[0]) connected = false;
            if (connected) break;

            bool found = false;
            std::pair<std::int64_t, std::pair<ExponentVector, ExponentVector>> best_key;
            std::pair<ExponentVector, ExponentVector> best_pair;
            for (std::size_t i = 0; i < fw.points.size(); ++i) {
                for (std::size_t j = i + 1; j < fw.points.size(); ++j) {
                    if (comp[i] == comp[j]) continue;
                    auto key = candidate_key(fw.points[i], fw.points[j]);
                    if (!found || candidate_less(key, best_key)) {
                        found = true;
                        best_key = key;
                        best_pair = {fw.points[i], fw.points[j]};
                    }
                }
            }
            if (!found) throw std::logic_error("markov_basis: disconnected fiber with no candidates");
            Binomial b = canonical_sign(
                Binomial(sparse_exponents(best_pair.first), sparse_exponents(best_pair.second)));
            basis.push_back(b);
            basis_moves.push_back({dense_exponents(b.plus, m), dense_exponents(b.minus, m)});
        }
    }

    // Minimality pass: drop any element whose removal keeps every touched
    // fiber connected.
    auto all_connected = [&](const std::vector<Move>& moves) {
        for (const auto& fw : work) {
            auto comp = fiber_components(fw.points, moves);
            for (std::size_t i = 1; i < comp.size(); ++i)
                if (comp[i] != comp[0]) return false;
        }
        return true;
    };
    std::vector<std::size_t> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(basis[a].degree(), basis[a]) > std::make_pair(basis[b].degree(), basis[b]);
    });
    std::vector<char> kept(basis.size(), 1);
    for (std::size_t idx : order) {
        kept[idx] = 0;
        std::vector<Move> moves;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (kept[i]) moves.push_back({dense_exponents(basis[i].plus, m),
                                          dense_exponents(basis[i].minus, m)});
        if (!all_connected(moves)) kept[idx] = 1;
    }

    MarkovBasis result;
    result.degree_cap = degree_cap;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (kept[i]) result.elements.push_back(basis[i]);
    std::sort(result.elements.begin(), result.elements.end());
    for (const auto& b : result.elements) {
        result.max_degree = std::max(result.max_degree, b.degree());
        if (b.degree() > degree_cap) result.truncated = true;
    }
    return result;
}

struct MarkovWidth {
    std::int64_t width = 0;
    bool truncated = false;
};

/// Largest degree in the minimal generating set within the cap.
inline MarkovWidth markov_width(const Hypergraph& h, std::int64_t degree_cap) {
    MarkovBasis basis = markov_basis(h, degree_cap);
    return {basis.max_degree, basis.truncated};
}

/// Indispensability oracle: true exactly when the fiber of the binomial's
/// degree vector is the two points {u, v} and no move of strictly smaller
/// degree connects them, so every binomial generating set contains ±b.
/// Fibers with three or more components under the smaller-degree moves
/// admit generating sets that avoid b, hence false.
inline bool is_indispensable(const Hypergraph& h, const Binomial& b, std::int64_t degree_cap) {
    if (b.is_zero()) throw std::invalid_argument("is_indispensable: zero binomial");
    if (!kernel_condition_holds(h, b))
        throw std::invalid_argument("is_indispensable: kernel condition violated");
    const std::int64_t d = b.degree();
    DegreeVector img = vertex_degrees(h, b.plus);
    Fiber fiber = enumerate_fiber(h, img, degree_cap);
    if (!fiber.complete)
        throw std::runtime_error("is_indispensable: fiber enumeration exceeded the cap");

    const std::size_t m = h.n_edges();
    ExponentVector u = dense_exponents(b.plus, m);
    ExponentVector v = dense_exponents(b.minus, m);

    detail::UnionFind uf(fiber.points.size());
    for (std::size_t i = 0; i < fiber.points.size(); ++i) {
        for (std::size_t j = i + 1; j < fiber.points.size(); ++j) {
            std::int64_t du = 0, dv = 0;
            for (std::size_t e = 0; e < m; ++e) {
                std::int64_t g = std::min(fiber.points[i][e], fiber.points[j][e]);
                du += fiber.points[i][e] - g;
                dv += fiber.points[j][e] - g;
            }
            if (std::max(du, dv) < d) uf.unite(i, j);
        }
    }

    std::size_t iu = fiber.points.size(), iv = fiber.points.size();
    for (std::size_t i = 0; i < fiber.points.size(); ++i) {
        if (fiber.points[i] == u) iu = i;
        if (fiber.points[i] == v) iv = i;
    }
    if (iu == fiber.points.size() || iv == fiber.points.size())
        throw std::logic_error("is_indispensable: binomial monomials missing from fiber");
    if (iu == iv) return false;

    std::vector<std::size_t> roots;
    std::size_t singleton_u = 0, singleton_v = 0;
    for (std::size_t i = 0; i < fiber.points.size(); ++i) {
        std::size_t r = uf.find(i);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        if (r == uf.find(iu)) ++singleton_u;
        if (r == uf.find(iv)) ++singleton_v;
    }
    return roots.size() == 2 && singleton_u == 1 && singleton_v == 1;
}

struct GraverMarkovComparison {
    bool equal = false;
    bool truncated = false;
};

/// Whether the Graver basis and the minimal generating set coincide as
/// sign-normalized sets within the cap.
inline GraverMarkovComparison graver_equals_markov(const Hypergraph& h, std::int64_t degree_cap) {
    GraverBasis graver = graver_basis(h, degree_cap);
    MarkovBasis markov = markov_basis(h, degree_cap);
    return {graver.elements == markov.elements, markov.truncated};
}

}  // namespace hypertoric
