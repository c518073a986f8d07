#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "balanced.hpp"
#include "hypergraph.hpp"
#include "multiset.hpp"
#include "parallel.hpp"

namespace hypertoric {

enum class SeparatorClass { proper, blue, red };

inline const char* to_string(SeparatorClass c) {
    switch (c) {
        case SeparatorClass::proper: return "proper";
        case SeparatorClass::blue: return "blue";
        case SeparatorClass::red: return "red";
    }
    return "?";
}

/// A decomposition (Γ1, S, Γ2) of a reducible balanced edge set.
struct Decomposition {
    BalancedEdgeSet gamma1;
    Multiset separator;
    BalancedEdgeSet gamma2;
    SeparatorClass classification = SeparatorClass::proper;
};

struct DecompositionCheck {
    bool valid = false;
    SeparatorClass classification = SeparatorClass::proper;
    std::string reason;  // first violated condition when invalid
};

/// Classification given that the separator is contained in both sides:
/// blue when Γ1.red equals the separator (first clause wins when both
/// colors collapse onto it), red when Γ2.blue does, proper otherwise.
inline SeparatorClass classify_separator(const Multiset& separator, const Multiset& gamma1_red,
                                         const Multiset& gamma2_blue) {
    if (gamma1_red == separator) return SeparatorClass::blue;
    if (gamma2_blue == separator) return SeparatorClass::red;
    return SeparatorClass::proper;
}

/// Verifies every decomposition invariant against `whole` and classifies
/// the separator. Returns the first violated condition by name.
inline DecompositionCheck check_decomposition(const BalancedEdgeSet& whole, const Decomposition& d) {
    auto fail = [](std::string reason) { return DecompositionCheck{false, SeparatorClass::proper, std::move(reason)}; };
    if (d.gamma1.host != whole.host || d.gamma2.host != whole.host)
        return fail("parts live on a different hypergraph");
    if (d.gamma1.empty()) return fail("gamma1 is empty");
    if (d.gamma2.empty()) return fail("gamma2 is empty");
    if (d.gamma1 == whole) return fail("gamma1 equals the whole edge set");
    if (d.gamma2 == whole) return fail("gamma2 equals the whole edge set");
    // Each part must carry a nonzero binomial; a part with equal colors
    // rewrites nothing and would make every edge set trivially reducible.
    if (d.gamma1.blue == d.gamma1.red) return fail("gamma1 has equal colors (zero binomial)");
    if (d.gamma2.blue == d.gamma2.red) return fail("gamma2 has equal colors (zero binomial)");
    if (!is_balanced(d.gamma1)) return fail("gamma1 is not balanced");
    if (!is_balanced(d.gamma2)) return fail("gamma2 is not balanced");
    if (sum_of(d.gamma1.blue, d.gamma2.blue) != whole.blue)
        return fail("blue parts do not sum to the whole");
    if (sum_of(d.gamma1.red, d.gamma2.red) != whole.red)
        return fail("red parts do not sum to the whole");
    if (!is_submultiset(d.gamma1.red, whole.red) || !is_submultiset(d.gamma2.red, whole.red))
        return fail("red coloring condition violated");
    if (!is_submultiset(d.gamma1.blue, whole.blue) || !is_submultiset(d.gamma2.blue, whole.blue))
        return fail("blue coloring condition violated");
    Multiset separator = intersection_of(d.gamma1.red, d.gamma2.blue);
    if (separator.empty()) return fail("separator is empty");
    if (separator != d.separator) return fail("stored separator differs from gamma1.red ∩ gamma2.blue");
    SeparatorClass cls = classify_separator(separator, d.gamma1.red, d.gamma2.blue);
    if (cls != d.classification) return fail("stored classification is wrong");
    return DecompositionCheck{true, cls, ""};
}

namespace detail {

/// Enumerates all decompositions of `whole` whose separator is exactly
/// `sep`, by assigning each edge's blue and red copies to Γ1 or Γ2 with
/// incremental balance pruning on Γ1. The callback returns false to stop.
template <class Fn>
void for_each_decomposition(const BalancedEdgeSet& whole, const Multiset& sep, Fn&& fn) {
    const Hypergraph& h = *whole.host;
    Multiset support = union_of(whole.blue, whole.red);
    const auto& edges = support.entries();
    const std::size_t n = static_cast<std::size_t>(h.n_vertices());

    // Separator multiplicities must fit inside both colors.
    for (const auto& [e, s] : sep.entries())
        if (s > whole.blue.count(e) || s > whole.red.count(e)) return;

    struct EdgeChoice {
        Multiset::Element edge;
        std::int64_t wb, wr, s;
        std::vector<std::pair<std::int64_t, std::int64_t>> options;  // (gamma1 blue, gamma1 red)
    };
    std::vector<EdgeChoice> plan;
    plan.reserve(edges.size());
    for (const auto& [e, total] : edges) {
        EdgeChoice choice;
        choice.edge = e;
        choice.wb = whole.blue.count(e);
        choice.wr = whole.red.count(e);
        choice.s = sep.count(e);
        for (std::int64_t g1b = 0; g1b <= choice.wb; ++g1b)
            for (std::int64_t g1r = 0; g1r <= choice.wr; ++g1r)
                if (std::min(g1r, choice.wb - g1b) == choice.s)
                    choice.options.emplace_back(g1b, g1r);
        if (choice.options.empty()) return;
        plan.push_back(std::move(choice));
    }

    // Suffix bounds on how much blue/red degree later edges can still give Γ1.
    std::vector<std::vector<std::int64_t>> max_blue(plan.size() + 1,
                                                    std::vector<std::int64_t>(n, 0));
    std::vector<std::vector<std::int64_t>> max_red(plan.size() + 1,
                                                   std::vector<std::int64_t>(n, 0));
    for (std::size_t i = plan.size(); i-- > 0;) {
        max_blue[i] = max_blue[i + 1];
        max_red[i] = max_red[i + 1];
        for (VertexId v : h.edge(plan[i].edge)) {
            max_blue[i][static_cast<std::size_t>(v)] += plan[i].wb;
            max_red[i][static_cast<std::size_t>(v)] += plan[i].wr;
        }
    }

    std::vector<std::int64_t> diff(n, 0);  // Γ1 blue degree minus red degree
    std::vector<std::pair<std::int64_t, std::int64_t>> chosen(plan.size());
    bool stop = false;

    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (stop) return;
        if (idx == plan.size()) {
            std::vector<Multiset::Entry> b1, r1, b2, r2;
            for (std::size_t i = 0; i < plan.size(); ++i) {
                const auto& [g1b, g1r] = chosen[i];
                if (g1b > 0) b1.emplace_back(plan[i].edge, g1b);
                if (g1r > 0) r1.emplace_back(plan[i].edge, g1r);
                if (plan[i].wb - g1b > 0) b2.emplace_back(plan[i].edge, plan[i].wb - g1b);
                if (plan[i].wr - g1r > 0) r2.emplace_back(plan[i].edge, plan[i].wr - g1r);
            }
            if ((b1.empty() && r1.empty()) || (b2.empty() && r2.empty())) return;
            Decomposition d;
            d.gamma1 = BalancedEdgeSet(h, Multiset(b1), Multiset(r1));
            d.gamma2 = BalancedEdgeSet(h, Multiset(b2), Multiset(r2));
            if (d.gamma1.blue == d.gamma1.red || d.gamma2.blue == d.gamma2.red) return;
            d.separator = sep;
            d.classification = classify_separator(sep, d.gamma1.red, d.gamma2.blue);
            if (!fn(d)) stop = true;
            return;
        }
        for (const auto& [g1b, g1r] : plan[idx].options) {
            chosen[idx] = {g1b, g1r};
            for (VertexId v : h.edge(plan[idx].edge)) diff[static_cast<std::size_t>(v)] += g1b - g1r;
            bool feasible = true;
            for (std::size_t v = 0; v < n && feasible; ++v) {
                if (diff[v] > max_red[idx + 1][v]) feasible = false;
                if (-diff[v] > max_blue[idx + 1][v]) feasible = false;
            }
            if (feasible) self(self, idx + 1);
            for (VertexId v : h.edge(plan[idx].edge)) diff[static_cast<std::size_t>(v)] -= g1b - g1r;
            if (stop) return;
        }
    };
    dfs(dfs, 0);
}

/// Enumerates nonempty candidate multisets over the given edges with the
/// size and per-edge multiplicity caps, in lexicographic order.
template <class Fn>
void for_each_candidate_multiset(const std::vector<EdgeId>& edges, std::int64_t size_cap,
                                 std::int64_t mult_cap, Fn&& fn) {
    std::vector<Multiset::Entry> current;
    auto dfs = [&](auto&& self, std::size_t idx, std::int64_t used) -> void {
        if (idx == edges.size()) {
            if (used > 0) fn(Multiset(current));
            return;
        }
        self(self, idx + 1, used);
        for (std::int64_t c = 1; c <= mult_cap && used + c <= size_cap; ++c) {
            current.emplace_back(edges[idx], c);
            self(self, idx + 1, used + c);
            current.pop_back();
        }
    };
    dfs(dfs, 0, 0);
}

inline std::vector<EdgeId> candidate_universe(const Hypergraph& h,
                                              const std::vector<EdgeId>* universe) {
    std::vector<EdgeId> edges;
    if (universe) {
        edges = *universe;
        for (EdgeId e : edges) h.check_edge(e);
    } else {
        for (std::size_t e = 0; e < h.n_edges(); ++e) edges.push_back(static_cast<EdgeId>(e));
    }
    return edges;
}

inline std::vector<Multiset> candidate_multisets(const std::vector<EdgeId>& edges,
                                                 std::int64_t size_cap, std::int64_t mult_cap) {
    std::vector<Multiset> candidates;
    for_each_candidate_multiset(edges, size_cap, mult_cap,
                                [&](const Multiset& s) { candidates.push_back(s); });
    return candidates;
}

}  // namespace detail

/// A splitting set together with one witnessing decomposition of B + S.
struct SplittingHit {
    Multiset splitting_set;
    Decomposition decomposition;
};

/// All multisets S over the universe (defaults to every edge of the host)
/// within the caps such that B + S is reducible with separator S. Each is
/// returned with one witnessing decomposition, preferring a proper one.
/// Completeness is limited by the caps.
inline std::vector<SplittingHit> find_splitting_sets(const BalancedEdgeSet& b,
                                                     std::int64_t size_cap, std::int64_t mult_cap,
                                                     const std::vector<EdgeId>* universe = nullptr) {
    std::vector<Multiset> candidates =
        detail::candidate_multisets(detail::candidate_universe(*b.host, universe), size_cap, mult_cap);

    // Candidates are independent; each index fills only its own slot.
    std::vector<std::optional<Decomposition>> witnesses(candidates.size());
    parallel_for_index(candidates.size(), [&](std::size_t i) {
        BalancedEdgeSet whole = add_splitting(b, candidates[i]);
        detail::for_each_decomposition(whole, candidates[i], [&](const Decomposition& d) {
            if (!witnesses[i] || d.classification == SeparatorClass::proper) witnesses[i] = d;
            return d.classification != SeparatorClass::proper;  // stop at a proper witness
        });
    });

    std::vector<SplittingHit> hits;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (witnesses[i]) hits.push_back({candidates[i], *witnesses[i]});
    std::sort(hits.begin(), hits.end(), [](const SplittingHit& a, const SplittingHit& b2) {
        return std::make_pair(a.splitting_set.size(), a.splitting_set.entries()) <
               std::make_pair(b2.splitting_set.size(), b2.splitting_set.entries());
    });
    return hits;
}

/// Splitting sets admitting a decomposition of one fixed classification;
/// when all_decompositions is set, every matching decomposition per S is
/// returned rather than the first.
inline std::vector<SplittingHit> find_classified_splitting_sets(
    const BalancedEdgeSet& b, SeparatorClass cls, std::int64_t size_cap, std::int64_t mult_cap,
    const std::vector<EdgeId>* universe = nullptr, bool all_decompositions = false) {
    std::vector<Multiset> candidates =
        detail::candidate_multisets(detail::candidate_universe(*b.host, universe), size_cap, mult_cap);

    std::vector<std::vector<Decomposition>> found(candidates.size());
    parallel_for_index(candidates.size(), [&](std::size_t i) {
        BalancedEdgeSet whole = add_splitting(b, candidates[i]);
        detail::for_each_decomposition(whole, candidates[i], [&](const Decomposition& d) {
            if (d.classification == cls) {
                found[i].push_back(d);
                return all_decompositions;
            }
            return true;
        });
    });

    std::vector<SplittingHit> hits;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (auto& d : found[i]) hits.push_back({candidates[i], std::move(d)});
    std::stable_sort(hits.begin(), hits.end(), [](const SplittingHit& a, const SplittingHit& b2) {
        return std::make_pair(a.splitting_set.size(), a.splitting_set.entries()) <
               std::make_pair(b2.splitting_set.size(), b2.splitting_set.entries());
    });
    return hits;
}

/// Monomial cofactors and part binomials of the rewriting
/// f_whole = m1 * f_gamma1 + m2 * f_gamma2 encoded by a decomposition of
/// whole + separator. The identity is re-derived from multiset arithmetic
/// and verified; failure indicates an inconsistent decomposition.
struct RewriteTerms {
    Multiset m1;
    Binomial f1;
    Multiset m2;
    Binomial f2;
};

inline RewriteTerms rewrite_with_decomposition(const BalancedEdgeSet& whole, const Decomposition& d) {
    BalancedEdgeSet padded = add_splitting(whole, d.separator);
    DecompositionCheck check = check_decomposition(padded, d);
    if (!check.valid)
        throw std::invalid_argument("rewrite_with_decomposition: invalid decomposition: " + check.reason);

    RewriteTerms terms;
    terms.f1 = binomial_of(d.gamma1);
    terms.f2 = binomial_of(d.gamma2);
    if (!is_submultiset(terms.f1.plus, whole.blue) || !is_submultiset(terms.f2.minus, whole.red))
        throw std::logic_error("rewrite_with_decomposition: cofactor division failed");
    terms.m1 = difference_of(whole.blue, terms.f1.plus);
    terms.m2 = difference_of(whole.red, terms.f2.minus);
    if (sum_of(terms.m1, terms.f1.minus) != sum_of(terms.m2, terms.f2.plus))
        throw std::logic_error("rewrite_with_decomposition: middle terms do not cancel");
    return terms;
}

/// For uniform hosts and a proper splitting set S of W, reports whether
/// some proper decomposition of W + S has both parts strictly smaller
/// than W. Exists to property-test the size conclusion that proper
/// splittings always shrink both parts.
inline bool check_lemma_proper_split(const BalancedEdgeSet& w, const Multiset& s) {
    if (!is_uniform(*w.host))
        throw std::invalid_argument("check_lemma_proper_split: host is not uniform");
    BalancedEdgeSet whole = add_splitting(w, s);
    bool found_proper = false;
    bool found_small = false;
    detail::for_each_decomposition(whole, s, [&](const Decomposition& d) {
        if (d.classification != SeparatorClass::proper) return true;
        found_proper = true;
        if (d.gamma1.size() < w.size() && d.gamma2.size() < w.size()) {
            found_small = true;
            return false;
        }
        return true;
    });
    if (!found_proper)
        throw std::invalid_argument("check_lemma_proper_split: S is not a proper splitting set");
    return found_small;
}

/// One (S_i, R_i) stage of a degree-bound certificate: blue and red
/// splitting sets of the current walk with their decompositions, and the
/// walk they hand to the next stage.
struct CertificateStep {
    Multiset s;
    Decomposition gamma;  // blue: gamma1.red == s
    Multiset r;
    Decomposition upsilon;  // red: gamma2.blue == r
    BalancedEdgeSet next_walk;
};

struct SearchCaps {
    std::int64_t size_cap = -1;  // derived from the walk when negative
    std::int64_t mult_cap = 2;
    std::int64_t sequence_cap = 3;  // bound on the number of (S, R) pairs
};

enum class CertificateKind { condition_i, condition_ii };

/// Witness that a primitive walk's binomial rewrites into strictly
/// smaller-degree binomials: either a proper splitting set, or a sequence
/// of blue/red splitting-set pairs ending in a shared edge or a proper
/// splitting of the final walk.
struct DegreeCertificate {
    CertificateKind kind = CertificateKind::condition_i;
    BalancedEdgeSet walk;
    std::int64_t bound = 0;
    SearchCaps caps;
    std::optional<SplittingHit> proper_split;  // condition i
    std::vector<CertificateStep> steps;        // condition ii
    std::optional<EdgeId> shared_edge;
    std::optional<SplittingHit> terminal_proper;
};

namespace detail {

inline std::optional<SplittingHit> first_proper_split(const BalancedEdgeSet& w,
                                                      std::int64_t size_cap, std::int64_t mult_cap) {
    auto hits = find_classified_splitting_sets(w, SeparatorClass::proper, size_cap, mult_cap);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

inline std::pair<Multiset, Multiset> walk_key(const BalancedEdgeSet& w) {
    return {w.blue, w.red};
}

}  // namespace detail

/// Searches the two rewriting conditions for a uniform-host primitive walk
/// of size 2n > 2d: first a proper splitting set, then bounded iterative
/// deepening over sequences of blue/red splitting-set pairs of size < n.
/// Absence under the caps is not a refutation.
inline std::optional<DegreeCertificate> find_degree_certificate(const BalancedEdgeSet& w,
                                                                std::int64_t d,
                                                                SearchCaps caps = {}) {
    if (!is_uniform(*w.host))
        throw std::invalid_argument("find_degree_certificate: host is not uniform");
    if (!is_balanced(w)) throw std::invalid_argument("find_degree_certificate: walk is not balanced");
    const std::int64_t n = w.blue.size();
    if (w.size() != 2 * n || 2 * n <= 2 * d)
        throw std::invalid_argument("find_degree_certificate: walk size must be 2n > 2d");
    if (!is_primitive(w)) throw std::invalid_argument("find_degree_certificate: walk is not primitive");
    if (caps.size_cap < 0) caps.size_cap = n - 1;

    DegreeCertificate cert;
    cert.walk = w;
    cert.bound = d;
    cert.caps = caps;

    if (auto hit = detail::first_proper_split(w, caps.size_cap, caps.mult_cap)) {
        cert.kind = CertificateKind::condition_i;
        cert.proper_split = hit;
        return cert;
    }

    const std::int64_t pair_size_cap = std::min(caps.size_cap, n - 1);
    struct Node {
        BalancedEdgeSet walk;
        std::vector<CertificateStep> steps;
    };
    std::deque<Node> frontier;
    frontier.push_back({w, {}});
    std::set<std::pair<Multiset, Multiset>> visited;
    visited.insert(detail::walk_key(w));

    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<std::int64_t>(node.steps.size()) >= caps.sequence_cap) continue;

        auto blue_hits = find_classified_splitting_sets(node.walk, SeparatorClass::blue,
                                                        pair_size_cap, caps.mult_cap, nullptr, true);
        if (blue_hits.empty()) continue;
        auto red_hits = find_classified_splitting_sets(node.walk, SeparatorClass::red,
                                                       pair_size_cap, caps.mult_cap, nullptr, true);
        if (red_hits.empty()) continue;

        // A shared edge between some pair terminates the sequence here.
        for (const auto& bh : blue_hits) {
            for (const auto& rh : red_hits) {
                Multiset shared = intersection_of(bh.splitting_set, rh.splitting_set);
                if (shared.empty()) continue;
                CertificateStep step{bh.splitting_set, bh.decomposition, rh.splitting_set,
                                     rh.decomposition,
                                     BalancedEdgeSet(*w.host, bh.decomposition.gamma2.blue,
                                                     rh.decomposition.gamma1.red)};
                cert.kind = CertificateKind::condition_ii;
                cert.steps = node.steps;
                cert.steps.push_back(step);
                cert.shared_edge = shared.entries().front().first;
                return cert;
            }
        }

        for (const auto& bh : blue_hits) {
            for (const auto& rh : red_hits) {
                BalancedEdgeSet next(*w.host, bh.decomposition.gamma2.blue,
                                     rh.decomposition.gamma1.red);
                if (!is_balanced(next))
                    throw std::logic_error("find_degree_certificate: intermediate walk unbalanced");
                if (!visited.insert(detail::walk_key(next)).second) continue;
                CertificateStep step{bh.splitting_set, bh.decomposition, rh.splitting_set,
                                     rh.decomposition, next};
                if (auto hit = detail::first_proper_split(next, caps.size_cap, caps.mult_cap)) {
                    cert.kind = CertificateKind::condition_ii;
                    cert.steps = node.steps;
                    cert.steps.push_back(step);
                    cert.terminal_proper = hit;
                    return cert;
                }
                Node child{next, node.steps};
                child.steps.push_back(step);
                frontier.push_back(std::move(child));
            }
        }
    }
    return std::nullopt;
}

/// Witness for the non-uniform rewriting bound: either a proper splitting
/// set whose parts have all color sizes < n, or a blue/red pair of size
/// < n sharing an edge with the quoted size constraints.
struct NonuniformWitness {
    CertificateKind kind = CertificateKind::condition_i;
    std::int64_t n = 0;
    std::optional<SplittingHit> proper_split;
    std::optional<CertificateStep> pair;
    std::optional<EdgeId> shared_edge;
};

inline std::optional<NonuniformWitness> check_nonuniform_conditions(const BalancedEdgeSet& e,
                                                                    std::int64_t mult_cap = 2) {
    if (!is_balanced(e)) throw std::invalid_argument("check_nonuniform_conditions: not balanced");
    const std::int64_t n = e.blue.size();
    if (n < e.red.size())
        throw std::invalid_argument("check_nonuniform_conditions: requires |blue| >= |red|");

    NonuniformWitness witness;
    witness.n = n;

    // Condition i: a proper splitting set with all four color sizes < n.
    {
        std::optional<SplittingHit> found;
        const Hypergraph& h = *e.host;
        std::vector<EdgeId> edges;
        for (std::size_t i = 0; i < h.n_edges(); ++i) edges.push_back(static_cast<EdgeId>(i));
        detail::for_each_candidate_multiset(edges, n - 1, mult_cap, [&](const Multiset& s) {
            if (found) return;
            BalancedEdgeSet whole = add_splitting(e, s);
            detail::for_each_decomposition(whole, s, [&](const Decomposition& d) {
                if (d.classification != SeparatorClass::proper) return true;
                if (d.gamma1.blue.size() < n && d.gamma1.red.size() < n &&
                    d.gamma2.blue.size() < n && d.gamma2.red.size() < n) {
                    found = SplittingHit{s, d};
                    return false;
                }
                return true;
            });
        });
        if (found) {
            witness.kind = CertificateKind::condition_i;
            witness.proper_split = found;
            return witness;
        }
    }

    // Condition ii: blue and red splitting sets of size < n sharing an
    // edge, with |gamma1.blue|, |upsilon2.red| < n and
    // |gamma2.blue|, |upsilon1.red| <= n.
    auto blue_hits = find_classified_splitting_sets(e, SeparatorClass::blue, n - 1, mult_cap,
                                                    nullptr, true);
    auto red_hits = find_classified_splitting_sets(e, SeparatorClass::red, n - 1, mult_cap,
                                                   nullptr, true);
    for (const auto& bh : blue_hits) {
        if (bh.decomposition.gamma1.blue.size() >= n) continue;
        if (bh.decomposition.gamma2.blue.size() > n) continue;
        for (const auto& rh : red_hits) {
            if (rh.decomposition.gamma2.red.size() >= n) continue;
            if (rh.decomposition.gamma1.red.size() > n) continue;
            Multiset shared = intersection_of(bh.splitting_set, rh.splitting_set);
            if (shared.empty()) continue;
            witness.kind = CertificateKind::condition_ii;
            witness.pair = CertificateStep{bh.splitting_set, bh.decomposition, rh.splitting_set,
                                           rh.decomposition,
                                           BalancedEdgeSet(*e.host, bh.decomposition.gamma2.blue,
                                                           rh.decomposition.gamma1.red)};
            witness.shared_edge = shared.entries().front().first;
            return witness;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Symbolic replay of certificate identities.

/// Sparse integer polynomial in the edge variables, for exact expansion of
/// the rewriting identities.
using Polynomial = std::map<Multiset, std::int64_t>;

inline void poly_add(Polynomial& p, const Multiset& monomial, std::int64_t coeff) {
    auto it = p.find(monomial);
    if (it == p.end()) {
        if (coeff != 0) p.emplace(monomial, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) p.erase(it);
}

/// Adds cofactor * (plus - minus).
inline void poly_add_term(Polynomial& p, const Multiset& cofactor, const Binomial& b) {
    poly_add(p, sum_of(cofactor, b.plus), 1);
    poly_add(p, sum_of(cofactor, b.minus), -1);
}

inline Polynomial walk_polynomial(const BalancedEdgeSet& w) {
    Polynomial p;
    poly_add(p, w.blue, 1);
    poly_add(p, w.red, -1);
    return p;
}

/// The rewriting of a certificate as (cofactor, binomial) terms whose sum
/// is exactly the walk's binomial.
inline std::vector<std::pair<Multiset, Binomial>> certificate_identity_terms(
    const DegreeCertificate& cert) {
    std::vector<std::pair<Multiset, Binomial>> terms;
    if (cert.kind == CertificateKind::condition_i) {
        RewriteTerms rt = rewrite_with_decomposition(cert.walk, cert.proper_split->decomposition);
        terms.emplace_back(rt.m1, rt.f1);
        terms.emplace_back(rt.m2, rt.f2);
        return terms;
    }

    BalancedEdgeSet current = cert.walk;
    std::vector<std::pair<Multiset, Binomial>> tail;
    for (const auto& step : cert.steps) {
        Binomial f1 = binomial_of(step.gamma.gamma1);
        if (!is_submultiset(f1.plus, current.blue))
            throw std::logic_error("certificate identity: blue cofactor division failed");
        terms.emplace_back(difference_of(current.blue, f1.plus), f1);

        Binomial f2 = binomial_of(step.upsilon.gamma2);
        if (!is_submultiset(f2.minus, current.red))
            throw std::logic_error("certificate identity: red cofactor division failed");
        tail.emplace_back(difference_of(current.red, f2.minus), f2);

        current = step.next_walk;
    }

    if (cert.shared_edge) {
        Multiset e({{*cert.shared_edge, 1}});
        if (!is_submultiset(e, current.blue) || !is_submultiset(e, current.red))
            throw std::logic_error("certificate identity: shared edge does not divide the middle");
        Multiset bb = difference_of(current.blue, e);
        Multiset rr = difference_of(current.red, e);
        // Common factors of the middle move into the cofactor with t_e.
        terms.emplace_back(sum_of(e, intersection_of(bb, rr)), Binomial(bb, rr));
    } else if (cert.terminal_proper) {
        RewriteTerms rt = rewrite_with_decomposition(current, cert.terminal_proper->decomposition);
        terms.emplace_back(rt.m1, rt.f1);
        terms.emplace_back(rt.m2, rt.f2);
    } else {
        throw std::logic_error("certificate identity: missing terminal witness");
    }

    for (auto it = tail.rbegin(); it != tail.rend(); ++it) terms.push_back(*it);
    return terms;
}

/// Full re-check of a degree certificate: the walk's own preconditions,
/// every decomposition, size bound, and the symbolic identity. Returns
/// the first failure by name.
inline std::optional<std::string> verify_degree_certificate(const DegreeCertificate& cert) {
    const BalancedEdgeSet& w = cert.walk;
    if (!is_uniform(*w.host)) return "host is not uniform";
    if (!is_balanced(w)) return "walk is not balanced";
    const std::int64_t n = w.blue.size();
    if (w.size() != 2 * n || 2 * n <= 2 * cert.bound) return "walk size is not 2n > 2d";
    if (!is_primitive(w)) return "walk is not primitive";

    if (cert.kind == CertificateKind::condition_i) {
        if (!cert.proper_split) return "condition i certificate without a splitting set";
        BalancedEdgeSet whole = add_splitting(w, cert.proper_split->splitting_set);
        DecompositionCheck check = check_decomposition(whole, cert.proper_split->decomposition);
        if (!check.valid) return "condition i decomposition invalid: " + check.reason;
        if (check.classification != SeparatorClass::proper) return "condition i separator not proper";
    } else {
        if (cert.steps.empty()) return "condition ii certificate without steps";
        BalancedEdgeSet current = w;
        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            const auto& step = cert.steps[i];
            if (step.s.size() >= n) return "blue splitting set size not below n";
            if (step.r.size() >= n) return "red splitting set size not below n";
            DecompositionCheck cb = check_decomposition(add_splitting(current, step.s), step.gamma);
            if (!cb.valid) return "blue decomposition invalid: " + cb.reason;
            if (cb.classification != SeparatorClass::blue) return "S is not a blue splitting set";
            DecompositionCheck cr = check_decomposition(add_splitting(current, step.r), step.upsilon);
            if (!cr.valid) return "red decomposition invalid: " + cr.reason;
            if (cr.classification != SeparatorClass::red) return "R is not a red splitting set";
            BalancedEdgeSet expected(*w.host, step.gamma.gamma2.blue, step.upsilon.gamma1.red);
            if (!(step.next_walk == expected)) return "intermediate walk mismatch";
            if (!is_balanced(step.next_walk)) return "intermediate walk not balanced";
            current = step.next_walk;
        }
        if (cert.shared_edge) {
            const auto& last = cert.steps.back();
            Multiset e({{*cert.shared_edge, 1}});
            if (!is_submultiset(e, last.s) || !is_submultiset(e, last.r))
                return "shared edge is not in both final splitting sets";
        } else if (cert.terminal_proper) {
            BalancedEdgeSet whole = add_splitting(current, cert.terminal_proper->splitting_set);
            DecompositionCheck check = check_decomposition(whole, cert.terminal_proper->decomposition);
            if (!check.valid) return "terminal decomposition invalid: " + check.reason;
            if (check.classification != SeparatorClass::proper) return "terminal separator not proper";
        } else {
            return "condition ii certificate without a terminal witness";
        }
    }

    Polynomial expanded;
    try {
        for (const auto& [cofactor, b] : certificate_identity_terms(cert))
            poly_add_term(expanded, cofactor, b);
    } catch (const std::exception& ex) {
        return std::string("identity replay failed: ") + ex.what();
    }
    if (expanded != walk_polynomial(w)) return "identity does not reproduce the walk binomial";
    return std::nullopt;
}

/// Re-check of a non-uniform rewriting witness against its walk: the size
/// constraints on the parts and the symbolic identity.
inline std::optional<std::string> verify_nonuniform_witness(const BalancedEdgeSet& e,
                                                            const NonuniformWitness& w) {
    if (!is_balanced(e)) return "walk is not balanced";
    const std::int64_t n = e.blue.size();
    if (w.n != n) return "stored n differs from |blue|";
    if (n < e.red.size()) return "requires |blue| >= |red|";

    DegreeCertificate replay;
    replay.walk = e;
    if (w.kind == CertificateKind::condition_i) {
        if (!w.proper_split) return "condition i witness without a splitting set";
        const Decomposition& d = w.proper_split->decomposition;
        DecompositionCheck check = check_decomposition(add_splitting(e, w.proper_split->splitting_set), d);
        if (!check.valid) return "decomposition invalid: " + check.reason;
        if (check.classification != SeparatorClass::proper) return "separator not proper";
        if (d.gamma1.blue.size() >= n || d.gamma1.red.size() >= n || d.gamma2.blue.size() >= n ||
            d.gamma2.red.size() >= n)
            return "part color sizes are not all below n";
        replay.kind = CertificateKind::condition_i;
        replay.proper_split = w.proper_split;
    } else {
        if (!w.pair || !w.shared_edge) return "condition ii witness needs a pair and a shared edge";
        const CertificateStep& step = *w.pair;
        if (step.s.size() >= n) return "blue splitting set size not below n";
        if (step.r.size() >= n) return "red splitting set size not below n";
        DecompositionCheck cb = check_decomposition(add_splitting(e, step.s), step.gamma);
        if (!cb.valid) return "blue decomposition invalid: " + cb.reason;
        if (cb.classification != SeparatorClass::blue) return "S is not a blue splitting set";
        DecompositionCheck cr = check_decomposition(add_splitting(e, step.r), step.upsilon);
        if (!cr.valid) return "red decomposition invalid: " + cr.reason;
        if (cr.classification != SeparatorClass::red) return "R is not a red splitting set";
        if (step.gamma.gamma1.blue.size() >= n) return "|gamma1 blue| not below n";
        if (step.upsilon.gamma2.red.size() >= n) return "|upsilon2 red| not below n";
        if (step.gamma.gamma2.blue.size() > n) return "|gamma2 blue| above n";
        if (step.upsilon.gamma1.red.size() > n) return "|upsilon1 red| above n";
        Multiset shared_elem({{*w.shared_edge, 1}});
        if (!is_submultiset(shared_elem, step.s) || !is_submultiset(shared_elem, step.r))
            return "shared edge is not in both splitting sets";
        BalancedEdgeSet expected(*e.host, step.gamma.gamma2.blue, step.upsilon.gamma1.red);
        if (!(step.next_walk == expected)) return "middle walk mismatch";
        replay.kind = CertificateKind::condition_ii;
        replay.steps = {step};
        replay.shared_edge = w.shared_edge;
    }

    Polynomial expanded;
    try {
        for (const auto& [cofactor, b] : certificate_identity_terms(replay))
            poly_add_term(expanded, cofactor, b);
    } catch (const std::exception& ex) {
        return std::string("identity replay failed: ") + ex.what();
    }
    if (expanded != walk_polynomial(e)) return "identity does not reproduce the walk binomial";
    return std::nullopt;
}

}  // namespace hypertoric
