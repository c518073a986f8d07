// Acceptance suite: runs each criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <hypertoric/hypertoric.hpp>

#include "support.hpp"

using namespace hypertoric;

namespace {

struct Harness {
    int failures = 0;
    std::vector<std::string> notes;
    std::size_t suppressed = 0;

    void expect(bool condition, const std::string& what) {
        if (condition) return;
        if (notes.size() < 12)
            notes.push_back(what);
        else
            ++suppressed;
    }

    void run(int number, const std::string& title, const std::function<void()>& body) {
        notes.clear();
        suppressed = 0;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const std::exception& ex) {
            notes.push_back(std::string("exception: ") + ex.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (notes.empty()) {
            std::printf("PASS criterion %d: %s (%.2fs)\n", number, title.c_str(), seconds);
        } else {
            ++failures;
            std::printf("FAIL criterion %d: %s (%.2fs)\n", number, title.c_str(), seconds);
            for (const auto& note : notes) std::printf("      %s\n", note.c_str());
            if (suppressed > 0) std::printf("      ... and %zu more\n", suppressed);
        }
        std::fflush(stdout);
    }
};

/// All primitive walks with one 3-edge and (degree-1) 2-edges per color on
/// a sizes-2-and-3 host, enumerated exhaustively.
std::vector<BalancedEdgeSet> primitive_bh_walks(const Hypergraph& h, std::int64_t degree) {
    std::vector<EdgeId> twos, threes;
    for (std::size_t e = 0; e < h.n_edges(); ++e)
        (h.edges()[e].size() == 2 ? twos : threes).push_back(static_cast<EdgeId>(e));

    std::vector<BalancedEdgeSet> walks;
    std::set<std::pair<Multiset, Multiset>> seen;

    for (EdgeId b3 : threes) {
        std::vector<Multiset::Entry> blue_twos;
        auto blue_dfs = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
            if (left == 0) {
                Multiset blue = sum_of(Multiset({{b3, 1}}), Multiset(blue_twos));
                DegreeVector img = vertex_degrees(h, blue);
                for (EdgeId r3 : threes) {
                    DegreeVector rest = img;
                    bool fits = true;
                    for (VertexId v : h.edge(r3))
                        if (--rest[static_cast<std::size_t>(v)] < 0) fits = false;
                    if (!fits) continue;
                    std::vector<Multiset::Entry> red_twos;
                    auto red_dfs = [&](auto&& self2, std::size_t jdx, std::int64_t rleft) -> void {
                        if (rleft == 0) {
                            for (std::int64_t r : rest)
                                if (r != 0) return;
                            Multiset red = sum_of(Multiset({{r3, 1}}), Multiset(red_twos));
                            if (!intersection_of(blue, red).empty()) return;
                            auto key = std::minmax(blue, red);
                            if (!seen.insert({key.first, key.second}).second) return;
                            BalancedEdgeSet walk(h, blue, red);
                            if (is_primitive(walk)) walks.push_back(walk);
                            return;
                        }
                        if (jdx == twos.size()) return;
                        self2(self2, jdx + 1, rleft);
                        EdgeId e = twos[jdx];
                        std::int64_t bound = rleft;
                        for (VertexId v : h.edge(e))
                            bound = std::min(bound, rest[static_cast<std::size_t>(v)]);
                        for (std::int64_t c = 1; c <= bound; ++c) {
                            for (VertexId v : h.edge(e)) --rest[static_cast<std::size_t>(v)];
                            red_twos.emplace_back(e, c);
                            self2(self2, jdx + 1, rleft - c);
                            red_twos.pop_back();
                        }
                        if (bound >= 1)
                            for (VertexId v : h.edge(e)) rest[static_cast<std::size_t>(v)] += bound;
                    };
                    red_dfs(red_dfs, 0, degree - 1);
                }
                return;
            }
            if (idx == twos.size()) return;
            self(self, idx + 1, left);
            for (std::int64_t c = 1; c <= left; ++c) {
                blue_twos.emplace_back(twos[idx], c);
                self(self, idx + 1, left - c);
                blue_twos.pop_back();
            }
        };
        blue_dfs(blue_dfs, 0, degree - 1);
    }
    return walks;
}

}  // namespace

int main() {
    Harness h;

    h.run(1, "no-3-way 2x2x2: one degree-4 generator, Graver = Markov", [&] {
        Hypergraph no3 = no_three_way(2, 2, 2);
        MarkovBasis markov = markov_basis(no3, 6);
        h.expect(markov.elements.size() == 1, "markov basis must have exactly one element");
        h.expect(markov.max_degree == 4, "markov max degree must be 4");
        h.expect(!markov.truncated, "markov basis must be complete at cap 6");
        GraverBasis graver = graver_basis(no3, 6);
        h.expect(graver.elements == markov.elements, "graver basis must agree");
        h.expect(graver_equals_markov(no3, 6).equal, "graver_equals_markov must hold");
    });

    h.run(2, "2x3x3 printed walk: primitive, indispensable, no splitting set", [&] {
        Hypergraph big = no_three_way(2, 3, 3);
        BalancedEdgeSet walk = slim_table_walk(big, 3, 3);
        h.expect(is_balanced(walk), "walk must be balanced");
        h.expect(is_primitive(walk), "walk must be primitive");
        Binomial f = binomial_of(walk);
        h.expect(is_indispensable(big, f, 36), "walk must be indispensable");

        // Candidates supported inside V(W); the remaining edges each have a
        // vertex outside the walk.
        std::vector<VertexId> covered = walk.covered_vertices();
        std::set<VertexId> inside(covered.begin(), covered.end());
        std::vector<EdgeId> universe;
        for (std::size_t e = 0; e < big.n_edges(); ++e) {
            bool ok = true;
            for (VertexId v : big.edges()[e])
                if (!inside.count(v)) ok = false;
            if (ok) universe.push_back(static_cast<EdgeId>(e));
        }
        h.expect(universe.size() == 12, "exactly the 12 walk edges lie inside V(W)");
        auto hits = find_splitting_sets(walk, 6, 2, &universe);
        h.expect(hits.empty(), "no splitting set may exist within the exhaustive caps");
    });

    h.run(3, "group-based model: printed splitting set and rewriting identity", [&] {
        Hypergraph gb = group_based_16();
        BalancedEdgeSet walk = test_support::walk_by_labels(gb, {"e324", "e111", "e243", "e432"},
                                                            {"e122", "e313", "e234", "e441"});
        Multiset s = test_support::edges_by_labels(gb, {"e133", "e212"});

        bool found_s = false;
        for (const auto& hit : find_splitting_sets(walk, 2, 1)) {
            if (hit.splitting_set == s) {
                found_s = true;
                h.expect(hit.decomposition.classification == SeparatorClass::proper,
                         "the witness for S must be proper");
            }
        }
        h.expect(found_s, "S = {e133, e212} must be found");

        Decomposition printed;
        printed.gamma1 = test_support::walk_by_labels(gb, {"e111", "e243", "e432"},
                                                      {"e133", "e212", "e441"});
        printed.gamma2 = test_support::walk_by_labels(gb, {"e133", "e212", "e324"},
                                                      {"e122", "e313", "e234"});
        printed.separator = s;
        printed.classification = SeparatorClass::proper;
        DecompositionCheck check = check_decomposition(add_splitting(walk, s), printed);
        h.expect(check.valid && check.classification == SeparatorClass::proper,
                 "printed decomposition must be valid_proper");

        RewriteTerms terms = rewrite_with_decomposition(walk, printed);
        h.expect(terms.m1 == test_support::edges_by_labels(gb, {"e324"}), "m1 must be t_e324");
        h.expect(terms.m2 == test_support::edges_by_labels(gb, {"e441"}), "m2 must be t_e441");
        Polynomial expanded;
        poly_add_term(expanded, terms.m1, terms.f1);
        poly_add_term(expanded, terms.m2, terms.f2);
        h.expect(expanded == walk_polynomial(walk), "identity must expand to f_W exactly");
    });

    h.run(4, "Segre models are generated by quadrics", [&] {
        for (auto [k, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
            MarkovWidth width = markov_width(complete_kpartite(k, d), 4);
            h.expect(width.width == 2, "width of kpartite(" + std::to_string(k) + "," +
                                           std::to_string(d) + ") must be 2");
            h.expect(!width.truncated, "basis must be complete at cap 4");
        }
    });

    h.run(5, "cumulant hypergraphs are generated by quadrics and cubics", [&] {
        for (std::int64_t n : {3, 4, 5}) {
            MarkovBasis basis = markov_basis(cumulant_hypergraph(n, false), 5);
            h.expect(basis.max_degree <= 3,
                     "width of cumulant(" + std::to_string(n) + ") must be at most 3");
            h.expect(!basis.truncated, "basis must be complete at cap 5");
            if (n == 3) {
                Binomial cubic(Multiset({{0, 1}, {1, 1}, {2, 1}}), Multiset({{3, 2}}));
                bool present = false;
                for (const auto& b : basis.elements)
                    if (b == canonical_sign(cubic)) present = true;
                h.expect(present, "the degree-3 element must be present for n = 3");
            }
        }
    });

    h.run(6, "cumulant certificates reduce every primitive one-3-edge walk", [&] {
        Hypergraph cum = cumulant_hypergraph(6, false);
        std::size_t total = 0;
        for (std::int64_t degree : {4, 5}) {
            for (const auto& walk : primitive_bh_walks(cum, degree)) {
                ++total;
                Decomposition d = cumulant_split_certificate(walk);
                DecompositionCheck check = check_decomposition(add_splitting(walk, d.separator), d);
                if (!(check.valid && check.classification == SeparatorClass::proper &&
                      in_cumulant_bh(d.gamma1) && in_cumulant_bh(d.gamma2) &&
                      d.gamma1.blue.size() < walk.blue.size() &&
                      d.gamma2.blue.size() < walk.blue.size())) {
                    h.expect(false, "certificate failed for a degree-" + std::to_string(degree) +
                                        " walk");
                    return;
                }
            }
        }
        h.expect(total > 0, "the bounded search must find walks");
    });

    h.run(7, "slim table walks stay primitive and indispensable", [&] {
        for (std::int64_t r = 2; r <= 4; ++r) {
            for (std::int64_t c = 2; c <= 4; ++c) {
                Hypergraph host = no_three_way(2, r, c);
                BalancedEdgeSet walk = slim_table_walk(host, r, c);
                std::string tag = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
                h.expect(binomial_of(walk).degree() == 2 * std::min(r, c),
                         "degree must be 2 min(r,c) at " + tag);
                h.expect(is_primitive(walk), "walk must be primitive at " + tag);
                h.expect(is_indispensable(host, binomial_of(walk), 3 * walk.size()),
                         "walk must be indispensable at " + tag);
            }
        }
    });

    h.run(8, "proposition-level property suites", [&] {
        // (a) no splitting set implies indispensable, on a random corpus.
        std::mt19937_64 rng(20250814);
        int corpus = 0, splitting_free = 0;
        while (corpus < 50) {
            Hypergraph host = test_support::random_hypergraph(rng, 8, 10);
            std::map<DegreeVector, std::vector<ExponentVector>> fibers;
            std::vector<ExponentVector> monomials;
            // Seeds of total degree at most 4.
            std::vector<std::int64_t> current(host.n_edges(), 0);
            auto dfs = [&](auto&& self, std::size_t e, std::int64_t used) -> void {
                if (e == host.n_edges()) {
                    if (used > 0) monomials.push_back(current);
                    return;
                }
                for (std::int64_t cc = 0; used + cc <= 4; ++cc) {
                    current[e] = cc;
                    self(self, e + 1, used + cc);
                }
                current[e] = 0;
            };
            dfs(dfs, 0, 0);
            for (const auto& u : monomials) fibers[vertex_degrees(host, sparse_exponents(u))].push_back(u);

            int taken_here = 0;
            for (const auto& [img, points] : fibers) {
                if (corpus >= 50 || taken_here >= 3) break;
                for (std::size_t i = 0; i < points.size() && taken_here < 3; ++i) {
                    for (std::size_t j = i + 1; j < points.size(); ++j) {
                        bool disjoint = true;
                        for (std::size_t e = 0; e < points[i].size(); ++e)
                            if (points[i][e] > 0 && points[j][e] > 0) disjoint = false;
                        if (!disjoint) continue;
                        BalancedEdgeSet walk(host, sparse_exponents(points[i]),
                                             sparse_exponents(points[j]));
                        ++corpus;
                        ++taken_here;
                        auto hits = find_splitting_sets(walk, walk.size(), 2);
                        if (hits.empty()) {
                            ++splitting_free;
                            std::int64_t cap = 0;
                            for (std::int64_t x : img) cap += x;
                            if (!is_indispensable(host, binomial_of(walk), cap))
                                h.expect(false, "a splitting-free walk was dispensable");
                        }
                        break;
                    }
                }
            }
        }
        h.expect(corpus >= 50, "corpus must reach 50 walks");
        h.expect(splitting_free > 0, "corpus must include splitting-free walks");

        // (b) proper splitting sets satisfy the shrinking conclusion.
        Hypergraph gb = group_based_16();
        BalancedEdgeSet gbw = test_support::walk_by_labels(gb, {"e324", "e111", "e243", "e432"},
                                                           {"e122", "e313", "e234", "e441"});
        int proper_seen = 0;
        for (const auto& hit : find_splitting_sets(gbw, 3, 1)) {
            if (hit.decomposition.classification != SeparatorClass::proper) continue;
            ++proper_seen;
            if (!check_lemma_proper_split(gbw, hit.splitting_set))
                h.expect(false, "a proper splitting set failed the size conclusion");
        }
        Hypergraph segre = complete_kpartite(3, 2);
        for (const auto& b : graver_basis(segre, 3).elements) {
            if (b.degree() != 3) continue;
            BalancedEdgeSet walk = balanced_of_binomial(segre, b);
            for (const auto& hit : find_splitting_sets(walk, 2, 2)) {
                if (hit.decomposition.classification != SeparatorClass::proper) continue;
                ++proper_seen;
                if (!check_lemma_proper_split(walk, hit.splitting_set))
                    h.expect(false, "a proper Segre splitting set failed the size conclusion");
            }
        }
        h.expect(proper_seen > 0, "fixtures must yield proper splitting sets");

        // (c) multiset algebra laws on 1000 random pairs.
        std::mt19937_64 mrng(99);
        auto random_multiset = [&](int max_elem, int max_mult) {
            std::uniform_int_distribution<int> n_dist(0, 5);
            std::uniform_int_distribution<int> elem_dist(0, max_elem - 1);
            std::uniform_int_distribution<int> mult_dist(1, max_mult);
            std::vector<Multiset::Entry> entries;
            int n = n_dist(mrng);
            for (int i = 0; i < n; ++i) entries.emplace_back(elem_dist(mrng), mult_dist(mrng));
            return Multiset(std::move(entries));
        };
        for (int trial = 0; trial < 1000; ++trial) {
            Multiset a = random_multiset(8, 4);
            Multiset b = random_multiset(8, 4);
            if (sum_of(a, b).size() != a.size() + b.size())
                h.expect(false, "sum size additivity failed");
            const Multiset u = union_of(a, b);
            for (const auto& [elem, count] : u.entries())
                if (count != std::max(a.count(elem), b.count(elem)))
                    h.expect(false, "union multiplicity law failed");
            const Multiset inter = intersection_of(a, b);
            for (const auto& [elem, count] : inter.entries())
                if (count != std::min(a.count(elem), b.count(elem)))
                    h.expect(false, "intersection multiplicity law failed");
            if (is_submultiset(b, a) &&
                sum_of(difference_of(a, b), intersection_of(a, b)) != a)
                h.expect(false, "difference/sum round trip failed");
            if (submultiset_relation(a, a) != Containment::equal)
                h.expect(false, "reflexivity failed");
        }
    });

    if (h.failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", h.failures);
    return 1;
}
