#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "balanced.hpp"
#include "hypergraph.hpp"
#include "multiset.hpp"
#include "splitting.hpp"
#include "toric.hpp"

namespace hypertoric {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Multisets: emitted as {"elem": multiplicity}; an array with repeats is
// also accepted on input.

inline Json multiset_to_json(const Multiset& m) {
    Json j = Json::object();
    for (const auto& [elem, count] : m.entries()) j[std::to_string(elem)] = count;
    return j;
}

inline Multiset multiset_from_json(const Json& j) {
    std::vector<Multiset::Entry> entries;
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            entries.emplace_back(std::stoll(key), value.get<std::int64_t>());
    } else if (j.is_array()) {
        for (const auto& value : j) entries.emplace_back(value.get<std::int64_t>(), 1);
    } else {
        throw std::invalid_argument("multiset: expected an object or an array");
    }
    return Multiset(std::move(entries));
}

// ---------------------------------------------------------------------------
// Hypergraphs.

inline Json hypergraph_to_json(const Hypergraph& h) {
    Json j;
    j["schema"] = "hypergraph";
    if (!h.vertex_labels().empty())
        j["vertices"] = h.vertex_labels();
    else
        j["vertices"] = h.n_vertices();
    j["edges"] = h.edges();
    if (!h.edge_labels().empty()) j["edge_labels"] = h.edge_labels();
    if (!h.partition().empty()) j["partition"] = h.partition();
    return j;
}

inline Hypergraph hypergraph_from_json(const Json& j) {
    std::int64_t n = 0;
    std::vector<std::string> labels;
    const Json& vertices = j.at("vertices");
    if (vertices.is_number()) {
        n = vertices.get<std::int64_t>();
    } else if (vertices.is_array()) {
        labels = vertices.get<std::vector<std::string>>();
        n = static_cast<std::int64_t>(labels.size());
    } else {
        throw std::invalid_argument("hypergraph: vertices must be a count or a label list");
    }
    auto edges = j.at("edges").get<std::vector<std::vector<VertexId>>>();
    std::vector<std::string> edge_labels;
    if (j.contains("edge_labels")) edge_labels = j["edge_labels"].get<std::vector<std::string>>();
    std::vector<std::vector<VertexId>> partition;
    if (j.contains("partition")) partition = j["partition"].get<std::vector<std::vector<VertexId>>>();
    return Hypergraph(n, std::move(edges), std::move(labels), std::move(edge_labels),
                      std::move(partition));
}

// ---------------------------------------------------------------------------
// Walks: blue and red edge lists with repeats encoding multiplicity. Each
// entry may be an edge id, an edge label, or a vertex list.

inline Json walk_to_json(const BalancedEdgeSet& b, bool embed_hypergraph = false) {
    Json j;
    j["schema"] = "walk";
    j["blue"] = b.blue.to_elements();
    j["red"] = b.red.to_elements();
    if (embed_hypergraph) j["hypergraph"] = hypergraph_to_json(*b.host);
    return j;
}

inline Multiset edge_list_from_json(const Hypergraph& h, const Json& j) {
    std::vector<Multiset::Element> elems;
    for (const auto& item : j) {
        if (item.is_number()) {
            EdgeId e = item.get<EdgeId>();
            h.check_edge(e);
            elems.push_back(e);
        } else if (item.is_string()) {
            auto e = h.edge_index_of_label(item.get<std::string>());
            if (!e) throw std::invalid_argument("walk: unknown edge label " + item.get<std::string>());
            elems.push_back(*e);
        } else if (item.is_array()) {
            auto e = h.edge_index_of(item.get<std::vector<VertexId>>());
            if (!e) throw std::invalid_argument("walk: no edge with the given vertex set");
            elems.push_back(*e);
        } else {
            throw std::invalid_argument("walk: edge entries must be ids, labels, or vertex lists");
        }
    }
    return Multiset::from_elements(elems);
}

inline BalancedEdgeSet walk_from_json(const Hypergraph& h, const Json& j) {
    return BalancedEdgeSet(h, edge_list_from_json(h, j.at("blue")),
                           edge_list_from_json(h, j.at("red")));
}

// ---------------------------------------------------------------------------
// Binomials and bases.

inline Json binomial_to_json(const Binomial& b) {
    Json j;
    j["schema"] = "binomial";
    j["plus"] = multiset_to_json(b.plus);
    j["minus"] = multiset_to_json(b.minus);
    j["degree"] = b.degree();
    return j;
}

inline Binomial binomial_from_json(const Json& j) {
    return Binomial(multiset_from_json(j.at("plus")), multiset_from_json(j.at("minus")));
}

inline Json basis_to_json(const std::string& kind, const std::vector<Binomial>& elements,
                          std::int64_t degree_cap, std::optional<std::int64_t> max_degree,
                          bool truncated) {
    Json j;
    j["schema"] = "basis";
    j["kind"] = kind;
    j["count"] = elements.size();
    if (max_degree) j["max_degree"] = *max_degree;
    j["complete_to_degree"] = degree_cap;
    j["truncated"] = truncated;
    j["elements"] = Json::array();
    for (const auto& b : elements) j["elements"].push_back(binomial_to_json(b));
    return j;
}

// ---------------------------------------------------------------------------
// Decompositions and certificates.

inline Json bicolored_to_json(const BalancedEdgeSet& b) {
    Json j;
    j["blue"] = b.blue.to_elements();
    j["red"] = b.red.to_elements();
    return j;
}

inline Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["gamma1"] = bicolored_to_json(d.gamma1);
    j["separator"] = multiset_to_json(d.separator);
    j["gamma2"] = bicolored_to_json(d.gamma2);
    j["classification"] = to_string(d.classification);
    return j;
}

inline SeparatorClass separator_class_from_json(const std::string& s) {
    if (s == "proper") return SeparatorClass::proper;
    if (s == "blue") return SeparatorClass::blue;
    if (s == "red") return SeparatorClass::red;
    throw std::invalid_argument("decomposition: unknown classification " + s);
}

inline BalancedEdgeSet bicolored_from_json(const Hypergraph& h, const Json& j) {
    return BalancedEdgeSet(h, edge_list_from_json(h, j.at("blue")),
                           edge_list_from_json(h, j.at("red")));
}

inline Decomposition decomposition_from_json(const Hypergraph& h, const Json& j) {
    Decomposition d;
    d.gamma1 = bicolored_from_json(h, j.at("gamma1"));
    d.separator = multiset_from_json(j.at("separator"));
    d.gamma2 = bicolored_from_json(h, j.at("gamma2"));
    d.classification = separator_class_from_json(j.at("classification").get<std::string>());
    return d;
}

inline Json splitting_hit_to_json(const SplittingHit& hit) {
    Json j;
    j["splitting_set"] = multiset_to_json(hit.splitting_set);
    j["decomposition"] = decomposition_to_json(hit.decomposition);
    return j;
}

inline SplittingHit splitting_hit_from_json(const Hypergraph& h, const Json& j) {
    return SplittingHit{multiset_from_json(j.at("splitting_set")),
                        decomposition_from_json(h, j.at("decomposition"))};
}

inline Json identity_terms_to_json(const std::vector<std::pair<Multiset, Binomial>>& terms) {
    Json arr = Json::array();
    for (const auto& [cofactor, b] : terms) {
        Json t;
        t["cofactor"] = multiset_to_json(cofactor);
        t["plus"] = multiset_to_json(b.plus);
        t["minus"] = multiset_to_json(b.minus);
        arr.push_back(t);
    }
    return arr;
}

inline Json certificate_to_json(const DegreeCertificate& cert) {
    Json j;
    j["schema"] = "certificate";
    j["kind"] = cert.kind == CertificateKind::condition_i ? "condition_i" : "condition_ii";
    j["degree_bound"] = cert.bound;
    j["hypergraph"] = hypergraph_to_json(*cert.walk.host);
    j["walk"] = bicolored_to_json(cert.walk);
    Json caps;
    caps["size_cap"] = cert.caps.size_cap;
    caps["mult_cap"] = cert.caps.mult_cap;
    caps["sequence_cap"] = cert.caps.sequence_cap;
    j["caps"] = caps;
    if (cert.proper_split) j["proper_split"] = splitting_hit_to_json(*cert.proper_split);
    if (!cert.steps.empty()) {
        Json steps = Json::array();
        for (const auto& step : cert.steps) {
            Json s;
            s["S"] = multiset_to_json(step.s);
            s["gamma"] = decomposition_to_json(step.gamma);
            s["R"] = multiset_to_json(step.r);
            s["upsilon"] = decomposition_to_json(step.upsilon);
            s["next_walk"] = bicolored_to_json(step.next_walk);
            steps.push_back(s);
        }
        j["steps"] = steps;
    }
    if (cert.shared_edge) j["shared_edge"] = *cert.shared_edge;
    if (cert.terminal_proper) j["terminal_proper"] = splitting_hit_to_json(*cert.terminal_proper);
    j["identity"] = identity_terms_to_json(certificate_identity_terms(cert));
    return j;
}

/// Rebuilds a certificate from its JSON form against the embedded
/// hypergraph, which the caller owns.
inline DegreeCertificate certificate_from_json(const Hypergraph& h, const Json& j) {
    DegreeCertificate cert;
    std::string kind = j.at("kind").get<std::string>();
    cert.kind = kind == "condition_i" ? CertificateKind::condition_i : CertificateKind::condition_ii;
    cert.bound = j.at("degree_bound").get<std::int64_t>();
    cert.walk = bicolored_from_json(h, j.at("walk"));
    if (j.contains("caps")) {
        cert.caps.size_cap = j["caps"].value("size_cap", std::int64_t{-1});
        cert.caps.mult_cap = j["caps"].value("mult_cap", std::int64_t{2});
        cert.caps.sequence_cap = j["caps"].value("sequence_cap", std::int64_t{3});
    }
    if (j.contains("proper_split")) cert.proper_split = splitting_hit_from_json(h, j["proper_split"]);
    if (j.contains("steps")) {
        for (const auto& s : j["steps"]) {
            CertificateStep step{multiset_from_json(s.at("S")),
                                 decomposition_from_json(h, s.at("gamma")),
                                 multiset_from_json(s.at("R")),
                                 decomposition_from_json(h, s.at("upsilon")),
                                 bicolored_from_json(h, s.at("next_walk"))};
            cert.steps.push_back(std::move(step));
        }
    }
    if (j.contains("shared_edge")) cert.shared_edge = j["shared_edge"].get<EdgeId>();
    if (j.contains("terminal_proper"))
        cert.terminal_proper = splitting_hit_from_json(h, j["terminal_proper"]);
    return cert;
}

inline Json nonuniform_witness_to_json(const BalancedEdgeSet& walk, const NonuniformWitness& w) {
    Json j;
    j["schema"] = "certificate";
    j["kind"] = w.kind == CertificateKind::condition_i ? "nonuniform_i" : "nonuniform_ii";
    j["n"] = w.n;
    j["hypergraph"] = hypergraph_to_json(*walk.host);
    j["walk"] = bicolored_to_json(walk);
    if (w.proper_split) j["proper_split"] = splitting_hit_to_json(*w.proper_split);
    if (w.pair) {
        Json s;
        s["S"] = multiset_to_json(w.pair->s);
        s["gamma"] = decomposition_to_json(w.pair->gamma);
        s["R"] = multiset_to_json(w.pair->r);
        s["upsilon"] = decomposition_to_json(w.pair->upsilon);
        s["next_walk"] = bicolored_to_json(w.pair->next_walk);
        j["pair"] = s;
    }
    if (w.shared_edge) j["shared_edge"] = *w.shared_edge;
    DegreeCertificate replay;
    replay.walk = walk;
    if (w.kind == CertificateKind::condition_i) {
        replay.kind = CertificateKind::condition_i;
        replay.proper_split = w.proper_split;
    } else {
        replay.kind = CertificateKind::condition_ii;
        replay.steps = {*w.pair};
        replay.shared_edge = w.shared_edge;
    }
    j["identity"] = identity_terms_to_json(certificate_identity_terms(replay));
    return j;
}

inline NonuniformWitness nonuniform_witness_from_json(const Hypergraph& h, const Json& j) {
    NonuniformWitness w;
    w.kind = j.at("kind").get<std::string>() == "nonuniform_i" ? CertificateKind::condition_i
                                                               : CertificateKind::condition_ii;
    w.n = j.at("n").get<std::int64_t>();
    if (j.contains("proper_split")) w.proper_split = splitting_hit_from_json(h, j["proper_split"]);
    if (j.contains("pair")) {
        const Json& s = j["pair"];
        w.pair = CertificateStep{multiset_from_json(s.at("S")),
                                 decomposition_from_json(h, s.at("gamma")),
                                 multiset_from_json(s.at("R")),
                                 decomposition_from_json(h, s.at("upsilon")),
                                 bicolored_from_json(h, s.at("next_walk"))};
    }
    if (j.contains("shared_edge")) w.shared_edge = j["shared_edge"].get<EdgeId>();
    return w;
}

}  // namespace hypertoric
