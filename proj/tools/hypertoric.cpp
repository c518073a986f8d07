// Command-line front end: construct the named hypergraph families, compute
// Graver/Markov bases and widths, run indispensability and splitting-set
// searches, emit degree-bound certificates, and re-verify serialized
// certificates. All results are JSON objects on standard output so the
// subcommands compose through pipes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <hypertoric/hypertoric.hpp>

namespace {

using namespace hypertoric;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitIncomplete = 3;

Json read_json_source(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return Json::parse(buffer.str());
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

Hypergraph load_hypergraph(const std::string& path) {
    Json j = read_json_source(path);
    if (j.contains("schema") && j["schema"] == "walk" && j.contains("hypergraph"))
        return hypergraph_from_json(j["hypergraph"]);
    return hypergraph_from_json(j);
}

struct WalkSource {
    Json json;
    bool has_embedded_hypergraph() const {
        return json.contains("hypergraph");
    }
};

void emit(Json j, const std::optional<std::int64_t>& seed) {
    if (seed) j["seed"] = *seed;
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for toric ideals of hypergraphs"};
    app.require_subcommand(1);

    std::optional<std::int64_t> seed;
    bool strict = false;
    app.add_option("--seed", seed, "recorded in the output; searches are deterministic");
    app.add_flag("--strict", strict, "exit 3 when a result is limited by its caps");

    std::string input_path;
    std::string walk_path;
    std::string binomial_path;
    std::int64_t degree_cap = 6;
    std::int64_t size_cap = -1;
    std::int64_t mult_cap = 2;
    std::int64_t sequence_cap = 3;
    std::int64_t bound_degree = 2;
    bool reverse_ties = false;
    bool walk_support_only = false;

    auto* graver_cmd = app.add_subcommand("graver", "primitive balanced edge sets within a cap");
    graver_cmd->add_option("input", input_path, "hypergraph JSON (default: stdin)");
    graver_cmd->add_option("--cap", degree_cap, "degree cap")->capture_default_str();

    auto* markov_cmd = app.add_subcommand("markov", "minimal generating set within a cap");
    markov_cmd->add_option("input", input_path, "hypergraph JSON (default: stdin)");
    markov_cmd->add_option("--cap", degree_cap, "degree cap")->capture_default_str();
    markov_cmd->add_flag("--reverse-ties", reverse_ties, "reverse the candidate tie-breaking order");

    auto* width_cmd = app.add_subcommand("width", "largest degree in the minimal generating set");
    width_cmd->add_option("input", input_path, "hypergraph JSON (default: stdin)");
    width_cmd->add_option("--cap", degree_cap, "degree cap")->capture_default_str();

    auto* indis_cmd = app.add_subcommand("indispensable",
                                         "whether a binomial sits in every generating set");
    indis_cmd->add_option("input", input_path, "hypergraph JSON (default: stdin)");
    indis_cmd->add_option("--binomial", binomial_path, "binomial JSON file")->required();
    indis_cmd->add_option("--cap", degree_cap, "fiber enumeration cap")->capture_default_str();

    auto* split_cmd = app.add_subcommand("split", "splitting sets of a walk with witnesses");
    split_cmd->add_option("input", input_path, "hypergraph JSON (default: stdin)");
    split_cmd->add_option("--walk", walk_path, "walk JSON file")->required();
    split_cmd->add_option("--size-cap", size_cap, "max splitting set size (default: |walk|/2 - 1)");
    split_cmd->add_option("--mult-cap", mult_cap, "max per-edge multiplicity")->capture_default_str();
    split_cmd->add_flag("--walk-support-only", walk_support_only,
                        "restrict candidate edges to the walk's support");

    auto* certify_cmd = app.add_subcommand("certify", "degree-bound rewriting certificate");
    certify_cmd->add_option("input", input_path, "hypergraph JSON (default: stdin)");
    certify_cmd->add_option("--walk", walk_path, "walk JSON file")->required();
    certify_cmd->add_option("--degree", bound_degree, "target generation degree")
        ->capture_default_str();
    certify_cmd->add_option("--size-cap", size_cap, "splitting set size cap");
    certify_cmd->add_option("--mult-cap", mult_cap, "per-edge multiplicity cap")
        ->capture_default_str();
    certify_cmd->add_option("--sequence-cap", sequence_cap, "max length of the pair sequence")
        ->capture_default_str();

    std::string family_name;
    std::vector<std::int64_t> family_params;
    bool family_full = false;
    auto* family_cmd = app.add_subcommand("family", "emit a named hypergraph or walk");
    family_cmd
        ->add_option("name", family_name, "kpartite | no3way | groupbased16 | cumulant | slimwalk")
        ->required();
    family_cmd->add_option("params", family_params, "integer parameters");
    family_cmd->add_flag("--full", family_full, "cumulant: all subsets of size >= 2");

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-check a serialized certificate");
    verify_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (graver_cmd->parsed()) {
            Hypergraph h = load_hypergraph(input_path);
            GraverBasis basis = graver_basis(h, degree_cap);
            emit(basis_to_json("graver", basis.elements, basis.degree_cap, std::nullopt, false),
                 seed);
            return 0;
        }

        if (markov_cmd->parsed() || width_cmd->parsed()) {
            Hypergraph h = load_hypergraph(input_path);
            MarkovBasis basis =
                markov_basis(h, degree_cap, reverse_ties ? TieBreak::reverse_lex : TieBreak::lex);
            if (markov_cmd->parsed()) {
                emit(basis_to_json("markov", basis.elements, basis.degree_cap, basis.max_degree,
                                   basis.truncated),
                     seed);
            } else {
                Json j;
                j["schema"] = "width";
                j["width"] = basis.max_degree;
                j["complete_to_degree"] = basis.degree_cap;
                j["truncated"] = basis.truncated;
                emit(j, seed);
            }
            return basis.truncated && strict ? kExitIncomplete : 0;
        }

        if (indis_cmd->parsed()) {
            Hypergraph h = load_hypergraph(input_path);
            Binomial b = binomial_from_json(read_json_source(binomial_path));
            bool value = is_indispensable(h, b, degree_cap);
            Json j;
            j["schema"] = "indispensable";
            j["binomial"] = binomial_to_json(b);
            j["value"] = value;
            j["fiber_cap"] = degree_cap;
            emit(j, seed);
            return 0;
        }

        if (split_cmd->parsed()) {
            Json walk_json = read_json_source(walk_path);
            Hypergraph h = !input_path.empty() || !walk_json.contains("hypergraph")
                               ? load_hypergraph(input_path)
                               : hypergraph_from_json(walk_json["hypergraph"]);
            BalancedEdgeSet walk = walk_from_json(h, walk_json);
            if (size_cap < 0) size_cap = std::max<std::int64_t>(walk.size() / 2 - 1, 1);
            std::optional<std::vector<EdgeId>> universe;
            if (walk_support_only) {
                universe.emplace();
                const Multiset support = union_of(walk.blue, walk.red);
                for (const auto& [e, mult] : support.entries()) universe->push_back(e);
            }
            auto hits = find_splitting_sets(walk, size_cap, mult_cap,
                                            universe ? &*universe : nullptr);
            Json j;
            j["schema"] = "splittings";
            j["walk"] = walk_to_json(walk);
            j["size_cap"] = size_cap;
            j["mult_cap"] = mult_cap;
            j["count"] = hits.size();
            j["results"] = Json::array();
            for (const auto& hit : hits) j["results"].push_back(splitting_hit_to_json(hit));
            emit(j, seed);
            return 0;
        }

        if (certify_cmd->parsed()) {
            Json walk_json = read_json_source(walk_path);
            Hypergraph h = !input_path.empty() || !walk_json.contains("hypergraph")
                               ? load_hypergraph(input_path)
                               : hypergraph_from_json(walk_json["hypergraph"]);
            BalancedEdgeSet walk = walk_from_json(h, walk_json);
            if (is_uniform(h)) {
                SearchCaps caps{size_cap, mult_cap, sequence_cap};
                auto cert = find_degree_certificate(walk, bound_degree, caps);
                if (cert) {
                    emit(certificate_to_json(*cert), seed);
                    return 0;
                }
                Json j;
                j["schema"] = "certificate";
                j["found"] = false;
                j["degree_bound"] = bound_degree;
                Json caps_json;
                caps_json["size_cap"] = caps.size_cap;
                caps_json["mult_cap"] = caps.mult_cap;
                caps_json["sequence_cap"] = caps.sequence_cap;
                j["caps"] = caps_json;
                j["note"] = "absence under these caps does not refute the bound";
                emit(j, seed);
                return strict ? kExitIncomplete : 0;
            }
            auto witness = check_nonuniform_conditions(walk, mult_cap);
            if (witness) {
                emit(nonuniform_witness_to_json(walk, *witness), seed);
                return 0;
            }
            Json j;
            j["schema"] = "certificate";
            j["found"] = false;
            j["n"] = walk.blue.size();
            j["mult_cap"] = mult_cap;
            j["note"] = "absence under these caps does not refute the bound";
            emit(j, seed);
            return strict ? kExitIncomplete : 0;
        }

        if (family_cmd->parsed()) {
            auto need = [&](std::size_t count) {
                if (family_params.size() != count)
                    throw std::runtime_error("family " + family_name + " expects " +
                                             std::to_string(count) + " parameters");
            };
            if (family_name == "kpartite") {
                need(2);
                emit(hypergraph_to_json(complete_kpartite(family_params[0], family_params[1])),
                     seed);
            } else if (family_name == "no3way") {
                need(3);
                emit(hypergraph_to_json(
                         no_three_way(family_params[0], family_params[1], family_params[2])),
                     seed);
            } else if (family_name == "groupbased16") {
                need(0);
                emit(hypergraph_to_json(group_based_16()), seed);
            } else if (family_name == "cumulant") {
                need(1);
                emit(hypergraph_to_json(cumulant_hypergraph(family_params[0], family_full)), seed);
            } else if (family_name == "slimwalk") {
                need(2);
                Hypergraph h = no_three_way(2, family_params[0], family_params[1]);
                BalancedEdgeSet walk = slim_table_walk(h, family_params[0], family_params[1]);
                emit(walk_to_json(walk, /*embed_hypergraph=*/true), seed);
            } else {
                throw std::runtime_error("unknown family " + family_name);
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            Json j = read_json_source(cert_path);
            if (!j.contains("schema") || j["schema"] != "certificate" || !j.contains("hypergraph"))
                throw std::runtime_error("not a certificate object");
            Hypergraph h = hypergraph_from_json(j["hypergraph"]);
            std::string kind = j.at("kind").get<std::string>();
            std::optional<std::string> failure;
            if (kind == "condition_i" || kind == "condition_ii") {
                failure = verify_degree_certificate(certificate_from_json(h, j));
            } else if (kind == "nonuniform_i" || kind == "nonuniform_ii") {
                BalancedEdgeSet walk = bicolored_from_json(h, j.at("walk"));
                failure = verify_nonuniform_witness(walk, nonuniform_witness_from_json(h, j));
            } else {
                throw std::runtime_error("unknown certificate kind " + kind);
            }
            Json out;
            out["schema"] = "verification";
            out["valid"] = !failure.has_value();
            if (failure) out["reason"] = *failure;
            emit(out, seed);
            return failure ? kExitVerifyFailed : 0;
        }
    } catch (const std::exception& ex) {
        Json err;
        err["schema"] = "error";
        err["message"] = ex.what();
        std::cerr << err.dump(2) << "\n";
        return kExitParseError;
    }
    return kExitParseError;
}
