#include "domideal/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domideal/domination.hpp"
#include "domideal/errors.hpp"
#include "domideal/graph.hpp"
#include "domideal/ideal.hpp"
#include "domideal/serialize.hpp"
#include "domideal/theorems.hpp"

namespace domideal {

namespace {

constexpr int kFormatVersion = 1;

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest(std::string_view canonical) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(canonical);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) {
    return parse_edge_list(read_file(path));
}

void emit_envelope(std::ostream& out, const std::string& command, std::string_view canonical,
                   nlohmann::json payload) {
    nlohmann::json env{{"command", command},
                       {"format_version", kFormatVersion},
                       {"input_digest", digest(canonical)},
                       {"payload", std::move(payload)}};
    out << env.dump(2) << '\n';
}

nlohmann::json matching_to_json(const Matching& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, b] : m.pairs) arr.push_back(nlohmann::json::array({a + 1, b + 1}));
    return arr;
}

// --- plain computation commands ---------------------------------------------

int do_ideal(const std::string& file, bool json_mode, std::ostream& out) {
    Graph g = load_graph(file);
    MonomialIdeal ideal = closed_neighborhood_ideal(g);
    if (json_mode) {
        emit_envelope(out, "ideal", to_edge_list(g), ideal_to_json(ideal));
    } else {
        out << render_ideal(ideal) << '\n';
    }
    return 0;
}

int do_decompose(const std::string& file, bool json_mode, bool count_only, std::ostream& out) {
    Graph g = load_graph(file);
    Decomposition decomp = irreducible_decomposition(closed_neighborhood_ideal(g));
    if (json_mode) {
        nlohmann::json payload{{"nvars", decomp.nvars},
                               {"count", decomp.components.size()},
                               {"components", antichain_to_json(decomp.components)}};
        emit_envelope(out, "decompose", to_edge_list(g), std::move(payload));
    } else if (count_only) {
        out << decomp.components.size() << '\n';
    } else {
        for (const VertexSet& c : decomp.components) out << render_component(c) << '\n';
    }
    return 0;
}

int do_domsets(const std::string& file, bool json_mode, bool count_only, bool cross_check,
               std::ostream& out) {
    Graph g = load_graph(file);
    Antichain sets = minimal_dominating_sets(g);
    if (cross_check) {
        if (g.vertex_count() > 16) {
            throw ScaleLimitError("--check-against-bruteforce requires at most 16 vertices");
        }
        Antichain brute = minimal_dominating_sets(g, TransversalEngine::BruteForce);
        if (sets != brute) {
            throw std::logic_error("transversal engines disagree; this is a bug");
        }
    }
    if (json_mode) {
        nlohmann::json payload{{"nvars", g.vertex_count()},
                               {"count", sets.size()},
                               {"sets", antichain_to_json(sets)}};
        if (cross_check) payload["engines_agree"] = true;
        emit_envelope(out, "domsets", to_edge_list(g), std::move(payload));
    } else if (count_only) {
        out << sets.size() << '\n';
    } else {
        for (const VertexSet& s : sets) out << render_vertex_set(s) << '\n';
    }
    return 0;
}

// --- check -------------------------------------------------------------------

int do_check(const std::string& which, const std::string& file, bool json_mode, std::ostream& out) {
    Graph g = load_graph(file);
    std::string status;
    std::string note;
    nlohmann::json extra;
    int code = 0;

    if (which == "unmixed") {
        bool holds = is_domination_unmixed(g);
        status = holds ? "true" : "false";
        code = holds ? 0 : 1;
    } else if (which == "corona") {
        auto pairing = recognize_corona(g);
        status = pairing ? "true" : "false";
        code = pairing ? 0 : 1;
        if (pairing) extra["pairing"] = matching_to_json(*pairing);
    } else if (which == "ci") {
        bool holds = is_complete_intersection(closed_neighborhood_ideal(g));
        status = holds ? "true" : "false";
        code = holds ? 0 : 1;
    } else {  // cm
        if (!is_tree(g)) {
            CMStatus s = cm_status_of_tree(g);
            status = to_string(s.status);  // NotApplicable
            note = s.note;
            code = 3;
        } else {
            CMStatus s = cm_status_of_tree(g);
            status = to_string(s.status);
            note = s.note;
            code = (s.status == CMClass::CompleteIntersection) ? 0 : 1;
        }
    }

    if (json_mode) {
        nlohmann::json payload{{"check", which}, {"status", status}, {"exit_code", code}};
        if (!note.empty()) payload["note"] = note;
        for (auto& [key, value] : extra.items()) payload[key] = value;
        emit_envelope(out, "check", to_edge_list(g), std::move(payload));
    } else {
        out << status << '\n';
    }
    return code;
}

// --- verify --------------------------------------------------------------------

struct VerifyOptions {
    std::string claim;
    std::string file;
    int trees_exhaustive = 0;
    int random_count = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int size = 10;
    bool json_mode = false;
};

const std::vector<std::string>& all_claims() {
    static const std::vector<std::string> claims{
        "decomposition",     "ideal-equality", "corona-proposition",
        "vertex-cover-lemma", "matching-lemma", "tree-theorem",
    };
    return claims;
}

VerdictReport run_graph_claim(const std::string& claim, const Graph& g) {
    if (claim == "decomposition") return verify_decomposition(g);
    if (claim == "ideal-equality") return verify_ideal_equality_corollary(g, g);
    if (claim == "corona-proposition") return verify_corona_proposition(g);
    if (claim == "vertex-cover-lemma") return verify_vertex_cover_lemma(g);
    if (claim == "matching-lemma") return verify_matching_lemma(g);
    if (claim == "tree-theorem") return verify_tree_theorem(g);
    throw std::invalid_argument("unknown claim: " + claim);
}

int do_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> claims;
    if (opt.claim == "all") {
        claims = all_claims();
    } else {
        claims.push_back(opt.claim);
    }

    bool has_corpus = !opt.file.empty() || opt.trees_exhaustive > 0 || opt.random_count > 0;
    if (!has_corpus) {
        err << "error: verify needs a corpus (graph file, --trees-exhaustive, or --random)\n";
        return 2;
    }
    if (opt.random_count > 0 && !opt.seed_set) {
        err << "error: --random requires an explicit --seed\n";
        return 2;
    }
    if (opt.trees_exhaustive > 0 && opt.claim == "ideal-equality") {
        err << "error: ideal-equality has no exhaustive tree corpus; use a file or --random\n";
        return 2;
    }

    std::optional<Graph> file_graph;
    std::string canonical = "claim=" + opt.claim;
    if (!opt.file.empty()) {
        file_graph = load_graph(opt.file);
        canonical += ";graph=" + to_edge_list(*file_graph);
    }
    if (opt.trees_exhaustive > 0) canonical += ";trees=" + std::to_string(opt.trees_exhaustive);
    if (opt.random_count > 0) {
        canonical += ";random=" + std::to_string(opt.random_count) +
                     ";seed=" + std::to_string(opt.seed) + ";size=" + std::to_string(opt.size);
    }

    std::vector<SweepReport> reports;
    std::vector<std::string> lines;

    for (const std::string& claim : claims) {
        SweepReport report;
        report.claim = claim;

        if (file_graph) {
            bool needs_tree = (claim == "tree-theorem");
            if (needs_tree && !is_tree(*file_graph)) {
                if (opt.claim != "all") {
                    err << "error: tree-theorem requires a tree input\n";
                    return 2;
                }
                lines.push_back("claim=" + claim + " corpus=file skipped (not a tree)");
            } else {
                SweepReport part;
                part.claim = claim;
                part.add(run_graph_claim(claim, *file_graph));
                lines.push_back("claim=" + claim + " corpus=file instances=1 passes=" +
                                std::to_string(part.passes) + " vacuous=" + std::to_string(part.vacuous) +
                                " failures=" + std::to_string(part.failures.size()));
                report.merge(part);
            }
        }

        if (opt.trees_exhaustive > 0 && claim != "ideal-equality") {
            for (int n = 1; n <= opt.trees_exhaustive; ++n) {
                SweepReport part = sweep_trees(claim, n, [&](const Graph& t) {
                    return run_graph_claim(claim, t);
                });
                lines.push_back("claim=" + claim + " corpus=trees n=" + std::to_string(n) +
                                " instances=" + std::to_string(part.instances) +
                                " passes=" + std::to_string(part.passes) +
                                " vacuous=" + std::to_string(part.vacuous) +
                                " failures=" + std::to_string(part.failures.size()));
                report.merge(part);
            }
        }

        if (opt.random_count > 0) {
            SplitMix64 master(opt.seed);
            SweepReport part;
            part.claim = claim;
            for (int i = 0; i < opt.random_count; ++i) {
                std::uint64_t sub = master.next();
                int n = 1 + static_cast<int>(master.below(static_cast<std::uint64_t>(opt.size)));
                if (claim == "tree-theorem") {
                    part.add(verify_tree_theorem(random_tree(n, sub)));
                } else if (claim == "ideal-equality") {
                    Graph g = file_graph ? *file_graph : random_graph(n, sub);
                    Graph h = random_graph(g.vertex_count(), master.next());
                    part.add(verify_ideal_equality_corollary(g, h));
                } else {
                    part.add(run_graph_claim(claim, random_graph(n, sub)));
                }
            }
            lines.push_back("claim=" + claim + " corpus=random k=" + std::to_string(opt.random_count) +
                            " seed=" + std::to_string(opt.seed) + " size=" + std::to_string(opt.size) +
                            " instances=" + std::to_string(part.instances) +
                            " passes=" + std::to_string(part.passes) +
                            " vacuous=" + std::to_string(part.vacuous) +
                            " failures=" + std::to_string(part.failures.size()));
            report.merge(part);
        }

        lines.push_back("claim=" + claim + " total instances=" + std::to_string(report.instances) +
                        " passes=" + std::to_string(report.passes) +
                        " vacuous=" + std::to_string(report.vacuous) +
                        " failures=" + std::to_string(report.failures.size()));
        reports.push_back(std::move(report));
    }

    std::uint64_t total_failures = 0;
    for (const SweepReport& r : reports) total_failures += r.failures.size();

    if (opt.json_mode) {
        if (reports.size() == 1) {
            emit_envelope(out, "verify", canonical, sweep_to_json(reports.front()));
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const SweepReport& r : reports) arr.push_back(sweep_to_json(r));
            emit_envelope(out, "verify", canonical, nlohmann::json{{"reports", arr}});
        }
    } else {
        for (const std::string& line : lines) out << line << '\n';
        for (const SweepReport& r : reports) {
            for (const nlohmann::json& w : r.failures) {
                out << "failure claim=" << r.claim << " witness=" << w.dump() << '\n';
            }
        }
    }
    return total_failures == 0 ? 0 : 1;
}

// --- gen -----------------------------------------------------------------------

int do_gen_tree(int n, std::uint64_t seed, std::ostream& out) {
    out << to_edge_list(random_tree(n, seed));
    return 0;
}

int do_gen_corona(const std::string& of_file, std::ostream& out) {
    Graph base = load_graph(of_file);
    out << to_edge_list(corona(base));
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"closed neighborhood ideals, dominating sets, and Cohen-Macaulay checks for trees",
                 "domideal"};
    app.require_subcommand(1);

    std::string file;
    bool json_mode = false;
    bool count_only = false;
    bool cross_check = false;

    auto* cmd_ideal = app.add_subcommand("ideal", "minimal generators of the closed neighborhood ideal");
    cmd_ideal->add_option("file", file, "graph edge-list file")->required();
    cmd_ideal->add_flag("--json", json_mode, "emit a JSON envelope");

    auto* cmd_decompose =
        app.add_subcommand("decompose", "irredundant irreducible decomposition of the ideal");
    cmd_decompose->add_option("file", file, "graph edge-list file")->required();
    cmd_decompose->add_flag("--json", json_mode, "emit a JSON envelope");
    cmd_decompose->add_flag("--count", count_only, "print only the number of components");

    auto* cmd_domsets = app.add_subcommand("domsets", "minimal dominating sets");
    cmd_domsets->add_option("file", file, "graph edge-list file")->required();
    cmd_domsets->add_flag("--json", json_mode, "emit a JSON envelope");
    cmd_domsets->add_flag("--count", count_only, "print only the number of sets");
    cmd_domsets->add_flag("--check-against-bruteforce", cross_check,
                          "cross-validate the two enumeration engines (n <= 16)");

    std::string which;
    auto* cmd_check = app.add_subcommand("check", "decide a structural property");
    cmd_check->add_option("which", which, "unmixed|corona|ci|cm")
        ->required()
        ->check(CLI::IsMember({"unmixed", "corona", "ci", "cm"}));
    cmd_check->add_option("file", file, "graph edge-list file")->required();
    cmd_check->add_flag("--json", json_mode, "emit a JSON envelope");

    VerifyOptions vopt;
    auto* cmd_verify = app.add_subcommand("verify", "run a verifier over a corpus");
    {
        std::vector<std::string> ids = all_claims();
        ids.push_back("all");
        cmd_verify->add_option("claim", vopt.claim, "claim id or 'all'")
            ->required()
            ->check(CLI::IsMember(ids));
    }
    cmd_verify->add_option("file", vopt.file, "graph edge-list file");
    cmd_verify->add_flag("--json", vopt.json_mode, "emit a JSON envelope");
    cmd_verify->add_option("--trees-exhaustive", vopt.trees_exhaustive,
                           "sweep every labeled tree with up to N vertices")
        ->check(CLI::Range(1, 10));
    cmd_verify->add_option("--random", vopt.random_count, "number of random instances")
        ->check(CLI::PositiveNumber);
    auto* seed_opt = cmd_verify->add_option("--seed", vopt.seed, "PRNG seed (required with --random)");
    cmd_verify->add_option("--size", vopt.size, "maximum vertex count of random instances")
        ->check(CLI::Range(1, 20));

    std::string kind;
    std::string of_file;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    auto* cmd_gen = app.add_subcommand("gen", "emit a graph in edge-list format");
    cmd_gen->add_option("kind", kind, "tree|corona")
        ->required()
        ->check(CLI::IsMember({"tree", "corona"}));
    cmd_gen->add_option("--n", gen_n, "vertex count (tree)");
    auto* gen_seed_opt = cmd_gen->add_option("--seed", gen_seed, "PRNG seed (tree)");
    cmd_gen->add_option("--of", of_file, "base graph file (corona)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("domideal");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    vopt.seed_set = seed_opt->count() > 0;

    try {
        if (cmd_ideal->parsed()) return do_ideal(file, json_mode, out);
        if (cmd_decompose->parsed()) return do_decompose(file, json_mode, count_only, out);
        if (cmd_domsets->parsed()) return do_domsets(file, json_mode, count_only, cross_check, out);
        if (cmd_check->parsed()) return do_check(which, file, json_mode, out);
        if (cmd_verify->parsed()) return do_verify(vopt, out, err);
        if (cmd_gen->parsed()) {
            if (kind == "tree") {
                if (gen_n < 1 || gen_seed_opt->count() == 0) {
                    err << "error: gen tree requires --n and an explicit --seed\n";
                    return 2;
                }
                return do_gen_tree(gen_n, gen_seed, out);
            }
            if (of_file.empty()) {
                err << "error: gen corona requires --of <base graph file>\n";
                return 2;
            }
            return do_gen_corona(of_file, out);
        }
        err << "error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ScaleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace domideal
