#include "miskit/cli.hpp"

#include "miskit/conjugate.hpp"
#include "miskit/embed.hpp"
#include "miskit/generate.hpp"
#include "miskit/io.hpp"
#include "miskit/normalize.hpp"
#include "miskit/orthogonal.hpp"
#include "miskit/solve.hpp"
#include "miskit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace miskit::cli {

namespace {

using nlohmann::json;

struct IoOptions {
    std::string input_path;  // empty = stdin
    std::string output_path; // empty = stdout
    std::string format = "text";
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_input = true) {
    if (with_input)
        cmd->add_option("-i,--input", io.input_path, "input graph file (default: stdin)");
    cmd->add_option("-o,--output", io.output_path, "output file (default: stdout)");
    cmd->add_option("--format", io.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

GraphDocument read_document(const IoOptions& io, std::istream& fallback) {
    if (io.input_path.empty())
        return parse_graph(fallback);
    std::ifstream file(io.input_path);
    if (!file)
        throw std::invalid_argument("cannot open input file '" + io.input_path + "'");
    GraphDocument doc = parse_graph(file);
    doc.provenance = io.input_path;
    return doc;
}

/// Runs `body` with the destination stream, routing to a file when requested.
int with_output(const IoOptions& io, std::ostream& fallback,
                const std::function<int(std::ostream&)>& body) {
    if (io.output_path.empty())
        return body(fallback);
    std::ofstream file(io.output_path);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + io.output_path + "'");
    return body(file);
}

json graph_to_json(const WeightedGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["weights"] = g.weights();
    auto edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

json set_to_json(const VertexSet& s) { return json(s.members()); }

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    auto arr = json::array();
    for (auto [u, v] : pairs)
        arr.push_back({u, v});
    return arr;
}

int cmd_normalize(const IoOptions& io, std::istream& in, std::ostream& out) {
    GraphDocument doc = read_document(io, in);
    NormalizationMap map = normalize(doc.graph);
    return with_output(io, out, [&](std::ostream& os) {
        if (io.format == "json") {
            json j;
            auto classes = json::array();
            for (const auto& cls : map.partition.classes)
                classes.push_back(set_to_json(cls));
            j["classes"] = std::move(classes);
            j["quotient"] = graph_to_json(map.quotient);
            os << j.dump(2) << "\n";
        } else {
            os << emit_graph(GraphDocument{map.quotient, {}, {}});
        }
        return exit_ok;
    });
}

int cmd_pairs(const IoOptions& io, bool want_pairing, std::istream& in, std::ostream& out) {
    GraphDocument doc = read_document(io, in);
    return with_output(io, out, [&](std::ostream& os) {
        if (want_pairing) {
            auto pairing = find_pairing(doc.graph);
            if (io.format == "json") {
                json j;
                j["pairing"] = pairing ? pairs_to_json(pairing->pairs) : json(nullptr);
                os << j.dump(2) << "\n";
            } else if (pairing) {
                for (auto [u, v] : pairing->pairs)
                    os << u << " " << v << "\n";
            } else {
                os << "none\n";
            }
        } else {
            auto pairs = orthogonal_pairs(doc.graph);
            if (io.format == "json") {
                json j;
                j["pairs"] = pairs_to_json(pairs);
                os << j.dump(2) << "\n";
            } else {
                for (auto [u, v] : pairs)
                    os << u << " " << v << "\n";
            }
        }
        return exit_ok;
    });
}

int cmd_embed(const IoOptions& io, const std::string& mode, std::istream& in, std::ostream& out) {
    GraphDocument doc = read_document(io, in);
    EmbeddingInfo info = embed(doc.graph, mode == "full" ? EmbedMode::full : EmbedMode::minimal);
    return with_output(io, out, [&](std::ostream& os) {
        if (io.format == "json") {
            json j;
            j["graph"] = graph_to_json(info.embedded);
            j["added"] = set_to_json(info.added_vertices);
            j["pairing"] = pairs_to_json(info.pairing.pairs);
            os << j.dump(2) << "\n";
        } else {
            os << emit_graph(GraphDocument{info.embedded, {}, {}});
        }
        return exit_ok;
    });
}

int cmd_conjugate(const IoOptions& io, std::istream& in, std::ostream& out, std::ostream& err) {
    GraphDocument doc = read_document(io, in);
    auto pairing = find_pairing(doc.graph);
    if (!pairing) {
        err << "graph is not twin-orthogonal: no perfect orthogonal pairing exists\n";
        return exit_verification_failure;
    }
    ConjugateResult result = conjugate(doc.graph, *pairing);
    return with_output(io, out, [&](std::ostream& os) {
        if (io.format == "json") {
            json j;
            j["graph"] = graph_to_json(result.conjugate);
            j["pairing"] = pairs_to_json(result.pairing.pairs);
            os << j.dump(2) << "\n";
        } else {
            os << emit_graph(GraphDocument{result.conjugate, {}, {}});
        }
        return exit_ok;
    });
}

int cmd_solve(const IoOptions& io, const std::string& direction, const std::string& method,
              const std::string& embed_mode, bool parallel, bool force, bool stats,
              std::istream& in, std::ostream& out, std::ostream& err) {
    GraphDocument doc = read_document(io, in);

    SolveOptions options;
    options.parallel = parallel;
    options.override_guard = force;

    SolveResult result;
    if (method == "reduce") {
        if (direction == "min")
            throw CLI::ValidationError("--method reduce solves the maximum problem only");
        result = solve_via_reduction(
            doc.graph, embed_mode == "full" ? EmbedMode::full : EmbedMode::minimal, options);
    } else {
        options.method =
            method == "enumerate" ? SolveMethod::enumerate : SolveMethod::branch_and_bound;
        result = solve(doc.graph, direction == "max" ? Direction::max : Direction::min, options);
    }

    if (stats) {
        err << "nodes " << result.stats.nodes << "\n";
        err << "sets " << result.stats.sets << "\n";
        err << "elapsed " << result.stats.elapsed_seconds << "\n";
        if (method == "reduce")
            err << "pipeline " << result.stats.source_vertices << " -> "
                << result.stats.quotient_vertices << " -> " << result.stats.embedded_vertices
                << "\n";
    }

    return with_output(io, out, [&](std::ostream& os) {
        if (io.format == "json") {
            json j;
            j["direction"] = direction;
            j["set"] = set_to_json(result.set);
            j["weight"] = result.weight;
            os << j.dump(2) << "\n";
        } else {
            os << "weight " << result.weight << "\n";
            os << "set " << format_set(result.set) << "\n";
        }
        return exit_ok;
    });
}

int cmd_enumerate(const IoOptions& io, std::uint64_t limit, bool force, std::istream& in,
                  std::ostream& out) {
    GraphDocument doc = read_document(io, in);
    return with_output(io, out, [&](std::ostream& os) {
        std::uint64_t count = 0;
        if (io.format == "json") {
            auto sets = json::array();
            if (limit > 0)
                enumerate_mis(
                    doc.graph,
                    [&](const VertexSet& s) {
                        sets.push_back(set_to_json(s));
                        return ++count < limit;
                    },
                    force);
            json j;
            j["count"] = sets.size();
            j["sets"] = std::move(sets);
            os << j.dump(2) << "\n";
        } else if (limit > 0) {
            enumerate_mis(
                doc.graph,
                [&](const VertexSet& s) {
                    os << format_set(s) << "\n";
                    return ++count < limit;
                },
                force);
        }
        return exit_ok;
    });
}

int cmd_gen(const IoOptions& io, const std::string& kind, int n, double p, std::uint64_t wmin,
            std::uint64_t wmax, std::uint64_t seed, std::ostream& out) {
    GenParams params;
    params.n = n;
    params.edge_probability = p;
    params.weight_min = wmin;
    params.weight_max = wmax;
    GraphDocument doc = generate(gen_kind_from_string(kind), params, seed);
    return with_output(io, out, [&](std::ostream& os) {
        os << emit_graph(doc);
        return exit_ok;
    });
}

int cmd_verify(const IoOptions& io, const std::string& theorems, bool force, std::istream& in,
               std::ostream& out) {
    GraphDocument doc = read_document(io, in);
    std::vector<std::string> scope;
    if (theorems != "all") {
        std::istringstream ss(theorems);
        std::string id;
        while (std::getline(ss, id, ','))
            if (!id.empty())
                scope.push_back(id);
    }
    VerificationReport report = verify(doc, scope, force);
    int code = with_output(io, out, [&](std::ostream& os) {
        if (io.format == "json") {
            json j;
            auto checks = json::array();
            for (const auto& c : report.checks) {
                json e;
                e["id"] = c.id;
                e["name"] = c.name;
                e["status"] = c.status == CheckResult::Status::pass      ? "pass"
                              : c.status == CheckResult::Status::fail    ? "fail"
                                                                         : "skipped";
                e["detail"] = c.detail;
                checks.push_back(std::move(e));
            }
            j["checks"] = std::move(checks);
            j["summary"] = {{"passed", report.passed()},
                            {"failed", report.failed()},
                            {"skipped", report.skipped()}};
            os << j.dump(2) << "\n";
        } else {
            for (const auto& c : report.checks) {
                const char* tag = c.status == CheckResult::Status::pass      ? "PASS"
                                  : c.status == CheckResult::Status::fail    ? "FAIL"
                                                                             : "SKIP";
                os << tag << " " << c.id << " " << c.name;
                if (!c.detail.empty())
                    os << " -- " << c.detail;
                os << "\n";
            }
            os << "passed " << report.passed() << ", failed " << report.failed() << ", skipped "
               << report.skipped() << "\n";
        }
        return exit_ok;
    });
    if (code != exit_ok)
        return code;
    return report.ok() ? exit_ok : exit_verification_failure;
}

int cmd_dot(const IoOptions& io, bool highlight_max, bool show_pairing, std::istream& in,
            std::ostream& out) {
    GraphDocument doc = read_document(io, in);
    DotAnnotations annotations;
    if (highlight_max)
        annotations.highlight = solve_max(doc.graph).set;
    if (show_pairing) {
        if (auto pairing = find_pairing(doc.graph))
            annotations.pair_edges = pairing->pairs;
    }
    return with_output(io, out, [&](std::ostream& os) {
        os << emit_dot(doc, annotations);
        return exit_ok;
    });
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"weighted maximal-independent-set toolkit"};
    app.require_subcommand(1);

    IoOptions io;

    auto* normalize_cmd =
        app.add_subcommand("normalize", "quotient a graph by its twin classes");
    add_io_options(normalize_cmd, io);

    auto* pairs_cmd = app.add_subcommand("pairs", "list orthogonal pairs");
    bool want_pairing = false;
    pairs_cmd->add_flag("--pairing", want_pairing, "find a perfect orthogonal pairing instead");
    add_io_options(pairs_cmd, io);

    auto* embed_cmd = app.add_subcommand("embed", "embed into a twin-orthogonal supergraph");
    std::string embed_mode = "full";
    embed_cmd->add_option("--mode", embed_mode, "pendant construction")
        ->check(CLI::IsMember({"full", "minimal"}));
    add_io_options(embed_cmd, io);

    auto* conjugate_cmd = app.add_subcommand("conjugate", "conjugate a twin-orthogonal graph");
    add_io_options(conjugate_cmd, io);

    auto* solve_cmd = app.add_subcommand("solve", "find an extremal-weight MIS");
    std::string direction = "max";
    std::string method = "bnb";
    std::string solve_embed_mode = "full";
    bool parallel = false;
    bool solve_force = false;
    bool stats = false;
    solve_cmd->add_option("--direction", direction, "objective direction")
        ->check(CLI::IsMember({"max", "min"}));
    solve_cmd->add_option("--method", method, "solution method")
        ->check(CLI::IsMember({"enumerate", "bnb", "reduce"}));
    solve_cmd->add_option("--embed-mode", solve_embed_mode, "pendant construction for reduce")
        ->check(CLI::IsMember({"full", "minimal"}));
    solve_cmd->add_flag("--parallel", parallel, "split branch subtrees across threads");
    solve_cmd->add_flag("--force", solve_force, "lift the enumeration capacity guard");
    solve_cmd->add_flag("--stats", stats, "print search statistics to stderr");
    add_io_options(solve_cmd, io);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "stream every MIS");
    std::uint64_t limit = UINT64_MAX;
    bool enum_force = false;
    enumerate_cmd->add_option("--limit", limit, "stop after this many sets");
    enumerate_cmd->add_flag("--force", enum_force, "lift the enumeration capacity guard");
    add_io_options(enumerate_cmd, io);

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    std::string kind = "random";
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t wmin = 0, wmax = 9, seed = 0;
    gen_cmd->add_option("--kind", kind, "instance family")
        ->check(CLI::IsMember({"random", "moon-moser", "twin-ortho", "trivial-twin-ortho"}));
    gen_cmd->add_option("--n", gen_n, "vertex count (base size for twin-ortho kinds)")
        ->required();
    gen_cmd->add_option("--p", gen_p, "edge probability");
    gen_cmd->add_option("--wmin", wmin, "minimum vertex weight");
    gen_cmd->add_option("--wmax", wmax, "maximum vertex weight");
    gen_cmd->add_option("--seed", seed, "random seed");
    add_io_options(gen_cmd, io, /*with_input=*/false);

    auto* verify_cmd = app.add_subcommand("verify", "run structural property checks");
    std::string theorems = "all";
    bool verify_force = false;
    verify_cmd->add_option("--theorems", theorems, "all or a comma-separated id list");
    verify_cmd->add_flag("--force", verify_force, "lift the enumeration capacity guard");
    add_io_options(verify_cmd, io);

    auto* dot_cmd = app.add_subcommand("dot", "export to DOT");
    bool highlight_max = false;
    bool show_pairing = false;
    dot_cmd->add_flag("--solution", highlight_max, "highlight a maximum-weight MIS");
    dot_cmd->add_flag("--pairing", show_pairing, "draw pairing edges bold");
    add_io_options(dot_cmd, io);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (normalize_cmd->parsed())
            return cmd_normalize(io, in, out);
        if (pairs_cmd->parsed())
            return cmd_pairs(io, want_pairing, in, out);
        if (embed_cmd->parsed())
            return cmd_embed(io, embed_mode, in, out);
        if (conjugate_cmd->parsed())
            return cmd_conjugate(io, in, out, err);
        if (solve_cmd->parsed())
            return cmd_solve(io, direction, method, solve_embed_mode, parallel, solve_force,
                             stats, in, out, err);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(io, limit, enum_force, in, out);
        if (gen_cmd->parsed())
            return cmd_gen(io, kind, gen_n, gen_p, wmin, wmax, seed, out);
        if (verify_cmd->parsed())
            return cmd_verify(io, theorems, verify_force, in, out);
        if (dot_cmd->parsed())
            return cmd_dot(io, highlight_max, show_pairing, in, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const capacity_error& e) {
        err << e.what() << "\n";
        return exit_capacity;
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const graph_error& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace miskit::cli
