#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "miskit/cli.hpp"

#include <sstream>

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = miskit::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kPath4 = "graph 4\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\n";

} // namespace

TEST_CASE("solve reports weight and set") {
    auto r = run_cli({"solve", "--direction", "max"}, kPath4);
    CHECK(r.code == 0);
    CHECK(r.out == "weight 2\nset {0, 2}\n");

    auto json = run_cli({"solve", "--format", "json"}, kPath4);
    CHECK(json.code == 0);
    // golden bytes: keys are emitted in sorted order
    CHECK(json.out == "{\n"
                      "  \"direction\": \"max\",\n"
                      "  \"set\": [\n"
                      "    0,\n"
                      "    2\n"
                      "  ],\n"
                      "  \"weight\": 2\n"
                      "}\n");
}

TEST_CASE("solve via reduction matches the direct method") {
    auto direct = run_cli({"solve"}, kPath4);
    auto reduced = run_cli({"solve", "--method", "reduce"}, kPath4);
    CHECK(direct.code == 0);
    CHECK(reduced.code == 0);
    CHECK(direct.out.substr(0, direct.out.find('\n')) ==
          reduced.out.substr(0, reduced.out.find('\n')));

    auto bad = run_cli({"solve", "--method", "reduce", "--direction", "min"}, kPath4);
    CHECK(bad.code == miskit::cli::exit_usage);
}

TEST_CASE("enumerate streams sets in order") {
    auto r = run_cli({"enumerate"}, kPath4);
    CHECK(r.code == 0);
    CHECK(r.out == "{0, 2}\n{0, 3}\n{1, 3}\n");

    auto limited = run_cli({"enumerate", "--limit", "2"}, kPath4);
    CHECK(limited.out == "{0, 2}\n{0, 3}\n");
}

TEST_CASE("normalize emits the quotient graph") {
    std::string c4 = "graph 4\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n";
    auto r = run_cli({"normalize"}, c4);
    CHECK(r.code == 0);
    CHECK(r.out == "graph 2\nv 0 2\nv 1 2\ne 0 1\n");

    auto j = run_cli({"normalize", "--format", "json"}, c4);
    CHECK(j.out.find("\"classes\"") != std::string::npos);
}

TEST_CASE("pairs and pairing") {
    auto pairs = run_cli({"pairs"}, kPath4);
    CHECK(pairs.out == "0 1\n2 3\n");

    auto pairing = run_cli({"pairs", "--pairing"}, kPath4);
    CHECK(pairing.out == "0 1\n2 3\n");

    std::string k3 = "graph 3\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\ne 0 2\n";
    auto none = run_cli({"pairs", "--pairing"}, k3);
    CHECK(none.code == 0);
    CHECK(none.out == "none\n");
}

TEST_CASE("embed and conjugate") {
    std::string single = "graph 1\nv 0 5\n";
    auto embedded = run_cli({"embed", "--mode", "full"}, single);
    CHECK(embedded.code == 0);
    CHECK(embedded.out == "graph 2\nv 0 5\nv 1 0\ne 0 1\n");

    auto conj = run_cli({"conjugate"}, kPath4);
    CHECK(conj.code == 0);
    CHECK(conj.out == "graph 4\nv 0 1\nv 1 1\nv 2 1\nv 3 1\ne 0 1\ne 0 3\ne 2 3\n");

    std::string k3 = "graph 3\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\ne 0 2\n";
    auto no_pairing = run_cli({"conjugate"}, k3);
    CHECK(no_pairing.code == miskit::cli::exit_verification_failure);
}

TEST_CASE("gen is reproducible and parse-emit round trips") {
    std::vector<std::string> gen_args = {"gen", "--kind", "random", "--n", "8",
                                         "--seed", "11", "--p", "0.4"};
    auto a = run_cli(gen_args);
    auto b = run_cli(gen_args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    // feeding the generated document back through the parser is the identity
    auto solved_a = run_cli({"solve", "--format", "json"}, a.out);
    auto solved_b = run_cli({"solve", "--format", "json"}, b.out);
    CHECK(solved_a.out == solved_b.out);
}

TEST_CASE("verify command exit codes") {
    auto good = run_cli({"verify"}, kPath4);
    CHECK(good.code == 0);
    CHECK(good.out.find("PASS 2.1") != std::string::npos);

    auto scoped = run_cli({"verify", "--theorems", "4.1,gap"}, kPath4);
    CHECK(scoped.code == 0);

    auto unknown = run_cli({"verify", "--theorems", "9.9"}, kPath4);
    CHECK(unknown.code == miskit::cli::exit_usage);

    std::string k3 = "graph 3\nv 0 1\nv 1 1\nv 2 1\ne 0 1\ne 1 2\ne 0 2\n";
    auto skips = run_cli({"verify", "--theorems", "4.1"}, k3);
    CHECK(skips.code == 0);
    CHECK(skips.out.find("SKIP 4.1") != std::string::npos);
}

TEST_CASE("dot export honors annotations") {
    auto plain = run_cli({"dot"}, kPath4);
    CHECK(plain.code == 0);
    CHECK(plain.out.find("graph {") == 0);

    auto solution = run_cli({"dot", "--solution", "--pairing"}, kPath4);
    CHECK(solution.out.find("style=filled") != std::string::npos);
    CHECK(solution.out.find("[style=bold]") != std::string::npos);
}

TEST_CASE("error exit codes") {
    auto parse_fail = run_cli({"solve"}, "graph 2\nv 0 1\nv 1 1\ne 1 1\n");
    CHECK(parse_fail.code == miskit::cli::exit_usage);
    CHECK(parse_fail.err.find("line 4") != std::string::npos);

    std::ostringstream big;
    big << "graph 30\n";
    for (int v = 0; v < 30; ++v)
        big << "v " << v << " 1\n";
    auto capacity = run_cli({"enumerate"}, big.str());
    CHECK(capacity.code == miskit::cli::exit_capacity);

    auto forced = run_cli({"enumerate", "--force"}, big.str());
    CHECK(forced.code == 0);

    auto usage = run_cli({"frobnicate"});
    CHECK(usage.code == miskit::cli::exit_usage);

    auto missing_file = run_cli({"solve", "-i", "/no/such/file"});
    CHECK(missing_file.code == miskit::cli::exit_usage);
}

TEST_CASE("help is exit code zero") {
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
}
