#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pforest/cli.hpp"
#include "pforest/io.hpp"
#include "pforest/verify.hpp"

using namespace pforest;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

// Writes test inputs under a per-process temp directory.
class TempFile {
public:
    TempFile(const std::string& name, const std::string& content) {
        auto dir = std::filesystem::temp_directory_path() /
                   ("pforest_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        path_ = (dir / name).string();
        std::ofstream(path_, std::ios::binary) << content;
    }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char* kC4 = "4 4\n1 2\n2 3\n3 4\n1 4\n";
const char* kC5 = "5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n";

}  // namespace

TEST_CASE("find prints a forest document and exits 0") {
    TempFile g("c4.txt", kC4);
    CliRun r = run({"find", g.path()});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n 4\n"
          "components 1\n"
          "iterations 0\n"
          "trees 2\n"
          "tree 1: vertices 1 4; edges (1,4)\n"
          "tree 2: vertices 2 3; edges (2,3)\n");
    CHECK(r.err.empty());

    CliRun structured = run({"find", g.path(), "--format", "structured"});
    CHECK(structured.code == 0);
    CHECK(parse_forest(structured.out) == std::vector<Edge>{{1, 4}, {2, 3}});

    CliRun algebra = run({"find", g.path(), "--check-algebra"});
    CHECK(algebra.code == 0);
    CHECK(algebra.out == r.out);
}

TEST_CASE("find on an odd component exits 2 and cites the requirement") {
    TempFile g("c5.txt", kC5);
    CliRun r = run({"find", g.path()});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("odd order") != std::string::npos);
    CHECK(r.err.find("even order") != std::string::npos);
}

TEST_CASE("verify distinguishes valid, invalid, and malformed") {
    TempFile g("c4.txt", kC4);
    TempFile good("good.txt", "4 2\n1 4\n2 3\n");
    TempFile bad("bad.txt", "4 3\n1 2\n2 3\n3 4\n");
    TempFile broken("broken.txt", "4 1\n1 1\n");

    CliRun ok = run({"verify", g.path(), good.path()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid\n");

    CliRun invalid = run({"verify", g.path(), bad.path()});
    CHECK(invalid.code == 1);
    CHECK(invalid.out ==
          "EvenDegree: vertex 2 has even degree 2 in F\n"
          "EvenDegree: vertex 3 has even degree 2 in F\n"
          "NotInduced: edge (1,4) joins vertices of the same tree {1 2 3 4} but is not in F\n");

    CliRun malformed = run({"verify", g.path(), broken.path()});
    CHECK(malformed.code == 65);
    CHECK(malformed.err.find("line 2") != std::string::npos);
}

TEST_CASE("verify accepts find output in both formats") {
    TempFile g("c4.txt", kC4);
    for (const char* format : {"text", "structured"}) {
        CliRun found = run({"find", g.path(), "--format", format});
        REQUIRE(found.code == 0);
        TempFile forest(std::string("forest_") + format + ".txt", found.out);
        CliRun verified = run({"verify", g.path(), forest.path()});
        CHECK(verified.code == 0);
        CHECK(verified.out == "valid\n");
    }
}

TEST_CASE("enumerate lists forests in mask order") {
    TempFile g("c4.txt", kC4);
    CliRun r = run({"enumerate", g.path()});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n 4\n"
          "m 4\n"
          "subsets 16\n"
          "forests 2\n"
          "forest 1: (1,4) (2,3)\n"
          "forest 2: (1,2) (3,4)\n");

    TempFile big("k7.txt", [] {
        std::string s = "7 21\n";
        for (int i = 1; i <= 7; ++i) {
            for (int j = i + 1; j <= 7; ++j) {
                s += std::to_string(i) + " " + std::to_string(j) + "\n";
            }
        }
        return s;
    }());
    CliRun capped = run({"enumerate", big.path(), "--cap", "20"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("cap") != std::string::npos);
    CliRun raised = run({"enumerate", big.path(), "--cap", "21"});
    CHECK(raised.code == 0);
}

TEST_CASE("gen emits a deterministic edge list that find accepts") {
    CliRun a = run({"gen", "--n", "10", "--p", "0.3", "--seed", "7"});
    CliRun b = run({"gen", "--n", "10", "--p", "0.3", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    TempFile g("gen.txt", a.out);
    CliRun found = run({"find", g.path()});
    CHECK(found.code == 0);

    CliRun badp = run({"gen", "--n", "4", "--p", "1.5", "--seed", "1"});
    CHECK(badp.code == 65);
}

TEST_CASE("check reports the connected-graph count") {
    CliRun r = run({"check", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "38 graphs, 0 failures\n");

    CliRun odd = run({"check", "--n", "3"});
    CHECK(odd.code == 65);
}

TEST_CASE("flip emits a parseable H whose parities all differ") {
    TempFile g("c4.txt", kC4);
    CliRun r = run({"flip", g.path()});
    CHECK(r.code == 0);
    Graph original = parse_edge_list(kC4);
    Graph h = parse_edge_list(r.out);  // certificate lines are comments
    CHECK(h.edges() == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(verify_parity_flip(original, h).valid());
    CHECK(r.out.find("# |E(H)| = 2 >= |E(G)| - 2n + 2 = -2\n") != std::string::npos);

    TempFile odd("c5.txt", kC5);
    CHECK(run({"flip", odd.path()}).code == 2);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({}).code == 64);
    CHECK(run({"frobnicate"}).code == 64);
    CHECK(run({"find", "--no-such-flag"}).code == 64);
    CHECK(run({"gen"}).code == 64);  // --n is required
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("missing input files exit 65") {
    CliRun r = run({"find", "/nonexistent/graph.txt"});
    CHECK(r.code == 65);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("gen -> find -> verify exits 0 across a 1000-seed sweep") {
    for (uint64_t seed = 1; seed <= 1000; ++seed) {
        int n = 2 + 2 * static_cast<int>(seed % 16);  // even, 2..32
        double p = static_cast<double>(seed % 7) / 10.0;
        CliRun gen = run({"gen", "--n", std::to_string(n), "--p", std::to_string(p), "--seed",
                          std::to_string(seed)});
        REQUIRE(gen.code == 0);
        TempFile graph("sweep_graph.txt", gen.out);
        CliRun found = run({"find", graph.path()});
        REQUIRE(found.code == 0);
        TempFile forest("sweep_forest.txt", found.out);
        CliRun verified = run({"verify", graph.path(), forest.path()});
        REQUIRE(verified.code == 0);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    TempFile g("c4.txt", kC4);
    for (auto args : std::vector<std::vector<std::string>>{
             {"find", g.path()},
             {"find", g.path(), "--format", "structured"},
             {"enumerate", g.path()},
             {"flip", g.path()},
             {"gen", "--n", "14", "--p", "0.25", "--seed", "3"},
         }) {
        CliRun first = run(args);
        CliRun second = run(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
    }
}
