#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "colreconf/construction.hpp"
#include "colreconf/serialization.hpp"

namespace fs = std::filesystem;
using colreconf::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "colreconf_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
    auto p = scratch(name);
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("construct") {
    const auto g1 = scratch("g.json");
    auto r = call({"construct", "--p", "1", "--out", g1.string()});
    CHECK(r.code == 0);
    auto j = colreconf::Json::parse(slurp(g1));
    CHECK(j["p"] == 1);
    CHECK(j["graph"]["n"] == 16);

    const auto g2 = scratch("g2.json");
    CHECK(call({"construct", "--p", "2", "--out", g2.string()}).code == 0);
    CHECK(colreconf::Json::parse(slurp(g2))["graph"]["n"] == 32);

    auto zero = call({"construct", "--p", "0"});
    CHECK(zero.code != 0);
    CHECK_FALSE(zero.err.empty());

    auto dot = call({"construct", "--p", "1", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph G1 {", 0) == 0);

    CHECK(call({"construct", "--p", "1", "--out", "/nonexistent-dir/x.json"}).code == 1);
}

TEST_CASE("verify") {
    auto r = call({"verify", "--paper", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("overall: PASS") != std::string::npos);

    auto j = call({"verify", "--paper", "1", "--format", "json"});
    CHECK(j.code == 0);
    auto parsed = colreconf::Json::parse(j.out);
    CHECK(parsed["pass"] == true);

    auto two = call({"--format", "json", "verify", "--paper", "2"});
    CHECK(two.code == 0);

    CHECK(call({"verify"}).code == 1);
}

TEST_CASE("verify round trip through a file gives the same report") {
    const auto path = scratch("roundtrip.json");
    REQUIRE(call({"construct", "--p", "1", "--out", path.string()}).code == 0);
    auto from_file = call({"verify", path.string(), "--format", "json"});
    auto in_memory = call({"verify", "--paper", "1", "--format", "json"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == in_memory.out);
    CHECK(from_file.out == colreconf::dump(colreconf::to_json(colreconf::verify(colreconf::build_base()))));

    // Bare edge list of the same graph: canonical colourings are supplied.
    std::ostringstream el;
    el << "16 100\n";
    for (const auto& e : colreconf::build_base().graph.edges()) el << e.u << ' ' << e.v << '\n';
    const auto el_path = write_file("g.el", el.str());
    CHECK(call({"verify", el_path.string(), "--format", "json"}).out == in_memory.out);
}

TEST_CASE("verify reports a failing instance with a nonzero exit") {
    auto base = colreconf::build_base();
    auto edges = base.graph.edges();
    edges.erase(edges.begin());
    colreconf::PaperInstance damaged{1, colreconf::Graph(16, edges), base.alpha, base.beta};
    const auto path = write_file("damaged.json", colreconf::dump(colreconf::to_json(damaged)));
    auto r = call({"verify", path.string()});
    CHECK(r.out.find("instance p=1") != std::string::npos);
    if (!colreconf::verify(damaged).passed()) CHECK(r.code == colreconf::cli::exit_verification_failed);
}

TEST_CASE("corrupt input names the offending line") {
    const auto bad = write_file("bad.el", "3 2\n0 1\n1 x\n");
    auto r = call({"chromatic", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.err.find("column 3") != std::string::npos);

    auto v = call({"verify", bad.string()});
    CHECK(v.code == 1);
    CHECK(v.err.find("line 3") != std::string::npos);

    const auto badjson = write_file("bad.json", "{\n  \"n\": 3,\n  \"edges\": [[0, 1],, ]\n}\n");
    auto jr = call({"clique", badjson.string()});
    CHECK(jr.code == 1);
    CHECK(jr.err.find("line 3") != std::string::npos);

    CHECK(call({"chromatic", scratch("missing.el").string()}).code == 1);
}

TEST_CASE("misc subcommands") {
    const auto g = scratch("paper.json");
    REQUIRE(call({"construct", "--p", "1", "--out", g.string()}).code == 0);

    CHECK(call({"induced", g.string(), "--pattern", "2k2"}).out == "none\n");
    CHECK(call({"induced", g.string(), "--pattern", "p5"}).out == "none\n");
    CHECK(call({"chromatic", g.string()}).out == "7\n");
    CHECK(call({"clique", g.string()}).out == "7\n");
    CHECK(call({"chromatic", g.string(), "--format", "json"}).out == "{\n  \"chromatic_number\": 7\n}\n");

    const auto k3 = write_file("k3.el", "3 3\n0 1\n0 2\n1 2\n");
    auto mixing = call({"mixing", k3.string(), "--k", "3"});
    CHECK(mixing.code == 0);
    CHECK(mixing.out.rfind("connected=false components=6", 0) == 0);
    auto mj = colreconf::Json::parse(call({"mixing", k3.string(), "--k", "3", "--format", "json"}).out);
    CHECK(mj["connected"] == false);
    CHECK(mj["components"] == 6);
    CHECK(mj["exhaustive"] == true);

    auto dot = call({"mixing", k3.string(), "--k", "3", "--format", "dot"});
    CHECK(dot.out.find("label=\"123\"") != std::string::npos);

    auto frozen = call({"find-frozen", g.string(), "--k", "8", "--limit", "1"});
    CHECK(frozen.code == 0);
    CHECK(frozen.out.rfind("found=1", 0) == 0);

    auto nb = call({"neighbours", g.string(), "1234567812345678", "--k", "8"});
    CHECK(nb.code == 0);
    CHECK(nb.out == "none\n");
    auto nb2 = call({"neighbours", k3.string(), "1 2 3", "--k", "4"});
    CHECK(nb2.out == "423\n143\n124\n");

    const auto col = write_file("k3.col", "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(call({"chromatic", col.string()}).out == "3\n");
    CHECK(call({"chromatic", col.string(), "--input-format", "dimacs"}).out == "3\n");
}

TEST_CASE("caps surface as resource errors") {
    const auto g = scratch("paper_caps.json");
    REQUIRE(call({"construct", "--p", "1", "--out", g.string()}).code == 0);
    auto r = call({"--search-cap", "8", "chromatic", g.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("resource error") != std::string::npos);
    CHECK(r.err.find("search cap") != std::string::npos);

    auto m = call({"--node-cap", "10", "mixing", g.string(), "--k", "8"});
    CHECK(m.code == 1);
    CHECK(m.err.find("node cap") != std::string::npos);

    CHECK(call({"--node-cap", "0", "chromatic", g.string()}).code == 2);
    CHECK(call({"induced", g.string(), "--pattern", "q3"}).code == 1);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("commands are deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"construct", "--p", "2"},
             {"verify", "--paper", "2", "--format", "json"},
             {"verify", "--paper", "1"}}) {
        CHECK(call(args).out == call(args).out);
    }
}
