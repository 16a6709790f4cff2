#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "ogsat/certs.hpp"
#include "ogsat/embed.hpp"
#include "ogsat/families.hpp"
#include "ogsat/graph.hpp"

using namespace ogsat;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ogsat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int c = 0;
        path = std::filesystem::temp_directory_path() /
               ("ogsat_cli_" + std::to_string(::getpid()) + "_" + std::to_string(c++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        const auto p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

}  // namespace

TEST_CASE("gen emits family graphs") {
    auto r = run_cli({"gen", "gamma-linked", "0,1,0"});
    CHECK(r.code == 0);
    CHECK(r.out == serialize(linked_matching(LinkedMatchingSpec({0, 1, 0}))));

    r = run_cli({"gen", "lk", "3", "--cyclic"});
    CHECK(r.code == 0);
    CHECK(r.out == serialize(consecutive_matching_cyclic(3)));

    r = run_cli({"gen", "xk", "2"});
    CHECK(r.out == serialize(enclosed_matching(2)));

    r = run_cli({"gen", "gamma", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["og"] == serialize(crossing_chain(2)));

    r = run_cli({"gen", "nosuch", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown family") != std::string::npos);
}

TEST_CASE("contains exit codes and embedding output") {
    TempDir d;
    const auto host = d.file("h.og", serialize(linked_matching(LinkedMatchingSpec({1, 0, 1}))));
    const auto pat = d.file("p.og", serialize(crossing_chain(3)));

    auto r = run_cli({"contains", host, pat});
    CHECK(r.code == 0);
    CHECK(r.out.find("embedding: 1 4 5 6 7 10") != std::string::npos);

    const auto pat2 = d.file("p2.og", serialize(complete_graph(3)));
    r = run_cli({"contains", host, pat2});
    CHECK(r.code == 1);

    const auto cyc = d.file("c.og", serialize(enclosed_matching(1)));
    r = run_cli({"contains", host, cyc});
    CHECK(r.code == 2);  // kind mismatch

    r = run_cli({"contains", host, pat, "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["contains"] == true);
    CHECK(j["embedding"].size() == 6);
}

TEST_CASE("classify reports verdicts and JSON schema is stable") {
    TempDir d;
    const auto p = d.file("g.og", serialize(linked_matching(LinkedMatchingSpec({0, 1, 0}))));
    auto r = run_cli({"classify", p});
    CHECK(r.code == 0);
    CHECK(r.out.find("saturation: Bounded") != std::string::npos);
    CHECK(r.out.find("thm:gamma3") != std::string::npos);
    CHECK(r.out.find("\033") == std::string::npos);  // no ANSI styling off a terminal

    r = run_cli({"classify", p, "--json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "ordered");
    CHECK(j["sat_verdict"]["status"] == "Bounded");
    CHECK(j["sat_verdict"]["rules"][0].contains("id"));
    CHECK(j["sat_verdict"]["rules"][0].contains("citation"));
    CHECK(j["ssat_verdict"]["status"] == "Bounded");
    CHECK(j.contains("minedges"));
    CHECK(j.contains("interval_chromatic_number"));
}

TEST_CASE("verify-host runs both modes") {
    TempDir d;
    const auto empty5 = d.file("e.og", "ordered n=5\n");
    const auto edge = d.file("k2.og", "ordered n=2\n1 2\n");
    auto r = run_cli({"verify-host", empty5, edge, "--mode", "sat"});
    CHECK(r.code == 0);
    CHECK(r.out.find("saturating: yes") != std::string::npos);

    const auto l2 = d.file("l2.og", serialize(consecutive_matching(2)));
    r = run_cli({"verify-host", empty5, l2, "--mode", "sat"});
    CHECK(r.code == 1);

    r = run_cli({"verify-host", empty5, l2, "--mode", "bogus"});
    CHECK(r.code == 2);

    r = run_cli({"verify-host", empty5, edge, "--mode", "ssat", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ok"] == true);
}

TEST_CASE("witness verification, certificates and blowup round-trip") {
    TempDir d;
    const OrderedGraph w010(11, {{1, 3}, {2, 4}, {2, 7}, {3, 9}, {4, 5}, {5, 10}, {7, 8},
                                 {8, 10}, {9, 11}});
    const auto wpath = d.file("w.og", serialize(w010));
    const auto gpath = d.file("g.og", serialize(linked_matching(LinkedMatchingSpec({0, 1, 0}))));
    const auto base = (d.path / "cert").string();

    auto r = run_cli({"verify-witness", wpath, gpath, "--matching", "--emit-cert", base});
    CHECK(r.code == 0);
    CHECK(r.out.find("witness: yes (anchor 6)") != std::string::npos);
    REQUIRE(std::filesystem::exists(base + ".og"));
    REQUIRE(std::filesystem::exists(base + ".json"));

    const auto side = nlohmann::json::parse(std::ifstream(base + ".json"));
    CHECK(side["verified"] == true);
    CHECK(side["matching_mode"] == true);
    CHECK(side["anchor"] == 6);
    CHECK(side["tool_version"] == kToolVersion);

    const auto blown = (d.path / "blown.og").string();
    r = run_cli({"blowup", base + ".og", "--n", "60", "--saturate", "-o", blown});
    CHECK(r.code == 0);
    r = run_cli({"verify-host", blown, gpath, "--mode", "sat"});
    CHECK(r.code == 0);

    // classify picks up the stored certificate for the cyclic closure
    const auto cyc_pattern = d.file("gc.og", serialize(cyclic_closure(linked_matching(LinkedMatchingSpec({0, 1, 0})))));
    const auto cyc_witness = d.file("wc.og", serialize(cyclic_closure(w010)));
    r = run_cli({"classify", cyc_pattern});
    CHECK(r.out.find("saturation: Unknown") != std::string::npos);
    r = run_cli({"verify-witness", cyc_witness, cyc_pattern, "--matching", "--emit-cert",
             (d.path / "cyc").string()});
    CHECK(r.code == 0);
    r = run_cli({"classify", cyc_pattern, "--certs", d.path.string()});
    CHECK(r.out.find("saturation: Bounded") != std::string::npos);
    CHECK(r.out.find("lem:witness") != std::string::npos);
}

TEST_CASE("construct builds hosts by kind") {
    TempDir d;
    const auto g2 = d.file("g2.og", serialize(crossing_chain(2)));
    auto r = run_cli({"construct", "linear", g2, "--n", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 13) == "ordered n=12\n");

    const auto host = (d.path / "h.og").string();
    r = run_cli({"construct", "linear", g2, "--n", "12", "-o", host});
    CHECK(r.code == 0);
    r = run_cli({"verify-host", host, g2, "--mode", "sat"});
    CHECK(r.code == 0);

    const auto l2c = d.file("l2c.og", serialize(consecutive_matching_cyclic(2)));
    r = run_cli({"construct", "cyclic", l2c, "--n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 12) == "cyclic n=10\n");

    r = run_cli({"construct", "cyclic", g2, "--n", "10"});
    CHECK(r.code == 2);  // kind mismatch

    const auto g101 = d.file("g101.og", serialize(linked_matching(LinkedMatchingSpec({1, 0, 1}))));
    r = run_cli({"construct", "ssat", g101, "--n", "30"});
    CHECK(r.code == 0);

    const auto k3 = d.file("k3.og", serialize(complete_graph(3)));
    r = run_cli({"construct", "ssat", k3, "--n", "30"});
    CHECK(r.code == 2);  // no minedge: the characterization rejects it
}

TEST_CASE("sat-exact prints the number and honours budgets") {
    TempDir d;
    const auto k3 = d.file("k3.og", serialize(complete_graph(3)));
    auto r = run_cli({"sat-exact", k3, "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");

    r = run_cli({"sat-exact", k3, "--n", "5", "--ssat", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["k"] == 4);

    r = run_cli({"sat-exact", k3, "--n", "6", "--max-nodes", "3"});
    CHECK(r.code == 3);

    r = run_cli({"sat-exact", d.file("empty.og", ""), "--n", "5"});
    CHECK(r.code == 2);  // malformed input file

    r = run_cli({"sat-exact", (d.path / "missing.og").string(), "--n", "5"});
    CHECK(r.code == 2);
}

TEST_CASE("search-witness through the CLI") {
    TempDir d;
    const auto edge = d.file("k2.og", "ordered n=2\n1 2\n");
    auto r = run_cli({"search-witness", edge, "--strategy", "full", "--max-vertices", "3",
                  "--max-edges", "1", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["matching_mode"] == true);

    const auto l2 = d.file("l2.og", serialize(consecutive_matching(2)));
    r = run_cli({"search-witness", l2, "--strategy", "full", "--max-vertices", "5", "--max-edges", "3"});
    CHECK(r.code == 1);  // completes the caps without finding one

    r = run_cli({"search-witness", l2, "--strategy", "full", "--max-vertices", "8", "--max-edges", "8",
             "--max-nodes", "20"});
    CHECK(r.code == 3);  // node cap
}

TEST_CASE("usage errors exit with 2 and version prints") {
    auto r = run_cli({"frobnicate"});
    CHECK(r.code == 2);
    r = run_cli({});
    CHECK(r.code == 2);
    r = run_cli({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find(kToolVersion) != std::string::npos);
    r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gen") != std::string::npos);
}
