#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cycles/cells.hpp"
#include "cycles/cli.hpp"

using namespace cycles;
using cli::run;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("cyclekit_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("graph spec parsing") {
    CHECK(cli::parse_graph_spec("K4") == complete_graph(4));
    CHECK(cli::parse_graph_spec("K3,3") == complete_bipartite(3, 3));
    CHECK(cli::parse_graph_spec("C6") == cycle_graph(6));
    CHECK(cli::parse_graph_spec("P4") == path_graph(4));
    CHECK(cli::parse_graph_spec("W5") == wheel_graph(5));
    CHECK(cli::parse_graph_spec("tilde3") == tilde_graph(3));
    CHECK_THROWS_AS(cli::parse_graph_spec("K3,"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_graph_spec("Q7"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_graph_spec("K4x"), std::invalid_argument);

    TempFile f("graph.json", R"({"nverts": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})");
    CHECK(cli::parse_graph_spec("@" + f.path) == cycle_graph(4));

    RookGrid g = cli::parse_rook_spec("R3^2");
    CHECK(g.n() == 3);
    CHECK(g.ell() == 2);
    CHECK_THROWS_AS(cli::parse_rook_spec("R3"), std::invalid_argument);

    CHECK(cli::parse_hypergraph_spec("complete5").nfaces() == 10);
}

TEST_CASE("format_count") {
    CHECK(cli::format_count(3) == "2^3 = 8");
    CHECK(cli::format_count(0) == "2^0 = 1");
    CHECK(cli::format_count(63) == "2^63 = 9223372036854775808");
    CHECK(cli::format_count(64) == "2^64");
    CHECK(cli::format_count(625) == "2^625");
}

TEST_CASE("count verb") {
    auto r = run({"count", "K4"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "2^3 = 8"));

    auto rb = run({"count", "K4", "--brute-force"});
    CHECK(rb.exit_code == 0);
    CHECK(contains(rb.output, "agrees"));

    auto big = run({"count", "K33", "--brute-force"});  // K_33: C(32,2) = 496 edges
    CHECK(big.exit_code == 1);

    auto bad = run({"count", "K3,"});
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "position"));
}

TEST_CASE("homology and deleted-square golden values") {
    auto r = run({"homology", "K3", "K3"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "2^2 = 4"));

    auto d = run({"deleted-square", "K5", "--quotient"});
    CHECK(d.exit_code == 0);
    CHECK(contains(d.output, "2^12"));

    auto plain = run({"deleted-square", "K4"});
    CHECK(contains(plain.output, "12 vertices"));
    CHECK(contains(plain.output, "24 edges"));
}

TEST_CASE("kunneth verb") {
    auto r = run({"kunneth", "K3", "K4"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "additive"));
    CHECK(contains(r.output, "witness verified"));
}

TEST_CASE("symmetric verb") {
    auto sq = run({"symmetric", "K3", "--square"});
    CHECK(sq.exit_code == 0);
    CHECK(contains(sq.output, "2^6"));
    CHECK(contains(sq.output, "agrees"));

    auto ps = run({"symmetric", "tilde4", "--part-swap"});
    CHECK(ps.exit_code == 0);
    CHECK(contains(ps.output, "2^3"));
    CHECK(contains(ps.output, "agrees"));

    auto anti = run({"symmetric", "C6", "--antipodal"});
    CHECK(anti.exit_code == 0);
    CHECK(contains(anti.output, "2^1"));

    TempFile f("inv.json", R"({"perm": [0, 5, 4, 3, 2, 1]})");
    auto fixed = run({"symmetric", "C6", "--involution", f.path});
    CHECK(fixed.exit_code == 0);
    CHECK(contains(fixed.output, "not applicable"));

    CHECK(run({"symmetric", "C6"}).exit_code == 1);
}

TEST_CASE("cells verb") {
    CHECK(contains(run({"cells", "K3"}).output, "2^1"));
    CHECK(contains(run({"cells", "K4"}).output, "2^9"));
    CHECK(contains(run({"cells", "K3,3", "--deleted"}).output, "2^1"));
    CHECK(contains(run({"cells", "K4", "--symmetric"}).output, "2^6"));
    CHECK(contains(run({"cells", "tilde3", "--t-cross-t"}).output, "2^1"));
    CHECK(run({"cells", "K4", "--t-cross-t"}).exit_code == 1);

    // Counts beyond 63 bits stay in exponent form.
    auto big = run({"cells", "K5,5", "--deleted"});
    CHECK(big.exit_code == 0);
    CHECK(contains(big.output, "2^121 ("));
}

TEST_CASE("hypergraph and rook verbs") {
    auto h = run({"hypergraph", "complete4"});
    CHECK(h.exit_code == 0);
    CHECK(contains(h.output, "b0 - b1 + b2 = V - E + F: holds"));
    CHECK(contains(h.output, "F <= 2V - 4 holds"));

    auto r = run({"rook", "R3^2", "--brute-force"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "2^4"));
    CHECK(contains(r.output, "agrees"));

    // Decompose a parallelepiped given as a point-index list.
    RookGrid grid(3, 2);
    PointSet p = parallelepiped(grid, {{0, 2}, {1, 2}});
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i : p.ones()) pts.push_back(i);
    TempFile f("points.json", pts.dump());
    auto d = run({"rook", "R3^2", "--decompose", f.path, "--json"});
    CHECK(d.exit_code == 0);
    auto dj = nlohmann::json::parse(d.output);
    CHECK(dj.at("verified") == true);
    CHECK(dj.at("decomposition").size() >= 1);

    TempFile bad("badpoints.json", "[0]");
    CHECK(run({"rook", "R3^2", "--decompose", bad.path}).exit_code == 1);
}

TEST_CASE("harness verb") {
    TempFile f("harness.json", R"({
        "graph": "K3,1",
        "ambient": "deleted_square",
        "target": {"kind": "triodic", "center": 3, "leaves": [0, 1, 2]},
        "families": ["boundaries"],
        "mod_boundaries": false
    })");
    auto r = run({"harness", f.path});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "NOT_IN_SPAN"));

    TempFile f2("harness2.json", R"({
        "graph": "K3",
        "ambient": "square",
        "target": {"kind": "near_diagonal", "cycle": [0, 1, 2]},
        "families": ["symmetrized"],
        "mod_boundaries": true
    })");
    auto r2 = run({"harness", f2.path, "--witness"});
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.output, "IN_SPAN"));

    // Inline graph object, boundaries forced by flag instead of the file.
    TempFile f3("harness3.json", R"({
        "graph": {"nverts": 3, "edges": [[0,1],[1,2],[0,2]]},
        "ambient": "square",
        "target": {"kind": "antidiagonal", "cycle": [0, 1, 2]},
        "families": ["symmetrized"],
        "mod_boundaries": false
    })");
    CHECK(contains(run({"harness", f3.path}).output, "NOT_IN_SPAN"));
    CHECK(contains(run({"harness", f3.path, "--mod-boundaries"}).output, "IN_SPAN"));
}

TEST_CASE("audit verb") {
    auto ok = run({"audit", "--n", "3"});
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "AGREE"));

    auto bad = run({"audit"});
    CHECK(bad.exit_code == 2);  // n = 4: computed 13 vs recorded 6
    CHECK(contains(bad.output, "13"));
    CHECK(contains(bad.output, "6"));
    CHECK(contains(bad.output, "DISAGREE"));
}

TEST_CASE("deterministic output") {
    for (const std::vector<std::string>& cmd :
         {std::vector<std::string>{"count", "K5"},
          {"basis", "K3,3"},
          {"cells", "K4", "--symmetric"},
          {"kunneth", "K3", "K3"}}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("json outputs parse and round-trip the schema") {
    auto r = run({"count", "K4", "--json"});
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("dim") == 3);

    auto sym = nlohmann::json::parse(run({"symmetric", "tilde3", "--part-swap", "--json"}).output);
    CHECK(sym.at("dim") == 1);
    CHECK(sym.at("formula_dim") == 1);
    CHECK(sym.at("agrees") == true);

    auto audit = nlohmann::json::parse(run({"audit", "--json"}).output);
    CHECK(audit.at("computed_dim") == 13);
    CHECK(audit.at("orbit_count_oracle") == 13);
    CHECK(audit.at("formula_dim") == 6);
    CHECK(audit.at("agrees") == false);

    auto base = nlohmann::json::parse(run({"basis", "K4", "--json"}).output);
    CHECK(base.at("dim") == 3);
    CHECK(base.at("basis").size() == 3);

    // Cell-set schema round-trip: rebuild each emitted basis element and
    // verify it is a 2-cycle of the named universe.
    auto cells_json =
        nlohmann::json::parse(run({"cells", "K3,3", "--deleted", "--basis", "--json"}).output);
    REQUIRE(cells_json.at("basis").size() == 1);
    for (const auto& cs : cells_json.at("basis")) {
        Graph host = cli::parse_graph_spec(cs.at("universe").at("graph").get<std::string>());
        REQUIRE(cs.at("universe").at("mode") == "deleted");
        CellUniverse u = CellUniverse::deleted_square(host);
        CellSet rebuilt(u.ncells());
        for (const auto& cell : cs.at("cells")) {
            int idx = u.cell_index(cell.at(0).get<int>(), cell.at(1).get<int>());
            REQUIRE(idx >= 0);
            rebuilt.set(idx);
        }
        CHECK(is_cell_2cycle(u, rebuilt));
        CHECK(rebuilt.count() == u.ncells());
    }
}

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).exit_code == 0);
    CHECK(run({}).exit_code == 1);
    CHECK(run({"nonsense"}).exit_code == 1);
    CHECK(run({"harness", "no_such_file.json"}).exit_code == 1);
}
