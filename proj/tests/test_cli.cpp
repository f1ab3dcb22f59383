#include "gapcert/cli.hpp"
#include "gapcert/cycles.hpp"
#include "gapcert/generators.hpp"
#include "gapcert/graph_io.hpp"
#include "gapcert/json_io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace gapcert;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
    json error() const { return json::parse(err); }
};

Outcome run_cli(std::vector<std::string> args, const std::string &input = {})
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text)
{
    auto path = fs::temp_directory_path() / ("gapcert_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string decomposition_file(const std::string &name, const FractionalDecomposition &d)
{
    return write_temp(name, decomposition_to_json(d).dump());
}

const std::string petersen_text = emit_edge_list(gen::petersen());

} // namespace

TEST_CASE("gen and spectrum")
{
    auto gen = run_cli({"gen", "petersen"});
    REQUIRE(gen.code == 0);
    CHECK(parse_graph(gen.out) == gen::petersen());

    auto spec = run_cli({"spectrum"}, gen.out);
    REQUIRE(spec.code == 0);
    auto doc = spec.doc();
    CHECK(doc["n"] == 10);
    CHECK(doc["m"] == 15);
    CHECK(doc["regular_degree"] == 3);
    CHECK(doc["bipartite"] == false);
    CHECK(doc["connected"] == true);
    CHECK(doc["lambda_min"].get<double>() == doctest::Approx(-2));
    CHECK(doc["delta"].get<double>() == doctest::Approx(1));
    CHECK(doc["eigenvalues"].size() == 10);

    auto plain = run_cli({"spectrum", "--plain"}, emit_edge_list(gen::cycle(4)));
    CHECK(plain.out.find("delta 0\n") != std::string::npos);
}

TEST_CASE("graph6 and edge-list inputs agree")
{
    auto g6 = run_cli({"gen", "blow-up", "2", "2", "--out-format", "graph6"});
    REQUIRE(g6.code == 0);
    auto el = run_cli({"gen", "blow-up", "2", "2"});
    CHECK(run_cli({"spectrum"}, g6.out).out == run_cli({"spectrum"}, el.out).out);
    CHECK(run_cli({"bound", "--odd-cycles"}, g6.out).out == run_cli({"bound", "--odd-cycles"}, el.out).out);

    auto path = write_temp("petersen.g6", emit_graph6(gen::petersen()));
    CHECK(run_cli({"oddgirth", path}).doc()["odd_girth"] == 5);
}

TEST_CASE("gen line-graph")
{
    auto lg = run_cli({"gen", "line-graph"}, petersen_text);
    REQUIRE(lg.code == 0);
    CHECK(parse_graph(lg.out) == gen::line_graph(gen::petersen()));
    CHECK(run_cli({"gen", "line-graph", "3"}, petersen_text).code == 2);
}

TEST_CASE("oddgirth and cycles")
{
    CHECK(run_cli({"oddgirth"}, petersen_text).doc()["odd_girth"] == 5);
    CHECK(run_cli({"oddgirth"}, emit_edge_list(gen::cycle(4))).doc()["odd_girth"] == "bipartite");
    CHECK(run_cli({"oddgirth", "--plain"}, petersen_text).out == "5\n");

    auto cyc = run_cli({"cycles", "--length", "5"}, petersen_text);
    REQUIRE(cyc.code == 0);
    CHECK(cyc.doc()["count"] == 12);
    CHECK(cyc.doc()["cycles"].size() == 12);
    CHECK(run_cli({"cycles", "-L", "2"}, petersen_text).code == 2);
}

TEST_CASE("verify-decomp")
{
    auto k4 = gen::complete(4);
    std::vector<WeightedPart> parts;
    for (const auto &c : enumerate_cycles(k4, 3).cycles)
        parts.push_back({cycle_edges(c), 0.5});
    auto ok_path = decomposition_file("k4.json", FractionalDecomposition(4, parts));
    auto ok = run_cli({"verify-decomp", "--decomp", ok_path}, emit_edge_list(k4));
    REQUIRE(ok.code == 0);
    CHECK(ok.doc()["edge_condition"]["ok"] == true);
    CHECK(ok.doc()["homogeneity"]["ok"] == true);
    CHECK(ok.doc()["classes"][0]["s"].get<double>() == doctest::Approx(1.5));

    auto half_path = decomposition_file("c5half.json", FractionalDecomposition(5, {{cycle_edges({0, 1, 2, 3, 4}), 0.5}}));
    auto half = run_cli({"verify-decomp", "--decomp", half_path}, emit_edge_list(gen::cycle(5)));
    CHECK(half.code == 1);
    CHECK(half.doc()["failed_stage"] == "edge-condition");
    CHECK(half.doc()["edge_condition"]["violations"].size() == 5);
    CHECK(half.error()["stage"] == "edge-condition");
}

TEST_CASE("bound")
{
    auto pet = run_cli({"bound", "--odd-cycles", "--actual"}, petersen_text);
    REQUIRE(pet.code == 0);
    auto doc = pet.doc();
    CHECK(doc["bound"].get<double>() == doctest::Approx(3 * (1 - std::cos(std::numbers::pi / 5))).epsilon(1e-11));
    CHECK(doc["k"] == 3);
    CHECK(doc["delta_actual"].get<double>() == doctest::Approx(1));
    for (const char *key : {"host", "edge_condition", "classify", "homogeneity", "degree_identity"})
        CHECK(doc["checks"][key] == true);
    CHECK(doc["failed_stage"].is_null());

    auto paths = decomposition_file(
        "c4paths.json",
        FractionalDecomposition(4, {{EdgeSubset({Edge(0, 1), Edge(1, 2)}), 1.0}, {EdgeSubset({Edge(2, 3), Edge(3, 0)}), 1.0}}));
    auto bad = run_cli({"bound", "--decomp", paths}, emit_edge_list(gen::cycle(4)));
    CHECK(bad.code == 1);
    CHECK(bad.error()["stage"] == "classify");

    Graph chord(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0), Edge(0, 2)});
    auto nonuni = run_cli({"bound", "--odd-cycles"}, emit_edge_list(chord));
    CHECK(nonuni.code == 1);
    CHECK(nonuni.error()["stage"] == "odd-cycle-decomposition");

    CHECK(run_cli({"bound"}, petersen_text).code == 2);
    CHECK(run_cli({"bound", "--odd-cycles", "--decomp", paths}, petersen_text).code == 2);
}

TEST_CASE("decomposition file round trip keeps full precision")
{
    auto blow = gen::blow_up_odd_cycle(2, 3);
    auto path = decomposition_file("blow.json", odd_cycle_decomposition(blow));
    auto r = run_cli({"bound", "--decomp", path, "--actual"}, emit_edge_list(blow));
    REQUIRE(r.code == 0);
    CHECK(std::abs(r.doc()["slack"].get<double>()) <= 1e-8);
}

TEST_CASE("drg commands")
{
    auto check = run_cli({"drg-check"}, petersen_text);
    REQUIRE(check.code == 0);
    CHECK(check.doc()["distance_regular"] == true);
    CHECK(check.doc()["array"]["b"] == json::array({3, 2}));
    CHECK(check.doc()["array"]["c"] == json::array({1, 1}));

    auto bound = run_cli({"drg-bound"}, petersen_text);
    REQUIRE(bound.code == 0);
    auto doc = bound.doc();
    CHECK(doc["p"] == 1);
    CHECK(doc["q"] == 4);
    CHECK(doc["cycles_per_edge"] == 4);
    CHECK(doc["certified_bound"].get<double>() == doctest::Approx(doc["corollary_bound"].get<double>()));

    std::vector<Edge> prism;
    for (int i = 0; i < 5; ++i) {
        prism.emplace_back(i, (i + 1) % 5);
        prism.emplace_back(5 + i, 5 + (i + 1) % 5);
        prism.emplace_back(i, 5 + i);
    }
    auto text = emit_edge_list(Graph(10, prism));
    CHECK(run_cli({"drg-check"}, text).code == 1);
    auto nb = run_cli({"drg-bound"}, text);
    CHECK(nb.code == 1);
    CHECK(nb.doc()["distance_regular"] == false);
}

TEST_CASE("optimize")
{
    auto pet = run_cli({"optimize", "--family", "odd-girth-cycles"}, petersen_text);
    REQUIRE(pet.code == 0);
    CHECK(pet.doc()["status"] == "optimal");
    CHECK(pet.doc()["variables"] == 12);
    CHECK(pet.doc()["objective"].get<double>() == doctest::Approx(3 * (1 - std::cos(std::numbers::pi / 5))));

    auto fam = write_temp("one_triangle.json", R"({"parts": [{"edges": [[0,1],[1,2],[2,0]]}]})");
    auto infeasible = run_cli({"optimize", "--family", "file=" + fam}, emit_edge_list(gen::complete(4)));
    CHECK(infeasible.code == 1);
    CHECK(infeasible.doc()["status"] == "infeasible");
    CHECK(infeasible.error()["stage"] == "lp");

    auto bip = run_cli({"optimize", "--family", "odd-girth-cycles"}, emit_edge_list(gen::cycle(6)));
    CHECK(bip.code == 1);
    CHECK(bip.error()["stage"] == "family");
    CHECK(run_cli({"optimize", "--family", "stars"}, petersen_text).code == 2);
}

TEST_CASE("input and usage errors")
{
    auto bad = run_cli({"spectrum"}, "0 0\n");
    CHECK(bad.code == 2);
    CHECK(bad.error()["stage"] == "input");
    CHECK(bad.out.empty());

    auto missing = run_cli({"spectrum", "/nonexistent/graph.txt"});
    CHECK(missing.code == 2);
    CHECK(missing.error()["stage"] == "input");

    auto usage = run_cli({"frobnicate"});
    CHECK(usage.code == 2);
    CHECK(usage.error()["stage"] == "usage");
    CHECK(run_cli({}).code == 2);

    auto json_path = write_temp("broken.json", "{\"host_n\": 4, \"parts\": [{\"edges\": [[0,1]], \"weight\": -1}]}");
    CHECK(run_cli({"bound", "--decomp", json_path}, emit_edge_list(gen::complete(4))).code == 2);
    CHECK(run_cli({"gen", "cycle", "2"}).code == 2);
}
