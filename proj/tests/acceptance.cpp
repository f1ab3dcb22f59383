// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "gapcert/cli.hpp"
#include "gapcert/cycles.hpp"
#include "gapcert/decomposition.hpp"
#include "gapcert/drg.hpp"
#include "gapcert/generators.hpp"
#include "gapcert/graph_io.hpp"
#include "gapcert/json_io.hpp"
#include "gapcert/lp_optimizer.hpp"
#include "gapcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace gapcert;

namespace {

const double sqrt5 = std::sqrt(5.0);
const double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// Corpus shared by the soundness and degree-identity criteria.
struct Pair {
    std::string name;
    Graph g;
    FractionalDecomposition d;
    double tolerance = DecompositionTolerance::internal;
};
std::vector<Pair> corpus;

IsoClass cycle_class(int n, double s)
{
    IsoClass c;
    c.representative = gen::cycle(n);
    c.degree = 2;
    auto spec = spectral_summary(c.representative);
    c.delta = spec.delta;
    c.lambda_min = spec.lambda_min;
    c.s = s;
    return c;
}

std::vector<EdgeSubset> line_petersen_parts()
{
    auto pet = gen::petersen();
    std::vector<EdgeSubset> parts;
    auto stars = line_graph_star_decomposition(pet);
    for (const auto &p : stars.parts())
        parts.push_back(p.edges);
    for (auto &img : line_graph_cycle_images(pet, enumerate_cycles(pet, 5).cycles))
        parts.push_back(std::move(img));
    return parts;
}

FractionalDecomposition with_weights(int n, const std::vector<EdgeSubset> &parts, const std::vector<double> &w)
{
    std::vector<WeightedPart> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (w[i] > 1e-10)
            out.push_back({parts[i], w[i]});
    return FractionalDecomposition(n, std::move(out));
}

Outcome criterion_1()
{
    Outcome o;
    ClassReport r;
    r.classes = {cycle_class(3, 1.5), cycle_class(5, 0.5)};
    double b = compute_bound(r);
    o.require(std::abs(b - (9 - sqrt5) / 4) <= 1e-9, "bound " + fmt(b));
    o.require(std::abs(b - 1.690983005625) <= 1e-9, "bound " + fmt(b));
    if (o.pass)
        o.detail = "bound " + fmt(b);
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    auto g = gen::line_graph(gen::petersen());
    auto parts = line_petersen_parts();
    double delta = spectral_summary(g).delta;
    for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
        std::vector<double> w(22, (1 - alpha) / 2);
        std::fill(w.begin(), w.begin() + 10, alpha);
        auto d = with_weights(15, parts, w);
        auto cert = certify(g, d);
        double expected = 3 - sqrt5 + alpha * (sqrt5 - 1);
        o.require(cert.valid(), "alpha " + fmt(alpha) + " failed " + cert.failed_stage.value_or(""));
        if (cert.valid())
            o.require(std::abs(*cert.bound - expected) <= 1e-8, "alpha " + fmt(alpha) + " bound " + fmt(*cert.bound));
        corpus.push_back({"L(Petersen) alpha=" + fmt(alpha), g, d});
    }
    auto lp = optimize_bound(g, CandidateFamily::from_parts(parts));
    o.require(lp.feasible(), "LP " + to_string(lp.solution.status));
    if (lp.feasible()) {
        o.require(std::abs(lp.solution.objective - 2.0) <= 1e-7, "LP objective " + fmt(lp.solution.objective));
        corpus.push_back({"L(Petersen) LP optimum", g, *lp.decomposition, DecompositionTolerance::lp});
    }
    o.require(std::abs(delta - 2.0) <= 1e-8, "delta " + fmt(delta));
    if (o.pass)
        o.detail = "LP objective " + fmt(lp.solution.objective) + ", delta " + fmt(delta);
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    std::vector<std::pair<std::string, Graph>> hosts{
        {"K_4", gen::complete(4)}, {"Petersen", gen::petersen()}, {"3-cube", gen::hypercube(3)}};
    for (const auto &[name, h] : hosts) {
        int k = *is_regular(h);
        auto lg = gen::line_graph(h);
        auto d = line_graph_star_decomposition(h);
        auto cert = certify(lg, d);
        o.require(cert.valid(), name + ": " + cert.failed_stage.value_or(""));
        if (cert.valid())
            o.require(std::abs(*cert.bound - 2.0 * (k - 2)) <= 1e-8, name + " bound " + fmt(*cert.bound));
        corpus.push_back({"L(" + name + ") stars", lg, d});

        // The LP over every maximal clique can only do at least as well.
        auto lp = optimize_bound(lg, standard_family(lg, parse_family_spec("maximal-cliques")));
        o.require(lp.feasible() && lp.solution.objective >= 2.0 * (k - 2) - 1e-8, name + " clique LP");
        if (lp.feasible())
            corpus.push_back({"L(" + name + ") clique LP", lg, *lp.decomposition, DecompositionTolerance::lp});

        if (h.size() > static_cast<std::size_t>(h.order())) {
            double lmin = spectral_summary(lg).lambda_min;
            o.require(std::abs(lmin + 2.0) <= 1e-8, name + " lambda_min " + fmt(lmin));
        }
    }
    if (o.pass)
        o.detail = "bounds 2, 2, 2 and lambda_min -2 on K_4, Petersen, 3-cube";
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    double worst = 0;
    for (int h = 1; h <= 3; ++h)
        for (int k = 1; k <= 3; ++k) {
            auto g = gen::blow_up_odd_cycle(h, k);
            auto d = odd_cycle_decomposition(g);
            auto cert = certify(g, d, {.compute_actual = true});
            std::string tag = "(h,k)=(" + std::to_string(h) + "," + std::to_string(k) + ")";
            o.require(cert.valid(), tag + " " + cert.failed_stage.value_or(""));
            if (cert.valid()) {
                worst = std::max(worst, std::abs(*cert.slack));
                o.require(std::abs(*cert.slack) <= 1e-8, tag + " slack " + fmt(*cert.slack));
            }
            corpus.push_back({"blow-up " + tag, g, d});
        }
    if (o.pass)
        o.detail = "max |slack| " + fmt(worst);
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    auto g = gen::petersen();
    auto ia = check_distance_regular(g).array;
    o.require(ia.has_value(), "Petersen not distance-regular");
    if (!ia)
        return o;
    auto p = path_count_p(*ia, 2);
    auto q = common_distance_q(g, 2);
    auto counts = cycles_per_edge(g, 5);
    o.require(p == 1 && q == 4, "p " + std::to_string(p) + " q " + std::to_string(q));
    o.require(counts.uniform && counts.counts.front() == predicted_cycle_count(p, q), "per-edge count mismatch");

    auto d = odd_cycle_decomposition(g);
    o.require(d.size() == 12, std::to_string(d.size()) + " cycles");
    for (const auto &part : d.parts())
        o.require(part.weight == 0.25, "weight " + fmt(part.weight));
    auto cert = certify(g, d, {.compute_actual = true});
    o.require(cert.valid(), "certificate failed " + cert.failed_stage.value_or(""));
    if (cert.valid()) {
        o.require(std::abs(*cert.bound - corollary_bound(3, 2)) <= 1e-8, "bound " + fmt(*cert.bound));
        o.require(std::abs(*cert.bound - 0.572949017) <= 1e-8, "bound " + fmt(*cert.bound));
        o.require(std::abs(*cert.delta_actual - 1.0) <= 1e-8 && *cert.delta_actual >= *cert.bound,
                  "delta " + fmt(*cert.delta_actual));
        if (o.pass)
            o.detail = "p=1 q=4 bound " + fmt(*cert.bound);
    }
    corpus.push_back({"Petersen pentagons", g, d});
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    for (int h = 1; h <= 50; ++h)
        for (int k : {2, 3, 10})
            o.require(corollary_bound(k, h) > taylor_minorant(k, h),
                      "h=" + std::to_string(h) + " k=" + std::to_string(k));
    double worst = 0;
    for (int h = 1; h <= 20; ++h) {
        double delta = spectral_summary(gen::cycle(2 * h + 1)).delta;
        worst = std::max(worst, std::abs(delta - corollary_bound(2, h)));
        o.require(std::abs(delta - corollary_bound(2, h)) <= 1e-8, "C_" + std::to_string(2 * h + 1));
    }
    if (o.pass)
        o.detail = "max |delta(C_g) - bound| " + fmt(worst);
    return o;
}

void add_random_lp_points()
{
    std::mt19937 rng(20261019);
    std::uniform_real_distribution<double> u(-1, 1);
    auto k4 = gen::complete(4);
    std::vector<WeightedPart> k4parts;
    for (const auto &c : enumerate_cycles(k4, 3).cycles)
        k4parts.push_back({cycle_edges(c), 0.5});
    corpus.push_back({"K_4 triangles", k4, FractionalDecomposition(4, k4parts)});

    auto k5 = gen::complete(5);
    std::vector<EdgeSubset> k5parts;
    for (int len : {3, 5})
        for (const auto &c : enumerate_cycles(k5, len).cycles)
            k5parts.push_back(cycle_edges(c));

    struct Source {
        std::string name;
        Graph g;
        std::vector<EdgeSubset> parts;
    };
    std::vector<Source> sources{{"L(Petersen)", gen::line_graph(gen::petersen()), line_petersen_parts()},
                                {"K_5 triangles+pentagons", k5, k5parts}};
    for (const auto &src : sources) {
        auto model = build_decomposition_lp(src.g, CandidateFamily::from_parts(src.parts));
        for (int trial = 0; trial < 6; ++trial) {
            auto probe = model.lp;
            for (auto &c : probe.objective())
                c = u(rng);
            auto sol = solve_lp(probe);
            if (sol.status != LpStatus::optimal)
                continue;
            corpus.push_back({src.name + " random point " + std::to_string(trial), src.g,
                              with_weights(src.g.order(), src.parts, sol.values), DecompositionTolerance::lp});
        }
    }
}

Outcome criterion_7()
{
    Outcome o;
    add_random_lp_points();
    o.require(corpus.size() >= 25, "corpus has only " + std::to_string(corpus.size()) + " pairs");
    double worst = -1e300;
    for (const auto &pair : corpus) {
        auto cert = certify(pair.g, pair.d, {.compute_actual = true, .tolerance = pair.tolerance});
        o.require(cert.valid(), pair.name + ": " + cert.failed_stage.value_or(""));
        if (!cert.valid())
            continue;
        worst = std::max(worst, *cert.bound - *cert.delta_actual);
        o.require(*cert.bound <= *cert.delta_actual + 1e-7, pair.name + " bound exceeds delta");
        try {
            o.require(replay_proof_chain(pair.g, pair.d).holds, pair.name + " replay fails");
        }
        catch (const StageError &e) {
            o.require(false, pair.name + " replay: " + e.what());
        }
    }
    if (o.pass)
        o.detail = std::to_string(corpus.size()) + " pairs, max bound - delta " + fmt(worst);
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    double worst = 0;
    for (const auto &pair : corpus) {
        auto cert = certify(pair.g, pair.d, {.tolerance = pair.tolerance});
        if (!cert.valid()) {
            o.require(false, pair.name + " invalid");
            continue;
        }
        double sum = 0;
        for (const auto &c : cert.report.classes)
            sum += c.degree * c.s;
        worst = std::max(worst, std::abs(sum - cert.k));
        o.require(std::abs(sum - cert.k) <= 1e-9, pair.name + " residual " + fmt(sum - cert.k));
    }
    if (o.pass)
        o.detail = std::to_string(corpus.size()) + " certificates, max residual " + fmt(worst);
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    for (int n = 3; n <= 20; ++n) {
        auto got = spectral_summary(gen::cycle(n)).eigenvalues;
        std::vector<double> want;
        for (int j = 0; j < n; ++j)
            want.push_back(2 * std::cos(2 * pi * j / n));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        for (int i = 0; i < n; ++i)
            o.require(std::abs(got[i] - want[i]) <= 1e-8, "C_" + std::to_string(n));
    }
    for (const auto &g : {gen::cycle(4), gen::cycle(6), gen::complete_bipartite(3, 3)})
        o.require(std::abs(spectral_summary(g).delta) <= 1e-8, "bipartite delta nonzero");
    if (o.pass)
        o.detail = "C_3..C_20 and C_4, C_6, K_33";
    return o;
}

Outcome criterion_10()
{
    Outcome o;
    auto call = [](std::vector<std::string> args, const Graph &g) {
        std::istringstream in(emit_edge_list(g));
        std::ostringstream out;
        std::ostringstream err;
        int code = cli::run(args, in, out, err);
        std::string stage;
        try {
            stage = json::parse(err.str()).value("stage", "");
        }
        catch (const json::exception &) {
        }
        return std::pair{code, stage};
    };
    auto tmp = [](const std::string &name, const std::string &text) {
        auto path = std::filesystem::temp_directory_path() / ("gapcert_acceptance_" + name);
        std::ofstream(path) << text;
        return path.string();
    };

    Graph chord(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0), Edge(0, 2)});
    o.require(!cycles_per_edge(chord, 3).uniform, "C_5 plus chord has uniform triangle counts");
    auto a = call({"bound", "--odd-cycles"}, chord);
    o.require(a == std::pair{1, std::string("odd-cycle-decomposition")},
              "chord: exit " + std::to_string(a.first) + " stage " + a.second);

    FractionalDecomposition paths(4, {{EdgeSubset({Edge(0, 1), Edge(1, 2)}), 1.0},
                                      {EdgeSubset({Edge(2, 3), Edge(3, 0)}), 1.0}});
    auto b = call({"bound", "--decomp", tmp("paths.json", decomposition_to_json(paths).dump())}, gen::cycle(4));
    o.require(b == std::pair{1, std::string("classify")}, "paths: exit " + std::to_string(b.first) + " stage " + b.second);

    auto single = optimize_bound(gen::complete(4), CandidateFamily::from_parts({cycle_edges({0, 1, 2})}));
    o.require(single.solution.status == LpStatus::infeasible, "single triangle LP " + to_string(single.solution.status));
    auto c = call({"optimize", "--family", "file=" + tmp("triangle.json", R"({"parts":[{"edges":[[0,1],[1,2],[2,0]]}]})")},
                  gen::complete(4));
    o.require(c == std::pair{1, std::string("lp")}, "triangle: exit " + std::to_string(c.first) + " stage " + c.second);
    if (o.pass)
        o.detail = "stages odd-cycle-decomposition, classify, lp with exit 1";
    return o;
}

} // namespace

int main()
{
    std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                   criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        }
        catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << '\n';
    }
    return failures ? 1 : 0;
}
