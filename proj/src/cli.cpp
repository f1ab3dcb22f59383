#include "gapcert/cli.hpp"

#include "gapcert/generators.hpp"
#include "gapcert/graph_io.hpp"
#include "gapcert/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace gapcert::cli {

namespace {

// Thrown after structured diagnostics have been written to stdout.
struct CheckFailure {
    std::string stage;
    std::string message;
};

std::string slurp(const std::string &path, std::istream &in)
{
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return read_text_file(path);
}

json load_json(const std::string &path)
{
    auto text = read_text_file(path);
    try {
        return json::parse(text);
    }
    catch (const json::exception &e) {
        throw InputError(path + ": " + e.what());
    }
}

double user_tolerance()
{
    if (const char *env = std::getenv("SPECTRAL_DECOMP_TOL")) {
        char *end = nullptr;
        double tol = std::strtod(env, &end);
        if (end != env && *end == '\0' && tol > 0)
            return tol;
        throw InputError("SPECTRAL_DECOMP_TOL must be a positive number");
    }
    return DecompositionTolerance::user;
}

void print(std::ostream &out, const json &doc)
{
    out << doc.dump(2) << '\n';
}

void write_error(std::ostream &err, const std::string &stage, const std::string &message)
{
    err << json{{"error", message}, {"stage", stage}}.dump() << '\n';
}

json violations_to_json(const std::vector<EdgeViolation> &violations)
{
    json out = json::array();
    for (const auto &v : violations)
        out.push_back({{"edge", {v.edge.u, v.edge.v}}, {"weight_sum", round_significant(v.weight_sum)}});
    return out;
}

struct Options {
    std::string input;
    bool plain = false;

    std::string family;
    std::vector<int> params;
    std::string out_format = "edge-list";

    int length = 0;
    std::string decomp;
    bool odd_cycles = false;
    bool actual = false;
    std::string family_spec;
};

void cmd_gen(const Options &o, std::istream &in, std::ostream &out)
{
    Graph g;
    if (o.family == "line-graph") {
        if (!o.params.empty())
            throw InputError("line-graph takes its base graph from the input, not parameters");
        g = gen::line_graph(parse_graph(slurp(o.input, in)));
    }
    else
        g = gen::by_name(o.family, o.params);

    if (o.out_format == "graph6")
        out << emit_graph6(g) << '\n';
    else
        out << emit_edge_list(g);
}

void cmd_spectrum(const Graph &g, const Options &o, std::ostream &out)
{
    auto s = spectral_summary(g);
    if (o.plain) {
        out << "lambda_1 " << round_significant(s.lambda_1) << "\nlambda_min " << round_significant(s.lambda_min)
            << "\ndelta " << round_significant(s.delta) << '\n';
        return;
    }
    print(out, spectrum_to_json(g, s));
}

void cmd_oddgirth(const Graph &g, const Options &o, std::ostream &out)
{
    auto girth = odd_girth(g);
    if (o.plain) {
        if (girth)
            out << *girth << '\n';
        else
            out << "bipartite\n";
        return;
    }
    print(out, {{"odd_girth", girth ? json(*girth) : json("bipartite")}});
}

void cmd_cycles(const Graph &g, const Options &o, std::ostream &out)
{
    print(out, cycles_to_json(enumerate_cycles(g, o.length)));
}

void cmd_verify(const Graph &g, const Options &o, std::ostream &out)
{
    auto d = decomposition_from_json(load_json(o.decomp));
    const double tol = user_tolerance();

    json doc;
    auto edge = verify_edge_condition(g, d, tol);
    doc["edge_condition"] = {{"ok", edge.ok}, {"violations", violations_to_json(edge.violations)}};
    doc["classes"] = nullptr;
    doc["homogeneity"] = nullptr;
    doc["failed_stage"] = nullptr;
    if (!edge.ok) {
        doc["failed_stage"] = "edge-condition";
        print(out, doc);
        throw CheckFailure{"edge-condition", std::to_string(edge.violations.size()) + " edge(s) violate the edge condition"};
    }

    ClassReport report;
    try {
        report = classify(g, d);
    }
    catch (const StageError &e) {
        doc["failed_stage"] = e.stage();
        print(out, doc);
        throw CheckFailure{e.stage(), e.what()};
    }
    auto hom = homogeneity(g, d, report, tol);
    json classes = json::array();
    for (std::size_t j = 0; j < report.t(); ++j)
        classes.push_back({{"iso", report.classes[j].iso},
                           {"d", report.classes[j].degree},
                           {"s", round_significant(hom.s[j])},
                           {"members", report.classes[j].members.size()}});
    doc["classes"] = std::move(classes);
    doc["homogeneity"] = {{"ok", hom.ok}, {"max_deviation", round_significant(hom.max_deviation)}};
    if (!hom.ok) {
        doc["failed_stage"] = "homogeneity";
        print(out, doc);
        throw CheckFailure{"homogeneity", "per-vertex class weights are not constant"};
    }
    print(out, doc);
}

void cmd_bound(const Graph &g, const Options &o, std::ostream &out)
{
    if (o.odd_cycles == !o.decomp.empty())
        throw InputError("bound needs exactly one of --decomp PATH or --odd-cycles");

    FractionalDecomposition d;
    double tol = DecompositionTolerance::internal;
    if (o.odd_cycles)
        d = odd_cycle_decomposition(g);
    else {
        d = decomposition_from_json(load_json(o.decomp));
        tol = user_tolerance();
    }
    auto cert = certify(g, d, {.compute_actual = o.actual, .tolerance = tol});
    print(out, certificate_to_json(cert));
    if (!cert.valid())
        throw CheckFailure{*cert.failed_stage, cert.failure_detail};
}

void cmd_drg_check(const Graph &g, std::ostream &out)
{
    auto r = check_distance_regular(g);
    print(out, regularity_to_json(r));
    if (!r.distance_regular())
        throw CheckFailure{"distance-regular", "graph is not distance-regular"};
}

void cmd_drg_bound(const Graph &g, std::ostream &out)
{
    auto r = drg_bound(g);
    print(out, drg_bound_to_json(r));
    if (!r.distance_regular)
        throw CheckFailure{"distance-regular", "graph is not distance-regular; the corollary bound does not apply"};
}

void cmd_optimize(const Graph &g, const Options &o, std::ostream &out)
{
    auto family = standard_family(g, parse_family_spec(o.family_spec));
    auto model = build_decomposition_lp(g, family);
    auto result = optimize_bound(g, family);
    print(out, optimize_to_json(result, model));
    if (!result.feasible())
        throw CheckFailure{"lp", "no homogeneous fractional decomposition exists within this family (LP " +
                                     to_string(result.solution.status) + ")"};
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Certified lower bounds on lambda_min + lambda_1 of regular graphs from homogeneous fractional "
                 "decompositions"};
    app.name("gapcert");
    app.require_subcommand(1);
    Options o;

    auto input_opt = [&](CLI::App *sub) {
        sub->add_option("input", o.input, "graph file (edge list or graph6); stdin when omitted or '-'");
        sub->add_flag("--plain", o.plain, "plain text instead of JSON where supported");
    };

    auto *gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("family", o.family,
                    "cycle N | complete N | complete-bipartite A B | petersen | hypercube D | blow-up H K | "
                    "line-graph (of the graph on stdin or --input)")
        ->required();
    gen->add_option("params", o.params, "integer parameters");
    gen->add_option("--input", o.input, "base graph for line-graph");
    gen->add_option("--out-format", o.out_format, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));

    auto *spectrum = app.add_subcommand("spectrum", "adjacency spectrum, lambda_1, lambda_min and the gap");
    input_opt(spectrum);
    auto *oddgirth = app.add_subcommand("oddgirth", "length of the shortest odd cycle");
    input_opt(oddgirth);
    auto *cycles = app.add_subcommand("cycles", "all simple cycles of one length");
    input_opt(cycles);
    cycles->add_option("--length,-L", o.length, "cycle length")->required()->check(CLI::Range(3, 1 << 20));
    auto *verify = app.add_subcommand("verify-decomp", "check the edge condition, classes and homogeneity");
    input_opt(verify);
    verify->add_option("--decomp", o.decomp, "decomposition JSON")->required();
    auto *bound = app.add_subcommand("bound", "certify a decomposition and report the bound");
    input_opt(bound);
    bound->add_option("--decomp", o.decomp, "decomposition JSON");
    bound->add_flag("--odd-cycles", o.odd_cycles, "use all shortest odd cycles with uniform weight");
    bound->add_flag("--actual", o.actual, "also compute the exact gap and the slack");
    auto *drg_check = app.add_subcommand("drg-check", "distance-regularity and intersection array");
    input_opt(drg_check);
    auto *drg_bound_cmd = app.add_subcommand("drg-bound", "odd-girth bound for distance-regular graphs");
    input_opt(drg_bound_cmd);
    auto *optimize = app.add_subcommand("optimize", "maximise the certified bound over a candidate family");
    input_opt(optimize);
    optimize->add_option("--family", o.family_spec, "odd-girth-cycles | cycles=L | maximal-cliques | file=PATH")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    }
    catch (const CLI::ParseError &e) {
        write_error(err, "usage", e.what());
        return usage_error;
    }

    try {
        if (gen->parsed()) {
            cmd_gen(o, in, out);
            return ok;
        }
        Graph g = parse_graph(slurp(o.input, in));
        if (spectrum->parsed())
            cmd_spectrum(g, o, out);
        else if (oddgirth->parsed())
            cmd_oddgirth(g, o, out);
        else if (cycles->parsed())
            cmd_cycles(g, o, out);
        else if (verify->parsed())
            cmd_verify(g, o, out);
        else if (bound->parsed())
            cmd_bound(g, o, out);
        else if (drg_check->parsed())
            cmd_drg_check(g, out);
        else if (drg_bound_cmd->parsed())
            cmd_drg_bound(g, out);
        else if (optimize->parsed())
            cmd_optimize(g, o, out);
        return ok;
    }
    catch (const CheckFailure &f) {
        write_error(err, f.stage, f.message);
        return check_failed;
    }
    catch (const InputError &e) {
        write_error(err, e.stage(), e.what());
        return usage_error;
    }
    catch (const StageError &e) {
        write_error(err, e.stage(), e.what());
        return check_failed;
    }
}

} // namespace gapcert::cli
