#include "gapcert/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gapcert {

double round_significant(double x, int digits)
{
    if (!std::isfinite(x) || x == 0.0)
        return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r; // drop negative zero
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

json num(double x)
{
    return round_significant(x);
}

json opt_num(const std::optional<double> &x)
{
    return x ? num(*x) : json(nullptr);
}

EdgeSubset edges_from_json(const json &part, std::size_t index)
{
    auto where = "part " + std::to_string(index);
    if (!part.is_object() || !part.contains("edges") || !part["edges"].is_array())
        throw InputError(where + ": expected an object with an \"edges\" array");
    std::vector<Edge> edges;
    for (const auto &e : part["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError(where + ": each edge must be a pair of integers");
        auto u = e[0].get<long long>();
        auto v = e[1].get<long long>();
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
            throw InputError(where + ": vertex id out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return EdgeSubset(std::move(edges));
    }
    catch (const InputError &e) {
        throw InputError(where + ": " + e.what());
    }
}

} // namespace

json decomposition_to_json(const FractionalDecomposition &d)
{
    json parts = json::array();
    for (const auto &p : d.parts()) {
        json edges = json::array();
        for (const auto &e : p.edges.edges())
            edges.push_back({e.u, e.v});
        // Weights are written at full precision so that a round trip
        // re-certifies at the internal tolerance.
        parts.push_back({{"edges", std::move(edges)}, {"weight", p.weight}});
    }
    return {{"host_n", d.host_n()}, {"parts", std::move(parts)}};
}

FractionalDecomposition decomposition_from_json(const json &doc)
{
    if (!doc.is_object() || !doc.contains("host_n") || !doc.contains("parts"))
        throw InputError("decomposition must have \"host_n\" and \"parts\"");
    if (!doc["host_n"].is_number_integer() || doc["host_n"].get<long long>() < 0)
        throw InputError("\"host_n\" must be a non-negative integer");
    if (!doc["parts"].is_array())
        throw InputError("\"parts\" must be an array");

    std::vector<WeightedPart> parts;
    std::size_t index = 0;
    for (const auto &p : doc["parts"]) {
        auto edges = edges_from_json(p, index);
        if (!p.contains("weight") || !p["weight"].is_number())
            throw InputError("part " + std::to_string(index) + ": missing numeric \"weight\"");
        parts.push_back({std::move(edges), p["weight"].get<double>()});
        ++index;
    }
    return FractionalDecomposition(static_cast<int>(doc["host_n"].get<long long>()), std::move(parts));
}

std::vector<EdgeSubset> parts_from_json(const json &doc)
{
    if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array())
        throw InputError("family document must have a \"parts\" array");
    std::vector<EdgeSubset> parts;
    std::size_t index = 0;
    for (const auto &p : doc["parts"])
        parts.push_back(edges_from_json(p, index++));
    return parts;
}

json certificate_to_json(const BoundCertificate &cert)
{
    json classes = json::array();
    for (const auto &c : cert.report.classes)
        classes.push_back({{"iso", c.iso},
                           {"d", c.degree},
                           {"s", num(c.s)},
                           {"delta_H", num(c.delta)},
                           {"order", c.representative.order()},
                           {"members", c.members.size()}});
    json out;
    out["checks"] = {{"host", cert.host_ok},
                     {"edge_condition", cert.edge_condition_ok},
                     {"classify", cert.classify_ok},
                     {"homogeneity", cert.homogeneity_ok},
                     {"degree_identity", cert.degree_identity_ok}};
    out["failed_stage"] = cert.failed_stage ? json(*cert.failed_stage) : json(nullptr);
    out["detail"] = cert.failure_detail;
    out["classes"] = std::move(classes);
    out["k"] = cert.k;
    out["bound"] = opt_num(cert.bound);
    out["delta_actual"] = opt_num(cert.delta_actual);
    out["slack"] = opt_num(cert.slack);
    return out;
}

json spectrum_to_json(const Graph &g, const SpectralSummary &s)
{
    json values = json::array();
    for (double x : s.eigenvalues)
        values.push_back(num(x));
    auto k = is_regular(g);
    return {{"n", g.order()},
            {"m", g.size()},
            {"regular_degree", k ? json(*k) : json(nullptr)},
            {"bipartite", is_bipartite(g)},
            {"connected", is_connected(g)},
            {"eigenvalues", std::move(values)},
            {"lambda_1", num(s.lambda_1)},
            {"lambda_min", num(s.lambda_min)},
            {"delta", num(s.delta)}};
}

json cycles_to_json(const CycleList &list)
{
    return {{"length", list.length}, {"count", list.cycles.size()}, {"cycles", list.cycles}};
}

json array_to_json(const IntersectionArray &ia)
{
    return {{"diameter", ia.diameter()}, {"k", ia.k()}, {"b", ia.b}, {"c", ia.c}};
}

json regularity_to_json(const DistanceRegularity &r)
{
    json out;
    out["distance_regular"] = r.distance_regular();
    out["array"] = r.array ? array_to_json(*r.array) : json(nullptr);
    if (r.witness) {
        const auto &w = *r.witness;
        out["witness"] = {{"u", w.u},
                          {"v", w.v},
                          {"distance", w.distance},
                          {"parameter", w.parameter},
                          {"expected", w.expected},
                          {"found", w.found}};
    }
    else
        out["witness"] = nullptr;
    return out;
}

json drg_bound_to_json(const DrgBoundReport &r)
{
    auto opt_int = [](const std::optional<std::uint64_t> &x) { return x ? json(*x) : json(nullptr); };
    return {{"distance_regular", r.distance_regular},
            {"array", r.array ? array_to_json(*r.array) : json(nullptr)},
            {"k", r.k},
            {"h", r.h},
            {"g", r.g},
            {"p", opt_int(r.p)},
            {"q", opt_int(r.q)},
            {"cycles_per_edge", opt_int(r.enumerated_per_edge)},
            {"corollary_bound", num(r.corollary)},
            {"taylor_minorant", num(r.taylor)},
            {"certified_bound", opt_num(r.certified_bound)},
            {"delta_actual", num(r.delta_actual)}};
}

json optimize_to_json(const OptimizeResult &r, const DecompositionLp &lp)
{
    json out;
    out["status"] = to_string(r.solution.status);
    out["variables"] = lp.lp.variables();
    out["edge_rows"] = lp.edge_rows;
    out["homogeneity_rows"] = lp.homogeneity_rows;
    out["iterations"] = r.solution.iterations;
    out["objective"] = r.feasible() ? num(r.solution.objective) : json(nullptr);
    out["decomposition"] = r.decomposition ? decomposition_to_json(*r.decomposition) : json(nullptr);
    out["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : json(nullptr);
    return out;
}

} // namespace gapcert
