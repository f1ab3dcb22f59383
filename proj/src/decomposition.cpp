#include "gapcert/decomposition.hpp"

#include "gapcert/canonical.hpp"
#include "gapcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace gapcert {

FractionalDecomposition::FractionalDecomposition(int host_n, std::vector<WeightedPart> parts)
    : _host_n(host_n), _parts(std::move(parts))
{
    if (host_n < 0)
        throw InputError("negative host vertex count");
    for (std::size_t i = 0; i < _parts.size(); ++i) {
        const auto &p = _parts[i];
        if (!std::isfinite(p.weight) || p.weight <= 0.0)
            throw InputError("part " + std::to_string(i) + ": weight must be positive and finite");
        if (p.edges.empty())
            throw InputError("part " + std::to_string(i) + ": no edges");
        if (p.edges.max_vertex() >= host_n)
            throw InputError("part " + std::to_string(i) + ": vertex " + std::to_string(p.edges.max_vertex()) +
                             " outside host of order " + std::to_string(host_n));
    }
}

FractionalDecomposition FractionalDecomposition::scaled(double factor) const
{
    auto parts = _parts;
    for (auto &p : parts)
        p.weight *= factor;
    return FractionalDecomposition(_host_n, std::move(parts));
}

EdgeConditionResult verify_edge_condition(const Graph &g, const FractionalDecomposition &d, double tol)
{
    if (d.host_n() != g.order())
        throw StageError("edge-condition", "decomposition host_n=" + std::to_string(d.host_n()) +
                                               " does not match graph order " + std::to_string(g.order()));

    std::vector<double> sum(g.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto &part = d.parts()[i];
        for (const auto &e : part.edges.edges()) {
            auto id = g.edge_id(e.u, e.v);
            if (!id)
                throw StageError("edge-condition", "part " + std::to_string(i) + " uses {" + std::to_string(e.u) +
                                                       "," + std::to_string(e.v) + "}, which is not a host edge");
            sum[*id] += part.weight;
        }
    }

    EdgeConditionResult result;
    for (std::size_t id = 0; id < g.size(); ++id)
        if (!(std::abs(sum[id] - 1.0) <= tol))
            result.violations.push_back({g.edges()[id], sum[id]});
    result.ok = result.violations.empty();
    return result;
}

ClassReport classify_parts(const std::vector<EdgeSubset> &parts)
{
    ClassReport report;
    report.class_of.resize(parts.size());
    std::unordered_map<std::string, std::size_t> index;

    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto sup = support(parts[i]);
        auto degree = is_regular(sup.graph);
        if (!degree) {
            std::ostringstream msg;
            msg << "part " << i << " has a non-regular support (degrees";
            for (Vertex v = 0; v < sup.graph.order(); ++v)
                msg << ' ' << sup.graph.degree(v);
            msg << ")";
            throw StageError("classify", msg.str());
        }

        auto form = canonical_form(sup.graph);
        auto [it, inserted] = index.try_emplace(form.certificate, report.classes.size());
        if (inserted) {
            IsoClass cls;
            cls.iso = form.certificate;
            cls.degree = *degree;
            auto spec = spectral_summary(sup.graph);
            cls.delta = spec.delta;
            cls.lambda_min = spec.lambda_min;
            cls.representative = std::move(sup.graph);
            report.classes.push_back(std::move(cls));
        }
        report.classes[it->second].members.push_back(i);
        report.class_of[i] = it->second;
    }
    return report;
}

ClassReport classify(const Graph &g, const FractionalDecomposition &d)
{
    if (d.host_n() != g.order())
        throw StageError("classify", "decomposition host_n does not match graph order");
    std::vector<EdgeSubset> parts;
    parts.reserve(d.size());
    for (const auto &p : d.parts())
        parts.push_back(p.edges);
    return classify_parts(parts);
}

HomogeneityResult homogeneity(const Graph &g, const FractionalDecomposition &d, const ClassReport &report, double tol)
{
    const int n = g.order();
    HomogeneityResult result;
    result.per_vertex.assign(report.t(), std::vector<double>(n, 0.0));

    for (std::size_t i = 0; i < d.size(); ++i) {
        auto &row = result.per_vertex[report.class_of[i]];
        auto sup = support(d.parts()[i].edges);
        for (Vertex v : sup.vertices)
            row[v] += d.parts()[i].weight;
    }

    result.s.resize(report.t(), 0.0);
    for (std::size_t j = 0; j < report.t(); ++j) {
        const auto &row = result.per_vertex[j];
        if (n == 0)
            continue;
        result.s[j] = row[0];
        for (Vertex v = 0; v < n; ++v) {
            double dev = std::abs(row[v] - row[0]);
            if (dev > result.max_deviation) {
                result.max_deviation = dev;
                result.worst_class = j;
                result.worst_vertex = v;
            }
        }
    }
    result.ok = result.max_deviation <= tol;
    return result;
}

bool check_degree_identity(const ClassReport &report, int k, double tol)
{
    double sum = 0;
    for (const auto &c : report.classes)
        sum += c.degree * c.s;
    return std::abs(sum - k) <= tol;
}

double compute_bound(const ClassReport &report)
{
    double bound = 0;
    for (const auto &c : report.classes)
        bound += c.delta * c.s;
    return bound;
}

BoundCertificate certify(const Graph &g, const FractionalDecomposition &d, const CertifyOptions &opts)
{
    BoundCertificate cert;
    auto fail = [&](std::string stage, std::string detail) {
        cert.failed_stage = std::move(stage);
        cert.failure_detail = std::move(detail);
        return cert;
    };

    auto k = is_regular(g);
    if (!k)
        return fail("host", "host graph is not regular");
    if (!is_connected(g))
        return fail("host", "host graph is not connected");
    cert.k = *k;
    cert.host_ok = true;

    if (opts.compute_actual)
        cert.delta_actual = spectral_summary(g).delta;

    try {
        auto edge = verify_edge_condition(g, d, opts.tolerance);
        cert.edge_violations = edge.violations;
        if (!edge.ok) {
            std::ostringstream msg;
            const auto &v = edge.violations.front();
            msg << edge.violations.size() << " edge(s) violate the edge condition; first {" << v.edge.u << ","
                << v.edge.v << "} has weight sum " << v.weight_sum;
            return fail("edge-condition", msg.str());
        }
        cert.edge_condition_ok = true;

        cert.report = classify(g, d);
        cert.classify_ok = true;
    }
    catch (const StageError &e) {
        return fail(e.stage(), e.what());
    }

    auto hom = homogeneity(g, d, cert.report, opts.tolerance);
    for (std::size_t j = 0; j < cert.report.t(); ++j)
        cert.report.classes[j].s = hom.s[j];
    if (!hom.ok) {
        std::ostringstream msg;
        msg << "class " << hom.worst_class << " weight at vertex " << hom.worst_vertex << " deviates from vertex 0 by "
            << hom.max_deviation;
        return fail("homogeneity", msg.str());
    }
    cert.homogeneity_ok = true;

    if (!check_degree_identity(cert.report, cert.k, opts.tolerance))
        return fail("degree-identity", "sum of d_j s_j differs from k=" + std::to_string(cert.k));
    cert.degree_identity_ok = true;

    cert.bound = compute_bound(cert.report);
    if (cert.delta_actual)
        cert.slack = *cert.delta_actual - *cert.bound;
    return cert;
}

ProofReplay replay_proof_chain(const Graph &g, const FractionalDecomposition &d)
{
    auto cert = certify(g, d, {.compute_actual = false, .tolerance = DecompositionTolerance::user});
    if (!cert.valid())
        throw StageError("replay", "decomposition does not certify: " + cert.failure_detail);

    auto mev = min_eigenvector(g);
    const auto &x = mev.x;

    ProofReplay out;
    out.lambda_min = mev.lambda_min;
    out.multiplicity = mev.multiplicity;
    bool all = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto &part = d.parts()[i];
        PartReplay pr;
        for (const auto &e : part.edges.edges())
            pr.quadratic += 2.0 * x[e.u] * x[e.v];
        for (Vertex v : support(part.edges).vertices)
            pr.support_mass += x[v] * x[v];
        pr.lambda_min = cert.report.classes[cert.report.class_of[i]].lambda_min;
        pr.holds = pr.quadratic >= pr.lambda_min * pr.support_mass - Tolerance::assertion;
        all = all && pr.holds;
        out.weighted_sum += part.weight * pr.quadratic;
        out.weighted_minorant += part.weight * pr.lambda_min * pr.support_mass;
        out.parts.push_back(pr);
    }
    for (const auto &c : cert.report.classes)
        out.class_minorant += c.lambda_min * c.s;

    bool telescoped = std::abs(out.weighted_sum - out.lambda_min) <= 1e-7;
    bool concluded = out.lambda_min >= out.class_minorant - 1e-7;
    out.holds = all && telescoped && concluded;
    return out;
}

FractionalDecomposition line_graph_star_decomposition(const Graph &h)
{
    if (!is_regular(h))
        throw InputError("star decomposition requires a regular graph");
    std::vector<WeightedPart> parts;
    for (Vertex v = 0; v < h.order(); ++v) {
        auto nbrs = h.neighbors(v);
        if (nbrs.size() < 2)
            throw InputError("star decomposition requires degree at least 2");
        std::vector<Edge> clique;
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                clique.emplace_back(static_cast<Vertex>(*h.edge_id(v, nbrs[a])),
                                    static_cast<Vertex>(*h.edge_id(v, nbrs[b])));
        parts.push_back({EdgeSubset(std::move(clique)), 1.0});
    }
    return FractionalDecomposition(static_cast<int>(h.size()), std::move(parts));
}

std::vector<EdgeSubset> line_graph_cycle_images(const Graph &h, const std::vector<std::vector<Vertex>> &cycles)
{
    std::vector<EdgeSubset> out;
    for (const auto &c : cycles) {
        const std::size_t len = c.size();
        std::vector<Vertex> ids(len);
        for (std::size_t i = 0; i < len; ++i) {
            auto id = h.edge_id(c[i], c[(i + 1) % len]);
            if (!id)
                throw InputError("cycle uses a non-edge");
            ids[i] = static_cast<Vertex>(*id);
        }
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < len; ++i)
            edges.emplace_back(ids[i], ids[(i + 1) % len]);
        out.emplace_back(std::move(edges));
    }
    return out;
}

} // namespace gapcert
