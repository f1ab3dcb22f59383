#include "gapcert/lp_optimizer.hpp"

#include "gapcert/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace gapcert {

CandidateFamily CandidateFamily::from_parts(std::vector<EdgeSubset> parts)
{
    if (parts.empty())
        throw InputError("candidate family is empty");
    CandidateFamily fam;
    fam.classes = classify_parts(parts);
    fam.parts = std::move(parts);
    return fam;
}

DecompositionLp build_decomposition_lp(const Graph &g, const CandidateFamily &family)
{
    const int n = g.order();
    const std::size_t vars = family.parts.size();
    const std::size_t t = family.classes.t();

    // membership[i][v]: vertex v is in the support of part i.
    std::vector<std::vector<char>> membership(vars, std::vector<char>(n, 0));
    std::vector<std::vector<double>> edge_rows(g.size(), std::vector<double>(vars, 0.0));
    for (std::size_t i = 0; i < vars; ++i)
        for (const auto &e : family.parts[i].edges()) {
            auto id = g.edge_id(e.u, e.v);
            if (!id)
                throw StageError("lp", "part " + std::to_string(i) + " uses {" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) + "}, which is not a host edge");
            edge_rows[*id][i] = 1.0;
            membership[i][e.u] = 1;
            membership[i][e.v] = 1;
        }

    DecompositionLp out{LinearProgram(vars)};
    for (auto &row : edge_rows)
        out.lp.add_equality(std::move(row), 1.0);
    out.edge_rows = g.size();

    const Vertex base = 0;
    for (Vertex v = 1; v < n; ++v)
        for (std::size_t j = 0; j < t; ++j) {
            std::vector<double> row(vars, 0.0);
            bool nonzero = false;
            for (std::size_t i : family.classes.classes[j].members) {
                row[i] = static_cast<double>(membership[i][v]) - static_cast<double>(membership[i][base]);
                nonzero = nonzero || row[i] != 0.0;
            }
            if (nonzero) {
                out.lp.add_equality(std::move(row), 0.0);
                ++out.homogeneity_rows;
            }
        }

    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i : family.classes.classes[j].members)
            if (n > 0 && membership[i][base])
                out.lp.objective()[i] = family.classes.classes[j].delta;
    return out;
}

OptimizeResult optimize_bound(const Graph &g, const CandidateFamily &family, const OptimizeOptions &opts)
{
    auto model = build_decomposition_lp(g, family);
    OptimizeResult out;
    out.solution = solve_lp(model.lp);
    if (!out.feasible())
        return out;

    std::vector<WeightedPart> parts;
    for (std::size_t i = 0; i < family.parts.size(); ++i)
        if (out.solution.values[i] > opts.drop_below)
            parts.push_back({family.parts[i], out.solution.values[i]});
    out.decomposition = FractionalDecomposition(g.order(), std::move(parts));
    out.certificate = certify(g, *out.decomposition,
                              {.compute_actual = opts.compute_actual, .tolerance = DecompositionTolerance::lp});

    const auto &cert = *out.certificate;
    if (!cert.valid())
        throw StageError("lp", "optimised weights fail certification at stage " + *cert.failed_stage + ": " +
                                   cert.failure_detail);
    if (std::abs(*cert.bound - out.solution.objective) > DecompositionTolerance::lp)
        throw StageError("lp", "certified bound disagrees with the LP objective");
    return out;
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph &g, std::uint64_t limit) : _g(g), _limit(limit) {}

    std::vector<std::vector<Vertex>> run()
    {
        std::vector<Vertex> p(_g.order());
        for (Vertex v = 0; v < _g.order(); ++v)
            p[v] = v;
        expand(p, {});
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
    }

private:
    std::vector<Vertex> neighbours_in(Vertex v, const std::vector<Vertex> &set) const
    {
        std::vector<Vertex> out;
        auto nb = _g.neighbors(v);
        std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
        return out;
    }

    void expand(std::vector<Vertex> p, std::vector<Vertex> x)
    {
        if (++_nodes > _limit)
            throw StageError("cliques", "maximal clique enumeration exceeded the search limit of " +
                                            std::to_string(_limit) + " nodes");
        if (p.empty()) {
            if (x.empty() && _r.size() >= 2) {
                auto clique = _r;
                std::sort(clique.begin(), clique.end());
                _found.push_back(std::move(clique));
            }
            return;
        }

        // Pivot with the most neighbours in P.
        Vertex pivot = p.front();
        std::size_t best = 0;
        for (const auto *set : {&p, &x})
            for (Vertex u : *set) {
                auto c = neighbours_in(u, p).size();
                if (c > best || (c == best && u < pivot)) {
                    best = c;
                    pivot = u;
                }
            }

        std::vector<Vertex> candidates;
        auto pn = _g.neighbors(pivot);
        std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(candidates));
        for (Vertex v : candidates) {
            _r.push_back(v);
            expand(neighbours_in(v, p), neighbours_in(v, x));
            _r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    const Graph &_g;
    std::uint64_t _limit;
    std::uint64_t _nodes = 0;
    std::vector<Vertex> _r;
    std::vector<std::vector<Vertex>> _found;
};

EdgeSubset clique_edges(const std::vector<Vertex> &clique)
{
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            edges.emplace_back(clique[a], clique[b]);
    return EdgeSubset(std::move(edges));
}

} // namespace

std::vector<std::vector<Vertex>> maximal_cliques(const Graph &g, const EnumerationOptions &opts)
{
    return CliqueSearch(g, opts.node_limit).run();
}

FamilySpec parse_family_spec(const std::string &text)
{
    if (text == "odd-girth-cycles")
        return {FamilyKind::odd_girth_cycles, 0, {}};
    if (text == "maximal-cliques")
        return {FamilyKind::maximal_cliques, 0, {}};
    if (text.starts_with("cycles=")) {
        FamilySpec spec{FamilyKind::cycles, 0, {}};
        auto digits = std::string_view(text).substr(7);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), spec.length);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || spec.length < 3)
            throw InputError("cycles=L needs an integer L >= 3");
        return spec;
    }
    if (text.starts_with("file=") && text.size() > 5)
        return {FamilyKind::file, 0, text.substr(5)};
    throw InputError("unknown family '" + text + "' (odd-girth-cycles, cycles=L, maximal-cliques, file=PATH)");
}

CandidateFamily standard_family(const Graph &g, const FamilySpec &spec, const EnumerationOptions &opts)
{
    std::vector<EdgeSubset> parts;
    switch (spec.kind) {
    case FamilyKind::odd_girth_cycles: {
        if (!is_connected(g))
            throw StageError("family", "odd-girth cycles need a connected graph");
        auto girth = odd_girth(g);
        if (!girth)
            throw StageError("family", "graph is bipartite and has no odd cycles");
        for (const auto &c : enumerate_cycles(g, *girth, opts).cycles)
            parts.push_back(cycle_edges(c));
        break;
    }
    case FamilyKind::cycles:
        for (const auto &c : enumerate_cycles(g, spec.length, opts).cycles)
            parts.push_back(cycle_edges(c));
        break;
    case FamilyKind::maximal_cliques:
        for (const auto &c : maximal_cliques(g, opts))
            parts.push_back(clique_edges(c));
        break;
    case FamilyKind::file: {
        json doc;
        try {
            doc = json::parse(read_text_file(spec.path));
        }
        catch (const json::exception &e) {
            throw InputError(spec.path + ": " + e.what());
        }
        parts = parts_from_json(doc);
        break;
    }
    }
    if (parts.empty())
        throw StageError("family", "candidate family is empty");
    return CandidateFamily::from_parts(std::move(parts));
}

} // namespace gapcert
