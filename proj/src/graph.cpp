#include "gapcert/graph.hpp"

#include <algorithm>
#include <queue>

namespace gapcert {

Graph::Graph(int n, std::span<const Edge> edges) : _n(n)
{
    if (n < 0)
        throw InputError("negative vertex count");

    _edges.reserve(edges.size());
    for (const auto &e : edges) {
        if (e.u < 0 || e.v < 0)
            throw InputError("negative vertex id");
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= n)
            throw InputError("vertex " + std::to_string(e.v) + " out of range for n=" + std::to_string(n));
        _edges.push_back(e);
    }
    std::sort(_edges.begin(), _edges.end());
    _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());

    std::vector<int> deg(n, 0);
    for (const auto &e : _edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    _offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        _offsets[v + 1] = _offsets[v] + deg[v];
    _adj.resize(_offsets[n]);
    std::vector<int> fill(_offsets.begin(), _offsets.end() - 1);
    for (const auto &e : _edges) {
        _adj[fill[e.u]++] = e.v;
        _adj[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(_adj.begin() + _offsets[v], _adj.begin() + _offsets[v + 1]);

    _edge_id.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = 0; i < _edges.size(); ++i) {
        const auto [u, v] = _edges[i];
        _edge_id[static_cast<std::size_t>(u) * n + v] = static_cast<std::int32_t>(i);
        _edge_id[static_cast<std::size_t>(v) * n + u] = static_cast<std::int32_t>(i);
    }
}

std::optional<std::size_t> Graph::edge_id(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || a >= _n || b >= _n)
        return std::nullopt;
    auto id = _edge_id[static_cast<std::size_t>(a) * _n + b];
    if (id < 0)
        return std::nullopt;
    return static_cast<std::size_t>(id);
}

std::vector<double> Graph::adjacency_matrix() const
{
    std::vector<double> a(static_cast<std::size_t>(_n) * _n, 0.0);
    for (const auto &[u, v] : _edges) {
        a[static_cast<std::size_t>(u) * _n + v] = 1.0;
        a[static_cast<std::size_t>(v) * _n + u] = 1.0;
    }
    return a;
}

std::optional<int> is_regular(const Graph &g)
{
    if (g.order() == 0)
        return std::nullopt;
    int k = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != k)
            return std::nullopt;
    return k;
}

bool is_connected(const Graph &g)
{
    if (g.order() == 0)
        return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.order();
}

bool is_bipartite(const Graph &g)
{
    std::vector<int> colour(g.order(), -1);
    std::queue<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    queue.push(w);
                }
                else if (colour[w] == colour[v])
                    return false;
            }
        }
    }
    return true;
}

EdgeSubset::EdgeSubset(std::vector<Edge> edges) : _edges(std::move(edges))
{
    for (const auto &e : _edges) {
        if (e.u < 0)
            throw InputError("negative vertex id in part");
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u) + " in part");
    }
    std::sort(_edges.begin(), _edges.end());
    auto dup = std::adjacent_find(_edges.begin(), _edges.end());
    if (dup != _edges.end())
        throw InputError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} in part");
}

bool EdgeSubset::contains(const Edge &e) const
{
    return std::binary_search(_edges.begin(), _edges.end(), e);
}

Vertex EdgeSubset::max_vertex() const
{
    Vertex m = -1;
    for (const auto &e : _edges)
        m = std::max(m, e.v);
    return m;
}

Support support(const EdgeSubset &part)
{
    if (part.empty())
        throw StageError("support", "empty part has no support");

    Support s;
    for (const auto &e : part.edges()) {
        s.vertices.push_back(e.u);
        s.vertices.push_back(e.v);
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());

    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(s.vertices.begin(), s.vertices.end(), v) - s.vertices.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(part.size());
    for (const auto &e : part.edges())
        edges.emplace_back(local(e.u), local(e.v));
    s.graph = Graph(static_cast<int>(s.vertices.size()), edges);
    return s;
}

} // namespace gapcert
