#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapcert {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge &) const = default;
};

/// Error raised by a named processing stage. The stage string is what the CLI
/// reports back to the caller.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string &what)
        : std::runtime_error(what), _stage(std::move(stage)) {}

    const std::string &stage() const noexcept { return _stage; }

private:
    std::string _stage;
};

/// Malformed input (parse errors, invalid parameters).
class InputError : public StageError {
public:
    explicit InputError(const std::string &what) : StageError("input", what) {}
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs collapse to a single
    /// edge; self-loops and out-of-range endpoints throw InputError.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return _n; }
    std::size_t size() const noexcept { return _edges.size(); }

    /// Sorted edge list; position in this list is the edge id.
    const std::vector<Edge> &edges() const noexcept { return _edges; }

    /// Sorted neighbour list of v.
    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {_adj.data() + _offsets[v], _adj.data() + _offsets[v + 1]};
    }

    int degree(Vertex v) const { return _offsets[v + 1] - _offsets[v]; }

    bool adjacent(Vertex a, Vertex b) const
    {
        return _edge_id[static_cast<std::size_t>(a) * _n + b] >= 0;
    }

    /// Index into edges() of {a,b}, or nullopt when not an edge.
    std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

    /// Dense row-major 0/1 adjacency matrix.
    std::vector<double> adjacency_matrix() const;

    bool operator==(const Graph &other) const
    {
        return _n == other._n && _edges == other._edges;
    }

private:
    int _n = 0;
    std::vector<Edge> _edges;
    std::vector<int> _offsets{0};
    std::vector<Vertex> _adj;
    std::vector<std::int32_t> _edge_id;
};

/// Returns the common degree, or nullopt when degrees differ. The empty graph
/// on zero vertices has no degree.
std::optional<int> is_regular(const Graph &g);

bool is_connected(const Graph &g);

/// Proper 2-colouring exists (checked per component).
bool is_bipartite(const Graph &g);

/// Subgraph of g induced by a set of edges: vertices of positive degree only,
/// relabelled 0..|V|-1 in increasing host order.
struct Support {
    std::vector<Vertex> vertices; // local index -> host vertex
    Graph graph;
};

/// Set of host edges, no duplicates. Endpoints are validated against a host
/// size when the owning decomposition is built.
class EdgeSubset {
public:
    EdgeSubset() = default;

    /// Throws InputError on a self-loop or a repeated edge.
    explicit EdgeSubset(std::vector<Edge> edges);

    const std::vector<Edge> &edges() const noexcept { return _edges; }
    std::size_t size() const noexcept { return _edges.size(); }
    bool empty() const noexcept { return _edges.empty(); }
    bool contains(const Edge &e) const;
    Vertex max_vertex() const;

    bool operator==(const EdgeSubset &) const = default;

private:
    std::vector<Edge> _edges; // sorted
};

/// V_i and the positive-degree subgraph G_i' of a part. Throws StageError
/// ("support") on an empty part.
Support support(const EdgeSubset &part);

} // namespace gapcert
