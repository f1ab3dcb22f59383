#include "gapcert/cycles.hpp"

#include "gapcert/distances.hpp"

#include <algorithm>
#include <atomic>
#include <climits>

namespace gapcert {

namespace {

// Shortest closed odd walk through v, or INT_MAX. Stops expanding once the
// BFS depth reaches `cutoff`.
int odd_closed_walk(const Graph &g, Vertex v, int cutoff)
{
    const int n = g.order();
    std::vector<int> dist(2 * static_cast<std::size_t>(n), -1);
    std::vector<int> queue{2 * v};
    dist[2 * v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int state = queue[head];
        int d = dist[state];
        if (d + 1 >= cutoff)
            break;
        int parity = state & 1;
        for (Vertex w : g.neighbors(state >> 1)) {
            int next = 2 * w + (1 - parity);
            if (dist[next] >= 0)
                continue;
            dist[next] = d + 1;
            if (next == 2 * v + 1)
                return d + 1;
            queue.push_back(next);
        }
    }
    return INT_MAX;
}

void require_connected_for_girth(const Graph &g)
{
    if (!is_connected(g))
        throw StageError("odd-girth", "odd girth requires a connected graph");
}

class NodeGuard {
public:
    explicit NodeGuard(std::uint64_t limit) : _limit(limit) {}

    bool tick()
    {
        if (_count.fetch_add(1, std::memory_order_relaxed) + 1 > _limit)
            _exceeded.store(true, std::memory_order_relaxed);
        return !exceeded();
    }
    bool exceeded() const { return _exceeded.load(std::memory_order_relaxed); }

    [[noreturn]] void fail(const char *what) const
    {
        throw StageError("cycles", std::string(what) + " exceeded the search limit of " + std::to_string(_limit) +
                                       " backtracking nodes");
    }

private:
    std::uint64_t _limit;
    std::atomic<std::uint64_t> _count{0};
    std::atomic<bool> _exceeded{false};
};

class RootSearch {
public:
    RootSearch(const Graph &g, const std::vector<int> &dist, int length, NodeGuard &guard)
        : _g(g), _dist(dist), _length(length), _guard(guard), _on_path(g.order(), 0)
    {
    }

    std::vector<std::vector<Vertex>> run(Vertex root)
    {
        _root = root;
        _found.clear();
        _path.assign(1, root);
        _on_path[root] = 1;
        extend();
        _on_path[root] = 0;
        return std::move(_found);
    }

private:
    void extend()
    {
        const int n = _g.order();
        Vertex last = _path.back();
        if (static_cast<int>(_path.size()) == _length) {
            if (_g.adjacent(last, _root) && _path[1] < _path.back())
                _found.push_back(_path);
            return;
        }
        const int closing = _length - static_cast<int>(_path.size());
        for (Vertex w : _g.neighbors(last)) {
            if (w <= _root || _on_path[w])
                continue;
            int back = _dist[static_cast<std::size_t>(w) * n + _root];
            if (back < 0 || back > closing)
                continue;
            if (!_guard.tick())
                return;
            _path.push_back(w);
            _on_path[w] = 1;
            extend();
            _on_path[w] = 0;
            _path.pop_back();
            if (_guard.exceeded())
                return;
        }
    }

    const Graph &_g;
    const std::vector<int> &_dist;
    int _length;
    NodeGuard &_guard;
    std::vector<char> _on_path;
    Vertex _root = 0;
    std::vector<Vertex> _path;
    std::vector<std::vector<Vertex>> _found;
};

void check_length(int length)
{
    if (length < 3)
        throw InputError("cycle length must be at least 3");
}

CycleList sorted_list(int length, std::vector<std::vector<std::vector<Vertex>>> &by_root)
{
    CycleList list{length, {}};
    for (auto &chunk : by_root)
        for (auto &c : chunk)
            list.cycles.push_back(std::move(c));
    std::sort(list.cycles.begin(), list.cycles.end());
    return list;
}

} // namespace

std::optional<int> odd_girth(const Graph &g)
{
    require_connected_for_girth(g);
    const int n = g.order();
    int best = INT_MAX;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best) if (n >= 64)
    for (Vertex v = 0; v < n; ++v)
        best = std::min(best, odd_closed_walk(g, v, best));
    if (best == INT_MAX)
        return std::nullopt;
    return best;
}

CycleList enumerate_cycles(const Graph &g, int length, const EnumerationOptions &opts)
{
    check_length(length);
    const int n = g.order();
    if (length > n)
        return {length, {}};

    auto dist = all_pairs_distances(g);
    NodeGuard guard(opts.node_limit);
    std::vector<std::vector<std::vector<Vertex>>> by_root(n);

#pragma omp parallel if (n >= 32)
    {
        RootSearch search(g, dist, length, guard);
#pragma omp for schedule(dynamic, 1)
        for (Vertex r = 0; r < n; ++r)
            if (!guard.exceeded())
                by_root[r] = search.run(r);
    }
    if (guard.exceeded())
        guard.fail("cycle enumeration");
    return sorted_list(length, by_root);
}

namespace serial {

std::optional<int> odd_girth(const Graph &g)
{
    require_connected_for_girth(g);
    int best = INT_MAX;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, odd_closed_walk(g, v, INT_MAX));
    if (best == INT_MAX)
        return std::nullopt;
    return best;
}

CycleList enumerate_cycles(const Graph &g, int length, const EnumerationOptions &opts)
{
    check_length(length);
    const int n = g.order();
    if (length > n)
        return {length, {}};

    auto dist = serial::all_pairs_distances(g);
    NodeGuard guard(opts.node_limit);
    RootSearch search(g, dist, length, guard);
    std::vector<std::vector<std::vector<Vertex>>> by_root(n);
    for (Vertex r = 0; r < n && !guard.exceeded(); ++r)
        by_root[r] = search.run(r);
    if (guard.exceeded())
        guard.fail("cycle enumeration");
    return sorted_list(length, by_root);
}

} // namespace serial

EdgeCycleCounts cycles_per_edge(const Graph &g, const CycleList &list)
{
    EdgeCycleCounts out;
    out.counts.assign(g.size(), 0);
    out.cycles = list.cycles.size();
    for (const auto &c : list.cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            ++out.counts[*g.edge_id(c[i], c[(i + 1) % c.size()])];
    out.uniform = std::adjacent_find(out.counts.begin(), out.counts.end(), std::not_equal_to<>()) == out.counts.end();
    return out;
}

EdgeCycleCounts cycles_per_edge(const Graph &g, int length, const EnumerationOptions &opts)
{
    return cycles_per_edge(g, enumerate_cycles(g, length, opts));
}

EdgeSubset cycle_edges(const std::vector<Vertex> &cycle)
{
    std::vector<Edge> edges;
    edges.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i)
        edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    return EdgeSubset(std::move(edges));
}

FractionalDecomposition odd_cycle_decomposition(const Graph &g, const EnumerationOptions &opts)
{
    const char *stage = "odd-cycle-decomposition";
    if (!is_connected(g))
        throw StageError(stage, "graph is not connected");
    auto girth = odd_girth(g);
    if (!girth)
        throw StageError(stage, "graph is bipartite and has no odd cycles");

    auto list = enumerate_cycles(g, *girth, opts);
    auto counts = cycles_per_edge(g, list);
    if (!counts.uniform) {
        auto [lo, hi] = std::minmax_element(counts.counts.begin(), counts.counts.end());
        throw StageError(stage, "non-uniform per-edge count of " + std::to_string(*girth) + "-cycles (between " +
                                    std::to_string(*lo) + " and " + std::to_string(*hi) + ")");
    }
    const double weight = 1.0 / static_cast<double>(counts.counts.front());

    std::vector<WeightedPart> parts;
    parts.reserve(list.cycles.size());
    for (const auto &c : list.cycles)
        parts.push_back({cycle_edges(c), weight});
    return FractionalDecomposition(g.order(), std::move(parts));
}

} // namespace gapcert
