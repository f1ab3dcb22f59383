#include "gapcert/canonical.hpp"

#include "gapcert/graph_io.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <optional>

namespace gapcert {

namespace {

using Colouring = std::vector<int>;

int colour_count(const Colouring &col)
{
    return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Iterated colour refinement. New colours are ranks of (old colour, sorted
// neighbour colours), so cell order depends only on structure.
Colouring refine(const Graph &g, Colouring col)
{
    const int n = g.order();
    int count = colour_count(col);
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            auto &s = sig[v];
            s.push_back(col[v]);
            for (Vertex w : g.neighbors(v))
                s.push_back(col[w]);
            std::sort(s.begin() + 1, s.end());
        }
        auto keys = sig;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (Vertex v = 0; v < n; ++v)
            col[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
        int next = static_cast<int>(keys.size());
        if (next == count)
            return col;
        count = next;
    }
}

Colouring individualise(Colouring col, Vertex v)
{
    int c = col[v];
    for (auto &x : col)
        if (x >= c)
            ++x;
    col[v] = c;
    return col;
}

struct Leaf {
    std::string certificate;
    std::vector<int> labeling;
    std::vector<Vertex> path;
};

class Search {
public:
    explicit Search(const Graph &g) : _g(g) {}

    CanonicalForm run()
    {
        visit(Colouring(_g.order(), 0));
        return {_best->certificate, _best->labeling};
    }

private:
    static constexpr int no_jump = INT_MAX;

    int visit(const Colouring &start)
    {
        auto col = refine(_g, start);
        const int n = _g.order();
        if (colour_count(col) == n)
            return leaf(col);

        // First non-singleton cell.
        std::vector<int> size(n, 0);
        for (int c : col)
            ++size[c];
        int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
        std::vector<Vertex> cell;
        for (Vertex v = 0; v < n; ++v)
            if (col[v] == target)
                cell.push_back(v);

        const int depth = static_cast<int>(_path.size());
        std::vector<Vertex> tried;
        for (Vertex v : cell) {
            if (!tried.empty() && covered_by_orbit(v, tried))
                continue;
            _path.push_back(v);
            int jump = visit(individualise(col, v));
            _path.pop_back();
            tried.push_back(v);
            if (jump < depth)
                return jump;
        }
        return no_jump;
    }

    int leaf(const Colouring &col)
    {
        Leaf here{emit_graph6(relabel(_g, col)), col, _path};
        if (!_first) {
            _first = here;
            _best = here;
            return no_jump;
        }
        if (here.certificate == _first->certificate) {
            record_automorphism(*_first, here);
            return common_prefix(_first->path, here.path);
        }
        if (here.certificate == _best->certificate) {
            record_automorphism(*_best, here);
            return common_prefix(_best->path, here.path);
        }
        if (here.certificate < _best->certificate)
            _best = here;
        return no_jump;
    }

    static int common_prefix(const std::vector<Vertex> &a, const std::vector<Vertex> &b)
    {
        auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        return static_cast<int>(ia - a.begin());
    }

    // gamma maps each vertex of `from` to the vertex with the same position in `to`.
    void record_automorphism(const Leaf &from, const Leaf &to)
    {
        const int n = _g.order();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v)
            at[to.labeling[v]] = v;
        std::vector<Vertex> gamma(n);
        for (Vertex v = 0; v < n; ++v)
            gamma[v] = at[from.labeling[v]];
        _generators.push_back(std::move(gamma));
    }

    // Is v in the orbit of some tried vertex under the automorphisms found so
    // far that fix the current path pointwise?
    bool covered_by_orbit(Vertex v, const std::vector<Vertex> &tried) const
    {
        const int n = _g.order();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto &gamma : _generators) {
            bool fixes = std::all_of(_path.begin(), _path.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (Vertex x = 0; x < n; ++x)
                parent[find(x)] = find(gamma[x]);
        }
        int root = find(v);
        return std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == root; });
    }

    const Graph &_g;
    std::vector<Vertex> _path;
    std::optional<Leaf> _first;
    std::optional<Leaf> _best;
    std::vector<std::vector<Vertex>> _generators;
};

} // namespace

Graph relabel(const Graph &g, const std::vector<int> &perm)
{
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto &[u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

CanonicalForm canonical_form(const Graph &g, int order_cap)
{
    order_cap = std::min(order_cap, graph6_max_order);
    if (g.order() > order_cap)
        throw StageError("canonical", "graph of order " + std::to_string(g.order()) +
                                          " exceeds the canonical-form size cap " + std::to_string(order_cap));
    return Search(g).run();
}

bool isomorphic(const Graph &a, const Graph &b, int order_cap)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a, order_cap).certificate == canonical_form(b, order_cap).certificate;
}

} // namespace gapcert
