#include "gapcert/generators.hpp"

namespace gapcert::gen {

namespace {

void require_positive(int value, const char *what, int minimum = 1)
{
    if (value < minimum)
        throw InputError(std::string(what) + " must be at least " + std::to_string(minimum) + ", got " +
                         std::to_string(value));
}

} // namespace

Graph cycle(int n)
{
    require_positive(n, "cycle length", 3);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n)
{
    require_positive(n, "complete graph order");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    require_positive(a, "part size");
    require_positive(b, "part size");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
}

Graph hypercube(int d)
{
    require_positive(d, "hypercube dimension");
    if (d > 9)
        throw InputError("hypercube dimension too large");
    int n = 1 << d;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit)
            if (int w = v ^ (1 << bit); v < w)
                edges.emplace_back(v, w);
    return Graph(n, edges);
}

Graph line_graph(const Graph &g)
{
    if (g.size() == 0)
        throw InputError("line graph of an edgeless graph");
    const auto &es = g.edges();
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                edges.emplace_back(static_cast<Vertex>(*g.edge_id(v, nbrs[a])),
                                   static_cast<Vertex>(*g.edge_id(v, nbrs[b])));
    }
    return Graph(static_cast<int>(es.size()), edges);
}

Graph blow_up_odd_cycle(int h, int k)
{
    require_positive(h, "half odd girth");
    require_positive(k, "blow-up size");
    int len = 2 * h + 1;
    std::vector<Edge> edges;
    for (int p = 0; p < len; ++p) {
        int q = (p + 1) % len;
        for (int c = 0; c < k; ++c)
            for (int d = 0; d < k; ++d)
                edges.emplace_back(p * k + c, q * k + d);
    }
    return Graph(len * k, edges);
}

Graph by_name(const std::string &family, const std::vector<int> &params)
{
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw InputError("family '" + family + "' takes " + std::to_string(count) + " parameter(s), got " +
                             std::to_string(params.size()));
    };
    if (family == "cycle") {
        want(1);
        return cycle(params[0]);
    }
    if (family == "complete") {
        want(1);
        return complete(params[0]);
    }
    if (family == "complete-bipartite") {
        want(2);
        return complete_bipartite(params[0], params[1]);
    }
    if (family == "petersen") {
        want(0);
        return petersen();
    }
    if (family == "hypercube") {
        want(1);
        return hypercube(params[0]);
    }
    if (family == "blow-up") {
        want(2);
        return blow_up_odd_cycle(params[0], params[1]);
    }
    throw InputError("unknown graph family '" + family + "'");
}

} // namespace gapcert::gen
