#include "gapcert/distances.hpp"

#include <algorithm>

namespace gapcert {

std::vector<int> bfs_distances(const Graph &g, Vertex source)
{
    std::vector<int> dist(g.order(), unreachable);
    std::vector<Vertex> frontier{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        Vertex v = frontier[head];
        for (Vertex w : g.neighbors(v))
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                frontier.push_back(w);
            }
    }
    return dist;
}

std::vector<int> all_pairs_distances(const Graph &g)
{
    const int n = g.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n, unreachable);
#pragma omp parallel for schedule(dynamic, 8) if (n >= 128)
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
    return table;
}

namespace serial {

std::vector<int> all_pairs_distances(const Graph &g)
{
    const int n = g.order();
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        table.insert(table.end(), row.begin(), row.end());
    }
    return table;
}

} // namespace serial

} // namespace gapcert
