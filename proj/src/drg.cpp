#include "gapcert/drg.hpp"

#include "gapcert/cycles.hpp"
#include "gapcert/distances.hpp"
#include "gapcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gapcert {

int IntersectionArray::a(int i) const
{
    int bi = i < diameter() ? b.at(i) : 0;
    int ci = i == 0 ? 0 : c.at(i - 1);
    return k() - bi - ci;
}

void IntersectionArray::validate() const
{
    if (b.size() != c.size() || c.empty())
        throw InputError("intersection array needs D values of b and of c");
    if (c.front() != 1)
        throw InputError("intersection array must have c_1 = 1");
    for (int i = 0; i < diameter(); ++i) {
        if (b[i] < 1)
            throw InputError("b_" + std::to_string(i) + " must be positive");
        if (c[i] < 1)
            throw InputError("c_" + std::to_string(i + 1) + " must be positive");
    }
    for (int i = 0; i <= diameter(); ++i)
        if (a(i) < 0)
            throw InputError("a_" + std::to_string(i) + " is negative");
}

DistanceRegularity check_distance_regular(const Graph &g)
{
    const char *stage = "distance-regular";
    if (g.order() == 0 || !is_connected(g))
        throw StageError(stage, "distance-regularity requires a connected graph");
    if (!is_regular(g))
        throw StageError(stage, "distance-regularity requires a regular graph");

    const int n = g.order();
    auto dist = all_pairs_distances(g);
    auto d = [&](Vertex x, Vertex y) { return dist[static_cast<std::size_t>(x) * n + y]; };
    const int diameter = *std::max_element(dist.begin(), dist.end());

    std::vector<int> bs(diameter + 1, -1);
    std::vector<int> cs(diameter + 1, -1);
    DistanceRegularity out;

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            int i = d(u, v);
            int c = 0;
            int b = 0;
            for (Vertex w : g.neighbors(v)) {
                int j = d(u, w);
                if (j == i - 1)
                    ++c;
                else if (j == i + 1)
                    ++b;
            }
            for (auto [name, seen, value] : {std::tuple{"c", &cs, c}, std::tuple{"b", &bs, b}}) {
                int &expected = (*seen)[i];
                if (expected < 0)
                    expected = value;
                else if (expected != value) {
                    out.witness = RegularityWitness{u, v, i, name, expected, value};
                    return out;
                }
            }
        }

    IntersectionArray ia;
    ia.b.assign(bs.begin(), bs.begin() + diameter);
    ia.c.assign(cs.begin() + 1, cs.end());
    out.array = std::move(ia);
    return out;
}

std::uint64_t path_count_p(const IntersectionArray &ia, int h)
{
    if (h < 1 || h > ia.diameter())
        throw InputError("h=" + std::to_string(h) + " outside 1.." + std::to_string(ia.diameter()));
    std::uint64_t p = 1;
    for (int i = 0; i < h; ++i)
        p *= static_cast<std::uint64_t>(ia.c[i]);
    return p;
}

std::uint64_t common_distance_q(const Graph &g, int h)
{
    const char *stage = "distance-regular";
    if (g.size() == 0)
        throw StageError(stage, "graph has no edges");
    const int n = g.order();
    auto dist = all_pairs_distances(g);

    std::optional<std::uint64_t> q;
    for (const auto &[x, y] : g.edges()) {
        std::uint64_t count = 0;
        for (Vertex v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(x) * n + v] == h && dist[static_cast<std::size_t>(y) * n + v] == h)
                ++count;
        if (q && *q != count)
            throw StageError(stage, "number of vertices at distance " + std::to_string(h) +
                                        " from both ends varies across edges (" + std::to_string(*q) + " vs " +
                                        std::to_string(count) + ")");
        q = count;
    }
    if (*q == 0)
        throw StageError(stage, "no vertex is at distance " + std::to_string(h) + " from both ends of an edge");
    return *q;
}

std::uint64_t predicted_cycle_count(std::uint64_t p, std::uint64_t q)
{
    return p * p * q;
}

double corollary_bound(int k, int h)
{
    return (1.0 - std::cos(std::numbers::pi / (2 * h + 1))) * k;
}

double taylor_minorant(int k, int h)
{
    double x = std::numbers::pi / (2 * h + 1);
    double x2 = x * x;
    return (x2 / 2.0 - x2 * x2 / 24.0) * k;
}

double odd_cycle_sharpness(int odd_girth)
{
    double c = std::cos((odd_girth - 1) * std::numbers::pi / (2.0 * odd_girth));
    return 2.0 * c * c;
}

DrgBoundReport drg_bound(const Graph &g)
{
    auto k = is_regular(g);
    if (!k || !is_connected(g))
        throw StageError("host", "drg-bound requires a connected regular graph");
    auto girth = odd_girth(g);
    if (!girth)
        throw StageError("odd-girth", "graph is bipartite and has no odd girth");

    DrgBoundReport r;
    r.k = *k;
    r.g = *girth;
    r.h = (*girth - 1) / 2;
    r.corollary = corollary_bound(r.k, r.h);
    r.taylor = taylor_minorant(r.k, r.h);
    r.delta_actual = spectral_summary(g).delta;

    auto drg = check_distance_regular(g);
    r.distance_regular = drg.distance_regular();
    r.array = drg.array;

    auto counts = cycles_per_edge(g, r.g);
    if (counts.uniform)
        r.enumerated_per_edge = counts.counts.front();

    if (r.distance_regular) {
        r.p = path_count_p(*r.array, r.h);
        r.q = common_distance_q(g, r.h);
        auto predicted = predicted_cycle_count(*r.p, *r.q);
        if (!r.enumerated_per_edge || *r.enumerated_per_edge != predicted)
            throw StageError("count-mismatch", "p^2 q = " + std::to_string(predicted) +
                                                   " disagrees with the enumerated per-edge cycle count");
    }

    if (r.enumerated_per_edge) {
        auto cert = certify(g, odd_cycle_decomposition(g));
        if (cert.valid())
            r.certified_bound = cert.bound;
    }
    return r;
}

} // namespace gapcert
