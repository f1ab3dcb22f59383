#include "gapcert/canonical.hpp"
#include "gapcert/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace gapcert;

namespace {

// Exhaustive isomorphism test over all n! bijections.
bool brute_force_isomorphic(const Graph &a, const Graph &b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto &e : a.edges())
            if (!b.adjacent(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph random_graph(std::mt19937 &rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::vector<int> random_perm(std::mt19937 &rng, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("isomorphism examples")
{
    auto c5 = gen::cycle(5);
    CHECK(isomorphic(c5, relabel(c5, {3, 0, 4, 1, 2})));

    Graph two_triangles(6, {Edge(0, 1), Edge(1, 2), Edge(2, 0), Edge(3, 4), Edge(4, 5), Edge(5, 3)});
    CHECK_FALSE(isomorphic(gen::cycle(6), two_triangles));

    CHECK(isomorphic(gen::complete(3), gen::cycle(3)));
    CHECK_FALSE(isomorphic(gen::cycle(5), gen::cycle(6)));
}

TEST_CASE("canonical form is relabelling invariant")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + trial % 20;
        auto g = random_graph(rng, n, 0.2 + 0.6 * (trial % 3) / 2.0);
        auto h = relabel(g, random_perm(rng, n));
        auto cg = canonical_form(g);
        CHECK(cg.certificate == canonical_form(h).certificate);
        // The labelling really produces the certified graph.
        auto relabelled = relabel(g, cg.labeling);
        CHECK(canonical_form(relabelled).certificate == cg.certificate);
    }
}

TEST_CASE("canonical isomorphism agrees with brute force")
{
    std::mt19937 rng(8);
    int agreements = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 3 + trial % 5;
        auto a = random_graph(rng, n, 0.5);
        auto b = (trial % 2) ? relabel(a, random_perm(rng, n)) : random_graph(rng, n, 0.5);
        bool expected = brute_force_isomorphic(a, b);
        CHECK(isomorphic(a, b) == expected);
        agreements += expected;
    }
    CHECK(agreements >= 200);
}

TEST_CASE("highly symmetric graphs finish")
{
    for (const auto &g : {gen::petersen(), gen::complete(12), gen::hypercube(4), gen::complete_bipartite(6, 6),
                          gen::line_graph(gen::petersen()), gen::blow_up_odd_cycle(2, 3), gen::cycle(20)}) {
        auto h = relabel(g, [&] {
            std::vector<int> p(g.order());
            std::iota(p.rbegin(), p.rend(), 0);
            return p;
        }());
        CHECK(isomorphic(g, h));
    }
}

TEST_CASE("order cap")
{
    CHECK_THROWS_AS(canonical_form(gen::cycle(21)), StageError);
    CHECK_NOTHROW(canonical_form(gen::cycle(21), 30));
}
