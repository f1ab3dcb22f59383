#pragma once

#include "gapcert/graph.hpp"

#include <string>
#include <vector>

namespace gapcert::gen {

/// C_n, n >= 3.
Graph cycle(int n);
/// K_n, n >= 1.
Graph complete(int n);
/// K_{a,b}; part A is 0..a-1.
Graph complete_bipartite(int a, int b);
/// Outer 5-cycle 0..4, spokes i~i+5, inner pentagram i+5 ~ (i+2 mod 5)+5.
Graph petersen();
/// Q_d on bit strings of length d.
Graph hypercube(int d);
/// Vertices are the edges of g in g.edges() order; adjacent when they share
/// an endpoint.
Graph line_graph(const Graph &g);
/// Blow-up of C_{2h+1}: vertex (cycle position p, class index c) is p*k + c,
/// and (p,c) ~ (q,d) iff p ~ q in the cycle.
Graph blow_up_odd_cycle(int h, int k);

/// Name-based dispatch used by the CLI. Families: cycle N, complete N,
/// complete-bipartite A B, petersen, hypercube D, blow-up H K.
Graph by_name(const std::string &family, const std::vector<int> &params);

} // namespace gapcert::gen
