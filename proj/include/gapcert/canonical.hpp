#pragma once

#include "gapcert/graph.hpp"

#include <string>
#include <vector>

namespace gapcert {

inline constexpr int default_canonical_order_cap = 20;

/// Canonical labelling of a small graph. `certificate` is the graph6 string of
/// the relabelled graph, so two graphs are isomorphic iff their certificates
/// match. labeling[v] is the canonical position of vertex v.
struct CanonicalForm {
    std::string certificate;
    std::vector<int> labeling;
};

/// Colour refinement followed by an individualisation search tree; leaves
/// equivalent under automorphisms found so far are pruned. Throws StageError
/// ("canonical") when g.order() exceeds order_cap.
CanonicalForm canonical_form(const Graph &g, int order_cap = default_canonical_order_cap);

bool isomorphic(const Graph &a, const Graph &b, int order_cap = default_canonical_order_cap);

/// Relabels g so that vertex v becomes perm[v].
Graph relabel(const Graph &g, const std::vector<int> &perm);

} // namespace gapcert
