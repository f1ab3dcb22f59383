#pragma once

#include "gapcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gapcert {

/// {b_0,...,b_{D-1}; c_1,...,c_D} of a distance-regular graph.
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    int diameter() const noexcept { return static_cast<int>(c.size()); }
    int k() const noexcept { return b.empty() ? 0 : b.front(); }
    /// a_i = k - b_i - c_i with b_D = 0 and c_0 = 0.
    int a(int i) const;

    /// Throws InputError unless c_1 = 1, b_i >= 1 (i < D), c_i >= 1, a_i >= 0.
    void validate() const;

    bool operator==(const IntersectionArray &) const = default;
};

/// First ordered pair (u,v) at distance i whose count disagrees with the
/// value seen earlier for distance i.
struct RegularityWitness {
    Vertex u = 0;
    Vertex v = 0;
    int distance = 0;
    std::string parameter; // "b" or "c"
    int expected = 0;
    int found = 0;
};

struct DistanceRegularity {
    std::optional<IntersectionArray> array;
    std::optional<RegularityWitness> witness;

    bool distance_regular() const noexcept { return array.has_value(); }
};

/// Throws StageError("distance-regular") on a disconnected or non-regular
/// graph.
DistanceRegularity check_distance_regular(const Graph &g);

/// c_h * ... * c_1, the number of geodesics between vertices at distance h.
std::uint64_t path_count_p(const IntersectionArray &ia, int h);

/// Number of vertices at distance h from both ends of an edge, required to
/// be the same positive value for every edge. Throws
/// StageError("distance-regular") otherwise.
std::uint64_t common_distance_q(const Graph &g, int h);

std::uint64_t predicted_cycle_count(std::uint64_t p, std::uint64_t q);

/// (1 - cos(pi/(2h+1))) k.
double corollary_bound(int k, int h);
/// (pi^2/(2(2h+1)^2) - pi^4/(24(2h+1)^4)) k.
double taylor_minorant(int k, int h);
/// 2cos^2((g-1)pi/(2g)) for odd girth g; the gap coefficient of C_g per unit k.
double odd_cycle_sharpness(int odd_girth);

/// Everything the drg-bound command reports.
struct DrgBoundReport {
    bool distance_regular = false;
    std::optional<IntersectionArray> array;
    int k = 0;
    int h = 0;
    int g = 0;
    double corollary = 0;
    double taylor = 0;
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> q;
    std::optional<std::uint64_t> enumerated_per_edge;
    std::optional<double> certified_bound;
    double delta_actual = 0;
};

/// Derives h from the odd girth, checks distance-regularity, cross-checks
/// p^2 q against the enumerated per-edge cycle count and certifies the
/// odd-cycle decomposition. Throws StageError("count-mismatch") when p^2 q
/// disagrees with enumeration on a distance-regular graph.
DrgBoundReport drg_bound(const Graph &g);

} // namespace gapcert
