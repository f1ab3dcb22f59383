#pragma once

#include "gapcert/cycles.hpp"
#include "gapcert/decomposition.hpp"
#include "gapcert/drg.hpp"
#include "gapcert/lp_optimizer.hpp"
#include "gapcert/spectral.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gapcert {

using nlohmann::json;

/// Rounds to `digits` significant decimal digits so that serialised floats
/// are stable across platforms.
double round_significant(double x, int digits = 12);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::string &path);

/// {"host_n": N, "parts": [{"edges": [[u,v],...], "weight": w}, ...]}
json decomposition_to_json(const FractionalDecomposition &d);

/// Strict reader: duplicate edges inside a part, missing keys, non-positive
/// weights and out-of-range vertices all throw InputError.
FractionalDecomposition decomposition_from_json(const json &doc);

/// Parts of a decomposition document or of a bare {"parts": [{"edges": ...}]}
/// family document. Weights, if present, are ignored.
std::vector<EdgeSubset> parts_from_json(const json &doc);

json certificate_to_json(const BoundCertificate &cert);
json spectrum_to_json(const Graph &g, const SpectralSummary &s);
json cycles_to_json(const CycleList &list);
json array_to_json(const IntersectionArray &ia);
json regularity_to_json(const DistanceRegularity &r);
json drg_bound_to_json(const DrgBoundReport &r);
json optimize_to_json(const OptimizeResult &r, const DecompositionLp &lp);

} // namespace gapcert
