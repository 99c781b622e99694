#pragma once

#include <string>

#include "dicube/cube_chains.hpp"
#include "dicube/double_order.hpp"
#include "dicube/homology.hpp"
#include "dicube/precubical.hpp"

namespace dicube {

/// {"dims": [...], "faces": [{"dim", "cell", "i", "eps", "to"}, ...], "base": {"init", "final"} | null}
std::string complex_to_json(const PrecubicalComplex& k);
/// Throws StructuralError on malformed input or missing faces.
PrecubicalComplex complex_from_json(const std::string& text);

/// Cells as nodes (labelled by name), faces as edges labelled "d^eps_i".
std::string complex_to_dot(const PrecubicalComplex& k, const std::string& graph_name = "K");

/// {"x": [[bool]], "y": [[bool]], "labels": [...]}
std::string order_to_json(const DoubleOrder& o);
DoubleOrder order_from_json(const std::string& text);

/// [{"dim": k, "betti": b, "torsion": [...]}, ...]
std::string homology_to_json(const std::vector<HomologyGroup>& h);

/// Array of chains, each an array of cell names.
std::string chains_to_json(const std::vector<CubeChain>& chains, const PrecubicalComplex& k);

} // namespace dicube
