#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dicube/category.hpp"
#include "dicube/homology.hpp"
#include "dicube/precubical.hpp"

namespace dicube {

/// Enumeration cap for nerves and chain searches; DICUBE_MAX_CELLS overrides it.
std::size_t enumeration_cap();

/// Complex models: "z" (truncated at n), "z-tilde", "yA".
bool is_complex_model(const std::string& id);
/// Category models: "chain-poset", "r-poset" (R, ⊑), "r-reverse" (R, ⊒),
/// "rplus-poset", "en", "quotient" ((R, ⊒)/Sigma), "rplus-quotient" ((R+, ⊆)/Sigma).
bool is_category_model(const std::string& id);
const std::vector<std::string>& model_ids();

PrecubicalComplex complex_model(const std::string& id, int n);
FiniteCategory category_model(const std::string& id, int n);

/// Cellular chains of a precubical complex: d = sum_i (-1)^i (d^0_i - d^1_i).
ChainComplex cubical_chain_complex(const PrecubicalComplex& k);

/// Homology of the nerve of a category model.
std::vector<HomologyGroup> model_homology(const std::string& id, int n);

} // namespace dicube
