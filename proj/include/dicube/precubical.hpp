#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dicube {

inline constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

struct CellRef {
    int dim = 0;
    std::size_t index = 0;

    auto operator<=>(const CellRef&) const = default;
};

struct BasePoints {
    std::size_t initial = 0;
    std::size_t final = 0;

    bool operator==(const BasePoints&) const = default;
};

/// A finite precubical set stored as dense per-dimension face tables.
///
/// Cells are (dimension, index) pairs. The face `d^eps_i` of a cell of
/// dimension d is looked up in O(1); the index `i` is 1-based and runs over
/// 1..d. A complex is filled through `set_face` and is treated as an
/// immutable value afterwards.
class PrecubicalComplex {
public:
    PrecubicalComplex() = default;
    explicit PrecubicalComplex(std::vector<std::size_t> counts);

    /// Largest dimension with at least one cell, or -1 for the empty complex.
    int max_dim() const;
    std::size_t count(int dim) const;
    const std::vector<std::size_t>& counts() const { return counts_; }
    std::size_t total_cells() const;
    bool empty() const { return total_cells() == 0; }

    /// Throws StructuralError if the entry was never set.
    std::size_t face(int dim, std::size_t cell, int i, int eps) const;
    std::size_t face(CellRef c, int i, int eps) const { return face(c.dim, c.index, i, eps); }
    /// Returns kNoCell for entries that were never set.
    std::size_t raw_face(int dim, std::size_t cell, int i, int eps) const;
    void set_face(int dim, std::size_t cell, int i, int eps, std::size_t to);

    const std::optional<BasePoints>& base() const { return base_; }
    bool bipointed() const { return base_.has_value(); }
    void set_base(std::optional<BasePoints> base) { base_ = base; }

    /// Optional human-readable cell names; falls back to "d:k".
    void set_names(std::vector<std::vector<std::string>> names);
    std::string name(int dim, std::size_t cell) const;
    bool has_names() const { return !names_.empty(); }

    /// Initial (eps = 0) or final (eps = 1) vertex of a cell.
    std::size_t corner(int dim, std::size_t cell, int eps) const;

    /// Equality of counts, face tables and base points (names ignored).
    bool same_structure(const PrecubicalComplex& other) const;

private:
    std::size_t slot(int dim, std::size_t cell, int i, int eps) const;

    std::vector<std::size_t> counts_;
    std::vector<std::vector<std::size_t>> faces_;
    std::optional<BasePoints> base_;
    std::vector<std::vector<std::string>> names_;
};

using ComplexPtr = std::shared_ptr<const PrecubicalComplex>;

inline ComplexPtr share(PrecubicalComplex k) {
    return std::make_shared<const PrecubicalComplex>(std::move(k));
}

// ---------------------------------------------------------------------------
// Validation

struct RelationViolation {
    int dim = 0;
    std::size_t cell = 0;
    int i = 0;
    int j = 0;
    int eps = 0;
    int eta = 0;
};

struct ValidationReport {
    std::vector<RelationViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Lists every (cell, i < j, eps, eta) breaking d^eps_i d^eta_j = d^eta_{j-1} d^eps_i.
/// Throws StructuralError when an entry is missing or points out of range.
ValidationReport validate_complex(const PrecubicalComplex& k);

// ---------------------------------------------------------------------------
// Maps

struct PrecubicalMap {
    ComplexPtr source;
    ComplexPtr target;
    std::vector<std::vector<std::size_t>> assignment;
    bool bipointed = false;

    std::size_t operator()(int dim, std::size_t cell) const { return assignment.at(dim).at(cell); }
};

/// Human-readable description of every broken map condition (empty if valid).
std::vector<std::string> map_violations(const PrecubicalMap& f);
inline bool is_valid_map(const PrecubicalMap& f) { return map_violations(f).empty(); }
bool is_bijective(const PrecubicalMap& f);
inline bool is_isomorphism(const PrecubicalMap& f) { return is_valid_map(f) && is_bijective(f); }

PrecubicalMap identity_map(const ComplexPtr& k);
/// g after f.
PrecubicalMap compose(const PrecubicalMap& g, const PrecubicalMap& f);

// ---------------------------------------------------------------------------
// Altitude

struct AltitudeLabeling {
    std::vector<std::vector<long long>> value;

    long long operator()(int dim, std::size_t cell) const { return value.at(dim).at(cell); }
};

bool is_altitude(const PrecubicalComplex& k, const AltitudeLabeling& alt);

/// Breadth-first propagation of alt(d^eps_i c) = alt(c) + eps over the
/// undirected incidence graph. Each connected component is anchored at the
/// initial vertex (value 0) when it contains it, otherwise at its minimum
/// value 0. Returns nullopt on any contradiction.
std::optional<AltitudeLabeling> compute_altitude(const PrecubicalComplex& k);

// ---------------------------------------------------------------------------
// Sub-complexes, faces, non-self-linkedness

struct SubComplex {
    ComplexPtr complex;
    /// Per dimension, index of each sub-complex cell in the parent.
    std::vector<std::vector<std::size_t>> to_parent;
};

/// Restriction to a face-closed set of cells; base is kept when both points survive.
SubComplex induced_subcomplex(const PrecubicalComplex& k, const std::vector<std::vector<bool>>& keep);

/// Cells c with 0 <= c <= 1 in the preorder generated by d^0_i c <= c <= d^1_i c.
SubComplex accessible_part(const PrecubicalComplex& k);

/// d^eps_{a_1} ... d^eps_{a_k}(c) for the index set `indices` (1-based, any order).
std::size_t iterated_face(const PrecubicalComplex& k, CellRef c, std::span<const int> indices, int eps);

struct SelfLinkResult {
    bool non_self_linked = true;
    std::optional<CellRef> counterexample;
};

inline constexpr int kDefaultSelfLinkCap = 12;

/// Images of the canonical map of `c`, indexed by the ternary code of the
/// cells of the standard cube (digit 0, 1, or 2 for '*', position 1 least
/// significant).
std::vector<std::size_t> canonical_map_images(const PrecubicalComplex& k, CellRef c);

/// Checks injectivity of every canonical map; throws ResourceError when a
/// cell's dimension exceeds `dim_cap`.
SelfLinkResult is_non_self_linked(const PrecubicalComplex& k, int dim_cap = kDefaultSelfLinkCap);

// ---------------------------------------------------------------------------
// Constructions

struct PullbackResult {
    ComplexPtr complex;
    PrecubicalMap left;
    PrecubicalMap right;
    /// Per dimension, the (left cell, right cell) pair behind each cell.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
};

PullbackResult pullback(const PrecubicalMap& p, const PrecubicalMap& q);

struct QuotientResult {
    ComplexPtr complex;
    PrecubicalMap projection;
};

/// Orbit complex of `k` under the group generated by `group` (each entry an
/// automorphism of `k`). Throws ContractError for non-automorphisms and
/// ConsistencyError when faces of orbits are ill-defined.
QuotientResult quotient_by_automorphisms(const ComplexPtr& k, std::span<const PrecubicalMap> group);

struct LengthCovering {
    ComplexPtr complex;
    PrecubicalMap projection;
    AltitudeLabeling altitude;
};

/// The length-n covering: pairs (c, h) with faces (d^eps_i c, h + eps), base
/// ((0, 0), (1, n)), restricted to its accessible part.
LengthCovering length_covering(const ComplexPtr& k, int n);

/// Serial wedge K v L: final vertex of K glued to initial vertex of L.
PrecubicalComplex serial_wedge(const PrecubicalComplex& k, const PrecubicalComplex& l);

/// Disjoint union; base points are dropped.
PrecubicalComplex disjoint_union(const PrecubicalComplex& k, const PrecubicalComplex& l);

} // namespace dicube
