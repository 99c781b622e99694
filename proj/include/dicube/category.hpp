#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dicube/homology.hpp"
#include "dicube/permutation.hpp"

namespace dicube {

using ObjId = std::size_t;
using MorId = std::size_t;

inline constexpr MorId kNoMorphism = static_cast<MorId>(-1);

struct Morphism {
    ObjId source = 0;
    ObjId target = 0;
    std::string label;
};

/// A finite category with an explicit composition table. Adding an object
/// also adds its identity morphism; composites with identities are implied.
class FiniteCategory {
public:
    ObjId add_object(std::string name);
    MorId add_morphism(ObjId source, ObjId target, std::string label = {});
    /// Records g after f. Throws ArgumentError unless target(f) = source(g).
    void set_composite(MorId g, MorId f, MorId gf);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }
    const std::string& object_name(ObjId c) const { return objects_.at(c); }
    const Morphism& morphism(MorId f) const { return morphisms_.at(f); }
    MorId identity(ObjId c) const { return identities_.at(c); }
    bool is_identity(MorId f) const;

    /// g after f; throws ArgumentError when not composable and
    /// StructuralError when the table has no entry.
    MorId compose(MorId g, MorId f) const;
    MorId try_compose(MorId g, MorId f) const;

    /// Morphisms with the given source, in id order (identity included).
    const std::vector<MorId>& outgoing(ObjId c) const { return outgoing_.at(c); }
    std::vector<MorId> hom(ObjId source, ObjId target) const;

    /// Broken associativity / identity / closure conditions (empty if valid).
    std::vector<std::string> law_violations() const;
    /// No non-identity endomorphisms and no cycles of non-identity morphisms.
    bool is_loop_free() const;

    /// Poset with `leq(i, j)` given as a row-major m x m table (reflexive,
    /// antisymmetric, transitive; checked). Morphism i -> j iff leq(i, j).
    static FiniteCategory from_poset(std::size_t m, const std::vector<std::uint8_t>& leq,
                                     const std::vector<std::string>& names = {});
    /// The unique morphism i -> j of a poset, or kNoMorphism.
    MorId poset_arrow(ObjId i, ObjId j) const;

private:
    static std::uint64_t key(MorId g, MorId f) { return (std::uint64_t{g} << 32) | f; }

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identities_;
    std::vector<std::vector<MorId>> outgoing_;
    std::unordered_map<std::uint64_t, MorId> composite_;
    std::map<std::pair<ObjId, ObjId>, std::vector<MorId>> hom_;
};

/// Checks reflexivity, antisymmetry and transitivity of a row-major table.
std::vector<std::string> poset_violations(std::size_t m, const std::vector<std::uint8_t>& leq);

// ---------------------------------------------------------------------------
// Nerves

inline constexpr std::size_t kDefaultNerveCap = 2'000'000;

/// Nondegenerate simplices of the nerve: degree 0 lists objects, degree k >= 1
/// composable sequences (f_1, ..., f_k) of non-identity morphisms, f_1 first.
struct Nerve {
    std::size_t objects = 0;
    std::vector<std::vector<std::vector<MorId>>> simplices;
    std::vector<std::map<std::vector<MorId>, std::size_t>> index;
    ChainComplex complex;
};

/// Throws ContractError when C is not loop-free and ResourceError past `cap` simplices.
Nerve build_nerve(const FiniteCategory& c, std::size_t cap = kDefaultNerveCap);
inline ChainComplex nerve_complex(const FiniteCategory& c) { return build_nerve(c).complex; }

struct Subdivision {
    FiniteCategory poset;
    /// Each element of sd(P) as an increasing list of elements of P.
    std::vector<std::vector<ObjId>> chains;
    /// Top element of each chain.
    std::vector<ObjId> max_map;
};

/// Chains of a poset ordered by inclusion, with the max map.
Subdivision barycentric_subdivision(const FiniteCategory& poset);

// ---------------------------------------------------------------------------
// Group actions and quotients

struct GroupAction {
    std::vector<Permutation> group;
    std::vector<std::vector<ObjId>> on_objects;
    std::vector<std::vector<MorId>> on_morphisms;
};

/// Broken functoriality (sources, targets, identities, composition).
std::vector<std::string> action_violations(const FiniteCategory& c, const GroupAction& act);
/// c g != c for every object and non-identity g.
bool is_free(const FiniteCategory& c, const GroupAction& act);

struct QuotientCategory {
    FiniteCategory category;
    std::vector<ObjId> object_class;
    std::vector<MorId> morphism_class;
    /// Representative of each object orbit (least member).
    std::vector<ObjId> object_rep;
    /// Representative of each morphism orbit: the member whose source is the object representative.
    std::vector<MorId> morphism_rep;
};

/// Throws ContractError for non-free actions and ConsistencyError when the
/// induced laws or the hom-count identity fail.
QuotientCategory quotient_category(const FiniteCategory& c, const GroupAction& act);

struct NerveQuotientCheck {
    bool isomorphic = false;
    std::vector<std::size_t> orbit_ranks;
    std::vector<std::size_t> quotient_ranks;
    std::string detail;
};

/// Compares the orbit complex of nerve(C) with nerve(C/G) through the map
/// [f_1, ..., f_k] -> (pi f_1, ..., pi f_k), generator by generator.
NerveQuotientCheck compare_nerve_quotient(const FiniteCategory& c, const GroupAction& act,
                                          const QuotientCategory& q);

// ---------------------------------------------------------------------------
// Exports

std::string to_dot(const FiniteCategory& c, bool hasse_only = false, const std::string& graph_name = "C");
std::string to_json(const FiniteCategory& c);

} // namespace dicube
