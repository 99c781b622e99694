#pragma once

#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "dicube/category.hpp"
#include "dicube/double_order.hpp"

namespace dicube {

enum class OrderPosetKind {
    RegularSquare,        // (R(A), ⊑): arrow o -> o' iff o ⊑ o'
    RegularReverse,       // (R(A), ⊒): arrow o -> o' iff o ⊒ o'
    SemiRegularInclusion, // (R+(A), ⊆)
};

/// A poset of double orders together with the permutation action of Sigma_A.
struct OrderPoset {
    std::vector<DoubleOrder> orders;
    std::map<DoubleOrder, ObjId> index;
    FiniteCategory poset;
    GroupAction action;
};

OrderPoset build_order_poset(int n, OrderPosetKind kind);

/// Object name "x{...} y{...}" of a double order.
std::string order_label(const DoubleOrder& o);

// ---------------------------------------------------------------------------
// The category E_n

inline constexpr int kMaxEnSize = 7;

/// Subset of {1..n-1} encoded as a bitmask (bit b-1 for element b).
using BreakSet = unsigned;

struct EnCategory {
    int n = 0;
    FiniteCategory category;
    std::vector<BreakSet> objects;
    std::map<BreakSet, ObjId> object_index;
    /// Permutation behind every morphism (identity permutation for identities).
    std::vector<Permutation> perm;
    std::map<std::tuple<ObjId, ObjId, Permutation>, MorId> morphism_index;
};

/// Objects in decreasing size, then lexicographically by element list.
EnCategory build_En(int n);

std::string break_set_name(BreakSet b, int n);

/// Block boundaries 0 = b_0 < b_1 < ... < b_r = n of a break set.
std::vector<int> block_bounds(BreakSet b, int n);

/// Condition (x): phi maps each block of `target` onto itself.
bool en_condition_x(const Permutation& phi, BreakSet target, int n);
/// Condition (x'): i <= b' < j for some b' in `target` implies phi(i) < phi(j).
/// Holds for phi exactly when (x) holds for phi.
bool en_condition_x_prime(const Permutation& phi, BreakSet target, int n);
/// Condition (y): phi is increasing on every block of `source`.
bool en_condition_y(const Permutation& phi, BreakSet source, int n);

// ---------------------------------------------------------------------------
// The functor (R(A), ⊒) -> E_n

/// Elements of A in monotone order: by level, then by y within a level.
std::vector<int> monotone_numbering(const DoubleOrder& o);
/// Break set {b_1, ..., b_{r-1}} of the level blocks.
BreakSet order_break_set(const DoubleOrder& o);

struct EnFunctor {
    OrderPoset source;
    EnCategory target;
    std::vector<ObjId> on_objects;
    std::vector<MorId> on_morphisms;
    QuotientCategory quotient;
    std::vector<ObjId> bar_on_objects;
    std::vector<MorId> bar_on_morphisms;
    bool functorial = false;
    bool invariant = false;
    bool bijective_objects = false;
    bool bijective_morphisms = false;
    std::vector<std::string> problems;
};

/// Builds F, checks functoriality and Sigma_A-invariance, and the induced
/// functor on the quotient by Sigma_A.
EnFunctor functor_to_En(int n);

} // namespace dicube
