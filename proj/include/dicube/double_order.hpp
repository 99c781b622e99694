#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "dicube/permutation.hpp"
#include "dicube/relation.hpp"

namespace dicube {

/// A pair of relations (x<, y<) on A = {0, ..., n-1}.
struct DoubleOrder {
    Relation x;
    Relation y;

    DoubleOrder() = default;
    DoubleOrder(Relation x_rel, Relation y_rel);
    explicit DoubleOrder(int n) : x(n), y(n) {}

    int size() const { return x.size(); }
    auto operator<=>(const DoubleOrder&) const = default;
    bool operator==(const DoubleOrder&) const = default;
};

enum class OrderClass { Double, Regular, SemiRegular };

inline constexpr int kMaxDoubleOrderSize = 4;
inline constexpr int kMaxRegularOrderSize = 6;

/// Result of `classify`. `is_semi_regular` is only decided for n <= 4.
struct Classification {
    bool x_strict = false;
    bool y_strict = false;
    bool is_double = false;
    bool is_regular = false;
    std::optional<bool> is_semi_regular;
    /// h(x<) with values 1..l when x< is semi-linear.
    std::optional<std::vector<int>> level;
    std::string diagnostic;
};

Classification classify(const DoubleOrder& o);

/// Level function of a semi-linear strict order (a < b iff h(a) < h(b)), values 1..l.
std::optional<std::vector<int>> level_function(const Relation& x);

bool is_double(const DoubleOrder& o);
bool is_regular(const DoubleOrder& o);
/// Membership in the closure-generated list R+(A); n <= 4.
bool is_semi_regular(const DoubleOrder& o);

/// Componentwise transitive closure of the union; nullopt when either closure is reflexive.
std::optional<DoubleOrder> union_bar(const DoubleOrder& a, const DoubleOrder& b);

/// D(A), R(A) or R+(A) in ascending (x, y) bit order.
std::vector<DoubleOrder> enumerate_orders(int n, OrderClass cls);

/// R(A) by filtering all double orders against the definition (n <= 4).
std::vector<DoubleOrder> regular_orders_by_filter(int n);

/// Regular order whose monotone numbering is `numbering` with level-block
/// boundaries `breaks` (subset of 1..n-1).
DoubleOrder order_from_numbering(const std::vector<int>& numbering, const std::vector<int>& breaks);

enum class OrderVariant {
    Inclusion,       // x1 <= x2 and y1 <= y2
    DoubleInclusion, // x1 <= x2 and y1 >= y2
};

bool poset_leq(const DoubleOrder& a, const DoubleOrder& b, OrderVariant variant);

/// a (first \ second) b iff a first b and a, b are incomparable in second.
Relation relative_difference(const Relation& first, const Relation& second);

/// F(x<, y<) = (x<, y< \ x<). Throws ContractError if `o` is not semi-regular.
DoubleOrder functor_f(const DoubleOrder& o);

/// G(o_0 < ... < o_r) = (x of o_r, y of o_0) for a chain strictly increasing in
/// the double-inclusion order. Throws ArgumentError otherwise.
DoubleOrder functor_g(const std::vector<DoubleOrder>& chain);

DoubleOrder permuted(const DoubleOrder& o, const Permutation& sigma);

/// "x{a<b} y{}" style text.
std::string to_string(const DoubleOrder& o);

} // namespace dicube
