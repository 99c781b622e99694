#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dicube/double_order.hpp"

namespace dicube {

using Rational = mpq_class;

/// A labelling of A = {0..n-1} by points of the plane, coords[a] = (f_x(a), f_y(a)).
struct LabeledPoint {
    std::vector<std::pair<Rational, Rational>> coords;

    int size() const { return static_cast<int>(coords.size()); }
    bool operator==(const LabeledPoint&) const = default;
};

bool is_injective(const LabeledPoint& f);

/// a x< b implies f_x(a) < f_x(b), and a y< b implies f_y(a) < f_y(b).
bool u_contains(const DoubleOrder& o, const LabeledPoint& f);

/// Ranks of linear extensions of both parts (smallest label first among
/// minimal elements). Works for any pair of strict orders.
LabeledPoint witness_point(const DoubleOrder& o);

/// x: f_x(a) < f_x(b); y: equal f_x and f_y(a) < f_y(b). Throws ArgumentError
/// when f is not injective.
DoubleOrder point_to_order(const LabeledPoint& f);

/// A point of U(o1) outside U(o2), or nullopt when o2 adds no constraint to o1.
std::optional<LabeledPoint> separating_witness(const DoubleOrder& o1, const DoubleOrder& o2);

/// A cycle a_0 < a_1 < ... < a_0 in the union of two relations (elements
/// listed once), or empty when the union is acyclic.
std::vector<int> union_cycle(const Relation& r1, const Relation& r2);

/// Injective configuration with x-coordinates drawn from few values so that
/// vertical alignments occur often.
LabeledPoint random_configuration(int n, std::mt19937_64& rng);

/// {"points": {"a": ["num/den", "num/den"], ...}}
std::string to_json(const LabeledPoint& f);
LabeledPoint point_from_json(const std::string& text);

struct CoverCheck {
    std::string name;
    bool ok = true;
    std::size_t checked = 0;
    std::string counterexample;
};

struct CoverReport {
    int n = 0;
    std::vector<CoverCheck> checks;

    bool ok() const;
};

inline constexpr std::uint64_t kDefaultCoverSeed = 20240611;

/// Completeness, properness, equivariance, the intersection criterion,
/// antitonicity and injectivity of o -> U(o) over R+(A), plus `samples`
/// random configurations. |A| <= 4.
CoverReport verify_cover(int n, std::size_t samples = 1000, std::uint64_t seed = kDefaultCoverSeed);

} // namespace dicube
