#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dicube/permutation.hpp"

namespace dicube {

inline constexpr int kMaxRelationSize = 8;

/// A binary relation on {0, ..., n-1}, n <= 8, stored as an 8x8 bit matrix
/// packed into one word (row a occupies bits 8a .. 8a+7).
class Relation {
public:
    Relation() = default;
    explicit Relation(int n);
    static Relation from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs);
    static Relation from_matrix(const std::vector<std::vector<bool>>& m);

    int size() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    bool test(int a, int b) const { return (bits_ >> (a * 8 + b)) & 1u; }
    void set(int a, int b, bool value = true);
    bool empty() const { return bits_ == 0; }
    int pair_count() const;
    std::uint8_t row(int a) const { return static_cast<std::uint8_t>(bits_ >> (a * 8)); }

    bool comparable(int a, int b) const { return test(a, b) || test(b, a); }
    bool is_irreflexive() const;
    bool is_transitive() const;
    bool is_strict_order() const { return is_irreflexive() && is_transitive(); }
    bool is_total() const;

    /// Boolean matrix product: a (R*S) c iff a R b and b S c for some b.
    Relation then(const Relation& s) const;
    /// Transitive closure by repeated squaring until fixpoint.
    Relation closure() const;
    bool subset_of(const Relation& other) const { return (bits_ & ~other.bits_) == 0; }

    /// a (R sigma) b iff sigma(a) R sigma(b).
    Relation permuted(const Permutation& sigma) const;
    /// Relation on a subset, relabelled 0..k-1 in the given order.
    Relation restricted(const std::vector<int>& elements) const;

    std::vector<std::vector<bool>> matrix() const;

    friend Relation operator|(const Relation& a, const Relation& b);
    friend Relation operator&(const Relation& a, const Relation& b);

    bool operator==(const Relation&) const = default;
    auto operator<=>(const Relation&) const = default;

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// All strict partial orders on {0..n-1}, ascending by bit pattern.
std::vector<Relation> strict_orders(int n);

/// "a<b, a<c" style listing with letters a, b, c, ...
std::string to_string(const Relation& r);
std::string element_name(int a);

} // namespace dicube
