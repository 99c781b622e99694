#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dicube {

/// A bijection of {0, ..., n-1}; `image[i]` is the image of i.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
    bool is_identity() const;
    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;
};

/// (p * q)(i) = p(q(i)).
Permutation operator*(const Permutation& p, const Permutation& q);

/// All permutations of {0..n-1} in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int n);

/// One-line notation with 1-based images, e.g. "[2,1,3]".
std::string to_string(const Permutation& p);

} // namespace dicube
