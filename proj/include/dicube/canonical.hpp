#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dicube/permutation.hpp"
#include "dicube/precubical.hpp"

namespace dicube {

/// The standard cube on {1..n}. Cells are words over {0,1,*} of length n,
/// ordered within a dimension lexicographically with 0 < 1 < *.
/// Names are the words themselves, e.g. "0*1".
PrecubicalComplex build_standard_cube(int n);

/// Ternary word of a standard-cube cell; the i-th character is position i+1.
std::string cube_word(int n, int dim, std::size_t cell);
/// Inverse of cube_word; throws ArgumentError on malformed words.
CellRef cube_cell(const std::string& word);

/// Serial wedge of standard cubes of the given dimensions.
PrecubicalComplex build_wedge_cube(const std::vector<int>& dims);

/// One cell z^m per dimension m <= max_dim, every face going to z^{m-1}.
PrecubicalComplex build_Z(int max_dim);

/// The unique map K -> Z. Bipointed when K is.
PrecubicalMap map_to_Z(const ComplexPtr& k, const ComplexPtr& z);

struct ZTilde {
    ComplexPtr complex;
    AltitudeLabeling altitude;
};

/// Cells z^k_j with j + k <= n; index of z^k_j in dimension k is j.
ZTilde build_z_tilde(int n);

// ---------------------------------------------------------------------------
// Y^A

/// (ones | a_1 < ... < a_k | zeros); ones and zeros are bitmasks over A.
struct YCell {
    std::uint32_t ones = 0;
    std::vector<int> mid;
    std::uint32_t zeros = 0;

    int dim() const { return static_cast<int>(mid.size()); }
    auto operator<=>(const YCell&) const = default;
    bool operator==(const YCell&) const = default;
};

bool is_valid_ycell(const YCell& c, int n);
/// d^eps_i; i is 1-based and refers to the i-th element of mid.
YCell y_face(const YCell& c, int i, int eps);
/// (A1 | a_1 < ... | A0) sigma = (sigma^-1 A1 | sigma^-1 a_1 < ... | sigma^-1 A0).
YCell y_act(const YCell& c, const Permutation& sigma);
/// Face criterion: mid(c1) is a sub-order of mid(c2), zeros(c2) in zeros(c1), ones(c2) in ones(c1).
bool y_face_test(const YCell& c1, const YCell& c2);
/// "(b|a<c|)" style text.
std::string to_string(const YCell& c);
/// Inverse of to_string for ground sets of size n.
YCell parse_ycell(const std::string& text, int n);

inline constexpr int kDefaultYCap = 6;

struct YComplex {
    int n = 0;
    ComplexPtr complex;
    std::vector<std::vector<YCell>> cells;
    std::map<YCell, std::size_t> index;
    AltitudeLabeling altitude;
    std::vector<Permutation> group;
    /// action[g] maps c to c * group[g].
    std::vector<PrecubicalMap> action;
    ComplexPtr z_tilde;
    /// p_A: (c, <) of dimension k goes to z^k_{alt}.
    PrecubicalMap projection;

    std::size_t find(const YCell& c) const;
    CellRef ref(const YCell& c) const { return {c.dim(), find(c)}; }
    const YCell& cell(CellRef r) const { return cells.at(r.dim).at(r.index); }
};

/// Throws ResourceError above `cap`.
YComplex build_yA(int n, int cap = kDefaultYCap);

} // namespace dicube
