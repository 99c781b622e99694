#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dicube/canonical.hpp"
#include "dicube/category.hpp"
#include "dicube/double_order.hpp"
#include "dicube/precubical.hpp"

namespace dicube {

/// Cubes c_1, ..., c_l of positive dimension joined final vertex to initial vertex.
struct CubeChain {
    std::vector<CellRef> cells;

    int length() const;
    std::vector<int> dims() const;
    auto operator<=>(const CubeChain&) const = default;
    bool operator==(const CubeChain&) const = default;
};

inline constexpr std::size_t kDefaultChainNodeCap = 5'000'000;

/// All cube chains of a bipointed complex, sorted. The empty chain is
/// included when the two base vertices coincide. Throws ResourceError once
/// the search visits more than `node_cap` partial chains.
std::vector<CubeChain> enumerate_chains(const PrecubicalComplex& k, std::size_t node_cap = kDefaultChainNodeCap);

/// Reflexive-transitive face relation of a complex, as per-cell bitsets.
class FaceIndex {
public:
    explicit FaceIndex(const PrecubicalComplex& k);
    /// b is an iterated face of c (or b = c).
    bool is_face(CellRef b, CellRef c) const;

private:
    std::size_t flat(CellRef c) const { return offset_[c.dim] + c.index; }

    std::vector<std::size_t> offset_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Face data of a complex on which chain_leq is known to describe Ch(K).
class ChainContext {
public:
    /// Throws ContractError unless K is non-self-linked and has an altitude function.
    explicit ChainContext(const PrecubicalComplex& k);
    const PrecubicalComplex& complex() const { return *k_; }
    const FaceIndex& faces() const { return faces_; }

private:
    const PrecubicalComplex* k_;
    FaceIndex faces_;
};

/// Every cube of a is an iterated face of some cube of b.
bool chain_leq(const CubeChain& a, const CubeChain& b, const ChainContext& ctx);

struct ChainPoset {
    std::vector<CubeChain> chains;
    FiniteCategory poset;
};

ChainPoset chain_poset(const PrecubicalComplex& k, std::size_t node_cap = kDefaultChainNodeCap);

/// Chain written with cell names, e.g. "[(|a|b), (a|b|)]".
std::string to_string(const CubeChain& c, const PrecubicalComplex& k);

// ---------------------------------------------------------------------------
// Face swapping

/// d^eps_A on a standard-cube word: indices refer to the star positions of `word`.
std::string word_face(const std::string& word, const std::vector<int>& indices, int eps);

struct FaceSwap {
    std::vector<int> v_prime;
    std::vector<int> w_prime;
};

/// V', W' in {1..s} with d^1_V d^0_{W'} = d^0_W d^1_{V'} on the s-cube,
/// s = p + |W| = q + |V|. Throws ArgumentError on bad sizes.
FaceSwap face_swap(int p, int q, const std::vector<int>& v, const std::vector<int>& w);

/// Checks the identity for given V, W, V', W' on the universal s-cube.
bool face_swap_holds(int p, int q, const std::vector<int>& v, const std::vector<int>& w, const FaceSwap& r);

// ---------------------------------------------------------------------------
// Chains of Y^A versus regular double orders

DoubleOrder chain_to_order(const CubeChain& c, const YComplex& y);
CubeChain order_to_chain(const DoubleOrder& o, const YComplex& y);

/// The cells of a chain acted on by sigma.
CubeChain permuted(const CubeChain& c, const YComplex& y, std::size_t group_element);

} // namespace dicube
