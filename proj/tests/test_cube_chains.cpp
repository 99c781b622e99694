#include <doctest.h>

#include <algorithm>

#include "dicube/canonical.hpp"
#include "dicube/cube_chains.hpp"
#include "dicube/double_order.hpp"
#include "dicube/errors.hpp"
#include "oracles.hpp"

using namespace dicube;

namespace {

CubeChain chain_of(const YComplex& y, std::initializer_list<const char*> cells) {
    CubeChain c;
    for (const char* s : cells) c.cells.push_back(y.ref(parse_ycell(s, y.n)));
    return c;
}

// Face of a {0,1,*} word: the listed star positions (1-based among stars) become eps.
std::string star_face(std::string w, const std::vector<int>& idx, char eps) {
    std::vector<std::size_t> stars;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == '*') stars.push_back(p);
    }
    for (int i : idx) w[stars[static_cast<std::size_t>(i - 1)]] = eps;
    return w;
}

std::vector<std::vector<int>> subsets_of_size(int s, int k) {
    std::vector<std::vector<int>> out;
    for (unsigned m = 0; m < (1u << s); ++m) {
        if (std::popcount(m) != k) continue;
        std::vector<int> v;
        for (int i = 0; i < s; ++i) {
            if (m & (1u << i)) v.push_back(i + 1);
        }
        out.push_back(v);
    }
    return out;
}

// All (V', W') making the square of faces commute on the s-cube.
std::vector<FaceSwap> swap_solutions(int p, int q, const std::vector<int>& v, const std::vector<int>& w) {
    const int s = p + static_cast<int>(w.size());
    const std::string top(static_cast<std::size_t>(s), '*');
    std::vector<FaceSwap> out;
    for (const auto& vp : subsets_of_size(s, static_cast<int>(v.size()))) {
        for (const auto& wp : subsets_of_size(s, static_cast<int>(w.size()))) {
            if (star_face(star_face(top, wp, '0'), v, '1') == star_face(star_face(top, vp, '1'), w, '0')) {
                out.push_back({vp, wp});
            }
        }
    }
    return out;
}

} // namespace

TEST_SUITE("cube_chains") {

TEST_CASE("chains of Y^{a,b}") {
    auto y = build_yA(2);
    auto chains = enumerate_chains(*y.complex);
    REQUIRE(chains.size() == 4);
    int one_step = 0, two_step = 0;
    for (const auto& c : chains) {
        if (c.dims() == std::vector<int>{2}) ++one_step;
        if (c.dims() == std::vector<int>{1, 1}) ++two_step;
    }
    CHECK(one_step == 2);
    CHECK(two_step == 2);
}

TEST_CASE("chains of z-tilde and of the interval") {
    auto z = build_z_tilde(2);
    auto chains = enumerate_chains(*z.complex);
    REQUIRE(chains.size() == 2);
    std::set<std::string> names;
    for (const auto& c : chains) names.insert(to_string(c, *z.complex));
    CHECK(names == std::set<std::string>{"[z^2_0]", "[z^1_0, z^1_1]"});
    CHECK(enumerate_chains(build_standard_cube(1)).size() == 1);
    CHECK(enumerate_chains(build_standard_cube(0)).size() == 1);
}

TEST_CASE("chains of the n-cube are ordered compositions") {
    // A chain of the n-cube is a sequence of cubes whose dimensions sum to n,
    // placed by a set partition into ordered blocks: sum over compositions of multinomials.
    const std::vector<std::size_t> fubini{1, 1, 3, 13, 75};
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_chains(build_standard_cube(n)).size() == fubini[n]);
}

TEST_CASE("node cap is enforced") {
    CHECK_THROWS_AS(enumerate_chains(*build_yA(4).complex, 10), ResourceError);
}

TEST_CASE("chain order examples") {
    auto y = build_yA(2);
    ChainContext ctx(*y.complex);
    auto low = chain_of(y, {"(|a|b)", "(a|b|)"});
    auto square_ab = chain_of(y, {"(|a<b|)"});
    auto square_ba = chain_of(y, {"(|b<a|)"});
    CHECK(chain_leq(low, square_ab, ctx));
    CHECK(chain_leq(low, low, ctx));
    CHECK_FALSE(chain_leq(square_ab, square_ba, ctx));
    CHECK_FALSE(chain_leq(square_ba, square_ab, ctx));
    CHECK_FALSE(chain_leq(square_ab, low, ctx));
}

TEST_CASE("chain context rejects self-linked complexes") {
    CHECK_THROWS_AS(ChainContext(build_Z(2)), ContractError);
}

TEST_CASE("chain poset of Y^{a,b}") {
    auto y = build_yA(2);
    auto cp = chain_poset(*y.complex);
    const auto& p = cp.poset;
    REQUIRE(p.object_count() == 4);
    std::vector<int> up(4, 0), down(4, 0);
    for (ObjId i = 0; i < 4; ++i) {
        for (ObjId j = 0; j < 4; ++j) {
            if (i != j && p.poset_arrow(i, j) != kNoMorphism) {
                ++up[i];
                ++down[j];
            }
        }
    }
    int maximal = 0, minimal = 0;
    for (int i = 0; i < 4; ++i) {
        if (up[i] == 0) ++maximal;
        if (down[i] == 0) ++minimal;
        // Both edges of each edge chain are faces of both squares.
        if (down[i] == 0) CHECK(up[i] == 2);
    }
    CHECK(maximal == 2);
    CHECK(minimal == 2);
}

TEST_CASE("chain poset of the square and the interval") {
    auto sq = chain_poset(build_standard_cube(2));
    REQUIRE(sq.poset.object_count() == 3);
    ObjId top = 0;
    for (ObjId i = 0; i < 3; ++i) {
        if (sq.chains[i].cells.size() == 1) top = i;
    }
    for (ObjId i = 0; i < 3; ++i) CHECK(sq.poset.poset_arrow(i, top) != kNoMorphism);
    CHECK(chain_poset(build_standard_cube(1)).poset.object_count() == 1);
}

TEST_CASE("chain order is a partial order on Y^A") {
    for (int n = 1; n <= 3; ++n) {
        auto y = build_yA(n);
        ChainContext ctx(*y.complex);
        auto chains = enumerate_chains(*y.complex);
        const std::size_t m = chains.size();
        std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) le[i][j] = chain_leq(chains[i], chains[j], ctx);
        }
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(le[i][i]);
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j) CHECK_FALSE((le[i][j] && le[j][i]));
                for (std::size_t k = 0; k < m; ++k) {
                    if (le[i][j] && le[j][k]) CHECK(le[i][k]);
                }
            }
        }
    }
}

TEST_CASE("chains of Y^A match regular orders in number and climb in altitude") {
    for (int n = 0; n <= 4; ++n) {
        auto y = build_yA(n);
        auto chains = enumerate_chains(*y.complex);
        CHECK(chains.size() == static_cast<std::size_t>(oracle::factorial(n) * (n == 0 ? 1 : 1LL << (n - 1))));
        for (const auto& c : chains) {
            for (std::size_t i = 1; i < c.cells.size(); ++i) {
                CHECK(y.altitude(c.cells[i].dim, c.cells[i].index) > y.altitude(c.cells[i - 1].dim, c.cells[i - 1].index));
            }
        }
    }
}

TEST_CASE("chain to order examples") {
    auto y = build_yA(2);
    const DoubleOrder x_ab(Relation::from_pairs(2, {{0, 1}}), Relation(2));
    const DoubleOrder y_ab(Relation(2), Relation::from_pairs(2, {{0, 1}}));
    CHECK(chain_to_order(chain_of(y, {"(|a|b)", "(a|b|)"}), y) == x_ab);
    CHECK(chain_to_order(chain_of(y, {"(|a<b|)"}), y) == y_ab);
    CHECK(order_to_chain(x_ab, y) == chain_of(y, {"(|a|b)", "(a|b|)"}));
    CHECK(order_to_chain(y_ab, y) == chain_of(y, {"(|a<b|)"}));
}

TEST_CASE("chain and order maps are inverse and equivariant") {
    for (int n = 1; n <= 4; ++n) {
        auto y = build_yA(n);
        for (const auto& c : enumerate_chains(*y.complex)) {
            const DoubleOrder o = chain_to_order(c, y);
            CHECK(is_regular(o));
            CHECK(order_to_chain(o, y) == c);
            for (std::size_t g = 0; g < y.group.size(); ++g) {
                CHECK(chain_to_order(permuted(c, y, g), y) == permuted(o, y.group[g]));
            }
        }
    }
}

TEST_CASE("word faces") {
    CHECK(word_face("*1*", {2}, 0) == "*10");
    CHECK(word_face("***", {1, 3}, 1) == "1*1");
    CHECK(word_face("0*", {}, 1) == "0*");
}

TEST_CASE("face swap small cases") {
    auto r0 = face_swap(0, 0, {}, {});
    CHECK(r0.v_prime.empty());
    CHECK(r0.w_prime.empty());

    auto r1 = face_swap(1, 1, {1}, {1});
    CHECK(r1.v_prime.size() == 1);
    CHECK(r1.w_prime.size() == 1);
    auto sols1 = swap_solutions(1, 1, {1}, {1});
    CHECK(std::any_of(sols1.begin(), sols1.end(),
                      [&](const FaceSwap& s) { return s.v_prime == r1.v_prime && s.w_prime == r1.w_prime; }));

    auto r2 = face_swap(2, 1, {1, 2}, {1});
    CHECK(r2.v_prime.size() == 2);
    CHECK(r2.w_prime.size() == 1);
    auto sols2 = swap_solutions(2, 1, {1, 2}, {1});
    CHECK(std::any_of(sols2.begin(), sols2.end(),
                      [&](const FaceSwap& s) { return s.v_prime == r2.v_prime && s.w_prime == r2.w_prime; }));
    CHECK_THROWS_AS(face_swap(2, 1, {1}, {1}), ArgumentError);
}

TEST_CASE("face swap agrees with exhaustive search") {
    for (int p = 0; p <= 5; ++p) {
        for (int q = 0; p + q <= 6; ++q) {
            for (unsigned vm = 0; vm < (1u << p); ++vm) {
                for (unsigned wm = 0; wm < (1u << q); ++wm) {
                    if (p - std::popcount(vm) != q - std::popcount(wm)) continue;
                    std::vector<int> v, w;
                    for (int i = 0; i < p; ++i) {
                        if (vm & (1u << i)) v.push_back(i + 1);
                    }
                    for (int i = 0; i < q; ++i) {
                        if (wm & (1u << i)) w.push_back(i + 1);
                    }
                    auto r = face_swap(p, q, v, w);
                    auto sols = swap_solutions(p, q, v, w);
                    REQUIRE_FALSE(sols.empty());
                    CHECK(std::any_of(sols.begin(), sols.end(), [&](const FaceSwap& s) {
                        return s.v_prime == r.v_prime && s.w_prime == r.w_prime;
                    }));
                    CHECK(face_swap_holds(p, q, v, w, r));
                }
            }
        }
    }
}

TEST_CASE("face swap check rejects wrong answers") {
    CHECK_FALSE(face_swap_holds(1, 1, {1}, {1}, FaceSwap{{1}, {1}}));
}

} // TEST_SUITE
