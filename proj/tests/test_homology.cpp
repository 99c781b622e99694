#include <doctest.h>

#include <random>

#include "dicube/errors.hpp"
#include "dicube/homology.hpp"

using namespace dicube;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density_percent) {
    std::uniform_int_distribution<int> entry(-20, 20), pct(0, 99);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (pct(rng) < density_percent) m(i, j) = entry(rng);
        }
    }
    return m;
}

// Rank over Q by fraction-free elimination, written independently of the SNF code.
std::size_t rational_rank(IntMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, rank);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            const Integer a = m(rank, col), b = m(r, col);
            Integer g = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                m(r, c) = a * m(r, c) - b * m(rank, c);
                g = gcd(g, m(r, c));
            }
            // Keep entries small: a row and its primitive part have the same span.
            if (g > 1) {
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) /= g;
            }
        }
        ++rank;
    }
    return rank;
}

/// Boundary of the octahedron: 6 vertices, 12 edges, 8 triangles.
ChainComplex octahedron() {
    // Vertices: 0,1 (poles) and 2,3,4,5 (equator cycle).
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> tris;
    for (int e = 0; e < 4; ++e) {
        const int a = 2 + e, b = 2 + (e + 1) % 4;
        edges.push_back({std::min(a, b), std::max(a, b)});
        for (int pole : {0, 1}) {
            edges.push_back({pole, a});
            std::array<int, 3> t{pole, a, b};
            std::sort(t.begin(), t.end());
            tris.push_back(t);
        }
    }
    std::sort(edges.begin(), edges.end());
    auto edge_index = [&](int a, int b) {
        return static_cast<std::size_t>(std::find(edges.begin(), edges.end(), std::array<int, 2>{a, b}) - edges.begin());
    };
    ChainComplex c;
    c.ranks = {6, edges.size(), tris.size()};
    c.boundaries.emplace_back(0, 6);
    SparseMatrix d1(6, edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        d1.add(edges[e][0], e, -1);
        d1.add(edges[e][1], e, 1);
    }
    SparseMatrix d2(edges.size(), tris.size());
    for (std::size_t t = 0; t < tris.size(); ++t) {
        auto [a, b, d] = tris[t];
        d2.add(edge_index(b, d), t, 1);
        d2.add(edge_index(a, d), t, -1);
        d2.add(edge_index(a, b), t, 1);
    }
    c.boundaries.push_back(d1);
    c.boundaries.push_back(d2);
    return c;
}

} // namespace

TEST_SUITE("homology") {

TEST_CASE("Smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).diagonal == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntMatrix(3, 2)).diagonal.empty());
    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<Integer>{1, 1, 1});
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).diagonal == std::vector<Integer>{1, 6});
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("random Smith normal forms") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, trial < 50 ? 12 : 40);
        const std::size_t r = size(rng), c = size(rng);
        const IntMatrix m = random_matrix(rng, r, c, trial % 2 ? 30 : 90);
        auto s = smith_normal_form(m, true);
        REQUIRE(s.u);
        REQUIRE(s.v);
        const IntMatrix d = *s.u * m * *s.v;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                const Integer expect = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
                CHECK(d(i, j) == expect);
            }
        }
        CHECK(abs(determinant(*s.u)) == 1);
        CHECK(abs(determinant(*s.v)) == 1);
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] > 0);
            if (i + 1 < s.diagonal.size()) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        CHECK(s.diagonal.size() == rational_rank(m));
        if (r == c) {
            Integer prod = 1;
            for (const auto& x : s.diagonal) prod *= x;
            CHECK(abs(determinant(m)) == (s.diagonal.size() == r ? prod : Integer(0)));
        }
        CHECK(invariant_factors(SparseMatrix::from_dense(m)) == s.diagonal);
    }
}

TEST_CASE("sparse matrices") {
    SparseMatrix s(2, 2);
    s.add(0, 1, 3);
    s.add(0, 1, -3);
    s.add(1, 0, 2);
    CHECK(s.dense() == IntMatrix::from_rows({{0, 0}, {2, 0}}));
    CHECK(invariant_factors(s) == std::vector<Integer>{2});
}

TEST_CASE("homology of small complexes") {
    ChainComplex point;
    point.ranks = {1};
    point.boundaries.emplace_back(0, 1);
    auto hp = homology(point);
    CHECK(hp == std::vector<HomologyGroup>{{1, {}}});
    CHECK(euler_characteristic(point) == 1);

    auto oct = octahedron();
    CHECK(chain_complex_violations(oct).empty());
    auto h = homology(oct);
    CHECK(h == std::vector<HomologyGroup>{{1, {}}, {0, {}}, {1, {}}});
    CHECK(euler_characteristic(oct) == 2);
    CHECK(euler_characteristic(h) == 2);
}

TEST_CASE("torsion is detected") {
    // One vertex, one edge, one 2-cell attached by degree 2: the projective plane's cellular chains.
    ChainComplex rp2;
    rp2.ranks = {1, 1, 1};
    rp2.boundaries.emplace_back(0, 1);
    rp2.boundaries.push_back(SparseMatrix::from_dense(IntMatrix::from_rows({{0}})));
    rp2.boundaries.push_back(SparseMatrix::from_dense(IntMatrix::from_rows({{2}})));
    auto h = homology(rp2);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[1] == HomologyGroup{0, {Integer(2)}});
    CHECK(h[2] == HomologyGroup{0, {}});
    CHECK(to_string(h) == "Z, Z/2, 0");
    CHECK(trimmed(h).size() == 2);
}

TEST_CASE("non-complexes are rejected") {
    ChainComplex bad;
    bad.ranks = {1, 1, 1};
    bad.boundaries.emplace_back(0, 1);
    bad.boundaries.push_back(SparseMatrix::from_dense(IntMatrix::from_rows({{1}})));
    bad.boundaries.push_back(SparseMatrix::from_dense(IntMatrix::from_rows({{1}})));
    CHECK_FALSE(chain_complex_violations(bad).empty());
    CHECK_THROWS_AS(homology(bad), ContractError);
}

TEST_CASE("rank-nullity on random complexes") {
    // d2 = A * B with A B chosen so that d1 * d2 = 0: take d1 = row vector, d2 in its kernel.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const IntMatrix k = random_matrix(rng, 4, 3, 70);
        // Columns of d2 are combinations of the kernel basis of d1 = [1 1 1 1] shifted.
        IntMatrix d1 = IntMatrix::from_rows({{1, -1, 0, 0}, {0, 1, -1, 0}});
        IntMatrix basis = IntMatrix::from_rows({{1, 0}, {1, 0}, {1, 0}, {0, 1}});
        IntMatrix coeff(2, 3);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 3; ++j) coeff(i, j) = k(i, j);
        }
        IntMatrix d2 = basis * coeff;
        ChainComplex c;
        c.ranks = {2, 4, 3};
        c.boundaries.emplace_back(0, 2);
        c.boundaries.push_back(SparseMatrix::from_dense(d1));
        c.boundaries.push_back(SparseMatrix::from_dense(d2));
        REQUIRE(chain_complex_violations(c).empty());
        auto h = homology(c);
        const std::size_t r1 = rational_rank(d1), r2 = rational_rank(d2);
        CHECK(h[0].betti == 2 - r1);
        CHECK(h[1].betti == 4 - r1 - r2);
        CHECK(h[2].betti == 3 - r2);
        CHECK(euler_characteristic(h) == euler_characteristic(c));
    }
}

} // TEST_SUITE
