#include <doctest.h>

#include <random>

#include "dicube/canonical.hpp"
#include "dicube/errors.hpp"
#include "dicube/precubical.hpp"
#include "oracles.hpp"

using namespace dicube;

namespace {

ComplexPtr square() { return share(build_standard_cube(2)); }

int ones_in(const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), '1')); }

/// Every complex built anywhere in the library, for blanket invariants.
std::vector<ComplexPtr> constructed_complexes() {
    std::vector<ComplexPtr> out;
    for (int n = 0; n <= 4; ++n) out.push_back(share(build_standard_cube(n)));
    for (int n = 0; n <= 4; ++n) out.push_back(build_z_tilde(n).complex);
    for (int n = 0; n <= 4; ++n) out.push_back(share(build_Z(n)));
    for (int n = 0; n <= 4; ++n) out.push_back(build_yA(n).complex);
    out.push_back(share(build_wedge_cube({2, 1, 3})));
    out.push_back(share(disjoint_union(build_standard_cube(1), build_standard_cube(2))));
    for (int n = 0; n <= 4; ++n) out.push_back(length_covering(share(build_Z(4)), n).complex);
    return out;
}

} // namespace

TEST_SUITE("pcs_core") {

TEST_CASE("standard square validates") {
    CHECK(validate_complex(build_standard_cube(2)).ok());
}

TEST_CASE("a redirected face of the square breaks exactly one identity") {
    PrecubicalComplex k = build_standard_cube(2);
    const CellRef edge = cube_cell("*0");
    const CellRef wrong = cube_cell("11");
    k.set_face(1, edge.index, 1, 0, wrong.index);
    auto report = validate_complex(k);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].dim == 2);
    CHECK(report.violations[0].i == 1);
    CHECK(report.violations[0].j == 2);
}

TEST_CASE("missing face entries are structural errors") {
    PrecubicalComplex k({2, 1});
    k.set_face(1, 0, 1, 0, 0);
    CHECK_THROWS_AS(validate_complex(k), StructuralError);
}

TEST_CASE("every constructed complex validates") {
    for (const auto& k : constructed_complexes()) CHECK(validate_complex(*k).ok());
}

TEST_CASE("z-tilde faces and validation") {
    auto z = build_z_tilde(3);
    CHECK(validate_complex(*z.complex).ok());
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t j = 0; j + k <= 3; ++j) {
            for (int i = 1; i <= k; ++i) {
                CHECK(z.complex->face(k, j, i, 0) == j);
                CHECK(z.complex->face(k, j, i, 1) == j + 1);
            }
        }
    }
}

TEST_CASE("altitude of the square counts ones") {
    auto k = square();
    auto alt = compute_altitude(*k);
    REQUIRE(alt);
    CHECK(is_altitude(*k, *alt));
    for (int d = 0; d <= 2; ++d) {
        for (std::size_t c = 0; c < k->count(d); ++c) CHECK((*alt)(d, c) == ones_in(cube_word(2, d, c)));
    }
}

TEST_CASE("truncated Z has no altitude") {
    CHECK_FALSE(compute_altitude(build_Z(1)).has_value());
    CHECK_FALSE(compute_altitude(build_Z(3)).has_value());
    CHECK(compute_altitude(build_Z(0)).has_value());
}

TEST_CASE("z-tilde altitude is the subscript") {
    auto z = build_z_tilde(3);
    auto alt = compute_altitude(*z.complex);
    REQUIRE(alt);
    for (int k = 0; k <= 3; ++k) {
        for (std::size_t j = 0; j + k <= 3; ++j) {
            CHECK((*alt)(k, j) == static_cast<long long>(j));
            CHECK(z.altitude(k, j) == static_cast<long long>(j));
        }
    }
}

TEST_CASE("altitude is unique on connected bipointed complexes") {
    // The only freedom in the propagation is the anchor; a shifted labelling
    // is an altitude function only away from the anchored vertex.
    auto y = build_yA(3);
    auto alt = compute_altitude(*y.complex);
    REQUIRE(alt);
    CHECK((*alt)(0, y.complex->base()->initial) == 0);
    for (int d = 0; d <= y.complex->max_dim(); ++d) {
        for (std::size_t c = 0; c < y.complex->count(d); ++c) CHECK((*alt)(d, c) == y.altitude(d, c));
    }
}

TEST_CASE("bipointed maps preserve altitude") {
    // Projection Y^A -> Z~_n and the isomorphism of Z~_2 with the covering of Z.
    for (int n = 1; n <= 4; ++n) {
        auto y = build_yA(n);
        auto ay = compute_altitude(*y.complex);
        auto az = compute_altitude(*y.z_tilde);
        REQUIRE(ay);
        REQUIRE(az);
        for (int d = 0; d <= y.complex->max_dim(); ++d) {
            for (std::size_t c = 0; c < y.complex->count(d); ++c) CHECK((*az)(d, y.projection(d, c)) == (*ay)(d, c));
        }
    }
}

TEST_CASE("accessible part of the bounded Z covering") {
    auto cov = length_covering(share(build_Z(3)), 3);
    const auto& k = *cov.complex;
    CHECK(k.counts() == std::vector<std::size_t>{4, 3, 2, 1});
    for (int d = 0; d <= 3; ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            const long long j = cov.altitude(d, c);
            CHECK(j >= 0);
            CHECK(j + d <= 3);
        }
    }
}

TEST_CASE("accessible part of the square is the square") {
    auto sq = square();
    auto acc = accessible_part(*sq);
    CHECK(acc.complex->same_structure(*sq));
}

TEST_CASE("accessible part across components is empty") {
    PrecubicalComplex k = disjoint_union(build_standard_cube(1), build_standard_cube(1));
    k.set_base(BasePoints{0, 3});
    auto acc = accessible_part(k);
    CHECK(acc.complex->empty());
}

TEST_CASE("accessible part is idempotent and face closed") {
    PrecubicalComplex k = disjoint_union(build_standard_cube(2), build_standard_cube(1));
    k.set_base(BasePoints{0, 3});
    auto once = accessible_part(k);
    auto twice = accessible_part(*once.complex);
    CHECK(twice.complex->same_structure(*once.complex));
    CHECK(validate_complex(*once.complex).ok());
    CHECK(once.complex->counts() == std::vector<std::size_t>{4, 4, 1});
}

TEST_CASE("non-self-linked examples") {
    for (int n = 0; n <= 4; ++n) CHECK(is_non_self_linked(build_standard_cube(n)).non_self_linked);
    for (int m = 1; m <= 3; ++m) {
        auto z = build_Z(m);
        auto r = is_non_self_linked(z);
        CHECK_FALSE(r.non_self_linked);
        REQUIRE(r.counterexample);
        CHECK(z.name(r.counterexample->dim, r.counterexample->index) == "z^1");
    }
    CHECK(is_non_self_linked(*build_yA(2).complex).non_self_linked);
}

TEST_CASE("canonical map images are injective exactly on embedded cubes") {
    auto k = square();
    auto img = canonical_map_images(*k, {2, 0});
    // Indices are per dimension; the dimension of code c is its number of '2' digits.
    std::set<std::pair<int, std::size_t>> distinct;
    for (std::size_t code = 0; code < img.size(); ++code) {
        const int stars = (code % 3 == 2) + (code / 3 == 2);
        distinct.emplace(stars, img[code]);
    }
    CHECK(img.size() == 9);
    CHECK(distinct.size() == 9);
}

TEST_CASE("self-link cap is enforced") {
    CHECK_THROWS_AS(is_non_self_linked(build_standard_cube(3), 2), ResourceError);
}

TEST_CASE("iterated faces") {
    auto sq = square();
    const std::vector<int> both{1, 2};
    CHECK(cube_word(2, 0, iterated_face(*sq, {2, 0}, both, 0)) == "00");

    auto z = build_z_tilde(3);
    CHECK(iterated_face(*z.complex, {2, 0}, both, 1) == 2);

    auto y = build_yA(2);
    const std::vector<int> second{2};
    auto top = y.ref(parse_ycell("(|a<b|)", 2));
    auto face = iterated_face(*y.complex, top, second, 0);
    CHECK(to_string(y.cells[1][face]) == "(|a|b)");
}

TEST_CASE("iterated faces agree for any index order") {
    auto k = share(build_standard_cube(3));
    const std::vector<int> a{1, 3}, b{3, 1};
    for (int e = 0; e < 2; ++e) CHECK(iterated_face(*k, {3, 0}, a, e) == iterated_face(*k, {3, 0}, b, e));
}

TEST_CASE("pullback over the final object along the identity") {
    auto z = share(build_Z(2));
    auto k = share(build_standard_cube(2));
    auto pb = pullback(map_to_Z(k, z), identity_map(z));
    CHECK(oracle::find_isomorphism(*pb.complex, *k).has_value());
    CHECK(is_valid_map(pb.left));
    CHECK(is_valid_map(pb.right));
}

TEST_CASE("pullback of the projection of Y^{a,b} with itself") {
    auto y = build_yA(2);
    auto pb = pullback(y.projection, y.projection);
    CHECK(pb.complex->count(2) == 4);
    CHECK(validate_complex(*pb.complex).ok());
    // Projections commute with the input maps.
    for (int d = 0; d <= pb.complex->max_dim(); ++d) {
        for (std::size_t c = 0; c < pb.complex->count(d); ++c) {
            CHECK(y.projection(d, pb.left(d, c)) == y.projection(d, pb.right(d, c)));
        }
    }
}

TEST_CASE("pullback of vertex-only complexes is the product") {
    auto a = share(PrecubicalComplex({3}));
    auto b = share(PrecubicalComplex({2}));
    auto pt = share(PrecubicalComplex({1}));
    PrecubicalMap p{a, pt, {{0, 0, 0}}, false};
    PrecubicalMap q{b, pt, {{0, 0}}, false};
    auto pb = pullback(p, q);
    CHECK(pb.complex->counts() == std::vector<std::size_t>{6});
    std::set<std::pair<std::size_t, std::size_t>> pairs(pb.pairs[0].begin(), pb.pairs[0].end());
    CHECK(pairs.size() == 6);
}

TEST_CASE("quotient of Y^{a,b} is Z~_2") {
    auto y = build_yA(2);
    auto q = quotient_by_automorphisms(y.complex, y.action);
    CHECK(q.complex->counts() == std::vector<std::size_t>{3, 2, 1});
    CHECK(oracle::find_isomorphism(*q.complex, *y.z_tilde).has_value());
    CHECK(validate_complex(*q.complex).ok());
}

TEST_CASE("quotient by the trivial group") {
    auto k = share(build_standard_cube(2));
    std::vector<PrecubicalMap> group{identity_map(k)};
    auto q = quotient_by_automorphisms(k, group);
    CHECK(q.complex->same_structure(*k));
}

TEST_CASE("quotient of Y^{a,b,c} has the counts of Z~_3") {
    auto y = build_yA(3);
    auto q = quotient_by_automorphisms(y.complex, y.action);
    CHECK(q.complex->counts() == std::vector<std::size_t>{4, 3, 2, 1});
}

TEST_CASE("non-free quotients validate") {
    // Reflection of the square swapping the two coordinates fixes the diagonal vertices.
    auto k = share(build_standard_cube(2));
    PrecubicalMap swap{k, k, {}, false};
    swap.assignment.resize(3);
    for (int d = 0; d <= 2; ++d) {
        for (std::size_t c = 0; c < k->count(d); ++c) {
            std::string w = cube_word(2, d, c);
            std::swap(w[0], w[1]);
            swap.assignment[d].push_back(cube_cell(w).index);
        }
    }
    // Swapping positions also swaps face indices, so this is not a precubical map.
    CHECK_FALSE(is_valid_map(swap));
    std::vector<PrecubicalMap> bad{swap};
    CHECK_THROWS_AS(quotient_by_automorphisms(k, bad), ContractError);

    // The flip of a single edge-loop complex is a genuine non-free automorphism.
    PrecubicalComplex two_edges({2, 2});
    for (std::size_t e = 0; e < 2; ++e) {
        two_edges.set_face(1, e, 1, 0, 0);
        two_edges.set_face(1, e, 1, 1, 1);
    }
    auto te = share(std::move(two_edges));
    PrecubicalMap flip{te, te, {{0, 1}, {1, 0}}, false};
    REQUIRE(is_valid_map(flip));
    std::vector<PrecubicalMap> g{flip};
    auto q = quotient_by_automorphisms(te, g);
    CHECK(q.complex->counts() == std::vector<std::size_t>{2, 1});
    CHECK(validate_complex(*q.complex).ok());
}

TEST_CASE("length coverings of Z agree with Z~") {
    for (int n = 0; n <= 5; ++n) {
        auto cov = length_covering(share(build_Z(n)), n);
        auto zt = build_z_tilde(n);
        CHECK(oracle::find_isomorphism(*cov.complex, *zt.complex).has_value());
        CHECK(is_valid_map(cov.projection));
    }
}

TEST_CASE("length coverings of the interval") {
    auto edge = share(build_standard_cube(1));
    CHECK(oracle::find_isomorphism(*length_covering(edge, 1).complex, *edge).has_value());
    CHECK(length_covering(edge, 2).complex->empty());
    CHECK(length_covering(edge, 0).complex->empty());
}

TEST_CASE("length covering of the square keeps only the matching length") {
    auto sq = share(build_standard_cube(2));
    CHECK(oracle::find_isomorphism(*length_covering(sq, 2).complex, *sq).has_value());
    CHECK(length_covering(sq, 1).complex->empty());
}

TEST_CASE("serial wedge of cubes") {
    auto w = build_wedge_cube({1, 2});
    CHECK(w.counts() == std::vector<std::size_t>{5, 5, 1});
    CHECK(validate_complex(w).ok());
    CHECK(w.bipointed());
}

TEST_CASE("map composition and identity") {
    auto y = build_yA(3);
    auto id = identity_map(y.complex);
    auto c = compose(y.projection, id);
    CHECK(c.assignment == y.projection.assignment);
    CHECK(is_isomorphism(id));
}

TEST_CASE("random sub-complexes stay valid") {
    // Property: any face-closed selection of cells induces a valid complex.
    std::mt19937_64 rng(7);
    auto y = build_yA(3);
    const auto& k = *y.complex;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<bool>> keep(k.counts().size());
        for (int d = 0; d <= k.max_dim(); ++d) keep[d].assign(k.count(d), false);
        for (int d = 0; d <= k.max_dim(); ++d) {
            for (std::size_t c = 0; c < k.count(d); ++c) {
                if (rng() % 3 != 0) continue;
                for (CellRef f : oracle::faces_of(k, {d, c})) keep[f.dim][f.index] = true;
            }
        }
        auto sub = induced_subcomplex(k, keep);
        CHECK(validate_complex(*sub.complex).ok());
    }
}

} // TEST_SUITE
