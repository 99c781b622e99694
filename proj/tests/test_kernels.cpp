#include <doctest.h>

#include "dicube/canonical.hpp"
#include "dicube/double_order.hpp"
#include "dicube/kernels.hpp"

using namespace dicube;

TEST_SUITE("kernels") {

TEST_CASE("parallel kernels reproduce the serial reference") {
    const int saved = kernels::parallel::thread_count();
    for (int threads : {1, 2, 4}) {
        kernels::parallel::set_thread_count(threads);
        for (int n = 1; n <= 4; ++n) {
            const auto strict = strict_orders(n);
            CHECK(kernels::parallel::filter_double_orders(strict) == kernels::serial::filter_double_orders(strict));

            const auto regular = enumerate_orders(n, OrderClass::Regular);
            CHECK(kernels::parallel::pairwise_unions(regular, regular) ==
                  kernels::serial::pairwise_unions(regular, regular));

            auto pred = [&](std::size_t i, std::size_t j) {
                return poset_leq(regular[i], regular[j], OrderVariant::DoubleInclusion);
            };
            CHECK(kernels::parallel::relation_table(regular.size(), pred) ==
                  kernels::serial::relation_table(regular.size(), pred));

            auto y = build_yA(n);
            CHECK(kernels::parallel::first_self_linked_cell(*y.complex) ==
                  kernels::serial::first_self_linked_cell(*y.complex));
        }
        for (int m = 1; m <= 4; ++m) {
            auto z = build_Z(m);
            auto s = kernels::serial::first_self_linked_cell(z);
            REQUIRE(s);
            CHECK(kernels::parallel::first_self_linked_cell(z) == s);
            CHECK(s->dim == 1);
        }
    }
    kernels::parallel::set_thread_count(saved);
}

TEST_CASE("empty inputs") {
    std::vector<Relation> none;
    CHECK(kernels::parallel::filter_double_orders(none).empty());
    CHECK(kernels::parallel::relation_table(0, [](std::size_t, std::size_t) { return true; }).empty());
    CHECK_FALSE(kernels::parallel::first_self_linked_cell(build_standard_cube(0)).has_value());
}

} // TEST_SUITE
