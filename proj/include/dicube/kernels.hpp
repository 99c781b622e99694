#pragma once

// Data-parallel inner loops of the library. Every kernel exists twice with
// the same signature: `serial` is the reference used by the tests, `parallel`
// is the OpenMP version the library calls. Outputs are identical, including
// ordering.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dicube/double_order.hpp"
#include "dicube/precubical.hpp"

namespace dicube::kernels {

/// Row-major m x m table of a pure predicate; entry (i, j) = pred(i, j).
using PairPredicate = std::function<bool(std::size_t, std::size_t)>;

namespace serial {

/// First cell (dimension-major order) whose canonical map is not injective.
std::optional<CellRef> first_self_linked_cell(const PrecubicalComplex& k);

/// All pairs (x, y) of strict orders with every two elements comparable in x or y.
std::vector<DoubleOrder> filter_double_orders(std::span<const Relation> strict);

/// union_bar(lhs[i], rhs[j]) stored at i * rhs.size() + j.
std::vector<std::optional<DoubleOrder>> pairwise_unions(std::span<const DoubleOrder> lhs,
                                                        std::span<const DoubleOrder> rhs);

std::vector<std::uint8_t> relation_table(std::size_t m, const PairPredicate& pred);

} // namespace serial

namespace parallel {

std::optional<CellRef> first_self_linked_cell(const PrecubicalComplex& k);
std::vector<DoubleOrder> filter_double_orders(std::span<const Relation> strict);
std::vector<std::optional<DoubleOrder>> pairwise_unions(std::span<const DoubleOrder> lhs,
                                                        std::span<const DoubleOrder> rhs);
std::vector<std::uint8_t> relation_table(std::size_t m, const PairPredicate& pred);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int thread_count();
void set_thread_count(int threads);

} // namespace parallel

} // namespace dicube::kernels
