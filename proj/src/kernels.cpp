#include "dicube/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dicube::kernels {

namespace {

bool canonical_map_injective(const PrecubicalComplex& k, CellRef c) {
    auto image = canonical_map_images(k, c);
    // Group the images by the dimension of the standard-cube cell.
    std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(c.dim) + 1);
    for (std::size_t code = 0; code < image.size(); ++code) {
        std::size_t rest = code;
        int stars = 0;
        for (int p = 0; p < c.dim; ++p) {
            if (rest % 3 == 2) ++stars;
            rest /= 3;
        }
        by_dim[stars].push_back(image[code]);
    }
    for (int d = 0; d <= c.dim; ++d) {
        std::vector<bool> seen(k.count(d), false);
        for (std::size_t v : by_dim[d]) {
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

std::vector<CellRef> positive_cells(const PrecubicalComplex& k) {
    std::vector<CellRef> cells;
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) cells.push_back({d, c});
    }
    return cells;
}

bool pair_is_double(const Relation& x, const Relation& y) {
    const int n = x.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!x.comparable(a, b) && !y.comparable(a, b)) return false;
        }
    }
    return true;
}

// Collects the first exception thrown inside a parallel region.
class ErrorSlot {
public:
    template <typename F>
    void run(F&& f) {
        try {
            f();
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(dicube_error_slot)
#endif
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

} // namespace

// ---------------------------------------------------------------------------

namespace serial {

std::optional<CellRef> first_self_linked_cell(const PrecubicalComplex& k) {
    for (const auto& c : positive_cells(k)) {
        if (!canonical_map_injective(k, c)) return c;
    }
    return std::nullopt;
}

std::vector<DoubleOrder> filter_double_orders(std::span<const Relation> strict) {
    std::vector<DoubleOrder> out;
    for (const auto& x : strict) {
        for (const auto& y : strict) {
            if (pair_is_double(x, y)) out.emplace_back(x, y);
        }
    }
    return out;
}

std::vector<std::optional<DoubleOrder>> pairwise_unions(std::span<const DoubleOrder> lhs,
                                                        std::span<const DoubleOrder> rhs) {
    std::vector<std::optional<DoubleOrder>> out;
    out.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs) {
        for (const auto& b : rhs) out.push_back(union_bar(a, b));
    }
    return out;
}

std::vector<std::uint8_t> relation_table(std::size_t m, const PairPredicate& pred) {
    std::vector<std::uint8_t> table(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) table[i * m + j] = pred(i, j) ? 1 : 0;
    }
    return table;
}

} // namespace serial

// ---------------------------------------------------------------------------

namespace parallel {

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_count(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::optional<CellRef> first_self_linked_cell(const PrecubicalComplex& k) {
    const auto cells = positive_cells(k);
    const auto count = static_cast<std::ptrdiff_t>(cells.size());
    std::vector<std::uint8_t> bad(cells.size(), 0);
    ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        errors.run([&] { bad[i] = canonical_map_injective(k, cells[i]) ? 0 : 1; });
    }
    errors.rethrow();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (bad[i]) return cells[i];
    }
    return std::nullopt;
}

std::vector<DoubleOrder> filter_double_orders(std::span<const Relation> strict) {
    const auto count = static_cast<std::ptrdiff_t>(strict.size());
    std::vector<std::vector<DoubleOrder>> rows(strict.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        for (const auto& y : strict) {
            if (pair_is_double(strict[i], y)) rows[i].emplace_back(strict[i], y);
        }
    }
    std::vector<DoubleOrder> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<std::optional<DoubleOrder>> pairwise_unions(std::span<const DoubleOrder> lhs,
                                                        std::span<const DoubleOrder> rhs) {
    const std::size_t width = rhs.size();
    const auto total = static_cast<std::ptrdiff_t>(lhs.size() * width);
    std::vector<std::optional<DoubleOrder>> out(lhs.size() * width);
    ErrorSlot errors;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < total; ++t) {
        errors.run([&] { out[t] = union_bar(lhs[t / width], rhs[t % width]); });
    }
    errors.rethrow();
    return out;
}

std::vector<std::uint8_t> relation_table(std::size_t m, const PairPredicate& pred) {
    std::vector<std::uint8_t> table(m * m, 0);
    const auto rows = static_cast<std::ptrdiff_t>(m);
    ErrorSlot errors;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        errors.run([&] {
            for (std::size_t j = 0; j < m; ++j) table[i * m + j] = pred(i, j) ? 1 : 0;
        });
    }
    errors.rethrow();
    return table;
}

} // namespace parallel

} // namespace dicube::kernels
