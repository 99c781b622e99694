#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dicube {

using Integer = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

struct SmithResult {
    /// Nonzero diagonal entries d_1 | d_2 | ..., all positive.
    std::vector<Integer> diagonal;
    /// When requested: u * m * v is the diagonal form.
    std::optional<IntMatrix> u;
    std::optional<IntMatrix> v;
};

/// Dense Smith normal form with smallest-|pivot| selection.
SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Sparse integer matrix stored by columns; entries are (row, value), rows ascending.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
    /// Adds `value` to entry (r, c).
    void add(std::size_t r, std::size_t c, const Integer& value);
    IntMatrix dense() const;
    static SparseMatrix from_dense(const IntMatrix& m);
};

/// Nonzero invariant factors of a sparse matrix: unit pivots are eliminated
/// sparsely, the remainder goes through the dense Smith normal form.
std::vector<Integer> invariant_factors(const SparseMatrix& m);

/// Free chain complex; boundaries[k] is C_k -> C_{k-1} (boundaries[0] is 0 x rank C_0).
struct ChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<SparseMatrix> boundaries;

    int top() const { return static_cast<int>(ranks.size()) - 1; }
};

/// Empty when shapes match and every composite boundary vanishes.
std::vector<std::string> chain_complex_violations(const ChainComplex& c);

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    bool operator==(const HomologyGroup&) const = default;
};

/// H_0 .. H_top. Throws ContractError when a composite boundary is nonzero.
std::vector<HomologyGroup> homology(const ChainComplex& c);

long long euler_characteristic(const ChainComplex& c);
long long euler_characteristic(const std::vector<HomologyGroup>& h);

/// Drops trailing zero groups so that complexes of different length compare.
std::vector<HomologyGroup> trimmed(std::vector<HomologyGroup> h);

/// "Z, Z^3, Z/2" style text, degree 0 first.
std::string to_string(const std::vector<HomologyGroup>& h);

} // namespace dicube
