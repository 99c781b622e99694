#include "dicube/homology.hpp"

#include <algorithm>
#include <map>

#include "dicube/errors.hpp"

namespace dicube {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ArgumentError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
    if (sgn(k) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn((*this)(src, c)) != 0) (*this)(dst, c) += k * (*this)(src, c);
    }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
    if (sgn(k) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (sgn((*this)(r, src)) != 0) (*this)(r, dst) += k * (*this)(r, src);
    }
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matrix shapes do not match");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw ArgumentError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Turns a list of nonzero diagonal entries into the divisibility chain of
// the same diagonal matrix: diag(a, b) is equivalent to diag(gcd, lcm).
std::vector<Integer> normalize_diagonal(std::vector<Integer> d) {
    for (auto& x : d) x = abs(x);
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            if (g == d[i]) continue;
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    return d;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& input, bool with_transforms) {
    IntMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix u = with_transforms ? IntMatrix::identity(rows) : IntMatrix();
    IntMatrix v = with_transforms ? IntMatrix::identity(cols) : IntMatrix();
    auto row_swap = [&](std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        if (with_transforms) u.swap_rows(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        m.swap_cols(a, b);
        if (with_transforms) v.swap_cols(a, b);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        m.add_row(dst, src, k);
        if (with_transforms) u.add_row(dst, src, k);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        m.add_col(dst, src, k);
        if (with_transforms) v.add_col(dst, src, k);
    };

    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        while (true) {
            // Smallest nonzero |entry| in the remaining block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r) {
                for (std::size_t c = t; c < cols; ++c) {
                    if (sgn(m(r, c)) == 0) continue;
                    if (pr == rows || mpz_cmpabs(m(r, c).get_mpz_t(), m(pr, pc).get_mpz_t()) < 0) {
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr == rows) break;
            row_swap(t, pr);
            col_swap(t, pc);
            const Integer p = m(t, t);
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (sgn(m(r, t)) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), p.get_mpz_t());
                row_add(r, t, -q);
                if (sgn(m(r, t)) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (sgn(m(t, c)) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), p.get_mpz_t());
                col_add(c, t, -q);
                if (sgn(m(t, c)) != 0) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the whole remaining block.
            std::size_t bad_r = rows;
            for (std::size_t r = t + 1; r < rows && bad_r == rows; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (!mpz_divisible_p(m(r, c).get_mpz_t(), p.get_mpz_t())) {
                        bad_r = r;
                        break;
                    }
                }
            }
            if (bad_r == rows) break;
            row_add(t, bad_r, 1);
        }
        if (sgn(m(t, t)) == 0) break;
        if (sgn(m(t, t)) < 0) {
            for (std::size_t c = 0; c < cols; ++c) m(t, c) = -m(t, c);
            if (with_transforms) {
                for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
            }
        }
    }
    SmithResult out;
    for (std::size_t i = 0; i < rows && i < cols; ++i) {
        if (sgn(m(i, i)) != 0) out.diagonal.push_back(m(i, i));
    }
    if (with_transforms) {
        out.u = std::move(u);
        out.v = std::move(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& value) {
    if (r >= rows || c >= cols) throw ArgumentError("sparse entry out of range");
    auto& col = columns[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        it->second += value;
        if (sgn(it->second) == 0) col.erase(it);
    } else if (sgn(value) != 0) {
        col.insert(it, {r, value});
    }
}

IntMatrix SparseMatrix::dense() const {
    IntMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [r, v] : columns[c]) m(r, c) = v;
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (sgn(m(r, c)) != 0) s.columns[c].push_back({r, m(r, c)});
        }
    }
    return s;
}

std::vector<Integer> invariant_factors(const SparseMatrix& input) {
    // Work row-wise: rows[r] maps column -> value; col_rows[c] lists rows with an entry in c.
    std::vector<std::map<std::size_t, Integer>> rows(input.rows);
    std::vector<std::map<std::size_t, bool>> col_rows(input.cols);
    for (std::size_t c = 0; c < input.cols; ++c) {
        for (const auto& [r, v] : input.columns[c]) {
            rows[r][c] = v;
            col_rows[c][r] = true;
        }
    }
    std::vector<bool> row_alive(input.rows, true);
    std::size_t units = 0;

    auto eliminate = [&](std::size_t pr, std::size_t pc) {
        // Clear column pc below/above the unit pivot with row operations, then
        // drop the pivot row and column (column operations then clear the row
        // without touching anything else).
        const Integer p = rows[pr].at(pc);
        std::vector<std::size_t> targets;
        for (const auto& [r, _] : col_rows[pc]) {
            if (r != pr) targets.push_back(r);
        }
        for (std::size_t r : targets) {
            const Integer k = -rows[r].at(pc) * p; // p = +-1, so p^-1 = p
            for (const auto& [c, v] : rows[pr]) {
                Integer& dst = rows[r][c];
                dst += k * v;
                if (sgn(dst) == 0) {
                    rows[r].erase(c);
                    col_rows[c].erase(r);
                } else {
                    col_rows[c][r] = true;
                }
            }
        }
        for (const auto& [c, _] : rows[pr]) col_rows[c].erase(pr);
        rows[pr].clear();
        row_alive[pr] = false;
        ++units;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < input.cols; ++c) {
            std::size_t best = input.rows;
            for (const auto& [r, _] : col_rows[c]) {
                if (mpz_cmpabs_ui(rows[r].at(c).get_mpz_t(), 1) != 0) continue;
                if (best == input.rows || rows[r].size() < rows[best].size()) best = r;
            }
            if (best != input.rows) {
                eliminate(best, c);
                progress = true;
            }
        }
    }

    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < input.rows; ++r) {
        if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
    }
    for (std::size_t c = 0; c < input.cols; ++c) {
        if (!col_rows[c].empty()) live_cols.push_back(c);
    }
    std::vector<Integer> out(units, Integer(1));
    if (!live_rows.empty()) {
        std::map<std::size_t, std::size_t> col_pos;
        for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = i;
        IntMatrix rest(live_rows.size(), live_cols.size());
        for (std::size_t i = 0; i < live_rows.size(); ++i) {
            for (const auto& [c, v] : rows[live_rows[i]]) rest(i, col_pos.at(c)) = v;
        }
        for (auto& d : smith_normal_form(rest).diagonal) out.push_back(d);
    }
    return normalize_diagonal(std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<std::string> chain_complex_violations(const ChainComplex& cc) {
    std::vector<std::string> out;
    if (cc.boundaries.size() != cc.ranks.size()) {
        out.push_back("boundary count differs from rank count");
        return out;
    }
    for (std::size_t k = 0; k < cc.ranks.size(); ++k) {
        const auto& d = cc.boundaries[k];
        const std::size_t expect_rows = k == 0 ? 0 : cc.ranks[k - 1];
        if (d.cols != cc.ranks[k] || d.rows != expect_rows || d.columns.size() != d.cols) {
            out.push_back("boundary " + std::to_string(k) + " has the wrong shape");
        }
    }
    if (!out.empty()) return out;
    for (std::size_t k = 2; k < cc.ranks.size(); ++k) {
        const auto& hi = cc.boundaries[k];
        const auto& lo = cc.boundaries[k - 1];
        for (std::size_t c = 0; c < hi.cols; ++c) {
            std::map<std::size_t, Integer> acc;
            for (const auto& [mid, v] : hi.columns[c]) {
                for (const auto& [r, w] : lo.columns[mid]) acc[r] += v * w;
            }
            for (const auto& [r, v] : acc) {
                if (sgn(v) != 0) {
                    out.push_back("boundary " + std::to_string(k - 1) + " after " + std::to_string(k) +
                                  " is nonzero at generator " + std::to_string(c));
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
    auto bad = chain_complex_violations(cc);
    if (!bad.empty()) throw ContractError("not a chain complex: " + bad.front());
    const std::size_t top = cc.ranks.size();
    std::vector<std::vector<Integer>> factors(top + 1);
    for (std::size_t k = 1; k < top; ++k) factors[k] = invariant_factors(cc.boundaries[k]);
    std::vector<HomologyGroup> h(top);
    for (std::size_t k = 0; k < top; ++k) {
        const std::size_t rank_out = factors[k].size();
        const std::size_t rank_in = k + 1 < top ? factors[k + 1].size() : 0;
        h[k].betti = cc.ranks[k] - rank_out - rank_in;
        if (k + 1 < top) {
            for (const auto& d : factors[k + 1]) {
                if (d > 1) h[k].torsion.push_back(d);
            }
        }
    }
    return h;
}

long long euler_characteristic(const ChainComplex& cc) {
    long long chi = 0;
    for (std::size_t k = 0; k < cc.ranks.size(); ++k) {
        chi += (k % 2 ? -1 : 1) * static_cast<long long>(cc.ranks[k]);
    }
    return chi;
}

long long euler_characteristic(const std::vector<HomologyGroup>& h) {
    long long chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(h[k].betti);
    return chi;
}

std::vector<HomologyGroup> trimmed(std::vector<HomologyGroup> h) {
    while (!h.empty() && h.back().betti == 0 && h.back().torsion.empty()) h.pop_back();
    return h;
}

std::string to_string(const std::vector<HomologyGroup>& h) {
    std::string s;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k) s += ", ";
        std::string part;
        if (h[k].betti == 1) part = "Z";
        if (h[k].betti > 1) part = "Z^" + std::to_string(h[k].betti);
        for (const auto& t : h[k].torsion) {
            if (!part.empty()) part += " + ";
            part += "Z/" + t.get_str();
        }
        s += part.empty() ? "0" : part;
    }
    return s;
}

} // namespace dicube
