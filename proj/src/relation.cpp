#include "dicube/relation.hpp"

#include <algorithm>
#include <bit>

#include "dicube/errors.hpp"

namespace dicube {

Relation::Relation(int n) : n_(n) {
    if (n < 0 || n > kMaxRelationSize) throw ArgumentError("relation size must be in 0..8");
}

Relation Relation::from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) r.set(a, b);
    return r;
}

Relation Relation::from_matrix(const std::vector<std::vector<bool>>& m) {
    Relation r(static_cast<int>(m.size()));
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a].size() != m.size()) throw StructuralError("relation matrix is not square");
        for (std::size_t b = 0; b < m.size(); ++b) {
            if (m[a][b]) r.set(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return r;
}

void Relation::set(int a, int b, bool value) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw ArgumentError("relation element out of range");
    std::uint64_t bit = std::uint64_t{1} << (a * 8 + b);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

int Relation::pair_count() const { return std::popcount(bits_); }

bool Relation::is_irreflexive() const {
    for (int a = 0; a < n_; ++a) {
        if (test(a, a)) return false;
    }
    return true;
}

bool Relation::is_transitive() const { return then(*this).subset_of(*this); }

bool Relation::is_total() const {
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (!comparable(a, b)) return false;
        }
    }
    return true;
}

Relation Relation::then(const Relation& s) const {
    Relation out(n_);
    for (int a = 0; a < n_; ++a) {
        std::uint8_t acc = 0;
        std::uint8_t r = row(a);
        for (int b = 0; b < n_; ++b) {
            if (r & (1u << b)) acc |= s.row(b);
        }
        out.bits_ |= std::uint64_t{acc} << (a * 8);
    }
    return out;
}

Relation Relation::closure() const {
    Relation cur = *this;
    while (true) {
        Relation next = cur | cur.then(cur);
        if (next == cur) return cur;
        cur = next;
    }
}

Relation Relation::permuted(const Permutation& sigma) const {
    if (sigma.size() != n_) throw ArgumentError("permutation size does not match relation");
    Relation out(n_);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (test(sigma(a), sigma(b))) out.set(a, b);
        }
    }
    return out;
}

Relation Relation::restricted(const std::vector<int>& elements) const {
    Relation out(static_cast<int>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (test(elements[i], elements[j])) out.set(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

std::vector<std::vector<bool>> Relation::matrix() const {
    std::vector<std::vector<bool>> m(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_)));
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) m[a][b] = test(a, b);
    }
    return m;
}

Relation operator|(const Relation& a, const Relation& b) {
    if (a.n_ != b.n_) throw ArgumentError("relations on different sets");
    Relation r(a.n_);
    r.bits_ = a.bits_ | b.bits_;
    return r;
}

Relation operator&(const Relation& a, const Relation& b) {
    if (a.n_ != b.n_) throw ArgumentError("relations on different sets");
    Relation r(a.n_);
    r.bits_ = a.bits_ & b.bits_;
    return r;
}

std::vector<Relation> strict_orders(int n) {
    if (n > 5) throw ResourceError("strict order enumeration is capped at 5 elements");
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b) slots.emplace_back(a, b);
        }
    }
    std::vector<Relation> out;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Relation r(n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (mask & (std::uint64_t{1} << s)) r.set(slots[s].first, slots[s].second);
        }
        // Irreflexive by construction; antisymmetry follows from transitivity.
        if (r.is_transitive() && r.is_irreflexive()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string element_name(int a) {
    if (a < 26) return std::string(1, static_cast<char>('a' + a));
    return "e" + std::to_string(a);
}

std::string to_string(const Relation& r) {
    std::string s;
    for (int a = 0; a < r.size(); ++a) {
        for (int b = 0; b < r.size(); ++b) {
            if (!r.test(a, b)) continue;
            if (!s.empty()) s += ", ";
            s += element_name(a) + "<" + element_name(b);
        }
    }
    return s;
}

} // namespace dicube
