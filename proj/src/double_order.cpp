#include "dicube/double_order.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "dicube/errors.hpp"
#include "dicube/kernels.hpp"

namespace dicube {

DoubleOrder::DoubleOrder(Relation x_rel, Relation y_rel) : x(x_rel), y(y_rel) {
    if (x.size() != y.size()) throw ArgumentError("double order parts live on different sets");
}

std::optional<std::vector<int>> level_function(const Relation& x) {
    if (!x.is_strict_order()) return std::nullopt;
    const int n = x.size();
    std::vector<int> h(static_cast<std::size_t>(n), 1);
    for (int round = 0; round < n; ++round) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (x.test(b, a)) h[a] = std::max(h[a], h[b] + 1);
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (x.test(a, b) != (h[a] < h[b])) return std::nullopt;
        }
    }
    return h;
}

namespace {

bool all_pairs_comparable(const DoubleOrder& o) {
    for (int a = 0; a < o.size(); ++a) {
        for (int b = a + 1; b < o.size(); ++b) {
            if (!o.x.comparable(a, b) && !o.y.comparable(a, b)) return false;
        }
    }
    return true;
}

bool x_excludes_y(const DoubleOrder& o) {
    for (int a = 0; a < o.size(); ++a) {
        for (int b = 0; b < o.size(); ++b) {
            if (o.x.test(a, b) && o.y.comparable(a, b)) return false;
        }
    }
    return true;
}

struct SemiRegularCache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const std::set<DoubleOrder>>> by_size;
};

SemiRegularCache& semi_regular_cache() {
    static SemiRegularCache cache;
    return cache;
}

std::vector<DoubleOrder> close_under_union(const std::vector<DoubleOrder>& regular) {
    // Closing R(A) under binary union reaches every finite union: a union of k
    // regular orders is the union of the first k-1 with the last, and every
    // sub-union of an irreflexive transitive closure stays irreflexive.
    std::set<DoubleOrder> all(regular.begin(), regular.end());
    std::vector<DoubleOrder> frontier(regular.begin(), regular.end());
    while (!frontier.empty()) {
        std::vector<DoubleOrder> everything(all.begin(), all.end());
        auto unions = kernels::parallel::pairwise_unions(frontier, everything);
        std::vector<DoubleOrder> next;
        for (const auto& u : unions) {
            if (u && all.insert(*u).second) next.push_back(*u);
        }
        frontier = std::move(next);
    }
    return {all.begin(), all.end()};
}

std::shared_ptr<const std::set<DoubleOrder>> semi_regular_set(int n) {
    auto& cache = semi_regular_cache();
    std::lock_guard lock(cache.mutex);
    auto it = cache.by_size.find(n);
    if (it != cache.by_size.end()) return it->second;
    auto list = close_under_union(enumerate_orders(n, OrderClass::Regular));
    auto set = std::make_shared<const std::set<DoubleOrder>>(list.begin(), list.end());
    cache.by_size.emplace(n, set);
    return set;
}

} // namespace

bool is_double(const DoubleOrder& o) {
    return o.x.is_strict_order() && o.y.is_strict_order() && all_pairs_comparable(o);
}

bool is_regular(const DoubleOrder& o) {
    return is_double(o) && level_function(o.x).has_value() && x_excludes_y(o);
}

bool is_semi_regular(const DoubleOrder& o) {
    if (o.size() > kMaxDoubleOrderSize) {
        throw ResourceError("semi-regularity is decided by enumeration only up to 4 elements");
    }
    if (!is_double(o)) return false;
    return semi_regular_set(o.size())->contains(o);
}

Classification classify(const DoubleOrder& o) {
    Classification c;
    c.x_strict = o.x.is_strict_order();
    c.y_strict = o.y.is_strict_order();
    auto describe = [](const Relation& r, const char* part) -> std::string {
        if (!r.is_irreflexive()) return std::string(part) + "-relation is reflexive somewhere";
        if (!r.is_transitive()) return std::string(part) + "-relation is not transitive";
        return {};
    };
    if (!c.x_strict) c.diagnostic = describe(o.x, "x");
    if (!c.y_strict) {
        if (!c.diagnostic.empty()) c.diagnostic += "; ";
        c.diagnostic += describe(o.y, "y");
    }
    if (c.x_strict && c.y_strict) {
        c.is_double = all_pairs_comparable(o);
        if (!c.is_double) c.diagnostic = "some pair is comparable in neither relation";
    }
    if (c.x_strict) c.level = level_function(o.x);
    c.is_regular = c.is_double && c.level.has_value() && x_excludes_y(o);
    if (!c.is_double) {
        c.is_semi_regular = false;
    } else if (o.size() <= kMaxDoubleOrderSize) {
        c.is_semi_regular = semi_regular_set(o.size())->contains(o);
    }
    return c;
}

std::optional<DoubleOrder> union_bar(const DoubleOrder& a, const DoubleOrder& b) {
    if (a.size() != b.size()) throw ArgumentError("union_bar: different ground sets");
    Relation x = (a.x | b.x).closure();
    if (!x.is_irreflexive()) return std::nullopt;
    Relation y = (a.y | b.y).closure();
    if (!y.is_irreflexive()) return std::nullopt;
    return DoubleOrder{x, y};
}

DoubleOrder order_from_numbering(const std::vector<int>& numbering, const std::vector<int>& breaks) {
    const int n = static_cast<int>(numbering.size());
    // block[i] = number of breaks b with b <= i (0-based position i is i+1).
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int b : breaks) {
            if (b < 1 || b > n - 1) throw ArgumentError("break outside 1..n-1");
            if (b <= i) ++block[i];
        }
    }
    DoubleOrder o(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (block[i] < block[j]) {
                o.x.set(numbering[i], numbering[j]);
            } else {
                o.y.set(numbering[i], numbering[j]);
            }
        }
    }
    return o;
}

std::vector<DoubleOrder> enumerate_orders(int n, OrderClass cls) {
    if (n < 0) throw ArgumentError("negative ground set size");
    switch (cls) {
    case OrderClass::Double: {
        if (n > kMaxDoubleOrderSize) throw ResourceError("D(A) enumeration is capped at 4 elements");
        return kernels::parallel::filter_double_orders(strict_orders(n));
    }
    case OrderClass::Regular: {
        if (n > kMaxRegularOrderSize) throw ResourceError("R(A) enumeration is capped at 6 elements");
        std::vector<DoubleOrder> out;
        for (const auto& p : all_permutations(n)) {
            for (unsigned mask = 0; mask < (n > 0 ? (1u << (n - 1)) : 1u); ++mask) {
                std::vector<int> breaks;
                for (int b = 1; b < n; ++b) {
                    if (mask & (1u << (b - 1))) breaks.push_back(b);
                }
                out.push_back(order_from_numbering(p.image, breaks));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    case OrderClass::SemiRegular: {
        if (n > kMaxDoubleOrderSize) throw ResourceError("R+(A) enumeration is capped at 4 elements");
        auto set = semi_regular_set(n);
        return {set->begin(), set->end()};
    }
    }
    return {};
}

std::vector<DoubleOrder> regular_orders_by_filter(int n) {
    std::vector<DoubleOrder> out;
    for (const auto& o : enumerate_orders(n, OrderClass::Double)) {
        if (is_regular(o)) out.push_back(o);
    }
    return out;
}

bool poset_leq(const DoubleOrder& a, const DoubleOrder& b, OrderVariant variant) {
    if (!a.x.subset_of(b.x)) return false;
    return variant == OrderVariant::Inclusion ? a.y.subset_of(b.y) : b.y.subset_of(a.y);
}

Relation relative_difference(const Relation& first, const Relation& second) {
    Relation out(first.size());
    for (int a = 0; a < first.size(); ++a) {
        for (int b = 0; b < first.size(); ++b) {
            if (first.test(a, b) && !second.comparable(a, b)) out.set(a, b);
        }
    }
    return out;
}

DoubleOrder functor_f(const DoubleOrder& o) {
    if (!is_semi_regular(o)) throw ContractError("F is defined on semi-regular double orders only: " + to_string(o));
    DoubleOrder r{o.x, relative_difference(o.y, o.x)};
    if (!is_regular(r)) throw ConsistencyError("F produced a non-regular order from " + to_string(o));
    return r;
}

DoubleOrder functor_g(const std::vector<DoubleOrder>& chain) {
    if (chain.empty()) throw ArgumentError("G needs a non-empty chain");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!is_regular(chain[i])) throw ArgumentError("G: chain entry is not regular: " + to_string(chain[i]));
        if (i > 0 && (chain[i - 1] == chain[i] || !poset_leq(chain[i - 1], chain[i], OrderVariant::DoubleInclusion))) {
            throw ArgumentError("G: chain is not strictly increasing in the double-inclusion order");
        }
    }
    DoubleOrder result{chain.back().x, chain.front().y};
    DoubleOrder joined = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) {
        auto u = union_bar(joined, chain[i]);
        if (!u) throw ConsistencyError("G: union of the chain is not a double order");
        joined = *u;
    }
    if (!(joined == result)) throw ConsistencyError("G: endpoint formula disagrees with the union of the chain");
    if (result.size() <= kMaxDoubleOrderSize && !is_semi_regular(result)) {
        throw ConsistencyError("G produced a non-semi-regular order");
    }
    return result;
}

DoubleOrder permuted(const DoubleOrder& o, const Permutation& sigma) {
    return {o.x.permuted(sigma), o.y.permuted(sigma)};
}

std::string to_string(const DoubleOrder& o) {
    return "x{" + to_string(o.x) + "} y{" + to_string(o.y) + "}";
}

} // namespace dicube
