#include "dicube/order_category.hpp"

#include <algorithm>
#include <bit>

#include "dicube/errors.hpp"
#include "dicube/kernels.hpp"

namespace dicube {

std::string order_label(const DoubleOrder& o) { return to_string(o); }

OrderPoset build_order_poset(int n, OrderPosetKind kind) {
    OrderPoset p;
    p.orders = enumerate_orders(n, kind == OrderPosetKind::SemiRegularInclusion ? OrderClass::SemiRegular
                                                                                 : OrderClass::Regular);
    for (std::size_t i = 0; i < p.orders.size(); ++i) p.index.emplace(p.orders[i], i);
    const auto& os = p.orders;
    auto table = kernels::parallel::relation_table(os.size(), [&](std::size_t i, std::size_t j) {
        switch (kind) {
        case OrderPosetKind::RegularSquare:
            return poset_leq(os[i], os[j], OrderVariant::DoubleInclusion);
        case OrderPosetKind::RegularReverse:
            return poset_leq(os[j], os[i], OrderVariant::DoubleInclusion);
        case OrderPosetKind::SemiRegularInclusion:
            return poset_leq(os[i], os[j], OrderVariant::Inclusion);
        }
        return false;
    });
    std::vector<std::string> names;
    for (const auto& o : os) names.push_back(order_label(o));
    p.poset = FiniteCategory::from_poset(os.size(), table, names);

    p.action.group = all_permutations(n);
    for (const auto& sigma : p.action.group) {
        std::vector<ObjId> ob;
        for (const auto& o : os) ob.push_back(p.index.at(permuted(o, sigma)));
        std::vector<MorId> mo;
        for (MorId f = 0; f < p.poset.morphism_count(); ++f) {
            const auto& m = p.poset.morphism(f);
            mo.push_back(p.poset.poset_arrow(ob[m.source], ob[m.target]));
            if (mo.back() == kNoMorphism) throw ConsistencyError("permutation does not preserve the order relation");
        }
        p.action.on_objects.push_back(std::move(ob));
        p.action.on_morphisms.push_back(std::move(mo));
    }
    return p;
}

// ---------------------------------------------------------------------------

std::vector<int> block_bounds(BreakSet b, int n) {
    std::vector<int> bounds{0};
    for (int k = 1; k < n; ++k) {
        if (b & (1u << (k - 1))) bounds.push_back(k);
    }
    bounds.push_back(n);
    return bounds;
}

std::string break_set_name(BreakSet b, int n) {
    std::string s = "{";
    bool first = true;
    for (int k = 1; k < n; ++k) {
        if (!(b & (1u << (k - 1)))) continue;
        s += (first ? "" : ",") + std::to_string(k);
        first = false;
    }
    return s + "}";
}

namespace {

// Block number (0-based) of each position 1..n, stored at index position-1.
std::vector<int> block_of(BreakSet b, int n) {
    auto bounds = block_bounds(b, n);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (std::size_t p = 1; p < bounds.size(); ++p) {
        for (int i = bounds[p - 1]; i < bounds[p]; ++i) out[i] = static_cast<int>(p) - 1;
    }
    return out;
}

} // namespace

bool en_condition_x(const Permutation& phi, BreakSet target, int n) {
    auto blk = block_of(target, n);
    for (int i = 0; i < n; ++i) {
        if (blk[phi(i)] != blk[i]) return false;
    }
    return true;
}

bool en_condition_x_prime(const Permutation& phi, BreakSet target, int n) {
    auto blk = block_of(target, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (blk[i] != blk[j] && phi(i) > phi(j)) return false;
        }
    }
    return true;
}

bool en_condition_y(const Permutation& phi, BreakSet source, int n) {
    auto blk = block_of(source, n);
    for (int i = 0; i + 1 < n; ++i) {
        if (blk[i] == blk[i + 1] && phi(i) > phi(i + 1)) return false;
    }
    return true;
}

EnCategory build_En(int n) {
    if (n < 1) throw ArgumentError("E_n needs n >= 1");
    if (n > kMaxEnSize) throw ResourceError("E_n is capped at n = " + std::to_string(kMaxEnSize));
    EnCategory e;
    e.n = n;
    const BreakSet all = (1u << (n - 1)) - 1;
    for (BreakSet b = 0; b <= all; ++b) e.objects.push_back(b);
    auto elements = [n](BreakSet b) {
        std::vector<int> v;
        for (int k = 1; k < n; ++k) {
            if (b & (1u << (k - 1))) v.push_back(k);
        }
        return v;
    };
    std::sort(e.objects.begin(), e.objects.end(), [&](BreakSet a, BreakSet b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
        return elements(a) < elements(b);
    });
    for (BreakSet b : e.objects) {
        const ObjId id = e.category.add_object(break_set_name(b, n));
        e.object_index.emplace(b, id);
        e.perm.push_back(Permutation::identity(n));
        e.morphism_index[{id, id, Permutation::identity(n)}] = e.category.identity(id);
    }
    const auto perms = all_permutations(n);
    for (BreakSet src : e.objects) {
        for (BreakSet dst : e.objects) {
            if ((dst & ~src) != 0) continue;
            const ObjId s = e.object_index.at(src);
            const ObjId t = e.object_index.at(dst);
            for (const auto& phi : perms) {
                if (s == t && phi.is_identity()) continue;
                if (!en_condition_x(phi, dst, n) || !en_condition_y(phi, src, n)) continue;
                const MorId f = e.category.add_morphism(s, t, to_string(phi));
                e.perm.push_back(phi);
                e.morphism_index[{s, t, phi}] = f;
            }
        }
    }
    for (MorId f = 0; f < e.category.morphism_count(); ++f) {
        if (e.category.is_identity(f)) continue;
        const auto& mf = e.category.morphism(f);
        for (MorId g : e.category.outgoing(mf.target)) {
            if (e.category.is_identity(g)) continue;
            const ObjId t = e.category.morphism(g).target;
            auto it = e.morphism_index.find({mf.source, t, e.perm[g] * e.perm[f]});
            if (it == e.morphism_index.end()) throw ConsistencyError("E_n is not closed under composition");
            e.category.set_composite(g, f, it->second);
        }
    }
    return e;
}

// ---------------------------------------------------------------------------

std::vector<int> monotone_numbering(const DoubleOrder& o) {
    if (!is_regular(o)) throw ContractError("monotone numbering needs a regular double order");
    auto h = *level_function(o.x);
    std::vector<int> seq(static_cast<std::size_t>(o.size()));
    for (int a = 0; a < o.size(); ++a) seq[a] = a;
    std::sort(seq.begin(), seq.end(), [&](int a, int b) {
        if (h[a] != h[b]) return h[a] < h[b];
        return o.y.test(a, b);
    });
    return seq;
}

BreakSet order_break_set(const DoubleOrder& o) {
    auto h = level_function(o.x);
    if (!h) throw ContractError("break set needs a semi-linear x-order");
    const int levels = o.size() == 0 ? 0 : *std::max_element(h->begin(), h->end());
    BreakSet b = 0;
    for (int p = 1; p < levels; ++p) {
        int count = static_cast<int>(std::count_if(h->begin(), h->end(), [p](int v) { return v <= p; }));
        b |= 1u << (count - 1);
    }
    return b;
}

EnFunctor functor_to_En(int n) {
    if (n < 1 || n > 5) throw ResourceError("the functor to E_n is built for 1 <= n <= 5");
    EnFunctor out;
    out.source = build_order_poset(n, OrderPosetKind::RegularReverse);
    out.target = build_En(n);
    const auto& src = out.source;
    const auto& en = out.target;
    auto problem = [&](std::string s) { out.problems.push_back(std::move(s)); };

    std::vector<std::vector<int>> numbering;
    for (const auto& o : src.orders) {
        numbering.push_back(monotone_numbering(o));
        // The numbering must reproduce o through its break set.
        auto bounds = block_bounds(order_break_set(o), n);
        std::vector<int> breaks(bounds.begin() + 1, bounds.end() - 1);
        if (!(order_from_numbering(numbering.back(), breaks) == o)) problem("monotone numbering does not rebuild " + to_string(o));
        out.on_objects.push_back(en.object_index.at(order_break_set(o)));
    }
    for (MorId f = 0; f < src.poset.morphism_count(); ++f) {
        const auto& m = src.poset.morphism(f);
        const auto& a = numbering[m.source];
        const auto& b = numbering[m.target];
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[b[i]] = i;
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[i] = pos[a[i]];
        Permutation phi(img);
        auto it = en.morphism_index.find({out.on_objects[m.source], out.on_objects[m.target], phi});
        if (it == en.morphism_index.end()) {
            problem("image of a morphism is not in E_n: " + to_string(phi));
            out.on_morphisms.push_back(kNoMorphism);
        } else {
            out.on_morphisms.push_back(it->second);
        }
    }
    if (!out.problems.empty()) return out;

    out.functorial = true;
    for (MorId f = 0; f < src.poset.morphism_count(); ++f) {
        if (src.poset.is_identity(f) && !en.category.is_identity(out.on_morphisms[f])) out.functorial = false;
        for (MorId g : src.poset.outgoing(src.poset.morphism(f).target)) {
            if (out.on_morphisms[src.poset.compose(g, f)] != en.category.compose(out.on_morphisms[g], out.on_morphisms[f])) {
                out.functorial = false;
            }
        }
    }
    if (!out.functorial) problem("F does not preserve composition");

    out.invariant = true;
    for (std::size_t g = 0; g < src.action.group.size(); ++g) {
        for (ObjId o = 0; o < src.orders.size(); ++o) {
            if (out.on_objects[src.action.on_objects[g][o]] != out.on_objects[o]) out.invariant = false;
        }
        for (MorId f = 0; f < src.poset.morphism_count(); ++f) {
            if (out.on_morphisms[src.action.on_morphisms[g][f]] != out.on_morphisms[f]) out.invariant = false;
        }
    }
    if (!out.invariant) problem("F is not invariant under the permutation action");

    out.quotient = quotient_category(src.poset, src.action);
    const auto& q = out.quotient;
    out.bar_on_objects.assign(q.category.object_count(), 0);
    out.bar_on_morphisms.assign(q.category.morphism_count(), 0);
    for (ObjId c = 0; c < q.category.object_count(); ++c) out.bar_on_objects[c] = out.on_objects[q.object_rep[c]];
    for (MorId f = 0; f < q.category.morphism_count(); ++f) out.bar_on_morphisms[f] = out.on_morphisms[q.morphism_rep[f]];
    auto bijective = [](std::vector<std::size_t> v, std::size_t size) {
        if (v.size() != size) return false;
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < size; ++i) {
            if (v[i] != i) return false;
        }
        return true;
    };
    out.bijective_objects = bijective(out.bar_on_objects, en.category.object_count());
    out.bijective_morphisms = bijective(out.bar_on_morphisms, en.category.morphism_count());
    if (!out.bijective_objects) problem("induced functor is not bijective on objects");
    if (!out.bijective_morphisms) problem("induced functor is not bijective on morphisms");
    return out;
}

} // namespace dicube
