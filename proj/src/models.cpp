#include "dicube/models.hpp"

#include <algorithm>
#include <cstdlib>

#include "dicube/canonical.hpp"
#include "dicube/cube_chains.hpp"
#include "dicube/errors.hpp"
#include "dicube/order_category.hpp"

namespace dicube {

std::size_t enumeration_cap() {
    if (const char* env = std::getenv("DICUBE_MAX_CELLS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw ArgumentError("DICUBE_MAX_CELLS must be a positive integer");
    }
    return kDefaultNerveCap;
}

const std::vector<std::string>& model_ids() {
    static const std::vector<std::string> ids{"z",           "z-tilde", "yA", "chain-poset", "r-poset", "r-reverse",
                                              "rplus-poset", "en",      "quotient", "rplus-quotient"};
    return ids;
}

bool is_complex_model(const std::string& id) { return id == "z" || id == "z-tilde" || id == "yA"; }

bool is_category_model(const std::string& id) {
    return std::find(model_ids().begin(), model_ids().end(), id) != model_ids().end() && !is_complex_model(id);
}

PrecubicalComplex complex_model(const std::string& id, int n) {
    if (id == "z") return build_Z(n);
    if (id == "z-tilde") return *build_z_tilde(n).complex;
    if (id == "yA") return *build_yA(n).complex;
    throw ArgumentError("unknown complex model: " + id);
}

FiniteCategory category_model(const std::string& id, int n) {
    if (id == "chain-poset") return chain_poset(*build_yA(n).complex, enumeration_cap()).poset;
    if (id == "r-poset") return build_order_poset(n, OrderPosetKind::RegularSquare).poset;
    if (id == "r-reverse") return build_order_poset(n, OrderPosetKind::RegularReverse).poset;
    if (id == "rplus-poset") return build_order_poset(n, OrderPosetKind::SemiRegularInclusion).poset;
    if (id == "en") return build_En(n).category;
    if (id == "quotient") {
        auto p = build_order_poset(n, OrderPosetKind::RegularReverse);
        return quotient_category(p.poset, p.action).category;
    }
    if (id == "rplus-quotient") {
        auto p = build_order_poset(n, OrderPosetKind::SemiRegularInclusion);
        return quotient_category(p.poset, p.action).category;
    }
    throw ArgumentError("unknown category model: " + id);
}

std::vector<HomologyGroup> model_homology(const std::string& id, int n) {
    return homology(build_nerve(category_model(id, n), enumeration_cap()).complex);
}

ChainComplex cubical_chain_complex(const PrecubicalComplex& k) {
    ChainComplex cc;
    for (int d = 0; d <= k.max_dim(); ++d) cc.ranks.push_back(k.count(d));
    if (cc.ranks.empty()) return cc;
    cc.boundaries.emplace_back(0, cc.ranks[0]);
    for (int d = 1; d <= k.max_dim(); ++d) {
        SparseMatrix m(k.count(d - 1), k.count(d));
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                const Integer sign = (i % 2 == 0) ? 1 : -1;
                m.add(k.face(d, c, i, 0), c, sign);
                m.add(k.face(d, c, i, 1), c, -sign);
            }
        }
        cc.boundaries.push_back(std::move(m));
    }
    return cc;
}

} // namespace dicube
