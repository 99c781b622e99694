#include "dicube/conf_cover.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

#include "dicube/errors.hpp"

namespace dicube {

bool is_injective(const LabeledPoint& f) {
    for (int a = 0; a < f.size(); ++a) {
        for (int b = a + 1; b < f.size(); ++b) {
            if (f.coords[a] == f.coords[b]) return false;
        }
    }
    return true;
}

bool u_contains(const DoubleOrder& o, const LabeledPoint& f) {
    if (o.size() != f.size()) throw ArgumentError("order and configuration have different sizes");
    for (int a = 0; a < o.size(); ++a) {
        for (int b = 0; b < o.size(); ++b) {
            if (o.x.test(a, b) && !(f.coords[a].first < f.coords[b].first)) return false;
            if (o.y.test(a, b) && !(f.coords[a].second < f.coords[b].second)) return false;
        }
    }
    return true;
}

namespace {

// Rank (1-based) of each element in a linear extension of a strict order.
std::vector<int> extension_ranks(const Relation& r) {
    if (!r.is_strict_order()) throw ContractError("linear extension of a relation that is not a strict order");
    const int n = r.size();
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int step = 1; step <= n; ++step) {
        for (int a = 0; a < n; ++a) {
            if (placed[a]) continue;
            bool minimal = true;
            for (int b = 0; b < n; ++b) {
                if (!placed[b] && r.test(b, a)) minimal = false;
            }
            if (minimal) {
                placed[a] = true;
                rank[a] = step;
                break;
            }
        }
    }
    return rank;
}

std::string point_text(const LabeledPoint& f) {
    std::string s;
    for (int a = 0; a < f.size(); ++a) {
        s += element_name(a) + "=(" + f.coords[a].first.get_str() + "," + f.coords[a].second.get_str() + ") ";
    }
    return s;
}

} // namespace

LabeledPoint witness_point(const DoubleOrder& o) {
    auto hx = extension_ranks(o.x);
    auto hy = extension_ranks(o.y);
    LabeledPoint f;
    for (int a = 0; a < o.size(); ++a) f.coords.emplace_back(Rational(hx[a]), Rational(hy[a]));
    return f;
}

DoubleOrder point_to_order(const LabeledPoint& f) {
    if (!is_injective(f)) throw ArgumentError("point_to_order needs an injective configuration");
    DoubleOrder o(f.size());
    for (int a = 0; a < f.size(); ++a) {
        for (int b = 0; b < f.size(); ++b) {
            if (f.coords[a].first < f.coords[b].first) o.x.set(a, b);
            if (f.coords[a].first == f.coords[b].first && f.coords[a].second < f.coords[b].second) o.y.set(a, b);
        }
    }
    if (!is_regular(o) || !u_contains(o, f)) throw ConsistencyError("configuration order is not regular");
    return o;
}

std::optional<LabeledPoint> separating_witness(const DoubleOrder& o1, const DoubleOrder& o2) {
    for (int axis = 0; axis < 2; ++axis) {
        const Relation& r1 = axis == 0 ? o1.x : o1.y;
        const Relation& r2 = axis == 0 ? o2.x : o2.y;
        for (int a = 0; a < o1.size(); ++a) {
            for (int b = 0; b < o1.size(); ++b) {
                if (!r2.test(a, b) || r1.test(a, b)) continue;
                // o2 demands a < b on this axis and o1 does not; force b < a.
                DoubleOrder ext = o1;
                Relation& e = axis == 0 ? ext.x : ext.y;
                if (!r1.test(b, a)) {
                    e.set(b, a);
                    e = e.closure();
                }
                LabeledPoint f = witness_point(ext);
                if (u_contains(o1, f) && !u_contains(o2, f)) return f;
                throw ConsistencyError("separating witness construction failed");
            }
        }
    }
    return std::nullopt;
}

std::vector<int> union_cycle(const Relation& r1, const Relation& r2) {
    const Relation r = r1 | r2;
    const int n = r.size();
    std::vector<int> state(static_cast<std::size_t>(n), 0), stack;
    std::vector<int> cycle;
    std::function<bool(int)> visit = [&](int a) {
        state[a] = 1;
        stack.push_back(a);
        for (int b = 0; b < n; ++b) {
            if (!r.test(a, b)) continue;
            if (state[b] == 1) {
                auto it = std::find(stack.begin(), stack.end(), b);
                cycle.assign(it, stack.end());
                return true;
            }
            if (state[b] == 0 && visit(b)) return true;
        }
        stack.pop_back();
        state[a] = 2;
        return false;
    };
    for (int a = 0; a < n; ++a) {
        if (state[a] == 0 && visit(a)) return cycle;
    }
    return {};
}

LabeledPoint random_configuration(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> column(0, std::max(1, n - 1));
    std::uniform_int_distribution<int> numer(-50, 50);
    std::uniform_int_distribution<int> denom(1, 7);
    while (true) {
        LabeledPoint f;
        for (int a = 0; a < n; ++a) {
            Rational x(column(rng), denom(rng));
            Rational y(numer(rng), denom(rng));
            x.canonicalize();
            y.canonicalize();
            f.coords.emplace_back(x, y);
        }
        if (is_injective(f)) return f;
    }
}

std::string to_json(const LabeledPoint& f) {
    nlohmann::ordered_json points = nlohmann::ordered_json::object();
    for (int a = 0; a < f.size(); ++a) {
        auto text = [](const Rational& q) {
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        };
        points[element_name(a)] = {text(f.coords[a].first), text(f.coords[a].second)};
    }
    nlohmann::ordered_json j;
    j["points"] = points;
    return j.dump();
}

LabeledPoint point_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("configuration JSON: ") + e.what());
    }
    if (!j.contains("points") || !j["points"].is_object()) throw StructuralError("configuration JSON needs a points object");
    const auto& pts = j["points"];
    LabeledPoint f;
    for (int a = 0; a < static_cast<int>(pts.size()); ++a) {
        const std::string key = element_name(a);
        if (!pts.contains(key)) throw StructuralError("configuration JSON is missing point " + key);
        const auto& p = pts[key];
        if (!p.is_array() || p.size() != 2) throw StructuralError("point " + key + " needs two coordinates");
        auto parse = [&](const nlohmann::json& v) {
            try {
                Rational q(v.get<std::string>());
                q.canonicalize();
                return q;
            } catch (const std::exception&) {
                throw StructuralError("bad rational in point " + key);
            }
        };
        f.coords.emplace_back(parse(p[0]), parse(p[1]));
    }
    return f;
}

// ---------------------------------------------------------------------------

bool CoverReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CoverCheck& c) { return c.ok; });
}

CoverReport verify_cover(int n, std::size_t samples, std::uint64_t seed) {
    if (n < 1 || n > 4) throw ResourceError("cover verification runs for 1 <= |A| <= 4");
    CoverReport rep;
    rep.n = n;
    const auto regular = enumerate_orders(n, OrderClass::Regular);
    const auto family = n <= 3 ? enumerate_orders(n, OrderClass::SemiRegular) : regular;
    const std::set<DoubleOrder> members(family.begin(), family.end());
    const auto perms = all_permutations(n);
    auto fail = [](CoverCheck& c, std::string why) {
        if (c.ok) c.counterexample = std::move(why);
        c.ok = false;
    };

    // Intersection rule and completeness.
    CoverCheck complete;
    complete.name = "completeness";
    for (const auto& o1 : family) {
        for (const auto& o2 : family) {
            ++complete.checked;
            auto u = union_bar(o1, o2);
            if (u) {
                if (!is_double(*u)) fail(complete, "union is not a double order: " + to_string(o1) + " / " + to_string(o2));
                if (n <= 3 && !members.contains(*u)) fail(complete, "union leaves R+: " + to_string(*u));
                LabeledPoint w = witness_point(*u);
                if (!u_contains(o1, w) || !u_contains(o2, w) || !u_contains(*u, w) || !is_injective(w)) {
                    fail(complete, "witness of the union misses an input: " + to_string(*u));
                }
            } else {
                auto cx = union_cycle(o1.x, o2.x);
                auto cy = union_cycle(o1.y, o2.y);
                if (cx.empty() && cy.empty()) {
                    fail(complete, "union absent without a cycle: " + to_string(o1) + " / " + to_string(o2));
                }
                // Both witnesses must violate the other order; otherwise the intersection would be nonempty.
                if (u_contains(o2, witness_point(o1)) || u_contains(o1, witness_point(o2))) {
                    fail(complete, "disjoint pair shares a witness: " + to_string(o1) + " / " + to_string(o2));
                }
            }
        }
    }
    rep.checks.push_back(complete);

    // Properness: U(o) and U(o sigma) are disjoint for sigma != id.
    CoverCheck proper;
    proper.name = "properness";
    for (const auto& o : family) {
        std::vector<DoubleOrder> below;
        for (const auto& r : regular) {
            if (poset_leq(r, o, OrderVariant::Inclusion)) below.push_back(r);
        }
        if (below.empty()) fail(proper, "no regular order inside " + to_string(o));
        for (const auto& sigma : perms) {
            if (sigma.is_identity()) continue;
            ++proper.checked;
            if (union_bar(o, permuted(o, sigma))) fail(proper, to_string(o) + " meets its image under " + to_string(sigma));
            if (!below.empty() && union_bar(below.front(), permuted(below.front(), sigma))) {
                fail(proper, "regular " + to_string(below.front()) + " meets its image under " + to_string(sigma));
            }
        }
    }
    rep.checks.push_back(proper);

    // Equivariance: U(o) sigma = U(o sigma).
    CoverCheck equi;
    equi.name = "equivariance";
    for (const auto& o : family) {
        for (const auto& sigma : perms) {
            ++equi.checked;
            const DoubleOrder os = permuted(o, sigma);
            if (!members.contains(os)) fail(equi, "permuted order leaves the family: " + to_string(os));
            // The constraint (a, b) of o sigma is (sigma a, sigma b) of o.
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (os.x.test(a, b) != o.x.test(sigma(a), sigma(b)) || os.y.test(a, b) != o.y.test(sigma(a), sigma(b))) {
                        fail(equi, "constraint sets do not correspond under " + to_string(sigma));
                    }
                }
            }
            LabeledPoint f = witness_point(o);
            LabeledPoint g;
            for (int a = 0; a < n; ++a) g.coords.push_back(f.coords[sigma(a)]);
            if (!u_contains(os, g)) fail(equi, "f sigma leaves U(o sigma) for " + to_string(o));
            LabeledPoint h = witness_point(os);
            LabeledPoint back;
            const Permutation inv = sigma.inverse();
            for (int a = 0; a < n; ++a) back.coords.push_back(h.coords[inv(a)]);
            if (!u_contains(o, back)) fail(equi, "g sigma^-1 leaves U(o) for " + to_string(o));
        }
    }
    rep.checks.push_back(equi);

    // Antitone on constraints, and o -> U(o) injective via separating witnesses.
    CoverCheck mono;
    mono.name = "antitone-and-injective";
    for (const auto& o1 : family) {
        for (const auto& o2 : family) {
            ++mono.checked;
            if (poset_leq(o1, o2, OrderVariant::Inclusion) && !u_contains(o1, witness_point(o2))) {
                fail(mono, "U(o2) not inside U(o1): " + to_string(o1) + " / " + to_string(o2));
            }
            if (o1 == o2) continue;
            auto s12 = separating_witness(o1, o2);
            auto s21 = separating_witness(o2, o1);
            if (!s12 && !s21) fail(mono, "no separating witness: " + to_string(o1) + " / " + to_string(o2));
        }
    }
    rep.checks.push_back(mono);

    // Random configurations lie in U of their own regular order.
    CoverCheck cover;
    cover.name = "covering";
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        ++cover.checked;
        LabeledPoint f = random_configuration(n, rng);
        try {
            DoubleOrder o = point_to_order(f);
            if (!members.contains(o) || !u_contains(o, f)) fail(cover, "uncovered configuration " + point_text(f));
        } catch (const Error& e) {
            fail(cover, std::string(e.what()) + " at " + point_text(f));
        }
    }
    rep.checks.push_back(cover);
    return rep;
}

} // namespace dicube
