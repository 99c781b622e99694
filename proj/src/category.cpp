#include "dicube/category.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dicube/errors.hpp"

namespace dicube {

ObjId FiniteCategory::add_object(std::string name) {
    const ObjId c = objects_.size();
    objects_.push_back(std::move(name));
    outgoing_.emplace_back();
    identities_.push_back(morphisms_.size());
    morphisms_.push_back({c, c, "id"});
    outgoing_[c].push_back(identities_.back());
    hom_[{c, c}].push_back(identities_.back());
    return c;
}

MorId FiniteCategory::add_morphism(ObjId source, ObjId target, std::string label) {
    if (source >= objects_.size() || target >= objects_.size()) throw ArgumentError("morphism endpoint out of range");
    const MorId f = morphisms_.size();
    morphisms_.push_back({source, target, std::move(label)});
    outgoing_[source].push_back(f);
    hom_[{source, target}].push_back(f);
    return f;
}

bool FiniteCategory::is_identity(MorId f) const { return identities_.at(morphisms_.at(f).source) == f; }

void FiniteCategory::set_composite(MorId g, MorId f, MorId gf) {
    const auto& mf = morphisms_.at(f);
    const auto& mg = morphisms_.at(g);
    const auto& mgf = morphisms_.at(gf);
    if (mf.target != mg.source) throw ArgumentError("set_composite: morphisms are not composable");
    if (mgf.source != mf.source || mgf.target != mg.target) throw ArgumentError("set_composite: wrong endpoints");
    composite_[key(g, f)] = gf;
}

MorId FiniteCategory::try_compose(MorId g, MorId f) const {
    const auto& mf = morphisms_.at(f);
    const auto& mg = morphisms_.at(g);
    if (mf.target != mg.source) return kNoMorphism;
    if (is_identity(g)) return f;
    if (is_identity(f)) return g;
    auto it = composite_.find(key(g, f));
    return it == composite_.end() ? kNoMorphism : it->second;
}

MorId FiniteCategory::compose(MorId g, MorId f) const {
    if (morphisms_.at(f).target != morphisms_.at(g).source) throw ArgumentError("compose: not composable");
    MorId gf = try_compose(g, f);
    if (gf == kNoMorphism) throw StructuralError("composition table has no entry for a composable pair");
    return gf;
}

std::vector<MorId> FiniteCategory::hom(ObjId source, ObjId target) const {
    auto it = hom_.find({source, target});
    return it == hom_.end() ? std::vector<MorId>{} : it->second;
}

MorId FiniteCategory::poset_arrow(ObjId i, ObjId j) const {
    auto it = hom_.find({i, j});
    return it == hom_.end() || it->second.empty() ? kNoMorphism : it->second.front();
}

std::vector<std::string> FiniteCategory::law_violations() const {
    std::vector<std::string> out;
    for (MorId f = 0; f < morphisms_.size(); ++f) {
        for (MorId g : outgoing_[morphisms_[f].target]) {
            if (try_compose(g, f) == kNoMorphism) {
                out.push_back("missing composite of " + std::to_string(g) + " after " + std::to_string(f));
            }
        }
    }
    if (!out.empty()) return out;
    for (MorId f = 0; f < morphisms_.size(); ++f) {
        for (MorId g : outgoing_[morphisms_[f].target]) {
            const MorId gf = try_compose(g, f);
            for (MorId h : outgoing_[morphisms_[g].target]) {
                if (try_compose(h, gf) != try_compose(try_compose(h, g), f)) {
                    out.push_back("associativity fails for (" + std::to_string(h) + ", " + std::to_string(g) + ", " +
                                  std::to_string(f) + ")");
                }
            }
        }
    }
    return out;
}

bool FiniteCategory::is_loop_free() const {
    // A DFS over non-identity morphisms finds a cycle iff the category has a loop.
    const std::size_t n = objects_.size();
    std::vector<int> state(n, 0);
    std::function<bool(ObjId)> visit = [&](ObjId c) {
        state[c] = 1;
        for (MorId f : outgoing_[c]) {
            if (is_identity(f)) continue;
            ObjId t = morphisms_[f].target;
            if (state[t] == 1) return false;
            if (state[t] == 0 && !visit(t)) return false;
        }
        state[c] = 2;
        return true;
    };
    for (ObjId c = 0; c < n; ++c) {
        if (state[c] == 0 && !visit(c)) return false;
    }
    return true;
}

std::vector<std::string> poset_violations(std::size_t m, const std::vector<std::uint8_t>& leq) {
    std::vector<std::string> out;
    if (leq.size() != m * m) return {"order table has the wrong size"};
    for (std::size_t i = 0; i < m; ++i) {
        if (!leq[i * m + i]) out.push_back("not reflexive at " + std::to_string(i));
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && leq[i * m + j] && leq[j * m + i]) {
                out.push_back("not antisymmetric at " + std::to_string(i) + ", " + std::to_string(j));
            }
            if (!leq[i * m + j]) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (leq[j * m + k] && !leq[i * m + k]) {
                    out.push_back("not transitive at " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                  std::to_string(k));
                }
            }
        }
    }
    return out;
}

FiniteCategory FiniteCategory::from_poset(std::size_t m, const std::vector<std::uint8_t>& leq,
                                          const std::vector<std::string>& names) {
    auto bad = poset_violations(m, leq);
    if (!bad.empty()) throw ContractError("not a poset: " + bad.front());
    FiniteCategory c;
    for (std::size_t i = 0; i < m; ++i) c.add_object(i < names.size() ? names[i] : std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && leq[i * m + j]) c.add_morphism(i, j, "<=");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (MorId f : c.outgoing_[i]) {
            if (c.is_identity(f)) continue;
            const ObjId j = c.morphisms_[f].target;
            for (MorId g : c.outgoing_[j]) {
                if (c.is_identity(g)) continue;
                c.set_composite(g, f, c.poset_arrow(i, c.morphisms_[g].target));
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

Nerve build_nerve(const FiniteCategory& c, std::size_t cap) {
    if (!c.is_loop_free()) throw ContractError("nerve requested for a category that is not loop-free");
    Nerve nv;
    nv.objects = c.object_count();
    nv.simplices.emplace_back();
    nv.index.emplace_back();
    std::size_t total = nv.objects;
    std::vector<MorId> path;
    std::function<void(ObjId)> extend = [&](ObjId at) {
        for (MorId f : c.outgoing(at)) {
            if (c.is_identity(f)) continue;
            path.push_back(f);
            const std::size_t k = path.size();
            if (nv.simplices.size() <= k) {
                nv.simplices.resize(k + 1);
                nv.index.resize(k + 1);
            }
            if (++total > cap) throw ResourceError("nerve exceeds the simplex cap of " + std::to_string(cap));
            nv.simplices[k].push_back(path);
            extend(c.morphism(f).target);
            path.pop_back();
        }
    };
    for (ObjId o = 0; o < nv.objects; ++o) extend(o);
    for (std::size_t k = 1; k < nv.simplices.size(); ++k) {
        std::sort(nv.simplices[k].begin(), nv.simplices[k].end());
        for (std::size_t s = 0; s < nv.simplices[k].size(); ++s) nv.index[k].emplace(nv.simplices[k][s], s);
    }

    const std::size_t top = nv.simplices.size();
    auto& cc = nv.complex;
    cc.ranks.push_back(nv.objects);
    cc.boundaries.emplace_back(0, nv.objects);
    for (std::size_t k = 1; k < top; ++k) {
        cc.ranks.push_back(nv.simplices[k].size());
        SparseMatrix d(cc.ranks[k - 1], cc.ranks[k]);
        for (std::size_t s = 0; s < nv.simplices[k].size(); ++s) {
            const auto& x = nv.simplices[k][s];
            for (std::size_t i = 0; i <= k; ++i) {
                const Integer sign = i % 2 ? -1 : 1;
                if (k == 1) {
                    const auto& m = c.morphism(x[0]);
                    d.add(i == 0 ? m.target : m.source, s, sign);
                    continue;
                }
                std::vector<MorId> face;
                if (i == 0) {
                    face.assign(x.begin() + 1, x.end());
                } else if (i == k) {
                    face.assign(x.begin(), x.end() - 1);
                } else {
                    face.assign(x.begin(), x.begin() + (i - 1));
                    face.push_back(c.compose(x[i], x[i - 1]));
                    face.insert(face.end(), x.begin() + (i + 1), x.end());
                }
                d.add(nv.index[k - 1].at(face), s, sign);
            }
        }
        cc.boundaries.push_back(std::move(d));
    }
    return nv;
}

Subdivision barycentric_subdivision(const FiniteCategory& p) {
    const std::size_t m = p.object_count();
    auto less = [&](ObjId a, ObjId b) { return a != b && p.poset_arrow(a, b) != kNoMorphism; };
    Subdivision sd;
    std::vector<ObjId> chain;
    std::function<void()> grow = [&] {
        sd.chains.push_back(chain);
        for (ObjId b = 0; b < m; ++b) {
            if (less(chain.back(), b)) {
                chain.push_back(b);
                grow();
                chain.pop_back();
            }
        }
    };
    for (ObjId a = 0; a < m; ++a) {
        chain = {a};
        grow();
    }
    std::sort(sd.chains.begin(), sd.chains.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    const std::size_t q = sd.chains.size();
    std::vector<std::uint8_t> leq(q * q, 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < q; ++i) {
        std::string name = "{";
        for (std::size_t t = 0; t < sd.chains[i].size(); ++t) {
            name += (t ? "," : "") + p.object_name(sd.chains[i][t]);
        }
        names.push_back(name + "}");
        sd.max_map.push_back(sd.chains[i].back());
    }
    for (std::size_t i = 0; i < q; ++i) {
        std::set<ObjId> si(sd.chains[i].begin(), sd.chains[i].end());
        for (std::size_t j = 0; j < q; ++j) {
            std::set<ObjId> sj(sd.chains[j].begin(), sd.chains[j].end());
            leq[i * q + j] = std::includes(sj.begin(), sj.end(), si.begin(), si.end()) ? 1 : 0;
        }
    }
    sd.poset = FiniteCategory::from_poset(q, leq, names);
    return sd;
}

// ---------------------------------------------------------------------------

std::vector<std::string> action_violations(const FiniteCategory& c, const GroupAction& act) {
    std::vector<std::string> out;
    if (act.on_objects.size() != act.group.size() || act.on_morphisms.size() != act.group.size()) {
        return {"action tables do not match the group size"};
    }
    for (std::size_t g = 0; g < act.group.size(); ++g) {
        const auto& ob = act.on_objects[g];
        const auto& mo = act.on_morphisms[g];
        if (ob.size() != c.object_count() || mo.size() != c.morphism_count()) {
            out.push_back("action table " + std::to_string(g) + " has the wrong size");
            continue;
        }
        for (MorId f = 0; f < c.morphism_count(); ++f) {
            const auto& m = c.morphism(f);
            const auto& mg = c.morphism(mo[f]);
            if (mg.source != ob[m.source] || mg.target != ob[m.target]) {
                out.push_back("element " + std::to_string(g) + " breaks endpoints of morphism " + std::to_string(f));
            }
            if (c.is_identity(f) && !c.is_identity(mo[f])) {
                out.push_back("element " + std::to_string(g) + " moves an identity off identities");
            }
            for (MorId h : c.outgoing(m.target)) {
                if (mo[c.compose(h, f)] != c.try_compose(mo[h], mo[f])) {
                    out.push_back("element " + std::to_string(g) + " does not preserve composition");
                }
            }
        }
    }
    return out;
}

bool is_free(const FiniteCategory& c, const GroupAction& act) {
    for (std::size_t g = 0; g < act.group.size(); ++g) {
        if (act.group[g].is_identity()) continue;
        for (ObjId o = 0; o < c.object_count(); ++o) {
            if (act.on_objects[g][o] == o) return false;
        }
    }
    return true;
}

QuotientCategory quotient_category(const FiniteCategory& c, const GroupAction& act) {
    auto bad = action_violations(c, act);
    if (!bad.empty()) throw ContractError("not a functorial action: " + bad.front());
    if (!is_free(c, act)) throw ContractError("quotient category needs a free action on objects");
    QuotientCategory q;
    const std::size_t no = c.object_count();
    const std::size_t nm = c.morphism_count();
    q.object_class.assign(no, kNoMorphism);
    for (ObjId o = 0; o < no; ++o) {
        if (q.object_class[o] != kNoMorphism) continue;
        const ObjId cls = q.object_rep.size();
        q.object_rep.push_back(o);
        for (const auto& table : act.on_objects) q.object_class[table[o]] = cls;
    }
    for (ObjId cls = 0; cls < q.object_rep.size(); ++cls) q.category.add_object(c.object_name(q.object_rep[cls]));

    // Each morphism orbit meets the morphisms out of the object representative
    // exactly once, because the action on objects is free.
    q.morphism_class.assign(nm, kNoMorphism);
    for (ObjId cls = 0; cls < q.object_rep.size(); ++cls) {
        for (MorId f : c.outgoing(q.object_rep[cls])) {
            if (q.morphism_class[f] != kNoMorphism) {
                throw ConsistencyError("two morphisms out of a representative share an orbit");
            }
            const ObjId tcls = q.object_class[c.morphism(f).target];
            const MorId id = c.is_identity(f) ? q.category.identity(cls)
                                              : q.category.add_morphism(cls, tcls, c.morphism(f).label);
            if (q.morphism_rep.size() <= id) q.morphism_rep.resize(id + 1, kNoMorphism);
            q.morphism_rep[id] = f;
            for (const auto& table : act.on_morphisms) {
                const MorId g = table[f];
                if (q.morphism_class[g] != kNoMorphism && q.morphism_class[g] != id) {
                    throw ConsistencyError("morphism orbits overlap");
                }
                q.morphism_class[g] = id;
            }
        }
    }
    for (MorId f = 0; f < nm; ++f) {
        if (q.morphism_class[f] == kNoMorphism) throw ConsistencyError("morphism outside every orbit");
    }

    // Composition: move a representative of beta to start where alpha ends.
    std::map<std::pair<ObjId, MorId>, MorId> member_from; // (source object, class) -> member
    for (MorId f = 0; f < nm; ++f) member_from[{c.morphism(f).source, q.morphism_class[f]}] = f;
    const std::size_t nq = q.category.morphism_count();
    for (MorId a = 0; a < nq; ++a) {
        if (q.category.is_identity(a)) continue;
        const MorId rep_a = q.morphism_rep[a];
        for (MorId b : q.category.outgoing(q.category.morphism(a).target)) {
            if (q.category.is_identity(b)) continue;
            auto it = member_from.find({c.morphism(rep_a).target, b});
            if (it == member_from.end()) throw ConsistencyError("no member of an orbit starts at a given object");
            q.category.set_composite(b, a, q.morphism_class[c.compose(it->second, rep_a)]);
        }
    }
    auto laws = q.category.law_violations();
    if (!laws.empty()) throw ConsistencyError("quotient category breaks a law: " + laws.front());

    // |C/G(cG, c'G)| = sum over g of |C(c, c'g)|.
    for (ObjId s = 0; s < q.object_rep.size(); ++s) {
        for (ObjId t = 0; t < q.object_rep.size(); ++t) {
            std::size_t expected = 0;
            for (const auto& table : act.on_objects) expected += c.hom(q.object_rep[s], table[q.object_rep[t]]).size();
            if (q.category.hom(s, t).size() != expected) throw ConsistencyError("hom-count identity fails");
        }
    }
    return q;
}

NerveQuotientCheck compare_nerve_quotient(const FiniteCategory& c, const GroupAction& act, const QuotientCategory& q) {
    NerveQuotientCheck out;
    Nerve big = build_nerve(c);
    Nerve small = build_nerve(q.category);
    const std::size_t top = std::max(big.simplices.size(), small.simplices.size());
    auto simplex_of = [&](std::size_t k, std::size_t s) -> std::vector<MorId> {
        if (k == 0) return {s};
        return big.simplices[k][s];
    };
    for (std::size_t k = 0; k < top; ++k) {
        const std::size_t nbig = k < big.complex.ranks.size() ? big.complex.ranks[k] : 0;
        const std::size_t nsmall = k < small.complex.ranks.size() ? small.complex.ranks[k] : 0;
        // Orbits of k-simplices, represented by their least member.
        std::vector<std::size_t> orbit(nbig, kNoMorphism);
        std::vector<std::size_t> reps;
        for (std::size_t s = 0; s < nbig; ++s) {
            if (orbit[s] != kNoMorphism) continue;
            const std::size_t id = reps.size();
            reps.push_back(s);
            for (std::size_t g = 0; g < act.group.size(); ++g) {
                auto x = simplex_of(k, s);
                std::size_t t;
                if (k == 0) {
                    t = act.on_objects[g][s];
                } else {
                    for (auto& f : x) f = act.on_morphisms[g][f];
                    t = big.index[k].at(x);
                }
                orbit[t] = id;
            }
        }
        out.orbit_ranks.push_back(reps.size());
        out.quotient_ranks.push_back(nsmall);
        if (reps.size() != nsmall) {
            out.detail = "degree " + std::to_string(k) + ": " + std::to_string(reps.size()) + " orbits vs " +
                         std::to_string(nsmall) + " quotient simplices";
            return out;
        }
        // phi: orbit -> quotient simplex, checked bijective.
        std::vector<std::size_t> phi(reps.size());
        std::vector<bool> hit(nsmall, false);
        for (std::size_t o = 0; o < reps.size(); ++o) {
            auto x = simplex_of(k, reps[o]);
            std::size_t image;
            if (k == 0) {
                image = q.object_class[x[0]];
            } else {
                for (auto& f : x) f = q.morphism_class[f];
                auto it = small.index[k].find(x);
                if (it == small.index[k].end()) {
                    out.detail = "degree " + std::to_string(k) + ": image of an orbit is not a quotient simplex";
                    return out;
                }
                image = it->second;
            }
            if (hit[image]) {
                out.detail = "degree " + std::to_string(k) + ": two orbits share an image";
                return out;
            }
            hit[image] = true;
            phi[o] = image;
        }
        // Boundaries: phi(d[x]) = d(phi[x]) for each orbit representative.
        if (k >= 1) {
            std::vector<std::size_t> lower_orbit;
            std::vector<std::size_t> lower_phi;
            // Recompute orbit data of degree k-1 (cheap at these sizes).
            {
                const std::size_t nl = big.complex.ranks[k - 1];
                lower_orbit.assign(nl, kNoMorphism);
                std::vector<std::size_t> lreps;
                for (std::size_t s = 0; s < nl; ++s) {
                    if (lower_orbit[s] != kNoMorphism) continue;
                    const std::size_t id = lreps.size();
                    lreps.push_back(s);
                    for (std::size_t g = 0; g < act.group.size(); ++g) {
                        auto x = simplex_of(k - 1, s);
                        std::size_t t;
                        if (k - 1 == 0) {
                            t = act.on_objects[g][s];
                        } else {
                            for (auto& f : x) f = act.on_morphisms[g][f];
                            t = big.index[k - 1].at(x);
                        }
                        lower_orbit[t] = id;
                    }
                }
                for (std::size_t s : lreps) {
                    auto x = simplex_of(k - 1, s);
                    if (k - 1 == 0) {
                        lower_phi.push_back(q.object_class[x[0]]);
                    } else {
                        for (auto& f : x) f = q.morphism_class[f];
                        lower_phi.push_back(small.index[k - 1].at(x));
                    }
                }
            }
            for (std::size_t o = 0; o < reps.size(); ++o) {
                std::map<std::size_t, Integer> lhs, rhs;
                for (const auto& [r, v] : big.complex.boundaries[k].columns[reps[o]]) {
                    lhs[lower_phi[lower_orbit[r]]] += v;
                }
                for (const auto& [r, v] : small.complex.boundaries[k].columns[phi[o]]) rhs[r] += v;
                std::erase_if(lhs, [](const auto& e) { return sgn(e.second) == 0; });
                if (lhs != rhs) {
                    out.detail = "degree " + std::to_string(k) + ": boundaries disagree on orbit " + std::to_string(o);
                    return out;
                }
            }
        }
    }
    out.isomorphic = true;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

} // namespace

std::string to_dot(const FiniteCategory& c, bool hasse_only, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    for (ObjId o = 0; o < c.object_count(); ++o) os << "  n" << o << " [label=\"" << dot_escape(c.object_name(o)) << "\"];\n";
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        if (c.is_identity(f)) continue;
        const auto& m = c.morphism(f);
        if (hasse_only) {
            // Keep only covering relations: no z with source < z < target.
            bool covered = true;
            for (MorId g : c.outgoing(m.source)) {
                if (c.is_identity(g) || g == f) continue;
                const ObjId z = c.morphism(g).target;
                if (z != m.target && c.poset_arrow(z, m.target) != kNoMorphism) {
                    covered = false;
                    break;
                }
            }
            if (!covered) continue;
            os << "  n" << m.source << " -> n" << m.target << ";\n";
        } else {
            os << "  n" << m.source << " -> n" << m.target << " [label=\"" << dot_escape(m.label) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string to_json(const FiniteCategory& c) {
    nlohmann::ordered_json j;
    j["objects"] = nlohmann::json::array();
    for (ObjId o = 0; o < c.object_count(); ++o) j["objects"].push_back(c.object_name(o));
    j["morphisms"] = nlohmann::json::array();
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        const auto& m = c.morphism(f);
        j["morphisms"].push_back(
            {{"id", f}, {"source", m.source}, {"target", m.target}, {"label", m.label}, {"identity", c.is_identity(f)}});
    }
    j["compose"] = nlohmann::json::array();
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        if (c.is_identity(f)) continue;
        for (MorId g : c.outgoing(c.morphism(f).target)) {
            if (c.is_identity(g)) continue;
            j["compose"].push_back({{"g", g}, {"f", f}, {"gf", c.compose(g, f)}});
        }
    }
    return j.dump();
}

} // namespace dicube
