#include "dicube/precubical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "dicube/errors.hpp"
#include "dicube/kernels.hpp"

namespace dicube {

namespace {

std::string cell_text(const PrecubicalComplex& k, int dim, std::size_t cell) {
    std::ostringstream os;
    os << "cell " << k.name(dim, cell) << " (dim " << dim << ", index " << cell << ")";
    return os.str();
}

// Flat numbering of all cells, dimension-major.
struct FlatIndex {
    std::vector<std::size_t> offset;

    explicit FlatIndex(const PrecubicalComplex& k) {
        offset.resize(k.counts().size() + 1, 0);
        for (std::size_t d = 0; d < k.counts().size(); ++d) {
            offset[d + 1] = offset[d] + k.counts()[d];
        }
    }
    std::size_t total() const { return offset.back(); }
    std::size_t id(int dim, std::size_t cell) const { return offset[dim] + cell; }
    CellRef ref(std::size_t id) const {
        auto it = std::upper_bound(offset.begin(), offset.end(), id);
        int dim = static_cast<int>(it - offset.begin()) - 1;
        return {dim, id - offset[dim]};
    }
};

} // namespace

// ---------------------------------------------------------------------------

PrecubicalComplex::PrecubicalComplex(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    faces_.resize(counts_.size());
    for (std::size_t d = 1; d < counts_.size(); ++d) {
        faces_[d].assign(counts_[d] * d * 2, kNoCell);
    }
}

int PrecubicalComplex::max_dim() const { return static_cast<int>(counts_.size()) - 1; }

std::size_t PrecubicalComplex::count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(counts_.size())) return 0;
    return counts_[dim];
}

std::size_t PrecubicalComplex::total_cells() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t PrecubicalComplex::slot(int dim, std::size_t cell, int i, int eps) const {
    if (dim < 1 || dim > max_dim() || cell >= counts_[dim] || i < 1 || i > dim || (eps != 0 && eps != 1)) {
        std::ostringstream os;
        os << "face index out of range: dim " << dim << ", cell " << cell << ", i " << i << ", eps " << eps;
        throw ArgumentError(os.str());
    }
    return (cell * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i - 1)) * 2 + static_cast<std::size_t>(eps);
}

std::size_t PrecubicalComplex::raw_face(int dim, std::size_t cell, int i, int eps) const {
    return faces_[dim][slot(dim, cell, i, eps)];
}

std::size_t PrecubicalComplex::face(int dim, std::size_t cell, int i, int eps) const {
    std::size_t f = raw_face(dim, cell, i, eps);
    if (f == kNoCell) {
        std::ostringstream os;
        os << "missing face d^" << eps << "_" << i << " of " << cell_text(*this, dim, cell);
        throw StructuralError(os.str());
    }
    return f;
}

void PrecubicalComplex::set_face(int dim, std::size_t cell, int i, int eps, std::size_t to) {
    faces_[dim][slot(dim, cell, i, eps)] = to;
}

void PrecubicalComplex::set_names(std::vector<std::vector<std::string>> names) { names_ = std::move(names); }

std::string PrecubicalComplex::name(int dim, std::size_t cell) const {
    if (dim >= 0 && static_cast<std::size_t>(dim) < names_.size() && cell < names_[dim].size()) {
        return names_[dim][cell];
    }
    return std::to_string(dim) + ":" + std::to_string(cell);
}

std::size_t PrecubicalComplex::corner(int dim, std::size_t cell, int eps) const {
    std::size_t c = cell;
    for (int d = dim; d > 0; --d) c = face(d, c, d, eps);
    return c;
}

bool PrecubicalComplex::same_structure(const PrecubicalComplex& other) const {
    return counts_ == other.counts_ && faces_ == other.faces_ && base_ == other.base_;
}

// ---------------------------------------------------------------------------

ValidationReport validate_complex(const PrecubicalComplex& k) {
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    std::size_t f = k.face(d, c, i, e);
                    if (f >= k.count(d - 1)) {
                        throw StructuralError("face d^" + std::to_string(e) + "_" + std::to_string(i) + " of " +
                                              cell_text(k, d, c) + " points outside dimension " +
                                              std::to_string(d - 1));
                    }
                }
            }
        }
    }
    if (k.base()) {
        if (k.base()->initial >= k.count(0) || k.base()->final >= k.count(0)) {
            throw StructuralError("base point is not a vertex of the complex");
        }
    }
    ValidationReport report;
    for (int d = 2; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int j = i + 1; j <= d; ++j) {
                    for (int e = 0; e < 2; ++e) {
                        for (int h = 0; h < 2; ++h) {
                            std::size_t lhs = k.face(d - 1, k.face(d, c, j, h), i, e);
                            std::size_t rhs = k.face(d - 1, k.face(d, c, i, e), j - 1, h);
                            if (lhs != rhs) report.violations.push_back({d, c, i, j, e, h});
                        }
                    }
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

std::vector<std::string> map_violations(const PrecubicalMap& f) {
    std::vector<std::string> out;
    if (!f.source || !f.target) {
        out.emplace_back("map without source or target");
        return out;
    }
    const auto& k = *f.source;
    const auto& l = *f.target;
    if (f.assignment.size() < k.counts().size()) {
        out.emplace_back("assignment misses dimensions of the source");
        return out;
    }
    for (int d = 0; d <= k.max_dim(); ++d) {
        if (f.assignment[d].size() != k.count(d)) {
            out.push_back("assignment size mismatch in dimension " + std::to_string(d));
            return out;
        }
        for (std::size_t c = 0; c < k.count(d); ++c) {
            if (f.assignment[d][c] >= l.count(d)) {
                out.push_back(cell_text(k, d, c) + " mapped outside the target");
                return out;
            }
        }
    }
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            std::size_t fc = f.assignment[d][c];
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    if (f.assignment[d - 1][k.face(d, c, i, e)] != l.face(d, fc, i, e)) {
                        out.push_back("map does not commute with d^" + std::to_string(e) + "_" + std::to_string(i) +
                                      " at " + cell_text(k, d, c));
                    }
                }
            }
        }
    }
    if (f.bipointed) {
        if (!k.base() || !l.base()) {
            out.emplace_back("bipointed map between complexes without base points");
        } else {
            if (f.assignment[0][k.base()->initial] != l.base()->initial) out.emplace_back("initial vertex not preserved");
            if (f.assignment[0][k.base()->final] != l.base()->final) out.emplace_back("final vertex not preserved");
        }
    }
    return out;
}

bool is_bijective(const PrecubicalMap& f) {
    const auto& k = *f.source;
    const auto& l = *f.target;
    if (k.counts() != l.counts()) return false;
    for (int d = 0; d <= k.max_dim(); ++d) {
        std::vector<bool> hit(l.count(d), false);
        for (std::size_t c = 0; c < k.count(d); ++c) {
            std::size_t t = f.assignment[d][c];
            if (t >= hit.size() || hit[t]) return false;
            hit[t] = true;
        }
    }
    return true;
}

PrecubicalMap identity_map(const ComplexPtr& k) {
    PrecubicalMap f{k, k, {}, k->bipointed()};
    f.assignment.resize(k->counts().size());
    for (int d = 0; d <= k->max_dim(); ++d) {
        f.assignment[d].resize(k->count(d));
        std::iota(f.assignment[d].begin(), f.assignment[d].end(), std::size_t{0});
    }
    return f;
}

PrecubicalMap compose(const PrecubicalMap& g, const PrecubicalMap& f) {
    PrecubicalMap h{f.source, g.target, {}, f.bipointed && g.bipointed};
    h.assignment.resize(f.assignment.size());
    for (std::size_t d = 0; d < f.assignment.size(); ++d) {
        h.assignment[d].reserve(f.assignment[d].size());
        for (std::size_t c : f.assignment[d]) h.assignment[d].push_back(g.assignment.at(d).at(c));
    }
    return h;
}

// ---------------------------------------------------------------------------

bool is_altitude(const PrecubicalComplex& k, const AltitudeLabeling& alt) {
    if (alt.value.size() < k.counts().size()) return false;
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    if (alt(d - 1, k.face(d, c, i, e)) != alt(d, c) + e) return false;
                }
            }
        }
    }
    if (k.base() && alt(0, k.base()->initial) != 0) return false;
    return true;
}

std::optional<AltitudeLabeling> compute_altitude(const PrecubicalComplex& k) {
    FlatIndex flat(k);
    // Undirected incidence with signed offsets: value(to) = value(from) + delta.
    std::vector<std::vector<std::pair<std::size_t, long long>>> adj(flat.total());
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            std::size_t cid = flat.id(d, c);
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    std::size_t fid = flat.id(d - 1, k.face(d, c, i, e));
                    adj[cid].emplace_back(fid, e);
                    adj[fid].emplace_back(cid, -e);
                }
            }
        }
    }
    std::vector<std::optional<long long>> value(flat.total());
    auto flood = [&](std::size_t start, std::vector<std::size_t>& members) {
        std::deque<std::size_t> queue{start};
        value[start] = 0;
        members.push_back(start);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (auto [v, delta] : adj[u]) {
                long long want = *value[u] + delta;
                if (!value[v]) {
                    value[v] = want;
                    members.push_back(v);
                    queue.push_back(v);
                } else if (*value[v] != want) {
                    return false;
                }
            }
        }
        return true;
    };

    if (k.base()) {
        std::vector<std::size_t> members;
        if (!flood(flat.id(0, k.base()->initial), members)) return std::nullopt;
    }
    for (std::size_t id = 0; id < flat.total(); ++id) {
        if (value[id]) continue;
        std::vector<std::size_t> members;
        if (!flood(id, members)) return std::nullopt;
        long long low = 0;
        for (std::size_t m : members) low = std::min(low, *value[m]);
        for (std::size_t m : members) *value[m] -= low;
    }

    AltitudeLabeling alt;
    alt.value.resize(k.counts().size());
    for (int d = 0; d <= k.max_dim(); ++d) {
        alt.value[d].resize(k.count(d));
        for (std::size_t c = 0; c < k.count(d); ++c) alt.value[d][c] = *value[flat.id(d, c)];
    }
    return alt;
}

// ---------------------------------------------------------------------------

SubComplex induced_subcomplex(const PrecubicalComplex& k, const std::vector<std::vector<bool>>& keep) {
    std::vector<std::vector<std::size_t>> to_parent(k.counts().size());
    std::vector<std::vector<std::size_t>> to_child(k.counts().size());
    std::vector<std::size_t> counts(k.counts().size(), 0);
    for (int d = 0; d <= k.max_dim(); ++d) {
        to_child[d].assign(k.count(d), kNoCell);
        for (std::size_t c = 0; c < k.count(d); ++c) {
            if (d < static_cast<int>(keep.size()) && c < keep[d].size() && keep[d][c]) {
                to_child[d][c] = to_parent[d].size();
                to_parent[d].push_back(c);
            }
        }
        counts[d] = to_parent[d].size();
    }
    PrecubicalComplex sub(counts);
    for (int d = 1; d <= sub.max_dim(); ++d) {
        for (std::size_t c = 0; c < sub.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    std::size_t f = to_child[d - 1][k.face(d, to_parent[d][c], i, e)];
                    if (f == kNoCell) throw ContractError("cell set is not closed under faces");
                    sub.set_face(d, c, i, e, f);
                }
            }
        }
    }
    if (k.base() && sub.count(0) > 0) {
        std::size_t a = to_child[0][k.base()->initial];
        std::size_t b = to_child[0][k.base()->final];
        if (a != kNoCell && b != kNoCell) sub.set_base(BasePoints{a, b});
    }
    if (k.has_names()) {
        std::vector<std::vector<std::string>> names(counts.size());
        for (std::size_t d = 0; d < counts.size(); ++d) {
            for (std::size_t c : to_parent[d]) names[d].push_back(k.name(static_cast<int>(d), c));
        }
        sub.set_names(std::move(names));
    }
    to_parent.resize(sub.counts().size());
    return {share(std::move(sub)), std::move(to_parent)};
}

SubComplex accessible_part(const PrecubicalComplex& k) {
    if (!k.base()) throw ContractError("accessible_part requires a bipointed complex");
    FlatIndex flat(k);
    std::vector<std::vector<std::size_t>> succ(flat.total()), pred(flat.total());
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            std::size_t cid = flat.id(d, c);
            for (int i = 1; i <= d; ++i) {
                std::size_t lo = flat.id(d - 1, k.face(d, c, i, 0));
                std::size_t hi = flat.id(d - 1, k.face(d, c, i, 1));
                succ[lo].push_back(cid);
                pred[cid].push_back(lo);
                succ[cid].push_back(hi);
                pred[hi].push_back(cid);
            }
        }
    }
    auto reach = [&](std::size_t start, const std::vector<std::vector<std::size_t>>& edges) {
        std::vector<bool> seen(flat.total(), false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : edges[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    };
    auto from_initial = reach(flat.id(0, k.base()->initial), succ);
    auto to_final = reach(flat.id(0, k.base()->final), pred);

    std::vector<std::vector<bool>> keep(k.counts().size());
    for (int d = 0; d <= k.max_dim(); ++d) {
        keep[d].resize(k.count(d));
        for (std::size_t c = 0; c < k.count(d); ++c) {
            std::size_t id = flat.id(d, c);
            keep[d][c] = from_initial[id] && to_final[id];
        }
    }
    return induced_subcomplex(k, keep);
}

std::size_t iterated_face(const PrecubicalComplex& k, CellRef c, std::span<const int> indices, int eps) {
    std::vector<int> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ArgumentError("iterated_face: repeated index");
    }
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > c.dim)) {
        throw ArgumentError("iterated_face: index outside 1.." + std::to_string(c.dim));
    }
    if (c.dim < 0 || c.index >= k.count(c.dim)) throw ArgumentError("iterated_face: no such cell");
    // The rightmost operator acts first; applying in decreasing index order
    // leaves the smaller indices unshifted.
    std::size_t cell = c.index;
    int dim = c.dim;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        cell = k.face(dim, cell, *it, eps);
        --dim;
    }
    return cell;
}

std::vector<std::size_t> canonical_map_images(const PrecubicalComplex& k, CellRef c) {
    const int n = c.dim;
    std::size_t total = 1;
    for (int p = 0; p < n; ++p) total *= 3;
    std::vector<std::size_t> image(total, kNoCell);
    std::vector<int> digits(n);
    image[total - 1] = c.index;
    // Setting the first non-star position back to '*' strictly increases the
    // code, so a descending sweep sees every parent before its faces.
    for (std::size_t code = total - 1; code-- > 0;) {
        std::size_t rest = code;
        int stars = 0;
        for (int p = 0; p < n; ++p) {
            digits[p] = static_cast<int>(rest % 3);
            rest /= 3;
            if (digits[p] == 2) ++stars;
        }
        int j = 0;
        while (digits[j] == 2) ++j;
        std::size_t pow = 1;
        for (int p = 0; p < j; ++p) pow *= 3;
        std::size_t parent = code + static_cast<std::size_t>(2 - digits[j]) * pow;
        // In the parent, positions 0..j are stars, so j is the (j+1)-th star.
        image[code] = k.face(stars + 1, image[parent], j + 1, digits[j]);
    }
    return image;
}

SelfLinkResult is_non_self_linked(const PrecubicalComplex& k, int dim_cap) {
    if (k.max_dim() > dim_cap) {
        throw ResourceError("non-self-linkedness check: dimension " + std::to_string(k.max_dim()) +
                            " exceeds cap " + std::to_string(dim_cap));
    }
    auto bad = kernels::parallel::first_self_linked_cell(k);
    if (!bad) return {true, std::nullopt};
    return {false, bad};
}

// ---------------------------------------------------------------------------

PullbackResult pullback(const PrecubicalMap& p, const PrecubicalMap& q) {
    if (!p.target || !q.target || !(p.target == q.target || p.target->same_structure(*q.target))) {
        throw ContractError("pullback: maps do not share a target");
    }
    const auto& k = *p.source;
    const auto& l = *q.source;
    int top = std::min(k.max_dim(), l.max_dim());
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(top + 1);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        std::map<std::size_t, std::vector<std::size_t>> bucket;
        for (std::size_t c = 0; c < l.count(d); ++c) bucket[q(d, c)].push_back(c);
        for (std::size_t c = 0; c < k.count(d); ++c) {
            auto it = bucket.find(p(d, c));
            if (it == bucket.end()) continue;
            for (std::size_t c2 : it->second) {
                index[d][{c, c2}] = pairs[d].size();
                pairs[d].emplace_back(c, c2);
            }
        }
    }
    std::vector<std::size_t> counts;
    for (auto& v : pairs) counts.push_back(v.size());
    PrecubicalComplex pb(counts);
    for (int d = 1; d <= pb.max_dim(); ++d) {
        for (std::size_t c = 0; c < pb.count(d); ++c) {
            auto [a, b] = pairs[d][c];
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    pb.set_face(d, c, i, e, index[d - 1].at({k.face(d, a, i, e), l.face(d, b, i, e)}));
                }
            }
        }
    }
    bool bipointed = p.bipointed && q.bipointed && k.base() && l.base();
    if (bipointed) {
        pb.set_base(BasePoints{index[0].at({k.base()->initial, l.base()->initial}),
                               index[0].at({k.base()->final, l.base()->final})});
    }
    std::vector<std::vector<std::string>> names(pb.counts().size());
    for (std::size_t d = 0; d < names.size(); ++d) {
        for (auto [a, b] : pairs[d]) {
            names[d].push_back("(" + k.name(static_cast<int>(d), a) + "," + l.name(static_cast<int>(d), b) + ")");
        }
    }
    pb.set_names(std::move(names));
    pairs.resize(pb.counts().size());

    PullbackResult out;
    out.complex = share(std::move(pb));
    out.left = {out.complex, p.source, {}, bipointed};
    out.right = {out.complex, q.source, {}, bipointed};
    for (auto& level : pairs) {
        out.left.assignment.emplace_back();
        out.right.assignment.emplace_back();
        for (auto [a, b] : level) {
            out.left.assignment.back().push_back(a);
            out.right.assignment.back().push_back(b);
        }
    }
    out.pairs = std::move(pairs);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

QuotientResult quotient_by_automorphisms(const ComplexPtr& k, std::span<const PrecubicalMap> group) {
    for (const auto& g : group) {
        bool same = g.source && g.target && (g.source == k || g.source->same_structure(*k)) &&
                    (g.target == k || g.target->same_structure(*k));
        if (!same || !is_isomorphism(g)) throw ContractError("quotient: group element is not an automorphism");
    }
    QuotientResult out;
    std::vector<std::vector<std::size_t>> orbit(k->counts().size());
    std::vector<std::size_t> counts(k->counts().size());
    std::vector<std::vector<std::size_t>> rep(k->counts().size());
    for (int d = 0; d <= k->max_dim(); ++d) {
        DisjointSets sets(k->count(d));
        for (const auto& g : group) {
            for (std::size_t c = 0; c < k->count(d); ++c) sets.unite(c, g(d, c));
        }
        orbit[d].assign(k->count(d), kNoCell);
        for (std::size_t c = 0; c < k->count(d); ++c) {
            std::size_t root = sets.find(c);
            if (orbit[d][root] == kNoCell) {
                orbit[d][root] = rep[d].size();
                rep[d].push_back(root);
            }
            orbit[d][c] = orbit[d][root];
        }
        counts[d] = rep[d].size();
    }
    PrecubicalComplex q(counts);
    for (int d = 1; d <= q.max_dim(); ++d) {
        for (std::size_t c = 0; c < k->count(d); ++c) {
            std::size_t o = orbit[d][c];
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) {
                    std::size_t fo = orbit[d - 1][k->face(d, c, i, e)];
                    std::size_t prev = q.raw_face(d, o, i, e);
                    if (prev == kNoCell) {
                        q.set_face(d, o, i, e, fo);
                    } else if (prev != fo) {
                        throw ConsistencyError("quotient: face d^" + std::to_string(e) + "_" + std::to_string(i) +
                                               " of the orbit of " + k->name(d, c) + " is ill-defined");
                    }
                }
            }
        }
    }
    if (k->base()) q.set_base(BasePoints{orbit[0][k->base()->initial], orbit[0][k->base()->final]});
    std::vector<std::vector<std::string>> names(counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d) {
        for (std::size_t r : rep[d]) names[d].push_back("[" + k->name(static_cast<int>(d), r) + "]");
    }
    q.set_names(std::move(names));
    out.complex = share(std::move(q));
    out.projection = {k, out.complex, std::move(orbit), k->bipointed()};
    return out;
}

// ---------------------------------------------------------------------------

LengthCovering length_covering(const ComplexPtr& kp, int n) {
    const auto& k = *kp;
    if (!k.base()) throw ContractError("length_covering requires a bipointed complex");
    if (n < 0) throw ArgumentError("length_covering: negative length");
    // Only heights h with 0 <= h and h + dim <= n can be accessible; that
    // range is closed under faces.
    int top = std::min(k.max_dim(), n);
    std::vector<std::vector<std::pair<std::size_t, int>>> cells(top + 1);
    std::vector<std::map<std::pair<std::size_t, int>, std::size_t>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int h = 0; h + d <= n; ++h) {
                index[d][{c, h}] = cells[d].size();
                cells[d].emplace_back(c, h);
            }
        }
    }
    std::vector<std::size_t> counts;
    for (auto& v : cells) counts.push_back(v.size());
    PrecubicalComplex cover(counts);
    for (int d = 1; d <= cover.max_dim(); ++d) {
        for (std::size_t x = 0; x < cover.count(d); ++x) {
            auto [c, h] = cells[d][x];
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) cover.set_face(d, x, i, e, index[d - 1].at({k.face(d, c, i, e), h + e}));
            }
        }
    }
    cover.set_base(BasePoints{index[0].at({k.base()->initial, 0}), index[0].at({k.base()->final, n})});
    std::vector<std::vector<std::string>> names(cells.size());
    for (std::size_t d = 0; d < cells.size(); ++d) {
        for (auto [c, h] : cells[d]) names[d].push_back(k.name(static_cast<int>(d), c) + "@" + std::to_string(h));
    }
    cover.set_names(std::move(names));

    SubComplex acc = accessible_part(cover);
    LengthCovering out;
    out.complex = acc.complex;
    out.projection = {acc.complex, kp, {}, true};
    out.altitude.value.resize(acc.to_parent.size());
    out.projection.assignment.resize(acc.to_parent.size());
    for (std::size_t d = 0; d < acc.to_parent.size(); ++d) {
        for (std::size_t x : acc.to_parent[d]) {
            out.projection.assignment[d].push_back(cells[d][x].first);
            out.altitude.value[d].push_back(cells[d][x].second);
        }
    }
    if (!out.complex->base()) out.projection.bipointed = false;
    return out;
}

// ---------------------------------------------------------------------------

PrecubicalComplex serial_wedge(const PrecubicalComplex& k, const PrecubicalComplex& l) {
    if (!k.base() || !l.base()) throw ContractError("serial_wedge requires bipointed complexes");
    std::size_t top = std::max(k.counts().size(), l.counts().size());
    std::vector<std::size_t> counts(top, 0);
    for (std::size_t d = 0; d < top; ++d) counts[d] = k.count(static_cast<int>(d)) + l.count(static_cast<int>(d));
    counts[0] -= 1;
    const std::size_t glued = l.base()->initial;
    auto lvertex = [&](std::size_t v) {
        if (v == glued) return k.base()->final;
        return k.count(0) + v - (v > glued ? 1 : 0);
    };
    auto lcell = [&](int d, std::size_t c) { return d == 0 ? lvertex(c) : k.count(d) + c; };
    PrecubicalComplex w(counts);
    for (int d = 1; d <= w.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) w.set_face(d, c, i, e, k.face(d, c, i, e));
            }
        }
        for (std::size_t c = 0; c < l.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) w.set_face(d, k.count(d) + c, i, e, lcell(d - 1, l.face(d, c, i, e)));
            }
        }
    }
    w.set_base(BasePoints{k.base()->initial, lvertex(l.base()->final)});
    return w;
}

PrecubicalComplex disjoint_union(const PrecubicalComplex& k, const PrecubicalComplex& l) {
    std::size_t top = std::max(k.counts().size(), l.counts().size());
    std::vector<std::size_t> counts(top, 0);
    for (std::size_t d = 0; d < top; ++d) counts[d] = k.count(static_cast<int>(d)) + l.count(static_cast<int>(d));
    PrecubicalComplex u(counts);
    for (int d = 1; d <= u.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) u.set_face(d, c, i, e, k.face(d, c, i, e));
            }
        }
        for (std::size_t c = 0; c < l.count(d); ++c) {
            for (int i = 1; i <= d; ++i) {
                for (int e = 0; e < 2; ++e) u.set_face(d, k.count(d) + c, i, e, k.count(d - 1) + l.face(d, c, i, e));
            }
        }
    }
    return u;
}

} // namespace dicube
