#include "dicube/cube_chains.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "dicube/errors.hpp"
#include "dicube/kernels.hpp"

namespace dicube {

int CubeChain::length() const {
    int n = 0;
    for (const auto& c : cells) n += c.dim;
    return n;
}

std::vector<int> CubeChain::dims() const {
    std::vector<int> d;
    for (const auto& c : cells) d.push_back(c.dim);
    return d;
}

std::vector<CubeChain> enumerate_chains(const PrecubicalComplex& k, std::size_t node_cap) {
    if (!k.bipointed()) throw ContractError("cube chains need a bipointed complex");
    const auto base = *k.base();
    std::vector<std::vector<CellRef>> starting_at(k.count(0));
    for (int d = 1; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) starting_at[k.corner(d, c, 0)].push_back({d, c});
    }
    std::vector<CubeChain> out;
    CubeChain current;
    std::size_t nodes = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t vertex) {
        if (++nodes > node_cap) throw ResourceError("cube chain search exceeds the node cap of " + std::to_string(node_cap));
        if (vertex == base.final) out.push_back(current);
        for (const auto& c : starting_at[vertex]) {
            current.cells.push_back(c);
            walk(k.corner(c.dim, c.index, 1));
            current.cells.pop_back();
        }
    };
    walk(base.initial);
    std::sort(out.begin(), out.end());
    return out;
}

FaceIndex::FaceIndex(const PrecubicalComplex& k) {
    std::size_t total = 0;
    for (int d = 0; d <= k.max_dim(); ++d) {
        offset_.push_back(total);
        total += k.count(d);
    }
    words_ = (total + 63) / 64;
    bits_.assign(total * words_, 0);
    for (int d = 0; d <= k.max_dim(); ++d) {
        for (std::size_t c = 0; c < k.count(d); ++c) {
            const std::size_t self = flat({d, c});
            std::uint64_t* row = &bits_[self * words_];
            row[self / 64] |= std::uint64_t{1} << (self % 64);
            for (int i = 1; i <= d; ++i) {
                for (int eps = 0; eps <= 1; ++eps) {
                    const std::uint64_t* sub = &bits_[flat({d - 1, k.face(d, c, i, eps)}) * words_];
                    for (std::size_t w = 0; w < words_; ++w) row[w] |= sub[w];
                }
            }
        }
    }
}

bool FaceIndex::is_face(CellRef b, CellRef c) const {
    if (b.dim > c.dim) return false;
    const std::size_t fb = flat(b);
    return (bits_[flat(c) * words_ + fb / 64] >> (fb % 64)) & 1u;
}

ChainContext::ChainContext(const PrecubicalComplex& k) : k_(&k), faces_(k) {
    if (!compute_altitude(k)) throw ContractError("chain order needs a complex with an altitude function");
    auto nsl = is_non_self_linked(k);
    if (!nsl.non_self_linked) {
        throw ContractError("chain order needs a non-self-linked complex; cell " +
                            k.name(nsl.counterexample->dim, nsl.counterexample->index) + " is self-linked");
    }
}

bool chain_leq(const CubeChain& a, const CubeChain& b, const ChainContext& ctx) {
    for (const auto& x : a.cells) {
        bool found = false;
        for (const auto& y : b.cells) {
            if (ctx.faces().is_face(x, y)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

ChainPoset chain_poset(const PrecubicalComplex& k, std::size_t node_cap) {
    ChainContext ctx(k);
    ChainPoset out;
    out.chains = enumerate_chains(k, node_cap);
    const std::size_t m = out.chains.size();
    auto table = kernels::parallel::relation_table(
        m, [&](std::size_t i, std::size_t j) { return chain_leq(out.chains[i], out.chains[j], ctx); });
    std::vector<std::string> names;
    for (const auto& c : out.chains) names.push_back(to_string(c, k));
    out.poset = FiniteCategory::from_poset(m, table, names);
    return out;
}

std::string to_string(const CubeChain& c, const PrecubicalComplex& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (i) s += ", ";
        s += k.name(c.cells[i].dim, c.cells[i].index);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------

std::string word_face(const std::string& word, const std::vector<int>& indices, int eps) {
    std::vector<std::size_t> stars;
    for (std::size_t p = 0; p < word.size(); ++p) {
        if (word[p] == '*') stars.push_back(p);
    }
    std::string out = word;
    for (int i : indices) {
        if (i < 1 || static_cast<std::size_t>(i) > stars.size()) throw ArgumentError("face index out of range");
        out[stars[i - 1]] = static_cast<char>('0' + eps);
    }
    return out;
}

namespace {

void check_subset(const std::vector<int>& s, int bound, const char* what) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ArgumentError(std::string(what) + " has repeated entries");
    }
    for (int x : s) {
        if (x < 1 || x > bound) throw ArgumentError(std::string(what) + " is not a subset of 1.." + std::to_string(bound));
    }
}

bool contains(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

std::vector<int> without(std::vector<int> s, int x) {
    s.erase(std::remove(s.begin(), s.end(), x), s.end());
    return s;
}

FaceSwap swap_recursive(int p, int q, const std::vector<int>& v, const std::vector<int>& w) {
    const int s = p + static_cast<int>(w.size());
    FaceSwap r;
    if (p == 0) {
        r.w_prime.resize(static_cast<std::size_t>(s));
        std::iota(r.w_prime.begin(), r.w_prime.end(), 1);
        return r;
    }
    if (q == 0) {
        r.v_prime.resize(static_cast<std::size_t>(s));
        std::iota(r.v_prime.begin(), r.v_prime.end(), 1);
        return r;
    }
    if (contains(w, q)) {
        r = swap_recursive(p, q - 1, v, without(w, q));
        r.w_prime.push_back(s);
    } else if (contains(v, p)) {
        r = swap_recursive(p - 1, q, without(v, p), w);
        r.v_prime.push_back(s);
    } else {
        r = swap_recursive(p - 1, q - 1, v, w);
    }
    return r;
}

} // namespace

bool face_swap_holds(int p, int /*q*/, const std::vector<int>& v, const std::vector<int>& w, const FaceSwap& r) {
    const int s = p + static_cast<int>(w.size());
    const std::string cube(static_cast<std::size_t>(s), '*');
    try {
        const std::string lhs = word_face(word_face(cube, r.w_prime, 0), v, 1);
        const std::string rhs = word_face(word_face(cube, r.v_prime, 1), w, 0);
        return lhs == rhs && r.v_prime.size() == v.size() && r.w_prime.size() == w.size();
    } catch (const ArgumentError&) {
        return false;
    }
}

FaceSwap face_swap(int p, int q, const std::vector<int>& v, const std::vector<int>& w) {
    if (p < 0 || q < 0) throw ArgumentError("face_swap needs p, q >= 0");
    check_subset(v, p, "V");
    check_subset(w, q, "W");
    if (p - static_cast<int>(v.size()) != q - static_cast<int>(w.size())) {
        throw ArgumentError("face_swap needs p - |V| = q - |W|");
    }
    FaceSwap r = swap_recursive(p, q, v, w);
    std::sort(r.v_prime.begin(), r.v_prime.end());
    std::sort(r.w_prime.begin(), r.w_prime.end());
    if (!face_swap_holds(p, q, v, w, r)) throw ConsistencyError("face_swap output fails the cube identity");
    return r;
}

// ---------------------------------------------------------------------------

DoubleOrder chain_to_order(const CubeChain& c, const YComplex& y) {
    std::vector<int> level(static_cast<std::size_t>(y.n), 0);
    DoubleOrder o(y.n);
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        const auto& mid = y.cell(c.cells[i]).mid;
        for (std::size_t p = 0; p < mid.size(); ++p) {
            if (level[mid[p]] != 0) throw ContractError("element occurs in two cubes of a chain");
            level[mid[p]] = static_cast<int>(i) + 1;
            for (std::size_t q = p + 1; q < mid.size(); ++q) o.y.set(mid[p], mid[q]);
        }
    }
    for (int a = 0; a < y.n; ++a) {
        if (level[a] == 0) throw ContractError("element missing from every cube of a chain");
        for (int b = 0; b < y.n; ++b) {
            if (level[a] < level[b]) o.x.set(a, b);
        }
    }
    return o;
}

CubeChain order_to_chain(const DoubleOrder& o, const YComplex& y) {
    if (o.size() != y.n) throw ArgumentError("order and Y^A live on different sets");
    auto h = level_function(o.x);
    if (!h || !is_regular(o)) throw ContractError("order_to_chain needs a regular double order");
    const int levels = y.n == 0 ? 0 : *std::max_element(h->begin(), h->end());
    CubeChain chain;
    for (int j = 1; j <= levels; ++j) {
        YCell cell;
        for (int a = 0; a < y.n; ++a) {
            if ((*h)[a] < j) cell.ones |= 1u << a;
            if ((*h)[a] > j) cell.zeros |= 1u << a;
            if ((*h)[a] == j) cell.mid.push_back(a);
        }
        std::sort(cell.mid.begin(), cell.mid.end(), [&](int a, int b) { return o.y.test(a, b); });
        chain.cells.push_back(y.ref(cell));
    }
    return chain;
}

CubeChain permuted(const CubeChain& c, const YComplex& y, std::size_t group_element) {
    CubeChain out;
    for (const auto& cell : c.cells) out.cells.push_back({cell.dim, y.action.at(group_element)(cell.dim, cell.index)});
    return out;
}

} // namespace dicube
