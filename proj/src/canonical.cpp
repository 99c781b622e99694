#include "dicube/canonical.hpp"

#include <algorithm>
#include <bit>

#include "dicube/errors.hpp"
#include "dicube/relation.hpp"

namespace dicube {

namespace {

int char_rank(char ch) { return ch == '0' ? 0 : ch == '1' ? 1 : 2; }

bool word_less(const std::string& a, const std::string& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](char x, char y) { return char_rank(x) < char_rank(y); });
}

struct CubeTable {
    std::vector<std::vector<std::string>> words;
    std::map<std::string, std::size_t> index;
};

CubeTable cube_table(int n) {
    if (n < 0) throw ArgumentError("negative cube dimension");
    if (n > 12) throw ResourceError("standard cubes are capped at dimension 12");
    CubeTable t;
    t.words.resize(static_cast<std::size_t>(n) + 1);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::string w(static_cast<std::size_t>(n), '0');
        std::size_t rest = code;
        int stars = 0;
        for (int p = 0; p < n; ++p) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            w[p] = "01*"[digit];
            if (digit == 2) ++stars;
        }
        t.words[stars].push_back(w);
    }
    for (auto& level : t.words) {
        std::sort(level.begin(), level.end(), word_less);
        for (std::size_t k = 0; k < level.size(); ++k) t.index.emplace(level[k], k);
    }
    return t;
}

std::string mask_letters(std::uint32_t mask) {
    std::string s;
    for (int a = 0; a < 32; ++a) {
        if (mask & (1u << a)) s += element_name(a);
    }
    return s;
}

} // namespace

std::string cube_word(int n, int dim, std::size_t cell) {
    auto t = cube_table(n);
    return t.words.at(dim).at(cell);
}

CellRef cube_cell(const std::string& word) {
    for (char ch : word) {
        if (ch != '0' && ch != '1' && ch != '*') throw ArgumentError("cube word may only contain 0, 1, *");
    }
    auto t = cube_table(static_cast<int>(word.size()));
    int dim = static_cast<int>(std::count(word.begin(), word.end(), '*'));
    return {dim, t.index.at(word)};
}

PrecubicalComplex build_standard_cube(int n) {
    auto t = cube_table(n);
    std::vector<std::size_t> counts;
    for (const auto& level : t.words) counts.push_back(level.size());
    PrecubicalComplex k(counts);
    for (int d = 1; d <= n; ++d) {
        for (std::size_t c = 0; c < t.words[d].size(); ++c) {
            const std::string& w = t.words[d][c];
            int i = 0;
            for (int p = 0; p < n; ++p) {
                if (w[p] != '*') continue;
                ++i;
                for (int eps = 0; eps <= 1; ++eps) {
                    std::string f = w;
                    f[p] = static_cast<char>('0' + eps);
                    k.set_face(d, c, i, eps, t.index.at(f));
                }
            }
        }
    }
    k.set_base(BasePoints{t.index.at(std::string(n, '0')), t.index.at(std::string(n, '1'))});
    k.set_names(t.words);
    return k;
}

PrecubicalComplex build_wedge_cube(const std::vector<int>& dims) {
    PrecubicalComplex acc = build_standard_cube(0);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw ArgumentError("wedge factors must have positive dimension");
        acc = i == 0 ? build_standard_cube(dims[i]) : serial_wedge(acc, build_standard_cube(dims[i]));
    }
    return acc;
}

PrecubicalComplex build_Z(int max_dim) {
    if (max_dim < 0) throw ArgumentError("build_Z needs max_dim >= 0");
    PrecubicalComplex z(std::vector<std::size_t>(static_cast<std::size_t>(max_dim) + 1, 1));
    std::vector<std::vector<std::string>> names;
    for (int m = 0; m <= max_dim; ++m) {
        names.push_back({"z^" + std::to_string(m)});
        for (int i = 1; i <= m; ++i) {
            z.set_face(m, 0, i, 0, 0);
            z.set_face(m, 0, i, 1, 0);
        }
    }
    z.set_base(BasePoints{0, 0});
    z.set_names(std::move(names));
    return z;
}

PrecubicalMap map_to_Z(const ComplexPtr& k, const ComplexPtr& z) {
    if (z->max_dim() < k->max_dim()) throw ArgumentError("Z is truncated below the dimension of K");
    PrecubicalMap f{k, z, {}, k->bipointed() && z->bipointed()};
    for (int d = 0; d <= k->max_dim(); ++d) f.assignment.emplace_back(k->count(d), 0);
    return f;
}

ZTilde build_z_tilde(int n) {
    if (n < 0) throw ArgumentError("build_z_tilde needs n >= 0");
    std::vector<std::size_t> counts;
    for (int k = 0; k <= n; ++k) counts.push_back(static_cast<std::size_t>(n - k + 1));
    PrecubicalComplex z(counts);
    ZTilde out;
    std::vector<std::vector<std::string>> names(counts.size());
    out.altitude.value.resize(counts.size());
    for (int k = 0; k <= n; ++k) {
        for (int j = 0; j + k <= n; ++j) {
            names[k].push_back("z^" + std::to_string(k) + "_" + std::to_string(j));
            out.altitude.value[k].push_back(j);
            for (int i = 1; i <= k; ++i) {
                z.set_face(k, j, i, 0, j);
                z.set_face(k, j, i, 1, j + 1);
            }
        }
    }
    z.set_base(BasePoints{0, static_cast<std::size_t>(n)});
    z.set_names(std::move(names));
    out.complex = share(std::move(z));
    return out;
}

// ---------------------------------------------------------------------------

bool is_valid_ycell(const YCell& c, int n) {
    const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
    std::uint32_t mid = 0;
    for (int a : c.mid) {
        if (a < 0 || a >= n || (mid & (1u << a))) return false;
        mid |= 1u << a;
    }
    if ((c.ones & c.zeros) || (c.ones & mid) || (c.zeros & mid)) return false;
    return (c.ones | c.zeros | mid) == all;
}

YCell y_face(const YCell& c, int i, int eps) {
    if (i < 1 || i > c.dim()) throw ArgumentError("face index out of range for Y-cell");
    YCell f = c;
    int a = f.mid[i - 1];
    f.mid.erase(f.mid.begin() + (i - 1));
    (eps ? f.ones : f.zeros) |= 1u << a;
    return f;
}

YCell y_act(const YCell& c, const Permutation& sigma) {
    const Permutation inv = sigma.inverse();
    auto map_mask = [&](std::uint32_t m) {
        std::uint32_t out = 0;
        for (int a = 0; a < sigma.size(); ++a) {
            if (m & (1u << a)) out |= 1u << inv(a);
        }
        return out;
    };
    YCell r;
    r.ones = map_mask(c.ones);
    r.zeros = map_mask(c.zeros);
    for (int a : c.mid) r.mid.push_back(inv(a));
    return r;
}

bool y_face_test(const YCell& c1, const YCell& c2) {
    if ((c2.zeros & ~c1.zeros) || (c2.ones & ~c1.ones)) return false;
    // mid(c1) must be a subsequence of mid(c2).
    std::size_t p = 0;
    for (int a : c2.mid) {
        if (p < c1.mid.size() && c1.mid[p] == a) ++p;
    }
    return p == c1.mid.size();
}

std::string to_string(const YCell& c) {
    std::string s = "(" + mask_letters(c.ones) + "|";
    for (std::size_t i = 0; i < c.mid.size(); ++i) {
        if (i) s += "<";
        s += element_name(c.mid[i]);
    }
    return s + "|" + mask_letters(c.zeros) + ")";
}

YCell parse_ycell(const std::string& text, int n) {
    auto fail = [&] { return ArgumentError("malformed Y-cell: " + text); };
    if (text.size() < 4 || text.front() != '(' || text.back() != ')') throw fail();
    std::string body = text.substr(1, text.size() - 2);
    auto bar1 = body.find('|');
    auto bar2 = bar1 == std::string::npos ? bar1 : body.find('|', bar1 + 1);
    if (bar2 == std::string::npos) throw fail();
    auto letter = [&](char ch) {
        int a = ch - 'a';
        if (a < 0 || a >= n) throw fail();
        return a;
    };
    YCell c;
    for (char ch : body.substr(0, bar1)) c.ones |= 1u << letter(ch);
    for (char ch : body.substr(bar1 + 1, bar2 - bar1 - 1)) {
        if (ch != '<') c.mid.push_back(letter(ch));
    }
    for (char ch : body.substr(bar2 + 1)) c.zeros |= 1u << letter(ch);
    if (!is_valid_ycell(c, n)) throw fail();
    return c;
}

std::size_t YComplex::find(const YCell& c) const {
    auto it = index.find(c);
    if (it == index.end()) throw ArgumentError("not a cell of Y^A: " + to_string(c));
    return it->second;
}

YComplex build_yA(int n, int cap) {
    if (n < 0) throw ArgumentError("negative ground set size");
    if (n > cap) throw ResourceError("Y^A is capped at |A| = " + std::to_string(cap));
    YComplex y;
    y.n = n;
    y.cells.resize(static_cast<std::size_t>(n) + 1);
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t mid = 0; mid <= all; ++mid) {
        std::vector<int> seq;
        for (int a = 0; a < n; ++a) {
            if (mid & (1u << a)) seq.push_back(a);
        }
        const std::uint32_t rest = all & ~mid;
        do {
            // Every split of the remaining elements into ones and zeros.
            for (std::uint32_t ones = rest;; ones = (ones - 1) & rest) {
                y.cells[seq.size()].push_back(YCell{ones, seq, rest & ~ones});
                if (ones == 0) break;
            }
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
    std::vector<std::size_t> counts;
    std::vector<std::vector<std::string>> names;
    for (auto& level : y.cells) {
        std::sort(level.begin(), level.end());
        counts.push_back(level.size());
        names.emplace_back();
        for (std::size_t k = 0; k < level.size(); ++k) {
            y.index.emplace(level[k], k);
            names.back().push_back(to_string(level[k]));
        }
    }
    PrecubicalComplex k(counts);
    y.altitude.value.resize(counts.size());
    for (int d = 0; d <= n; ++d) {
        for (std::size_t c = 0; c < y.cells[d].size(); ++c) {
            const YCell& cell = y.cells[d][c];
            y.altitude.value[d].push_back(std::popcount(cell.ones));
            for (int i = 1; i <= d; ++i) {
                for (int eps = 0; eps <= 1; ++eps) k.set_face(d, c, i, eps, y.find(y_face(cell, i, eps)));
            }
        }
    }
    k.set_base(BasePoints{y.find(YCell{0, {}, all}), y.find(YCell{all, {}, 0})});
    k.set_names(std::move(names));
    y.complex = share(std::move(k));

    y.group = all_permutations(n);
    for (const auto& sigma : y.group) {
        PrecubicalMap f{y.complex, y.complex, {}, true};
        for (int d = 0; d <= n; ++d) {
            f.assignment.emplace_back();
            for (const auto& cell : y.cells[d]) f.assignment.back().push_back(y.find(y_act(cell, sigma)));
        }
        y.action.push_back(std::move(f));
    }

    y.z_tilde = build_z_tilde(n).complex;
    y.projection = PrecubicalMap{y.complex, y.z_tilde, {}, true};
    for (int d = 0; d <= n; ++d) {
        y.projection.assignment.emplace_back();
        for (const auto& cell : y.cells[d]) {
            y.projection.assignment.back().push_back(static_cast<std::size_t>(std::popcount(cell.ones)));
        }
    }
    return y;
}

} // namespace dicube
