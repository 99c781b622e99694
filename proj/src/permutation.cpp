#include "dicube/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "dicube/errors.hpp"

namespace dicube {

Permutation::Permutation(std::vector<int> img) : image(std::move(img)) {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (v < 0 || static_cast<std::size_t>(v) >= image.size() || seen[static_cast<std::size_t>(v)]) {
            throw ArgumentError("not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(static_cast<std::size_t>(n));
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (image[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.resize(image.size());
    for (int i = 0; i < size(); ++i) inv.image[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
    return inv;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw ArgumentError("composing permutations of different sizes");
    Permutation r;
    r.image.resize(q.image.size());
    for (int i = 0; i < q.size(); ++i) r.image[static_cast<std::size_t>(i)] = p(q(i));
    return r;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.image.begin(), p.image.end()));
    return out;
}

std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p(i) + 1);
    }
    return s + "]";
}

} // namespace dicube
