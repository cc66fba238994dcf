#include "jdlat/permutation.hpp"

#include <numeric>

namespace jdlat {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = static_cast<int>(img_.size());
    if (n == 0) throw NotABijection("empty one-line notation");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v])
            throw NotABijection("one-line notation is not a bijection of {1.." +
                                std::to_string(n) + "}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i]);
    }
    return s + "]";
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree())
        throw DegreeMismatch("cannot compose permutations of degrees " +
                             std::to_string(f.degree()) + " and " + std::to_string(g.degree()));
    std::vector<int> img(static_cast<size_t>(f.degree()));
    for (int x = 1; x <= f.degree(); ++x) img[static_cast<size_t>(x) - 1] = f(g(x));
    return Permutation(std::move(img));
}

} // namespace jdlat
