#ifndef JDLAT_PERMUTATION_HPP
#define JDLAT_PERMUTATION_HPP

#include <string>
#include <vector>

#include "jdlat/errors.hpp"

namespace jdlat {

/// A bijection on {1..n} in one-line notation: image(i) for i in 1..n.
class Permutation {
  public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& other) const { return img_ == other.img_; }
    bool operator!=(const Permutation& other) const { return img_ != other.img_; }

    std::string str() const;

  private:
    std::vector<int> img_;
};

/// Right-to-left composition: (f o g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);

} // namespace jdlat

#endif
