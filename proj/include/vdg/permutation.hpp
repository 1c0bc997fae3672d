#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace vdg {

// Dense permutation of {0, ..., deg-1}. Composition is "first p, then q",
// matching left-to-right evaluation of group words.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t v : img_) {
      if (v >= img_.size() || seen[v]) throw std::invalid_argument("images not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator[](std::uint32_t point) const { return img_[point]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::uint32_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation&, const Permutation&);
  std::vector<std::uint32_t> img_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  Permutation r;
  r.img_.resize(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) r.img_[i] = q[p[i]];
  return r;
}

// lcm of cycle lengths.
inline unsigned long long element_order(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  unsigned long long ord = 1;
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    unsigned long long len = 0;
    for (std::uint32_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    unsigned long long g = std::gcd(ord, len);
    if (ord / g > ~0ULL / len) throw std::overflow_error("element order overflows 64 bits");
    ord = ord / g * len;
  }
  return ord;
}

}  // namespace vdg
