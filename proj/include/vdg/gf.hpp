#pragma once

// Finite fields GF(p^k), elements encoded as integers in [0, q): the
// base-p digits of the index are the polynomial coefficients, constant
// term first. The modulus is the lexicographically smallest monic
// irreducible of its degree (constant term compared first).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vdg {

class Field {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      r += mul * ((a % p_ + b % p_) % p_);
      a /= p_;
      b /= p_;
      mul *= p_;
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (k_ == 1) return (p_ - a) % p_;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      r += mul * ((p_ - a % p_) % p_);
      a /= p_;
      mul *= p_;
    }
    return r;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  bool is_square(std::uint32_t a) const {
    if (p_ == 2 || a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
  }

 private:
  friend Field make_field(std::uint32_t);

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;  // k+1 coefficients, constant first, monic
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    // polynomial product, then reduction by the monic modulus
    std::vector<std::uint32_t> da(k_), db(k_), prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_) da[i] = a % p_;
    for (std::uint32_t i = 0; i < k_; ++i, b /= p_) db[i] = b % p_;
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_;
    for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
      std::uint32_t c = prod[d];
      if (c) {
        for (std::uint32_t i = 0; i <= k_; ++i) {
          std::uint32_t idx = d - k_ + i;
          prod[idx] = (prod[idx] + std::uint64_t(c) * (p_ - modulus_[i]) % p_) % p_;
        }
      }
    }
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      r += mul * prod[i];
      mul *= p_;
    }
    return r;
  }
};

namespace detail {

// Polynomials over GF(p) as coefficient vectors, constant term first.
inline bool poly_divides(const std::vector<std::uint32_t>& div, std::vector<std::uint32_t> rem,
                         std::uint32_t p) {
  // div is monic; long division, checking for zero remainder
  while (rem.size() >= div.size()) {
    std::uint32_t lead = rem.back();
    if (lead) {
      std::size_t shift = rem.size() - div.size();
      for (std::size_t i = 0; i < div.size(); ++i) {
        std::uint64_t sub = std::uint64_t(lead) * div[i] % p;
        rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p - sub) % p);
      }
    }
    rem.pop_back();
  }
  for (std::uint32_t c : rem)
    if (c) return false;
  return true;
}

inline bool poly_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  std::uint32_t k = static_cast<std::uint32_t>(poly.size() - 1);
  if (poly[0] == 0) return k == 1;  // divisible by x
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    // all monic polynomials of degree d
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> div(d + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i, c /= p) div[i] = static_cast<std::uint32_t>(c % p);
      div[d] = 1;
      if (poly_divides(div, poly, p)) return false;
    }
  }
  return true;
}

}  // namespace detail

inline Field make_field(std::uint32_t q) {
  if (q < 2 || q > 65536) throw std::invalid_argument("field size out of range");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q prime
  std::uint32_t k = 0;
  for (std::uint32_t v = q; v > 1; v /= p) {
    if (v % p != 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    ++k;
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  if (k == 1) {
    f.modulus_ = {0, 1};  // x
  } else {
    // smallest monic irreducible of degree k, lower coefficients counted
    // with the constant term as the least significant digit
    bool found = false;
    for (std::uint32_t code = 0; code < q; ++code) {
      std::vector<std::uint32_t> poly(k + 1);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < k; ++i, c /= p) poly[i] = c % p;
      poly[k] = 1;
      if (detail::poly_irreducible(poly, p)) {
        f.modulus_ = poly;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
  }

  if (std::uint64_t(q) * q <= 1u << 20) {
    f.mul_table_.resize(std::size_t(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) f.mul_table_[a * q + b] = f.mul_slow(a, b);
    f.inv_table_.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a)
      for (std::uint32_t b = 1; b < q; ++b)
        if (f.mul_table_[a * q + b] == 1) {
          f.inv_table_[a] = b;
          break;
        }
  }
  return f;
}

}  // namespace vdg
