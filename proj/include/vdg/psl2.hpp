#pragma once

// 2x2 projective matrix groups over GF(q): orders, the action on the
// projective line, and exhaustive epimorphism search from two-generator
// presentations onto PSL(2,q).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vdg/gf.hpp"
#include "vdg/perm_group.hpp"
#include "vdg/permutation.hpp"
#include "vdg/words.hpp"

namespace vdg {

// Matrix up to scalars, stored in the canonical form whose first nonzero
// entry (in a, b, c, d order) is 1.
struct ProjMatrix {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
};

inline ProjMatrix canonicalize(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                               std::uint32_t d) {
  std::uint32_t lead = a ? a : b ? b : c ? c : d;
  if (lead == 0) throw std::domain_error("zero matrix is not projective");
  std::uint32_t s = f.inv(lead);
  return {f.mul(a, s), f.mul(b, s), f.mul(c, s), f.mul(d, s)};
}

inline std::uint32_t det(const Field& f, const ProjMatrix& m) {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

inline ProjMatrix multiply(const Field& f, const ProjMatrix& x, const ProjMatrix& y) {
  return canonicalize(f, f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
                      f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                      f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
                      f.add(f.mul(x.c, y.b), f.mul(x.d, y.d)));
}

inline ProjMatrix inverse(const Field& f, const ProjMatrix& m) {
  std::uint32_t dt = det(f, m);
  if (dt == 0) throw std::domain_error("singular matrix");
  return canonicalize(f, m.d, f.neg(m.b), f.neg(m.c), m.a);
}

inline bool is_scalar(const ProjMatrix& m) { return m.b == 0 && m.c == 0 && m.a == m.d; }

// |PSL(2,q)| = q (q^2 - 1) / gcd(2, q - 1). Valid for every prime power
// q >= 2; the q = 2, 3 groups exist but are not simple.
inline unsigned long long psl2_order(std::uint32_t q) {
  Field f = make_field(q);  // validates that q is a prime power
  unsigned long long n = q;
  unsigned long long order = n * (n * n - 1);
  return f.characteristic() == 2 ? order : order / 2;
}

// Points of P^1(GF(q)) in the fixed order [0:1], [1:0], [1:x] for x != 0.
inline std::uint32_t projective_point_count(const Field& f) { return f.size() + 1; }

namespace detail {

inline std::uint32_t point_index(const Field& f, std::uint32_t u, std::uint32_t v) {
  if (u == 0) return 0;  // [0:1]
  std::uint32_t x = f.mul(v, f.inv(u));
  return x == 0 ? 1 : 1 + x;
}

inline std::pair<std::uint32_t, std::uint32_t> point_coords(std::uint32_t idx) {
  if (idx == 0) return {0, 1};
  if (idx == 1) return {1, 0};
  return {1, idx - 1};
}

}  // namespace detail

// Right action of m on row vectors [u, v]; composes left-to-right like
// group words.
inline Permutation projective_line_action(const Field& f, const ProjMatrix& m) {
  if (det(f, m) == 0) throw std::domain_error("singular matrix");
  std::uint32_t n = projective_point_count(f);
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto [u, v] = detail::point_coords(i);
    std::uint32_t uu = f.add(f.mul(u, m.a), f.mul(v, m.c));
    std::uint32_t vv = f.add(f.mul(u, m.b), f.mul(v, m.d));
    img[i] = detail::point_index(f, uu, vv);
  }
  return Permutation(std::move(img));
}

// All elements of PSL(2,q) in canonical form, in a fixed deterministic
// order.
inline std::vector<ProjMatrix> psl2_elements(const Field& f) {
  std::uint32_t q = f.size();
  std::vector<ProjMatrix> out;
  out.reserve(psl2_order(q));
  // a = 1: b, c, d free
  for (std::uint32_t b = 0; b < q; ++b)
    for (std::uint32_t c = 0; c < q; ++c)
      for (std::uint32_t d = 0; d < q; ++d) {
        std::uint32_t dt = f.sub(d, f.mul(b, c));
        if (dt == 0 || !f.is_square(dt)) continue;
        out.push_back({1, b, c, d});
      }
  // a = 0, b = 1: det = -c
  for (std::uint32_t c = 1; c < q; ++c) {
    if (!f.is_square(f.neg(c))) continue;
    for (std::uint32_t d = 0; d < q; ++d) out.push_back({0, 1, c, d});
  }
  return out;
}

// One representative per conjugacy class of SL(2,q), parametrized by
// trace (companion matrices), plus the split unipotent classes and the
// central elements. Superset-safe: duplicates only cost time.
inline std::vector<ProjMatrix> psl2_class_representatives(const Field& f) {
  std::uint32_t q = f.size();
  std::vector<ProjMatrix> reps;
  reps.push_back(canonicalize(f, 1, 0, 0, 1));
  for (std::uint32_t t = 0; t < q; ++t)
    reps.push_back(canonicalize(f, 0, f.neg(1), 1, t));  // char poly x^2 - t x + 1
  std::uint32_t eps = 0;
  for (std::uint32_t x = 2; x < q; ++x)
    if (!f.is_square(x)) {
      eps = x;
      break;
    }
  reps.push_back(canonicalize(f, 1, 1, 0, 1));
  if (eps) reps.push_back(canonicalize(f, 1, eps, 0, 1));
  if (f.characteristic() != 2) {
    std::uint32_t m1 = f.neg(1);
    reps.push_back(canonicalize(f, m1, 1, 0, m1));
    if (eps) reps.push_back(canonicalize(f, m1, eps, 0, m1));
  }
  // dedupe
  std::vector<ProjMatrix> out;
  for (const ProjMatrix& m : reps)
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  return out;
}

struct EpiBudget {
  std::uint32_t max_q = 127;
};

struct EpiSearchResult {
  enum class Status { Found, ProvenNone, BudgetExhausted };
  Status status = Status::ProvenNone;
  ProjMatrix image_a, image_b;
};

namespace detail {

inline ProjMatrix evaluate_word(const Field& f, const Word& w, const ProjMatrix& a,
                                const ProjMatrix& ainv, const ProjMatrix& b,
                                const ProjMatrix& binv) {
  ProjMatrix r{1, 0, 0, 1};
  for (Letter l : w.letters()) {
    const ProjMatrix& m = l.gen == 0 ? (l.sign > 0 ? a : ainv) : (l.sign > 0 ? b : binv);
    r = multiply(f, r, m);
  }
  return r;
}

inline bool relators_hold(const Field& f, const Presentation& p, const ProjMatrix& a,
                          const ProjMatrix& ainv, const ProjMatrix& b, const ProjMatrix& binv) {
  for (const Word& r : p.relators())
    if (!is_scalar(evaluate_word(f, r, a, ainv, b, binv))) return false;
  return true;
}

}  // namespace detail

// Exhaustive search for a pair of PSL(2,q) images satisfying every
// relator and generating the full group: conjugacy-class representatives
// for the first generator, the whole group for the second. ProvenNone is
// a completed exhaustive search; BudgetExhausted means q lies outside the
// search budget.
inline EpiSearchResult find_epimorphism(const Presentation& p, std::uint32_t q,
                                        const EpiBudget& budget = {}) {
  if (p.generator_count() != 2)
    throw std::invalid_argument("epimorphism search needs a 2-generator presentation");
  if (q > budget.max_q) return {EpiSearchResult::Status::BudgetExhausted, {}, {}};

  Field f = make_field(q);
  unsigned long long target = psl2_order(q);
  std::vector<ProjMatrix> everything = psl2_elements(f);
  std::vector<ProjMatrix> areps = psl2_class_representatives(f);

  // quick pre-filter: pure powers of a single generator must already hold
  std::vector<std::pair<std::uint32_t, long long>> pure_powers;  // (gen, exponent)
  for (const Word& r : p.relators()) {
    bool pure = true;
    long long e = 0;
    std::uint32_t g = r.size() ? r[0].gen : 0;
    for (Letter l : r.letters()) {
      if (l.gen != g) {
        pure = false;
        break;
      }
      e += l.sign;
    }
    if (pure && r.size()) pure_powers.emplace_back(g, e);
  }

  for (const ProjMatrix& a : areps) {
    ProjMatrix ainv = inverse(f, a);
    bool a_ok = true;
    for (auto [g, e] : pure_powers) {
      if (g != 0) continue;
      ProjMatrix pw{1, 0, 0, 1};
      long long k = e < 0 ? -e : e;
      const ProjMatrix& base = e < 0 ? ainv : a;
      for (long long i = 0; i < k; ++i) pw = multiply(f, pw, base);
      if (!is_scalar(pw)) {
        a_ok = false;
        break;
      }
    }
    if (!a_ok) continue;
    for (const ProjMatrix& b : everything) {
      ProjMatrix binv = inverse(f, b);
      if (!detail::relators_hold(f, p, a, ainv, b, binv)) continue;
      // surjectivity: the generated permutation group on P^1 has full order
      PermutationGroup image =
          schreier_sims({projective_line_action(f, a), projective_line_action(f, b)});
      if (image.order() == target) return {EpiSearchResult::Status::Found, a, b};
    }
  }
  return {EpiSearchResult::Status::ProvenNone, {}, {}};
}

}  // namespace vdg
