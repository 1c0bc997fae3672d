#pragma once

// Builders for the triangle-rotation presentation families, the braid
// two-generator isomorphism check, and the genus and divisibility
// formulas for finite factors acting on tessellated surfaces.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "vdg/perm_group.hpp"
#include "vdg/todd_coxeter.hpp"
#include "vdg/words.hpp"

namespace vdg {

struct TriangleParams {
  int l = 2, m = 3, n = 3;
};

// < x, y | x^l, y^m, (xy)^n >
inline Presentation vondyck_presentation(const TriangleParams& t) {
  if (t.l < 2 || t.m < 2 || t.n < 2) throw std::invalid_argument("parameters must be >= 2");
  Presentation p{{"x", "y"}};
  Word x = Word::generator(0), y = Word::generator(1);
  p.add_relator(power(x, t.l));
  p.add_relator(power(y, t.m));
  p.add_relator(power(concat(x, y), t.n));
  return p;
}

namespace detail {

inline Word braid_relator() {
  Word a = Word::generator(0), b = Word::generator(1);
  return concat(concat(a, concat(b, a)), invert(concat(b, concat(a, b))));
}

}  // namespace detail

// < a, b | aba=bab, a b^2 a = b^(n-2), a^n >
inline Presentation dn_presentation(int n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  Presentation p{{"a", "b"}};
  Word a = Word::generator(0), b = Word::generator(1);
  p.add_relator(detail::braid_relator());
  p.add_relator(concat(concat(a, concat(power(b, 2), a)), power(b, -(n - 2))));
  p.add_relator(power(a, n));
  return p;
}

// < a, b | aba=bab, a b^2 a = b^(n-2) >; the universal central extension
inline Presentation dn_bar_presentation(int n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  Presentation p{{"a", "b"}};
  Word a = Word::generator(0), b = Word::generator(1);
  p.add_relator(detail::braid_relator());
  p.add_relator(concat(concat(a, concat(power(b, 2), a)), power(b, -(n - 2))));
  return p;
}

// < a, b | aba=bab, a b^2 a = W b^(n-2) [, a^n] >; the folded two- or
// three-relator form used for the extra-relation factors.
inline Presentation dn_with_extra(int n, const Word& extra, bool drop_order_relator) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  Presentation p{{"a", "b"}};
  Word a = Word::generator(0), b = Word::generator(1);
  p.add_relator(detail::braid_relator());
  Word rhs = concat(extra, power(b, n - 2));
  p.add_relator(concat(concat(a, concat(power(b, 2), a)), invert(rhs)));
  if (!drop_order_relator) p.add_relator(power(a, n));
  return p;
}

namespace detail {

inline Permutation word_image(const std::vector<Permutation>& gens, const Word& w) {
  Permutation r = Permutation::identity(gens.empty() ? 0 : gens[0].degree());
  for (Letter l : w.letters()) {
    const Permutation& g = gens[l.gen];
    r = compose(r, l.sign > 0 ? g : g.inverse());
  }
  return r;
}

// Substitutes images for generators: w is a word in one presentation, the
// images live in the other group's permutation representation.
inline Permutation substituted_image(const std::vector<Permutation>& images, const Word& w) {
  return word_image(images, w);
}

}  // namespace detail

// Generator words of the standard isomorphism and its inverse:
// x -> aba, y -> ab and a -> y^2 x, b -> x y^2.
inline Word prop1_x_word() {
  Word a = Word::generator(0), b = Word::generator(1);
  return concat(a, concat(b, a));
}
inline Word prop1_y_word() { return concat(Word::generator(0), Word::generator(1)); }
inline Word prop1_a_word() {
  Word x = Word::generator(0), y = Word::generator(1);
  return concat(power(y, 2), x);
}
inline Word prop1_b_word() {
  Word x = Word::generator(0), y = Word::generator(1);
  return concat(x, power(y, 2));
}

// Checks that the given generator maps define mutually inverse
// isomorphisms between D(2,3,n) and the braid-generator presentation,
// witnessed in the enumerated permutation images.
inline bool check_prop1_isomorphism_with(int n, const Word& x_image, const Word& y_image,
                                         const Word& a_image, const Word& b_image,
                                         const EnumerationLimits& limits = {}) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  Presentation vd = vondyck_presentation({2, 3, n});
  Presentation dn = dn_presentation(n);
  CosetTable tvd = enumerate(vd, {}, limits);
  CosetTable tdn = enumerate(dn, {}, limits);
  if (tvd.live_count() != tdn.live_count()) return false;

  std::vector<Permutation> xy = {coset_action(tvd, 0), coset_action(tvd, 1)};
  std::vector<Permutation> ab = {coset_action(tdn, 0), coset_action(tdn, 1)};

  // (i) the relators of D(2,3,n) hold for the images of x, y in D_n
  std::vector<Permutation> xy_in_dn = {detail::substituted_image(ab, x_image),
                                       detail::substituted_image(ab, y_image)};
  for (const Word& r : vd.relators())
    if (!detail::word_image(xy_in_dn, r).is_identity()) return false;

  // (ii) the relators of D_n hold for the images of a, b in D(2,3,n)
  std::vector<Permutation> ab_in_vd = {detail::substituted_image(xy, a_image),
                                       detail::substituted_image(xy, b_image)};
  for (const Word& r : dn.relators())
    if (!detail::word_image(ab_in_vd, r).is_identity()) return false;

  // (iii) both composites fix the generators
  if (detail::substituted_image(xy_in_dn, a_image) != ab[0]) return false;
  if (detail::substituted_image(xy_in_dn, b_image) != ab[1]) return false;
  if (detail::substituted_image(ab_in_vd, x_image) != xy[0]) return false;
  if (detail::substituted_image(ab_in_vd, y_image) != xy[1]) return false;
  return true;
}

inline bool check_prop1_isomorphism(int n, const EnumerationLimits& limits = {}) {
  return check_prop1_isomorphism_with(n, prop1_x_word(), prop1_y_word(), prop1_a_word(),
                                      prop1_b_word(), limits);
}

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// g = 1 + |G| (n - 6) / (12 n), exact.
inline Rational genus(long long order, int n) {
  if (order < 1 || n < 3) throw std::invalid_argument("genus needs order >= 1, n >= 3");
  Rational frac{order * (n - 6), 12LL * n};
  return Rational{frac.num + frac.den, frac.den};
}

inline bool coprime_235(int n) { return std::gcd(n, 6) == 1; }

// 12n divides the order. Only claimed for {2,3,n} pairwise coprime.
inline bool check_divisibility(long long order, int n) {
  if (order < 1 || n < 3) throw std::invalid_argument("divisibility needs order >= 1, n >= 3");
  return order % (12LL * n) == 0;
}

// Face/edge/vertex counts of the tessellated surface: |G| = 3F, E = 3F/2,
// V = 3F/n. Only defined when every division is exact.
struct SurfaceInvariants {
  long long faces = 0;
  long long edges = 0;
  long long vertices = 0;
  long long euler_characteristic = 0;
  Rational genus_value;
};

inline std::optional<SurfaceInvariants> surface_invariants(long long order, int n) {
  if (order < 1 || n < 3) return std::nullopt;
  if (order % 3 || order % 2) return std::nullopt;
  long long f = order / 3;
  if ((3 * f) % 2 || (3 * f) % n) return std::nullopt;
  SurfaceInvariants s;
  s.faces = f;
  s.edges = 3 * f / 2;
  s.vertices = 3 * f / n;
  s.euler_characteristic = s.vertices - s.edges + s.faces;
  s.genus_value = genus(order, n);
  return s;
}

}  // namespace vdg
