#include <catch2/catch_amalgamated.hpp>

#include "vdg/vondyck.hpp"

using namespace vdg;

TEST_CASE("spherical Von Dyck presentations enumerate to the classic orders") {
  CHECK(enumerate(vondyck_presentation({2, 3, 3}), {}).live_count() == 12);
  CHECK(enumerate(vondyck_presentation({2, 3, 4}), {}).live_count() == 24);
  CHECK(enumerate(vondyck_presentation({2, 3, 5}), {}).live_count() == 60);
  CHECK(enumerate(vondyck_presentation({2, 2, 2}), {}).live_count() == 4);
}

TEST_CASE("braid-generator presentations") {
  CHECK(render(dn_presentation(5)) == "< a, b | a*b*a*b^-1*a^-1*b^-1, a*b^2*a*b^-3, a^5 >");
  CHECK(enumerate(dn_presentation(3), {}).live_count() == 12);
  CHECK(enumerate(dn_presentation(4), {}).live_count() == 24);
  CHECK(enumerate(dn_presentation(5), {}).live_count() == 60);

  CHECK(enumerate(dn_bar_presentation(3), {}).live_count() == 24);
  CHECK(enumerate(dn_bar_presentation(4), {}).live_count() == 48);
  CHECK(enumerate(dn_bar_presentation(5), {}).live_count() == 120);
}

TEST_CASE("covers double the finite Von Dyck groups") {
  for (int n : {3, 4, 5})
    CHECK(enumerate(dn_bar_presentation(n), {}).live_count() ==
          2 * enumerate(dn_presentation(n), {}).live_count());
}

TEST_CASE("dn_with_extra builds the folded forms") {
  // A1(7): a b^2 a = (a^2 b^-2)^3 b^5 with and without a^7
  Word w = power(concat(power(Word::generator(0), 2), power(Word::generator(1), -2)), 3);
  Presentation with_order = dn_with_extra(7, w, /*drop_order_relator=*/false);
  CHECK(with_order.relators().size() == 3);
  CHECK(enumerate(with_order, {}).live_count() == 168);

  Presentation cover = dn_with_extra(7, w, /*drop_order_relator=*/true);
  CHECK(cover.relators().size() == 2);
  CHECK(enumerate(cover, {}).live_count() == 336);

  // empty extra word: plain D_n / Dbar_n relator shape
  CHECK(enumerate(dn_with_extra(5, Word{}, false), {}).live_count() == 60);
}

TEST_CASE("Prop. 1 isomorphism check") {
  CHECK(check_prop1_isomorphism(3));
  CHECK(check_prop1_isomorphism(4));
  CHECK(check_prop1_isomorphism(5));

  // deliberately wrong map x -> ab must fail
  CHECK_FALSE(check_prop1_isomorphism_with(4, prop1_y_word(), prop1_y_word(), prop1_a_word(),
                                           prop1_b_word()));
}

TEST_CASE("images satisfy x^2 = y^3 = (xy)^n = 1 under x=aba, y=ab") {
  for (int n : {3, 4, 5}) {
    CosetTable t = enumerate(dn_presentation(n), {});
    Permutation a = coset_action(t, 0), b = coset_action(t, 1);
    Permutation x = compose(compose(a, b), a);
    Permutation y = compose(a, b);
    CHECK(element_order(x) == 2);
    CHECK((element_order(y) == 3 || n == 3));  // y^3 = 1 always
    Permutation y3 = compose(compose(y, y), y);
    CHECK(y3.is_identity());
    Permutation xy = compose(x, y);
    Permutation p = Permutation::identity(t.live_count());
    for (int i = 0; i < n; ++i) p = compose(p, xy);
    CHECK(p.is_identity());
  }
}

TEST_CASE("b has order dividing n and b a^2 b = a^(n-2) in D_n images") {
  for (int n : {3, 4, 5}) {
    CosetTable t = enumerate(dn_presentation(n), {});
    Permutation a = coset_action(t, 0), b = coset_action(t, 1);
    CHECK(static_cast<unsigned long long>(n) % element_order(b) == 0);
    Permutation lhs = compose(compose(b, compose(a, a)), b);
    Permutation rhs = Permutation::identity(t.live_count());
    for (int i = 0; i < n - 2; ++i) rhs = compose(rhs, a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("a^n equals b^n, central of order 2, in the finite covers") {
  for (int n : {3, 4, 5}) {
    CosetTable t = enumerate(dn_bar_presentation(n), {});
    Permutation a = coset_action(t, 0), b = coset_action(t, 1);
    Permutation an = Permutation::identity(t.live_count());
    Permutation bn = an;
    for (int i = 0; i < n; ++i) {
      an = compose(an, a);
      bn = compose(bn, b);
    }
    CHECK(an == bn);
    CHECK(element_order(an) == 2);
    CHECK(compose(an, a) == compose(a, an));
    CHECK(compose(an, b) == compose(b, an));
    CHECK(element_order(a) == 2ULL * n);
  }
}

TEST_CASE("genus formula") {
  CHECK(genus(168, 7) == Rational{3, 1});
  CHECK(genus(168, 7).is_integer());
  CHECK(genus(604800, 7) == Rational{7201, 1});
  CHECK(genus(60, 5) == Rational{0, 1});
  CHECK(genus(660, 11) == Rational{26, 1});
  // a non-integer example: formula on a mismatched order
  CHECK_FALSE(genus(100, 7).is_integer());
}

TEST_CASE("divisibility by 12n") {
  CHECK(check_divisibility(168, 7));
  CHECK(check_divisibility(660, 11));
  CHECK(check_divisibility(604800, 7));
  CHECK_FALSE(check_divisibility(60, 25));
  CHECK(coprime_235(7));
  CHECK_FALSE(coprime_235(10));
  CHECK_FALSE(coprime_235(9));
}

TEST_CASE("surface invariants") {
  auto s = surface_invariants(168, 7);
  REQUIRE(s.has_value());
  CHECK(s->faces == 56);
  CHECK(s->edges == 84);
  CHECK(s->vertices == 24);
  CHECK(s->euler_characteristic == -4);
  CHECK(s->genus_value == Rational{3, 1});
  // chi = F (6 - n) / (2n)
  CHECK(s->euler_characteristic * 2 * 7 == s->faces * (6 - 7));
  CHECK(s->vertices - s->edges + s->faces == s->euler_characteristic);

  CHECK_FALSE(surface_invariants(100, 7).has_value());
}
