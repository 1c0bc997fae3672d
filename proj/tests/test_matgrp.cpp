#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vdg/gf.hpp"
#include "vdg/psl2.hpp"

using namespace vdg;

TEST_CASE("make_field basics") {
  Field f7 = make_field(7);
  CHECK(f7.characteristic() == 7);
  CHECK(f7.degree() == 1);
  CHECK(f7.modulus() == std::vector<std::uint32_t>{0, 1});

  Field f8 = make_field(8);
  CHECK(f8.characteristic() == 2);
  CHECK(f8.degree() == 3);
  // oracle: brute-force the lexicographically smallest irreducible cubic
  // over GF(2); candidates with nonzero constant term are x^3+1, x^3+x+1,
  // x^3+x^2+1, x^3+x^2+x+1
  std::vector<std::vector<std::uint32_t>> candidates = {
      {1, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}};
  std::vector<std::uint32_t> smallest;
  for (const auto& c : candidates) {
    bool has_root = false;
    for (std::uint32_t x = 0; x < 2; ++x) {
      std::uint32_t v = (c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x) % 2;
      if (v == 0) has_root = true;
    }
    if (!has_root) {  // degree 3: irreducible iff no root
      smallest = c;
      break;
    }
  }
  CHECK(f8.modulus() == smallest);
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1

  CHECK_THROWS_AS(make_field(12), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1), std::invalid_argument);
}

TEST_CASE("field axioms") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    Field f = make_field(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
    }
    std::mt19937 rng(q);
    std::size_t samples = q <= 9 ? 0 : 200;
    auto test_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
    };
    if (q <= 9) {
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          for (std::uint32_t c = 0; c < q; ++c) test_triple(a, b, c);
    } else {
      for (std::size_t s = 0; s < samples; ++s)
        test_triple(rng() % q, rng() % q, rng() % q);
    }
    CHECK(f.add(0, 5 % q) == 5 % q);
    CHECK(f.mul(1, 5 % q) == 5 % q);
  }
}

TEST_CASE("psl2 orders") {
  CHECK(psl2_order(7) == 168);
  CHECK(psl2_order(2) == 6);
  CHECK(psl2_order(3) == 12);
  CHECK(psl2_order(13) == 1092);
  CHECK(psl2_order(4) == 60);
  CHECK(psl2_order(5) == 60);
  CHECK(psl2_order(32) == 32736);
  CHECK(psl2_order(49) == 58800);
  CHECK_THROWS_AS(psl2_order(12), std::invalid_argument);
}

TEST_CASE("element lists have the right size") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Field f = make_field(q);
    CHECK(psl2_elements(f).size() == psl2_order(q));
  }
}

TEST_CASE("projective line action") {
  Field f5 = make_field(5);
  ProjMatrix id{1, 0, 0, 1};
  CHECK(projective_line_action(f5, id) == Permutation::identity(6));

  // diag(2, 2^-1) fixes [0:1] and [1:0]
  ProjMatrix diag = canonicalize(f5, 2, 0, 0, f5.inv(2));
  Permutation pd = projective_line_action(f5, diag);
  CHECK(pd[0] == 0);
  CHECK(pd[1] == 1);
  CHECK_FALSE(pd.is_identity());

  ProjMatrix singular{1, 0, 0, 0};
  CHECK_THROWS_AS(projective_line_action(f5, ProjMatrix{1, 2, 2, 4}), std::domain_error);
}

TEST_CASE("projective action is a homomorphism") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 8u, 9u}) {
    Field f = make_field(q);
    auto elems = psl2_elements(f);
    std::mt19937 rng(q * 7);
    std::size_t trials = q <= 3 ? elems.size() * elems.size() : 400;
    for (std::size_t s = 0; s < trials; ++s) {
      const ProjMatrix& m1 = elems[q <= 3 ? s / elems.size() : rng() % elems.size()];
      const ProjMatrix& m2 = elems[q <= 3 ? s % elems.size() : rng() % elems.size()];
      Permutation lhs = projective_line_action(f, multiply(f, m1, m2));
      Permutation rhs = compose(projective_line_action(f, m1), projective_line_action(f, m2));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("epimorphism search finds A1(5) over GF(5) and GF(4)") {
  Presentation p = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b^3, a^5 >");
  for (std::uint32_t q : {5u, 4u}) {
    EpiSearchResult r = find_epimorphism(p, q);
    REQUIRE(r.status == EpiSearchResult::Status::Found);
    Field f = make_field(q);
    PermutationGroup image = schreier_sims(
        {projective_line_action(f, r.image_a), projective_line_action(f, r.image_b)});
    CHECK(image.order() == psl2_order(q));
    CHECK(is_simple(image, DeterministicMode{}).kind == SimplicityVerdict::Kind::Simple);
  }
}

TEST_CASE("epimorphism search proves A1(7) has no PSL(2,5) quotient pair") {
  Presentation p = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b^5, (a*b^-1)^4 >");

  // oracle: brute force over all 60 x 60 projective pairs
  Field f = make_field(5);
  auto elems = psl2_elements(f);
  REQUIRE(elems.size() == 60);
  bool any = false;
  for (const ProjMatrix& a : elems) {
    ProjMatrix ainv = inverse(f, a);
    for (const ProjMatrix& b : elems) {
      ProjMatrix binv = inverse(f, b);
      bool ok = true;
      for (const Word& r : p.relators()) {
        ProjMatrix val{1, 0, 0, 1};
        for (Letter l : r.letters()) {
          const ProjMatrix& m = l.gen == 0 ? (l.sign > 0 ? a : ainv) : (l.sign > 0 ? b : binv);
          val = multiply(f, val, m);
        }
        if (!is_scalar(val)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // a relator-satisfying pair must still fail to generate PSL(2,5)
        PermutationGroup image = schreier_sims(
            {projective_line_action(f, a), projective_line_action(f, b)});
        if (image.order() == 60) any = true;
      }
    }
  }
  CHECK_FALSE(any);

  EpiSearchResult r = find_epimorphism(p, 5);
  CHECK(r.status == EpiSearchResult::Status::ProvenNone);
}

TEST_CASE("epimorphism search respects its budget") {
  Presentation p = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b^3, a^5 >");
  EpiSearchResult r = find_epimorphism(p, 131);
  CHECK(r.status == EpiSearchResult::Status::BudgetExhausted);
  CHECK_THROWS_AS(find_epimorphism(parse_presentation("< a | a^2 >"), 5, {}),
                  std::invalid_argument);
}

TEST_CASE("epimorphism for A1(7) over GF(7) yields the 168-element image") {
  Presentation p = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b^5, (a*b^-1)^4 >");
  EpiSearchResult r = find_epimorphism(p, 7);
  REQUIRE(r.status == EpiSearchResult::Status::Found);
  Field f = make_field(7);
  PermutationGroup image = schreier_sims(
      {projective_line_action(f, r.image_a), projective_line_action(f, r.image_b)});
  CHECK(image.degree() == 8);
  CHECK(image.order() == 168);
}
