#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "vdg/perm_group.hpp"
#include "vdg/zlinalg.hpp"
#include "vdg/todd_coxeter.hpp"

using namespace vdg;

namespace {

std::vector<Permutation> regular_gens(const char* text) {
  Presentation p = parse_presentation(text);
  CosetTable t = enumerate(p, {});
  std::vector<Permutation> gens;
  for (std::uint32_t g = 0; g < p.generator_count(); ++g) gens.push_back(coset_action(t, g));
  return gens;
}

Permutation word_image(const std::vector<Permutation>& gens, const Word& w) {
  Permutation r = Permutation::identity(gens[0].degree());
  for (Letter l : w.letters()) {
    const Permutation& g = gens[l.gen];
    r = compose(r, l.sign > 0 ? g : g.inverse());
  }
  return r;
}

// Brute-force closure oracle: every element of the generated group.
std::vector<Permutation> all_elements(const std::vector<Permutation>& gens) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Permutation> out = {Permutation::identity(gens[0].degree())};
  seen.insert(out[0].images());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Permutation& g : gens) {
      Permutation n = compose(out[head], g);
      if (seen.insert(n.images()).second) out.push_back(n);
    }
  }
  return out;
}

Permutation cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> cycle) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  auto it = cycle.begin();
  std::uint32_t first = *it;
  std::uint32_t prev = first;
  ++it;
  for (; it != cycle.end(); ++it) {
    img[prev] = *it;
    prev = *it;
  }
  img[prev] = first;
  return Permutation(img);
}

}  // namespace

TEST_CASE("schreier_sims on the icosahedral regular action") {
  auto gens = regular_gens("< x,y | x^2, y^3, (x*y)^5 >");
  PermutationGroup g = schreier_sims(gens);
  CHECK(g.order() == 60);
  CHECK(g.regular_certified());
  CHECK(g.membership(compose(gens[0], gens[1])));
}

TEST_CASE("schreier_sims on identity and S4") {
  PermutationGroup triv = schreier_sims({Permutation::identity(5)});
  CHECK(triv.order() == 1);
  CHECK(triv.membership(Permutation::identity(5)));

  auto c4 = cycle_perm(4, {0, 1, 2, 3});
  auto t2 = cycle_perm(4, {0, 1});
  PermutationGroup s4 = schreier_sims({c4, t2});
  CHECK(s4.order() == all_elements({c4, t2}).size());
  CHECK(s4.order() == 24);
  CHECK_FALSE(s4.regular_certified());
}

TEST_CASE("membership agrees with brute force on S4 and A4") {
  auto c4 = cycle_perm(4, {0, 1, 2, 3});
  auto t2 = cycle_perm(4, {0, 1});
  PermutationGroup s4 = schreier_sims({c4, t2});
  auto c3 = cycle_perm(4, {0, 1, 2});
  auto v = compose(cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3}));
  PermutationGroup a4 = schreier_sims({c3, v});
  CHECK(a4.order() == 12);
  auto elems = all_elements({c3, v});
  int inside = 0;
  for (const Permutation& e : all_elements({c4, t2})) {
    bool brute = std::find(elems.begin(), elems.end(), e) != elems.end();
    CHECK(a4.membership(e) == brute);
    if (brute) ++inside;
  }
  CHECK(inside == 12);
}

TEST_CASE("bsgs invariant: transversal product equals order") {
  auto gens = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^3 >");  // order 120
  PermutationGroup g = schreier_sims(gens);
  CHECK(g.order() == 120);
  for (const Permutation& gen : gens) CHECK(g.membership(gen));
  // a point off the orbit structure: any non-member
  CHECK_FALSE(g.membership(cycle_perm(120, {0, 1})));
}

TEST_CASE("element orders") {
  CHECK(element_order(Permutation::identity(7)) == 1);

  // image of a in the order-60 factor of D(2,3,10) has order 5
  auto gens60 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^8, (a*b^-2)^3 >");
  CHECK(gens60[0].degree() == 60);
  CHECK(element_order(gens60[0]) == 5);

  // image of a in the Schur cover of A1(7) has order 14
  auto gens336 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=(a^2*b^-2)^3*b^5 >");
  CHECK(gens336[0].degree() == 336);
  CHECK(element_order(gens336[0]) == 14);
}

TEST_CASE("normal closure") {
  auto gens = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=(a^2*b^-2)^3*b^5 >");
  PermutationGroup g = schreier_sims(gens);
  REQUIRE(g.order() == 336);

  PermutationGroup triv = normal_closure(g, {Permutation::identity(336)});
  CHECK(triv.order() == 1);

  // closure of a^7 is the order-2 center; oracle = brute force over all
  // 336 elements
  Permutation a7 = word_image(gens, power(Word::generator(0), 7));
  auto elems = all_elements(gens);
  std::set<std::vector<std::uint32_t>> closure_oracle;
  std::vector<Permutation> frontier = {a7};
  closure_oracle.insert(Permutation::identity(336).images());
  closure_oracle.insert(a7.images());
  for (std::size_t h = 0; h < frontier.size(); ++h) {
    for (const Permutation& e : elems) {
      Permutation c = compose(compose(e.inverse(), frontier[h]), e);
      if (closure_oracle.insert(c.images()).second) frontier.push_back(c);
    }
    for (const Permutation& f2 : std::vector<Permutation>(frontier)) {
      Permutation prod = compose(frontier[h], f2);
      if (closure_oracle.insert(prod.images()).second) frontier.push_back(prod);
    }
  }
  CHECK(closure_oracle.size() == 2);

  PermutationGroup n = normal_closure(g, {a7});
  CHECK(n.order() == 2);

  // simple group: closure of any non-identity element is everything
  auto gens60 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^3, a^5 >");
  PermutationGroup simple60 = schreier_sims(gens60);
  CHECK(normal_closure(simple60, {gens60[1]}).order() == 60);

  // normality: conjugates of closure generators lie in the closure
  for (const Permutation& ngen : n.generators())
    for (const Permutation& ggen : g.generators())
      CHECK(n.membership(compose(compose(ggen.inverse(), ngen), ggen)));
}

TEST_CASE("derived subgroup") {
  PermutationGroup c5 = schreier_sims({cycle_perm(5, {0, 1, 2, 3, 4})});
  CHECK(derived_subgroup(c5).order() == 1);

  auto gens168 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^5, (a*b^-1)^4 >");
  PermutationGroup g168 = schreier_sims(gens168);
  CHECK(derived_subgroup(g168).order() == 168);  // perfect

  // binary tetrahedral group: derived subgroup is the quaternion group
  auto gens24 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b >");
  REQUIRE(gens24[0].degree() == 24);
  PermutationGroup g24 = schreier_sims(gens24);
  // oracle: brute-force commutator closure
  auto elems = all_elements(gens24);
  std::vector<Permutation> comms;
  for (const Permutation& x : elems)
    for (const Permutation& y : elems) {
      Permutation c = compose(compose(compose(x.inverse(), y.inverse()), x), y);
      if (std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
    }
  CHECK(all_elements(comms).size() == 8);
  CHECK(derived_subgroup(g24).order() == 8);
}

TEST_CASE("center") {
  auto gens60 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^3, a^5 >");
  CHECK(center(schreier_sims(gens60)).order() == 1);

  // binary icosahedral: center of order 2 generated by the image of a^5
  auto gens120 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^3 >");
  PermutationGroup g120 = schreier_sims(gens120);
  PermutationGroup z = center(g120);
  CHECK(z.order() == 2);
  Permutation a5 = word_image(gens120, power(Word::generator(0), 5));
  CHECK_FALSE(a5.is_identity());
  CHECK(z.membership(a5));

  PermutationGroup c6 = schreier_sims({cycle_perm(6, {0, 1, 2, 3, 4, 5})});
  CHECK(center(c6).order() == 6);
}

TEST_CASE("is_simple deterministic") {
  auto gens60 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^3, a^5 >");
  SimplicityVerdict v60 = is_simple(schreier_sims(gens60), DeterministicMode{});
  CHECK(v60.kind == SimplicityVerdict::Kind::Simple);

  auto gens336 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=(a^2*b^-2)^3*b^5 >");
  SimplicityVerdict v336 = is_simple(schreier_sims(gens336), DeterministicMode{});
  CHECK(v336.kind == SimplicityVerdict::Kind::NotSimple);
  CHECK(v336.witness_order == 2);

  PermutationGroup c7 = schreier_sims({cycle_perm(7, {0, 1, 2, 3, 4, 5, 6})});
  CHECK(is_simple(c7, DeterministicMode{}).kind == SimplicityVerdict::Kind::Simple);

  PermutationGroup c6 = schreier_sims({cycle_perm(6, {0, 1, 2, 3, 4, 5})});
  SimplicityVerdict v6 = is_simple(c6, DeterministicMode{});
  CHECK(v6.kind == SimplicityVerdict::Kind::NotSimple);

  // non-regular chain: S4 has the Klein subgroup as witness
  auto c4 = cycle_perm(4, {0, 1, 2, 3});
  auto t2 = cycle_perm(4, {0, 1});
  SimplicityVerdict vs4 = is_simple(schreier_sims({c4, t2}), DeterministicMode{});
  CHECK(vs4.kind == SimplicityVerdict::Kind::NotSimple);

  CHECK_THROWS_AS(is_simple(schreier_sims(gens60), DeterministicMode{30}),
                  DeterministicCapExceeded);
}

TEST_CASE("is_simple monte carlo never contradicts deterministic Simple") {
  auto gens60 = regular_gens("< a,b | a*b*a=b*a*b, a*b^2*a=b^3, a^5 >");
  PermutationGroup g = schreier_sims(gens60);
  SimplicityVerdict mc = is_simple(g, MonteCarloMode{200, 12345});
  CHECK(mc.kind == SimplicityVerdict::Kind::ProbablySimple);
  CHECK(mc.trials == 200);
  CHECK(mc.seed == 12345);

  // reproducibility at fixed seed
  SimplicityVerdict mc2 = is_simple(g, MonteCarloMode{200, 12345});
  CHECK(mc2.kind == mc.kind);
}

TEST_CASE("quotient by central element") {
  Presentation cover7 =
      parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=(a^2*b^-2)^3*b^5 >");
  CHECK(quotient_by_central(cover7, power(Word::generator(0), 7)) == 168);

  Presentation dbar3 = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b >");
  CHECK(quotient_by_central(dbar3, power(Word::generator(0), 3)) == 12);
  CHECK(quotient_by_central(dbar3, Word{}) == 24);
}

TEST_CASE("derived subgroup order times abelianization order is the group order") {
  // cross-module consistency with the Smith-form abelianization
  for (const char* text :
       {"< a,b | a*b*a=b*a*b, a*b^2*a=b >",        // order 24, abelianization Z3
        "< a,b | a*b*a=b*a*b, a*b^2*a=b^2 >",      // order 48, abelianization Z2
        "< a,b | a*b*a=b*a*b, a*b^2*a=b^3 >",      // order 120, perfect
        "< x,y | x^2, y^3, (x*y)^4 >"}) {
    Presentation pres = parse_presentation(text);
    CosetTable t = enumerate(pres, {});
    std::vector<Permutation> gens;
    for (std::uint32_t g = 0; g < pres.generator_count(); ++g) gens.push_back(coset_action(t, g));
    PermutationGroup grp = schreier_sims(gens);
    AbelianInvariants inv = abelianization(pres);
    REQUIRE(inv.free_rank == 0);
    CHECK(derived_subgroup(grp).order() * inv.torsion_order() == BigInt(t.live_count()));
  }
}

TEST_CASE("element index round-trips on S4") {
  auto c4 = cycle_perm(4, {0, 1, 2, 3});
  auto t2 = cycle_perm(4, {0, 1});
  PermutationGroup s4 = schreier_sims({c4, t2});
  ElementIndex idx(s4);
  REQUIRE(idx.size() == 24);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t e = 0; e < idx.size(); ++e) {
    Permutation p = idx.materialize(e);
    CHECK(seen.insert(p.images()).second);
    CHECK(s4.membership(p));
    auto tuple = idx.tuple_of(e);
    for (std::uint32_t pt = 0; pt < 4; ++pt) CHECK(idx.eval(tuple, pt) == p[pt]);
  }
  CHECK(idx.materialize(0).is_identity());
}
