#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vdg/zlinalg.hpp"

using namespace vdg;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

void check_audit(const IntMatrix& m, const SmithResult& snf) {
  // U m V is diagonal with the invariant factors, transforms unimodular
  IntMatrix d = multiply(multiply(snf.row_transform, m), snf.col_transform);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i == j && i < snf.rank)
        CHECK(d.at(i, j) == snf.diagonal[i]);
      else
        CHECK(d.at(i, j) == 0);
    }
  BigInt du = determinant(snf.row_transform);
  BigInt dv = determinant(snf.col_transform);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t i = 0; i + 1 < snf.diagonal.size(); ++i)
    CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
  auto id2 = IntMatrix::identity(2);
  SmithResult s1 = smith_normal_form(id2);
  CHECK(s1.diagonal == std::vector<BigInt>{1, 1});
  check_audit(id2, s1);

  // gcd of entries is 2 and the determinant is -8, so the invariant
  // factors are 2 and 4
  auto m = from_rows({{2, 4}, {6, 8}});
  SmithResult s2 = smith_normal_form(m);
  CHECK(s2.diagonal == std::vector<BigInt>{2, 4});
  check_audit(m, s2);

  IntMatrix zero(3, 2);
  SmithResult s3 = smith_normal_form(zero);
  CHECK(s3.diagonal.empty());
  CHECK(s3.rank == 0);
  check_audit(zero, s3);
}

TEST_CASE("smith normal form property suite") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    std::size_t r = 1 + rng() % 6;
    std::size_t c = 1 + rng() % 6;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = static_cast<long long>(rng() % 101) - 50;
    SmithResult snf = smith_normal_form(m);
    check_audit(m, snf);
  }
}

TEST_CASE("abelianization of braid and Von Dyck style presentations") {
  // B3: exponent matrix [[1, -1]], one invariant factor 1
  Presentation b3 = parse_presentation("< a,b | a*b*a=b*a*b >");
  AbelianInvariants ab3 = abelianization(b3);
  CHECK(ab3.torsion.empty());
  CHECK(ab3.free_rank == 1);
  CHECK_FALSE(ab3.trivial());

  // A1(7) with W=(ab^-1)^4 is perfect
  Presentation a17 = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b^5, (a*b^-1)^4 >");
  CHECK(abelianization(a17).trivial());

  // exponent matrix [[1,-1],[2,-6]] has SNF diag 1, 4
  Presentation dbar10 = parse_presentation("< a,b | a*b*a=b*a*b, a*b^2*a=b^8 >");
  AbelianInvariants ab10 = abelianization(dbar10);
  CHECK(ab10.free_rank == 0);
  CHECK(ab10.torsion == std::vector<BigInt>{4});
  CHECK(ab10.torsion_order() == 4);
}

TEST_CASE("D_n abelianization is cyclic of order gcd(n, 6)") {
  for (int n = 3; n <= 14; ++n) {
    Presentation dn = parse_presentation(
        "< a,b | a*b*a=b*a*b, a*b^2*a=b^" + std::to_string(n - 2) + ", a^" + std::to_string(n) +
        " >");
    AbelianInvariants inv = abelianization(dn);
    long long g = std::gcd(n, 6);
    CHECK(inv.free_rank == 0);
    if (g == 1) {
      CHECK(inv.torsion.empty());
    } else {
      REQUIRE(inv.torsion.size() == 1);
      CHECK(inv.torsion[0] == g);
    }
  }
}

TEST_CASE("free groups abelianize to free abelian groups") {
  Presentation f2 = parse_presentation("< a,b | >");
  AbelianInvariants inv = abelianization(f2);
  CHECK(inv.free_rank == 2);
  CHECK(inv.torsion.empty());
}
