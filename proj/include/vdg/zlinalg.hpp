#pragma once

// Exact integer linear algebra: Smith normal form with unimodular
// transforms, and presentation abelianization on top of it.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vdg/words.hpp"

namespace vdg {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> entries_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

// Laplace expansion; fine for the small transform matrices this library
// audits.
inline BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cj = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cj++) = m.at(i, k);
      }
    }
    BigInt term = m.at(0, j) * determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

struct SmithResult {
  std::vector<BigInt> diagonal;  // nonzero invariant factors, d[i] | d[i+1]
  std::size_t rank = 0;
  IntMatrix row_transform;  // U, rows x rows
  IntMatrix col_transform;  // V, cols x cols; U * m * V is diagonal
};

// Pivoting by minimal nonzero absolute value; transforms returned for
// audit.
inline SmithResult smith_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t rows = m.rows(), cols = m.cols();
  SmithResult res{{}, 0, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& u = res.row_transform;
  IntMatrix& v = res.col_transform;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols; ++j) m.at(dst, j) += k * m.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += k * u.at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows; ++i) m.at(i, dst) += k * m.at(i, src);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += k * v.at(i, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // minimal nonzero |entry| in the trailing submatrix
    std::size_t pi = t, pj = t;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (m.at(i, j) == 0) continue;
        BigInt a = abs(m.at(i, j));
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / m.at(t, t);
        add_row(i, t, -q);
        if (m.at(i, t) != 0) {
          swap_rows(t, i);  // remainder is smaller; continue reducing
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        add_col(j, t, -q);
        if (m.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce the divisibility chain: pivot must divide everything left
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            add_row(t, i, 1);
            clean = false;
          }
    }
    if (m.at(t, t) < 0) negate_row(t);
    ++t;
  }
  res.rank = t;
  for (std::size_t i = 0; i < t; ++i) res.diagonal.push_back(m.at(i, i));
  return res;
}

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // entries >= 2, each dividing the next
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }

  // order of the torsion part (the full group order when free_rank == 0)
  BigInt torsion_order() const {
    BigInt o = 1;
    for (const BigInt& d : torsion) o *= d;
    return o;
  }
};

// Invariants of the quotient of the free abelian group on p's generators
// by the relator exponent-sum lattice. Trivial iff the group is perfect.
inline AbelianInvariants abelianization(const Presentation& p) {
  std::size_t ngens = p.generator_count();
  std::size_t nrels = p.relators().size();
  IntMatrix m(nrels, ngens);
  for (std::size_t r = 0; r < nrels; ++r) {
    auto sums = exponent_sums(p.relators()[r], ngens);
    for (std::size_t g = 0; g < ngens; ++g) m.at(r, g) = sums[g];
  }
  SmithResult snf = smith_normal_form(m);
  AbelianInvariants inv;
  inv.free_rank = ngens - snf.rank;
  for (const BigInt& d : snf.diagonal)
    if (d >= 2) inv.torsion.push_back(d);
  return inv;
}

}  // namespace vdg
