#pragma once

#include <cstddef>
#include <vector>

#include "bigint.hpp"

namespace tgf {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<BigInt>& entries() const { return entries_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> entries_;
};

// u * a * v == d with u, v unimodular and d diagonal, non-negative,
// each diagonal entry dividing the next.
struct SnfResult {
  IntMatrix u, d, v;
};

// Deterministic Smith normal form: the pivot is always the smallest
// non-zero entry by absolute value, ties broken in row-major order.
SnfResult snf(const IntMatrix& a);

// Exact determinant (Bareiss), square input.
BigInt determinant(const IntMatrix& a);

struct CokerInvariants {
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  std::size_t free_rank = 0;    // number of zero invariant factors
};
CokerInvariants coker_invariants(const IntMatrix& a);

// Reidemeister number of the automorphism of Z^n given by a:
// infinite when det(I - a) == 0, otherwise |det(I - a)|.
struct ReidemeisterNumber {
  bool infinite = false;
  BigInt count;  // meaningful only when !infinite
  bool operator==(const ReidemeisterNumber& other) const = default;
};
ReidemeisterNumber reidemeister_of_matrix(const IntMatrix& a);

// Does v lie in the image of a (as a map Z^cols -> Z^rows)?
bool in_image(const IntMatrix& a, const std::vector<BigInt>& v);

// u ~ v under the twisted conjugacy of Z^n by a, i.e. u - v in Im(I - a).
bool twisted_equiv_abelian(const std::vector<BigInt>& u,
                           const std::vector<BigInt>& v, const IntMatrix& a);

// Complete invariant of the twisted class of v: coordinates of U*v with
// respect to snf(I - a), reduced modulo the non-zero invariant factors.
std::vector<BigInt> class_rep(const std::vector<BigInt>& v, const IntMatrix& a);

}  // namespace tgf
