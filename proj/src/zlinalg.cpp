#include "zlinalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "error.hpp"

namespace tgf {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) {
    throw Error(ErrorCode::kDimensionMismatch, what);
  }
}

void require_automorphism(const IntMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kNotAutomorphism, "matrix is not square");
  }
  BigInt det = determinant(a);
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::kNotAutomorphism,
                "matrix determinant is " + det.str() +
                    "; an automorphism of Z^n needs determinant +1 or -1");
  }
}

std::vector<BigInt> apply(const IntMatrix& m, const std::vector<BigInt>& v) {
  require(v.size() == m.cols(), "vector length does not match matrix columns");
  std::vector<BigInt> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      acc += m.at(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  require(entries_.size() == rows * cols,
          "entry count does not match matrix dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "matrix difference dimension mismatch");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    out.entries_[i] = a.entries()[i] - b.entries()[i];
  }
  return out;
}

BigInt determinant(const IntMatrix& a) {
  require(a.is_square(), "determinant needs a square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == k) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(k, j), m.at(swap_row, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

// Smallest non-zero |entry| of the trailing submatrix, row-major tie break.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t* pi,
                std::size_t* pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) {
        continue;
      }
      BigInt a = boost::multiprecision::abs(d.at(i, j));
      if (!found || a < best) {
        found = true;
        best = std::move(a);
        *pi = i;
        *pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(d.at(r1, j), d.at(r2, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(u.at(r1, j), u.at(r2, j));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(d.at(i, c1), d.at(i, c2));
    for (std::size_t i = 0; i < n; ++i) std::swap(v.at(i, c1), v.at(i, c2));
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < n; ++j) d.at(r, j) = -d.at(r, j);
    for (std::size_t j = 0; j < m; ++j) u.at(r, j) = -u.at(r, j);
  };
  auto row_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < n; ++j) d.at(dst, j) -= q * d.at(src, j);
    for (std::size_t j = 0; j < m; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < m; ++i) d.at(i, dst) -= q * d.at(i, src);
    for (std::size_t i = 0; i < n; ++i) v.at(i, dst) -= q * v.at(i, src);
  };
  auto row_add = [&](std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < n; ++j) d.at(dst, j) += d.at(src, j);
    for (std::size_t j = 0; j < m; ++j) u.at(dst, j) += u.at(src, j);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, &pi, &pj)) {
      break;  // trailing submatrix is zero
    }
    for (;;) {
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (d.at(t, t) < 0) {
        negate_row(t);
      }
      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        BigInt q = d.at(i, t) / d.at(t, t);
        if (q != 0) row_sub(i, t, q);
        if (d.at(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        BigInt q = d.at(t, j) / d.at(t, t);
        if (q != 0) col_sub(j, t, q);
        if (d.at(t, j) != 0) cleared = false;
      }
      for (std::size_t i = t + 1; i < m && cleared; ++i) {
        if (d.at(i, t) != 0) cleared = false;
      }
      if (!cleared) {
        if (!find_pivot(d, t, &pi, &pj)) {
          throw Error(ErrorCode::kInternal, "pivot vanished during reduction");
        }
        continue;
      }
      // Divisibility: every remaining entry must be a multiple of the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n && divisible; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_add(t, i);
            divisible = false;
          }
        }
      }
      if (divisible) {
        break;
      }
      if (!find_pivot(d, t, &pi, &pj)) {
        throw Error(ErrorCode::kInternal, "pivot vanished during reduction");
      }
    }
  }

  // Self-check; a failure here is a bug, not bad input.
  if (!(u * a * v == d)) {
    throw Error(ErrorCode::kInternal, "smith normal form bookkeeping failed");
  }
  const BigInt du = determinant(u);
  const BigInt dv = determinant(v);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
    throw Error(ErrorCode::kInternal, "transform matrices are not unimodular");
  }
  return {std::move(u), std::move(d), std::move(v)};
}

CokerInvariants coker_invariants(const IntMatrix& a) {
  require(a.is_square(), "cokernel invariants need a square matrix");
  const SnfResult s = snf(a);
  CokerInvariants out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const BigInt& di = s.d.at(i, i);
    if (di == 0) {
      ++out.free_rank;
    } else if (di > 1) {
      out.torsion.push_back(di);
    }
  }
  return out;
}

ReidemeisterNumber reidemeister_of_matrix(const IntMatrix& a) {
  require_automorphism(a);
  const IntMatrix b = IntMatrix::identity(a.rows()) - a;
  const BigInt det = determinant(b);
  if (det == 0) {
    return {true, 0};
  }
  ReidemeisterNumber out{false, boost::multiprecision::abs(det)};
  // Cross-check against the product of invariant factors of I - a.
  const SnfResult s = snf(b);
  BigInt prod = 1;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    prod *= s.d.at(i, i);
  }
  if (prod != out.count) {
    throw Error(ErrorCode::kInternal,
                "invariant factor product disagrees with |det(I - a)|");
  }
  return out;
}

bool in_image(const IntMatrix& a, const std::vector<BigInt>& v) {
  require(v.size() == a.rows(), "vector length does not match matrix rows");
  const SnfResult s = snf(a);
  const std::vector<BigInt> w = apply(s.u, v);
  const std::size_t diag = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const BigInt di = i < diag ? s.d.at(i, i) : BigInt(0);
    if (di == 0) {
      if (w[i] != 0) {
        return false;
      }
    } else if (w[i] % di != 0) {
      return false;
    }
  }
  return true;
}

bool twisted_equiv_abelian(const std::vector<BigInt>& u,
                           const std::vector<BigInt>& v, const IntMatrix& a) {
  require_automorphism(a);
  require(u.size() == a.rows() && v.size() == a.rows(),
          "vector length does not match matrix size");
  std::vector<BigInt> diff(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    diff[i] = u[i] - v[i];
  }
  return in_image(IntMatrix::identity(a.rows()) - a, diff);
}

std::vector<BigInt> class_rep(const std::vector<BigInt>& v,
                              const IntMatrix& a) {
  require_automorphism(a);
  require(v.size() == a.rows(), "vector length does not match matrix size");
  const SnfResult s = snf(IntMatrix::identity(a.rows()) - a);
  std::vector<BigInt> w = apply(s.u, v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BigInt& di = s.d.at(i, i);
    if (di > 0) {
      w[i] = ((w[i] % di) + di) % di;
    }
  }
  return w;
}

}  // namespace tgf
