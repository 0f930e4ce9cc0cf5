#include "k3ord/linalg.hpp"

#include <algorithm>

namespace k3ord {
namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Position {
  std::size_t row;
  std::size_t col;
};

// Minimal nonzero |entry| in the trailing submatrix starting at (t, t); row-major first hit wins.
std::optional<Position> smallest_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer v = abs(d(i, j));
      if (!best || v < best_abs) {
        best = Position{i, j};
        best_abs = v;
      }
    }
  return best;
}

void require_square(const IntMatrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorCode::NonSquare, std::string(what) + " requires a square matrix");
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(D.rows(), D.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm snf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool found_pivot = false;
    while (true) {
      auto piv = smallest_pivot(d, t);
      if (!piv) break;
      found_pivot = true;
      d.swap_rows(t, piv->row);
      s.U.swap_rows(t, piv->row);
      d.swap_cols(t, piv->col);
      s.V.swap_cols(t, piv->col);

      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) residue = true;
      }
      if (residue) continue;

      // Enforce divisibility: pull an offending row into row t and go around again.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_pivot) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
    ++s.rank;
  }
  return s;
}

HermiteForm hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteForm h{a, IntMatrix::identity(m), 0};
  IntMatrix& H = h.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    bool pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = row; r < m; ++r)
        if (H(r, col) != 0 && (!best || abs(H(r, col)) < abs(H(*best, col)))) best = r;
      if (!best) break;
      pivot = true;
      H.swap_rows(row, *best);
      h.U.swap_rows(row, *best);
      bool residue = false;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (H(r, col) == 0) continue;
        Integer q = H(r, col) / H(row, col);
        H.add_row_multiple(r, row, -q);
        h.U.add_row_multiple(r, row, -q);
        if (H(r, col) != 0) residue = true;
      }
      if (!residue) break;
    }
    if (!pivot) continue;
    if (H(row, col) < 0) {
      H.negate_row(row);
      h.U.negate_row(row);
    }
    for (std::size_t r = 0; r < row; ++r) {
      Integer q = floor_div(H(r, col), H(row, col));
      if (q == 0) continue;
      H.add_row_multiple(r, row, -q);
      h.U.add_row_multiple(r, row, -q);
    }
    ++row;
  }
  h.rank = row;
  return h;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteForm h = hnf(a.transpose());
  const std::size_t k = n - h.rank;
  if (k == 0) return IntMatrix(n, 0);
  // Trailing rows of U annihilate A^T; they span a saturated kernel since U is unimodular.
  IntMatrix basis = h.U.block(h.rank, 0, k, n);
  return hnf(basis).H.transpose();
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  SmithForm s = snf(a);
  IntVector c = s.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      const Integer& di = s.D(i, i);
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

Integer det(const IntMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  RatMatrix m = to_rational(a);
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(r, col);
      m.add_row_multiple(i, r, -f);
    }
    ++r;
  }
  return r;
}

bool is_symmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Integer d = det(m);
  return d == 1 || d == -1;
}

Signature signature(const IntMatrix& gram) {
  require_square(gram, "signature");
  if (!is_symmetric(gram)) throw Error(ErrorCode::NotSymmetric, "signature requires a symmetric Gram matrix");
  RatMatrix g = to_rational(gram);
  const std::size_t n = g.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (g(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && g(k, j) == 0) ++j;
      if (j == n) {
        ++sig.zero;
        continue;
      }
      // Congruence by row/column j into k. New diagonal is g_jj +/- 2 g_kj, so one sign works.
      Rational plus = g(j, j) + 2 * g(k, j);
      Rational step = plus != 0 ? Rational(1) : Rational(-1);
      g.add_row_multiple(k, j, step);
      g.add_col_multiple(k, j, step);
    }
    const Rational pivot = g(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g(i, k) == 0) continue;
      Rational f = g(i, k) / pivot;
      g.add_row_multiple(i, k, -f);
      g.add_col_multiple(i, k, -f);
    }
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse requires a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(col, p);
    inv.swap_rows(col, p);
    Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      a.add_row_multiple(i, col, -f);
      inv.add_row_multiple(i, col, -f);
    }
  }
  return inv;
}

}  // namespace k3ord
