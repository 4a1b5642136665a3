#include "linecrit/exactint.hpp"

#include <algorithm>
#include <stdexcept>

namespace linecrit {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// row dst += q * row src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

// col dst += q * col src
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

// Quotient rounded toward minus infinity; b must be positive.
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw std::invalid_argument("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const IntVec& v) {
  if (v.size() != rows_)
    throw std::invalid_argument("set_column: vector length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::without_row_col(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::invalid_argument("without_row_col: index out of range");
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0; i < rows_ - 1; ++i)
    for (std::size_t j = 0; j < cols_ - 1; ++j)
      m(i, j) = (*this)(i < r ? i : i + 1, j < c ? j : j + 1);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack: row count mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix strip_zero_columns(const IntMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i)
      if (m(i, j) != 0) zero = false;
    if (!zero) keep.push_back(j);
  }
  IntMatrix out(m.rows(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, keep[j]);
  return out;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfDecomposition d{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& s = d.s;
  const std::size_t nmin = std::min(rows, cols);
  bool exhausted = false;
  for (std::size_t t = 0; t < nmin && !exhausted; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (s(i, j) != 0 &&
              (!found || abs(s(i, j)) < abs(s(pi, pj)))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) {
        exhausted = true;
        break;
      }
      if (pi != t) {
        swap_rows(s, t, pi);
        swap_rows(d.u, t, pi);
      }
      if (pj != t) {
        swap_cols(s, t, pj);
        swap_cols(d.v, t, pj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Int q = s(i, t) / s(t, t);
        if (q != 0) {
          row_axpy(s, i, t, -q);
          row_axpy(d.u, i, t, -q);
        }
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Int q = s(t, j) / s(t, t);
        if (q != 0) {
          col_axpy(s, j, t, -q);
          col_axpy(d.v, j, t, -q);
        }
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot is alone in its row and column; make it divide the rest
      // of the block, merging in an offending row when it does not.
      std::size_t bad_row = 0;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            divides_all = false;
            bad_row = i;
            break;
          }
      if (divides_all) break;
      row_axpy(s, t, bad_row, Int(1));
      row_axpy(d.u, t, bad_row, Int(1));
    }
  }
  for (std::size_t i = 0; i < nmin; ++i)
    if (s(i, i) < 0) {
      negate_row(s, i);
      negate_row(d.u, i);
    }
  return d;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  HermiteForm f{m, IntMatrix::identity(cols), {}};
  IntMatrix& h = f.h;
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < cols; ++r) {
    bool have_pivot = false;
    for (;;) {
      std::size_t pj = 0;
      bool found = false;
      for (std::size_t j = c; j < cols; ++j)
        if (h(r, j) != 0 && (!found || abs(h(r, j)) < abs(h(r, pj)))) {
          pj = j;
          found = true;
        }
      if (!found) break;
      have_pivot = true;
      if (pj != c) {
        swap_cols(h, c, pj);
        swap_cols(f.u, c, pj);
      }
      bool clean = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        const Int q = h(r, j) / h(r, c);
        if (q != 0) {
          col_axpy(h, j, c, -q);
          col_axpy(f.u, j, c, -q);
        }
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      negate_col(h, c);
      negate_col(f.u, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      const Int q = floor_div(h(r, j), h(r, c));
      if (q != 0) {
        col_axpy(h, j, c, -q);
        col_axpy(f.u, j, c, -q);
      }
    }
    f.pivots.emplace_back(r, c);
    ++c;
  }
  return f;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

LatticeSolver::LatticeSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), form_(hermite_normal_form(m)) {}

std::optional<IntVec> LatticeSolver::solve(const IntVec& b) const {
  if (b.size() != rows_)
    throw std::invalid_argument("solve: vector length mismatch");
  IntVec resid = b;
  IntVec y(cols_, Int(0));
  std::size_t p = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (p < form_.pivots.size() && form_.pivots[p].first == r) {
      const std::size_t pc = form_.pivots[p].second;
      const Int& piv = form_.h(r, pc);
      if (resid[r] % piv != 0) return std::nullopt;
      const Int q = resid[r] / piv;
      if (q != 0)
        for (std::size_t i = r; i < rows_; ++i) resid[i] -= q * form_.h(i, pc);
      y[pc] = q;
      ++p;
    } else if (resid[r] != 0) {
      return std::nullopt;
    }
  }
  return form_.u * y;
}

std::optional<IntVec> lattice_contains(const IntMatrix& m, const IntVec& b) {
  return LatticeSolver(m).solve(b);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const HermiteForm f = hermite_normal_form(m);
  const std::size_t rank = f.pivots.size();
  IntMatrix k(m.cols(), m.cols() - rank);
  for (std::size_t j = rank; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - rank) = f.u(i, j);
  return k;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("unimodular_inverse: matrix must be square");
  const HermiteForm f = hermite_normal_form(m);
  if (!f.h.is_identity())
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return f.u;
}

}  // namespace linecrit
