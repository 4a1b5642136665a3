#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace linecrit {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVec column(std::size_t c) const;
  void set_column(std::size_t c, const IntVec& v);

  bool is_zero() const;
  bool is_identity() const;

  // Copy with one row and one column removed.
  IntMatrix without_row_col(std::size_t r, std::size_t c) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVec entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Int& s, const IntMatrix& a);

// Columns of a followed by columns of b.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

// Copy keeping only the nonzero columns, in order.
IntMatrix strip_zero_columns(const IntMatrix& m);

// u * m * v = s with s diagonal, nonnegative, and each diagonal entry
// dividing the next; u and v are unimodular.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};
SnfDecomposition smith_normal_form(const IntMatrix& m);

// m * u = h with u unimodular and h in column echelon form: pivots are
// positive, entries to the left of a pivot in its row are reduced into
// [0, pivot), and zero columns sit at the right end.  h is the canonical
// form of the column lattice of m.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};
HermiteForm hermite_normal_form(const IntMatrix& m);

// Exact determinant of a square matrix by fraction-free elimination.
Int determinant(const IntMatrix& m);

// Solves m * x = b over the integers from a cached Hermite form.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& m);

  // An integer solution of m * x = b, or nullopt when b is outside the
  // column lattice of m.
  std::optional<IntVec> solve(const IntVec& b) const;

  const HermiteForm& hermite() const { return form_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  HermiteForm form_;
};

// One-shot lattice membership with witness.
std::optional<IntVec> lattice_contains(const IntMatrix& m, const IntVec& b);

// Columns form a basis of the integer kernel {x : m * x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace linecrit
