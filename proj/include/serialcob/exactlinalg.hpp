#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace serialcob {

// The ground field is Q; values are always in lowest terms with positive
// denominator (mpq_class canonical form).
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Parses "p" or "p/q". Throws ValidationError on anything else (q = 0 included).
Scalar scalar_from_string(const std::string& s);
std::string scalar_to_string(const Scalar& x);

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t dim, const std::vector<Vec>& cols);
  static Matrix from_rows(const std::vector<Vec>& rows);

  Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;  // this * v

  bool operator==(const Matrix& o) const = default;
  bool is_zero() const;
};

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel_basis;  // column vectors, reduced echelon pattern
};

// Fraction-free in spirit: exact Gauss-Jordan with first-nonzero pivoting,
// so the echelon form (and hence the kernel basis) is canonical.
RankKernel rank_and_kernel(const Matrix& m);
std::size_t rank_of(const Matrix& m);

// Coordinates of target in the given independent basis, or nullopt (NotInSpan).
std::optional<Vec> solve_in_span(const std::vector<Vec>& basis, const Vec& target);

// Incremental row-echelon membership structure.
class Echelon {
 public:
  // Reduces v against the stored rows; if a nonzero residual remains it is
  // normalized, inserted, and true is returned.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Smallest subspace containing seeds and invariant under the operators.
// Breadth-first: seeds in order, then for each admitted vector the operators
// in input order; a vector is admitted iff independent of everything before.
struct SpanBasis {
  std::vector<Vec> basis;                      // admitted vectors, discovery order
  std::vector<std::vector<std::size_t>> ops;   // operator indices applied, in order
  std::vector<std::size_t> seed;               // originating seed index
};

using LinOp = std::function<Vec(const Vec&)>;

SpanBasis span_closure_tracked(const std::vector<Vec>& seeds, const std::vector<LinOp>& operators);
std::vector<Vec> span_closure(const std::vector<Vec>& seeds, const std::vector<Matrix>& operators);

}  // namespace serialcob
