#include "serialcob/exactlinalg.hpp"

#include <cctype>

#include "serialcob/errors.hpp"

namespace serialcob {

Scalar scalar_from_string(const std::string& s) {
  // accepted: optional leading '-', digits, optional "/digits"
  auto fail = [&] { throw ValidationError("bad scalar literal: '" + s + "'"); };
  if (s.empty()) fail();
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) fail();
  bool seen_slash = false, digits_before = false, digits_after = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash || !digits_before) fail();
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      fail();
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) fail();
  Scalar x(s);
  if (seen_slash && mpz_sgn(x.get_den().get_mpz_t()) == 0) fail();
  x.canonicalize();
  return x;
}

std::string scalar_to_string(const Scalar& x) {
  // mpq_class(p, q) does not reduce; make sure printed values are canonical.
  Scalar c = x;
  c.canonicalize();
  return c.get_str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t dim, const std::vector<Vec>& cols) {
  Matrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols);
  for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix m(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix m(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Scalar& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * c;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(rows, Scalar(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RankKernel rank_and_kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols, Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(const Matrix& m) {
  Matrix r = m;
  return rref_in_place(r).size();
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& basis, const Vec& target) {
  std::size_t dim = target.size();
  Matrix aug(dim, basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) aug.at(i, j) = basis[j][i];
  for (std::size_t i = 0; i < dim; ++i) aug.at(i, basis.size()) = target[i];
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
  Vec coords(basis.size(), Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = aug.at(i, basis.size());
  return coords;
}

bool Echelon::insert(Vec v) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v[pivots_[k]] == 0) continue;
    Scalar f = v[pivots_[k]];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[k][j];
  }
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Scalar inv = Scalar(1) / v[p];
  for (std::size_t j = p; j < v.size(); ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool Echelon::contains(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v[pivots_[k]] == 0) continue;
    Scalar f = v[pivots_[k]];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[k][j];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

SpanBasis span_closure_tracked(const std::vector<Vec>& seeds, const std::vector<LinOp>& operators) {
  SpanBasis out;
  Echelon ech;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (ech.insert(seeds[i])) {
      out.basis.push_back(seeds[i]);
      out.ops.push_back({});
      out.seed.push_back(i);
    }
  }
  for (std::size_t k = 0; k < out.basis.size(); ++k) {
    for (std::size_t j = 0; j < operators.size(); ++j) {
      Vec w = operators[j](out.basis[k]);
      if (ech.insert(w)) {
        out.basis.push_back(std::move(w));
        auto word = out.ops[k];
        word.push_back(j);
        out.ops.push_back(std::move(word));
        out.seed.push_back(out.seed[k]);
      }
    }
  }
  return out;
}

std::vector<Vec> span_closure(const std::vector<Vec>& seeds, const std::vector<Matrix>& operators) {
  std::vector<LinOp> ops;
  ops.reserve(operators.size());
  for (const auto& m : operators)
    ops.push_back([&m](const Vec& v) { return m.apply(v); });
  return span_closure_tracked(seeds, ops).basis;
}

}  // namespace serialcob
