#include "toric/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "toric/detail/double_description.hpp"
#include "toric/errors.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector LatticeVector::zero(std::size_t dim) {
  return LatticeVector(std::vector<Integer>(dim, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t i) {
  LatticeVector v = zero(dim);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (g <= 1) return *this;
  LatticeVector out = *this;
  for (auto& c : out.coords_) c /= g;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw DimensionError("vector length mismatch in addition");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw DimensionError("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (entries_.size() != rows * cols) throw DimensionError("entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> columns, std::size_t dim) {
  IntMatrix m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> columns) {
  if (columns.empty()) throw DimensionError("cannot infer dimension from no columns");
  return from_columns(columns, columns.front().size());
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t dim) {
  IntMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw DimensionError("row length mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  return LatticeVector(std::vector<Integer>(entries_.begin() + i * cols_,
                                            entries_.begin() + (i + 1) * cols_));
}

LatticeVector IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return LatticeVector(std::move(c));
}

std::vector<LatticeVector> IntMatrix::columns() const {
  std::vector<LatticeVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  LatticeVector out = LatticeVector::zero(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Characteristic

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

Characteristic::Characteristic(std::uint64_t p) : p_(p) {
  if (p != 0 && !is_prime(p))
    throw ArgumentError("characteristic must be 0 or a prime, got " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// Determinants and rank

namespace {

// Fraction-free elimination on a copy of m. Returns the rank; when m is
// square and nonsingular, *det_out receives the determinant.
std::size_t bareiss(IntMatrix m, Integer* det_out) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det_out) *det_out = (r == rows && rows == cols) ? Integer(sign * prev) : Integer(0);
  return r;
}

}  // namespace

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer d;
  bareiss(m, &d);
  return d;
}

Integer det_p(const IntMatrix& m, Characteristic p) {
  Integer d = det(m);
  if (p.is_zero()) return d;
  return mod_floor(d, Integer(p.value()));
}

std::size_t rank(const IntMatrix& m) { return bareiss(m, nullptr); }

std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, dim));
}

bool is_unimodular(const IntMatrix& m) {
  Integer d = det(m);
  return d == 1 || d == -1;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Integer cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  Integer d = det(m);
  if (d != 1 && d != -1) throw ArgumentError("matrix is not unimodular");
  IntMatrix inv = adjugate(m);
  if (d == -1)
    for (std::size_t i = 0; i < inv.rows(); ++i)
      for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
  return inv;
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

void combine_rows(IntMatrix& m, std::size_t r1, std::size_t r2, const Integer& a, const Integer& b,
                  const Integer& c, const Integer& d) {
  // (row r1, row r2) <- (a*row1 + b*row2, c*row1 + d*row2)
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(r1, j), y = m(r2, j);
    m(r1, j) = a * x + b * y;
    m(r2, j) = c * x + d * y;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer a = h(r, c), b = h(i, c);
      auto [g, s, t] = extended_gcd(a, b);
      Integer a_g = a / g, b_g = b / g;
      // [s t; -b/g a/g] has determinant 1.
      combine_rows(h, r, i, s, t, -b_g, a_g);
      combine_rows(u, r, i, s, t, -b_g, a_g);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

Integer lattice_index(const IntMatrix& m) {
  // The column lattice of m is the row lattice of m^T; its HNF is square
  // triangular on the nonzero rows when the rank is full.
  if (rank(m) < m.rows()) return 0;
  HermiteDecomposition hd = hermite_normal_form(m.transpose());
  Integer index = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) index *= hd.h(i, i);
  return index;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, const LatticeVector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = Rational(m(i, j));
    aug[i][cols] = Rational(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && aug[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[r]);
    Rational inv = 1 / aug[r][c];
    for (std::size_t j = c; j <= cols; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

// ---------------------------------------------------------------------------
// Nonnegative integer solving

NonnegativeSolver::NonnegativeSolver(std::vector<LatticeVector> columns, std::size_t dim)
    : dim_(dim), columns_(std::move(columns)) {
  for (const auto& c : columns_)
    if (c.size() != dim_) throw DimensionError("solver column length mismatch");
  suffix_.resize(columns_.size() + 1);
  for (std::size_t i = 0; i <= columns_.size(); ++i) {
    std::span<const LatticeVector> tail(columns_.data() + i, columns_.size() - i);
    // Cone(tail) = {v : <r, v> >= 0, <l, v> == 0} where cone(r) + span(l)
    // is its dual.
    auto dual = detail::double_description(tail, {}, dim_);
    suffix_[i].inequalities = std::move(dual.rays);
    suffix_[i].equations = std::move(dual.lines);
  }
}

std::optional<std::vector<Integer>> NonnegativeSolver::solve(const LatticeVector& b,
                                                              const Integer& bound) const {
  if (b.size() != dim_) throw DimensionError("solver right-hand side length mismatch");
  if (bound < 0) return std::nullopt;
  std::vector<Integer> x(columns_.size(), Integer(0));
  LatticeVector residual = b;
  if (search(0, residual, bound, x)) return x;
  return std::nullopt;
}

bool NonnegativeSolver::search(std::size_t i, LatticeVector& residual, Integer budget,
                               std::vector<Integer>& x) const {
  if (i == columns_.size()) return residual.is_zero();
  const LatticeVector& col = columns_[i];
  if (col.is_zero()) {
    x[i] = 0;
    return search(i + 1, residual, budget, x);
  }

  // Feasible x_i keep residual - x_i * col inside the cone of the later
  // columns; that set is an interval.
  Integer lo = 0, hi = budget;
  const SuffixCone& next = suffix_[i + 1];
  for (const auto& n : next.equations) {
    Integer c = dot(n, residual), s = dot(n, col);
    if (s == 0) {
      if (c != 0) return false;
      continue;
    }
    if (c % s != 0) return false;
    Integer v = c / s;
    lo = std::max(lo, v);
    hi = std::min(hi, v);
  }
  for (const auto& n : next.inequalities) {
    Integer c = dot(n, residual), s = dot(n, col);
    if (s > 0)
      hi = std::min(hi, floor_div(c, s));
    else if (s < 0)
      lo = std::max(lo, ceil_div(c, s));
    else if (c < 0)
      return false;
    if (lo > hi) return false;
  }
  if (lo > hi) return false;

  LatticeVector step = col;
  step *= lo;
  residual -= step;
  for (Integer v = lo; v <= hi; ++v) {
    x[i] = v;
    if (search(i + 1, residual, budget - v, x)) return true;
    residual -= col;
  }
  // Restore the caller's residual.
  step = col;
  step *= (hi + 1);
  residual += step;
  x[i] = 0;
  return false;
}

std::optional<std::vector<Integer>> solve_nonneg_integer(const IntMatrix& a, const LatticeVector& b,
                                                         const Integer& bound) {
  if (a.rows() != b.size()) throw DimensionError("solver right-hand side length mismatch");
  NonnegativeSolver solver(a.columns(), a.rows());
  return solver.solve(b, bound);
}

}  // namespace toric
