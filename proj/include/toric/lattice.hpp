#pragma once

// Exact integer linear algebra over the lattice Z^d.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(std::initializer_list<Integer> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static LatticeVector zero(std::size_t dim);
  static LatticeVector unit(std::size_t dim, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;
  // Gcd of the entries; zero for the zero vector.
  Integer content() const;
  // This vector divided by its content (zero stays zero).
  LatticeVector primitive() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Integer& k);
  LatticeVector operator-() const;

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  // Lexicographic.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Integer> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Dense row-major integer matrix. Lattice elements are usually stored as
/// columns, matching how generators of a cone are written down.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::span<const LatticeVector> columns, std::size_t dim);
  static IntMatrix from_columns(std::span<const LatticeVector> columns);
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  std::vector<LatticeVector> columns() const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Characteristic of the base field: zero or a prime.
class Characteristic {
 public:
  Characteristic() = default;
  explicit Characteristic(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  bool is_zero() const { return p_ == 0; }

  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// det(m) for p = 0, otherwise det(m) reduced into [0, p).
Integer det_p(const IntMatrix& m, Characteristic p);

std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim);

bool is_unimodular(const IntMatrix& m);

/// Classical adjoint: adjugate(m) * m == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws ArgumentError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Hermite normal form under left multiplication: u * m == h with u
/// unimodular. h is in row echelon form, each pivot is positive, and the
/// entries above a pivot lie in [0, pivot). Rows of h past the rank are zero.
struct HermiteDecomposition {
  IntMatrix h;
  IntMatrix u;
};
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Index of the sublattice spanned by the columns of m inside Z^rows, or
/// zero when the columns do not have full rank.
Integer lattice_index(const IntMatrix& m);

/// Solution x of m * x == b if one exists (any one when m is not injective).
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, const LatticeVector& b);

/// Depth-first search for nonnegative integer solutions of A x = b with
/// sum(x) <= bound. Columns are tried in index order and each coordinate
/// from zero upward, so the first solution found is the lexicographically
/// smallest. Each level restricts its coordinate to the interval that keeps
/// the residual inside the cone of the remaining columns.
class NonnegativeSolver {
 public:
  NonnegativeSolver(std::vector<LatticeVector> columns, std::size_t dim);

  std::optional<std::vector<Integer>> solve(const LatticeVector& b, const Integer& bound) const;

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& columns() const { return columns_; }

 private:
  struct SuffixCone {
    std::vector<LatticeVector> inequalities;
    std::vector<LatticeVector> equations;
  };

  bool search(std::size_t i, LatticeVector& residual, Integer budget,
              std::vector<Integer>& x) const;

  std::size_t dim_;
  std::vector<LatticeVector> columns_;
  std::vector<SuffixCone> suffix_;  // suffix_[i] describes Cone(columns_[i..])
};

std::optional<std::vector<Integer>> solve_nonneg_integer(const IntMatrix& a, const LatticeVector& b,
                                                         const Integer& bound);

}  // namespace toric
