#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcklab/rational.hpp"

namespace lcklab {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Vector operator*(std::span<const Rational> v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  friend Matrix operator*(const Rational& s, const Matrix& m);

  bool operator==(const Matrix& other) const = default;

  /// Vertical concatenation; both sides must have the same column count.
  Matrix stacked(const Matrix& below) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form plus the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n kept as the nonzero rows of its RREF, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace kernel_basis(const Matrix& m);

/// Echelon particular solution of Mx = b with every free variable set to 0.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Sylvester's criterion on leading principal minors.
/// Throws NonSymmetric when S is not symmetric.
bool is_positive_definite(const Matrix& s);

/// Coefficients lowest degree first. The zero polynomial is empty.
using Polynomial = std::vector<Rational>;

void trim(Polynomial& p);
int degree(const Polynomial& p);
Polynomial derivative(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& x);
Polynomial poly_gcd(Polynomial a, Polynomial b);  // monic, or empty when both are zero
std::string to_string(const Polynomial& p, const std::string& var = "t");

/// det(tI - M), monic, via the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const Matrix& m);

/// Smallest k with I, M, ..., M^k linearly dependent.
std::size_t minimal_polynomial_degree(const Matrix& m);

}  // namespace lcklab
