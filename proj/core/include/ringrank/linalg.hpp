#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ringrank/field.hpp"

namespace ringrank {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over some F_q. The field is supplied to each
/// operation; the matrix itself only stores residue codes.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;  // full height; rows past `rank` are zero
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form.
RrefResult rref(const Field& field, Matrix m);
std::size_t matrix_rank(const Field& field, const Matrix& m);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vector row_times(const Field& field, std::span<const Scalar> x, const Matrix& m);

/// Some x with A x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<Vector> solve_linear(const Field& field, const Matrix& a,
                                   std::span<const Scalar> b);

/// Basis (as rows) of {x : A x = 0}, in canonical echelon form.
Matrix null_space(const Field& field, const Matrix& a);

Vector add(const Field& field, std::span<const Scalar> x, std::span<const Scalar> y);
Vector scale(const Field& field, Scalar c, std::span<const Scalar> x);
bool is_zero(std::span<const Scalar> x);

/// A linear subspace of F_q^n stored by its canonical reduced echelon basis,
/// so that set equality is literal basis equality.
class Subspace {
 public:
  /// The zero subspace of F_q^ambient.
  Subspace(Field field, std::size_t ambient);

  static Subspace span(Field field, std::size_t ambient, std::span<const Vector> generators);
  static Subspace span(Field field, const Matrix& generators);
  static Subspace whole(Field field, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to the canonical basis, when v is a member.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// Linear combination of basis rows.
  Vector combine(std::span<const Scalar> coords) const;

  /// Number of vectors, q^dim, saturating at UINT64_MAX.
  std::uint64_t cardinality() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  /// Total order on canonical bases; used for deterministic dedup.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    return a.basis_ <=> b.basis_;
  }

 private:
  Subspace(Field field, Matrix canonical_basis, std::vector<std::size_t> pivots);

  Field field_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// q^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t q, std::size_t exponent);

/// Visits every coefficient vector of length `len` over F_q, counting in
/// mixed radix with the first coordinate least significant. The zero vector
/// comes first. Returning false from `visit` stops the scan.
void for_each_coefficients(const Field& field, std::size_t len,
                           const std::function<bool(const Vector&)>& visit);

/// Visits every vector of `space` (in the order of its coefficient vectors).
void for_each_vector(const Subspace& space, const std::function<bool(const Vector&)>& visit);

/// Visits one representative of each line of `space`: the nonzero vectors
/// whose first nonzero coordinate (w.r.t. the canonical basis) is 1.
void for_each_projective_vector(const Subspace& space,
                                const std::function<bool(const Vector&)>& visit);

}  // namespace ringrank
