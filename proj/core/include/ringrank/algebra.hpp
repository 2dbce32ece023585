#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringrank/field.hpp"
#include "ringrank/linalg.hpp"

namespace ringrank {

class Element;
struct Construction;

/// A finite-dimensional unital associative algebra over F_q, described by
/// structure constants b_i * b_j = sum_k c[i][j][k] b_k.
///
/// Algebras are immutable handles; copies share state. Two handles denote
/// the same algebra only if they came from the same construction call, so
/// elements of separately built copies of M_2(F_2) do not mix.
class Algebra {
 public:
  /// Validates associativity on all basis triples and that `unit` is a
  /// two-sided identity on every basis element; throws InvalidAlgebra.
  /// `structure` is indexed [(i * dim + j) * dim + k].
  static Algebra from_structure(Field field, std::size_t dim, std::vector<Scalar> structure,
                                Vector unit, std::vector<std::string> names = {});

  const Field& field() const;
  std::size_t dim() const;
  /// q^dim, saturating.
  std::uint64_t cardinality() const;
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  const Vector& unit_coords() const;
  const std::vector<std::string>& basis_names() const;
  /// Named elements beyond the basis (J, K, L for the block example).
  const std::vector<std::pair<std::string, Vector>>& aliases() const;
  const Construction& construction() const;
  /// Human-readable name such as "M_2(F_3)".
  const std::string& description() const;

  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;

  Element element(Vector coeffs) const;
  Element zero() const;
  Element one() const;
  Element basis_element(std::size_t i) const;
  /// Element with the given basis name or alias.
  Element named(std::string_view name) const;

  /// Matrix M with coords(x * a) = coords(x) * M.
  Matrix right_mult_matrix(std::span<const Scalar> a) const;
  /// Matrix M with coords(a * x) = coords(x) * M.
  Matrix left_mult_matrix(std::span<const Scalar> a) const;

  /// Concrete matrix for matrix-flavoured constructions.
  std::optional<Matrix> render(std::span<const Scalar> coeffs) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.impl_ == b.impl_; }

 private:
  struct Impl;
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend struct AlgebraBuilder;
};

/// Same dimension, structure constants and unit.
bool structurally_equal(const Algebra& a, const Algebra& b);

enum class ConstructionKind { raw, matrix, triangular, block_example, direct_sum, opposite };

struct BlockExampleParams {
  std::size_t m = 1;
  std::size_t n = 1;
};

/// How an algebra was built. Drives element literals, rendering and the
/// closed-form radical of the shipped constructions.
struct Construction {
  ConstructionKind kind = ConstructionKind::raw;
  std::size_t n = 0;             // matrix, triangular
  BlockExampleParams block;      // block_example
  std::vector<Algebra> parts;    // direct_sum summands; opposite: the original
};

/// An element of an algebra as a coefficient vector in its basis.
class Element {
 public:
  Element(Algebra algebra, Vector coeffs);

  const Algebra& algebra() const { return algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return ringrank::is_zero(coeffs_); }

  Element operator-() const;
  Element scaled(Scalar c) const;

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y);

  Element& operator+=(const Element& y) { return *this = *this + y; }

 private:
  Algebra algebra_;
  Vector coeffs_;
};

/// M_n(F): basis E_ij in row-major order.
Algebra make_full_matrix_algebra(std::size_t n, const Field& field);
/// T_n(F): basis E_ij, i <= j, in row-major order.
Algebra make_triangular_algebra(std::size_t n, const Field& field);
/// The subalgebra of M_{2mn}(F) of matrices [[A (n copies), B], [0, C (m copies)]]
/// with A in M_m, C in M_n and B an arbitrary mn x mn matrix.
/// Basis order: A_ij (m^2), then C_ij (n^2), then the entries of the blocks
/// B_rs (block row r = 1..n, block column s = 1..m, each m x n), blocks in
/// row-major order and entries within a block row-major. The block with
/// index b = (r - 1) m + s has entry names B{b}{i}{j}.
Algebra make_block_example_algebra(BlockExampleParams params, const Field& field);
/// A x B with componentwise product; basis of A (names prefixed "P1.") then
/// basis of B (prefixed "P2.").
Algebra direct_sum(const Algebra& a, const Algebra& b);
/// Same space with reversed multiplication. opposite(opposite(A)) returns A.
Algebra opposite(const Algebra& a);

/// Visits every element of the algebra in mixed-radix order (first basis
/// coordinate least significant), starting at zero.
void for_each_element(const Algebra& algebra, const std::function<bool(const Element&)>& visit);
/// Position of `x` in the for_each_element order.
std::uint64_t element_index(const Element& x);
Element element_at(const Algebra& algebra, std::uint64_t index);

}  // namespace ringrank
