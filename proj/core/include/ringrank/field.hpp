#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ringrank {

/// An element of F_q in its residue encoding: the base-p digits of `code`
/// are the coefficients (low degree first) of a polynomial reduced modulo the
/// field's defining polynomial. For prime fields this is the usual residue.
struct Scalar {
  std::uint16_t code = 0;

  constexpr Scalar() = default;
  constexpr explicit Scalar(std::uint16_t c) : code(c) {}

  constexpr bool is_zero() const { return code == 0; }
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// Parameters of F_{p^k}. `modulus` lists the coefficients of a monic
/// irreducible polynomial of degree k, constant term first (k + 1 entries).
/// It is empty for prime fields.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Brute-force irreducibility test over F_p for monic polynomials of small
/// degree (trial division by every monic polynomial of degree <= k/2).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

/// Built-in defining polynomial for F_q, q in {4, 8, 9}; empty otherwise.
std::vector<std::uint32_t> builtin_modulus(std::uint32_t q);

/// Finite field handle. Cheap to copy; all state is immutable and shared.
class Field {
 public:
  /// Validates the spec: p prime, k >= 1, q <= 2^16, modulus monic and
  /// irreducible of degree k. Missing moduli are filled from the built-ins.
  explicit Field(FieldSpec spec);

  static Field prime(std::uint32_t p);
  /// F_q for q prime or q in {4, 8, 9}.
  static Field of_order(std::uint32_t q);

  const FieldSpec& spec() const;
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }
  /// Image of the integer n under Z -> F_p -> F_q.
  Scalar from_integer(std::int64_t n) const;
  /// The scalar with residue encoding `code`; throws DomainError if code >= q.
  Scalar from_code(std::uint32_t code) const;

  Scalar add(Scalar x, Scalar y) const;
  Scalar sub(Scalar x, Scalar y) const;
  Scalar neg(Scalar x) const;
  Scalar mul(Scalar x, Scalar y) const;
  /// Throws DomainError on zero.
  Scalar inv(Scalar x) const;

  std::string to_string(Scalar x) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Tables;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace ringrank
