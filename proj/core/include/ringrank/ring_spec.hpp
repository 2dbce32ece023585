#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ringrank/algebra.hpp"
#include "ringrank/errors.hpp"

namespace ringrank {

/// Malformed ring specification: bad JSON syntax (with line and column) or
/// a missing / mistyped field (with its JSON pointer).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Builds the algebra described by a ring spec document:
///
///   {"field": {"p": 2, "k": 1, "modulus": [1, 1, 1]},
///    "construction": {"kind": "matrix", "n": 2}}
///
/// Construction kinds: matrix (n), triangular (n), block_example (m, n),
/// direct_sum (parts: list of constructions), opposite (of: construction),
/// raw (dim, structure as nested [i][j][k] or flat list of residue codes,
/// unit, optional names). `modulus` is optional for q in {4, 8, 9}.
///
/// Throws SpecError for malformed documents, InvalidField for bad field
/// parameters (non-prime p, reducible modulus) and InvalidAlgebra when raw
/// structure constants fail associativity or the unit check.
Algebra parse_ring_spec(std::string_view text);

/// Reads and parses a spec file; error messages are prefixed with the path.
Algebra load_ring_spec(const std::filesystem::path& path);

}  // namespace ringrank
