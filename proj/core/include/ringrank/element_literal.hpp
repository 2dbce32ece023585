#pragma once

#include <string>
#include <string_view>

#include "ringrank/algebra.hpp"
#include "ringrank/errors.hpp"

namespace ringrank {

/// Malformed element literal.
class LiteralError : public Error {
 public:
  using Error::Error;
};

/// Parses sums of scalar*basis-name terms, e.g. "E11+2*E22", "J - K", "0",
/// "1". A bare integer c denotes c times the unit. Integer coefficients are
/// residue codes and must be < q (base-p digits give polynomial coefficients
/// in extension fields). Names are basis names or construction aliases.
Element parse_element(const Algebra& algebra, std::string_view literal);

/// Canonical literal for an element; re-parsable by parse_element.
std::string format_element(const Element& x);

}  // namespace ringrank
