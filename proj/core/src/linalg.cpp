#include "ringrank/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "ringrank/errors.hpp"

namespace ringrank {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix entry count does not match " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const { return ringrank::is_zero(entries_); }

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

RrefResult rref(const Field& field, Matrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      auto a = m.row(pivot);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Scalar inv = field.inv(m(r, c));
    if (inv != field.one()) {
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(inv, m(r, j));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar factor = field.neg(m(i, c));
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) = field.add(m(i, j), field.mul(factor, m(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t matrix_rank(const Field& field, const Matrix& m) { return rref(field, m).rank; }

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Vector row_times(const Field& field, std::span<const Scalar> x, const Matrix& m) {
  if (x.size() != m.rows()) throw DimensionMismatch("vector-matrix shape mismatch");
  Vector out(m.cols());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] = field.add(out[j], field.mul(x[k], m(k, j)));
    }
  }
  return out;
}

std::optional<Vector> solve_linear(const Field& field, const Matrix& a,
                                   std::span<const Scalar> b) {
  if (b.size() != a.rows()) {
    throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) +
                            ", expected " + std::to_string(a.rows()));
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult red = rref(field, std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.reduced(r, a.cols());
  return x;
}

Matrix null_space(const Field& field, const Matrix& a) {
  RrefResult red = rref(field, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(a.cols());
    x[f] = field.one();
    for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = field.neg(red.reduced(r, f));
    gens.push_back(std::move(x));
  }
  return Subspace::span(field, a.cols(), gens).basis();
}

Vector add(const Field& field, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector length mismatch");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field.add(x[i], y[i]);
  return out;
}

Vector scale(const Field& field, Scalar c, std::span<const Scalar> x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field.mul(c, x[i]);
  return out;
}

bool is_zero(std::span<const Scalar> x) {
  return std::all_of(x.begin(), x.end(), [](Scalar s) { return s.is_zero(); });
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(Field field, std::size_t ambient)
    : field_(std::move(field)), basis_(0, ambient) {}

Subspace::Subspace(Field field, Matrix canonical_basis, std::vector<std::size_t> pivots)
    : field_(std::move(field)), basis_(std::move(canonical_basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(Field field, const Matrix& generators) {
  RrefResult red = rref(field, generators);
  Matrix basis(red.rank, generators.cols());
  for (std::size_t r = 0; r < red.rank; ++r) {
    auto src = red.reduced.row(r);
    std::copy(src.begin(), src.end(), basis.row(r).begin());
  }
  return Subspace(std::move(field), std::move(basis), std::move(red.pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vector> generators) {
  return span(std::move(field), Matrix::from_rows(ambient, generators));
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(std::move(field), Matrix::identity(ambient), std::move(pivots));
}

Vector Subspace::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector(r.begin(), r.end());
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate length mismatch");
  Vector out(ambient());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coords[i].is_zero()) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < ambient(); ++j) {
      out[j] = field_.add(out[j], field_.mul(coords[i], row[j]));
    }
  }
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient()) throw DimensionMismatch("vector outside ambient space");
  Vector coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
  Vector back = combine(coords);
  if (!std::equal(back.begin(), back.end(), v.begin())) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw DimensionMismatch("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

std::uint64_t Subspace::cardinality() const { return saturating_power(field_.order(), dim()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("ambient dimension mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto r = a.basis().row(i);
    std::copy(r.begin(), r.end(), stacked.row(i).begin());
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto r = b.basis().row(i);
    std::copy(r.begin(), r.end(), stacked.row(a.dim() + i).begin());
  }
  return Subspace::span(a.field(), stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("ambient dimension mismatch");
  // Zassenhaus: rows [u | u] and [v | 0]; echelon rows with zero left half
  // span the intersection in their right half.
  const std::size_t n = a.ambient();
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z(i, j) = a.basis()(i, j);
      z(i, n + j) = a.basis()(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
  }
  RrefResult red = rref(a.field(), std::move(z));
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivots[r] < n) continue;
    auto row = red.reduced.row(r);
    gens.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(a.field(), n, gens);
}

std::uint64_t saturating_power(std::uint64_t q, std::size_t exponent) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    v *= q;
  }
  return v;
}

void for_each_coefficients(const Field& field, std::size_t len,
                           const std::function<bool(const Vector&)>& visit) {
  const auto q = static_cast<std::uint16_t>(field.order() - 1);
  Vector c(len);
  while (true) {
    if (!visit(c)) return;
    std::size_t i = 0;
    while (i < len && c[i].code == q) c[i++] = Scalar{0};
    if (i == len) return;
    ++c[i].code;
  }
}

void for_each_vector(const Subspace& space, const std::function<bool(const Vector&)>& visit) {
  for_each_coefficients(space.field(), space.dim(),
                        [&](const Vector& c) { return visit(space.combine(c)); });
}

void for_each_projective_vector(const Subspace& space,
                                const std::function<bool(const Vector&)>& visit) {
  const std::size_t d = space.dim();
  for (std::size_t lead = 0; lead < d; ++lead) {
    bool keep_going = true;
    for_each_coefficients(space.field(), d - lead - 1, [&](const Vector& tail) {
      Vector c(d);
      c[lead] = Scalar{1};
      std::copy(tail.begin(), tail.end(), c.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      keep_going = visit(space.combine(c));
      return keep_going;
    });
    if (!keep_going) return;
  }
}

}  // namespace ringrank
