#include "ringrank/algebra.hpp"

#include <algorithm>
#include <string>

#include "ringrank/errors.hpp"

namespace ringrank {

namespace {

struct Term {
  std::uint32_t index;
  Scalar coeff;
};

std::string field_name(const Field& f) { return "F_" + std::to_string(f.order()); }

std::string matrix_unit_name(std::size_t n, std::size_t i, std::size_t j) {
  if (n <= 9) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
  return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Vector vectorize(const Matrix& m) { return m.entries(); }

}  // namespace

struct Algebra::Impl {
  Field field;
  std::size_t dim = 0;
  std::vector<Scalar> structure;
  std::vector<std::vector<Term>> products;  // sparse c[i][j][*]
  Vector unit;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, Vector>> aliases;
  std::optional<std::vector<Matrix>> concrete_basis;
  Construction construction;
  std::string description;

  explicit Impl(Field f) : field(std::move(f)) {}
};

struct AlgebraBuilder {
  static std::shared_ptr<Algebra::Impl> make_impl(const Field& field) {
    return std::make_shared<Algebra::Impl>(field);
  }

  static Algebra build(std::shared_ptr<Algebra::Impl> impl) {
    auto& a = *impl;
    const std::size_t d = a.dim;
    if (a.structure.size() != d * d * d) {
      throw InvalidAlgebra("structure tensor must have dim^3 = " + std::to_string(d * d * d) +
                           " entries");
    }
    if (a.unit.size() != d) throw InvalidAlgebra("unit vector must have dim entries");
    for (Scalar s : a.structure) {
      if (s.code >= a.field.order()) throw InvalidAlgebra("structure constant out of range");
    }
    if (a.names.empty()) {
      for (std::size_t i = 0; i < d; ++i) a.names.push_back("b" + std::to_string(i + 1));
    }
    if (a.names.size() != d) throw InvalidAlgebra("basis name count must equal dim");
    a.products.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          Scalar c = a.structure[(i * d + j) * d + k];
          if (!c.is_zero()) a.products[i * d + j].push_back({static_cast<std::uint32_t>(k), c});
        }
      }
    }
    if (a.description.empty()) a.description = "raw(" + std::to_string(d) + ")/" + field_name(a.field);

    Algebra alg(impl);
    // (b_i b_j) b_k == b_i (b_j b_k) on all basis triples.
    for (std::size_t i = 0; i < d; ++i) {
      Vector bi(d);
      bi[i] = a.field.one();
      for (std::size_t j = 0; j < d; ++j) {
        Vector bj(d);
        bj[j] = a.field.one();
        Vector bij = alg.multiply(bi, bj);
        for (std::size_t k = 0; k < d; ++k) {
          Vector bk(d);
          bk[k] = a.field.one();
          if (alg.multiply(bij, bk) != alg.multiply(bi, alg.multiply(bj, bk))) {
            throw InvalidAlgebra("structure constants are not associative at basis triple (" +
                                 a.names[i] + ", " + a.names[j] + ", " + a.names[k] + ")");
          }
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      Vector bi(d);
      bi[i] = a.field.one();
      if (alg.multiply(a.unit, bi) != bi || alg.multiply(bi, a.unit) != bi) {
        throw InvalidAlgebra("unit is not a two-sided identity on basis element " + a.names[i]);
      }
    }
    return alg;
  }

  // Structure constants of the span of `basis` inside M_size(F); the span
  // must be a unital subalgebra.
  static std::shared_ptr<Algebra::Impl> from_matrix_basis(const Field& field,
                                                          std::vector<Matrix> basis,
                                                          std::vector<std::string> names,
                                                          Construction construction,
                                                          std::string description) {
    const std::size_t d = basis.size();
    const std::size_t size = basis.front().rows();
    std::vector<Vector> rows;
    for (const auto& b : basis) rows.push_back(vectorize(b));
    const Matrix coords_system = Matrix::from_rows(size * size, rows).transposed();
    auto coordinates = [&](const Matrix& m) {
      auto x = solve_linear(field, coords_system, m.entries());
      if (!x) throw InvalidAlgebra("matrix span is not closed under multiplication");
      return *x;
    };

    auto impl = std::make_shared<Algebra::Impl>(field);
    impl->dim = d;
    impl->structure.assign(d * d * d, Scalar{});
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Vector c = coordinates(multiply(field, basis[i], basis[j]));
        std::copy(c.begin(), c.end(), impl->structure.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
      }
    }
    impl->unit = coordinates(Matrix::identity(size));
    impl->names = std::move(names);
    impl->concrete_basis = std::move(basis);
    impl->construction = std::move(construction);
    impl->description = std::move(description);
    return impl;
  }

  static const Algebra::Impl& impl(const Algebra& a) { return *a.impl_; }
};

Algebra Algebra::from_structure(Field field, std::size_t dim, std::vector<Scalar> structure,
                                Vector unit, std::vector<std::string> names) {
  auto impl = std::make_shared<Impl>(std::move(field));
  impl->dim = dim;
  impl->structure = std::move(structure);
  impl->unit = std::move(unit);
  impl->names = std::move(names);
  return AlgebraBuilder::build(std::move(impl));
}

const Field& Algebra::field() const { return impl_->field; }
std::size_t Algebra::dim() const { return impl_->dim; }
std::uint64_t Algebra::cardinality() const {
  return saturating_power(impl_->field.order(), impl_->dim);
}
Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  return impl_->structure[(i * impl_->dim + j) * impl_->dim + k];
}
const Vector& Algebra::unit_coords() const { return impl_->unit; }
const std::vector<std::string>& Algebra::basis_names() const { return impl_->names; }
const std::vector<std::pair<std::string, Vector>>& Algebra::aliases() const {
  return impl_->aliases;
}
const Construction& Algebra::construction() const { return impl_->construction; }
const std::string& Algebra::description() const { return impl_->description; }

Vector Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const auto& a = *impl_;
  const std::size_t d = a.dim;
  if (x.size() != d || y.size() != d) throw DimensionMismatch("element length mismatch");
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = a.field.mul(x[i], y[j]);
      for (const Term& t : a.products[i * d + j]) {
        out[t.index] = a.field.add(out[t.index], a.field.mul(xy, t.coeff));
      }
    }
  }
  return out;
}

Element Algebra::element(Vector coeffs) const { return Element(*this, std::move(coeffs)); }
Element Algebra::zero() const { return element(Vector(dim())); }
Element Algebra::one() const { return element(impl_->unit); }
Element Algebra::basis_element(std::size_t i) const {
  if (i >= dim()) throw DimensionMismatch("basis index out of range");
  Vector v(dim());
  v[i] = field().one();
  return element(std::move(v));
}

Element Algebra::named(std::string_view name) const {
  const auto& names = impl_->names;
  if (auto it = std::find(names.begin(), names.end(), name); it != names.end()) {
    return basis_element(static_cast<std::size_t>(it - names.begin()));
  }
  for (const auto& [alias, coeffs] : impl_->aliases) {
    if (alias == name) return element(coeffs);
  }
  throw DomainError("unknown basis name '" + std::string(name) + "' in " + description());
}

Matrix Algebra::right_mult_matrix(std::span<const Scalar> a) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector bi(d);
    bi[i] = field().one();
    Vector row = multiply(bi, a);
    std::copy(row.begin(), row.end(), m.row(i).begin());
  }
  return m;
}

Matrix Algebra::left_mult_matrix(std::span<const Scalar> a) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector bi(d);
    bi[i] = field().one();
    Vector row = multiply(a, bi);
    std::copy(row.begin(), row.end(), m.row(i).begin());
  }
  return m;
}

std::optional<Matrix> Algebra::render(std::span<const Scalar> coeffs) const {
  if (!impl_->concrete_basis) return std::nullopt;
  const auto& basis = *impl_->concrete_basis;
  Matrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) {
        out(r, c) = field().add(out(r, c), field().mul(coeffs[i], basis[i](r, c)));
      }
    }
  }
  return out;
}

bool structurally_equal(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) return false;
  if (a.unit_coords() != b.unit_coords()) return false;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (a.structure_constant(i, j, k) != b.structure_constant(i, j, k)) return false;
  return true;
}

// --- Element ----------------------------------------------------------------

Element::Element(Algebra algebra, Vector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_.dim()) {
    throw DimensionMismatch("element has " + std::to_string(coeffs_.size()) +
                            " coefficients, algebra dimension is " +
                            std::to_string(algebra_.dim()));
  }
}

namespace {
void require_same(const Element& x, const Element& y) {
  if (!(x.algebra() == y.algebra())) {
    throw AlgebraMismatch("elements belong to different algebras (" +
                          x.algebra().description() + " vs " + y.algebra().description() + ")");
  }
}
}  // namespace

Element Element::operator-() const {
  Vector out(coeffs_.size());
  const Field& f = algebra_.field();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.neg(coeffs_[i]);
  return Element(algebra_, std::move(out));
}

Element Element::scaled(Scalar c) const {
  return Element(algebra_, scale(algebra_.field(), c, coeffs_));
}

Element operator+(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(x.algebra_, add(x.algebra_.field(), x.coeffs_, y.coeffs_));
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element operator*(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(x.algebra_, x.algebra_.multiply(x.coeffs_, y.coeffs_));
}

bool operator==(const Element& x, const Element& y) {
  return x.algebra_ == y.algebra_ && x.coeffs_ == y.coeffs_;
}

// --- Constructions ----------------------------------------------------------

Algebra make_full_matrix_algebra(std::size_t n, const Field& field) {
  if (n == 0) throw DomainError("matrix algebra size must be >= 1");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = field.one();
      basis.push_back(std::move(e));
      names.push_back(matrix_unit_name(n, i, j));
    }
  }
  Construction c{ConstructionKind::matrix, n, {}, {}};
  return AlgebraBuilder::build(AlgebraBuilder::from_matrix_basis(
      field, std::move(basis), std::move(names), std::move(c),
      "M_" + std::to_string(n) + "(" + field_name(field) + ")"));
}

Algebra make_triangular_algebra(std::size_t n, const Field& field) {
  if (n == 0) throw DomainError("triangular algebra size must be >= 1");
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix e(n, n);
      e(i, j) = field.one();
      basis.push_back(std::move(e));
      names.push_back(matrix_unit_name(n, i, j));
    }
  }
  Construction c{ConstructionKind::triangular, n, {}, {}};
  return AlgebraBuilder::build(AlgebraBuilder::from_matrix_basis(
      field, std::move(basis), std::move(names), std::move(c),
      "T_" + std::to_string(n) + "(" + field_name(field) + ")"));
}

Algebra make_block_example_algebra(BlockExampleParams params, const Field& field) {
  const std::size_t m = params.m, n = params.n;
  if (m == 0 || n == 0) throw DomainError("block example parameters must be >= 1");
  const std::size_t mn = m * n, size = 2 * mn;
  std::vector<Matrix> basis;
  std::vector<std::string> names;
  // A_ij repeated in the n diagonal blocks of the upper-left quadrant.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Matrix e(size, size);
      for (std::size_t b = 0; b < n; ++b) e(b * m + i, b * m + j) = field.one();
      basis.push_back(std::move(e));
      names.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  // C_ij repeated in the m diagonal blocks of the lower-right quadrant.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(size, size);
      for (std::size_t b = 0; b < m; ++b) e(mn + b * n + i, mn + b * n + j) = field.one();
      basis.push_back(std::move(e));
      names.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  // B_rs blocks, each m x n, in the upper-right quadrant.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Matrix e(size, size);
          e(r * m + i, mn + s * n + j) = field.one();
          basis.push_back(std::move(e));
          names.push_back("B" + std::to_string(r * m + s + 1) + std::to_string(i + 1) +
                          std::to_string(j + 1));
        }
      }
    }
  }
  const std::size_t d = basis.size();
  Construction c{ConstructionKind::block_example, 0, params, {}};
  auto impl = AlgebraBuilder::from_matrix_basis(
      field, std::move(basis), std::move(names), std::move(c),
      "Block(" + std::to_string(m) + "," + std::to_string(n) + ")(" + field_name(field) + ")");

  // J = [0 I; 0 0], K = [I 0; 0 0], L = [0 0; 0 I].
  Vector j(d), k(d), l(d);
  for (std::size_t i = 0; i < m; ++i) k[i * m + i] = field.one();
  for (std::size_t i = 0; i < n; ++i) l[m * m + i * n + i] = field.one();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t jj = 0; jj < n; ++jj) {
          if (r * m + i == s * n + jj) {
            j[m * m + n * n + ((r * m + s) * m + i) * n + jj] = field.one();
          }
        }
      }
    }
  }
  impl->aliases = {{"J", j}, {"K", k}, {"L", l}};
  return AlgebraBuilder::build(std::move(impl));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) {
    throw AlgebraMismatch("direct sum of algebras over different fields (" + a.description() +
                          ", " + b.description() + ")");
  }
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  auto impl = AlgebraBuilder::make_impl(a.field());
  impl->dim = d;
  impl->structure.assign(d * d * d, Scalar{});
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k)
        impl->structure[(i * d + j) * d + k] = a.structure_constant(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        impl->structure[((da + i) * d + (da + j)) * d + (da + k)] = b.structure_constant(i, j, k);
  impl->unit = a.unit_coords();
  impl->unit.insert(impl->unit.end(), b.unit_coords().begin(), b.unit_coords().end());
  for (const auto& nm : a.basis_names()) impl->names.push_back("P1." + nm);
  for (const auto& nm : b.basis_names()) impl->names.push_back("P2." + nm);
  for (const auto& [nm, v] : a.aliases()) {
    Vector w = v;
    w.resize(d);
    impl->aliases.emplace_back("P1." + nm, std::move(w));
  }
  for (const auto& [nm, v] : b.aliases()) {
    Vector w(da);
    w.insert(w.end(), v.begin(), v.end());
    impl->aliases.emplace_back("P2." + nm, std::move(w));
  }
  impl->construction = Construction{ConstructionKind::direct_sum, 0, {}, {a, b}};
  impl->description = a.description() + " + " + b.description();
  return AlgebraBuilder::build(std::move(impl));
}

Algebra opposite(const Algebra& a) {
  if (a.construction().kind == ConstructionKind::opposite) return a.construction().parts.front();
  const auto& src = AlgebraBuilder::impl(a);
  auto impl = AlgebraBuilder::make_impl(src.field);
  const std::size_t d = src.dim;
  impl->dim = d;
  impl->structure.assign(d * d * d, Scalar{});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        impl->structure[(i * d + j) * d + k] = src.structure[(j * d + i) * d + k];
  impl->unit = src.unit;
  impl->names = src.names;
  impl->aliases = src.aliases;
  impl->concrete_basis = src.concrete_basis;
  impl->construction = Construction{ConstructionKind::opposite, 0, {}, {a}};
  impl->description = "op(" + src.description + ")";
  return AlgebraBuilder::build(std::move(impl));
}

// --- Enumeration ------------------------------------------------------------

void for_each_element(const Algebra& algebra, const std::function<bool(const Element&)>& visit) {
  for_each_coefficients(algebra.field(), algebra.dim(),
                        [&](const Vector& c) { return visit(algebra.element(c)); });
}

std::uint64_t element_index(const Element& x) {
  const std::uint64_t q = x.algebra().field().order();
  std::uint64_t idx = 0;
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * q + c[i].code;
  return idx;
}

Element element_at(const Algebra& algebra, std::uint64_t index) {
  const std::uint64_t q = algebra.field().order();
  Vector c(algebra.dim());
  for (auto& s : c) {
    s = Scalar{static_cast<std::uint16_t>(index % q)};
    index /= q;
  }
  return algebra.element(std::move(c));
}

}  // namespace ringrank
