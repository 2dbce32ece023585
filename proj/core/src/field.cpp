#include "ringrank/field.hpp"

#include <algorithm>

#include "ringrank/errors.hpp"

namespace ringrank {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Digits d(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Remainder of `num` modulo the monic polynomial `den` (coefficients low first).
Digits poly_rem(Digits num, const Digits& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    std::uint32_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        num[shift + i] = (num[shift + i] + (p - lead) * den[i]) % p;
      }
    }
    num.pop_back();
  }
  return num;
}

Digits mul_mod(const Digits& a, const Digits& b, const Digits& modulus,
               std::uint32_t p) {
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  Digits r = poly_rem(std::move(prod), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t k = monic.size() - 1;
  if (k == 1) return true;
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    // every monic divisor candidate of degree `deg`
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Digits cand(deg + 1, 0);
      std::uint64_t v = c;
      for (std::size_t i = 0; i < deg; ++i) {
        cand[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      cand[deg] = 1;
      Digits r = poly_rem(monic, cand, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::uint32_t> builtin_modulus(std::uint32_t q) {
  switch (q) {
    case 4: return {1, 1, 1};     // t^2 + t + 1
    case 8: return {1, 1, 0, 1};  // t^3 + t + 1
    case 9: return {1, 0, 1};     // t^2 + 1
    default: return {};
  }
}

struct Field::Tables {
  FieldSpec spec;
  std::uint32_t q = 0;
  std::vector<std::uint16_t> add;  // q*q, only when q <= 256
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> exp;  // 2(q-1) entries
  std::vector<std::uint32_t> log;

  std::uint32_t add_slow(std::uint32_t x, std::uint32_t y) const {
    const std::uint32_t p = spec.p;
    if (p == 2) return x ^ y;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      r += ((x % p + y % p) % p) * place;
      x /= p;
      y /= p;
      place *= p;
    }
    return r;
  }
};

Field::Field(FieldSpec spec) {
  if (!is_prime(spec.p)) {
    throw InvalidField("field characteristic " + std::to_string(spec.p) +
                       " is not prime");
  }
  if (spec.k == 0) throw InvalidField("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    q *= spec.p;
    if (q > 65536) throw InvalidField("fields larger than 2^16 are not supported");
  }
  if (spec.k == 1) {
    spec.modulus.clear();
  } else {
    if (spec.modulus.empty()) {
      spec.modulus = builtin_modulus(static_cast<std::uint32_t>(q));
      if (spec.modulus.empty()) {
        throw InvalidField("no built-in modulus for q = " + std::to_string(q) +
                           "; supply one explicitly");
      }
    }
    if (spec.modulus.size() != spec.k + 1) {
      throw InvalidField("modulus must have degree " + std::to_string(spec.k));
    }
    for (auto& c : spec.modulus) {
      if (c >= spec.p) throw InvalidField("modulus coefficient not reduced mod p");
    }
    if (spec.modulus.back() != 1) throw InvalidField("modulus must be monic");
    if (!is_irreducible(spec.p, spec.modulus)) {
      throw InvalidField("modulus is reducible over F_" + std::to_string(spec.p));
    }
  }

  auto t = std::make_shared<Tables>();
  t->spec = spec;
  t->q = static_cast<std::uint32_t>(q);
  const std::uint32_t qq = t->q;

  t->neg.resize(qq);
  for (std::uint32_t x = 0; x < qq; ++x) {
    Digits d = to_digits(x, spec.p, spec.k);
    for (auto& c : d) c = (spec.p - c) % spec.p;
    t->neg[x] = static_cast<std::uint16_t>(from_digits(d, spec.p));
  }
  if (qq <= 256) {
    t->add.resize(static_cast<std::size_t>(qq) * qq);
    for (std::uint32_t x = 0; x < qq; ++x) {
      for (std::uint32_t y = 0; y < qq; ++y) {
        t->add[x * qq + y] = static_cast<std::uint16_t>(t->add_slow(x, y));
      }
    }
  }

  // Multiplicative group is cyclic: find a generator and tabulate powers.
  t->log.assign(qq, 0);
  t->exp.assign(2 * (qq - 1), 0);
  if (qq == 2) {
    t->exp = {1, 1};
  } else {
    Digits modulus = spec.k == 1 ? Digits{0, 1} : spec.modulus;
    auto times = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
      if (spec.k == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % spec.p);
      return from_digits(mul_mod(to_digits(a, spec.p, spec.k),
                                 to_digits(b, spec.p, spec.k), modulus, spec.p),
                         spec.p);
    };
    bool found = false;
    for (std::uint32_t g = 2; g < qq && !found; ++g) {
      std::uint32_t x = 1;
      std::uint32_t order = 0;
      do {
        x = times(x, g);
        ++order;
      } while (x != 1 && order < qq);
      if (order != qq - 1) continue;
      found = true;
      x = 1;
      for (std::uint32_t i = 0; i < qq - 1; ++i) {
        t->exp[i] = static_cast<std::uint16_t>(x);
        t->exp[i + qq - 1] = static_cast<std::uint16_t>(x);
        t->log[x] = i;
        x = times(x, g);
      }
    }
    if (!found) throw InternalError("no primitive element found");
  }
  tables_ = std::move(t);
}

Field Field::prime(std::uint32_t p) { return Field(FieldSpec{p, 1, {}}); }

Field Field::of_order(std::uint32_t q) {
  if (is_prime(q)) return prime(q);
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    std::uint32_t k = 0;
    std::uint64_t v = 1;
    while (v < q) {
      v *= p;
      ++k;
    }
    if (v == q) return Field(FieldSpec{p, k, builtin_modulus(q)});
  }
  throw InvalidField(std::to_string(q) + " is not a prime power");
}

const FieldSpec& Field::spec() const { return tables_->spec; }
std::uint32_t Field::characteristic() const { return tables_->spec.p; }
std::uint32_t Field::degree() const { return tables_->spec.k; }
std::uint32_t Field::order() const { return tables_->q; }

Scalar Field::from_integer(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(tables_->spec.p);
  return Scalar{static_cast<std::uint16_t>(((n % p) + p) % p)};
}

Scalar Field::from_code(std::uint32_t code) const {
  if (code >= tables_->q) {
    throw DomainError("scalar code " + std::to_string(code) + " out of range for F_" +
                      std::to_string(tables_->q));
  }
  return Scalar{static_cast<std::uint16_t>(code)};
}

Scalar Field::add(Scalar x, Scalar y) const {
  const auto& t = *tables_;
  if (!t.add.empty()) return Scalar{t.add[x.code * t.q + y.code]};
  return Scalar{static_cast<std::uint16_t>(t.add_slow(x.code, y.code))};
}

Scalar Field::neg(Scalar x) const { return Scalar{tables_->neg[x.code]}; }

Scalar Field::sub(Scalar x, Scalar y) const { return add(x, neg(y)); }

Scalar Field::mul(Scalar x, Scalar y) const {
  if (x.is_zero() || y.is_zero()) return Scalar{0};
  const auto& t = *tables_;
  return Scalar{t.exp[t.log[x.code] + t.log[y.code]]};
}

Scalar Field::inv(Scalar x) const {
  if (x.is_zero()) throw DomainError("inverse of zero");
  const auto& t = *tables_;
  return Scalar{t.exp[(t.q - 1 - t.log[x.code]) % (t.q - 1)]};
}

std::string Field::to_string(Scalar x) const { return std::to_string(x.code); }

bool operator==(const Field& a, const Field& b) {
  return a.tables_ == b.tables_ || a.spec() == b.spec();
}

}  // namespace ringrank
