#include "ringrank/element_literal.hpp"

#include <cctype>
#include <cstdint>

namespace ringrank {

namespace {

class LiteralParser {
 public:
  LiteralParser(const Algebra& algebra, std::string_view text) : alg_(algebra), text_(text) {}

  Element parse() {
    Element total = alg_.zero();
    skip_space();
    if (at_end()) fail("empty literal");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      Element term = parse_term();
      total += negate ? -term : term;
      skip_space();
      if (at_end()) break;
      if (peek() == '+') {
        negate = false;
      } else if (peek() == '-') {
        negate = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return total;
  }

 private:
  Element parse_term() {
    skip_space();
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const Scalar c = parse_coefficient();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        return parse_name().scaled(c);
      }
      return alg_.one().scaled(c);
    }
    return parse_name();
  }

  Scalar parse_coefficient() {
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v >= alg_.field().order()) {
        pos_ = start;
        fail("coefficient must be a residue code below q = " +
             std::to_string(alg_.field().order()));
      }
      ++pos_;
    }
    return Scalar{static_cast<std::uint16_t>(v)};
  }

  Element parse_name() {
    const std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a basis name");
    while (!at_end()) {
      const char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) break;
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    try {
      return alg_.named(name);
    } catch (const DomainError&) {
      pos_ = start;
      fail("unknown basis name '" + std::string(name) + "'");
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw LiteralError("element literal \"" + std::string(text_) + "\" at offset " +
                       std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const Algebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const Algebra& algebra, std::string_view literal) {
  return LiteralParser(algebra, literal).parse();
}

std::string format_element(const Element& x) {
  const auto& names = x.algebra().basis_names();
  std::string out;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Scalar c = x.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (c.code != 1) out += std::to_string(c.code) + '*';
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace ringrank
