#include <string>

#include "doctest.h"
#include "ringrank/element_literal.hpp"
#include "ringrank/ring_spec.hpp"

using namespace ringrank;

namespace {

std::string data(const char* name) { return std::string(RINGRANK_TEST_DATA) + "/" + name; }

template <class E>
std::string message_of(const char* text) {
  try {
    parse_ring_spec(text);
  } catch (const E& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("constructions from spec files") {
  CHECK(load_ring_spec(data("m2f2.json")).dim() == 4);
  CHECK(load_ring_spec(data("block12f2.json")).dim() == 9);
  const Algebra s = load_ring_spec(data("sum_f4.json"));
  CHECK(s.dim() == 7);
  CHECK(s.field().order() == 4);
  CHECK(s.description() == "M_2(F_4) + op(T_2(F_4))");
  const Algebra raw = load_ring_spec(data("raw_dual_numbers.json"));
  const Element eps = raw.named("eps");
  CHECK((eps * eps).is_zero());
  CHECK(raw.one() == raw.named("one"));
}

TEST_CASE("element literal namespaces follow the construction") {
  const Algebra b = load_ring_spec(data("block12f2.json"));
  CHECK_NOTHROW(parse_element(b, "J+K"));
  CHECK_NOTHROW(parse_element(b, "B211"));
  const Algebra s = load_ring_spec(data("sum_f4.json"));
  CHECK_NOTHROW(parse_element(s, "P1.E12+3*P2.E22"));
}

TEST_CASE("flat structure lists are accepted") {
  const char* text = R"({"field": {"p": 2},
    "construction": {"kind": "raw", "dim": 2,
      "structure": [1,0, 0,1, 0,1, 1,0], "unit": [1, 0]}})";
  const Algebra a = parse_ring_spec(text);
  CHECK(a.dim() == 2);
  CHECK(a.basis_element(1) * a.basis_element(1) == a.one());
}

TEST_CASE("each error kind is distinct") {
  CHECK_THROWS_AS(load_ring_spec(data("bad_syntax.json")), SpecError);
  CHECK_THROWS_AS(load_ring_spec(data("bad_prime.json")), InvalidField);
  CHECK_THROWS_AS(load_ring_spec(data("bad_modulus.json")), InvalidField);
  CHECK_THROWS_AS(load_ring_spec(data("bad_assoc.json")), InvalidAlgebra);
  CHECK_THROWS_AS(load_ring_spec(data("bad_kind.json")), SpecError);
  CHECK_THROWS_AS(load_ring_spec(data("missing.json")), SpecError);
}

TEST_CASE("diagnostics carry positions") {
  try {
    load_ring_spec(data("bad_syntax.json"));
    FAIL("expected a SpecError");
  } catch (const SpecError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
  }
  CHECK(message_of<SpecError>(R"({"field": {"p": 2}, "construction": {"kind": "matrix"}})")
            .find("/construction") != std::string::npos);
  CHECK(message_of<SpecError>(R"({"field": {"p": 2}, "construction": {"kind": "matrix", "n": "2"}})")
            .find("/construction/n") != std::string::npos);
  CHECK(message_of<SpecError>(
            R"({"field": {"p": 2}, "construction": {"kind": "direct_sum", "parts": [{"kind": "matrix", "n": 1}, {"kind": "x"}]}})")
            .find("/construction/parts/1/kind") != std::string::npos);
  CHECK(message_of<SpecError>(
            R"({"field": {"p": 2}, "construction": {"kind": "raw", "dim": 1, "structure": [[[2]]], "unit": [1]}})")
            .find("/construction/structure/0/0/0") != std::string::npos);
  CHECK(message_of<SpecError>(R"({"construction": {"kind": "matrix", "n": 2}})")
            .find("field") != std::string::npos);
  CHECK(message_of<InvalidAlgebra>(
            R"({"field": {"p": 2}, "construction": {"kind": "raw", "dim": 1, "structure": [[[1]]], "unit": [0]}})")
            .find("unit") != std::string::npos);
}
