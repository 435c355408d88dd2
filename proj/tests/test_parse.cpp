#include "uinf/parse.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace uinf;

namespace {

FockVector mono(std::vector<int> parts) { return FockVector::basis(Partition(std::move(parts))); }

}  // namespace

TEST_CASE("vector literals") {
  CHECK(parse_fock("a(-1)a(-1)|0>") == mono({1, 1}));
  CHECK(parse_fock("3/2 * a(-2)|0> + a(-1)|0>") ==
        mono({2}) * Rational(3, 2) + mono({1}));
  CHECK(parse_fock("|0>") == FockVector::vacuum());
  CHECK(parse_fock("-2 * |0>") == FockVector::vacuum() * Rational(-2));
  CHECK(parse_fock("0").is_zero());
  CHECK(parse_fock("a(-2)|0> - a(-1)|0>") == mono({2}) - mono({1}));
  CHECK(parse_fock("a(-1)|0> + -1 * a(-1)|0>").is_zero());
}

TEST_CASE("whitespace insensitivity") {
  CHECK(parse_fock("  3/2*a(-2)|0>+a(-1)|0> ") == parse_fock("3/2 * a(-2)|0> + a(-1)|0>"));
  CHECK(parse_fock("a ( - 2 ) |0>") == mono({2}));
}

TEST_CASE("uelement literals") {
  CHECK(parse_uelement("[ a(-1)|0> ]{2,2}") == UElement::single(mono({1}), 2, 2));
  CHECK(parse_uelement("[|0>]{0,1}") == UElement::single(FockVector::vacuum(), 0, 1));
  CHECK(parse_uelement("[a(-1)|0>]{1,2} + [2 * a(-2)|0>]{0,0}") ==
        UElement::single(mono({1}), 1, 2) + UElement::single(mono({2}) * Rational(2), 0, 0));
  CHECK(parse_uelement("[0]{1,1}").is_zero());
  CHECK(parse_uelement("0").is_zero());
}

TEST_CASE("parse_element dispatches on the leading token") {
  Element e = parse_element("[a(-1)|0>]{1,1}");
  CHECK(std::holds_alternative<UElement>(e));
  e = parse_element("a(-1)|0>");
  CHECK(std::holds_alternative<FockVector>(e));
}

TEST_CASE("parse errors carry positions and expectations") {
  CHECK_THROWS_AS(parse_fock("a(-1)"), ParseError);
  CHECK_THROWS_AS(parse_fock("a(1)|0>"), ParseError);
  CHECK_THROWS_AS(parse_fock("3/0 * |0>"), ParseError);
  CHECK_THROWS_AS(parse_fock("3 a(-1)|0>"), ParseError);
  CHECK_THROWS_AS(parse_fock("a(-1)|0> junk"), ParseError);
  CHECK_THROWS_AS(parse_uelement("[a(-1)|0>]{1}"), ParseError);
  CHECK_THROWS_AS(parse_uelement("[a(-1)|0>]"), ParseError);
  bool caught = false;
  try {
    parse_fock("a(-1)|0> +\n  oops");
  } catch (const ParseError& e) {
    caught = true;
    CHECK(e.line() == 2);
    CHECK(e.column() >= 3);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
  CHECK(caught);
}

TEST_CASE("print/parse round trip on computed elements") {
  const FockVector u = mono({1});
  std::vector<FockVector> vectors = {
      FockVector(),
      FockVector::vacuum(),
      star_n(u, u, 1),
      circ_n(mono({2}), mono({1, 1}), 1),
      mono({3, 2, 1}) * Rational(-7, 3) + mono({1}) * Rational(1, 2),
  };
  testing_oracles::RandomElements rnd(5);
  for (int i = 0; i < 10; ++i) vectors.push_back(rnd.vector());
  for (const FockVector& v : vectors) CHECK(parse_fock(v.str()) == v);

  std::vector<UElement> elements = {
      UElement(),
      UElement::single(star_n(u, u, 2), 2, 2),
      diamond(UElement::single(u, 1, 1), UElement::single(u, 1, 1)),
  };
  for (int i = 0; i < 10; ++i) elements.push_back(rnd.element(3));
  for (const UElement& a : elements) CHECK(parse_uelement(a.str()) == a);
}

TEST_CASE("canonical printing order and forms") {
  FockVector v = mono({3, 1}) * Rational(-2) + mono({2, 1}) * Rational(-3);
  CHECK(v.str() == "-3 * a(-2)a(-1)|0> + -2 * a(-3)a(-1)|0>");  // weight 3 before weight 4
  CHECK(mono({1, 1}).str() == "a(-1)a(-1)|0>");
  CHECK(FockVector::vacuum().str() == "|0>");
  CHECK((FockVector::vacuum() * Rational(3, 2)).str() == "3/2 * |0>");
  CHECK(FockVector().str() == "0");
  CHECK(UElement::single(mono({1}), 1, 2).str() == "[ a(-1)|0> ]{1,2}");
  // partitions of equal weight order (1,...,1) first
  FockVector w = mono({2}) + mono({1, 1});
  CHECK(w.str() == "a(-1)a(-1)|0> + a(-2)|0>");
}
