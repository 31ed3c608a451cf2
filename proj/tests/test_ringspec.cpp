#include "uzg/ringspec.hpp"

#include <gtest/gtest.h>

namespace {

using uzg::FiniteRing;
using uzg::parse_ring_spec;
using uzg::RingKind;

void expect_parse_error(const std::string& spec, std::size_t position,
                        const std::string& fragment) {
  try {
    parse_ring_spec(spec);
    FAIL() << "expected a parse error for " << spec;
  } catch (const uzg::ParseError& e) {
    EXPECT_EQ(e.position(), position) << spec << ": " << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
        << spec << ": " << e.what();
  }
}

TEST(Spec, Modular) {
  FiniteRing r = parse_ring_spec("zn:12");
  EXPECT_EQ(r.kind(), RingKind::Modular);
  EXPECT_EQ(r.order(), 12u);
  EXPECT_EQ(r.label(), "zn:12");
  EXPECT_EQ(parse_ring_spec("zn:1").order(), 1u);
}

TEST(Spec, Product) {
  FiniteRing r = parse_ring_spec("prod:zn:2,zn:3,zn:5");
  EXPECT_EQ(r.kind(), RingKind::Product);
  EXPECT_EQ(r.order(), 30u);
  EXPECT_EQ(r.label(), "prod:zn:2,zn:3,zn:5");
  FiniteRing m = parse_ring_spec("prod:zn:4,polyq:2:x^2");
  EXPECT_EQ(m.order(), 16u);
  EXPECT_EQ(m.factors()[1].kind(), RingKind::PolyQuotient);
}

TEST(Spec, PolyCaretForm) {
  FiniteRing r = parse_ring_spec("polyq:2:x^2+x+1");
  EXPECT_EQ(r.kind(), RingKind::PolyQuotient);
  EXPECT_EQ(r.order(), 4u);
  EXPECT_EQ(r.label(), "polyq:2:x^2+x+1");
  EXPECT_EQ(parse_ring_spec("polyq:3:x^2").order(), 9u);
  EXPECT_EQ(parse_ring_spec("polyq:2:x^3+x").label(), "polyq:2:x^3+x");
  // coefficient accumulation: x + x + x^2 = x^2 + 2x, reduced mod 3
  EXPECT_EQ(parse_ring_spec("polyq:3:x+x+x^2").label(), "polyq:3:x^2+2x");
  // explicit coefficients and a constant term
  EXPECT_EQ(parse_ring_spec("polyq:5:x^2+3x+4").label(), "polyq:5:x^2+3x+4");
}

TEST(Spec, PolyListForm) {
  FiniteRing r = parse_ring_spec("polyq:2:1,1,1");
  EXPECT_EQ(r.label(), "polyq:2:x^2+x+1");
  EXPECT_EQ(parse_ring_spec("polyq:3:0,0,1").label(), "polyq:3:x^2");
  EXPECT_EQ(parse_ring_spec("polyq:2:1,0,0,1").order(), 8u);
}

TEST(Spec, ListFormInsideProduct) {
  // The list keeps consuming numbers; the comma before a letter ends it.
  FiniteRing r = parse_ring_spec("prod:polyq:2:1,1,1,zn:3");
  EXPECT_EQ(r.order(), 12u);
  EXPECT_EQ(r.factors()[0].label(), "polyq:2:x^2+x+1");
  EXPECT_EQ(r.factors()[1].label(), "zn:3");
}

TEST(Spec, QuotientJacobson) {
  FiniteRing r = parse_ring_spec("quot:zn:12/jacobson");
  EXPECT_EQ(r.order(), 6u);
  EXPECT_EQ(r.label(), "quot:zn:12/jacobson");
  FiniteRing z6 = FiniteRing::zn(6);
  for (uzg::Elem x = 0; x < 6; ++x)
    for (uzg::Elem y = 0; y < 6; ++y) {
      EXPECT_EQ(r.add(x, y), z6.add(x, y));
      EXPECT_EQ(r.mul(x, y), z6.mul(x, y));
    }
}

TEST(Spec, QuotientMaxideal) {
  // Maximal ideals of Z_12 ascending: <3> (size 4) then <2> (size 6).
  EXPECT_EQ(parse_ring_spec("quot:zn:12/maxideal:0").order(), 3u);
  EXPECT_EQ(parse_ring_spec("quot:zn:12/maxideal:1").order(), 2u);
  EXPECT_EQ(parse_ring_spec("quot:zn:12/maxideal:0").label(),
            "quot:zn:12/maxideal:0");
  EXPECT_EQ(parse_ring_spec("quot:prod:zn:2,zn:2/maxideal:0").order(), 2u);
}

TEST(Spec, EnforcesEnumerationLimit) {
  EXPECT_THROW(parse_ring_spec("zn:513"), uzg::LimitError);
  EXPECT_THROW(parse_ring_spec("zn:100", 80), uzg::LimitError);
  EXPECT_NO_THROW(parse_ring_spec("zn:512"));
  EXPECT_THROW(parse_ring_spec("prod:zn:30,zn:30"), uzg::LimitError);
  // the quotient base is also bounded
  EXPECT_THROW(parse_ring_spec("quot:zn:600/jacobson"), uzg::LimitError);
}

TEST(Spec, ErrorPositions) {
  expect_parse_error("", 0, "expected a keyword");
  expect_parse_error("foo:3", 0, "expected zn, prod, polyq, or quot");
  expect_parse_error("zn", 2, "expected ':'");
  expect_parse_error("zn:", 3, "expected a number");
  expect_parse_error("zn:abc", 3, "expected a number");
  expect_parse_error("zn:12x", 5, "unexpected trailing characters");
  expect_parse_error("zn:999999999", 11, "number out of range");
  expect_parse_error("prod:zn:2,", 10, "expected a keyword");
  expect_parse_error("prod:quot:zn:4/jacobson", 5,
                     "product factors must be zn or polyq");
  expect_parse_error("polyq:2:", 8, "expected a number");
  expect_parse_error("polyq:2:x^", 10, "expected a number");
  expect_parse_error("polyq:2:x^70", 12, "exponent out of range");
  expect_parse_error("polyq:1:x^2", 11, "modulus out of range");
  expect_parse_error("quot:zn:12/foo", 11, "expected jacobson or maxideal");
  expect_parse_error("quot:zn:12/maxideal:", 20, "expected a number");
  expect_parse_error("quot:zn:12/maxideal:2", 20,
                     "maximal ideal index out of range, ring has 2");
  expect_parse_error("quot:zn:7/maxideal:1", 19,
                     "maximal ideal index out of range, ring has 1");
}

TEST(Spec, RejectsNonMonicAndDegenerate) {
  EXPECT_THROW(parse_ring_spec("polyq:3:x^2+x^2"), uzg::ContractError);
  EXPECT_THROW(parse_ring_spec("polyq:2:5"), uzg::ContractError);
}

TEST(Spec, MessageFormatCarriesPosition) {
  try {
    parse_ring_spec("zn:abc");
    FAIL();
  } catch (const uzg::ParseError& e) {
    EXPECT_STREQ(e.what(), "parse error at position 3: expected a number");
  }
}

}  // namespace
