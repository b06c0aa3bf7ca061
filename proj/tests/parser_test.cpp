#include <gtest/gtest.h>

#include "skein/skein.hpp"
#include "support/generators.hpp"

namespace skein::io {
namespace {

using testing::Gen;
using testing::t;

SkeinElement T(std::int64_t p, std::int64_t q, LaurentPoly c = LaurentPoly(1)) { return curve_class(p, q, c); }

ParseError parse_failure(std::string_view text, ElementKind kind) {
  try {
    parse_element(text, kind);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ParseError(ParseError::Kind::Syntax, 0, "");
}

TEST(Parse, Examples) {
  const Expression product = parse_element("T(1,0) * T(0,1)", ElementKind::skein);
  EXPECT_EQ(product.root.op, ExprNode::Op::Mul);
  ASSERT_EQ(product.root.children.size(), 2U);
  EXPECT_EQ(product.root.children[0].op, ExprNode::Op::Atom);
  EXPECT_EQ(product.root.children[1].atom.args, (std::vector<std::int64_t>{0, 1}));

  const Expression sum = parse_element("(t^2-1)*e(1,1) + e(0,0)", ElementKind::nc);
  EXPECT_EQ(sum.root.op, ExprNode::Op::Add);
  EXPECT_EQ(sum.root.children[0].op, ExprNode::Op::Mul);
  EXPECT_TRUE(sum.root.children[0].children[0].is_scalar());
}

TEST(Parse, KindMismatch) {
  const ParseError e = parse_failure("T(1,0) + e(0,1)", ElementKind::skein);
  EXPECT_EQ(e.kind(), ParseError::Kind::KindMismatch);
  EXPECT_EQ(e.column(), 10U);
  EXPECT_EQ(parse_failure("a(2)", ElementKind::nc).kind(), ParseError::Kind::KindMismatch);
  EXPECT_EQ(parse_failure("a(1) * A(2)", ElementKind::solid).kind(), ParseError::Kind::KindMismatch);
  EXPECT_EQ(std::string(parse_failure("T(1,0) + e(0,1)", ElementKind::skein).what()).rfind("KindMismatch(10)", 0), 0U);
}

TEST(Parse, SyntaxErrorsCarryColumns) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"T(1,0", 6}, {"T(1,0) +", 9}, {"", 1}, {"T(1;0)", 4}, {"Q(1,0)", 1}, {"3 $ 4", 3}, {"(t + 1", 7}, {"t^", 3},
  };
  for (const auto& [text, column] : cases) {
    const ParseError e = parse_failure(text, ElementKind::skein);
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax) << text;
    EXPECT_EQ(e.column(), column) << text;
    EXPECT_EQ(std::string(e.what()).rfind("SyntaxError(" + std::to_string(column) + ")", 0), 0U) << e.what();
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(parse_skein("T(1,0)*T(0,1)"), T(1, 1, t(1)) + T(1, -1, t(-1)));
  EXPECT_EQ(parse_skein("P(2;1,0)"), T(2, 0) + SkeinElement::scalar(2));
  EXPECT_EQ(parse_skein("1"), SkeinElement::scalar(1));
  EXPECT_EQ(parse_skein("JW(2;1,1)"), T(2, 2) + SkeinElement::scalar(1));
  EXPECT_EQ(parse_skein("-t^2 - t^-2 + 3t*T(2,1)"), SkeinElement::scalar(-t(2) - t(-2)) + T(2, 1, 3 * t(1)));
  EXPECT_EQ(parse_nc("(t^2-1)*e(1,1) + e(0,0)"), NTElement::basis(1, 1, t(2) - 1) + NTElement::scalar(1));
  EXPECT_EQ(parse_solid("A(2) - a(2)"), SolidTorusElement::scalar(-2));
  EXPECT_EQ(parse_solid("(t+1)*a(1)*2"), SolidTorusElement::alpha_power(1, 2 * t(1) + 2));
}

TEST(Eval, ModuleErrorsPropagate) {
  try {
    parse_skein("P(2;2,4)");
    FAIL() << "expected NotPrimitive";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitive);
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(to_text(T(1, 1, t(1)) + T(1, -1, t(-1))), "(t)*T(1,1) + (t^-1)*T(1,-1)");
  EXPECT_EQ(to_text(SkeinElement::scalar(1)), "1");
  EXPECT_EQ(to_text(SkeinElement()), "0");
  EXPECT_EQ(to_text(T(2, 0) - SkeinElement::scalar(2)), "-2 + T(2,0)");
  EXPECT_EQ(to_text(NTElement::basis(1, 1, t(2) - 1) + NTElement::basis(0, 0, -1)), "-e(0,0) + (t^2 - 1)*e(1,1)");
  EXPECT_EQ(to_text(SolidTorusElement::alpha_power(2, 3) - SolidTorusElement::alpha_power(1)), "-a(1) + 3*a(2)");
  EXPECT_EQ(to_json(SolidTorusElement::scalar(-t(2) - t(-2))).dump(), R"([[0,[[-2,"-1"],[2,"-1"]]]])");
  EXPECT_EQ(to_json(LaurentPoly(3) + 2 * t(-1)).dump(), R"([[-1,"2"],[0,"3"]])");
}

TEST(Format, EvaluatedText) {
  EXPECT_EQ(to_text_at(T(1, 0, t(2)), Complex(1.0, 0.0)), "(1+0i)*T(1,0)");
  EXPECT_EQ(to_text_at(SkeinElement(), Complex(1.0, 0.0)), "0");
}

TEST(Format, Deterministic) {
  Gen g(81);
  for (int i = 0; i < 50; ++i) {
    const SkeinElement a = g.skein(5, 10);
    EXPECT_EQ(to_text(a), to_text(SkeinElement(a)));
    EXPECT_EQ(to_json(a).dump(), to_json(a).dump());
  }
}

TEST(RoundTrip, TextSkein) {
  Gen g(82);
  for (int i = 0; i < 200; ++i) {
    SkeinElement a = g.skein(static_cast<int>(g.integer(0, 6)), 15);
    if (g.coin()) a = a + SkeinElement::scalar(g.laurent());
    ASSERT_EQ(parse_skein(to_text(a)), a) << to_text(a);
  }
}

TEST(RoundTrip, TextNc) {
  Gen g(83);
  for (int i = 0; i < 200; ++i) {
    const NTElement a = g.nc(static_cast<int>(g.integer(0, 6)), 15);
    ASSERT_EQ(parse_nc(to_text(a)), a) << to_text(a);
  }
}

TEST(RoundTrip, TextSolid) {
  Gen g(84);
  for (int i = 0; i < 200; ++i) {
    const SolidTorusElement u = g.solid(10);
    ASSERT_EQ(parse_solid(to_text(u)), u) << to_text(u);
  }
}

TEST(RoundTrip, Json) {
  Gen g(85);
  for (int i = 0; i < 200; ++i) {
    const SkeinElement a = g.skein(4, 15) + SkeinElement::scalar(g.laurent());
    const NTElement n = g.nc(4, 15);
    const SolidTorusElement u = g.solid(8);
    const LaurentPoly c = g.laurent(6, 30, 1000000);
    ASSERT_EQ(skein_from_json(Json::parse(to_json(a).dump())), a);
    ASSERT_EQ(nc_from_json(Json::parse(to_json(n).dump())), n);
    ASSERT_EQ(solid_from_json(Json::parse(to_json(u).dump())), u);
    ASSERT_EQ(laurent_from_json(Json::parse(to_json(c).dump())), c);
  }
}

TEST(RoundTrip, BigCoefficients) {
  const LaurentPoly big = LaurentPoly(Integer("123456789012345678901234567890")) * t(-7);
  const SkeinElement a = T(3, -5, big);
  EXPECT_EQ(parse_skein(to_text(a)), a);
  EXPECT_EQ(skein_from_json(to_json(a)), a);
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(laurent_from_json(Json::parse(R"([[0, 1.5]])")), JsonFormatError);
  EXPECT_THROW(laurent_from_json(Json::parse(R"({"a": 1})")), JsonFormatError);
  EXPECT_THROW(laurent_from_json(Json::parse(R"([[0, "12x"]])")), JsonFormatError);
  EXPECT_EQ(laurent_from_json(Json::parse(R"([[1, 3]])")), 3 * t(1));
  EXPECT_THROW(skein_from_json(Json::parse(R"([{"class": "curve", "p": 1}])")), JsonFormatError);
  EXPECT_THROW(nc_from_json(Json::parse(R"([{"p": 1, "q": 0, "coeff": "x"}])")), JsonFormatError);
}

}  // namespace
}  // namespace skein::io
