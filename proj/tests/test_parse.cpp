#include <gtest/gtest.h>

#include "agf/agf.hpp"
#include "agf/parse.hpp"
#include "agf/recurrence.hpp"

using namespace agf;

namespace {

RationalFn expr(const char* s) { return parse_rational_expression(s); }

}  // namespace

TEST(Expression, PolynomialsAndQuotients) {
  EXPECT_EQ(expr("n+z"), RationalFn(Poly2::n() + Poly2::z()));
  EXPECT_EQ(expr("-(n+z)"), RationalFn(-(Poly2::n() + Poly2::z())));
  EXPECT_EQ(expr("2n z"), RationalFn(Poly2::n() * Poly2::z() * BigRat(2)));
  EXPECT_EQ(expr("0.5z"), RationalFn(Poly2::z() * BigRat(1, 2)));
  EXPECT_EQ(expr("(z^2+1)/(n+1)"),
            RationalFn(Poly2::z() * Poly2::z() + Poly2::constant(1), Poly2::n() + Poly2::constant(1)));
  EXPECT_EQ(expr("1/(1/z)"), RationalFn(Poly2::z()));
  EXPECT_EQ(expr("3/6"), RationalFn::constant(BigRat(1, 2)));
  EXPECT_EQ(expr("2.5e-1"), RationalFn::constant(BigRat(1, 4)));
}

TEST(Expression, EvaluatesExactly) {
  const RationalFn r = expr("(n+z)/(n-z)");
  EXPECT_EQ(r.evaluate(BigRat(3), BigRat(1)), BigRat(2));
  EXPECT_THROW(r.evaluate(BigRat(2), BigRat(2)), pole_error);
}

TEST(Expression, ErrorsCarryColumn) {
  try {
    parse_rational_expression("n + * z", true, 4, 8);
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 13);
  }
  EXPECT_THROW(expr("z/0"), parse_error);
  EXPECT_THROW(expr("(n+z"), parse_error);
  EXPECT_THROW(expr("z^9"), parse_error);
  EXPECT_THROW(expr("q"), parse_error);
  EXPECT_THROW(parse_rational_expression("n", false), parse_error);
}

TEST(Literal, ComplexForms) {
  auto lit = [](const char* s) { return parse_complex_literal(s); };
  EXPECT_EQ(lit("1.5+2i").re, BigRat(3, 2));
  EXPECT_EQ(lit("1.5+2i").im, 2);
  EXPECT_EQ(lit("-i").im, -1);
  EXPECT_EQ(lit("i").im, 1);
  EXPECT_EQ(lit("3i").re, 0);
  EXPECT_EQ(lit("-2").re, -2);
  EXPECT_TRUE(lit("-2").is_real());
  EXPECT_EQ(lit(" 1 - 2.5 i ").im, BigRat(-5, 2));
  EXPECT_EQ(lit("1e-3-2.5e2i").re, BigRat(1, 1000));
  EXPECT_EQ(lit("1e-3-2.5e2i").im, -250);
  EXPECT_EQ(lit("1/3").re, BigRat(1, 3));
  EXPECT_THROW(lit(""), parse_error);
  EXPECT_THROW(lit("1+x"), parse_error);
}

TEST(KeyValue, CommentsAndAnchorKeys) {
  const auto kv = read_key_value_lines("# header\n\ncoeff0: -1  # trailing\nz0=1/2: 0.25\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0].key, "coeff0");
  EXPECT_EQ(kv[0].value, "-1");
  EXPECT_EQ(kv[0].line, 3);
  EXPECT_EQ(kv[1].key, "z0=1/2");
  EXPECT_EQ(kv[1].value, "0.25");
  EXPECT_THROW(read_key_value_lines("no colon here"), parse_error);
}

TEST(RecurrenceFile, StandardFormOfMirrorE) {
  const PRecurrence rec = parse_recurrence(
      "# (n+z) u_{n+2} - (n+z) u_{n+1} - u_n = 0\n"
      "coeff2: n+z\n"
      "coeff1: -(n+z)\n"
      "coeff0: -1\n"
      "init: n0=1; 0, 1\n");
  EXPECT_EQ(rec.order(), 2);
  const auto a = eval_sequence(rec, BigRat(1, 3), 40);
  const auto b = eval_sequence(mirror_e(), BigRat(1, 3), 40);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].value, b[i].value);
}

TEST(RecurrenceFile, Errors) {
  try {
    parse_recurrence("coeff1: 1\ncoeff0: n +\ninit: n0=1; 1\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_recurrence("coeff1: 1\ncoeff0: -1\n"), parse_error);
  EXPECT_THROW(parse_recurrence("coeff1: 1\ncoeff0: -1\ninit: n0=1; 1, 2\n"), parse_error);
  EXPECT_THROW(parse_recurrence("coeff1: 1\ncoeff0: -1\nfoo: 3\ninit: n0=1; 1\n"), parse_error);
  EXPECT_THROW(parse_recurrence("coeff1: 0\ncoeff0: -1\ninit: n0=1; 1\n"), parse_error);
}

TEST(AfeFile, RoundTripOfFSpec) {
  const AGFSpec spec = parse_agf_spec(
      "coeff2: 1\n"
      "coeff1: z+2\n"
      "coeff0: -(z+2)\n"
      "z0=1: 0.26424111765711535680895245967707826510837773793646\n"
      "z0=0: 0.36787944117144232159552377016146086744581113103177\n");
  EXPECT_EQ(spec.order(), 2);
  EXPECT_EQ(classify_regularity(spec), RegularityClass::Irregular);
  ASSERT_EQ(spec.anchors().size(), 2u);
  EXPECT_EQ(spec.anchors()[0].point, 0);
  EXPECT_NEAR(to_real<double>(spec.anchors()[0].value.re), std::exp(-1.0), 1e-16);
  EXPECT_THROW(parse_agf_spec("coeff1: n\ncoeff0: 1\n"), parse_error);
  EXPECT_THROW(parse_agf_spec("coeff1: 1\ncoeff0: z\nz0=0: 1\nz0=2: 1\n"), parse_error);
}
