#include "fekete/catalog.hpp"
#include "fekete/critverify.hpp"
#include "fekete/parse.hpp"
#include "fekete/poly.hpp"
#include "fekete/system.hpp"
#include "fekete/univariate.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fekete;

namespace {

const VariableTable& xyz() {
  static const VariableTable v(std::vector<std::string>{"x12", "z12", "y"});
  return v;
}

MultiPoly P(const std::string& s) { return parse_polynomial(s, xyz()); }

}  // namespace

TEST(MultiPoly, Arithmetic) {
  EXPECT_EQ(P("x12 + 1") * P("x12 - 1"), P("x12^2 - 1"));
  EXPECT_TRUE((P("3*x12*z12 - y + 2") + -P("3*x12*z12 - y + 2")).is_zero());
  EXPECT_EQ(P("z12*(1 - x12) - 1"), P("-x12*z12 + z12 - 1"));
  EXPECT_EQ(to_string(P("z12*(1 - x12) - 1"), xyz()), "-x12*z12 + z12 - 1");
}

TEST(MultiPoly, TextRoundTrip) {
  for (const char* s : {"3*x12*z12 - z12 + 1", "x12^3*y - 7/2*z12^2 + y", "-1", "0"}) {
    const auto p = P(s);
    EXPECT_EQ(P(to_string(p, xyz())), p) << s;
  }
}

TEST(MultiPoly, RandomRingIdentities) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), exp(0, 3);
  auto random_poly = [&] {
    std::string s = "0";
    for (int k = 0; k < 4; ++k)
      s += " + " + std::to_string(coef(rng)) + "*x12^" + std::to_string(exp(rng)) + "*z12^" + std::to_string(exp(rng)) +
           "*y^" + std::to_string(exp(rng));
    return P(s);
  };
  for (int t = 0; t < 30; ++t) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - b) + b, a);
  }
}

TEST(Reduce, Examples) {
  const std::vector<MultiPoly> b1 = {P("x12")};
  EXPECT_TRUE(reduce(P("x12^2"), b1).is_zero());
  const std::vector<MultiPoly> b2 = {P("x12^2 - 6")};
  EXPECT_EQ(reduce(P("x12^2 + 1"), b2), P("7"));
}

TEST(Reduce, DivisionIdentityAndIdempotence) {
  const std::vector<MultiPoly> basis = {P("x12^2 - y"), P("x12*z12 - 1"), P("y^2 - z12")};
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), exp(0, 3);
  for (int t = 0; t < 25; ++t) {
    std::string s = "0";
    for (int k = 0; k < 5; ++k)
      s += " + " + std::to_string(coef(rng)) + "*x12^" + std::to_string(exp(rng)) + "*z12^" + std::to_string(exp(rng)) +
           "*y^" + std::to_string(exp(rng));
    const auto p = P(s);
    const auto d = divide(p, std::span<const MultiPoly>(basis));
    MultiPoly back = d.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i) back = back + d.quotients[i] * basis[i];
    EXPECT_EQ(back, p);
    const auto r = reduce(p, basis);
    EXPECT_EQ(reduce(r, basis), r);
    for (const auto& term : r.terms())
      for (const auto& g : basis) EXPECT_FALSE(g.lm().divides(term.mono));
  }
}

TEST(Evaluate, CenterOfMassAtTetrahedron) {
  const auto sys = build_system(4);
  const auto c = get_candidate("tetrahedron");
  const auto vals = detail::point_values(c, c.tower(), sys);
  for (const auto& g : sys.center_mass) EXPECT_TRUE(is_zero(evaluate<TowerScalar>(g, vals, TowerScalar(1))));
}

TEST(Evaluate, ZDefinition) {
  const std::vector<Rational> v = {make_rational(-1, 3), make_rational(3, 4), Rational(0)};
  EXPECT_EQ(evaluate<Rational>(P("z12*(1 - x12) - 1"), v, Rational(1)), Rational(0));
}

TEST(Evaluate, GradientAtThreeThree) {
  const auto sys = build_system(6);
  const auto c = get_candidate("three3");
  const auto vals = detail::point_values(c, c.tower(), sys);
  for (const auto& g : sys.gradient) EXPECT_TRUE(is_zero(evaluate<TowerScalar>(g, vals, TowerScalar(1))));
  EXPECT_THROW(evaluate<Rational>(P("y"), std::vector<Rational>{Rational(1)}, Rational(1)), MissingAssignment);
}

TEST(Univariate, SquarefreePart) {
  const VariableTable x(std::vector<std::string>{"x"});
  auto sf = [&](const std::string& s) {
    return to_string(normalized(Univariate::from_poly(parse_polynomial(s, x)).squarefree_part().to_poly(0, x.grevlex())), x);
  };
  EXPECT_EQ(sf("x*(x - 1)"), "x^2 - x");
  EXPECT_EQ(sf("(5*x^2 + 1)^2"), "5*x^2 + 1");
  EXPECT_EQ(sf("(x + 1)^3*(2*x - 1)"), "2*x^2 + x - 1");
}
