#include "fekete/catalog.hpp"
#include "fekete/interval.hpp"
#include "fekete/quotient.hpp"
#include "fekete/tower.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fekete;

namespace {

TowerScalar T(const char* s) { return parse_tower_scalar(s); }

TowerScalar random_element(std::mt19937& rng, const Tower& t) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<Rational> c(t.dimension());
  for (auto& q : c) q = make_rational(num(rng), den(rng));
  return TowerScalar(t, c);
}

}  // namespace

TEST(Rational, ParseAndLowestTerms) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(make_rational(1, 0), DivisionByZero);
}

TEST(Tower, DefiningRelation) {
  EXPECT_EQ(T("sqrt(6)") * T("sqrt(6)"), TowerScalar(6));
  EXPECT_EQ(T("sqrt(-1)") * T("sqrt(-1)"), TowerScalar(-1));
  EXPECT_EQ(T("sqrt(2)") * T("sqrt(3)"), T("sqrt(6)"));
}

TEST(Tower, ConjugateSum) {
  EXPECT_EQ(T("(-7+3*sqrt(6))/5") + T("(-7-3*sqrt(6))/5"), TowerScalar(make_rational(-14, 5)));
}

TEST(Tower, InverseMultipliesBackToOne) {
  const TowerScalar x = T("(-7+3*sqrt(6))/5");
  const TowerScalar inv = TowerScalar(1) / (TowerScalar(1) - x);
  EXPECT_EQ(inv * (TowerScalar(1) - x), TowerScalar(1));
  EXPECT_EQ(inv, T("(4+sqrt(6))/6"));
  EXPECT_THROW(TowerScalar(0).inverse(), DivisionByZero);
}

TEST(Tower, Conjugation) {
  const TowerScalar a = T("(-7+3*sqrt(6))/5");
  EXPECT_EQ(a.conjugate(0), T("(-7-3*sqrt(6))/5"));
  EXPECT_EQ(a.conjugate(0).conjugate(0), a);
  const TowerScalar q = TowerScalar(make_rational(2, 7));
  EXPECT_THROW(q.conjugate(0), std::out_of_range);
  EXPECT_TRUE(q.is_rational());
}

TEST(Tower, Enclosures) {
  const auto a = T("(-7+3*sqrt(6))/5").enclosure(60);
  EXPECT_NEAR(a.re.mid(), 0.0696938, 1e-6);
  EXPECT_TRUE(a.im.contains_zero());
  const auto b = T("sqrt(-1)/sqrt(5)").enclosure(60);
  EXPECT_NEAR(b.im.mid(), 0.447214, 1e-6);
  EXPECT_NEAR(b.re.mid(), 0.0, 1e-15);
  const auto c = T("36-15*sqrt(6)").enclosure(128);
  EXPECT_TRUE(c.re.certainly_negative());
  EXPECT_LT(to_double(c.re.width()), 1e-30);
}

TEST(Tower, RealSign) {
  EXPECT_EQ(T("36-15*sqrt(6)").real_sign(), -1);
  EXPECT_EQ(T("sqrt(2)+sqrt(3)-sqrt(10)").real_sign(), -1);
  EXPECT_EQ(T("(11-4*sqrt(6))/5").real_sign(), 1);
  EXPECT_THROW(T("sqrt(-1)").real_sign(), std::domain_error);
}

// field axioms on random elements of three towers
class TowerAxioms : public ::testing::TestWithParam<std::vector<long>> {};

TEST_P(TowerAxioms, RandomElements) {
  std::mt19937 rng(1234);
  const Tower t = Tower::normalized(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_element(rng, t), b = random_element(rng, t), c = random_element(rng, t);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, TowerScalar(0));
    EXPECT_EQ(a + TowerScalar(0), a);
    EXPECT_EQ(a * TowerScalar(1), a);
    if (!is_zero(a)) EXPECT_EQ(a * a.inverse(), TowerScalar(1));
    for (std::size_t g = 0; g < t.size(); ++g) {
      EXPECT_EQ((a * b).conjugate(g), a.conjugate(g) * b.conjugate(g));
      EXPECT_EQ((a + b).conjugate(g), a.conjugate(g) + b.conjugate(g));
    }
    const auto z = (a * b).to_complex(), zz = a.to_complex() * b.to_complex();
    EXPECT_NEAR(std::abs(z - zz), 0.0, 1e-9 * (1 + std::abs(zz)));
  }
}

INSTANTIATE_TEST_SUITE_P(Towers, TowerAxioms,
                         ::testing::Values(std::vector<long>{6}, std::vector<long>{-1, 5},
                                           std::vector<long>{2, 3, 5}));

TEST(Tower, MixedTowersLift) {
  EXPECT_EQ(T("sqrt(2)") * T("sqrt(3)") * T("sqrt(5)"), T("sqrt(30)"));
  EXPECT_EQ((T("sqrt(2)") + T("sqrt(3)")) * (T("sqrt(2)") - T("sqrt(3)")), TowerScalar(-1));
  EXPECT_FALSE(T("sqrt(2)") == T("sqrt(3)"));
}

TEST(Interval, OutwardRounding) {
  const Interval two(Rational(2), 64);
  const Interval s = sqrt(two);
  EXPECT_TRUE(s.lo() * s.lo() <= 2);
  EXPECT_TRUE(s.hi() * s.hi() >= 2);
  EXPECT_LT(to_double(s.width()), 1e-18);
  const Interval third(make_rational(1, 3), 64);
  EXPECT_TRUE(third.contains(make_rational(1, 3)));
  EXPECT_TRUE((third - third).contains_zero());
}

TEST(Quotient, Complex2RelationsHold) {
  const auto id = complex2_ideal();
  const auto x45 = QuotientScalar::parse(id, "x45");
  const auto rel = x45 * x45 * Rational(25) + x45 * Rational(28) + QuotientScalar::constant(id, Rational(19));
  EXPECT_TRUE(is_zero(rel));
  EXPECT_EQ(id->root_count(), 8u);
  const auto inv = x45.inverse();
  EXPECT_EQ(inv * x45, QuotientScalar::constant(id, Rational(1)));
}

TEST(Quotient, EnclosureOfRoot) {
  const auto id = complex2_ideal();
  const auto x45 = QuotientScalar::parse(id, "x45");
  // roots of 25 t^2 + 28 t + 19
  bool found_plus = false, found_minus = false;
  for (std::size_t k = 0; k < id->root_count(); ++k) {
    const auto e = x45.enclosure(k, 96).mid();
    EXPECT_NEAR(e.real(), -14.0 / 25, 1e-12);
    EXPECT_NEAR(std::abs(e.imag()), 3 * std::sqrt(31.0) / 25, 1e-12);
    (e.imag() > 0 ? found_plus : found_minus) = true;
  }
  EXPECT_TRUE(found_plus && found_minus);
}
