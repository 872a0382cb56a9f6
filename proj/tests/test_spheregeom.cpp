#include "fekete/spheregeom.hpp"

#include <gtest/gtest.h>

using namespace fekete;

namespace {

const Eigenvalue* find_value(const GramSpectrum& s, double v, double tol = 5e-3) {
  for (const auto& e : s.eigenvalues)
    if (std::abs(e.value - std::complex<double>(v)) < tol) return &e;
  return nullptr;
}

}  // namespace

TEST(GramSpectrum, Simplex) {
  const auto s = gram_spectrum(get_candidate("simplex5"));
  EXPECT_TRUE(s.psd);
  EXPECT_EQ(s.rank, 5);
  const auto* e = find_value(s, 1.2);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->multiplicity, 5);
  ASSERT_TRUE(e->exact);
  EXPECT_EQ(*e->exact, TowerScalar(make_rational(6, 5)));
}

TEST(GramSpectrum, ConjugateThreeThreeIsIndefinite) {
  const auto s = gram_spectrum(get_candidate("three3_conj"));
  EXPECT_TRUE(s.is_real);
  EXPECT_FALSE(s.psd);
  EXPECT_EQ(s.rank, 3);
  ASSERT_NE(find_value(s, -9.48), nullptr);
  EXPECT_EQ(find_value(s, 7.74)->multiplicity, 2);
}

TEST(GramSpectrum, RealOne) {
  const auto s = gram_spectrum(get_candidate("real1"));
  EXPECT_EQ(s.rank, 4);
  EXPECT_EQ(find_value(s, 4.0 / 3)->multiplicity, 3);
  EXPECT_EQ(find_value(s, 2.0)->multiplicity, 1);
}

TEST(GramSpectrum, ComplexTwoHasThreeDistinctNonzero) {
  const auto s = gram_spectrum(get_candidate("complex2"));
  EXPECT_FALSE(s.is_real);
  EXPECT_FALSE(s.psd);
  EXPECT_EQ(s.rank, 3);
  int nonzero = 0;
  for (const auto& e : s.eigenvalues)
    if (std::abs(e.value) > 1e-6) {
      ++nonzero;
      EXPECT_EQ(e.multiplicity, 1);
    }
  EXPECT_EQ(nonzero, 3);
}

TEST(Embed, RoundTripAllRealPsd) {
  for (const auto& name : candidate_names()) {
    const auto c = get_candidate(name);
    if (!c.is_real()) continue;
    const auto s = gram_spectrum(c);
    if (!s.psd) {
      EXPECT_THROW(embed(c, 5), NotPSD) << name;
      continue;
    }
    for (int d = s.rank; d <= 5; ++d) {
      const auto e = embed(c, d);
      EXPECT_LE(e.residual, 1e-10) << name << " d=" << d;
      EXPECT_LE(e.norm_defect, 1e-10) << name;
    }
    if (s.rank > 1) EXPECT_THROW(embed(c, s.rank - 1), RankExceedsDimension) << name;
  }
}

TEST(Embed, SquareOnCircle) {
  const auto e = embed(get_candidate("equator4"), 2);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(e.W.col(i).norm(), 1.0, 1e-12);
  EXPECT_NEAR(e.W.col(0).dot(e.W.col(1)), 0.0, 1e-12);
  EXPECT_NEAR(e.W.col(0).dot(e.W.col(2)), -1.0, 1e-12);
}

TEST(ComplexEmbed, Residuals) {
  for (const char* name : {"complex1_plus", "complex1_minus", "three3_conj", "real4"}) {
    const auto e = complex_embed(get_candidate(name));
    EXPECT_LE(e.residual, 1e-8) << name;
  }
  EXPECT_EQ(complex_embed(get_candidate("complex1_plus")).W.rows(), 3);
  for (std::size_t root = 0; root < 8; ++root) EXPECT_LE(complex_embed(get_candidate("complex2"), root).residual, 1e-8);
}
