#pragma once

#include "fekete/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fekete {

struct ProductEnergy {
  TowerScalar E;             // 2^C(n,2) * prod (1 - x_ij)
  TowerScalar E_normalized;  // prod (1 - x_ij)
};

/// Product of (1 - x_ij) over i < j. Quotient-algebra candidates have no
/// single value and are rejected.
inline ProductEnergy product_energy(const GramCandidate& c) {
  if (c.is_quotient()) throw std::invalid_argument("product energy needs a root selection for " + c.name);
  const auto& X = c.tower();
  TowerScalar p(1);
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j) p *= TowerScalar(1) - X[i][j];
  p = p.simplified();
  const long pairs = static_cast<long>(c.n) * (c.n - 1) / 2;
  return {(p * Rational(pow(Integer(2), static_cast<unsigned long>(pairs)))).simplified(), p};
}

/// Univariate factor of the x45 generator with the roots printed beside it.
struct Factor {
  int row;
  std::string text;
  std::string roots;
};

/// The 22 factors of the generator of I cap Q[x45] for n = 6.
inline const std::vector<Factor>& six_point_factors() {
  static const std::vector<Factor> table = {
      {1, "x45", "0"},
      {2, "(x45 + 1)^2", "-1"},
      {3, "2*x45 - 1", "1/2"},
      {4, "2*x45 + 1", "-1/2"},
      {5, "(5*x45 - 1)^2", "1/5"},
      {6, "5*x45 + 1", "-1/5"},
      {7, "(5*x45 + 7)^2", "-7/5"},
      {8, "(5*x45^2 + 1)^2", "+-i/sqrt(5)"},
      {9, "5*x45^2 - 22*x45 + 5", "(11 +- 4 sqrt 6)/5"},
      {10, "5*x45^2 + 2*x45 - 1", "(-1 +- sqrt 6)/5"},
      {11, "5*x45^2 + 14*x45 - 1", "(-7 +- 3 sqrt 6)/5"},
      {12, "25*x45^2 + 28*x45 + 19", "(-14 +- 3i sqrt 31)/25"},
      {13, "125*x45^2 + 50*x45 - 31", "(-5 +- 6 sqrt 5)/25"},
      {14, "100*x45^4 + 95*x45^3 - 21*x45^2 - 22*x45 + 10", "4 complex"},
      {15, "250*x45^4 + 110*x45^3 - 21*x45^2 - 19*x45 + 4", "4 complex"},
      {16, "400*x45^4 + 488*x45^3 - 111*x45^2 - 196*x45 + 67", "4 complex"},
      {17, "3*x45 + 1", "-1/3"},
      {18, "5*x45 + 4", "-4/5"},
      {19, "10*x45 - 1", "1/10"},
      {20, "25*x45 - 1", "1/25"},
      {21, "25*x45 + 11", "-11/25"},
      {22, "25*x45 + 23", "-23/25"},
  };
  return table;
}

/// Dense coefficient list (constant term first) of a univariate factor.
inline std::vector<Rational> factor_coefficients(const std::string& text) {
  VariableTable vars(std::vector<std::string>{"x45"});
  MultiPoly p = DefiningIdeal::parse_polynomial(text, vars);
  std::vector<Rational> c(p.total_degree() + 1);
  for (const auto& t : p.terms()) c[t.mono[0]] = t.coeff;
  return c;
}

template <class S>
S evaluate_univariate(const std::vector<Rational>& coeffs, const S& x, const S& one) {
  S acc = one * coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * x + one * coeffs[k];
  return acc;
}

/// Row of the first factor vanishing exactly at `value`.
template <class S>
std::optional<int> factor_membership(const S& value, const S& one, const std::vector<Factor>& table) {
  for (const auto& f : table)
    if (is_zero(evaluate_univariate(factor_coefficients(f.text), value, one))) return f.row;
  return std::nullopt;
}

inline std::optional<int> factor_membership(const TowerScalar& value,
                                            const std::vector<Factor>& table = six_point_factors()) {
  return factor_membership(value, TowerScalar(1), table);
}

}  // namespace fekete
