#pragma once

#include "fekete/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fekete {

struct UnsupportedN : std::invalid_argument {
  explicit UnsupportedN(int n) : std::invalid_argument("unsupported point count n = " + std::to_string(n)) {}
};

/// Critical-point equations of the logarithmic energy in dot-product
/// coordinates: x_ij = <w_i, w_j> and z_ij = 1 / (1 - x_ij), i < j.
/// Points are labelled 1..n in variable names ("x12", "z34").
struct FeketeSystem {
  int n = 0;
  VariableTable vars;
  std::vector<MultiPoly> center_mass;  // 1 + sum_{k != j} x_jk
  std::vector<MultiPoly> z_def;        // z_ij (1 - x_ij) - 1
  std::vector<MultiPoly> gradient;     // one per ordered pair (k, i), k != i

  static std::size_t pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // 0-based i < j, row-major over the strict upper triangle
    return static_cast<std::size_t>(i * (2 * n - i - 1) / 2 + (j - i - 1));
  }

  /// Variable index of x_ij (0-based point labels, i != j).
  std::size_t x(int i, int j) const { return pair_index(n, i, j); }
  std::size_t z(int i, int j) const { return pair_count() + pair_index(n, i, j); }
  std::size_t pair_count() const { return static_cast<std::size_t>(n * (n - 1) / 2); }

  MonomialOrder order() const { return vars.grevlex(); }

  std::vector<MultiPoly> generators() const {
    std::vector<MultiPoly> g = center_mass;
    g.insert(g.end(), z_def.begin(), z_def.end());
    g.insert(g.end(), gradient.begin(), gradient.end());
    return g;
  }

  std::size_t equation_count() const { return center_mass.size() + z_def.size() + gradient.size(); }
};

inline FeketeSystem build_system(int n) {
  if (n < 3 || n > 8) throw UnsupportedN(n);
  FeketeSystem s;
  s.n = n;
  for (const char* prefix : {"x", "z"})
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::string a = prefix + std::to_string(i + 1) + std::to_string(j + 1);
        std::string b = prefix + std::to_string(j + 1) + std::to_string(i + 1);
        std::size_t idx = s.vars.add(a);
        s.vars.alias(b, idx);
      }
  const MonomialOrder ord = s.order();
  auto X = [&](int i, int j) {
    if (i == j) return MultiPoly::constant(Rational(1), ord);
    return MultiPoly::variable(s.x(i, j), ord);
  };
  auto Z = [&](int i, int j) { return MultiPoly::variable(s.z(i, j), ord); };
  const MultiPoly one = MultiPoly::constant(Rational(1), ord);

  for (int j = 0; j < n; ++j) {
    MultiPoly p = one;
    for (int k = 0; k < n; ++k)
      if (k != j) p += X(j, k);
    s.center_mass.push_back(p);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.z_def.push_back(Z(i, j) * (one - X(i, j)) - one);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      MultiPoly p(ord);
      for (int j = 0; j < n; ++j)
        if (j != k) p += (X(i, k) - X(i, j)) * Z(k, j);
      p -= X(i, k).scaled(Rational(n - 1));
      s.gradient.push_back(p);
    }
  return s;
}

}  // namespace fekete
