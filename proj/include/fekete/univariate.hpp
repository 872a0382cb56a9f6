#pragma once

#include "fekete/poly.hpp"

#include <stdexcept>
#include <vector>

namespace fekete {

/// Dense univariate polynomial over Q; coeffs[k] multiplies t^k.
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<Rational> coeffs, std::size_t var = 0) : c_(std::move(coeffs)), var_(var) { trim(); }

  /// Accepts polynomials involving at most one variable.
  static Univariate from_poly(const MultiPoly& p) {
    std::uint64_t s = p.support();
    if (std::popcount(s) > 1) throw std::invalid_argument("polynomial is not univariate");
    std::size_t var = s ? static_cast<std::size_t>(__builtin_ctzll(s)) : 0;
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
      unsigned e = t.mono[var];
      if (c.size() <= e) c.resize(e + 1);
      c[e] += t.coeff;
    }
    return Univariate(std::move(c), var);
  }

  MultiPoly to_poly(std::size_t var, MonomialOrder order) const {
    std::vector<Term<Rational>> terms;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) terms.push_back({c_[k], Monomial::variable(var, static_cast<unsigned>(k))});
    return MultiPoly::from_terms(std::move(terms), order);
  }

  std::size_t variable() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }

  Univariate derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return Univariate(std::move(d), var_);
  }

  Univariate monic() const {
    if (is_zero()) return *this;
    auto r = *this;
    Rational inv = Rational(1) / lead();
    for (auto& q : r.c_) q *= inv;
    return r;
  }

  /// Quotient and remainder of Euclidean division.
  std::pair<Univariate, Univariate> divmod(const Univariate& d) const {
    if (d.is_zero()) throw DivisionByZero();
    std::vector<Rational> r = c_;
    std::vector<Rational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    for (int k = degree(); k >= d.degree(); --k) {
      Rational f = r[k] / d.lead();
      if (f == 0) continue;
      q[k - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j) r[k - d.degree() + j] -= f * d.c_[j];
    }
    return {Univariate(std::move(q), var_), Univariate(std::move(r), var_)};
  }

  friend Univariate gcd(Univariate a, Univariate b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  Univariate squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("squarefree part of zero");
    auto g = gcd(*this, derivative());
    return divmod(g).first;
  }

  /// Horner evaluation in any ring S supporting S * Rational.
  template <class S>
  S evaluate(const S& x, const S& one) const {
    S acc = one * Rational(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + one * c_[k];
    return acc;
  }

  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
  std::size_t var_ = 0;
};

}  // namespace fekete
