#pragma once

#include "fekete/monomial.hpp"
#include "fekete/rational.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fekete {

struct DomainMismatch : std::invalid_argument {
  DomainMismatch() : std::invalid_argument("polynomials live in different rings or orders") {}
};

struct MissingAssignment : std::invalid_argument {
  explicit MissingAssignment(std::size_t var)
      : std::invalid_argument("no value assigned to variable " + std::to_string(var)) {}
};

namespace detail {
// Unqualified call so that coefficient types declared later are found by ADL.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

template <class C>
struct Term {
  C coeff;
  Monomial mono;
};

/// Sparse multivariate polynomial. Terms are kept strictly descending under
/// the polynomial's monomial order with no zero coefficients.
template <class C>
class Poly {
 public:
  using Coeff = C;

  Poly() = default;
  explicit Poly(MonomialOrder order) : order_(order) {}

  static Poly constant(C c, MonomialOrder order) {
    Poly p(order);
    if (!detail::coeff_is_zero(c)) p.terms_.push_back({std::move(c), Monomial{}});
    return p;
  }

  static Poly term(C c, Monomial m, MonomialOrder order) {
    Poly p(order);
    if (!detail::coeff_is_zero(c)) p.terms_.push_back({std::move(c), m});
    return p;
  }

  static Poly variable(std::size_t index, MonomialOrder order) {
    return term(C(1), Monomial::variable(index), order);
  }

  /// Builds a canonical polynomial from arbitrary (unsorted, repeated) terms.
  static Poly from_terms(std::vector<Term<C>> terms, MonomialOrder order) {
    Poly p(order);
    std::sort(terms.begin(), terms.end(), [&](const Term<C>& a, const Term<C>& b) {
      return order.compare(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (detail::coeff_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!detail::coeff_is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<C>>& terms() const { return terms_; }

  const Term<C>& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const C& lc() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Bitmask of variables that occur in some term.
  std::uint64_t support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s |= t.mono.support();
    return s;
  }

  Poly reordered(MonomialOrder order) const {
    if (order.nvars != order_.nvars) throw DomainMismatch();
    return from_terms(terms_, order);
  }

  /// a*this + b*(m*g), single merge pass.
  Poly combine(const C& a, const C& b, const Monomial& m, const Poly& g) const {
    check_same(g);
    Poly r(order_.nvars ? order_ : g.order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    bool unit_a = a == C(1);
    while (i != terms_.end() || j != g.terms_.end()) {
      int c;
      Monomial mj;
      if (j != g.terms_.end()) mj = m * j->mono;
      if (i == terms_.end()) c = -1;
      else if (j == g.terms_.end()) c = 1;
      else c = r.order_.compare(i->mono, mj);
      if (c > 0) {
        r.terms_.push_back({unit_a ? i->coeff : C(a * i->coeff), i->mono});
        ++i;
      } else if (c < 0) {
        C v = b * j->coeff;
        if (!detail::coeff_is_zero(v)) r.terms_.push_back({std::move(v), mj});
        ++j;
      } else {
        C v = unit_a ? C(i->coeff + b * j->coeff) : C(a * i->coeff + b * j->coeff);
        if (!detail::coeff_is_zero(v)) r.terms_.push_back({std::move(v), mj});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) { return p.combine(C(1), C(1), Monomial{}, q); }
  friend Poly operator-(const Poly& p, const Poly& q) { return p.combine(C(1), C(-1), Monomial{}, q); }

  friend Poly operator*(const Poly& p, const Poly& q) {
    p.check_same(q);
    MonomialOrder order = p.order_.nvars ? p.order_ : q.order_;
    std::vector<Term<C>> terms;
    terms.reserve(p.size() * q.size());
    for (const auto& a : p.terms_)
      for (const auto& b : q.terms_) terms.push_back({a.coeff * b.coeff, a.mono * b.mono});
    return from_terms(std::move(terms), order);
  }

  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator-=(const Poly& q) { return *this = *this - q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }

  Poly scaled(const C& c) const {
    if (detail::coeff_is_zero(c)) return Poly(order_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }

  Poly times_monomial(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(C(1), order_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Partial derivative with respect to variable `var`.
  Poly derivative(std::size_t var) const {
    std::vector<Term<C>> terms;
    for (const auto& t : terms_) {
      unsigned e = t.mono[var];
      if (!e) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      terms.push_back({t.coeff * C(e), m});
    }
    return from_terms(std::move(terms), order_);
  }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return C(0);
  }

  friend bool operator==(const Poly& p, const Poly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].mono == q.terms_[i].mono) || !(p.terms_[i].coeff == q.terms_[i].coeff)) return false;
    return true;
  }

  // A polynomial with nvars == 0 carries no ring and only constant terms; it
  // is compatible with every ring.
  void check_same(const Poly& q) const {
    if (order_.nvars && q.order_.nvars && !(order_ == q.order_)) throw DomainMismatch();
  }

 private:
  std::vector<Term<C>> terms_;
  MonomialOrder order_;
};

using MultiPoly = Poly<Rational>;
using IntPoly = Poly<Integer>;

template <class C>
Poly<C> operator/(const Poly<C>& p, const Poly<C>& q) {
  if (!q.is_constant() || q.is_zero()) throw std::invalid_argument("polynomial division by non-constant");
  return p.scaled(C(1) / q.lc());
}

// ---------------------------------------------------------------------------
// Conversions between coefficient domains.

inline IntPoly primitive_part(const MultiPoly& p) {
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, Integer(t.coeff.get_den()));
  std::vector<Term<Integer>> terms;
  Integer content = 0;
  for (const auto& t : p.terms()) {
    Integer c = Integer(t.coeff.get_num()) * (den / Integer(t.coeff.get_den()));
    content = gcd(content, c);
    terms.push_back({c, t.mono});
  }
  if (!p.is_zero()) {
    if (sgn(terms.front().coeff) < 0) content = -content;
    for (auto& t : terms) t.coeff /= content;
  }
  IntPoly r(p.order());
  r = IntPoly::from_terms(std::move(terms), p.order());
  return r;
}

inline MultiPoly to_rational(const IntPoly& p) {
  std::vector<Term<Rational>> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({Rational(t.coeff), t.mono});
  return MultiPoly::from_terms(std::move(terms), p.order());
}

/// Content-normalized copy: integer coefficients with gcd 1 and positive
/// leading coefficient.
inline MultiPoly normalized(const MultiPoly& p) { return to_rational(primitive_part(p)); }

inline MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.lc());
}

// ---------------------------------------------------------------------------
// Multivariate division.

template <class C>
struct DivisionResult {
  std::vector<Poly<C>> quotients;
  Poly<C> remainder;
};

/// Full multivariate division of p by `basis` (field coefficients). Among
/// several divisors of a term the one with the smallest basis index is used.
template <class C>
DivisionResult<C> divide(const Poly<C>& p, std::span<const Poly<C>> basis) {
  for (const auto& b : basis) {
    if (b.is_zero()) throw std::invalid_argument("zero divisor in basis");
    p.check_same(b);
  }
  DivisionResult<C> out;
  out.quotients.assign(basis.size(), Poly<C>(p.order()));
  std::vector<Term<C>> rem;
  Poly<C> h = p;
  while (!h.is_zero()) {
    const auto& lt = h.leading();
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!basis[i].lm().divides(lt.mono)) continue;
      C q = lt.coeff / basis[i].lc();
      Monomial m = lt.mono / basis[i].lm();
      out.quotients[i] = out.quotients[i] + Poly<C>::term(q, m, p.order());
      h = h.combine(C(1), -q, m, basis[i]);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      h = h.combine(C(1), C(-1), Monomial{}, Poly<C>::term(lt.coeff, lt.mono, p.order()));
    }
  }
  out.remainder = Poly<C>::from_terms(std::move(rem), p.order());
  return out;
}

/// Normal form of p modulo `basis`: no term of the result is divisible by any
/// leading monomial of the basis.
template <class C>
Poly<C> reduce(const Poly<C>& p, std::span<const Poly<C>> basis) {
  for (const auto& b : basis)
    if (b.is_zero()) throw std::invalid_argument("zero divisor in basis");
  std::vector<Term<C>> rem;
  Poly<C> h = p;
  while (!h.is_zero()) {
    const auto lt = h.leading();
    const Poly<C>* div = nullptr;
    for (const auto& b : basis)
      if (b.lm().divides(lt.mono)) {
        div = &b;
        break;
      }
    if (div) {
      h = h.combine(C(1), -(lt.coeff / div->lc()), lt.mono / div->lm(), *div);
    } else {
      rem.push_back(lt);
      h = h.combine(C(1), C(-1), Monomial{}, Poly<C>::term(lt.coeff, lt.mono, p.order()));
    }
  }
  return Poly<C>::from_terms(std::move(rem), p.order());
}

template <class C>
Poly<C> reduce(const Poly<C>& p, const std::vector<Poly<C>>& basis) {
  return reduce(p, std::span<const Poly<C>>(basis));
}

// ---------------------------------------------------------------------------
// Evaluation.

/// Evaluates p with variable i replaced by values[i]. `one` fixes the scalar
/// domain for constant polynomials. S must support S * Rational.
template <class S>
S evaluate(const MultiPoly& p, std::span<const S> values, const S& one) {
  S acc = one * Rational(0);
  for (const auto& t : p.terms()) {
    S v = one * t.coeff;
    std::uint64_t s = t.mono.support();
    while (s) {
      int i = __builtin_ctzll(s);
      if (static_cast<std::size_t>(i) >= values.size()) throw MissingAssignment(i);
      for (unsigned e = 0; e < t.mono[i]; ++e) v = v * values[i];
      s &= s - 1;
    }
    acc = acc + v;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Text form: "3*x12*z12 - z12 + 1".

template <class C>
std::string coeff_text(const C& c);

template <>
inline std::string coeff_text<Rational>(const Rational& c) { return c.get_str(); }
template <>
inline std::string coeff_text<Integer>(const Integer& c) { return c.get_str(); }

template <class C>
std::string to_string(const Poly<C>& p, const VariableTable& vars) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    C c = t.coeff;
    bool neg = sign(c) < 0;
    if (neg) c = -c;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    bool unit = c == C(1);
    if (t.mono.is_one()) s += coeff_text(c);
    else {
      if (!unit) s += coeff_text(c) + "*";
      s += to_string(t.mono, vars);
    }
  }
  return s;
}

}  // namespace fekete
