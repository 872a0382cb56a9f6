#pragma once

#include "fekete/expr.hpp"
#include "fekete/groebner.hpp"
#include "fekete/interval.hpp"
#include "fekete/parse.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fekete {

struct NotTriangular : std::invalid_argument {
  NotTriangular() : std::invalid_argument("defining relations are not a triangular chain of quadratics") {}
};

/// Zero-dimensional relation ideal over a few algebraic indeterminates, with
/// its grevlex Groebner basis fixed at construction.
class DefiningIdeal {
 public:
  DefiningIdeal(VariableTable vars, std::vector<MultiPoly> relations)
      : vars_(std::move(vars)), relations_(std::move(relations)) {
    auto order = vars_.grevlex();
    for (auto& r : relations_) r = r.reordered(order);
    gb_ = buchberger(relations_, order);
    standard_ = standard_monomials(gb_);
    for (std::size_t k = 0; k < standard_.size(); ++k) index_.emplace(standard_[k], k);
  }

  /// Parses relations such as "25*x45^2 + 28*x45 + 19" over the named variables.
  static std::shared_ptr<const DefiningIdeal> parse(const std::vector<std::string>& names,
                                                    const std::vector<std::string>& relations) {
    VariableTable vars(names);
    std::vector<MultiPoly> polys;
    for (const auto& text : relations) polys.push_back(parse_polynomial(text, vars));
    return std::make_shared<const DefiningIdeal>(std::move(vars), std::move(polys));
  }

  const VariableTable& vars() const { return vars_; }
  const std::vector<MultiPoly>& relations() const { return relations_; }
  const GroebnerBasis& basis() const { return gb_; }
  MonomialOrder order() const { return gb_.order; }
  std::size_t dimension() const { return standard_.size(); }
  const std::vector<Monomial>& standard_basis() const { return standard_; }

  MultiPoly normal_form(const MultiPoly& p) const { return reduce(p.reordered(order()), gb_.basis); }

  /// Coordinates of a normal form on the standard monomials.
  std::vector<Rational> coordinates(const MultiPoly& nf) const {
    std::vector<Rational> v(dimension());
    for (const auto& t : nf.terms()) v[index_.at(t.mono)] = t.coeff;
    return v;
  }

  MultiPoly from_coordinates(const std::vector<Rational>& v) const {
    std::vector<Term<Rational>> terms;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) terms.push_back({v[k], standard_[k]});
    return MultiPoly::from_terms(std::move(terms), order());
  }

  /// Number of root choices when relation k is quadratic in variable k with
  /// coefficients in the earlier variables.
  std::size_t root_count() const {
    check_triangular();
    return std::size_t{1} << relations_.size();
  }

  /// Certified enclosure of the common root selected by `choice`: bit k
  /// picks the sign of the square root when solving relation k.
  std::vector<ComplexInterval> root(std::size_t choice, unsigned precision = 128) const {
    check_triangular();
    std::vector<ComplexInterval> values;
    const ComplexInterval one = ComplexInterval::real(Rational(1), precision);
    for (std::size_t k = 0; k < relations_.size(); ++k) {
      // relation = a*v^2 + b*v + c, v = variable k
      MultiPoly coef[3] = {MultiPoly(order()), MultiPoly(order()), MultiPoly(order())};
      for (const auto& t : relations_[k].terms()) {
        unsigned e = t.mono[k];
        Monomial rest = t.mono;
        rest.set(k, 0);
        coef[e] += MultiPoly::term(t.coeff, rest, order());
      }
      std::vector<ComplexInterval> known = values;
      known.resize(vars_.size(), one);
      auto ev = [&](const MultiPoly& p) { return evaluate<ComplexInterval>(p, known, one); };
      ComplexInterval a = ev(coef[2]), b = ev(coef[1]), c = ev(coef[0]);
      int sgn_choice = (choice >> k & 1) ? -1 : 1;
      if (coef[2].is_zero()) {
        values.push_back(-c / b);
        continue;
      }
      ComplexInterval disc = b * b - a * c * Rational(4);
      ComplexInterval s = sqrt(disc);
      if (sgn_choice < 0) s = -s;
      values.push_back((-b + s) / (a * Rational(2)));
    }
    return values;
  }

  static MultiPoly parse_polynomial(const std::string& text, const VariableTable& vars) {
    return fekete::parse_polynomial(text, vars);
  }

 private:
  void check_triangular() const {
    for (std::size_t k = 0; k < relations_.size(); ++k) {
      const auto& r = relations_[k];
      std::uint64_t allowed = (std::uint64_t{2} << k) - 1;
      if (k >= vars_.size() || (r.support() & ~allowed) || !(r.support() >> k & 1)) throw NotTriangular();
      for (const auto& t : r.terms())
        if (t.mono[k] > 2) throw NotTriangular();
    }
  }

  VariableTable vars_;
  std::vector<MultiPoly> relations_;
  GroebnerBasis gb_;
  std::vector<Monomial> standard_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Element of Q[vars]/I, always held as its normal form.
class QuotientScalar {
 public:
  QuotientScalar() = default;
  QuotientScalar(std::shared_ptr<const DefiningIdeal> ideal, const MultiPoly& p)
      : ideal_(std::move(ideal)), rep_(ideal_->normal_form(p)) {}

  static QuotientScalar constant(std::shared_ptr<const DefiningIdeal> ideal, const Rational& q) {
    auto order = ideal->order();
    return QuotientScalar(std::move(ideal), MultiPoly::constant(q, order));
  }

  static QuotientScalar parse(std::shared_ptr<const DefiningIdeal> ideal, const std::string& text) {
    MultiPoly p = DefiningIdeal::parse_polynomial(text, ideal->vars());
    return QuotientScalar(std::move(ideal), p);
  }

  const MultiPoly& representative() const { return rep_; }
  const std::shared_ptr<const DefiningIdeal>& ideal() const { return ideal_; }

  friend bool is_zero(const QuotientScalar& a) { return a.rep_.is_zero(); }
  friend bool operator==(const QuotientScalar& a, const QuotientScalar& b) {
    return a.ideal_ == b.ideal_ && a.rep_ == b.rep_;
  }

  friend QuotientScalar operator+(const QuotientScalar& a, const QuotientScalar& b) {
    return make(a.common(b), a.rep_ + b.rep_);
  }
  friend QuotientScalar operator-(const QuotientScalar& a, const QuotientScalar& b) {
    return make(a.common(b), a.rep_ - b.rep_);
  }
  QuotientScalar operator-() const { return make(ideal_, -rep_); }
  friend QuotientScalar operator*(const QuotientScalar& a, const QuotientScalar& b) {
    auto id = a.common(b);
    return QuotientScalar(id, a.rep_ * b.rep_);
  }
  friend QuotientScalar operator*(const QuotientScalar& a, const Rational& q) { return make(a.ideal_, a.rep_.scaled(q)); }
  friend QuotientScalar operator/(const QuotientScalar& a, const QuotientScalar& b) { return a * b.inverse(); }
  QuotientScalar& operator+=(const QuotientScalar& b) { return *this = *this + b; }
  QuotientScalar& operator-=(const QuotientScalar& b) { return *this = *this - b; }
  QuotientScalar& operator*=(const QuotientScalar& b) { return *this = *this * b; }

  /// Inverse by solving the multiplication-map system; fails for zero
  /// divisors as well as zero.
  QuotientScalar inverse() const {
    const auto& id = *ideal_;
    const std::size_t dim = id.dimension();
    // column j = coordinates of rep * b_j
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim + 1));
    for (std::size_t j = 0; j < dim; ++j) {
      auto col = id.coordinates(id.normal_form(rep_.times_monomial(id.standard_basis()[j])));
      for (std::size_t i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    m[0][dim] = 1;  // the standard basis starts with the monomial 1
    for (std::size_t c = 0, r = 0; c < dim; ++c, ++r) {
      std::size_t p = r;
      while (p < dim && m[p][c] == 0) ++p;
      if (p == dim) throw DivisionByZero();
      std::swap(m[p], m[r]);
      Rational inv = Rational(1) / m[r][c];
      for (auto& v : m[r]) v *= inv;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i == r || m[i][c] == 0) continue;
        Rational f = m[i][c];
        for (std::size_t k = c; k <= dim; ++k) m[i][k] -= f * m[r][k];
      }
    }
    std::vector<Rational> sol(dim);
    for (std::size_t i = 0; i < dim; ++i) sol[i] = m[i][dim];
    return make(ideal_, id.from_coordinates(sol));
  }

  ComplexInterval enclosure(std::size_t root_choice, unsigned precision = 128) const {
    auto point = ideal_->root(root_choice, precision);
    return evaluate<ComplexInterval>(rep_, point, ComplexInterval::real(Rational(1), precision));
  }

  std::string to_string() const { return fekete::to_string(rep_, ideal_->vars()); }

 private:
  // rep already in normal form (linear combinations of normal forms)
  static QuotientScalar make(std::shared_ptr<const DefiningIdeal> ideal, MultiPoly rep) {
    QuotientScalar q;
    q.ideal_ = std::move(ideal);
    q.rep_ = std::move(rep);
    return q;
  }

  const std::shared_ptr<const DefiningIdeal>& common(const QuotientScalar& b) const {
    if (ideal_ != b.ideal_) throw DomainMismatch();
    return ideal_;
  }

  std::shared_ptr<const DefiningIdeal> ideal_;
  MultiPoly rep_;
};

}  // namespace fekete
