#pragma once

#include "fekete/expr.hpp"
#include "fekete/interval.hpp"
#include "fekete/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fekete {

struct IncompatibleTowers : std::invalid_argument {
  IncompatibleTowers() : std::invalid_argument("towers have no common embedding with at most 4 generators") {}
};

inline constexpr std::size_t kMaxTowerGenerators = 4;

namespace detail {

inline bool is_squarefree(long m) {
  if (m == 0) return false;
  long a = m < 0 ? -m : m;
  for (long p = 2; p * p <= a; ++p)
    if (a % (p * p) == 0) return false;
  return true;
}

/// Writes m = s^2 * core with core square-free; returns (s, core).
inline std::pair<long, long> squarefree_decompose(long m) {
  long s = 1, core = m < 0 ? -1 : 1;
  long a = m < 0 ? -m : m;
  for (long p = 2; p * p <= a; ++p) {
    int e = 0;
    while (a % p == 0) {
      a /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) s *= p;
    if (e % 2) core *= p;
  }
  core *= a;
  return {s, core};
}

}  // namespace detail

/// Multi-quadratic field Q(sqrt(r_1), ..., sqrt(r_k)). Radicands are
/// square-free integers, pairwise independent modulo squares. A negative
/// radicand stands for i*sqrt(|r|); sqrt(-1) is i.
class Tower {
 public:
  Tower() = default;

  /// Strict constructor: rejects radicands that are not square-free or that
  /// are products of earlier ones modulo squares.
  explicit Tower(std::vector<long> radicands) {
    for (long r : radicands) {
      if (r == 1 || !detail::is_squarefree(r)) throw std::invalid_argument("radicand must be square-free and != 1");
      if (express(r)) throw std::invalid_argument("radicand " + std::to_string(r) + " depends on earlier radicands");
      if (r_.size() == kMaxTowerGenerators) throw IncompatibleTowers();
      r_.push_back(r);
    }
  }

  /// Builds a tower from arbitrary non-zero integers, dropping square factors
  /// and any radicand already expressible (e.g. {2, 3, 6} -> {2, 3}).
  static Tower normalized(const std::vector<long>& values) {
    Tower t;
    for (long v : values) t = t.with(v);
    return t;
  }

  /// This tower extended so that sqrt(m) is expressible.
  Tower with(long m) const {
    if (m == 0) throw std::invalid_argument("radicand 0");
    if (express(m)) return *this;
    long core = detail::squarefree_decompose(m).second;
    if (r_.size() == kMaxTowerGenerators) throw IncompatibleTowers();
    Tower t = *this;
    t.r_.push_back(core);
    return t;
  }

  std::size_t size() const { return r_.size(); }
  std::size_t dimension() const { return std::size_t{1} << r_.size(); }
  const std::vector<long>& radicands() const { return r_; }
  long radicand(std::size_t j) const { return r_.at(j); }

  /// sqrt(m) == coeff * basis(mask), where basis(mask) is the product of the
  /// principal roots sqrt(r_j) for j in mask. Empty when sqrt(m) lies outside.
  struct Expression {
    Rational coeff;
    unsigned mask;
  };

  std::optional<Expression> express(long m) const {
    if (m == 0) return Expression{Rational(0), 0};
    auto [s, core] = detail::squarefree_decompose(m);
    for (unsigned mask = 0; mask < dimension(); ++mask) {
      Integer prod = 1;
      int negatives = 0;
      for (std::size_t j = 0; j < r_.size(); ++j)
        if (mask >> j & 1) {
          prod *= r_[j];
          if (r_[j] < 0) ++negatives;
        }
      // prod = core * q^2 for a positive integer q
      if (sgn(prod) != (core < 0 ? -1 : 1)) continue;
      Integer ratio = prod / core;
      if (ratio * core != prod || !is_perfect_square(ratio)) continue;
      Integer q = isqrt(ratio);
      // prod_j sqrt(r_j) = i^negatives * q * sqrt(|core|), sqrt(core) = i^[core<0] sqrt(|core|)
      int diff = negatives - (core < 0 ? 1 : 0);
      int sign_flip = (diff / 2) % 2 == 0 ? 1 : -1;
      return Expression{Rational(Integer(s * sign_flip), q), mask};
    }
    return std::nullopt;
  }

  /// Smallest tower (this one's generators first) containing both.
  static Tower join(const Tower& a, const Tower& b) {
    Tower t = a;
    for (long r : b.r_) t = t.with(r);
    return t;
  }

  friend bool operator==(const Tower& a, const Tower& b) { return a.r_ == b.r_; }

  std::string to_string() const {
    std::string s = "Q(";
    for (std::size_t j = 0; j < r_.size(); ++j) s += (j ? ", sqrt(" : "sqrt(") + std::to_string(r_[j]) + ")";
    return s + ")";
  }

 private:
  std::vector<long> r_;
};

/// Exact element of a multi-quadratic tower, stored by its coordinates on the
/// basis of subset products of the generators.
class TowerScalar {
 public:
  TowerScalar() : c_(1) {}
  TowerScalar(long v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  TowerScalar(const Rational& v) : c_{v} {}  // NOLINT(google-explicit-constructor)
  TowerScalar(Tower tower, std::vector<Rational> coeffs) : tower_(std::move(tower)), c_(std::move(coeffs)) {
    if (c_.size() != tower_.dimension()) throw std::invalid_argument("coefficient count does not match tower");
  }

  /// sqrt(m) for an integer m, in the smallest tower containing it.
  static TowerScalar sqrt_of(long m) {
    Tower t = Tower().with(m);
    auto e = t.express(m);
    TowerScalar r(t, std::vector<Rational>(t.dimension()));
    r.c_[e->mask] = e->coeff;
    return r;
  }

  const Tower& tower() const { return tower_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& rational_part() const { return c_[0]; }

  bool is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (c_[k] != 0) return false;
    return true;
  }

  friend bool is_zero(const TowerScalar& a) {
    for (const auto& q : a.c_)
      if (q != 0) return false;
    return true;
  }

  /// Same element written in a larger tower that contains this one.
  TowerScalar lifted(const Tower& target) const {
    if (target == tower_) return *this;
    // images of the generators of this tower inside target
    std::vector<TowerScalar> gen;
    for (long r : tower_.radicands()) {
      auto e = target.express(r);
      if (!e) throw IncompatibleTowers();
      TowerScalar g(target, std::vector<Rational>(target.dimension()));
      g.c_[e->mask] = e->coeff;
      gen.push_back(std::move(g));
    }
    TowerScalar out(target, std::vector<Rational>(target.dimension()));
    for (unsigned mask = 0; mask < c_.size(); ++mask) {
      if (c_[mask] == 0) continue;
      TowerScalar b(target, std::vector<Rational>(target.dimension()));
      b.c_[0] = c_[mask];
      for (std::size_t j = 0; j < gen.size(); ++j)
        if (mask >> j & 1) b = mul_same(b, gen[j]);
      out = add_same(out, b, 1);
    }
    return out;
  }

  friend TowerScalar operator+(const TowerScalar& a, const TowerScalar& b) {
    if (a.tower_ == b.tower_) return add_same(a, b, 1);
    Tower t = Tower::join(a.tower_, b.tower_);
    return add_same(a.lifted(t), b.lifted(t), 1);
  }
  friend TowerScalar operator-(const TowerScalar& a, const TowerScalar& b) {
    if (a.tower_ == b.tower_) return add_same(a, b, -1);
    Tower t = Tower::join(a.tower_, b.tower_);
    return add_same(a.lifted(t), b.lifted(t), -1);
  }
  TowerScalar operator-() const {
    TowerScalar r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }
  friend TowerScalar operator*(const TowerScalar& a, const TowerScalar& b) {
    if (a.tower_ == b.tower_) return mul_same(a, b);
    if (b.tower_.size() == 0) return a * b.c_[0];
    if (a.tower_.size() == 0) return b * a.c_[0];
    Tower t = Tower::join(a.tower_, b.tower_);
    return mul_same(a.lifted(t), b.lifted(t));
  }
  friend TowerScalar operator*(const TowerScalar& a, const Rational& q) {
    TowerScalar r = a;
    for (auto& c : r.c_) c *= q;
    return r;
  }
  friend TowerScalar operator/(const TowerScalar& a, const TowerScalar& b) { return a * b.inverse(); }
  TowerScalar& operator+=(const TowerScalar& b) { return *this = *this + b; }
  TowerScalar& operator-=(const TowerScalar& b) { return *this = *this - b; }
  TowerScalar& operator*=(const TowerScalar& b) { return *this = *this * b; }


  /// Automorphism sqrt(r_j) -> -sqrt(r_j).
  TowerScalar conjugate(std::size_t generator) const {
    if (generator >= tower_.size()) throw std::out_of_range("generator index out of range");
    TowerScalar r = *this;
    for (unsigned mask = 0; mask < r.c_.size(); ++mask)
      if (mask >> generator & 1) r.c_[mask] = -r.c_[mask];
    return r;
  }

  /// Inverse via successive conjugate multiplication down to the base field.
  TowerScalar inverse() const {
    if (is_zero(*this)) throw DivisionByZero();
    TowerScalar num(tower_, unit_coeffs(tower_));
    TowerScalar den = *this;
    for (std::size_t j = 0; j < tower_.size(); ++j) {
      TowerScalar c = den.conjugate(j);
      num = mul_same(num, c);
      den = mul_same(den, c);
    }
    // den is now fixed by every conjugation, hence rational
    return num * (Rational(1) / den.c_[0]);
  }

  friend bool operator==(const TowerScalar& a, const TowerScalar& b) {
    if (a.tower_ == b.tower_) return a.c_ == b.c_;
    try {
      Tower t = Tower::join(a.tower_, b.tower_);
      return a.lifted(t).c_ == b.lifted(t).c_;
    } catch (const IncompatibleTowers&) {
      return false;
    }
  }

  /// Certified enclosure of the complex value.
  ComplexInterval enclosure(unsigned precision = 128) const {
    std::vector<ComplexInterval> roots;
    for (long r : tower_.radicands()) {
      Interval s = sqrt(Interval(Rational(r < 0 ? -r : r), precision));
      Interval zero(Rational(0), precision);
      roots.push_back(r < 0 ? ComplexInterval{zero, s} : ComplexInterval{s, zero});
    }
    ComplexInterval acc = ComplexInterval::real(Rational(0), precision);
    for (unsigned mask = 0; mask < c_.size(); ++mask) {
      if (c_[mask] == 0) continue;
      ComplexInterval b = ComplexInterval::real(c_[mask], precision);
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (mask >> j & 1) b = b * roots[j];
      acc = acc + b;
    }
    return acc;
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    for (unsigned mask = 0; mask < c_.size(); ++mask) {
      if (c_[mask] == 0) continue;
      std::complex<double> b = to_double(c_[mask]);
      for (std::size_t j = 0; j < tower_.size(); ++j)
        if (mask >> j & 1) b *= std::sqrt(std::complex<double>(static_cast<double>(tower_.radicand(j))));
      acc += b;
    }
    return acc;
  }

  bool is_real() const {
    for (unsigned mask = 0; mask < c_.size(); ++mask) {
      if (c_[mask] == 0) continue;
      int negatives = 0;
      for (std::size_t j = 0; j < tower_.size(); ++j)
        if ((mask >> j & 1) && tower_.radicand(j) < 0) ++negatives;
      if (negatives % 2) return false;
    }
    return true;
  }

  /// Sign of a real element, decided on a certified enclosure refined until it
  /// excludes zero.
  int real_sign() const {
    if (!is_real()) throw std::domain_error("sign of a non-real element");
    if (is_zero(*this)) return 0;
    for (unsigned prec = 64;; prec *= 2) {
      Interval re = enclosure(prec).re;
      if (re.certainly_positive()) return 1;
      if (re.certainly_negative()) return -1;
    }
  }

  /// Same element in the smallest sub-tower spanned by the generators it
  /// actually uses.
  TowerScalar simplified() const {
    unsigned used = 0;
    for (unsigned mask = 0; mask < c_.size(); ++mask)
      if (c_[mask] != 0) used |= mask;
    if (used + 1 == c_.size()) return *this;
    std::vector<long> keep;
    std::vector<std::size_t> pos;
    for (std::size_t j = 0; j < tower_.size(); ++j)
      if (used >> j & 1) {
        pos.push_back(j);
        keep.push_back(tower_.radicand(j));
      }
    Tower t(keep);
    std::vector<Rational> c(t.dimension());
    for (unsigned mask = 0; mask < c_.size(); ++mask) {
      if (c_[mask] == 0) continue;
      unsigned m = 0;
      for (std::size_t k = 0; k < pos.size(); ++k)
        if (mask >> pos[k] & 1) m |= 1u << k;
      c[m] = c_[mask];
    }
    return TowerScalar(std::move(t), std::move(c));
  }

  /// Canonical text, e.g. "(-7+3*sqrt(6))/5", "sqrt(-1)/5", "2".
  std::string to_string() const;

 private:
  static std::vector<Rational> unit_coeffs(const Tower& t) {
    std::vector<Rational> c(t.dimension());
    c[0] = 1;
    return c;
  }

  static TowerScalar add_same(const TowerScalar& a, const TowerScalar& b, int s) {
    TowerScalar r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      if (s > 0) r.c_[k] += b.c_[k];
      else r.c_[k] -= b.c_[k];
    }
    return r;
  }

  // e_S * e_T = e_{S xor T} * prod_{j in S and T} r_j
  static TowerScalar mul_same(const TowerScalar& a, const TowerScalar& b) {
    const Tower& t = a.tower_;
    std::vector<Rational> out(t.dimension());
    for (unsigned s = 0; s < a.c_.size(); ++s) {
      if (a.c_[s] == 0) continue;
      for (unsigned u = 0; u < b.c_.size(); ++u) {
        if (b.c_[u] == 0) continue;
        Rational v = a.c_[s] * b.c_[u];
        unsigned both = s & u;
        for (std::size_t j = 0; j < t.size(); ++j)
          if (both >> j & 1) v *= t.radicand(j);
        out[s ^ u] += v;
      }
    }
    return TowerScalar(t, std::move(out));
  }

  Tower tower_;
  std::vector<Rational> c_;
};

inline std::string TowerScalar::to_string() const {
  // common denominator over all coordinates
  Integer den = 1;
  for (const auto& q : c_) den = lcm(den, Integer(q.get_den()));
  std::string body;
  int nonzero = 0;
  for (unsigned mask = 0; mask < c_.size(); ++mask) {
    if (c_[mask] == 0) continue;
    ++nonzero;
    Integer num = Integer(c_[mask].get_num()) * (den / Integer(c_[mask].get_den()));
    bool neg = sgn(num) < 0;
    if (neg) num = -num;
    std::string radical;
    for (std::size_t j = 0; j < tower_.size(); ++j)
      if (mask >> j & 1) radical += (radical.empty() ? "" : "*") + std::string("sqrt(") + std::to_string(tower_.radicand(j)) + ")";
    std::string term;
    if (radical.empty()) term = num.get_str();
    else if (num == 1) term = radical;
    else term = num.get_str() + "*" + radical;
    if (body.empty()) body = (neg ? "-" : "") + term;
    else body += (neg ? "-" : "+") + term;
  }
  if (nonzero == 0) return "0";
  if (den == 1) return body;
  if (nonzero > 1) body = "(" + body + ")";
  return body + "/" + den.get_str();
}

/// Parses the scalar syntax "p/q", "sqrt(m)", "(-7+3*sqrt(6))/5".
inline TowerScalar parse_tower_scalar(std::string_view text) {
  ExprLeaves<TowerScalar> leaves;
  leaves.number = [](const Rational& q) { return TowerScalar(q); };
  leaves.sqrt_of = [](long m) { return TowerScalar::sqrt_of(m); };
  return parse_expression(text, leaves).simplified();
}

}  // namespace fekete
