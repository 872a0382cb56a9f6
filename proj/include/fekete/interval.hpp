#pragma once

#include "fekete/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>

namespace fekete {

/// Closed interval with exact rational endpoints. After every operation the
/// endpoints are rounded outward onto the dyadic grid 2^-precision, so an
/// Interval always encloses the exact real it stands for.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& v, unsigned precision = 128) : lo_(v), hi_(v), prec_(precision) {}
  Interval(Rational lo, Rational hi, unsigned precision) : lo_(std::move(lo)), hi_(std::move(hi)), prec_(precision) {
    if (lo_ > hi_) throw std::invalid_argument("empty interval");
    round_outward();
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  unsigned precision() const { return prec_; }
  Rational width() const { return hi_ - lo_; }
  double mid() const { return to_double(Rational((lo_ + hi_) / 2)); }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool certainly_negative() const { return sgn(hi_) < 0; }
  bool certainly_positive() const { return sgn(lo_) > 0; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_, std::max(a.prec_, b.prec_));
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_, std::max(a.prec_, b.prec_));
  }
  Interval operator-() const { return Interval(-hi_, -lo_, prec_); }

  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    Rational lo = p[0], hi = p[0];
    for (const auto& v : p) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    return Interval(lo, hi, std::max(a.prec_, b.prec_));
  }

  friend Interval operator*(const Interval& a, const Rational& c) {
    if (sgn(c) >= 0) return Interval(a.lo_ * c, a.hi_ * c, a.prec_);
    return Interval(a.hi_ * c, a.lo_ * c, a.prec_);
  }

  Interval inverse() const {
    if (contains_zero()) throw DivisionByZero();
    return Interval(Rational(1) / hi_, Rational(1) / lo_, prec_);
  }

  friend Interval operator/(const Interval& a, const Interval& b) { return a * b.inverse(); }

  /// Enclosure of sqrt over the non-negative part of the interval.
  friend Interval sqrt(const Interval& a) {
    if (sgn(a.hi_) < 0) throw std::domain_error("sqrt of negative interval");
    Rational lo = sgn(a.lo_) > 0 ? a.lo_ : Rational(0);
    return Interval(sqrt_floor(lo, a.prec_), sqrt_ceil(a.hi_, a.prec_), a.prec_);
  }

  std::string to_string() const {
    return "[" + std::to_string(to_double(lo_)) + ", " + std::to_string(to_double(hi_)) + "]";
  }

 private:
  static Integer scale(unsigned prec) { return Integer(1) << prec; }

  static Rational floor_to_grid(const Rational& v, unsigned prec) {
    Integer s = scale(prec);
    Integer q;
    Rational t = v * s;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return Rational(q, s);
  }
  static Rational ceil_to_grid(const Rational& v, unsigned prec) {
    Integer s = scale(prec);
    Integer q;
    Rational t = v * s;
    mpz_cdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return Rational(q, s);
  }
  // floor(sqrt(v) * 2^prec) / 2^prec
  static Rational sqrt_floor(const Rational& v, unsigned prec) {
    Integer s = scale(prec);
    Rational t = v * s * s;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return Rational(isqrt(q), s);
  }
  static Rational sqrt_ceil(const Rational& v, unsigned prec) {
    Integer s = scale(prec);
    Rational t = v * s * s;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Integer r = isqrt(q);
    if (r * r < q) r += 1;
    return Rational(r, s);
  }

  void round_outward() {
    if (lo_.get_den() != 1 || hi_.get_den() != 1) {
      lo_ = floor_to_grid(lo_, prec_);
      hi_ = ceil_to_grid(hi_, prec_);
      lo_.canonicalize();
      hi_.canonicalize();
    }
  }

  Rational lo_{0}, hi_{0};
  unsigned prec_ = 128;
};

/// Rectangular complex enclosure.
struct ComplexInterval {
  Interval re, im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval real(const Rational& v, unsigned prec) { return {Interval(v, prec), Interval(Rational(0), prec)}; }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }
  ComplexInterval operator-() const { return {-re, -im}; }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const Rational& c) { return {a.re * c, a.im * c}; }
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    Interval den = b.re * b.re + b.im * b.im;
    ComplexInterval num = a * ComplexInterval{b.re, -b.im};
    return {num.re / den, num.im / den};
  }

  /// Principal square root. Fails when the enclosure touches the branch cut.
  friend ComplexInterval sqrt(const ComplexInterval& z) {
    if (!z.im.contains_zero() || z.re.certainly_positive()) {
      Interval mod = sqrt(z.re * z.re + z.im * z.im);
      Interval half(Rational(1, 2), z.re.precision());
      Interval r = sqrt((mod + z.re) * half);
      if (z.im.certainly_positive()) return {r, sqrt((mod - z.re) * half)};
      if (z.im.certainly_negative()) return {r, -sqrt((mod - z.re) * half)};
      return {r, z.im / (r * Interval(Rational(2), z.re.precision()))};
    }
    if (z.im.lo() == 0 && z.im.hi() == 0 && z.re.certainly_negative())
      return {Interval(Rational(0), z.re.precision()), sqrt(-z.re)};
    throw std::domain_error("complex sqrt enclosure straddles the branch cut");
  }

  bool is_real() const { return im.lo() == 0 && im.hi() == 0; }
  std::complex<double> mid() const { return {re.mid(), im.mid()}; }
  bool contains(const std::complex<double>& v, double slack = 0) const {
    return to_double(re.lo()) - slack <= v.real() && v.real() <= to_double(re.hi()) + slack &&
           to_double(im.lo()) - slack <= v.imag() && v.imag() <= to_double(im.hi()) + slack;
  }
};

}  // namespace fekete
