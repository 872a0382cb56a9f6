#pragma once

#include <algorithm>
#include <bit>
#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fekete {

inline constexpr std::size_t kMaxVariables = 64;

/// Exponent vector over at most kMaxVariables variables. Exponents are capped
/// at 255, which is far beyond anything the Fekete systems produce.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned power) {
    if (i >= kMaxVariables) throw std::out_of_range("variable index");
    if (power > 255) throw std::overflow_error("monomial exponent overflow");
    degree_ = degree_ - exps_[i] + power;
    exps_[i] = static_cast<std::uint8_t>(power);
    if (power) support_ |= (std::uint64_t{1} << i);
    else support_ &= ~(std::uint64_t{1} << i);
  }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_ || (support_ & ~other.support_)) return false;
    std::uint64_t s = support_;
    while (s) {
      int i = __builtin_ctzll(s);
      if (exps_[i] > other.exps_[i]) return false;
      s &= s - 1;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    std::uint64_t s = b.support_;
    while (s) {
      int i = __builtin_ctzll(s);
      unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
      if (e > 255) throw std::overflow_error("monomial exponent overflow");
      r.exps_[i] = static_cast<std::uint8_t>(e);
      s &= s - 1;
    }
    r.degree_ = a.degree_ + b.degree_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    std::uint64_t s = b.support_;
    while (s) {
      int i = __builtin_ctzll(s);
      r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
      if (r.exps_[i] == 0) r.support_ &= ~(std::uint64_t{1} << i);
      s &= s - 1;
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    std::uint64_t s = b.support_;
    while (s) {
      int i = __builtin_ctzll(s);
      if (b.exps_[i] > r.exps_[i]) {
        r.degree_ += b.exps_[i] - r.exps_[i];
        r.exps_[i] = b.exps_[i];
      }
      s &= s - 1;
    }
    r.support_ = a.support_ | b.support_;
    return r;
  }

  /// Coprime leading monomials (Buchberger's product criterion).
  friend bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support_ == b.support_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = support_ * 0x9E3779B97F4A7C15ull;
    std::uint64_t s = support_;
    while (s) {
      int i = __builtin_ctzll(s);
      h = (h ^ (exps_[i] + 0x9e3779b9 + (h << 6) + (h >> 2)));
      s &= s - 1;
    }
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint64_t support_ = 0;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic order, or a block order that eliminates the
/// variables in `front` (grevlex inside each block).
struct MonomialOrder {
  enum class Kind { grevlex, block_elimination };

  Kind kind = Kind::grevlex;
  std::size_t nvars = 0;
  std::uint64_t front = 0;

  static MonomialOrder grevlex(std::size_t nvars) {
    if (nvars > kMaxVariables) throw std::out_of_range("too many variables");
    return {Kind::grevlex, nvars, 0};
  }

  static MonomialOrder eliminate(std::size_t nvars, std::uint64_t front_block) {
    if (nvars > kMaxVariables) throw std::out_of_range("too many variables");
    return {Kind::block_elimination, nvars, front_block};
  }

  bool is_graded() const { return kind == Kind::grevlex || front == 0; }

  /// Returns <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::grevlex) return grevlex_compare(a, b, ~std::uint64_t{0});
    int c = grevlex_compare(a, b, front);
    if (c != 0) return c;
    return grevlex_compare(a, b, ~front);
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int grevlex_compare(const Monomial& a, const Monomial& b, std::uint64_t mask) const {
    unsigned da = 0, db = 0;
    if (mask == ~std::uint64_t{0}) {
      da = a.degree();
      db = b.degree();
    } else {
      for (std::size_t i = 0; i < nvars; ++i)
        if (mask >> i & 1) {
          da += a[i];
          db += b[i];
        }
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = nvars; i-- > 0;) {
      if (!(mask >> i & 1)) continue;
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
};

/// Ordered variable names. Names of the form "x12"/"x21" may be registered as
/// aliases of one variable.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names) {
    for (auto& n : names) add(std::move(n));
  }

  std::size_t add(std::string name) {
    if (index_.count(name)) throw std::invalid_argument("duplicate variable " + name);
    if (names_.size() >= kMaxVariables) throw std::out_of_range("too many variables");
    index_.emplace(name, names_.size());
    names_.push_back(std::move(name));
    return names_.size() - 1;
  }

  void alias(const std::string& name, std::size_t index) { index_.emplace(name, index); }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t at(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::out_of_range("unknown variable " + name);
    return *i;
  }

  MonomialOrder grevlex() const { return MonomialOrder::grevlex(size()); }

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline std::string to_string(const Monomial& m, const VariableTable& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += vars.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace fekete
