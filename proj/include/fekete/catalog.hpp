#pragma once

#include "fekete/quotient.hpp"
#include "fekete/system.hpp"
#include "fekete/tower.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fekete {

template <class S>
using Matrix = std::vector<std::vector<S>>;

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& name) : std::invalid_argument("unknown candidate '" + name + "'") {}
};

struct MalformedCandidate : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Symmetric dot-product matrix with unit diagonal, over a tower field or
/// over a quotient algebra.
struct GramCandidate {
  std::string name;
  std::string label;  // display name, e.g. "3:3 (sqrt 6)"
  int n = 0;
  std::variant<Matrix<TowerScalar>, Matrix<QuotientScalar>> entries;
  std::shared_ptr<const DefiningIdeal> defining;
  int branch_count = 1;
  int multiplicity = 1;     // census weight per solution
  std::string same_orbit_as;  // set when the candidate lies in another entry's orbit
  std::string provenance;

  bool is_quotient() const { return std::holds_alternative<Matrix<QuotientScalar>>(entries); }
  const Matrix<TowerScalar>& tower() const { return std::get<Matrix<TowerScalar>>(entries); }
  const Matrix<QuotientScalar>& quotient() const { return std::get<Matrix<QuotientScalar>>(entries); }

  bool is_real() const {
    if (is_quotient()) return false;
    for (const auto& row : tower())
      for (const auto& v : row)
        if (!v.is_real()) return false;
    return true;
  }

  /// Entry (i, j) in floating point; quotient entries use root `root_choice`.
  std::complex<double> numeric(int i, int j, std::size_t root_choice = 0) const {
    if (!is_quotient()) return tower()[i][j].to_complex();
    return quotient()[i][j].enclosure(root_choice, 96).mid();
  }
};

/// Cartesian coordinates W (d x n) with unit columns.
struct CoordinateCandidate {
  std::string name;
  Matrix<TowerScalar> W;

  Matrix<TowerScalar> gram() const {
    const std::size_t n = W.empty() ? 0 : W[0].size();
    Matrix<TowerScalar> X(n, std::vector<TowerScalar>(n, TowerScalar(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        TowerScalar s(0);
        for (const auto& row : W) s += row[i] * row[j];
        X[i][j] = s.simplified();
      }
    return X;
  }
};

namespace detail {

// Expands an upper-triangular symbolic pattern (row k lists columns k..n-1)
// or a full pattern, substituting symbols and numbers.
template <class S>
Matrix<S> expand_pattern(const std::vector<std::vector<std::string>>& rows, const std::map<std::string, S>& symbols,
                         const std::function<S(const std::string&)>& literal) {
  const std::size_t n = rows.size();
  auto value = [&](std::string cell) {
    bool neg = !cell.empty() && cell[0] == '-' && cell.size() > 1 && !std::isdigit(static_cast<unsigned char>(cell[1]));
    if (neg) cell = cell.substr(1);
    auto it = symbols.find(cell);
    S v = it != symbols.end() ? it->second : literal(cell);
    return neg ? -v : v;
  };
  Matrix<S> X(n);
  for (std::size_t i = 0; i < n; ++i) X[i].resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool upper = rows[i].size() == n - i;
    if (!upper && rows[i].size() != n) throw MalformedCandidate("pattern row has wrong length");
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      std::size_t j = upper ? i + k : k;
      X[i][j] = value(rows[i][k]);
      if (upper) X[j][i] = X[i][j];
    }
  }
  return X;
}

inline Matrix<TowerScalar> tower_pattern(const std::vector<std::vector<std::string>>& rows,
                                         const std::map<std::string, std::string>& symbols) {
  std::map<std::string, TowerScalar> vals;
  for (const auto& [k, v] : symbols) vals.emplace(k, parse_tower_scalar(v));
  return expand_pattern<TowerScalar>(rows, vals, [](const std::string& s) { return parse_tower_scalar(s); });
}

inline GramCandidate tower_candidate(std::string name, std::string label, const Matrix<TowerScalar>& X,
                                     std::string provenance) {
  GramCandidate c;
  c.name = std::move(name);
  c.label = std::move(label);
  c.n = static_cast<int>(X.size());
  c.entries = X;
  c.provenance = std::move(provenance);
  return c;
}

inline TowerScalar cos_2pi_over(int k, int n) {
  // cos(2 pi k / n) for n in {3, 4, 5, 6}
  k = ((k % n) + n) % n;
  Rational q(k, n);
  q.canonicalize();
  static const std::map<std::pair<long, long>, const char*> table = {
      {{0, 1}, "1"},          {{1, 2}, "-1"},          {{1, 4}, "0"},           {{3, 4}, "0"},
      {{1, 3}, "-1/2"},       {{2, 3}, "-1/2"},        {{1, 6}, "1/2"},         {{5, 6}, "1/2"},
      {{1, 5}, "(-1+sqrt(5))/4"}, {{4, 5}, "(-1+sqrt(5))/4"}, {{2, 5}, "(-1-sqrt(5))/4"}, {{3, 5}, "(-1-sqrt(5))/4"},
  };
  auto it = table.find({q.get_num().get_si(), q.get_den().get_si()});
  if (it == table.end()) throw UnsupportedN(n);
  return parse_tower_scalar(it->second);
}

}  // namespace detail

/// Regular n-gon on a great circle: X_ij = cos(2 pi (i - j) / n).
inline GramCandidate make_ngon(int n) {
  if (n < 3 || n > 6) throw UnsupportedN(n);
  Matrix<TowerScalar> X(n, std::vector<TowerScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X[i][j] = detail::cos_2pi_over(i - j, n);
  return detail::tower_candidate("equator" + std::to_string(n), "Equator", X, "regular polygon on a great circle");
}

/// All off-diagonal dot products equal -1/(n-1).
inline GramCandidate make_simplex(int n) {
  if (n < 3) throw UnsupportedN(n);
  Matrix<TowerScalar> X(n, std::vector<TowerScalar>(n, TowerScalar(Rational(-1, n - 1))));
  for (int i = 0; i < n; ++i) X[i][i] = TowerScalar(1);
  return detail::tower_candidate("simplex" + std::to_string(n - 1), std::to_string(n - 1) + "-simplex", X,
                                 "regular simplex");
}

/// Two parallel equilateral triangles at heights -z0 and z0, in phase, with
/// z0^2 = (-3 + 2 sqrt 6)/5 and radius R^2 = 1 - z0^2. The rows of W are
/// (R a_i, R b_i, z0 s_i); the Gram matrix only needs R^2 and z0^2.
inline GramCandidate make_three3() {
  const TowerScalar z0sq = parse_tower_scalar("(-3+2*sqrt(6))/5");
  const TowerScalar rsq = TowerScalar(1) - z0sq;
  const TowerScalar h = parse_tower_scalar("sqrt(3)/2");
  const TowerScalar half(Rational(-1, 2));
  const std::vector<TowerScalar> a = {TowerScalar(1), half, half, TowerScalar(1), half, half};
  const std::vector<TowerScalar> b = {TowerScalar(0), h, -h, TowerScalar(0), h, -h};
  const std::vector<int> s = {-1, -1, -1, 1, 1, 1};
  Matrix<TowerScalar> X(6, std::vector<TowerScalar>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      X[i][j] = (rsq * (a[i] * a[j] + b[i] * b[j]) + z0sq * Rational(s[i] * s[j])).simplified();
  const auto stored = detail::tower_pattern(
      {{"1", "A", "A", "B", "C", "C"}, {"1", "A", "C", "B", "C"}, {"1", "C", "C", "B"}, {"1", "A", "A"}, {"1", "A"}, {"1"}},
      {{"A", "(-7+3*sqrt(6))/5"}, {"B", "(11-4*sqrt(6))/5"}, {"C", "(-1-sqrt(6))/5"}});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!(X[i][j] == stored[i][j])) throw std::logic_error("3:3 construction disagrees with the stored matrix");
  return detail::tower_candidate("three3", "3:3 (sqrt 6)", X, "two triangles in phase");
}

/// Entrywise conjugation along tower generator `generator`.
inline Matrix<TowerScalar> conjugate_matrix(const Matrix<TowerScalar>& X, long radicand) {
  Matrix<TowerScalar> Y = X;
  for (auto& row : Y)
    for (auto& v : row) {
      const auto& r = v.tower().radicands();
      auto it = std::find(r.begin(), r.end(), radicand);
      if (it != r.end()) v = v.conjugate(static_cast<std::size_t>(it - r.begin()));
    }
  return Y;
}

inline const std::vector<std::string>& candidate_names() {
  static const std::vector<std::string> names = {
      "tetrahedron", "equator4", "simplex4", "one31",  "one4",           "equator5",       "equator6",
      "one5",        "one41",    "three3",   "three3_conj", "simplex5", "complex1_plus", "complex1_minus",
      "complex2",    "real1",    "real2",    "real3",  "real4"};
  return names;
}

inline std::shared_ptr<const DefiningIdeal> complex2_ideal() {
  static const auto ideal = DefiningIdeal::parse(
      {"x45", "x13", "x35"},
      {"25*x45^2 + 28*x45 + 19", "8*x13^2 - 5*x13*x45 + x13 - x45 - 3", "20*x35^2 + 10*x35*x45 + 10*x35 - x45 - 3"});
  return ideal;
}

inline GramCandidate get_candidate(const std::string& name) {
  using detail::tower_candidate;
  using detail::tower_pattern;
  if (name == "tetrahedron") {
    auto c = make_simplex(4);
    c.name = name;
    c.label = "Tetrahedron";
    return c;
  }
  if (name == "equator4" || name == "equator5" || name == "equator6") return make_ngon(name.back() - '0');
  if (name == "simplex4" || name == "simplex5") return make_simplex(name.back() - '0' + 1);
  if (name == "one31")
    return tower_candidate(name, "1:3:1",
                           tower_pattern({{"1", "A", "0", "0", "0"}, {"1", "0", "0", "0"}, {"1", "B", "B"}, {"1", "B"}, {"1"}},
                                         {{"A", "-1"}, {"B", "-1/2"}}),
                           "dipole plus equatorial triangle");
  if (name == "one4")
    return tower_candidate(name, "1:4",
                           tower_pattern({{"1", "A", "A", "A", "A"}, {"1", "B", "C", "B"}, {"1", "B", "C"}, {"1", "B"}, {"1"}},
                                         {{"A", "-1/4"}, {"B", "1/16"}, {"C", "-7/8"}}),
                           "pole plus square at z = -1/4");
  if (name == "one5")
    return tower_candidate(
        name, "1:5",
        tower_pattern({{"1", "A", "A", "A", "A", "A"}, {"1", "B", "C", "C", "B"}, {"1", "B", "C", "C"}, {"1", "B", "C"},
                       {"1", "B"}, {"1"}},
                      {{"A", "-1/5"}, {"B", "(-5+6*sqrt(5))/25"}, {"C", "(-5-6*sqrt(5))/25"}}),
        "pole plus regular pentagon");
  if (name == "one41")
    return tower_candidate(name, "1:4:1",
                           tower_pattern({{"1", "A", "0", "0", "0", "0"},
                                          {"1", "0", "0", "0", "0"},
                                          {"1", "0", "A", "0"},
                                          {"1", "0", "A"},
                                          {"1", "0"},
                                          {"1"}},
                                         {{"A", "-1"}}),
                           "octahedron");
  if (name == "three3") return make_three3();
  if (name == "three3_conj") {
    auto c = make_three3();
    c.name = name;
    c.label = "3:3 (-sqrt 6)";
    c.entries = conjugate_matrix(c.tower(), 6);
    c.provenance = "real conjugate of 3:3";
    return c;
  }
  if (name == "complex1_plus" || name == "complex1_minus") {
    const bool plus = name == "complex1_plus";
    auto c = tower_candidate(name, plus ? "Complex 1 (+)" : "Complex 1 (-)",
                             tower_pattern({{"1", "-1", "-x15", "x15", "x15", "-x15"},
                                            {"1", "x15", "-x15", "-x15", "x15"},
                                            {"1", "x45", "x45", "x25"},
                                            {"1", "x25", "x45"},
                                            {"1", "x45"},
                                            {"1"}},
                                           {{"x45", "1/5"},
                                            {"x25", "-7/5"},
                                            {"x15", plus ? "sqrt(-1)*sqrt(5)/5" : "-sqrt(-1)*sqrt(5)/5"}}),
                             "factor 5*x45 - 1");
    if (!plus) c.same_orbit_as = "complex1_plus";
    return c;
  }
  if (name == "complex2") {
    auto id = complex2_ideal();
    std::map<std::string, QuotientScalar> sym;
    auto q = [&](const char* text) { return QuotientScalar::parse(id, text); };
    sym.emplace("x45", q("x45"));
    sym.emplace("x13", q("x13"));
    sym.emplace("x35", q("x35"));
    sym.emplace("A", q("2*x35 + 3/8*x45 + 1/8"));
    sym.emplace("B", q("-x13 + 5/8*x45 - 1/8"));
    sym.emplace("C", q("-x35 - 1/2*x45 - 1/2"));
    sym.emplace("D", q("-2*x35 - 5/8*x45 - 7/8"));
    GramCandidate c;
    c.name = name;
    c.label = "Complex 2";
    c.n = 6;
    c.defining = id;
    c.entries = detail::expand_pattern<QuotientScalar>(
        {{"1", "A", "x13", "B", "C", "C"}, {"1", "B", "x13", "C", "C"}, {"1", "D", "x35", "x35"}, {"1", "x35", "x35"},
         {"1", "x45"}, {"1"}},
        sym, [&](const std::string& s) { return q(s.c_str()); });
    c.branch_count = 2;
    c.provenance = "factor 25*x45^2 + 28*x45 + 19";
    return c;
  }
  if (name == "real1")
    return tower_candidate(name, "Real 1",
                           tower_pattern({{"1", "x45", "x02", "x02", "x45", "x45"},
                                          {"1", "x02", "x02", "x45", "x45"},
                                          {"1", "x23", "x02", "x02"},
                                          {"1", "x02", "x02"},
                                          {"1", "x45"},
                                          {"1"}},
                                         {{"x45", "-1/3"}, {"x02", "0"}, {"x23", "-1"}}),
                           "factor 3*x45 + 1");
  if (name == "real2")
    return tower_candidate(name, "Real 2",
                           tower_pattern({{"1", "x45", "x02", "x02", "x04", "x04"},
                                          {"1", "x02", "x02", "x04", "x04"},
                                          {"1", "x02", "x02", "x02"},
                                          {"1", "x02", "x02"},
                                          {"1", "x45"},
                                          {"1"}},
                                         {{"x45", "-4/5"}, {"x04", "1/10"}, {"x02", "-1/5"}}),
                           "factor 5*x45 + 4");
  if (name == "real3")
    return tower_candidate(name, "Real 3",
                           tower_pattern({{"1", "x45", "x45", "x03", "x45", "x05"},
                                          {"1", "x12", "x03", "x12", "x45"},
                                          {"1", "x03", "x12", "x45"},
                                          {"1", "x03", "x03"},
                                          {"1", "x45"},
                                          {"1"}},
                                         {{"x45", "1/25"}, {"x05", "-23/25"}, {"x12", "-11/25"}, {"x03", "-1/5"}}),
                           "factor 25*x45 - 1");
  if (name == "real4")
    return tower_candidate(name, "Real 4",
                           tower_pattern({{"1", "x01", "x45", "x45", "x45", "x01"},
                                          {"1", "x45", "x45", "x45", "x01"},
                                          {"1", "x01", "x01", "x45"},
                                          {"1", "x01", "x45"},
                                          {"1", "x45"},
                                          {"1"}},
                                         {{"x45", "0"}, {"x01", "-1/2"}}),
                           "factor x45");
  throw UnknownName(name);
}

inline void finalize_census_weights(GramCandidate& c) {
  // a double root of the n = 6 system, see the Jacobian rank check
  if (c.name == "complex1_plus" || c.name == "complex1_minus") c.multiplicity = 2;
}

/// Catalog entries with n points, in table order.
inline std::vector<GramCandidate> candidates_for(int n) {
  std::vector<GramCandidate> out;
  for (const auto& name : candidate_names()) {
    auto c = get_candidate(name);
    if (c.n != n) continue;
    finalize_census_weights(c);
    out.push_back(std::move(c));
  }
  return out;
}

/// Cartesian coordinates on S^3 for Real 1-4, in Q(sqrt 2, sqrt 3, sqrt 5).
inline CoordinateCandidate appendix_coordinates(const std::string& name) {
  auto build = [&](const char* scale, const std::vector<std::vector<std::string>>& rows) {
    const TowerScalar s = parse_tower_scalar(scale);
    CoordinateCandidate c;
    c.name = name;
    for (const auto& r : rows) {
      std::vector<TowerScalar> row;
      for (const auto& cell : r) row.push_back((parse_tower_scalar(cell) * s).simplified());
      c.W.push_back(std::move(row));
    }
    return c;
  };
  if (name == "real1")
    return build("1/3", {{"0", "0", "-sqrt(6)", "sqrt(6)", "0", "0"},
                         {"0", "0", "-sqrt(2)", "-sqrt(2)", "2*sqrt(2)", "0"},
                         {"0", "3", "-1", "-1", "-1", "0"},
                         {"3", "0", "0", "0", "0", "-3"}});
  if (name == "real2")
    return build("1/10", {{"-3*sqrt(10)", "3*sqrt(10)", "0", "0", "0", "0"},
                          {"0", "0", "-3*sqrt(10)", "3*sqrt(10)", "0", "0"},
                          {"0", "0", "0", "0", "2*sqrt(15)", "-2*sqrt(15)"},
                          {"sqrt(10)", "sqrt(10)", "sqrt(10)", "sqrt(10)", "-2*sqrt(10)", "-2*sqrt(10)"}});
  if (name == "real3")
    return build("1/5", {{"0", "0", "-3*sqrt(2)", "3*sqrt(2)", "0", "0"},
                         {"0", "0", "-sqrt(6)", "-sqrt(6)", "2*sqrt(6)", "0"},
                         {"0", "2*sqrt(6)", "0", "0", "0", "-2*sqrt(6)"},
                         {"5", "-1", "-1", "-1", "-1", "-1"}});
  if (name == "real4")
    return build("1/2", {{"-sqrt(3)", "sqrt(3)", "0", "0", "0", "0"},
                         {"-1", "-1", "2", "0", "0", "0"},
                         {"0", "0", "0", "-sqrt(3)", "sqrt(3)", "0"},
                         {"0", "0", "0", "-1", "-1", "2"}});
  throw UnknownName(name);
}

// ---------------------------------------------------------------------------
// JSON form: {"n": 4, "field": {"radicands": [..]}, "entries": [["1", "-1/3", ..], ..],
//             "defining": [..], "variables": [..]}

inline GramCandidate candidate_from_json(const nlohmann::json& j) {
  GramCandidate c;
  c.name = j.value("name", std::string("user"));
  c.label = j.value("label", c.name);
  c.provenance = "user supplied";
  if (!j.contains("entries") || !j["entries"].is_array()) throw MalformedCandidate("missing entries");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j["entries"]) {
    std::vector<std::string> row;
    for (const auto& cell : r) row.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
    rows.push_back(std::move(row));
  }
  c.n = static_cast<int>(rows.size());
  if (j.contains("n") && j["n"].get<int>() != c.n) throw MalformedCandidate("n does not match entries");
  c.branch_count = j.value("branch_count", 1);
  if (j.contains("defining") && !j["defining"].empty()) {
    std::vector<std::string> rel = j["defining"].get<std::vector<std::string>>();
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    auto id = DefiningIdeal::parse(vars, rel);
    c.defining = id;
    c.entries = detail::expand_pattern<QuotientScalar>(
        rows, {}, [&](const std::string& s) { return QuotientScalar::parse(id, s); });
  } else {
    Matrix<TowerScalar> X = detail::tower_pattern(rows, {});
    if (j.contains("field")) {
      std::vector<long> rad = j["field"].value("radicands", std::vector<long>{});
      Tower t = Tower::normalized(rad);
      for (auto& row : X)
        for (auto& v : row)
          if (Tower::join(t, v.simplified().tower()).size() > t.size())
            throw MalformedCandidate("entry " + v.to_string() + " lies outside the declared field");
    }
    c.entries = X;
  }
  const auto sym_check = [&](const auto& M) {
    for (int i = 0; i < c.n; ++i) {
      if (static_cast<int>(M[i].size()) != c.n) throw MalformedCandidate("matrix is not square");
      for (int k = 0; k < c.n; ++k)
        if (!(M[i][k] == M[k][i])) throw MalformedCandidate("matrix is not symmetric");
    }
  };
  std::visit(sym_check, c.entries);
  return c;
}

inline nlohmann::json candidate_to_json(const GramCandidate& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["label"] = c.label;
  j["n"] = c.n;
  j["branch_count"] = c.branch_count;
  nlohmann::json rows = nlohmann::json::array();
  if (c.is_quotient()) {
    for (const auto& r : c.quotient()) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& v : r) row.push_back(v.to_string());
      rows.push_back(row);
    }
    j["variables"] = c.defining->vars().names();
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& p : c.defining->relations()) rel.push_back(to_string(p, c.defining->vars()));
    j["defining"] = rel;
  } else {
    std::vector<long> rad;
    for (const auto& r : c.tower()) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& v : r) {
        row.push_back(v.to_string());
        for (long x : v.tower().radicands())
          if (std::find(rad.begin(), rad.end(), x) == rad.end()) rad.push_back(x);
      }
      rows.push_back(row);
    }
    j["field"] = {{"radicands", rad}};
  }
  j["entries"] = rows;
  return j;
}

}  // namespace fekete
