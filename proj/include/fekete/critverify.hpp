#pragma once

#include "fekete/catalog.hpp"
#include "fekete/system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace fekete {

struct DegenerateCandidate : std::invalid_argument {
  explicit DegenerateCandidate(const std::string& name)
      : std::invalid_argument("candidate '" + name + "' has an off-diagonal entry equal to 1") {}
};

struct VerificationReport {
  std::string candidate;
  std::string domain;
  std::vector<std::size_t> center_mass_failures;
  std::vector<std::size_t> z_def_failures;
  std::vector<std::size_t> gradient_failures;
  std::size_t evaluated = 0;

  bool passed() const { return center_mass_failures.empty() && z_def_failures.empty() && gradient_failures.empty(); }
};

struct MultiplicityReport {
  std::size_t jacobian_rows = 0;  // generators
  std::size_t jacobian_cols = 0;  // variables
  std::size_t rank = 0;
  bool multiple = false;
};

struct OrbitReport {
  std::string candidate;
  long long stabilizer_size = 0;
  long long orbit_size = 0;
  int branch_count = 1;
};

struct CensusLine {
  std::string candidate;
  long long orbit_size = 0;
  int branch_count = 1;
  int multiplicity = 1;
  long long contribution() const { return orbit_size * branch_count * multiplicity; }
};

struct CensusReport {
  int n = 0;
  long long expected_degree = 0;
  long long found_simple = 0;  // every class counted once
  long long found = 0;         // with multiplicities
  std::vector<CensusLine> lines;
  long long difference() const { return expected_degree - found; }
};

namespace detail {

inline std::string domain_name(const GramCandidate& c) {
  if (c.is_quotient()) {
    std::string s = "Q[";
    const auto& names = c.defining->vars().names();
    for (std::size_t k = 0; k < names.size(); ++k) s += (k ? "," : "") + names[k];
    return s + "]/I";
  }
  std::vector<long> rad;
  for (const auto& row : c.tower())
    for (const auto& v : row) {
      const TowerScalar s = v.simplified();
      for (long r : s.tower().radicands())
        if (std::find(rad.begin(), rad.end(), r) == rad.end()) rad.push_back(r);
    }
  std::sort(rad.begin(), rad.end());
  if (rad.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t k = 0; k < rad.size(); ++k) {
    s += k ? "," : "";
    s += rad[k] == -1 ? "i" : "sqrt(" + std::to_string(rad[k]) + ")";
  }
  return s + ")";
}

template <class S>
S one_like(const S& sample) {
  if constexpr (std::is_same_v<S, QuotientScalar>) return QuotientScalar::constant(sample.ideal(), Rational(1));
  else return S(1);
}

// Values of (x_ij, z_ij) in system variable order.
template <class S>
std::vector<S> point_values(const GramCandidate& c, const Matrix<S>& X, const FeketeSystem& sys) {
  const S one = one_like(X[0][0]);
  std::vector<S> v(sys.vars.size(), one);
  for (int i = 0; i < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j) {
      S d = one - X[i][j];
      if (is_zero(d)) throw DegenerateCandidate(c.name);
      v[sys.x(i, j)] = X[i][j];
      try {
        v[sys.z(i, j)] = one / d;
      } catch (const DivisionByZero&) {
        throw DegenerateCandidate(c.name);
      }
    }
  return v;
}

// Rank by Gauss-Jordan elimination with exact pivots.
template <class S>
std::size_t exact_rank(std::vector<std::vector<S>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const S inv = one_like(m[r][c]) / m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      const S f = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Entries collapsed to class ids under exact equality.
inline std::vector<std::vector<int>> entry_classes(const GramCandidate& c) {
  std::vector<std::vector<int>> ids(c.n, std::vector<int>(c.n));
  std::visit(
      [&](const auto& X) {
        using S = std::decay_t<decltype(X[0][0])>;
        std::vector<S> seen;
        for (int i = 0; i < c.n; ++i)
          for (int j = 0; j < c.n; ++j) {
            int id = -1;
            for (std::size_t k = 0; k < seen.size() && id < 0; ++k)
              if (seen[k] == X[i][j]) id = static_cast<int>(k);
            if (id < 0) {
              id = static_cast<int>(seen.size());
              seen.push_back(X[i][j]);
            }
            ids[i][j] = id;
          }
      },
      c.entries);
  return ids;
}

}  // namespace detail

/// Evaluates every generator of the system exactly at the candidate.
inline VerificationReport verify(const GramCandidate& c, const FeketeSystem& sys) {
  if (c.n != sys.n) throw std::invalid_argument("candidate and system disagree on n");
  VerificationReport rep;
  rep.candidate = c.name;
  rep.domain = detail::domain_name(c);
  std::visit(
      [&](const auto& X) {
        auto vals = detail::point_values(c, X, sys);
        const auto one = detail::one_like(X[0][0]);
        using S = std::decay_t<decltype(one)>;
        auto run = [&](const std::vector<MultiPoly>& family, std::vector<std::size_t>& failures) {
          for (std::size_t k = 0; k < family.size(); ++k) {
            ++rep.evaluated;
            if (!is_zero(evaluate<S>(family[k], vals, one))) failures.push_back(k);
          }
        };
        run(sys.center_mass, rep.center_mass_failures);
        run(sys.z_def, rep.z_def_failures);
        run(sys.gradient, rep.gradient_failures);
      },
      c.entries);
  return rep;
}

/// Exact rank of the generator Jacobian (rows = generators, columns =
/// variables) at the candidate.
inline MultiplicityReport multiplicity_flag(const GramCandidate& c, const FeketeSystem& sys) {
  MultiplicityReport rep;
  const auto gens = sys.generators();
  rep.jacobian_rows = gens.size();
  rep.jacobian_cols = sys.vars.size();
  std::visit(
      [&](const auto& X) {
        auto vals = detail::point_values(c, X, sys);
        const auto one = detail::one_like(X[0][0]);
        using S = std::decay_t<decltype(one)>;
        std::vector<std::vector<S>> J(rep.jacobian_rows, std::vector<S>(rep.jacobian_cols, one));
        for (std::size_t r = 0; r < gens.size(); ++r)
          for (std::size_t v = 0; v < rep.jacobian_cols; ++v) J[r][v] = evaluate<S>(gens[r].derivative(v), vals, one);
        rep.rank = detail::exact_rank(std::move(J));
      },
      c.entries);
  rep.multiple = rep.rank < rep.jacobian_cols;
  return rep;
}

/// Number of permutations P with P^T X P = X.
inline long long stabilizer_size(const GramCandidate& c) {
  if (c.n > 8) throw UnsupportedN(c.n);
  const auto ids = detail::entry_classes(c);
  std::vector<int> p(c.n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool fixed = true;
    for (int i = 0; i < c.n && fixed; ++i)
      for (int j = i + 1; j < c.n && fixed; ++j) fixed = ids[p[i]][p[j]] == ids[i][j];
    if (fixed) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline OrbitReport orbit(const GramCandidate& c) {
  OrbitReport r;
  r.candidate = c.name;
  r.stabilizer_size = stabilizer_size(c);
  r.orbit_size = factorial(c.n) / r.stabilizer_size;
  r.branch_count = c.branch_count;
  return r;
}

/// Applies X -> P^T X P for the permutation p (row i of the result is row p[i]).
template <class S>
Matrix<S> permuted(const Matrix<S>& X, const std::vector<int>& p) {
  Matrix<S> Y = X;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j) Y[i][j] = X[p[i]][p[j]];
  return Y;
}

inline GramCandidate permuted(const GramCandidate& c, const std::vector<int>& p) {
  GramCandidate out = c;
  std::visit([&](const auto& X) { out.entries = permuted(X, p); }, c.entries);
  return out;
}

/// Permutation p with X[p[i]][p[j]] == Y[i][j] for all i, j, if any.
inline std::optional<std::vector<int>> match_permutation(const Matrix<TowerScalar>& X, const Matrix<TowerScalar>& Y) {
  const int n = static_cast<int>(X.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = X[p[i]][p[j]] == Y[i][j];
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

/// Catalog classes for n = 4, 5, 6 are checked against the expected degree;
/// candidates in another entry's orbit are not counted again.
inline CensusReport census(int n, long long expected_degree) {
  CensusReport rep;
  rep.n = n;
  rep.expected_degree = expected_degree;
  for (const auto& c : candidates_for(n)) {
    if (!c.same_orbit_as.empty()) continue;
    CensusLine line;
    line.candidate = c.name;
    line.orbit_size = orbit(c).orbit_size;
    line.branch_count = c.branch_count;
    line.multiplicity = c.multiplicity;
    rep.found_simple += line.orbit_size * line.branch_count;
    rep.found += line.contribution();
    rep.lines.push_back(line);
  }
  return rep;
}

/// Paper constants for the ideal degree.
inline long long expected_degree(int n) {
  switch (n) {
    case 4: return 4;
    case 5: return 38;
    case 6: return 938;
    default: throw UnsupportedN(n);
  }
}

}  // namespace fekete
