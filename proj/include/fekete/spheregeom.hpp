#pragma once

#include "fekete/catalog.hpp"
#include "fekete/critverify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fekete {

struct NotPSD : std::invalid_argument {
  explicit NotPSD(const std::string& name) : std::invalid_argument("'" + name + "' is not positive semi-definite") {}
};

struct RankExceedsDimension : std::invalid_argument {
  RankExceedsDimension(int rank, int d)
      : std::invalid_argument("rank " + std::to_string(rank) + " exceeds dimension " + std::to_string(d)) {}
};

inline constexpr double kEigenGroupTolerance = 1e-7;
inline constexpr double kZeroTolerance = 1e-8;

struct Eigenvalue {
  std::complex<double> value;
  int multiplicity = 1;
  std::optional<TowerScalar> exact;  // set when checked by exact rank
  double radius = 0;                 // numeric enclosure half-width otherwise
};

struct GramSpectrum {
  bool is_real = false;
  std::vector<Eigenvalue> eigenvalues;  // nonzero ones and zero, grouped
  bool psd = false;  // every eigenvalue real and >= 0, as tabulated also for complex X
  int rank = 0;
};

struct Embedding {
  Eigen::MatrixXd W;  // d x n
  double residual = 0;      // max |W^T W - X|
  double norm_defect = 0;   // max |  |w_i| - 1 |
};

struct ComplexEmbedding {
  Eigen::MatrixXcd W;  // d x n, W^T W = X (no conjugation)
  double residual = 0;
};

inline Eigen::MatrixXcd numeric_matrix(const GramCandidate& c, std::size_t root_choice = 0) {
  Eigen::MatrixXcd M(c.n, c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) M(i, j) = c.numeric(i, j, root_choice);
  return M;
}

inline Eigen::MatrixXd real_matrix(const GramCandidate& c) {
  if (!c.is_real()) throw std::invalid_argument("'" + c.name + "' has non-real entries");
  return numeric_matrix(c).real();
}

/// Rational p/q with q <= max_den within tol of v.
inline std::optional<Rational> recognize_rational(double v, long max_den = 48, double tol = 1e-9) {
  for (long q = 1; q <= max_den; ++q) {
    double p = std::round(v * q);
    if (std::abs(p / q - v) < tol) return Rational(static_cast<long>(p), q);
  }
  return std::nullopt;
}

namespace detail {

template <class V>
std::vector<Eigenvalue> group_values(std::vector<V> values, double tol) {
  std::sort(values.begin(), values.end(), [](const V& a, const V& b) {
    return std::real(a) != std::real(b) ? std::real(a) > std::real(b) : std::imag(a) > std::imag(b);
  });
  std::vector<Eigenvalue> out;
  for (const auto& v : values) {
    bool merged = false;
    for (auto& g : out)
      if (std::abs(g.value - std::complex<double>(v)) < tol) {
        ++g.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({std::complex<double>(v), 1, std::nullopt, 0});
  }
  return out;
}

}  // namespace detail

/// Eigenvalues of X with multiplicities. A rational guess for a real
/// eigenvalue is accepted as exact when rank(X - lambda I) = n - m holds
/// exactly; otherwise the numeric value carries a residual-based radius.
inline GramSpectrum gram_spectrum(const GramCandidate& c, std::size_t root_choice = 0) {
  GramSpectrum s;
  s.is_real = c.is_real();
  const int n = c.n;
  std::vector<std::complex<double>> vals;
  if (s.is_real) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(real_matrix(c));
    for (int k = 0; k < n; ++k) vals.emplace_back(es.eigenvalues()(k), 0.0);
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(numeric_matrix(c, root_choice));
    for (int k = 0; k < n; ++k) vals.push_back(es.eigenvalues()(k));
  }
  s.eigenvalues = detail::group_values(vals, kEigenGroupTolerance * n);

  const Eigen::MatrixXcd M = numeric_matrix(c, root_choice);
  for (auto& g : s.eigenvalues) {
    if (!c.is_quotient() && std::abs(g.value.imag()) < kZeroTolerance) {
      auto q = recognize_rational(g.value.real());
      if (q) {
        Matrix<TowerScalar> A = c.tower();
        for (int i = 0; i < n; ++i) A[i][i] = A[i][i] - TowerScalar(*q);
        if (static_cast<int>(detail::exact_rank(A)) == n - g.multiplicity) g.exact = TowerScalar(*q);
      }
    }
    if (!g.exact) {
      // |lambda - mu| <= ||(M - mu) v|| for the best unit v (normal matrices)
      Eigen::MatrixXcd shifted = M - g.value * Eigen::MatrixXcd::Identity(n, n);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
      g.radius = svd.singularValues()(n - 1) + 1e-14 * n;
    }
  }

  bool all_nonneg = true;
  for (const auto& g : s.eigenvalues) {
    const bool zero = g.exact ? is_zero(*g.exact) : std::abs(g.value) < kZeroTolerance * n;
    if (!zero) s.rank += g.multiplicity;
    if (!g.exact && std::abs(g.value.imag()) > kZeroTolerance * n) all_nonneg = false;
    if (g.exact ? g.exact->real_sign() < 0 : g.value.real() < -kZeroTolerance * n) all_nonneg = false;
  }
  s.psd = all_nonneg;
  return s;
}

/// Real coordinates W (d x n) with W^T W = X from the eigendecomposition,
/// zero rows padded when d exceeds the rank.
inline Embedding embed(const GramCandidate& c, int d) {
  if (!c.is_real()) throw NotPSD(c.name);
  const Eigen::MatrixXd X = real_matrix(c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X);
  const int n = c.n;
  std::vector<int> keep;
  for (int k = n - 1; k >= 0; --k) {
    double l = es.eigenvalues()(k);
    if (l < -kZeroTolerance * n) throw NotPSD(c.name);
    if (l > kZeroTolerance * n) keep.push_back(k);
  }
  const int rank = static_cast<int>(keep.size());
  if (rank > d) throw RankExceedsDimension(rank, d);
  Embedding e;
  e.W = Eigen::MatrixXd::Zero(d, n);
  for (int r = 0; r < rank; ++r)
    e.W.row(r) = std::sqrt(es.eigenvalues()(keep[r])) * es.eigenvectors().col(keep[r]).transpose();
  e.residual = (e.W.transpose() * e.W - X).cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) e.norm_defect = std::max(e.norm_defect, std::abs(e.W.col(i).norm() - 1));
  return e;
}

/// Complex W with W^T W = X for complex symmetric X (Takagi factorization).
/// With X = A + iB, the real symmetric lift [[A, B], [B, -A]] has eigenpairs
/// (sigma, [x; y]) with X conj(u) = sigma u for u = x + iy; the positive
/// ones give X = U Sigma U^T.
inline ComplexEmbedding complex_embed(const Eigen::MatrixXcd& X) {
  const int n = static_cast<int>(X.rows());
  Eigen::MatrixXd L(2 * n, 2 * n);
  L << X.real(), X.imag(), X.imag(), -X.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  std::vector<int> keep;
  for (int k = 2 * n - 1; k >= 0; --k)
    if (es.eigenvalues()(k) > kZeroTolerance * n) keep.push_back(k);
  ComplexEmbedding e;
  e.W = Eigen::MatrixXcd::Zero(static_cast<int>(keep.size()), n);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const auto v = es.eigenvectors().col(keep[r]);
    for (int i = 0; i < n; ++i)
      e.W(static_cast<int>(r), i) = std::sqrt(es.eigenvalues()(keep[r])) * std::complex<double>(v(i), v(n + i));
  }
  e.residual = (e.W.transpose() * e.W - X).cwiseAbs().maxCoeff();
  return e;
}

inline ComplexEmbedding complex_embed(const GramCandidate& c, std::size_t root_choice = 0) {
  return complex_embed(numeric_matrix(c, root_choice));
}

}  // namespace fekete
