#pragma once

#include "fekete/energy.hpp"
#include "fekete/spheregeom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fekete {

struct CoincidentPoints : std::invalid_argument {
  CoincidentPoints(int i, int j)
      : std::invalid_argument("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide") {}
};

struct UnsupportedConfiguration : std::invalid_argument {
  explicit UnsupportedConfiguration(const std::string& name)
      : std::invalid_argument("no negative-direction certificate for '" + name + "'") {}
};

/// J_f(w) = (-2/|w|^4) (|w|^2 I - 2 w w^T), the Jacobian of f(w) = -2w/|w|^2.
inline Eigen::MatrixXd jacobian_f(const Eigen::VectorXd& w) {
  const double n2 = w.squaredNorm();
  const auto d = w.size();
  return (-2.0 / (n2 * n2)) * (n2 * Eigen::MatrixXd::Identity(d, d) - 2.0 * w * w.transpose());
}

/// Lagrangian Hessian (nd x nd) for columns w_i of W with multipliers n - 1.
inline Eigen::MatrixXd hessian_blocks(const Eigen::MatrixXd& W) {
  const int d = static_cast<int>(W.rows()), n = static_cast<int>(W.cols());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n * d, n * d);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd diag = (n - 1) * Eigen::MatrixXd::Identity(d, d);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Eigen::VectorXd diff = W.col(i) - W.col(j);
      if (diff.norm() < 1e-12) throw CoincidentPoints(i, j);
      Eigen::MatrixXd J = jacobian_f(diff);
      diag += J;
      H.block(i * d, j * d, d, d) = -J;
    }
    H.block(i * d, i * d, d, d) = diag;
  }
  return H;
}

/// L(w) = -sum_{i<j} log |w_i - w_j|^2 + (n-1)/2 sum_i (|w_i|^2 - 1).
inline double lagrangian(const Eigen::MatrixXd& W) {
  const int n = static_cast<int>(W.cols());
  double e = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e -= std::log((W.col(i) - W.col(j)).squaredNorm());
    e += 0.5 * (n - 1) * (W.col(i).squaredNorm() - 1);
  }
  return e;
}

/// Columns dL/dw_k = sum_j f(w_k - w_j) + (n-1) w_k.
inline Eigen::MatrixXd lagrangian_gradient(const Eigen::MatrixXd& W) {
  const int n = static_cast<int>(W.cols());
  Eigen::MatrixXd G = (n - 1) * W;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      Eigen::VectorXd diff = W.col(k) - W.col(j);
      G.col(k) -= 2.0 * diff / diff.squaredNorm();
    }
  return G;
}

struct ProjectedHessian {
  int d = 0;
  Eigen::MatrixXd matrix;  // n(d-1) x n(d-1)
  Eigen::MatrixXd basis;   // V, nd x n(d-1)
};

/// h_L = V^T H V with V an orthonormal basis of the tangent space of the
/// product of spheres at W. A seed rotates each tangent frame randomly.
inline ProjectedHessian project_tangent(const Eigen::MatrixXd& H, const Eigen::MatrixXd& W,
                                        std::optional<unsigned> seed = std::nullopt) {
  const int d = static_cast<int>(W.rows()), n = static_cast<int>(W.cols());
  ProjectedHessian p;
  p.d = d;
  p.basis = Eigen::MatrixXd::Zero(n * d, n * (d - 1));
  std::mt19937 rng(seed.value_or(0));
  std::normal_distribution<double> normal;
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd M(d, d);
    M.col(0) = W.col(i);
    for (int c = 1; c < d; ++c)
      for (int r = 0; r < d; ++r) M(r, c) = seed ? normal(rng) : (r == c - 1 ? 1.0 : 0.0);
    if (!seed) {
      // identity columns, skipping the one most aligned with w_i
      int skip = 0;
      W.col(i).cwiseAbs().maxCoeff(&skip);
      for (int c = 1, e = 0; c < d; ++c, ++e) {
        if (e == skip) ++e;
        M.col(c) = Eigen::VectorXd::Unit(d, e);
      }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
    Eigen::MatrixXd Q = qr.householderQ();
    p.basis.block(i * d, i * (d - 1), d, d - 1) = Q.rightCols(d - 1);
  }
  p.matrix = p.basis.transpose() * H * p.basis;
  p.matrix = 0.5 * (p.matrix + p.matrix.transpose());
  return p;
}

struct SpectrumEntry {
  double value = 0;
  int multiplicity = 0;
  std::optional<Rational> exact;  // p/q with q <= 48 within 1e-9
};

inline std::vector<SpectrumEntry> group_spectrum(const Eigen::VectorXd& values) {
  std::vector<SpectrumEntry> out;
  for (int k = static_cast<int>(values.size()) - 1; k >= 0; --k) {
    double v = values(k);
    if (std::abs(v) < kZeroTolerance) v = 0;
    bool merged = false;
    for (auto& e : out)
      if (std::abs(e.value - v) < kEigenGroupTolerance) {
        ++e.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({v, 1, std::nullopt});
  }
  for (auto& e : out) e.exact = recognize_rational(e.value);
  return out;
}

inline std::vector<SpectrumEntry> spectrum(const ProjectedHessian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.matrix, Eigen::EigenvaluesOnly);
  return group_spectrum(es.eigenvalues());
}

inline int zero_multiplicity(const std::vector<SpectrumEntry>& s) {
  for (const auto& e : s)
    if (e.value == 0) return e.multiplicity;
  return 0;
}

enum class Verdict { GM, SM, S, LocalMinimum, Unclassified, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::GM: return "GM";
    case Verdict::SM: return "SM";
    case Verdict::S: return "S";
    case Verdict::LocalMinimum: return "local minimum (globality unknown)";
    case Verdict::Unclassified: return "unclassified";
    case Verdict::NotApplicable: return "-";
  }
  return "?";
}

struct ClassificationRecord {
  std::string configuration;
  int d = 0;
  std::vector<SpectrumEntry> spectrum;
  Verdict verdict = Verdict::Unclassified;
  std::optional<double> most_negative;
};

inline ProjectedHessian projected_hessian(const GramCandidate& c, int d, std::optional<unsigned> seed = std::nullopt) {
  const Embedding e = embed(c, d);
  return project_tangent(hessian_blocks(e.W), e.W, seed);
}

/// Dimension of the SO(d) orbit of a configuration spanning r dimensions:
/// d(d-1)/2 less the rotations fixing the span pointwise.
inline int rotation_orbit_dimension(int d, int r) {
  const int k = std::max(d - r, 0);
  return d * (d - 1) / 2 - k * (k - 1) / 2;
}

/// Saddle on a negative eigenvalue; local minimum when zero has
/// multiplicity exactly the rotation orbit dimension and the rest is
/// positive. A local minimum
/// is GM when its product energy is the largest among the catalog
/// configurations of rank <= d, SM otherwise; names outside the catalog
/// stay LocalMinimum.
inline ClassificationRecord classify(const GramCandidate& c, int d) {
  ClassificationRecord rec;
  rec.configuration = c.name;
  rec.d = d;
  const auto gs = gram_spectrum(c);
  if (!gs.is_real || !gs.psd) throw NotPSD(c.name);
  if (gs.rank > d) throw RankExceedsDimension(gs.rank, d);
  rec.spectrum = spectrum(projected_hessian(c, d));
  for (const auto& e : rec.spectrum)
    if (e.value < 0 && (!rec.most_negative || e.value < *rec.most_negative)) rec.most_negative = e.value;
  if (rec.most_negative) {
    rec.verdict = Verdict::S;
    return rec;
  }
  if (zero_multiplicity(rec.spectrum) != rotation_orbit_dimension(d, gs.rank)) {
    rec.verdict = Verdict::Unclassified;
    return rec;
  }
  const auto& names = candidate_names();
  if (std::find(names.begin(), names.end(), c.name) == names.end() || c.n < 4 || c.n > 6) {
    rec.verdict = Verdict::LocalMinimum;
    return rec;
  }
  const TowerScalar mine = product_energy(c).E_normalized;
  bool best = true;
  for (const auto& other : candidates_for(c.n)) {
    if (other.is_quotient() || !other.is_real()) continue;
    const auto os = gram_spectrum(other);
    if (!os.psd || os.rank > d) continue;
    if ((product_energy(other).E_normalized - mine).real_sign() > 0) best = false;
  }
  rec.verdict = best ? Verdict::GM : Verdict::SM;
  return rec;
}

// ---------------------------------------------------------------------------
// Exact quadratic forms v^T H_L v from inner products only. With
// d_ij = w_i - w_j, |d_ij|^2 = 2 - 2 x_ij and
//   q(a, b; d) = a^T J_f(d) b = (-2/|d|^4) (|d|^2 a.b - 2 (a.d)(b.d)),
//   v^T H_L v = sum_i [(n-1) u_i.u_i + sum_{j != i} q(u_i, u_i; d_ij)]
//             - sum_{i != j} q(u_i, u_j; d_ij).
// WW[i][j] = w_i.w_j, UW[i][j] = u_i.w_j, UU[i][j] = u_i.u_j.

inline TowerScalar tangent_quadratic_form(const Matrix<TowerScalar>& WW, const Matrix<TowerScalar>& UW,
                                          const Matrix<TowerScalar>& UU) {
  const int n = static_cast<int>(WW.size());
  auto q = [&](int a, int b, int i, int j) {
    // a.b with d = w_i - w_j
    const TowerScalar dd = TowerScalar(2) - WW[i][j] * Rational(2);
    const TowerScalar ad = UW[a][i] - UW[a][j];
    const TowerScalar bd = UW[b][i] - UW[b][j];
    return (dd * UU[a][b] - ad * bd * Rational(2)) * Rational(-2) / (dd * dd);
  };
  TowerScalar total(0);
  for (int i = 0; i < n; ++i) {
    total += UU[i][i] * Rational(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      total += q(i, i, i, j);
      total -= q(i, j, i, j);
    }
  }
  return total.simplified();
}

struct NegativeDirectionCertificate {
  std::string configuration;
  std::string direction;
  TowerScalar value;
  ComplexInterval enclosure;
  bool certified_negative = false;
};

namespace detail {

inline NegativeDirectionCertificate finish_certificate(std::string name, std::string direction, TowerScalar value,
                                                       unsigned precision) {
  NegativeDirectionCertificate c;
  c.configuration = std::move(name);
  c.direction = std::move(direction);
  c.value = value;
  c.enclosure = value.enclosure(precision);
  c.certified_negative = c.enclosure.im.contains_zero() && c.enclosure.re.certainly_negative() && value.is_real();
  return c;
}

// 1:5 with the pole w_0; each listed base point moves along the projection
// of the polar axis, t_i = s_i (e - z_i w_i) with z_i = x_0i.
inline TowerScalar one5_vertical_form(const std::vector<int>& signs) {
  const auto X = get_candidate("one5").tower();
  const int n = 6;
  std::vector<TowerScalar> z(n);
  for (int i = 0; i < n; ++i) z[i] = X[0][i];
  Matrix<TowerScalar> UW(n, std::vector<TowerScalar>(n)), UU = UW;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational si(signs[i]), sj(signs[j]);
      UW[i][j] = (z[j] - z[i] * X[i][j]) * si;
      UU[i][j] = (TowerScalar(1) - z[i] * z[i] - z[j] * z[j] + z[i] * z[j] * X[i][j]) * si * sj;
    }
  return tangent_quadratic_form(X, UW, UU);
}

}  // namespace detail

/// Two adjacent base points of 1:5, one moved up and one down.
inline NegativeDirectionCertificate one5_two_point_certificate(unsigned precision = 256) {
  return detail::finish_certificate("one5", "base points 1 up, 2 down", detail::one5_vertical_form({0, 1, -1, 0, 0, 0}),
                                    precision);
}

/// Certified negative direction: 1:5 (base points 1 down, 2 and 4 up, along
/// the polar axis) or 3:3 (upper triangle rotated counter-clockwise about
/// the axis, u_i = e x w_i).
inline NegativeDirectionCertificate negative_direction_certificate(const std::string& name,
                                                                   unsigned precision = 256) {
  if (name == "one5")
    return detail::finish_certificate(name, "base points 1 down, 2 and 4 up",
                                      detail::one5_vertical_form({0, -1, 1, 0, 1, 0}), precision);
  if (name == "three3") {
    const auto X = get_candidate("three3").tower();
    const TowerScalar rsq = TowerScalar(1) - parse_tower_scalar("(-3+2*sqrt(6))/5");
    const TowerScalar h = parse_tower_scalar("sqrt(3)/2");
    // cos and sin of 2 pi k / 3
    const std::vector<TowerScalar> cs = {TowerScalar(1), TowerScalar(Rational(-1, 2)), TowerScalar(Rational(-1, 2))};
    const std::vector<TowerScalar> sn = {TowerScalar(0), h, -h};
    const int n = 6;
    Matrix<TowerScalar> UW(n, std::vector<TowerScalar>(n, TowerScalar(0))), UU = UW;
    for (int i = 3; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int a = i % 3, b = j % 3;
        // (e x w_i).w_j = R^2 sin(theta_j - theta_i)
        UW[i][j] = rsq * (sn[b] * cs[a] - cs[b] * sn[a]);
        if (j >= 3) UU[i][j] = rsq * (cs[a] * cs[b] + sn[a] * sn[b]);
      }
    return detail::finish_certificate(name, "upper triangle rotated counter-clockwise", tangent_quadratic_form(X, UW, UU),
                                      precision);
  }
  throw UnsupportedConfiguration(name);
}

}  // namespace fekete
