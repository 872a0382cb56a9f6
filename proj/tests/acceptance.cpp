// Acceptance criteria 1-13. One [PASS]/[FAIL] line per criterion; failing
// checks print their detail underneath.

#include "fekete/critverify.hpp"
#include "fekete/energy.hpp"
#include "fekete/groebner.hpp"
#include "fekete/hessclass.hpp"
#include "fekete/spheregeom.hpp"
#include "fekete/system.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fekete;

namespace {

struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> info;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { info.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

TowerScalar Q(const char* s) { return parse_tower_scalar(s); }

// ---------------------------------------------------------------------------

void system_shape(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const int vars[] = {6, 12, 20, 30, 42, 56};
  const int eqs[] = {12, 22, 35, 51, 70, 92};
  for (int n = 3; n <= 8; ++n) {
    const auto s = build_system(n);
    c.require(static_cast<int>(s.vars.size()) == vars[n - 3], "n=" + std::to_string(n) + " variables");
    c.require(static_cast<int>(s.equation_count()) == eqs[n - 3], "n=" + std::to_string(n) + " equations");
  }
  const double t = seconds_since(t0);
  c.require(t < 1.0, "runtime " + fmt(t) + " s");
  c.note("n=3..8 in " + fmt(t) + " s");
}

void groebner_degree(Criterion& c, int n, double budget, long long expected) {
  const auto sys = build_system(n);
  try {
    const auto gb = buchberger(sys.generators(), sys.order(), Budget::of_seconds(budget));
    c.require(finiteness_test(gb), "not zero-dimensional");
    const auto deg = ideal_degree(gb).degree.value_or(0);
    c.require(static_cast<long long>(deg) == expected, "degree " + std::to_string(deg));
    c.note("basis " + std::to_string(gb.basis.size()) + ", " + std::to_string(gb.stats.pairs_processed) + " pairs, " +
           fmt(gb.stats.seconds) + " s, dim 0, degree " + std::to_string(deg));
  } catch (const BudgetExceeded& e) {
    c.require(false, std::string("budget: ") + e.what());
  }
}

void six_point_substitute(Criterion& c) {
  const auto cen = census(6, 938);
  c.require(cen.found_simple == 848, "simple count " + std::to_string(cen.found_simple));
  c.require(cen.found == 938 && cen.difference() == 0, "weighted count " + std::to_string(cen.found));
  for (const auto& l : cen.lines)
    if (l.candidate == "complex1_plus") {
      c.require(l.orbit_size == 90 && l.multiplicity == 2, "Complex 1 line");
    }
  const auto m = multiplicity_flag(get_candidate("complex1_plus"), build_system(6));
  c.require(m.rank == 29 && m.jacobian_cols == 30 && m.jacobian_rows == 51 && m.multiple,
            "Complex 1 Jacobian " + std::to_string(m.jacobian_rows) + "x" + std::to_string(m.jacobian_cols) + " rank " +
                std::to_string(m.rank));
  c.note("848 + 90 = 938; Complex 1 Jacobian 51x30 rank 29");
}

void exact_verification(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::map<std::string, std::string> domains = {{"three3", "Q(sqrt(6))"},
                                                {"three3_conj", "Q(sqrt(6))"},
                                                {"complex1_plus", "Q(i,sqrt(5))"},
                                                {"complex1_minus", "Q(i,sqrt(5))"},
                                                {"complex2", "Q[x45,x13,x35]/I"}};
  int passed = 0;
  for (const auto& name : candidate_names()) {
    const auto cand = get_candidate(name);
    const auto rep = verify(cand, build_system(cand.n));
    c.require(rep.passed(), name + " residuals");
    if (domains.count(name)) c.require(rep.domain == domains[name], name + " domain " + rep.domain);
    passed += rep.passed();
  }
  const double t = seconds_since(t0);
  c.require(t < 10.0, "runtime " + fmt(t) + " s");
  c.note(std::to_string(passed) + "/19 candidates exact zero in " + fmt(t) + " s");
}

void orbit_census(Criterion& c) {
  const std::map<std::string, long long> want = {
      {"tetrahedron", 1},  {"equator4", 3},  {"simplex4", 1},  {"one31", 10},          {"one4", 15},
      {"equator5", 12},    {"equator6", 60}, {"one5", 72},     {"one41", 15},          {"three3", 60},
      {"three3_conj", 60}, {"simplex5", 1},  {"complex1_plus", 90}, {"complex2", 180}, {"real1", 15},
      {"real2", 45},       {"real3", 60},    {"real4", 10}};
  for (const auto& [name, size] : want) {
    const auto o = orbit(get_candidate(name));
    c.require(o.orbit_size == size, name + " orbit " + std::to_string(o.orbit_size));
    c.require(o.orbit_size * o.stabilizer_size == factorial(get_candidate(name).n), name + " stabilizer");
  }
  c.require(get_candidate("complex2").branch_count == 2, "Complex 2 counted twice");
  for (auto [n, total] : {std::pair{4, 4LL}, std::pair{5, 38LL}, std::pair{6, 938LL}}) {
    const auto cen = census(n, total);
    c.require(cen.found == total, "n=" + std::to_string(n) + " sum " + std::to_string(cen.found));
  }
  c.note("sums 4, 38, 938");
}

void energies(Criterion& c) {
  auto en = [](const char* name) { return product_energy(get_candidate(name)).E_normalized; };
  c.require(en("tetrahedron") == TowerScalar(make_rational(4096, 729)), "tetrahedron");
  c.require(en("equator4") == TowerScalar(4), "4-gon");
  c.require(en("one31") == TowerScalar(make_rational(27, 4)), "1:3:1");
  c.require(std::abs(en("one4").to_complex().real() - 6.630) < 5e-3, "1:4");
  c.require(en("equator5") == TowerScalar(pow(make_rational(5, 4), 5)), "5-gon");
  const double s4 = en("simplex4").to_complex().real();
  c.require(en("simplex4") == TowerScalar(pow(make_rational(5, 4), 10)) && std::abs(s4 - 9.313) < 5e-4, "4-simplex");
  const std::vector<std::pair<const char*, double>> six = {{"simplex5", 15.41}, {"real4", 11.39}, {"real1", 11.24},
                                                           {"real3", 11.17},    {"real2", 10.97}, {"one41", 8.00},
                                                           {"three3", 6.62},    {"one5", 5.05},   {"equator6", 1.42}};
  std::string col;
  for (const auto& [name, want] : six) {
    const double got = en(name).to_complex().real();
    c.require(std::abs(got - want) <= 5e-3, std::string(name) + " " + fmt(got));
    col += (col.empty() ? "" : ", ") + fmt(got);
  }
  // ordering inside each rank class
  auto ordered = [&](std::vector<const char*> names) {
    for (std::size_t k = 0; k + 1 < names.size(); ++k)
      if ((en(names[k]) - en(names[k + 1])).real_sign() <= 0) return false;
    return true;
  };
  c.require(ordered({"real4", "real1", "real3", "real2"}), "n=6 rank 4 order");
  c.require(ordered({"one41", "three3", "one5"}), "n=6 rank 3 order");
  c.require(ordered({"one31", "one4"}), "n=5 rank 3 order");
  c.note("n=6: " + col);
}

struct SpectrumRow {
  const char* name;
  bool real;
  std::vector<std::pair<const char*, int>> nonzero;  // exact text or decimal
  bool psd;
  int rank;
};

void gram_spectra(Criterion& c) {
  const std::vector<SpectrumRow> table = {
      {"equator6", true, {{"3", 2}}, true, 2},
      {"one5", true, {{"6/5", 1}, {"12/5", 2}}, true, 3},
      {"one41", true, {{"2", 3}}, true, 3},
      {"three3", true, {{"~2.28", 1}, {"~1.86", 2}}, true, 3},
      {"three3_conj", true, {{"~-9.48", 1}, {"~7.74", 2}}, false, 3},
      {"complex1_plus", false, {{"6/5", 1}, {"12/5", 2}}, true, 3},
      {"complex2", false, {}, false, 3},
      {"real1", true, {{"4/3", 3}, {"2", 1}}, true, 4},
      {"real2", true, {{"6/5", 2}, {"9/5", 2}}, true, 4},
      {"real3", true, {{"6/5", 1}, {"36/25", 2}, {"48/25", 1}}, true, 4},
      {"real4", true, {{"3/2", 4}}, true, 4},
      {"simplex5", true, {{"6/5", 5}}, true, 5},
  };
  for (const auto& row : table) {
    const auto s = gram_spectrum(get_candidate(row.name));
    const std::string tag = row.name;
    c.require(s.is_real == row.real, tag + " real flag");
    c.require(s.psd == row.psd, tag + " psd flag");
    c.require(s.rank == row.rank, tag + " rank " + std::to_string(s.rank));
    int nonzero_groups = 0;
    for (const auto& e : s.eigenvalues)
      if (std::abs(e.value) > kZeroTolerance * 6) ++nonzero_groups;
    if (row.nonzero.empty()) {
      // three distinct complex eigenvalues
      bool distinct_complex = nonzero_groups == 3;
      for (const auto& e : s.eigenvalues)
        if (std::abs(e.value) > 1e-6) distinct_complex = distinct_complex && e.multiplicity == 1 && std::abs(e.value.imag()) > 1e-6;
      c.require(distinct_complex, tag + " expected 3 distinct complex eigenvalues");
      continue;
    }
    c.require(nonzero_groups == static_cast<int>(row.nonzero.size()), tag + " eigenvalue count");
    for (const auto& [text, mult] : row.nonzero) {
      const bool numeric = text[0] == '~';
      const double target = numeric ? std::stod(text + 1) : Q(text).to_complex().real();
      const Eigenvalue* hit = nullptr;
      for (const auto& e : s.eigenvalues)
        if (std::abs(e.value - std::complex<double>(target)) < 5e-3) hit = &e;
      if (!hit) {
        c.require(false, tag + " missing " + text);
        continue;
      }
      c.require(hit->multiplicity == mult, tag + " multiplicity of " + text);
      if (!numeric) c.require(hit->exact && *hit->exact == Q(text), tag + " exact " + text);
    }
  }
  c.note("12 rows of the six-point Gram table");
}

void embeddings(Criterion& c) {
  double worst = 0;
  int count = 0;
  for (const auto& name : candidate_names()) {
    const auto cand = get_candidate(name);
    if (!cand.is_real()) continue;
    const auto s = gram_spectrum(cand);
    if (!s.psd) continue;
    const auto e = embed(cand, s.rank);
    worst = std::max(worst, e.residual);
    ++count;
    c.require(e.residual <= 1e-10, name + " residual " + fmt(e.residual));
  }
  const Tower field = Tower::normalized({2, 3, 5});
  for (const char* name : {"real1", "real2", "real3", "real4"}) {
    const auto W = appendix_coordinates(name);
    for (const auto& row : W.W)
      for (const auto& v : row)
        c.require(Tower::join(field, v.simplified().tower()).size() == field.size(), std::string(name) + " entry field");
    const auto p = match_permutation(get_candidate(name).tower(), W.gram());
    c.require(p.has_value(), std::string(name) + ": W^T W is not X up to relabeling");
    if (p) {
      const auto X = permuted(get_candidate(name).tower(), *p);
      const auto G = W.gram();
      bool zero = true;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) zero = zero && is_zero(G[i][j] - X[i][j]);
      c.require(zero, std::string(name) + " exact residual");
      std::string perm;
      for (int v : *p) perm += std::to_string(v + 1);
      c.note(std::string(name) + " exact, points relabeled " + perm);
    }
  }
  c.note(std::to_string(count) + " real PSD candidates, worst residual " + fmt(worst));
}

struct HessianRow {
  const char* name;
  int d;
  std::vector<std::pair<const char*, int>> entries;
};

void hessian_spectra(Criterion& c) {
  const std::vector<HessianRow> rows = {
      {"equator4", 2, {{"4", 1}, {"3", 2}, {"0", 1}}},
      {"equator4", 3, {{"4", 1}, {"3", 3}, {"0", 3}, {"-1", 1}}},
      {"tetrahedron", 3, {{"3/2", 2}, {"3", 3}, {"0", 3}}},
      {"equator5", 2, {{"6", 2}, {"4", 2}, {"0", 1}}},
      {"equator5", 3, {{"6", 2}, {"4", 3}, {"0", 3}, {"-2", 2}}},
      {"one4", 3, {{"64/15", 1}, {"-4/15", 1}, {"2", 2}, {"4", 3}, {"0", 3}}},
      {"one31", 3, {{"7/2", 2}, {"1/2", 2}, {"4", 3}, {"0", 3}}},
      {"one31", 4, {{"7/2", 2}, {"1/2", 2}, {"4", 4}, {"0", 6}, {"-1", 1}}},
      {"simplex4", 4, {{"4", 4}, {"8/5", 5}, {"0", 6}}},
      {"equator6", 2, {{"9", 1}, {"8", 2}, {"5", 2}, {"0", 1}}},
      {"equator6", 3, {{"9", 1}, {"8", 2}, {"5", 3}, {"0", 3}, {"-4", 1}, {"-3", 2}}},
      {"one5", 3, {{"5", 3}, {"0", 3}, {"~2.5", 2}, {"~-1.25", 2}, {"~6.25", 2}}},
      {"three3", 3, {{"5", 3}, {"0", 3}, {"~3.55", 2}, {"~1.45", 2}, {"~5.80", 1}, {"~-0.80", 1}}},
      {"one41", 3, {{"5", 3}, {"4", 3}, {"1", 3}, {"0", 3}}},
      {"one41", 4, {{"5", 4}, {"4", 3}, {"1", 3}, {"0", 6}, {"-1", 2}}},
      {"real1", 4, {{"3/2", 2}, {"10/3", 3}, {"1/3", 3}, {"5", 4}, {"0", 6}}},
      {"real2", 4, {{"5/3", 1}, {"40/9", 1}, {"-5/18", 2}, {"5", 4}, {"25/12", 4}, {"0", 6}}},
      {"real3", 4, {{"13/6", 1}, {"-5/24", 1}, {"11/6", 2}, {"175/48", 2}, {"25/48", 2}, {"5", 4}, {"0", 6}}},
      {"real4", 4, {{"5", 4}, {"3", 4}, {"1/2", 4}, {"0", 6}}},
      {"real1", 5, {{"3/2", 2}, {"10/3", 3}, {"1/3", 3}, {"5", 5}, {"0", 10}, {"-1", 1}}},
      {"real4", 5, {{"5", 5}, {"3", 4}, {"1/2", 4}, {"0", 10}, {"-1", 1}}},
      {"simplex5", 5, {{"5", 5}, {"5/3", 9}, {"0", 10}}},
  };
  for (const auto& row : rows) {
    const auto cand = get_candidate(row.name);
    const auto s = spectrum(projected_hessian(cand, row.d));
    const std::string tag = std::string(row.name) + " d=" + std::to_string(row.d);
    int expected_total = 0, got_total = 0;
    for (const auto& [t, m] : row.entries) expected_total += m;
    for (const auto& e : s) got_total += e.multiplicity;
    c.require(got_total == expected_total && got_total == cand.n * (row.d - 1), tag + " size");
    std::size_t matched_groups = 0;
    for (const auto& [text, mult] : row.entries) {
      const bool numeric = text[0] == '~';
      const Rational want = numeric ? Rational(0) : parse_rational(text);
      const double target = numeric ? std::stod(text + 1) : to_double(want);
      const double tol = numeric ? 5e-3 : 1e-9;
      const SpectrumEntry* hit = nullptr;
      for (const auto& e : s)
        if (std::abs(e.value - target) <= tol) hit = &e;
      if (!hit) {
        c.require(false, tag + " missing " + text);
        continue;
      }
      ++matched_groups;
      c.require(hit->multiplicity == mult, tag + " multiplicity of " + text + " is " + std::to_string(hit->multiplicity));
      if (!numeric) c.require(hit->exact && *hit->exact == want, tag + " exact " + text);
    }
    c.require(matched_groups == s.size(), tag + " extra eigenvalues");
  }
  c.note(std::to_string(rows.size()) + " rows");
}

void certificates(Criterion& c) {
  const auto t = negative_direction_certificate("three3", 256);
  c.require(t.value == Q("36-15*sqrt(6)"), "3:3 value " + t.value.to_string());
  c.require(t.certified_negative && t.enclosure.re.certainly_negative(), "3:3 enclosure");
  const auto o = negative_direction_certificate("one5", 256);
  const double mid = o.enclosure.re.mid();
  c.require(std::abs(mid + 0.494) <= 5e-3, "1:5 enclosure midpoint " + fmt(mid));
  c.require(o.certified_negative && o.enclosure.re.certainly_negative(), "1:5 enclosure");
  c.note("3:3 " + t.value.to_string() + " ~ " + fmt(t.enclosure.re.mid()) + "; 1:5 " + o.value.to_string() + " ~ " +
         fmt(mid));
}

void classification(Criterion& c) {
  const std::vector<std::pair<const char*, std::vector<const char*>>> grid = {
      {"equator6", {"GM", "S", "S", "S"}}, {"one5", {"-", "S", "S", "S"}},   {"one41", {"-", "GM", "S", "S"}},
      {"three3", {"-", "S", "S", "S"}},    {"real1", {"-", "-", "SM", "S"}}, {"real2", {"-", "-", "S", "S"}},
      {"real3", {"-", "-", "S", "S"}},     {"real4", {"-", "-", "GM", "S"}}, {"simplex5", {"-", "-", "-", "GM"}},
  };
  for (const auto& [name, cells] : grid) {
    const auto cand = get_candidate(name);
    const int rank = gram_spectrum(cand).rank;
    for (int d = 2; d <= 5; ++d) {
      const std::string got = rank > d ? "-" : to_string(classify(cand, d).verdict);
      c.require(got == cells[d - 2], std::string(name) + " S^" + std::to_string(d - 1) + " = " + got);
    }
  }
  const std::vector<std::pair<const char*, int>> optima = {
      {"equator4", 2}, {"tetrahedron", 3}, {"equator5", 2}, {"one31", 3}, {"simplex4", 4}};
  for (const auto& [name, d] : optima)
    c.require(classify(get_candidate(name), d).verdict == Verdict::GM, std::string(name) + " GM on S^" + std::to_string(d - 1));
  c.note("n=6 grid 9x4, n=4/5 optima");
}

// ---------------------------------------------------------------------------

TowerScalar random_tower(std::mt19937& rng, const Tower& t) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  std::vector<Rational> v(t.dimension());
  for (auto& q : v) q = make_rational(num(rng), den(rng));
  return TowerScalar(t, v);
}

void properties(Criterion& c) {
  std::mt19937 rng(2024);
  // field axioms
  for (const auto& rad : {std::vector<long>{6}, std::vector<long>{-1, 5}, std::vector<long>{2, 3, 5}}) {
    const Tower t = Tower::normalized(rad);
    bool ok = true;
    for (int k = 0; k < 50; ++k) {
      const auto a = random_tower(rng, t), b = random_tower(rng, t), d = random_tower(rng, t);
      ok = ok && a * (b + d) == a * b + a * d && (a * b) * d == a * (b * d) && a + b == b + a;
      if (!is_zero(a)) ok = ok && a * a.inverse() == TowerScalar(1);
    }
    c.require(ok, "field axioms in " + t.to_string());
  }
  // reduce idempotence and S-pairs on final bases
  for (int n : {3, 4}) {
    const auto sys = build_system(n);
    const auto gb = buchberger(sys.generators(), sys.order());
    bool spairs = true, idem = true;
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
        spairs = spairs && reduce(s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero();
    for (const auto& g : sys.generators()) {
      const auto prod = g * g + MultiPoly::variable(0, sys.order());
      const auto r = reduce(prod, gb.basis);
      idem = idem && reduce(r, gb.basis) == r;
    }
    c.require(spairs, "S-pairs n=" + std::to_string(n));
    c.require(idem, "reduce idempotence n=" + std::to_string(n));
  }
  // X 1 = 0 and stabilizer x orbit = n!
  for (const auto& name : candidate_names()) {
    const auto cand = get_candidate(name);
    bool rows = true;
    std::visit(
        [&](const auto& X) {
          for (const auto& row : X) {
            auto s = row[0];
            for (std::size_t j = 1; j < row.size(); ++j) s += row[j];
            rows = rows && is_zero(s);
          }
        },
        cand.entries);
    c.require(rows, name + " X 1 = 0");
    const auto o = orbit(cand);
    c.require(o.orbit_size * o.stabilizer_size == factorial(cand.n), name + " orbit-stabilizer");
  }
  // Hessian zero multiplicity, finite differences, gradient residual
  double worst_fd = 0, worst_grad = 0;
  for (const auto& name : candidate_names()) {
    const auto cand = get_candidate(name);
    if (!cand.is_real()) continue;
    const auto gs = gram_spectrum(cand);
    if (!gs.psd) continue;
    for (int d = std::max(gs.rank, 2); d <= std::min(5, gs.rank + 1); ++d) {
      const int zeros = zero_multiplicity(spectrum(projected_hessian(cand, d)));
      c.require(zeros >= d * (d - 1) / 2, name + " zero multiplicity at d=" + std::to_string(d));
    }
    const auto e = embed(cand, gs.rank + 1 > 5 ? 5 : gs.rank + 1);
    worst_grad = std::max(worst_grad, lagrangian_gradient(e.W).cwiseAbs().maxCoeff());
    const Eigen::MatrixXd H = hessian_blocks(e.W);
    const double h = 1e-5;
    for (int k = 0; k < e.W.size(); ++k) {
      Eigen::MatrixXd Wp = e.W, Wm = e.W;
      Wp(k) += h;
      Wm(k) -= h;
      Eigen::MatrixXd col = (lagrangian_gradient(Wp) - lagrangian_gradient(Wm)) / (2 * h);
      const Eigen::VectorXd fd = Eigen::Map<Eigen::VectorXd>(col.data(), col.size());
      worst_fd = std::max(worst_fd, (fd - H.col(k)).cwiseAbs().maxCoeff());
    }
  }
  c.require(worst_fd <= 1e-5, "finite-difference Hessian " + fmt(worst_fd));
  c.require(worst_grad <= 1e-10, "gradient residual " + fmt(worst_grad));
  c.note("finite-difference gap " + fmt(worst_fd) + ", gradient residual " + fmt(worst_grad));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"System shape", system_shape},
      {"Groebner degree n=4", [](Criterion& c) { groebner_degree(c, 4, 60, 4); }},
      {"Groebner degree n=5", [](Criterion& c) { groebner_degree(c, 5, 1800, 38); }},
      {"n=6 census and Complex 1 multiplicity", six_point_substitute},
      {"Exact verification", exact_verification},
      {"Orbit census", orbit_census},
      {"Energies", energies},
      {"Gram spectra", gram_spectra},
      {"Embeddings", embeddings},
      {"Hessian spectra", hessian_spectra},
      {"Negative-direction certificates", certificates},
      {"Classification grid", classification},
      {"Property suites", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first << " (" << fmt(seconds_since(t0))
              << " s)";
    for (const auto& i : c.info) std::cout << "; " << i;
    std::cout << "\n";
    for (const auto& f : c.failures) std::cout << "       - " << f << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
