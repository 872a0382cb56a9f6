#pragma once

#include "fekete/cache.hpp"
#include "fekete/critverify.hpp"
#include "fekete/energy.hpp"
#include "fekete/groebner.hpp"
#include "fekete/hessclass.hpp"
#include "fekete/spheregeom.hpp"
#include "fekete/system.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fekete::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kCensusMismatch = 3,
  kBudgetExhausted = 4,
  kRefused = 5,
};

enum class Format { text, json, csv };

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<int> d;
  std::string config;  // candidate name
  std::string file;    // candidate JSON
  std::optional<double> budget_seconds;
  std::optional<std::size_t> memory_mb;
  std::optional<std::string> cache_dir;
  Format format = Format::text;
  unsigned precision = 128;
  bool allow_long = false;
  bool emit_spectra = false;
  bool multiplicity = false;
  std::optional<long long> expected_degree;
  bool from_groebner = false;
  std::optional<int> embed;
  std::string univariate;  // variable name for groebner --univariate
};

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  nlohmann::json doc = nlohmann::json::object();
  std::vector<Table> tables;
  std::vector<std::string> notes;
  int exit_code = kOk;
};

// ---------------------------------------------------------------------------
// formatting

inline std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string decimal(std::complex<double> v) {
  if (std::abs(v.imag()) < 1e-12 * std::max(1.0, std::abs(v.real()))) return decimal(v.real());
  return decimal(v.real()) + (v.imag() < 0 ? " - " : " + ") + decimal(std::abs(v.imag())) + "i";
}

/// Exact text with a 6-significant-digit decimal beside it.
inline std::string exact_and_decimal(const TowerScalar& v) {
  const std::string exact = v.to_string();
  const std::string dec = decimal(v.to_complex());
  return exact == dec ? exact : exact + " ~ " + dec;
}

inline std::string interval_text(const Interval& iv) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.12g, %.12g]", to_double(iv.lo()), to_double(iv.hi()));
  return buf;
}

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline void render(const Output& out, Format format, std::ostream& os) {
  if (format == Format::json) {
    os << out.doc.dump(2) << "\n";
    return;
  }
  if (format == Format::csv) {
    bool first = true;
    for (const auto& t : out.tables) {
      if (!first) os << "\n";
      first = false;
      for (std::size_t k = 0; k < t.headers.size(); ++k) os << (k ? "," : "") << csv_cell(t.headers[k]);
      os << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_cell(r[k]);
        os << "\n";
      }
    }
    return;
  }
  for (const auto& t : out.tables) {
    if (!t.title.empty()) os << t.title << "\n";
    std::vector<std::size_t> w(t.headers.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = t.headers[k].size();
    for (const auto& r : t.rows)
      for (std::size_t k = 0; k < r.size() && k < w.size(); ++k) w[k] = std::max(w[k], r[k].size());
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t k = 0; k < r.size(); ++k) {
        s += r[k];
        if (k + 1 < r.size()) s += std::string(w[k] - r[k].size() + 2, ' ');
      }
      os << s << "\n";
    };
    line(t.headers);
    std::string rule;
    for (std::size_t k = 0; k < w.size(); ++k) rule += std::string(w[k], '-') + (k + 1 < w.size() ? "  " : "");
    os << rule << "\n";
    for (const auto& r : t.rows) line(r);
    os << "\n";
  }
  for (const auto& n : out.notes) os << n << "\n";
}

// ---------------------------------------------------------------------------
// shared pieces

inline void require_catalog_n(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("catalog-backed commands need n in 3..6");
}

inline std::vector<GramCandidate> selected_candidates(const RunConfig& cfg) {
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw std::invalid_argument("cannot read " + cfg.file);
    return {candidate_from_json(nlohmann::json::parse(in))};
  }
  if (!cfg.config.empty()) {
    auto c = get_candidate(cfg.config);
    finalize_census_weights(c);
    if (cfg.n && c.n != cfg.n) throw std::invalid_argument("'" + cfg.config + "' has n = " + std::to_string(c.n));
    return {c};
  }
  require_catalog_n(cfg.n);
  return candidates_for(cfg.n);
}

inline Budget budget_for(const RunConfig& cfg, int n) {
  Budget b;
  if (cfg.budget_seconds) b.seconds = *cfg.budget_seconds;
  else if (n <= 4) b.seconds = 60;
  else if (n == 5) b.seconds = 1800;
  // roughly 64 bytes per stored term
  if (cfg.memory_mb) b.max_terms = *cfg.memory_mb * (std::size_t{1} << 20) / 64;
  return b;
}

struct GroebnerRun {
  GroebnerBasis gb;
  bool from_cache = false;
  std::optional<std::filesystem::path> cache_file;
};

inline GroebnerRun run_groebner(const RunConfig& cfg, const FeketeSystem& sys) {
  GroebnerRun run;
  const auto gens = sys.generators();
  const auto order = sys.order();
  auto cache = BasisCache::resolve(cfg.cache_dir);
  if (cache) {
    run.cache_file = cache->path_for(gens, sys.vars, order);
    if (auto hit = cache->load(gens, sys.vars, order)) {
      run.gb = std::move(*hit);
      run.from_cache = true;
      return run;
    }
  }
  run.gb = buchberger(gens, order, budget_for(cfg, sys.n));
  if (cache) cache->store(gens, sys.vars, run.gb);
  return run;
}

inline nlohmann::json stats_json(const GroebnerStats& s) {
  return {{"pairs_processed", s.pairs_processed}, {"pairs_skipped", s.pairs_skipped},
          {"zero_reductions", s.zero_reductions}, {"postponed", s.postponed},
          {"basis_size", s.basis_size},           {"max_terms", s.max_terms},
          {"seconds", s.seconds}};
}

inline std::optional<long long> paper_degree(int n) {
  if (n < 4 || n > 6) return std::nullopt;
  return expected_degree(n);
}

// ---------------------------------------------------------------------------
// commands

inline Output cmd_system(const RunConfig& cfg) {
  const auto sys = build_system(cfg.n);
  Output out;
  out.doc["n"] = sys.n;
  out.doc["variables"] = sys.vars.names();
  Table counts{"", {"n", "variables", "equations"}, {{std::to_string(sys.n), std::to_string(sys.vars.size()),
                                                      std::to_string(sys.equation_count())}}};
  Table gens{"", {"family", "index", "polynomial"}, {}};
  nlohmann::json fam;
  for (const auto& [name, list] : {std::pair{"center_mass", &sys.center_mass}, std::pair{"z_def", &sys.z_def},
                                   std::pair{"gradient", &sys.gradient}}) {
    fam[name] = nlohmann::json::array();
    for (std::size_t k = 0; k < list->size(); ++k) {
      const auto text = to_string((*list)[k], sys.vars);
      fam[name].push_back(text);
      gens.rows.push_back({name, std::to_string(k), text});
    }
  }
  out.doc["families"] = fam;
  out.doc["counts"] = {{"variables", sys.vars.size()}, {"equations", sys.equation_count()}};
  out.tables = {counts, gens};
  return out;
}

inline Output cmd_groebner(const RunConfig& cfg) {
  Output out;
  out.doc["n"] = cfg.n;
  if (cfg.n >= 6 && !cfg.allow_long) {
    out.exit_code = kRefused;
    out.doc["refused"] = true;
    out.notes.push_back("refusing n = " + std::to_string(cfg.n) +
                        ": a Buchberger run at this size needs hours and tens of GB; pass --allow-long to try anyway");
    return out;
  }
  const auto sys = build_system(cfg.n);
  GroebnerRun run;
  try {
    run = run_groebner(cfg, sys);
  } catch (const BudgetExceeded& e) {
    out.exit_code = kBudgetExhausted;
    out.doc["budget_exceeded"] = true;
    out.doc["stats"] = stats_json(e.stats);
    out.notes.push_back(std::string(e.what()) + " (" + decimal(e.stats.seconds) + " s, basis " +
                        std::to_string(e.stats.basis_size) + ")");
    return out;
  }
  const bool zero_dim = finiteness_test(run.gb);
  out.doc["basis_size"] = run.gb.basis.size();
  out.doc["from_cache"] = run.from_cache;
  if (run.cache_file) out.doc["cache_file"] = run.cache_file->string();
  out.doc["stats"] = stats_json(run.gb.stats);
  out.doc["zero_dimensional"] = zero_dim;
  Table t{"", {"n", "basis", "pairs", "seconds", "zero-dim", "degree", "expected"}, {}};
  std::string degree_text = "-";
  if (zero_dim) {
    const auto deg = *ideal_degree(run.gb).degree;
    out.doc["degree"] = deg;
    degree_text = std::to_string(deg);
    if (auto exp = cfg.expected_degree ? cfg.expected_degree : paper_degree(cfg.n)) {
      out.doc["expected_degree"] = *exp;
      if (static_cast<long long>(deg) != *exp) out.exit_code = kCensusMismatch;
    }
  }
  auto exp = cfg.expected_degree ? cfg.expected_degree : paper_degree(cfg.n);
  t.rows.push_back({std::to_string(cfg.n), std::to_string(run.gb.basis.size()),
                    std::to_string(run.gb.stats.pairs_processed), run.from_cache ? "cached" : decimal(run.gb.stats.seconds),
                    zero_dim ? "yes" : "no", degree_text, exp ? std::to_string(*exp) : "-"});
  out.tables.push_back(t);

  if (!cfg.univariate.empty() && zero_dim) {
    const auto var = sys.vars.at(cfg.univariate);
    const MultiPoly mp = minimal_polynomial(run.gb, var);
    const MultiPoly sf = squarefree_part(mp);
    out.doc["univariate"] = {{"variable", cfg.univariate},
                             {"minimal_polynomial", to_string(mp, sys.vars)},
                             {"squarefree_part", to_string(sf, sys.vars)}};
    out.notes.push_back("minimal polynomial of " + cfg.univariate + ": " + to_string(mp, sys.vars));
    out.notes.push_back("squarefree part: " + to_string(sf, sys.vars));
  }
  return out;
}

inline Output cmd_verify(const RunConfig& cfg) {
  Output out;
  Table t{"", {"configuration", "domain", "evaluated", "center_mass", "z_def", "gradient", "result"}, {}};
  if (cfg.multiplicity) t.headers.insert(t.headers.end(), {"jacobian", "rank", "multiple"});
  out.doc["candidates"] = nlohmann::json::array();
  for (const auto& c : selected_candidates(cfg)) {
    const auto sys = build_system(c.n);
    const auto rep = verify(c, sys);
    nlohmann::json j = {{"name", c.name},
                        {"domain", rep.domain},
                        {"evaluated", rep.evaluated},
                        {"failures",
                         {{"center_mass", rep.center_mass_failures},
                          {"z_def", rep.z_def_failures},
                          {"gradient", rep.gradient_failures}}},
                        {"passed", rep.passed()}};
    std::vector<std::string> row = {c.label,
                                    rep.domain,
                                    std::to_string(rep.evaluated),
                                    std::to_string(rep.center_mass_failures.size()),
                                    std::to_string(rep.z_def_failures.size()),
                                    std::to_string(rep.gradient_failures.size()),
                                    rep.passed() ? "PASS" : "FAIL"};
    if (cfg.multiplicity) {
      const auto m = multiplicity_flag(c, sys);
      j["jacobian"] = {{"rows", m.jacobian_rows}, {"cols", m.jacobian_cols}, {"rank", m.rank}, {"multiple", m.multiple}};
      row.insert(row.end(), {std::to_string(m.jacobian_rows) + "x" + std::to_string(m.jacobian_cols),
                             std::to_string(m.rank), m.multiple ? "yes" : "no"});
    }
    if (!rep.passed()) out.exit_code = kVerificationFailed;
    out.doc["candidates"].push_back(j);
    t.rows.push_back(row);
  }
  out.doc["passed"] = out.exit_code == kOk;
  out.tables.push_back(t);
  return out;
}

inline Output cmd_orbits(const RunConfig& cfg) {
  Output out;
  Table t{"", {"configuration", "stabilizer", "orbit", "branches", "same orbit as"}, {}};
  out.doc["n"] = cfg.n;
  out.doc["orbits"] = nlohmann::json::array();
  for (const auto& c : selected_candidates(cfg)) {
    const auto o = orbit(c);
    out.doc["orbits"].push_back({{"name", c.name},
                                 {"stabilizer", o.stabilizer_size},
                                 {"orbit", o.orbit_size},
                                 {"branch_count", o.branch_count},
                                 {"same_orbit_as", c.same_orbit_as}});
    t.rows.push_back({c.label, std::to_string(o.stabilizer_size), std::to_string(o.orbit_size),
                      std::to_string(o.branch_count), c.same_orbit_as.empty() ? "-" : c.same_orbit_as});
  }
  out.tables.push_back(t);
  return out;
}

inline Output cmd_census(const RunConfig& cfg) {
  require_catalog_n(cfg.n);
  Output out;
  long long expected = 0;
  std::string provenance;
  if (cfg.expected_degree) {
    expected = *cfg.expected_degree;
    provenance = "command line";
  } else if (cfg.from_groebner) {
    RunConfig g = cfg;
    Output gout = cmd_groebner(g);
    if (gout.exit_code == kRefused || gout.exit_code == kBudgetExhausted) {
      gout.notes.insert(gout.notes.begin(), "census needs the ideal degree from a Groebner run");
      return gout;
    }
    expected = gout.doc.at("degree").get<long long>();
    provenance = "groebner run";
  } else {
    auto p = paper_degree(cfg.n);
    if (!p) throw std::invalid_argument("no expected degree for n = " + std::to_string(cfg.n));
    expected = *p;
    provenance = "paper constant";
  }
  const auto rep = census(cfg.n, expected);
  Table t{"", {"configuration", "orbit", "branches", "multiplicity", "count"}, {}};
  out.doc["n"] = cfg.n;
  out.doc["lines"] = nlohmann::json::array();
  for (const auto& l : rep.lines) {
    out.doc["lines"].push_back({{"name", l.candidate},
                                {"orbit", l.orbit_size},
                                {"branch_count", l.branch_count},
                                {"multiplicity", l.multiplicity},
                                {"contribution", l.contribution()}});
    t.rows.push_back({get_candidate(l.candidate).label, std::to_string(l.orbit_size), std::to_string(l.branch_count),
                      std::to_string(l.multiplicity), std::to_string(l.contribution())});
  }
  out.doc["found_simple"] = rep.found_simple;
  out.doc["found"] = rep.found;
  out.doc["expected_degree"] = {{"value", expected}, {"provenance", provenance}};
  out.doc["difference"] = rep.difference();
  out.tables.push_back(t);
  out.tables.push_back({"", {"found (simple)", "found (with multiplicity)", "expected", "source", "difference"},
                        {{std::to_string(rep.found_simple), std::to_string(rep.found), std::to_string(expected),
                          provenance, std::to_string(rep.difference())}}});
  if (rep.found != rep.found_simple)
    out.notes.push_back("difference " + std::to_string(expected - rep.found_simple) +
                        " between simple count and expected degree is carried by solutions of multiplicity 2");
  if (rep.difference() != 0) out.exit_code = kCensusMismatch;
  return out;
}

inline nlohmann::json spectrum_json(const GramSpectrum& s) {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : s.eigenvalues) {
    nlohmann::json j = {{"value", {e.value.real(), e.value.imag()}}, {"multiplicity", e.multiplicity}};
    if (e.exact) j["exact"] = e.exact->to_string();
    else j["radius"] = e.radius;
    ev.push_back(j);
  }
  return {{"real", s.is_real}, {"psd", s.psd}, {"rank", s.rank}, {"eigenvalues", ev}};
}

inline std::string eigenvalue_list(const GramSpectrum& s) {
  std::string txt;
  for (const auto& e : s.eigenvalues) {
    if (!txt.empty()) txt += ", ";
    txt += (e.exact ? exact_and_decimal(*e.exact) : decimal(e.value)) + " x" + std::to_string(e.multiplicity);
  }
  return txt;
}

inline Output cmd_geometry(const RunConfig& cfg) {
  Output out;
  Table t{"", {"configuration", "real", "psd", "rank", "eigenvalues"}, {}};
  out.doc["configurations"] = nlohmann::json::array();
  for (const auto& c : selected_candidates(cfg)) {
    const auto gs = gram_spectrum(c);
    nlohmann::json j = {{"name", c.name}, {"spectrum", spectrum_json(gs)}};
    if (!c.is_quotient()) {
      const auto e = product_energy(c);
      j["energy"] = {{"E", e.E.to_string()}, {"E_normalized", e.E_normalized.to_string()},
                     {"E_normalized_decimal", e.E_normalized.to_complex().real()}};
    }
    if (cfg.embed) {
      if (gs.is_real && gs.psd) {
        const auto em = embed(c, *cfg.embed);
        nlohmann::json cols = nlohmann::json::array();
        for (int i = 0; i < c.n; ++i) {
          std::vector<double> col(em.W.rows());
          for (int r = 0; r < em.W.rows(); ++r) col[r] = em.W(r, i);
          cols.push_back(col);
        }
        j["embedding"] = {{"d", *cfg.embed}, {"columns", cols}, {"residual", em.residual}, {"norm_defect", em.norm_defect}};
        out.notes.push_back(c.name + ": embedded in R^" + std::to_string(*cfg.embed) + ", max |W^T W - X| = " +
                            decimal(em.residual));
      } else {
        const auto em = complex_embed(c);
        nlohmann::json cols = nlohmann::json::array();
        for (int i = 0; i < c.n; ++i) {
          nlohmann::json col = nlohmann::json::array();
          for (int r = 0; r < em.W.rows(); ++r) col.push_back({em.W(r, i).real(), em.W(r, i).imag()});
          cols.push_back(col);
        }
        j["complex_embedding"] = {{"columns", cols}, {"residual", em.residual}};
        out.notes.push_back(c.name + ": complex coordinates in C^" + std::to_string(em.W.rows()) +
                            ", max |W^T W - X| = " + decimal(em.residual));
      }
    }
    out.doc["configurations"].push_back(j);
    t.rows.push_back({c.label, gs.is_real ? "yes" : "no", gs.psd ? "yes" : "no", std::to_string(gs.rank),
                      eigenvalue_list(gs)});
  }
  out.tables.push_back(t);
  return out;
}

inline std::string hessian_spectrum_text(const std::vector<SpectrumEntry>& s) {
  std::string txt;
  for (const auto& e : s) {
    if (!txt.empty()) txt += ", ";
    txt += (e.exact ? e.exact->get_str() : decimal(e.value)) + ":" + std::to_string(e.multiplicity);
  }
  return txt;
}

inline nlohmann::json certificate_json(const NegativeDirectionCertificate& c) {
  return {{"configuration", c.configuration},
          {"direction", c.direction},
          {"value", c.value.to_string()},
          {"enclosure", {to_double(c.enclosure.re.lo()), to_double(c.enclosure.re.hi())}},
          {"certified_negative", c.certified_negative}};
}

inline Output cmd_classify(const RunConfig& cfg) {
  Output out;
  std::vector<int> dims;
  if (cfg.d) dims = {*cfg.d};
  else
    for (int d = 2; d <= 5; ++d) dims.push_back(d);
  Table grid{"", {"configuration"}, {}};
  for (int d : dims) grid.headers.push_back("S^" + std::to_string(d - 1));
  Table spectra{"", {"configuration", "sphere", "zero", "eigenvalues"}, {}};
  out.doc["grid"] = nlohmann::json::array();
  std::vector<std::pair<GramCandidate, GramSpectrum>> rows;
  for (const auto& c : selected_candidates(cfg)) {
    if (c.is_quotient() || !c.is_real()) continue;
    auto gs = gram_spectrum(c);
    if (gs.psd) rows.emplace_back(c, std::move(gs));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second.rank < b.second.rank; });
  for (const auto& [c, gs] : rows) {
    std::vector<std::string> row = {c.label};
    nlohmann::json j = {{"name", c.name}, {"rank", gs.rank}, {"verdicts", nlohmann::json::object()}};
    for (int d : dims) {
      const std::string sphere = "S^" + std::to_string(d - 1);
      if (gs.rank > d) {
        row.push_back("-");
        j["verdicts"][sphere] = "-";
        continue;
      }
      const auto rec = classify(c, d);
      row.push_back(to_string(rec.verdict));
      j["verdicts"][sphere] = to_string(rec.verdict);
      if (cfg.emit_spectra) {
        nlohmann::json sp = nlohmann::json::array();
        for (const auto& e : rec.spectrum) {
          nlohmann::json ej = {{"value", e.value}, {"multiplicity", e.multiplicity}};
          if (e.exact) ej["exact"] = e.exact->get_str();
          sp.push_back(ej);
        }
        j["spectra"][sphere] = sp;
        spectra.rows.push_back(
            {c.label, sphere, std::to_string(zero_multiplicity(rec.spectrum)), hessian_spectrum_text(rec.spectrum)});
      }
    }
    out.doc["grid"].push_back(j);
    grid.rows.push_back(row);
  }
  out.tables.push_back(grid);
  if (cfg.emit_spectra) out.tables.push_back(spectra);
  if (cfg.n == 6 || (cfg.config == "one5" || cfg.config == "three3")) {
    out.doc["certificates"] = nlohmann::json::array();
    for (const char* name : {"three3", "one5"}) {
      if (!cfg.config.empty() && cfg.config != name) continue;
      const auto cert = negative_direction_certificate(name, cfg.precision);
      out.doc["certificates"].push_back(certificate_json(cert));
      out.notes.push_back(std::string(name) + " negative direction (" + cert.direction +
                          "): v^T h_L v = " + exact_and_decimal(cert.value) + ", enclosure " +
                          interval_text(cert.enclosure.re) + (cert.certified_negative ? ", certified < 0" : ""));
    }
  }
  return out;
}

inline Output cmd_report(const RunConfig& cfg) {
  require_catalog_n(cfg.n);
  Output out;
  out.doc["n"] = cfg.n;
  const long pairs = static_cast<long>(cfg.n) * (cfg.n - 1) / 2;
  Table t{"n=" + std::to_string(cfg.n) + ". Orbit size, energy and rank",
          {"configuration", "orbit", "E = 2^" + std::to_string(pairs) + " prod(1-x)", "E_normalized = prod(1-x)", "rank",
           "psd", "eigenvalues"},
          {}};
  out.doc["configurations"] = nlohmann::json::array();
  bool verified = true;
  for (const auto& c : candidates_for(cfg.n)) {
    const auto rep = verify(c, build_system(c.n));
    verified = verified && rep.passed();
    const auto o = orbit(c);
    const auto gs = gram_spectrum(c);
    nlohmann::json j = {{"name", c.name},          {"label", c.label},          {"orbit", o.orbit_size},
                        {"branch_count", c.branch_count}, {"verified", rep.passed()}, {"spectrum", spectrum_json(gs)}};
    std::string e_txt = "-", en_txt = "-";
    if (!c.is_quotient()) {
      const auto e = product_energy(c);
      e_txt = exact_and_decimal(e.E);
      en_txt = exact_and_decimal(e.E_normalized);
      j["E"] = e.E.to_string();
      j["E_normalized"] = e.E_normalized.to_string();
    }
    out.doc["configurations"].push_back(j);
    std::string orbit_txt = std::to_string(o.orbit_size);
    if (c.branch_count > 1) orbit_txt += " x" + std::to_string(c.branch_count);
    t.rows.push_back({c.label, orbit_txt, e_txt, en_txt, std::to_string(gs.rank), gs.psd ? "yes" : "no",
                      eigenvalue_list(gs)});
  }
  out.tables.push_back(t);
  out.notes.push_back("energy tables in the literature head every n with E / 2^15 while printing prod(1 - x_ij); "
                      "both columns are shown here");

  RunConfig sub = cfg;
  Output cen = cmd_census(sub);
  for (auto& tab : cen.tables) out.tables.push_back(tab);
  out.doc["census"] = cen.doc;
  for (auto& n : cen.notes) out.notes.push_back(n);

  Output cls = cmd_classify(sub);
  cls.tables[0].title = "n=" + std::to_string(cfg.n) + ". Classification";
  for (auto& tab : cls.tables) out.tables.push_back(tab);
  out.doc["classification"] = cls.doc;
  for (auto& n : cls.notes) out.notes.push_back(n);

  out.doc["verified"] = verified;
  if (!verified) out.exit_code = kVerificationFailed;
  else if (cen.exit_code != kOk) out.exit_code = cen.exit_code;
  return out;
}

inline Output dispatch(const RunConfig& cfg) {
  if (cfg.command == "system") return cmd_system(cfg);
  if (cfg.command == "groebner") return cmd_groebner(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "orbits") return cmd_orbits(cfg);
  if (cfg.command == "census") return cmd_census(cfg);
  if (cfg.command == "geometry") return cmd_geometry(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "report") return cmd_report(cfg);
  throw std::invalid_argument("unknown command " + cfg.command);
}

}  // namespace fekete::cli
