#pragma once

#include "fekete/poly.hpp"
#include "fekete/univariate.hpp"

#include <chrono>
#include <type_traits>
#include <cstdio>
#include <cstdlib>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace fekete {

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;  // removed by the product/chain criteria
  std::size_t zero_reductions = 0;
  std::size_t postponed = 0;  // partial reductions put back under a higher sugar
  std::size_t basis_size = 0;
  std::size_t max_terms = 0;
  double seconds = 0;
};

struct Budget {
  double seconds = std::numeric_limits<double>::infinity();
  std::size_t max_terms = std::numeric_limits<std::size_t>::max();  // summed over the working basis

  static Budget unlimited() { return {}; }
  static Budget of_seconds(double s) { return {s}; }
};

struct BudgetExceeded : std::runtime_error {
  GroebnerStats stats;
  explicit BudgetExceeded(GroebnerStats s)
      : std::runtime_error("groebner budget exceeded after " + std::to_string(s.pairs_processed) + " pairs"),
        stats(s) {}
};

struct NotZeroDimensional : std::domain_error {
  NotZeroDimensional() : std::domain_error("ideal is not zero-dimensional") {}
};

struct GroebnerBasis {
  std::vector<MultiPoly> basis;  // reduced, integer content-normalized, sorted by leading monomial
  MonomialOrder order;
  GroebnerStats stats;
};

struct DegreeReport {
  bool is_zero_dimensional = false;
  std::optional<std::size_t> degree;
};

namespace detail {

// A critical pair (i, j), or a postponed partial reduction when `pending`
// indexes into the postponed-polynomial store.
struct SPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
  std::ptrdiff_t pending = -1;
};

/// Buchberger over integer coefficients: polynomials are kept primitive and
/// reduced fraction-free. Each element carries its sugar; reducers are
/// chosen to keep sugar low, then by length.
class Buchberger {
 public:
  Buchberger(MonomialOrder order, Budget budget)
      : order_(order), budget_(budget), start_(std::chrono::steady_clock::now()),
        trace_(std::getenv("FEKETE_GB_TRACE") != nullptr) {}

  void add_generator(const MultiPoly& f) {
    if (f.is_zero()) return;
    IntPoly p = primitive_part(f.reordered(order_));
    unsigned sugar = p.total_degree();
    IntPoly h = reduce(std::move(p), sugar);
    if (h.is_zero()) return;
    insert(std::move(h), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      check_budget();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      SPair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_processed;
      if (trace_ && stats_.pairs_processed % 50 == 0)
        std::fprintf(stderr, "[gb] pairs=%zu left=%zu basis=%zu terms=%zu sugar=%u t=%.1fs\n", stats_.pairs_processed,
                     pairs_.size(), active_count(), live_terms_, pr.sugar, elapsed());
      unsigned sugar = pr.sugar;
      IntPoly h;
      if (pr.pending >= 0) {
        h = std::move(postponed_[pr.pending]);
        free_slots_.push_back(pr.pending);
      } else {
        h = spoly(pr);
      }
      if (!reduce_top_lazy(h, sugar)) continue;
      unsigned tail_sugar = sugar;
      h = reduce(std::move(h), tail_sugar);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(h), sugar);
    }
  }

  std::vector<IntPoly> reduced_basis() {
    all_reducers_ = false;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order_.less(basis_[a].lm(), basis_[b].lm()); });
    std::vector<std::size_t> minimal;
    for (std::size_t k : idx) {
      bool redundant = false;
      for (std::size_t q : minimal)
        if (basis_[q].lm().divides(basis_[k].lm())) redundant = true;
      if (!redundant) minimal.push_back(k);
    }
    std::fill(active_.begin(), active_.end(), false);
    for (std::size_t k : minimal) active_[k] = true;
    // Tail-reduce from the smallest leading monomial upward, so every
    // reducer is already in final form when it is used.
    std::vector<IntPoly> out;
    for (std::size_t k : minimal) {
      active_[k] = false;
      unsigned sugar = sugar_[k];
      basis_[k] = reduce(basis_[k], sugar);
      active_[k] = true;
      out.push_back(basis_[k]);
    }
    return out;
  }

  GroebnerStats stats() const {
    GroebnerStats s = stats_;
    s.seconds = elapsed();
    return s;
  }

 private:
  bool pair_less(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  std::size_t active_count() const { return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true)); }

  void check_budget() {
    if (elapsed() > budget_.seconds || live_terms_ > budget_.max_terms) throw BudgetExceeded(stats());
  }

  IntPoly spoly(const SPair& pr) const {
    const IntPoly& f = basis_[pr.i];
    const IntPoly& g = basis_[pr.j];
    Integer gc = gcd(f.lc(), g.lc());
    IntPoly left = f.times_monomial(pr.lcm / f.lm());
    return left.combine(g.lc() / gc, -(f.lc() / gc), pr.lcm / g.lm(), g);
  }

  static IntPoly primitive(IntPoly h) {
    if (h.is_zero()) return h;
    Integer c = 0;
    for (const auto& t : h.terms()) {
      c = gcd(c, t.coeff);
      if (c == 1) break;
    }
    if (sgn(h.lc()) < 0) c = -c;
    if (c == 1) return h;
    std::vector<Term<Integer>> terms(h.terms().begin(), h.terms().end());
    for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    return IntPoly::from_terms(std::move(terms), h.order());
  }

  // Active element whose leading monomial divides m, preferring the one that
  // adds least sugar, then the shortest.
  const IntPoly* find_reducer(const Monomial& m, unsigned& sugar_out) const {
    const IntPoly* best = nullptr;
    unsigned best_sugar = 0;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!(active_[k] || all_reducers_) || !basis_[k].lm().divides(m)) continue;
      unsigned s = sugar_[k] + m.degree() - basis_[k].lm().degree();
      if (!best || s < best_sugar || (s == best_sugar && basis_[k].size() < best->size())) {
        best = &basis_[k];
        best_sugar = s;
      }
    }
    sugar_out = best_sugar;
    return best;
  }

  unsigned min_queued_sugar() const {
    unsigned m = std::numeric_limits<unsigned>::max();
    for (const auto& p : pairs_) m = std::min(m, p.sugar);
    return m;
  }

  // Top-reduces h. When the next step would raise the sugar above that of
  // some queued pair, h goes back into the queue under its new sugar and
  // false is returned.
  bool reduce_top_lazy(IntPoly& h, unsigned& sugar) {
    unsigned steps = 0;
    while (!h.is_zero()) {
      const Term<Integer>& t = h.leading();
      unsigned s = 0;
      const IntPoly* div = find_reducer(t.mono, s);
      if (!div) return true;
      if (s > sugar && min_queued_sugar() < s) {
        h = primitive(std::move(h));
        std::ptrdiff_t slot;
        if (!free_slots_.empty()) {
          slot = free_slots_.back();
          free_slots_.pop_back();
          postponed_[slot] = std::move(h);
        } else {
          slot = static_cast<std::ptrdiff_t>(postponed_.size());
          postponed_.push_back(std::move(h));
        }
        pairs_.push_back({0, 0, postponed_[slot].lm(), s, slot});
        ++stats_.postponed;
        return false;
      }
      sugar = std::max(sugar, s);
      h = step(h, t, *div);
      if (++steps % 8 == 0) h = primitive(std::move(h));
    }
    ++stats_.zero_reductions;
    return false;
  }

  static IntPoly step(const IntPoly& h, const Term<Integer>& t, const IntPoly& div) {
    Integer gc = gcd(div.lc(), t.coeff);
    Integer a = div.lc() / gc;
    Integer b = -(t.coeff / gc);
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    return h.combine(a, b, t.mono / div.lm(), div);
  }

  // Fraction-free reduction: h <- a*h - b*m*g cancels the target term.
  IntPoly reduce(IntPoly h, unsigned& sugar) const {
    std::size_t pos = 0;
    unsigned steps = 0;
    while (pos < h.size()) {
      const Term<Integer>& t = h.terms()[pos];
      unsigned s = 0;
      const IntPoly* div = find_reducer(t.mono, s);
      if (!div) {
        ++pos;
        continue;
      }
      sugar = std::max(sugar, s);
      h = step(h, t, *div);
      if (++steps % 8 == 0) h = primitive(std::move(h));
    }
    return primitive(std::move(h));
  }

  // Gebauer-Moeller installation of the product and chain criteria.
  void insert(IntPoly h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    const Monomial lh = h.lm();

    std::vector<SPair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      const Monomial l = lcm(basis_[k].lm(), lh);
      unsigned s = std::max(sugar_[k] + (l / basis_[k].lm()).degree(), sugar + (l / lh).degree());
      candidates.push_back({k, hi, l, s});
    }

    // Drop new pairs whose lcm is a multiple of another new pair's lcm.
    std::vector<SPair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      bool drop = false;
      if (!coprime(basis_[pa.i].lm(), lh)) {
        for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
          if (a == b) continue;
          const auto& pb = candidates[b];
          if (!pb.lcm.divides(pa.lcm)) continue;
          if (pb.lcm == pa.lcm) {
            // equal lcms: keep one, preferring a coprime witness
            if (coprime(basis_[pb.i].lm(), lh) || b < a) drop = true;
          } else {
            drop = true;
          }
        }
      }
      if (drop) ++stats_.pairs_skipped;
      else kept.push_back(pa);
    }
    // Product criterion.
    std::vector<SPair> fresh;
    for (auto& p : kept) {
      if (coprime(basis_[p.i].lm(), lh)) ++stats_.pairs_skipped;
      else fresh.push_back(p);
    }

    // Chain criterion on the old pairs.
    std::vector<SPair> old;
    for (auto& p : pairs_) {
      if (p.pending < 0 && lh.divides(p.lcm) && !(lcm(basis_[p.i].lm(), lh) == p.lcm) && !(lcm(basis_[p.j].lm(), lh) == p.lcm)) {
        ++stats_.pairs_skipped;
        continue;
      }
      old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(basis_[k].lm())) {
        active_[k] = false;
        live_terms_ -= basis_[k].size();
      }
    live_terms_ += h.size();
    stats_.max_terms = std::max(stats_.max_terms, live_terms_);
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
  }

  MonomialOrder order_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<IntPoly> basis_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<SPair> pairs_;
  std::vector<IntPoly> postponed_;
  std::vector<std::ptrdiff_t> free_slots_;
  std::size_t live_terms_ = 0;
  GroebnerStats stats_;
  bool trace_ = false;
  bool all_reducers_ = true;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `generators` under
/// `order`. Selection is by sugar, then by lcm under the order.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& generators, MonomialOrder order,
                                Budget budget = Budget::unlimited()) {
  detail::Buchberger engine(order, budget);
  for (const auto& g : generators) engine.add_generator(g);
  engine.run();
  GroebnerBasis gb;
  gb.order = order;
  for (auto& p : engine.reduced_basis()) gb.basis.push_back(to_rational(p));
  gb.stats = engine.stats();
  gb.stats.basis_size = gb.basis.size();
  return gb;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  Monomial l = lcm(f.lm(), g.lm());
  MultiPoly left = f.times_monomial(l / f.lm()).scaled(Rational(1) / f.lc());
  return left.combine(Rational(1), -(Rational(1) / g.lc()), l / g.lm(), g);
}

/// True when every variable has a pure power among the leading monomials.
inline bool finiteness_test(const GroebnerBasis& gb) {
  std::size_t n = gb.order.nvars;
  std::vector<bool> has(n, false);
  for (const auto& g : gb.basis) {
    const Monomial& m = g.lm();
    if (m.is_one()) return true;  // unit ideal, no solutions
    if (std::popcount(m.support()) == 1) has[__builtin_ctzll(m.support())] = true;
  }
  return std::all_of(has.begin(), has.end(), [](bool b) { return b; });
}

/// Monomials outside the leading-term ideal, in breadth-first order from 1.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  if (!finiteness_test(gb)) throw NotZeroDimensional();
  for (const auto& g : gb.basis)
    if (g.lm().is_one()) return {};
  std::vector<Monomial> out{Monomial{}};
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t v = 0; v < gb.order.nvars; ++v) {
      Monomial m = out[k] * Monomial::variable(v);
      if (seen.count(m)) continue;
      seen.insert(m);
      bool divisible = false;
      for (const auto& g : gb.basis)
        if (g.lm().divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) out.push_back(m);
    }
  }
  return out;
}

inline DegreeReport ideal_degree(const GroebnerBasis& gb) {
  DegreeReport r;
  r.is_zero_dimensional = finiteness_test(gb);
  if (!r.is_zero_dimensional) throw NotZeroDimensional();
  r.degree = standard_monomials(gb).size();
  return r;
}

/// Monic generator of the ideal's intersection with Q[keep], via a block
/// order that eliminates every other variable.
inline MultiPoly eliminate_to_univariate(const std::vector<MultiPoly>& generators, std::size_t keep,
                                         Budget budget = Budget::unlimited()) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  std::size_t n = generators.front().nvars();
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  auto order = MonomialOrder::eliminate(n, all & ~(std::uint64_t{1} << keep));
  GroebnerBasis gb = buchberger(generators, order, budget);
  for (const auto& g : gb.basis)
    if ((g.support() & ~(std::uint64_t{1} << keep)) == 0)
      return monic(g.reordered(MonomialOrder::grevlex(n)));
  throw NotZeroDimensional();
}

/// Monic minimal polynomial of multiplication by variable `var` on the
/// quotient algebra of a zero-dimensional ideal. Equals the generator of the
/// elimination ideal I ∩ Q[var].
inline MultiPoly minimal_polynomial(const GroebnerBasis& gb, std::size_t var) {
  auto std_monos = standard_monomials(gb);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < std_monos.size(); ++k) index.emplace(std_monos[k], k);
  const std::size_t dim = std_monos.size();
  auto coords = [&](const MultiPoly& p) {
    std::vector<Rational> v(dim);
    for (const auto& t : p.terms()) v[index.at(t.mono)] = t.coeff;
    return v;
  };
  // Incremental echelon form of the coordinate vectors of 1, x, x^2, ...
  std::vector<std::vector<Rational>> rows;      // echelonized vectors
  std::vector<std::vector<Rational>> combos;    // power-basis combination for each row
  std::vector<std::size_t> pivots;
  MultiPoly power = MultiPoly::constant(Rational(1), gb.order);
  MultiPoly x = MultiPoly::variable(var, gb.order);
  for (std::size_t d = 0; d <= dim; ++d) {
    auto v = coords(reduce(power, gb.basis));
    std::vector<Rational> combo(d + 1);
    combo[d] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational f = v[pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < dim; ++c) v[c] -= f * rows[r][c];
      for (std::size_t c = 0; c < combos[r].size(); ++c) combo[c] -= f * combos[r][c];
    }
    auto piv = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (piv == v.end()) {
      std::vector<Term<Rational>> terms;
      for (std::size_t c = 0; c < combo.size(); ++c)
        if (combo[c] != 0) terms.push_back({combo[c], Monomial::variable(var, static_cast<unsigned>(c))});
      return monic(MultiPoly::from_terms(std::move(terms), MonomialOrder::grevlex(gb.order.nvars)));
    }
    std::size_t p = static_cast<std::size_t>(piv - v.begin());
    Rational inv = Rational(1) / v[p];
    for (auto& q : v) q *= inv;
    for (auto& q : combo) q *= inv;
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(p);
    power = reduce(power * x, gb.basis);
  }
  throw std::logic_error("minimal polynomial degree exceeds quotient dimension");
}

/// p / gcd(p, p'), content-normalized. p must involve at most one variable.
inline MultiPoly squarefree_part(const MultiPoly& p) {
  auto u = Univariate::from_poly(p);
  return normalized(u.squarefree_part().to_poly(u.variable(), p.order()));
}

}  // namespace fekete
