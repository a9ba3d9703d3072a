#include <algorithm>
#include <limits>

#include "pointex/ideal.hpp"

namespace pointex {

namespace {

using Term = CommPoly::Term;

// Working polynomial: terms sorted decreasing under the engine's order.
struct Poly {
  std::vector<Term> terms;
  std::uint32_t sugar = 0;
  const Monomial& lm() const { return terms.front().mono; }
};

class Engine {
 public:
  Engine(std::size_t nvars, const MonomialOrder& order) : n_(nvars), order_(order) {}

  int cmp(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, n_); }

  Poly from(const CommPoly& p) const {
    Poly out;
    out.terms = p.terms();
    std::sort(out.terms.begin(), out.terms.end(), [&](const Term& a, const Term& b) { return cmp(a.mono, b.mono) > 0; });
    out.sugar = p.total_degree();
    return out;
  }

  CommPoly to(const Poly& p) const { return CommPoly::from_terms(n_, p.terms); }

  static void make_monic(Poly& p) {
    if (p.terms.empty() || p.terms.front().coeff.is_one()) return;
    Scalar inv = p.terms.front().coeff.inverse();
    for (Term& t : p.terms) t.coeff *= inv;
  }

  // p[from..] - c * m * g[1..], where the leading terms are known to cancel.
  std::vector<Term> sub_tail(const std::vector<Term>& p, std::size_t from, const Scalar& c, const Monomial& m,
                             const Poly& g) const {
    std::vector<Term> out;
    out.reserve(p.size() - from + g.terms.size());
    std::size_t i = from, j = 1;
    while (i < p.size() || j < g.terms.size()) {
      if (j == g.terms.size()) {
        out.push_back(p[i++]);
        continue;
      }
      Monomial gm = m * g.terms[j].mono;
      int s = i == p.size() ? -1 : cmp(p[i].mono, gm);
      if (s > 0) {
        out.push_back(p[i++]);
      } else if (s < 0) {
        out.push_back({gm, -(c * g.terms[j].coeff)});
        ++j;
      } else {
        Scalar v = p[i].coeff - c * g.terms[j].coeff;
        if (!v.is_zero()) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction against monic polynomials `basis`.
  Poly reduce(Poly p, const std::vector<const Poly*>& basis) const {
    std::vector<Term> done;
    std::vector<Term> rest = std::move(p.terms);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      const Term& lead = rest[pos];
      const Poly* hit = nullptr;
      for (const Poly* g : basis)
        if (g->lm().divides(lead.mono)) {
          hit = g;
          break;
        }
      if (!hit) {
        done.push_back(lead);
        ++pos;
        continue;
      }
      Monomial q = hit->lm().quotient_of(lead.mono);
      Scalar c = lead.coeff;
      p.sugar = std::max(p.sugar, hit->sugar + q.degree);
      rest = sub_tail(rest, pos + 1, c, q, *hit);
      pos = 0;
    }
    p.terms = std::move(done);
    return p;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    Monomial l = f.lm().lcm(g.lm());
    Monomial qf = f.lm().quotient_of(l), qg = g.lm().quotient_of(l);
    Poly a;
    for (const Term& t : f.terms) a.terms.push_back({qf * t.mono, t.coeff});
    a.sugar = std::max(f.sugar + qf.degree, g.sugar + qg.degree);
    a.terms = sub_tail(a.terms, 1, Scalar(1), qg, g);
    return a;
  }

  std::size_t n_;
  MonomialOrder order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

}  // namespace

Monomial leading_monomial(const CommPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw InputError("leading monomial of zero");
  const Monomial* best = &p.terms().front().mono;
  for (const Term& t : p.terms())
    if (order.compare(t.mono, *best, p.nvars()) > 0) best = &t.mono;
  return *best;
}

std::vector<CommPoly> groebner(const std::vector<CommPoly>& gens, std::size_t nvars, const MonomialOrder& order) {
  Engine eng(nvars, order);
  std::vector<Poly> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto unit = [&]() { return std::vector<CommPoly>{CommPoly::constant(nvars, Scalar(1))}; };

  auto active_ptrs = [&]() {
    std::vector<const Poly*> out;
    for (std::size_t k : active) out.push_back(&polys[k]);
    return out;
  };

  // Gebauer-Moeller update with the new element h = polys.back().
  auto update = [&]() {
    std::size_t h = polys.size() - 1;
    const Monomial& lh = polys[h].lm();
    std::vector<Pair> cand;
    for (std::size_t g : active) {
      Monomial l = lh.lcm(polys[g].lm());
      std::uint32_t s = std::max(polys[h].sugar + (l.degree - lh.degree), polys[g].sugar + (l.degree - polys[g].lm().degree));
      cand.push_back({g, h, l, s});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Pair& p = cand[a];
      bool keep = lh.coprime(polys[p.i].lm());
      if (!keep) {
        auto covers = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
        keep = std::none_of(cand.begin() + static_cast<std::ptrdiff_t>(a) + 1, cand.end(), covers) &&
               std::none_of(kept.begin(), kept.end(), covers);
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs) {
      if (lh.divides(p.lcm) && !(polys[p.i].lm().lcm(lh) == p.lcm) && !(polys[p.j].lm().lcm(lh) == p.lcm)) continue;
      next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!lh.coprime(polys[p.i].lm())) next.push_back(p);
    pairs.swap(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!lh.divides(polys[g].lm())) still.push_back(g);
    still.push_back(h);
    active.swap(still);
  };

  // seed: inter-reduce input incrementally
  std::vector<Poly> inputs;
  for (const CommPoly& g : gens) {
    if (g.nvars() != nvars) throw InputError("generator over a different variable list");
    if (!g.is_zero()) inputs.push_back(eng.from(g));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const Poly& a, const Poly& b) { return eng.cmp(a.lm(), b.lm()) < 0; });
  for (Poly& g : inputs) {
    Poly r = eng.reduce(std::move(g), active_ptrs());
    if (r.terms.empty()) continue;
    if (r.lm().degree == 0) return unit();
    Engine::make_monic(r);
    polys.push_back(std::move(r));
    update();
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].sugar != pairs[best].sugar) {
        if (pairs[k].sugar < pairs[best].sugar) best = k;
      } else if (eng.cmp(pairs[k].lcm, pairs[best].lcm) < 0) {
        best = k;
      }
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Poly s = eng.reduce(eng.spoly(polys[p.i], polys[p.j]), active_ptrs());
    if (s.terms.empty()) continue;
    if (s.lm().degree == 0) return unit();
    Engine::make_monic(s);
    polys.push_back(std::move(s));
    update();
  }

  // reduced basis: drop redundant leading monomials, then inter-reduce tails
  std::vector<std::size_t> minimal;
  for (std::size_t a : active) {
    bool redundant = false;
    for (std::size_t b : active)
      if (a != b && polys[b].lm().divides(polys[a].lm()) && !(polys[b].lm() == polys[a].lm() && b > a)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(a);
  }
  std::vector<Poly> reduced;
  for (std::size_t a : minimal) {
    std::vector<const Poly*> others;
    for (std::size_t b : minimal)
      if (b != a) others.push_back(&polys[b]);
    Poly head;
    head.terms.push_back(polys[a].terms.front());
    Poly tail;
    tail.terms.assign(polys[a].terms.begin() + 1, polys[a].terms.end());
    tail = eng.reduce(std::move(tail), others);
    head.terms.insert(head.terms.end(), tail.terms.begin(), tail.terms.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) { return eng.cmp(a.lm(), b.lm()) < 0; });
  std::vector<CommPoly> out;
  for (const Poly& p : reduced) out.push_back(eng.to(p));
  return out;
}

CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& basis, const MonomialOrder& order) {
  Engine eng(f.nvars(), order);
  std::vector<Poly> gs;
  for (const CommPoly& g : basis) {
    Poly p = eng.from(g);
    Engine::make_monic(p);
    gs.push_back(std::move(p));
  }
  std::vector<const Poly*> ptrs;
  for (const Poly& g : gs) ptrs.push_back(&g);
  return eng.to(eng.reduce(eng.from(f), ptrs));
}

Ideal::Ideal(std::size_t nvars, std::vector<CommPoly> gens)
    : nvars_(nvars), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const CommPoly& g : gens_)
    if (g.nvars() != nvars_) throw InputError("ideal generator over a different variable list");
  std::erase_if(gens_, [](const CommPoly& g) { return g.is_zero(); });
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const CommPoly& g) { return g.is_homogeneous(); });
}

const std::vector<CommPoly>& Ideal::basis() const {
  std::call_once(cache_->once, [&] { cache_->basis = groebner(gens_, nvars_); });
  return cache_->basis;
}

bool Ideal::contains(const CommPoly& f) const { return normal_form(f, basis()).is_zero(); }

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (other.nvars_ != nvars_) throw InputError("ideals over different variable lists");
  std::vector<CommPoly> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(nvars_, std::move(g));
}

bool radical_member(const CommPoly& f, const Ideal& ideal) {
  if (f.nvars() != ideal.nvars()) throw InputError("radical_member: variable lists differ");
  if (f.is_zero()) return true;
  if (ideal.contains(f)) return true;
  if (ideal.is_zero()) return false;
  std::size_t n = ideal.nvars();
  if (n + 1 > kMaxVars) throw ResourceError("radical_member: no room for the auxiliary variable");
  std::vector<std::size_t> embed(n);
  for (std::size_t i = 0; i < n; ++i) embed[i] = i;
  std::vector<CommPoly> gens;
  for (const CommPoly& g : ideal.basis()) gens.push_back(g.remap(n + 1, embed));
  CommPoly t = CommPoly::variable(n + 1, n);
  gens.push_back(CommPoly::constant(n + 1, Scalar(1)) - t * f.remap(n + 1, embed));
  auto b = groebner(gens, n + 1);
  return b.size() == 1 && b.front().is_constant();
}

bool variety_equal(const Ideal& a, const Ideal& b) {
  for (const CommPoly& g : a.generators())
    if (!radical_member(g, b)) return false;
  for (const CommPoly& g : b.generators())
    if (!radical_member(g, a)) return false;
  return true;
}

bool projective_empty(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InputError("projective_empty: generators must be homogeneous");
  const auto& basis = ideal.basis();
  MonomialOrder order;
  for (std::size_t j = 0; j < ideal.nvars(); ++j) {
    bool found = false;
    for (const CommPoly& g : basis) {
      Monomial lm = leading_monomial(g, order);
      if (lm.degree == 0 || lm.exp[j] == lm.degree) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool projective_empty_by_radical(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw InputError("projective_empty: generators must be homogeneous");
  for (std::size_t j = 0; j < ideal.nvars(); ++j)
    if (!radical_member(CommPoly::variable(ideal.nvars(), j), ideal)) return false;
  return true;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw InputError("intersect: variable lists differ");
  if (a.is_zero() || b.is_zero()) return Ideal(a.nvars());
  std::size_t n = a.nvars();
  if (n + 1 > kMaxVars) throw ResourceError("intersect: no room for the auxiliary variable");
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  CommPoly t = CommPoly::variable(n + 1, 0);
  CommPoly one_minus_t = CommPoly::constant(n + 1, Scalar(1)) - t;
  std::vector<CommPoly> gens;
  for (const CommPoly& g : a.generators()) gens.push_back(t * g.remap(n + 1, shift));
  for (const CommPoly& g : b.generators()) gens.push_back(one_minus_t * g.remap(n + 1, shift));
  MonomialOrder elim{OrderKind::Elimination, 1};
  std::vector<CommPoly> out;
  for (const CommPoly& g : groebner(gens, n + 1, elim)) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const Term& tm) { return tm.mono.exp[0] != 0; });
    if (has_t) continue;
    // drop variable 0 (absent) by remapping into n variables
    std::vector<Term> terms;
    for (const Term& tm : g.terms()) {
      Monomial m;
      m.degree = tm.mono.degree;
      for (std::size_t i = 0; i < n; ++i) m.exp[i] = tm.mono.exp[i + 1];
      terms.push_back({m, tm.coeff});
    }
    out.push_back(CommPoly::from_terms(n, std::move(terms)).normalized());
  }
  return Ideal(n, std::move(out));
}

}  // namespace pointex
