#include "pointex/resolutions.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace pointex {

namespace {

Element absent() { return Element{0, {}}; }

// Automorphism matrices per word length, built on demand.
class Twister {
 public:
  Twister(const Algebra& a, const GradedAutomorphism& s) : a_(a), s_(s) {}

  Element operator()(const Element& e) {
    if (e.is_zero()) return e;
    auto it = cache_.find(e.length);
    if (it == cache_.end()) it = cache_.emplace(e.length, a_.automorphism_matrix(s_, e.length)).first;
    const Matrix& m = it->second;
    Element out = a_.zero(e.length);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (e.coords[c].is_zero()) continue;
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) out.coords[r] += m(r, c) * e.coords[c];
    }
    return out;
  }

 private:
  const Algebra& a_;
  GradedAutomorphism s_;
  std::map<std::size_t, Matrix> cache_;
};

std::vector<long> shifted(std::vector<long> v, long by) {
  for (long& x : v) x += by;
  return v;
}

Element unit_vector(const Algebra& a, std::size_t len, std::size_t k) {
  Element e = a.zero(len);
  e.coords[k] = Scalar::from_rational(1, a.field());
  return e;
}

// Rank of the degree-t strand of a map (t in word-length units).
std::size_t strand_rank(const Algebra& a, const FreeModuleMap& f, long t) {
  std::vector<std::size_t> offset(f.rows() + 1, 0);
  for (std::size_t r = 0; r < f.rows(); ++r) {
    long len = t - f.target[r];
    offset[r + 1] = offset[r] + (len >= 0 ? a.dim(len) : 0);
  }
  std::vector<SparseRow> rows;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    long len = t - f.source[c];
    if (len < 0) continue;
    for (std::size_t v = 0; v < a.dim(len); ++v) {
      Element e = unit_vector(a, len, v);
      SparseRow row;
      for (std::size_t r = 0; r < f.rows(); ++r) {
        const Element& x = f.at(r, c);
        if (f.entry_length(r, c) < 0 || x.is_zero()) continue;
        Element img = a.multiply(x, e);
        for (std::size_t k = 0; k < img.coords.size(); ++k)
          if (!img.coords[k].is_zero()) row.emplace_back(offset[r] + k, img.coords[k]);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return sparse_rank(std::move(rows), offset.back());
}

std::size_t module_dim(const Algebra& a, const std::vector<long>& shifts, long t) {
  std::size_t d = 0;
  for (long s : shifts)
    if (t >= s) d += a.dim(t - s);
  return d;
}

}  // namespace

FreeModuleMap::FreeModuleMap(const Algebra& a, std::vector<long> tgt, std::vector<long> src)
    : target(std::move(tgt)), source(std::move(src)) {
  entries.reserve(rows() * cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) {
      long len = entry_length(r, c);
      entries.push_back(len >= 0 ? a.zero(len) : absent());
    }
}

bool FreeModuleMap::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Element& e) { return e.is_zero(); });
}

bool FreeModuleMap::has_scalar_entry() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (entry_length(r, c) == 0 && !at(r, c).is_zero()) return true;
  return false;
}

LinearFormMatrix FreeModuleMap::linear_forms() const {
  std::size_t n = 0;
  for (const Element& e : entries)
    if (e.length == 1) n = std::max(n, e.coords.size());
  LinearFormMatrix out(rows(), cols(), n);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) {
      const Element& e = at(r, c);
      if (e.is_zero()) continue;
      if (e.length != 1) throw InputError("map has an entry that is not a linear form");
      for (std::size_t k = 0; k < e.coords.size(); ++k) out.coeff(r, c, k) = e.coords[k];
    }
  return out;
}

FreeModuleMap compose(const Algebra& a, const FreeModuleMap& f, const FreeModuleMap& g) {
  if (f.cols() != g.rows()) throw InvariantError("compose: inner dimensions differ");
  long delta = 0;
  for (std::size_t k = 0; k < f.cols(); ++k) {
    long dk = f.source[k] - g.target[k];
    if (k > 0 && dk != delta) throw InvariantError("compose: inconsistent shifts");
    delta = dk;
  }
  FreeModuleMap out(a, f.target, shifted(g.source, delta));
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if (out.entry_length(r, c) < 0) continue;
      Element& acc = out.at(r, c);
      for (std::size_t k = 0; k < f.cols(); ++k) {
        if (f.entry_length(r, k) < 0 || g.entry_length(k, c) < 0) continue;
        const Element& x = f.at(r, k);
        const Element& y = g.at(k, c);
        if (x.is_zero() || y.is_zero()) continue;
        acc = a.add(acc, a.multiply(x, y));
      }
    }
  return out;
}

FreeModuleMap add(const Algebra& a, const FreeModuleMap& f, const FreeModuleMap& g) {
  // without rows the source shifts of a composite are not determined
  if (f.rows() == 0 && g.rows() == 0 && f.cols() == g.cols()) return f;
  if (f.target != g.target || f.source != g.source) throw InvariantError("add: maps have different shapes");
  FreeModuleMap out = f;
  for (std::size_t k = 0; k < out.entries.size(); ++k)
    if (!g.entries[k].coords.empty()) out.entries[k] = a.add(f.entries[k], g.entries[k]);
  return out;
}

FreeModuleMap negate(const FreeModuleMap& f) {
  FreeModuleMap out = f;
  for (Element& e : out.entries)
    for (Scalar& c : e.coords) c = -c;
  return out;
}

FreeModuleMap twist(const Algebra& a, const FreeModuleMap& f, const GradedAutomorphism& s) {
  Twister tw(a, s);
  FreeModuleMap out = f;
  for (Element& e : out.entries) e = tw(e);
  return out;
}

FreeModuleMap push_forward(const Algebra& from, const Algebra& to, const FreeModuleMap& f) {
  FreeModuleMap out(to, f.target, f.source);
  for (std::size_t k = 0; k < f.entries.size(); ++k)
    if (!f.entries[k].coords.empty()) out.entries[k] = to.reduce_from(from, f.entries[k]);
  return out;
}

FreeModuleMap diagonal_map(const Algebra& a, const std::vector<long>& shifts, const Element& entry) {
  FreeModuleMap out(a, shifts, shifted(shifts, static_cast<long>(entry.length)));
  for (std::size_t i = 0; i < shifts.size(); ++i) out.at(i, i) = entry;
  return out;
}

std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> out;
  out.push_back(maps.empty() ? 1 : maps[0].rows());
  for (const FreeModuleMap& m : maps) out.push_back(m.cols());
  return out;
}

std::vector<long> FreeComplex::shifts(std::size_t i) const {
  if (i == 0) return maps.empty() ? std::vector<long>{0} : maps[0].target;
  return maps.at(i - 1).source;
}

LinearFormMatrix FreeComplex::differential_forms(std::size_t i) const {
  LinearFormMatrix m = d(i).linear_forms();
  if (m.nvars() < algebra.n()) {
    LinearFormMatrix wide(m.rows(), m.cols(), algebra.n());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t k = 0; k < m.nvars(); ++k) wide.coeff(r, c, k) = m.coeff(r, c, k);
    m = wide;
  }
  return side == Side::Left ? m.transpose() : m;
}

VerificationReport verify_complex(const FreeComplex& c, std::size_t cap) {
  VerificationReport rep;
  rep.cap = cap;
  const Algebra& a = c.algebra;
  const std::size_t L = c.length();
  for (std::size_t i = 1; i < L; ++i)
    if (!compose(a, c.d(i), c.d(i + 1)).is_zero()) {
      rep.composites_zero = false;
      rep.nonzero_composites.push_back(i);
    }
  for (std::size_t i = 1; i <= L; ++i)
    if (c.d(i).has_scalar_entry()) {
      rep.minimal = false;
      rep.scalar_entries.push_back(i);
    }

  const long w = a.presentation().weight();
  const long top = static_cast<long>(cap) / w;
  std::map<std::pair<std::size_t, long>, std::size_t> ranks;
  auto rank_of = [&](std::size_t i, long t) -> std::size_t {
    if (i == 0) return t == 0 ? 1 : 0;  // augmentation onto k
    auto key = std::make_pair(i, t);
    auto it = ranks.find(key);
    if (it != ranks.end()) return it->second;
    return ranks[key] = strand_rank(a, c.d(i), t);
  };
  for (std::size_t i = 0; i < L; ++i)
    for (long t = 0; t <= top; ++t) {
      std::size_t kernel = module_dim(a, c.shifts(i), t) - rank_of(i, t);
      std::size_t image = rank_of(i + 1, t);
      HomologyCheck h{i, static_cast<std::size_t>(t * w), kernel, image};
      if (!h.exact()) rep.exact = false;
      rep.checks.push_back(h);
    }
  // equal dimensions give exactness only when the image sits in the kernel
  if (!rep.composites_zero) rep.exact = false;
  return rep;
}

FreeComplex linear_resolution(const Algebra& base, Side side, std::size_t length) {
  if (length == 0) throw InputError("resolution length must be positive");
  Algebra a = side == Side::Left ? base.opposite() : base;
  const std::size_t n = a.n();
  const std::size_t d1 = a.dim(1), d2 = a.dim(2);

  FreeComplex out{a, side, {}};
  FreeModuleMap first(a, {0}, std::vector<long>(n, 1));
  for (std::size_t g = 0; g < n; ++g) first.at(0, g) = a.generator(g);
  out.maps.push_back(std::move(first));

  for (std::size_t i = 1; i < length; ++i) {
    const FreeModuleMap& d = out.maps.back();
    // kernel of (P_i)_{i+1} -> (P_{i-1})_{i+1}; columns are (generator c, letter g)
    Matrix m(d.rows() * d2, d.cols() * d1);
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (std::size_t g = 0; g < d1; ++g)
        for (std::size_t r = 0; r < d.rows(); ++r) {
          if (d.at(r, c).is_zero()) continue;
          Element img = a.multiply(d.at(r, c), unit_vector(a, 1, g));
          for (std::size_t k = 0; k < d2; ++k) m(r * d2 + k, c * d1 + g) = img.coords[k];
        }
    Matrix ker = nullspace(m);
    long deg = static_cast<long>(i + 1);
    FreeModuleMap next(a, std::vector<long>(d.cols(), static_cast<long>(i)), std::vector<long>(ker.cols(), deg));
    for (std::size_t j = 0; j < ker.cols(); ++j)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        Element e = a.zero(1);
        for (std::size_t g = 0; g < d1; ++g) e.coords[g] = ker(c * d1 + g, j);
        next.at(c, j) = std::move(e);
      }
    out.maps.push_back(std::move(next));
  }

  VerificationReport rep = verify_complex(out, (length + 1) * a.presentation().weight());
  if (!rep.composites_zero) throw InvariantError("linear resolution: composite of differentials is nonzero");
  for (const HomologyCheck& h : rep.checks)
    if (!h.exact())
      throw NotKoszulError(h.index, "linear resolution is not exact at homological index " + std::to_string(h.index) +
                                        " in internal degree " + std::to_string(h.degree) +
                                        ": the algebra is not Koszul up to this length");
  return out;
}

ConeExtension cone_extension(const FreeComplex& p, const std::vector<Scalar>& q, const std::string& name) {
  if (p.side != Side::Right) throw InputError("cone extension expects a right resolution");
  const Algebra& a = p.algebra;
  const std::size_t n = a.n();
  if (q.size() != n) throw InputError("cone extension needs one skew parameter per variable");
  const Presentation& pres = a.presentation();
  if (pres.weight() != 1) throw InputError("cone extension expects generators of degree 1");

  std::vector<std::string> names = pres.names();
  names.push_back(name.empty() ? "x" + std::to_string(n + 1) : name);
  std::vector<NCPoly> rels = pres.relations();
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].is_zero()) throw InputError("skew parameters must be nonzero");
    Word hi = {static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(i)};
    Word lo = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(n)};
    rels.push_back(NCPoly::word(hi) - NCPoly::word(lo, q[i]));
  }
  Algebra b(Presentation(pres.field(), names, rels));
  const Element x_new = b.generator(n);
  const std::size_t L = p.length();

  std::vector<FreeModuleMap> d;
  for (const FreeModuleMap& m : p.maps) d.push_back(push_forward(a, b, m));

  // phi_j = x_new * diag(D_j) with d_j phi_j = phi_{j-1} d_j
  std::vector<std::vector<Scalar>> diag = {{Scalar::from_rational(1, pres.field())}};
  for (std::size_t j = 1; j < L; ++j) {
    const FreeModuleMap& dj = d[j - 1];
    std::vector<Scalar> next(dj.cols());
    for (std::size_t c = 0; c < dj.cols(); ++c) {
      std::optional<Scalar> val;
      for (std::size_t r = 0; r < dj.rows(); ++r) {
        const Element& e = dj.at(r, c);
        if (e.is_zero()) continue;
        Element lhs = b.multiply(e, x_new);
        Element rhs = b.scale(b.multiply(x_new, e), diag[j - 1][r]);
        std::size_t k = 0;
        while (k < lhs.coords.size() && lhs.coords[k].is_zero()) ++k;
        if (k == lhs.coords.size()) throw InvariantError("cone extension: zero product in a domain");
        Scalar ratio = rhs.coords[k] / lhs.coords[k];
        if (b.scale(lhs, ratio) != rhs || (val && *val != ratio))
          throw InvariantError("cone extension: no diagonal chain map for these parameters");
        val = ratio;
      }
      if (!val || val->is_zero()) throw InvariantError("cone extension: degenerate column");
      next[c] = *val;
    }
    diag.push_back(std::move(next));
  }

  auto phi_map = [&](std::size_t j) {
    std::vector<long> s = p.shifts(j);
    FreeModuleMap m(b, s, shifted(s, 1));
    for (std::size_t k = 0; k < s.size(); ++k) m.at(k, k) = b.scale(x_new, diag[j][k]);
    return m;
  };

  FreeComplex out{b, Side::Right, {}};
  for (std::size_t i = 1; i <= L; ++i) {
    std::vector<long> top_rows = i >= 2 ? shifted(p.shifts(i - 2), 1) : std::vector<long>{};
    std::vector<long> bottom_rows = p.shifts(i - 1);
    std::vector<long> left_cols = shifted(p.shifts(i - 1), 1);
    std::vector<long> right_cols = p.shifts(i);
    std::vector<long> rows = top_rows, cols = left_cols;
    rows.insert(rows.end(), bottom_rows.begin(), bottom_rows.end());
    cols.insert(cols.end(), right_cols.begin(), right_cols.end());
    FreeModuleMap m(b, rows, cols);
    const std::size_t r0 = top_rows.size(), c0 = left_cols.size();
    if (i >= 2) {
      FreeModuleMap neg = negate(d[i - 2]);
      for (std::size_t r = 0; r < neg.rows(); ++r)
        for (std::size_t c = 0; c < neg.cols(); ++c) m.at(r, c) = neg.at(r, c);
    }
    FreeModuleMap phi = phi_map(i - 1);
    for (std::size_t k = 0; k < phi.rows(); ++k) m.at(r0 + k, k) = phi.at(k, k);
    const FreeModuleMap& di = d[i - 1];
    for (std::size_t r = 0; r < di.rows(); ++r)
      for (std::size_t c = 0; c < di.cols(); ++c) m.at(r0 + r, c0 + c) = di.at(r, c);
    out.maps.push_back(std::move(m));
  }
  return ConeExtension{std::move(out), std::move(diag)};
}

std::vector<ConeExtension> canonical_skew_steps(const Matrix& q, std::size_t length,
                                                const std::vector<std::string>& names_in) {
  const std::size_t n = q.rows();
  if (n == 0 || q.cols() != n) throw InputError("skew matrix must be square and nonempty");
  if (length == 0) throw InputError("resolution length must be positive");
  std::vector<std::string> names = names_in;
  if (names.empty())
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  if (names.size() != n) throw InputError("wrong number of variable names");
  Field field = q(0, 0).field();

  Algebra line(Presentation(field, {names[0]}, {}));
  FreeComplex p{line, Side::Right, {}};
  FreeModuleMap first(line, {0}, {1});
  first.at(0, 0) = line.generator(0);
  p.maps.push_back(first);
  for (std::size_t i = 2; i <= length; ++i)
    p.maps.push_back(FreeModuleMap(line, i == 2 ? std::vector<long>{1} : std::vector<long>{}, {}));

  std::vector<ConeExtension> steps;
  steps.push_back(ConeExtension{p, {}});
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Scalar> col;
    for (std::size_t i = 0; i < k; ++i) col.push_back(q(i, k));
    steps.push_back(cone_extension(steps.back().complex, col, names[k]));
  }
  return steps;
}

FreeComplex canonical_skew_resolution(const Matrix& q, std::size_t length, const std::vector<std::string>& names) {
  return canonical_skew_steps(q, length, names).back().complex;
}

std::optional<std::vector<Matrix>> scalar_chain_isomorphism(const FreeComplex& from, const FreeComplex& to) {
  if (from.algebra.presentation() != to.algebra.presentation())
    throw InputError("complexes live over different algebras");
  if (from.ranks() != to.ranks()) return std::nullopt;
  const std::size_t L = std::min(from.length(), to.length());
  std::vector<Matrix> phi = {Matrix::identity(1)};
  for (std::size_t i = 1; i <= L; ++i) {
    const FreeModuleMap& src = from.d(i);
    const FreeModuleMap& dst = to.d(i);
    if (src.source != dst.source || src.target != dst.target) return std::nullopt;
    const std::size_t rows = dst.rows(), s = dst.cols();
    // per column b of phi_i: sum_a dst(r, a) X(a, b) = sum_k phi(r, k) src(k, b)
    std::size_t block = 0;
    for (const Element& e : dst.entries) block = std::max(block, e.coords.size());
    for (const Element& e : src.entries) block = std::max(block, e.coords.size());
    Matrix m(rows * block, s), rhs(rows * block, s);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < s; ++c) {
        const Element& e = dst.at(r, c);
        for (std::size_t k = 0; k < e.coords.size(); ++k) m(r * block + k, c) = e.coords[k];
        for (std::size_t j = 0; j < rows; ++j) {
          const Element& f = src.at(j, c);
          if (phi.back()(r, j).is_zero()) continue;
          for (std::size_t k = 0; k < f.coords.size(); ++k) rhs(r * block + k, c) += phi.back()(r, j) * f.coords[k];
        }
      }
    auto x = solve(m, rhs);
    if (!x || !inverse(*x)) return std::nullopt;
    phi.push_back(std::move(*x));
  }
  return phi;
}

FreeModuleMap homotopy_lift(const FreeComplex& p, std::size_t target_index, const FreeModuleMap& rhs,
                            const std::vector<long>& source_shifts) {
  const Algebra& a = p.algebra;
  const FreeModuleMap& d = p.d(target_index);
  std::vector<long> tshifts = p.shifts(target_index);
  if (rhs.rows() != d.rows() || rhs.cols() != source_shifts.size())
    throw InvariantError("homotopy lift: shape mismatch");
  FreeModuleMap x(a, tshifts, source_shifts);

  // columns sharing a source shift share the coefficient matrix
  std::map<long, std::vector<std::size_t>> groups;
  for (std::size_t b = 0; b < source_shifts.size(); ++b) groups[source_shifts[b]].push_back(b);
  for (const auto& [shift, cols] : groups) {
    std::vector<std::size_t> row_off(d.rows() + 1, 0), unk_off(d.cols() + 1, 0);
    for (std::size_t r = 0; r < d.rows(); ++r) {
      long len = shift - rhs.target[r];
      row_off[r + 1] = row_off[r] + (len >= 0 ? a.dim(len) : 0);
    }
    for (std::size_t u = 0; u < d.cols(); ++u) {
      long len = shift - tshifts[u];
      unk_off[u + 1] = unk_off[u] + (len >= 0 ? a.dim(len) : 0);
    }
    Matrix m(row_off.back(), unk_off.back()), b(row_off.back(), cols.size());
    for (std::size_t u = 0; u < d.cols(); ++u) {
      long len = shift - tshifts[u];
      if (len < 0) continue;
      for (std::size_t v = 0; v < a.dim(len); ++v) {
        Element e = unit_vector(a, len, v);
        for (std::size_t r = 0; r < d.rows(); ++r) {
          if (d.entry_length(r, u) < 0 || d.at(r, u).is_zero()) continue;
          Element img = a.multiply(d.at(r, u), e);
          for (std::size_t k = 0; k < img.coords.size(); ++k) m(row_off[r] + k, unk_off[u] + v) = img.coords[k];
        }
      }
    }
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t r = 0; r < d.rows(); ++r) {
        const Element& e = rhs.at(r, cols[j]);
        for (std::size_t k = 0; k < e.coords.size() && row_off[r] + k < row_off[r + 1]; ++k)
          b(row_off[r] + k, j) = e.coords[k];
      }
    if (m.cols() == 0) {
      if (!b.is_zero()) throw InvariantError("homotopy equation has no solution of the forced degree");
      continue;
    }
    auto sol = m.rows() == 0 ? std::optional<Matrix>(Matrix(m.cols(), cols.size())) : solve(m, b);
    if (!sol) throw InvariantError("homotopy equation has no solution");
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t u = 0; u < d.cols(); ++u) {
        Element& e = x.at(u, cols[j]);
        for (std::size_t v = 0; v < e.coords.size(); ++v) e.coords[v] = (*sol)(unk_off[u] + v, j);
      }
  }
  return x;
}

namespace {

// c^n_l, or nullopt when the map is zero by convention (l < 0, or d_0)
const FreeModuleMap* tower_map(const FreeComplex& p, const HomotopyTower& t, std::size_t n, long l) {
  if (l < 0) return nullptr;
  if (n == 0) return l >= 1 && static_cast<std::size_t>(l) <= p.length() ? &p.d(l) : nullptr;
  if (!t.has(n, l)) throw InvariantError("homotopy tower does not reach the requested map");
  return &t.c[n][l];
}

FreeModuleMap tower_sum(const FreeComplex& p, const HomotopyTower& t, std::size_t n, std::size_t l,
                        std::size_t lo, std::size_t hi, std::vector<Twister>& tw) {
  const Algebra& a = p.algebra;
  const long m = static_cast<long>(t.f.length);
  FreeModuleMap acc(a, p.shifts(l + 2 * n - 2), shifted(p.shifts(l), static_cast<long>(n) * m));
  for (std::size_t i = lo; i <= hi; ++i) {
    const FreeModuleMap* outer = tower_map(p, t, i, static_cast<long>(l + 2 * (n - i)) - 1);
    const FreeModuleMap* inner = tower_map(p, t, n - i, static_cast<long>(l));
    if (!outer || !inner) continue;
    FreeModuleMap tw_inner = *inner;
    for (Element& e : tw_inner.entries) e = tw[i](e);
    acc = add(a, acc, compose(a, *outer, tw_inner));
  }
  return acc;
}

std::vector<Twister> twisters(const Algebra& a, const GradedAutomorphism& tau, std::size_t top) {
  std::vector<Twister> out;
  for (std::size_t i = 0; i <= top; ++i) out.emplace_back(a, tau.power(static_cast<long>(i)));
  return out;
}

HomotopyTower build_tower(const FreeComplex& p, const Element& f, const GradedAutomorphism& sigma, std::size_t L) {
  const Algebra& a = p.algebra;
  HomotopyTower t{f, sigma, sigma.inverse(), {}};
  const std::size_t top = L / 2;
  std::vector<Twister> tw = twisters(a, t.tau, top);
  t.c.resize(top + 1);
  for (std::size_t l = 0; l <= L; ++l) t.c[0].push_back(l == 0 ? FreeModuleMap() : p.d(l));
  const long m = static_cast<long>(f.length);
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t l = 0; l + 2 * n <= L; ++l) {
      std::vector<long> src = shifted(p.shifts(l), static_cast<long>(n) * m);
      FreeModuleMap rhs = n == 1 ? diagonal_map(a, p.shifts(l), f) : negate(tower_sum(p, t, n, l, 1, n - 1, tw));
      if (l >= 1) {
        FreeModuleMap dl = p.d(l);
        for (Element& e : dl.entries) e = tw[n](e);
        rhs = add(a, rhs, negate(compose(a, t.c[n][l - 1], dl)));
      }
      t.c[n].push_back(homotopy_lift(p, l + 2 * n - 1, rhs, src));
    }
  return t;
}

}  // namespace

HomotopyTower build_homotopy_tower(const FreeComplex& p, const Element& f, const GradedAutomorphism& sigma) {
  if (p.side != Side::Right && p.side != Side::Left) throw InputError("unknown side");
  if (f.length == 0 || f.is_zero()) throw InputError("homotopy tower needs a nonzero element of positive degree");
  return build_tower(p, f, sigma, p.length());
}

FreeModuleMap tower_identity_sum(const FreeComplex& p, const HomotopyTower& t, std::size_t n, std::size_t l) {
  if (n == 0) throw InputError("tower identity sum needs n >= 1");
  std::vector<Twister> tw = twisters(p.algebra, t.tau, n);
  return tower_sum(p, t, n, l, 0, n, tw);
}

ShamashResult shamash(const FreeComplex& p, const Element& f, std::size_t L, std::size_t cap) {
  const Algebra& a = p.algebra;
  if (L == 0) throw InputError("resolution length must be positive");
  if (p.length() < L) throw InputError("the resolution over the ambient algebra is shorter than requested");
  if (f.is_zero() || f.length == 0) throw InputError("the element must be nonzero of positive degree");
  auto sigma = a.is_normal(f);
  if (!sigma) throw InputError("the element is not normal");
  const long w = a.presentation().weight();
  if (!a.is_regular_up_to(f, static_cast<std::size_t>(static_cast<long>(cap) / w)))
    throw InputError("the element is not regular up to the verification cap");

  HomotopyTower t = build_tower(p, f, *sigma, L);
  Algebra b = a.quotient(f);
  const long m = static_cast<long>(f.length);
  std::vector<Twister> tw = twisters(a, t.tau, L / 2);

  auto total_shifts = [&](std::size_t i) {
    std::vector<long> out;
    for (std::size_t k = 0; 2 * k <= i; ++k) {
      std::vector<long> s = shifted(p.shifts(i - 2 * k), static_cast<long>(k) * m);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  };

  FreeComplex out{b, p.side, {}};
  for (std::size_t i = 1; i <= L; ++i) {
    FreeModuleMap big(a, total_shifts(i - 1), total_shifts(i));
    std::size_t row0 = 0;
    for (std::size_t kr = 0; 2 * kr <= i - 1; ++kr) {
      std::size_t col0 = 0;
      const std::size_t nrows = p.shifts(i - 1 - 2 * kr).size();
      for (std::size_t kc = 0; 2 * kc <= i; ++kc) {
        const std::size_t ncols = p.shifts(i - 2 * kc).size();
        if (kr <= kc) {
          const FreeModuleMap* blk = tower_map(p, t, kc - kr, static_cast<long>(i - 2 * kc));
          if (blk)
            for (std::size_t r = 0; r < nrows; ++r)
              for (std::size_t c = 0; c < ncols; ++c) big.at(row0 + r, col0 + c) = tw[kr](blk->at(r, c));
        }
        col0 += ncols;
      }
      row0 += nrows;
    }
    out.maps.push_back(push_forward(a, b, big));
  }
  VerificationReport rep = verify_complex(out, cap);
  return ShamashResult{b, std::move(out), std::move(t), std::move(rep)};
}

std::string complex_to_json(const FreeComplex& c) {
  using nlohmann::json;
  const Algebra& a = c.algebra;
  json maps = json::array();
  for (const FreeModuleMap& m : c.maps) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(r, k).is_zero() ? "0" : a.to_string(m.at(r, k)));
      rows.push_back(std::move(row));
    }
    maps.push_back({{"target", m.target}, {"source", m.source}, {"entries", std::move(rows)}});
  }
  return json{{"side", side_name(c.side)},
              {"variables", a.presentation().names()},
              {"ranks", c.ranks()},
              {"maps", std::move(maps)}}
      .dump(2);
}

FreeComplex complex_from_json(const std::string& text, const Algebra& a) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
    FreeComplex out{a, j.at("side").get<std::string>() == "left" ? Side::Left : Side::Right, {}};
    if (j.at("variables").get<std::vector<std::string>>() != a.presentation().names())
      throw InputError("complex was written over different variables");
    for (const json& jm : j.at("maps")) {
      FreeModuleMap m(a, jm.at("target").get<std::vector<long>>(), jm.at("source").get<std::vector<long>>());
      const json& rows = jm.at("entries");
      if (rows.size() != m.rows()) throw InputError("complex JSON: row count mismatch");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != m.cols()) throw InputError("complex JSON: column count mismatch");
        for (std::size_t c = 0; c < m.cols(); ++c) {
          std::string s = rows[r][c].get<std::string>();
          if (s == "0") continue;
          Element e = a.parse(s);
          if (static_cast<long>(e.length) != m.entry_length(r, c))
            throw InputError("complex JSON: entry '" + s + "' has the wrong degree");
          m.at(r, c) = std::move(e);
        }
      }
      out.maps.push_back(std::move(m));
    }
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("complex JSON: ") + e.what());
  }
}

}  // namespace pointex
