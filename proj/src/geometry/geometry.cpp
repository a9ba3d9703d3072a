#include "pointex/geometry.hpp"

#include <random>

namespace pointex {

Resolutions resolve_both(const Algebra& a, std::size_t length) {
  return Resolutions{a, linear_resolution(a, Side::Right, length), linear_resolution(a, Side::Left, length),
                     std::nullopt, std::nullopt};
}

Resolutions shamash_both(const Algebra& a, const Element& f, std::size_t length, std::size_t cap) {
  ShamashResult right = shamash(linear_resolution(a, Side::Right, length), f, length, cap);
  FreeComplex pl = linear_resolution(a, Side::Left, length);
  Element fop = pl.algebra.reduce(a.lift(f).reversed());
  ShamashResult left = shamash(pl, fop, length, cap);
  return Resolutions{right.quotient, std::move(right.complex), std::move(left.complex), std::move(right.report),
                     std::move(left.report)};
}

namespace {

const FreeComplex& side_complex(const Resolutions& res, Side side) {
  return side == Side::Right ? res.right : res.left;
}

std::size_t eval_rank(const LinearFormMatrix& m, const ProjPoint& p) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rank(m.eval_at(p));
}

Ideal span_ideal(std::size_t n, const std::vector<CommPoly>& polys) { return Ideal(n, span_basis(polys)); }

}  // namespace

PointVarietyIdeal point_variety(const Resolutions& res, Side side) {
  const FreeComplex& c = side_complex(res, side);
  if (c.length() < 2) throw InputError("point variety needs the resolution up to homological degree 2");
  PointVarietyIdeal pv;
  pv.side = side;
  pv.n = res.algebra.n();
  pv.matrix = c.differential_forms(2);
  pv.r = c.d(2).cols();
  pv.minors = minors(pv.matrix, pv.n);
  pv.ideal = span_ideal(pv.n, pv.minors);
  return pv;
}

bool on_point_variety(const PointVarietyIdeal& pv, const ProjPoint& p) {
  if (p.size() != pv.n) throw InputError("point has the wrong number of coordinates");
  return eval_rank(pv.matrix, p) < pv.n;
}

SemiStandardReport is_semi_standard(const Resolutions& res, std::uint64_t seed, std::size_t samples) {
  SemiStandardReport rep;
  rep.right = point_variety(res, Side::Right);
  rep.left = point_variety(res, Side::Left);
  rep.semi_standard = variety_equal(rep.right.ideal, rep.left.ideal);
  if (rep.semi_standard) return rep;

  const std::size_t n = rep.right.n;
  auto separates = [&](const std::vector<Scalar>& v) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) return false;
    ProjPoint p(v);
    if (on_point_variety(rep.right, p) != on_point_variety(rep.left, p)) {
      rep.witness = p;
      return true;
    }
    return false;
  };
  std::vector<Scalar> v(n);
  std::vector<long> digits(n, -2);
  const Field field = res.algebra.field();
  while (true) {
    // only canonical representatives: first nonzero coordinate is 1
    std::size_t first = 0;
    while (first < n && digits[first] == 0) ++first;
    if (first < n && digits[first] == 1) {
      for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_rational(digits[i], field);
      if (separates(v)) return rep;
    }
    std::size_t k = n;
    while (k > 0 && digits[k - 1] == 2) digits[--k] = -2;
    if (k == 0) break;
    ++digits[k - 1];
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::from_rational(coord(rng), field);
    if (separates(v)) return rep;
  }
  return rep;
}

PointExactReport check_point_exact(const Resolutions& res, Side side, std::size_t max_degree) {
  const FreeComplex& c = side_complex(res, side);
  if (c.length() < max_degree + 1)
    throw InputError("point-exactness up to degree " + std::to_string(max_degree) +
                     " needs the resolution up to homological degree " + std::to_string(max_degree + 1));
  PointVarietyIdeal pv = point_variety(res, side);
  const std::vector<std::size_t> s = c.ranks();
  const std::vector<std::string>& names = res.algebra.presentation().names();

  PointExactReport rep;
  rep.side = side;
  rep.max_degree = max_degree;
  rep.verdict = true;
  for (std::size_t i = 1; i <= max_degree + 1; ++i) {
    DegreeEvidence ev;
    ev.degree = i;
    for (std::size_t j = 1; j <= i; ++j) ev.target_rank += (j % 2 ? 1 : -1) * static_cast<long>(s[i - j]);
    LinearFormMatrix m = c.differential_forms(i);
    if (ev.target_rank < 0) {
      ev.failed_minor = "negative target rank";
    } else {
      const std::size_t rho = static_cast<std::size_t>(ev.target_rank);
      ev.upper = true;
      for (const CommPoly& g : span_basis(minors(m, rho + 1)))
        if (!radical_member(g, pv.ideal)) {
          ev.upper = false;
          ev.failed_minor = g.to_string(names);
          break;
        }
      ev.lower = rho == 0 || projective_empty(pv.ideal + span_ideal(pv.n, minors(m, rho)));
    }
    if (!ev.holds()) rep.verdict = false;
    rep.degrees.push_back(std::move(ev));
  }
  return rep;
}

std::vector<Matrix> relation_matrices(const Presentation& p) {
  if (!p.is_quadratic()) throw InputError("the relation variety needs a quadratic presentation");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < p.relations().size(); ++k) out.push_back(p.relation_matrix(k));
  return out;
}

G1Report check_g1(const Resolutions& res, std::uint64_t seed) {
  G1Report rep;
  rep.semi = is_semi_standard(res, seed);
  rep.right_degree_one = check_point_exact(res, Side::Right, 1);
  rep.left_degree_one = check_point_exact(res, Side::Left, 1);
  const std::size_t n = res.algebra.n();
  rep.r_plus_one_at_least_n = rep.semi.right.r + 1 >= n;
  rep.holds = rep.semi.semi_standard && rep.right_degree_one.verdict && rep.left_degree_one.verdict;
  if (rep.holds) {
    GeometricPair pair;
    pair.e = rep.semi.right.ideal;
    pair.relations = relation_matrices(res.algebra.presentation());
    pair.n = n;
    pair.r = pair.relations.size();
    rep.pair = std::move(pair);
  }
  return rep;
}

namespace {

Scalar bilinear(const Matrix& a, const ProjPoint& p, const ProjPoint& q) {
  Scalar acc(0);
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v)
      if (!a(u, v).is_zero()) acc += p[u] * a(u, v) * q[v];
  return acc;
}

}  // namespace

bool vr_membership(const Algebra& a, const ProjPoint& p, const ProjPoint& q) {
  if (p.size() != a.n() || q.size() != a.n()) throw InputError("point has the wrong number of coordinates");
  for (const Matrix& m : relation_matrices(a.presentation()))
    if (!bilinear(m, p, q).is_zero()) return false;
  return true;
}

ProjPoint sigma_at(const GeometricPair& pair, const ProjPoint& p) {
  if (p.size() != pair.n) throw InputError("point has the wrong number of coordinates");
  for (const CommPoly& g : pair.e.generators())
    if (!g.evaluate(p.coords()).is_zero()) throw InputError("point " + p.to_string() + " is not on E");
  Matrix rows(pair.relations.size(), pair.n);
  for (std::size_t k = 0; k < pair.relations.size(); ++k)
    for (std::size_t v = 0; v < pair.n; ++v)
      for (std::size_t u = 0; u < pair.n; ++u) rows(k, v) += p[u] * pair.relations[k](u, v);
  Matrix ker = nullspace(rows);
  if (ker.cols() != 1)
    throw InvariantError("relation variety is not a graph at " + p.to_string() + ": fibre of dimension " +
                         std::to_string(ker.cols()));
  std::vector<Scalar> q;
  for (std::size_t v = 0; v < pair.n; ++v) q.push_back(ker(v, 0));
  return ProjPoint(q);
}

PointwiseReport pointwise_complex_exact(const Resolutions& res, const GeometricPair& pair, const ProjPoint& p,
                                        std::size_t length) {
  const FreeComplex& c = res.right;
  if (c.length() < length) throw InputError("the resolution is shorter than the requested length");
  PointwiseReport rep;
  rep.orbit.push_back(p);
  for (std::size_t i = 1; i < length; ++i) rep.orbit.push_back(sigma_at(pair, rep.orbit.back()));
  std::vector<Matrix> maps;
  for (std::size_t i = 1; i <= length; ++i) {
    LinearFormMatrix m = c.differential_forms(i);
    maps.push_back(m.rows() && m.cols() ? m.eval_at(rep.orbit[i - 1]) : Matrix(m.rows(), m.cols()));
    rep.ranks.push_back(maps.back().rows() && maps.back().cols() ? rank(maps.back()) : 0);
  }
  const std::vector<std::size_t> s = c.ranks();
  rep.exact = true;
  if (rep.ranks[0] != 1) {
    rep.exact = false;
    rep.reason = "first map is not onto the ground field";
    return rep;
  }
  for (std::size_t i = 1; i < length; ++i) {
    if (maps[i - 1].cols() && maps[i].cols() && !(maps[i - 1] * maps[i]).is_zero()) {
      rep.exact = false;
      rep.reason = "composite at position " + std::to_string(i) + " is nonzero";
      return rep;
    }
    if (rep.ranks[i - 1] + rep.ranks[i] != s[i]) {
      rep.exact = false;
      rep.reason = "homology at position " + std::to_string(i);
      return rep;
    }
  }
  return rep;
}

}  // namespace pointex
