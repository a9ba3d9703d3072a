#include "pointex/linear_forms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace pointex {

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  auto first = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (first == coords_.end()) throw InputError("projective point with all coordinates zero");
  Scalar inv = first->inverse();
  for (Scalar& s : coords_) s *= inv;
}

ProjPoint ProjPoint::parse(const std::string& text, const Field& field) {
  std::vector<Scalar> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty coordinate in point '" + text + "'");
    coords.push_back(Scalar::parse(item.substr(b, e - b + 1), field));
  }
  return ProjPoint(std::move(coords));
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].to_string();
  }
  return out + ")";
}

Ideal point_ideal(const ProjPoint& p) {
  std::size_t n = p.size();
  std::vector<CommPoly> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      CommPoly g = CommPoly::variable(n, j, p[i]) - CommPoly::variable(n, i, p[j]);
      if (!g.is_zero()) gens.push_back(g.normalized());
    }
  return Ideal(n, std::move(gens));
}

Ideal points_ideal(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw InputError("points_ideal: empty point set");
  Ideal acc = point_ideal(points.front());
  for (std::size_t k = 1; k < points.size(); ++k) acc = intersect(acc, point_ideal(points[k]));
  return acc;
}

LinearFormMatrix::LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols * nvars) {}

CommPoly LinearFormMatrix::entry(std::size_t r, std::size_t c) const {
  CommPoly p(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v)
    if (!coeff(r, c, v).is_zero()) p += CommPoly::variable(nvars_, v, coeff(r, c, v));
  return p;
}

LinearFormMatrix LinearFormMatrix::transpose() const {
  LinearFormMatrix t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t v = 0; v < nvars_; ++v) t.coeff(c, r, v) = coeff(r, c, v);
  return t;
}

Matrix LinearFormMatrix::eval_at(const ProjPoint& p) const { return eval_at(p.coords()); }

Matrix LinearFormMatrix::eval_at(const std::vector<Scalar>& coords) const {
  if (coords.size() != nvars_) throw InputError("point has wrong number of coordinates");
  Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      Scalar s;
      for (std::size_t v = 0; v < nvars_; ++v)
        if (!coeff(r, c, v).is_zero()) s += coeff(r, c, v) * coords[v];
      m(r, c) = s;
    }
  return m;
}

std::string LinearFormMatrix::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += entry(r, c).to_string(names);
    }
    out += "]\n";
  }
  return out;
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct MaskHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
  }
};

class MinorExpander {
 public:
  explicit MinorExpander(const LinearFormMatrix& m) : m_(m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) entries_.push_back(m.entry(r, c));
  }

  // determinant of the submatrix on row set `rows` and column set `cols`
  const CommPoly& det(std::uint64_t rows, std::uint64_t cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CommPoly acc(m_.nvars());
    if (rows == 0) {
      acc = CommPoly::constant(m_.nvars(), Scalar(1));
    } else {
      std::size_t r0 = static_cast<std::size_t>(__builtin_ctzll(rows));
      std::uint64_t rest = rows & (rows - 1);
      int sign = 1;
      for (std::uint64_t cs = cols; cs; cs &= cs - 1) {
        std::size_t c = static_cast<std::size_t>(__builtin_ctzll(cs));
        const CommPoly& e = entries_[r0 * m_.cols() + c];
        if (!e.is_zero()) {
          const CommPoly& sub = det(rest, cols & ~(1ull << c));
          if (!sub.is_zero()) {
            CommPoly term = e * sub;
            if (sign > 0) acc += term;
            else acc -= term;
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

 private:
  const LinearFormMatrix& m_;
  std::vector<CommPoly> entries_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, CommPoly, MaskHash> memo_;
};

void subsets(std::size_t n, std::size_t k, std::size_t start, std::uint64_t cur, std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) subsets(n, k - 1, i + 1, cur | (1ull << i), out);
}

}  // namespace

std::vector<CommPoly> minors(const LinearFormMatrix& m, std::size_t t) {
  if (t == 0) throw InputError("minor size must be at least 1");
  if (t > std::min(m.rows(), m.cols())) return {};
  if (m.rows() > 64 || m.cols() > 64) throw ResourceError("minors: matrix larger than 64 in some dimension");
  if (binom(m.rows(), t) > kMinorLimit || binom(m.cols(), t) > kMinorLimit ||
      binom(m.rows(), t) * binom(m.cols(), t) > kMinorLimit)
    throw ResourceError("minors: too many " + std::to_string(t) + "-minors of a " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
  std::vector<std::uint64_t> row_sets, col_sets;
  subsets(m.rows(), t, 0, 0, row_sets);
  subsets(m.cols(), t, 0, 0, col_sets);
  MinorExpander ex(m);
  auto names = default_names(m.nvars());
  std::map<std::string, CommPoly> unique;
  for (std::uint64_t rs : row_sets)
    for (std::uint64_t cs : col_sets) {
      const CommPoly& d = ex.det(rs, cs);
      if (d.is_zero()) continue;
      CommPoly n = d.normalized();
      unique.emplace(n.to_string(names), std::move(n));
    }
  std::vector<CommPoly> out;
  for (auto& [k, p] : unique) out.push_back(std::move(p));
  return out;
}

std::vector<CommPoly> span_basis(const std::vector<CommPoly>& polys) {
  if (polys.empty()) return {};
  std::size_t n = polys.front().nvars();
  // column index per monomial, largest monomial first
  std::vector<Monomial> monos;
  for (const CommPoly& p : polys)
    for (const auto& t : p.terms()) monos.push_back(t.mono);
  MonomialOrder order;
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, n) > 0; });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  auto col_of = [&](const Monomial& m) {
    auto it = std::lower_bound(monos.begin(), monos.end(), m,
                               [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, n) > 0; });
    return static_cast<std::size_t>(it - monos.begin());
  };
  // incremental echelon form with monic pivots
  std::vector<SparseRow> pivots(monos.size());
  std::vector<bool> used(monos.size(), false);
  for (const CommPoly& p : polys) {
    std::map<std::size_t, Scalar> row;
    for (const auto& t : p.terms()) row[col_of(t.mono)] = t.coeff;
    for (;;) {
      while (!row.empty() && row.begin()->second.is_zero()) row.erase(row.begin());
      if (row.empty() || !used[row.begin()->first]) break;
      std::size_t lead = row.begin()->first;
      Scalar f = row.begin()->second;
      for (const auto& [c, v] : pivots[lead]) {
        Scalar nv = row[c] - f * v;
        if (nv.is_zero()) row.erase(c);
        else row[c] = nv;
      }
    }
    if (row.empty()) continue;
    Scalar inv = row.begin()->second.inverse();
    SparseRow sr;
    for (auto& [c, v] : row) sr.emplace_back(c, v * inv);
    used[sr.front().first] = true;
    pivots[sr.front().first] = std::move(sr);
  }
  std::vector<CommPoly> out;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (!used[k]) continue;
    std::vector<CommPoly::Term> terms;
    for (const auto& [c, v] : pivots[k]) terms.push_back({monos[c], v});
    out.push_back(CommPoly::from_terms(n, std::move(terms)).normalized());
  }
  return out;
}

}  // namespace pointex
