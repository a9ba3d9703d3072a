#include "pointex/algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "kernel/expr_parser.hpp"

namespace pointex {

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::word(const Word& w, const Scalar& c) {
  NCPoly p;
  if (!c.is_zero()) p.terms_.emplace(w, c);
  return p;
}

bool NCPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.size() == terms_.begin()->first.size(); });
}

std::size_t NCPoly::length() const {
  if (terms_.empty()) throw InputError("the zero element has no degree");
  if (!is_homogeneous()) throw InputError("element is not homogeneous");
  return terms_.begin()->first.size();
}

NCPoly NCPoly::reversed() const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(Word(w.rbegin(), w.rend()), c);
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += NCPoly::word(w, ca * cb);
    }
  return out;
}

namespace {

std::string render_word(const Word& w, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += names[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string NCPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar c = it->second;
    bool negative = c.sign() < 0 && c.modulus() == 0;
    if (negative) c = -c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string w = render_word(it->first, names);
    if (w.empty()) out += c.to_string();
    else out += c.is_one() ? w : c.to_string() + "*" + w;
  }
  return out;
}

namespace {

struct NCRing {
  using Value = NCPoly;
  Field fld;
  Field field() const { return fld; }
  Value one() const { return NCPoly::word({}, Scalar::from_rational(1, fld)); }
  Value constant(const Scalar& s) const { return NCPoly::word({}, s); }
  Value variable(std::size_t i) const {
    return NCPoly::word(Word{static_cast<std::uint8_t>(i)}, Scalar::from_rational(1, fld));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value negate(const Value& a) const { return a * Scalar(-1); }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

}  // namespace

NCPoly NCPoly::parse(const std::string& text, std::span<const std::string> names, const Field& field) {
  NCRing ring{field};
  return detail::ExprParser<NCRing>(text, names, ring).parse();
}

// ---------------------------------------------------------- Presentation

namespace {

// Canonical basis of the span of homogeneous polynomials of one length:
// reduced echelon form with the largest word leading, rows monic.
std::vector<NCPoly> canonical_span(const std::vector<NCPoly>& polys) {
  std::vector<std::pair<Word, NCPoly>> pivots;  // leading word -> row
  auto lead = [](const NCPoly& p) { return p.terms().rbegin()->first; };
  for (NCPoly p : polys) {
    bool changed = true;
    while (!p.is_zero() && changed) {
      changed = false;
      for (const auto& [w, row] : pivots) {
        auto it = p.terms().find(w);
        if (it != p.terms().end()) {
          p = p - row * it->second;
          changed = true;
        }
      }
    }
    if (p.is_zero()) continue;
    p *= p.terms().rbegin()->second.inverse();
    Word lw = lead(p);
    for (auto& [w, row] : pivots) {
      auto it = row.terms().find(lw);
      if (it != row.terms().end()) row = row - p * it->second;
    }
    pivots.emplace_back(lw, std::move(p));
  }
  std::sort(pivots.begin(), pivots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<NCPoly> out;
  for (auto& [w, row] : pivots) out.push_back(std::move(row));
  return out;
}

}  // namespace

Presentation::Presentation(Field field, std::vector<std::string> names, std::vector<NCPoly> relations,
                           unsigned weight)
    : field_(field), names_(std::move(names)), weight_(weight) {
  if (names_.empty()) throw InputError("a presentation needs at least one generator");
  if (names_.size() > 255) throw InputError("too many generators");
  if (weight_ == 0) throw InputError("generator weight must be positive");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InputError("duplicate generator name");
  std::map<std::size_t, std::vector<NCPoly>> by_length;
  for (NCPoly& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw InputError("relation is not homogeneous: " + r.to_string(names_));
    for (const auto& [w, c] : r.terms())
      for (std::uint8_t l : w)
        if (l >= names_.size()) throw InputError("relation uses an unknown generator");
    std::size_t len = r.length();
    if (len == 0) throw InputError("constant relations are not supported");
    by_length[len].push_back(std::move(r));
  }
  for (auto& [len, rs] : by_length)
    for (NCPoly& r : canonical_span(rs)) relations_.push_back(std::move(r));
}

Presentation Presentation::skew(Field field, std::vector<std::string> names, const Matrix& q) {
  std::size_t n = names.size();
  if (q.rows() != n || q.cols() != n) throw InputError("skew matrix must be n x n");
  std::vector<NCPoly> rels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!q(i, i).is_one()) throw InputError("skew matrix needs q_ii = 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q(i, j).is_zero() || q(j, i).is_zero()) throw InputError("skew matrix entries must be nonzero");
      if (!(q(i, j) * q(j, i)).is_one()) throw InputError("skew matrix needs q_ji = 1/q_ij");
      Word ji = {static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(i)};
      Word ij = {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
      rels.push_back(NCPoly::word(ji, Scalar::from_rational(1, field)) - NCPoly::word(ij, q(i, j)));
    }
  }
  return Presentation(field, std::move(names), std::move(rels));
}

bool Presentation::is_quadratic() const {
  return std::all_of(relations_.begin(), relations_.end(), [](const NCPoly& r) { return r.length() == 2; });
}

Matrix Presentation::relation_matrix(std::size_t k) const {
  if (k >= relations_.size() || relations_[k].length() != 2) throw InputError("relation is not quadratic");
  Matrix a(n(), n());
  for (const auto& [w, c] : relations_[k].terms()) a(w[0], w[1]) = c;
  return a;
}

Presentation Presentation::opposite() const {
  std::vector<NCPoly> rels;
  for (const NCPoly& r : relations_) rels.push_back(r.reversed());
  return Presentation(field_, names_, std::move(rels), weight_);
}

Presentation Presentation::with_relation(const NCPoly& extra) const {
  std::vector<NCPoly> rels = relations_;
  rels.push_back(extra);
  return Presentation(field_, names_, std::move(rels), weight_);
}

// -------------------------------------------------- automorphisms/elements

bool Element::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); });
}

GradedAutomorphism GradedAutomorphism::inverse() const {
  auto inv = pointex::inverse(matrix);
  if (!inv) throw InputError("automorphism matrix is not invertible");
  return {*inv};
}

GradedAutomorphism GradedAutomorphism::power(long k) const {
  GradedAutomorphism base = k < 0 ? inverse() : *this;
  GradedAutomorphism out = identity(matrix.rows());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

// ---------------------------------------------------------------- Algebra

using SparseVec = SparseRow;

struct Algebra::Component {
  std::vector<Word> basis;
  std::vector<std::size_t> parent;  // index of the prefix in the previous length
  std::vector<std::uint8_t> last;
  std::vector<SparseVec> right;     // [b * n + g]: basis_{len-1}[b] * x_g
  std::vector<SparseVec> left;      // [g * dim_{len-1} + b]: x_g * basis_{len-1}[b]
};

struct Algebra::State {
  Presentation pres;
  std::mutex mutex;
  std::deque<Component> comps;
};

namespace {

void axpy(SparseVec& row, const Scalar& c, const SparseVec& other) {
  SparseVec out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -(c * other[j].second));
      ++j;
    } else {
      Scalar v = row[i].second - c * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row.swap(out);
}

void add_into(std::vector<Scalar>& dense, const SparseVec& v, const Scalar& c) {
  for (const auto& [k, x] : v) dense[k] += c * x;
}

}  // namespace

Algebra::Algebra(Presentation p) : state_(std::make_shared<State>()) {
  state_->pres = std::move(p);
  Component c0;
  c0.basis.push_back({});
  c0.parent.push_back(0);
  c0.last.push_back(0);
  state_->comps.push_back(std::move(c0));
}

const Presentation& Algebra::presentation() const { return state_->pres; }

const Algebra::Component& Algebra::component(std::size_t len) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  auto& comps = state_->comps;
  const Presentation& pres = state_->pres;
  const std::size_t n = pres.n();
  while (comps.size() <= len) {
    std::size_t cur = comps.size();
    const Component& prev = comps[cur - 1];
    std::size_t dprev = prev.basis.size();
    std::size_t ncols = dprev * n;
    if (ncols > kMaxComponentDim * 4) throw ResourceError("graded component too large at degree " + std::to_string(cur));

    // right multiplication of a vector of A_{l} by a letter, l < cur
    auto rightmul = [&](const SparseVec& v, std::size_t l, std::uint8_t g) {
      std::vector<Scalar> dense(comps[l + 1].basis.size());
      for (const auto& [b, x] : v) add_into(dense, comps[l + 1].right[b * n + g], x);
      SparseVec out;
      for (std::size_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero()) out.emplace_back(k, std::move(dense[k]));
      return out;
    };

    // relation images u * rho in A_{cur-1} (x) V, columns keyed so that the
    // largest word has key 0
    auto key = [&](std::size_t col) { return ncols - 1 - col; };
    std::vector<SparseVec> pivot(ncols);
    std::vector<bool> has_pivot(ncols, false);
    for (const NCPoly& rho : pres.relations()) {
      std::size_t l = rho.length();
      if (l > cur) continue;
      const Component& base = comps[cur - l];
      for (std::size_t u = 0; u < base.basis.size(); ++u) {
        std::map<std::size_t, Scalar> acc;
        for (const auto& [w, c] : rho.terms()) {
          SparseVec v = {{u, Scalar(1)}};
          for (std::size_t k = 0; k + 1 < l; ++k) v = rightmul(v, cur - l + k, w[k]);
          for (const auto& [b, x] : v) acc[key(b * n + w[l - 1])] += c * x;
        }
        SparseVec row;
        for (auto& [k, x] : acc)
          if (!x.is_zero()) row.emplace_back(k, std::move(x));
        while (!row.empty() && has_pivot[row.front().first]) {
          Scalar c = row.front().second;
          axpy(row, c, pivot[row.front().first]);
        }
        if (row.empty()) continue;
        Scalar inv = row.front().second.inverse();
        for (auto& [k, x] : row) x *= inv;
        has_pivot[row.front().first] = true;
        pivot[row.front().first] = std::move(row);
      }
    }
    // back substitution, largest key first
    for (std::size_t k = ncols; k-- > 0;) {
      if (!has_pivot[k]) continue;
      SparseVec& row = pivot[k];
      for (std::size_t idx = 1; idx < row.size();) {
        std::size_t other = row[idx].first;
        if (has_pivot[other]) {
          Scalar c = row[idx].second;
          axpy(row, c, pivot[other]);
          idx = 1;
          while (idx < row.size() && !has_pivot[row[idx].first]) ++idx;
        } else {
          ++idx;
        }
      }
    }

    Component comp;
    std::vector<std::size_t> index_of(ncols, SIZE_MAX);
    for (std::size_t col = 0; col < ncols; ++col) {
      if (has_pivot[key(col)]) continue;
      index_of[col] = comp.basis.size();
      Word w = prev.basis[col / n];
      w.push_back(static_cast<std::uint8_t>(col % n));
      comp.basis.push_back(std::move(w));
      comp.parent.push_back(col / n);
      comp.last.push_back(static_cast<std::uint8_t>(col % n));
    }
    if (comp.basis.size() > kMaxComponentDim)
      throw ResourceError("graded component too large at degree " + std::to_string(cur));
    comp.right.resize(ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
      if (index_of[col] != SIZE_MAX) {
        comp.right[col] = {{index_of[col], Scalar(1)}};
        continue;
      }
      SparseVec v;
      for (std::size_t t = 1; t < pivot[key(col)].size(); ++t) {
        const auto& [k, x] = pivot[key(col)][t];
        v.emplace_back(index_of[ncols - 1 - k], -x);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      comp.right[col] = std::move(v);
    }
    comps.push_back(std::move(comp));
    Component& done = comps.back();
    // left table: x_g * (v' h) = (x_g * v') * h
    done.left.resize(n * dprev);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t b = 0; b < dprev; ++b) {
        if (cur == 1) {
          done.left[g * dprev + b] = done.right[g];
        } else {
          const Component& pc = comps[cur - 1];
          const SparseVec& gv = pc.left[g * comps[cur - 2].basis.size() + pc.parent[b]];
          done.left[g * dprev + b] = rightmul(gv, cur - 1, pc.last[b]);
        }
      }
  }
  return comps[len];
}

std::size_t Algebra::dim(std::size_t len) const { return component(len).basis.size(); }

const std::vector<Word>& Algebra::basis(std::size_t len) const { return component(len).basis; }

Element Algebra::zero(std::size_t len) const { return Element{len, std::vector<Scalar>(dim(len))}; }

Element Algebra::one() const { return Element{0, {Scalar::from_rational(1, field())}}; }

Element Algebra::generator(std::size_t i) const {
  if (i >= n()) throw InputError("generator index out of range");
  return reduce(NCPoly::word({static_cast<std::uint8_t>(i)}, Scalar::from_rational(1, field())));
}

Element Algebra::times_letter(const Element& a, std::size_t letter) const {
  const Component& next = component(a.length + 1);
  Element out = zero(a.length + 1);
  for (std::size_t b = 0; b < a.coords.size(); ++b)
    if (!a.coords[b].is_zero()) add_into(out.coords, next.right[b * n() + letter], a.coords[b]);
  return out;
}

Element Algebra::reduce(const NCPoly& p) const {
  std::size_t len = p.length();
  Element out = zero(len);
  for (const auto& [w, c] : p.terms()) {
    Element e = one();
    for (std::uint8_t g : w) e = times_letter(e, g);
    for (std::size_t k = 0; k < e.coords.size(); ++k)
      if (!e.coords[k].is_zero()) out.coords[k] += c * e.coords[k];
  }
  return out;
}

Element Algebra::reduce_from(const Algebra& other, const Element& a) const {
  if (a.is_zero()) return zero(a.length);
  return reduce(other.lift(a));
}

Element Algebra::parse(const std::string& text) const {
  NCPoly p = NCPoly::parse(text, presentation().names(), field());
  if (p.is_zero()) throw InputError("element '" + text + "' is zero");
  return reduce(p);
}

NCPoly Algebra::lift(const Element& a) const {
  const auto& words = basis(a.length);
  NCPoly out;
  for (std::size_t k = 0; k < words.size(); ++k) out += NCPoly::word(words[k], a.coords[k]);
  return out;
}

std::string Algebra::to_string(const Element& a) const { return lift(a).to_string(presentation().names()); }

Element Algebra::add(const Element& a, const Element& b) const {
  if (a.length != b.length) throw InputError("adding elements of different degrees");
  Element out = a;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += b.coords[k];
  return out;
}

Element Algebra::scale(const Element& a, const Scalar& c) const {
  Element out = a;
  for (Scalar& x : out.coords) x *= c;
  return out;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (a.coords.size() != dim(a.length) || b.coords.size() != dim(b.length))
    throw InputError("element does not belong to this algebra");
  std::size_t len = a.length + b.length;
  Element out = zero(len);
  const auto& words = basis(a.length);
  for (std::size_t u = 0; u < words.size(); ++u) {
    if (a.coords[u].is_zero()) continue;
    std::vector<Scalar> cur = b.coords;
    std::size_t l = b.length;
    for (auto it = words[u].rbegin(); it != words[u].rend(); ++it) {
      const Component& next = component(l + 1);
      std::vector<Scalar> nxt(next.basis.size());
      std::size_t d = cur.size();
      for (std::size_t k = 0; k < d; ++k)
        if (!cur[k].is_zero()) add_into(nxt, next.left[*it * d + k], cur[k]);
      cur.swap(nxt);
      ++l;
    }
    for (std::size_t k = 0; k < cur.size(); ++k)
      if (!cur[k].is_zero()) out.coords[k] += a.coords[u] * cur[k];
  }
  return out;
}

Matrix Algebra::left_mult_matrix(const Element& a, std::size_t len) const {
  Matrix m(dim(len + a.length), dim(len));
  for (std::size_t v = 0; v < m.cols(); ++v) {
    Element e = zero(len);
    e.coords[v] = Scalar(1);
    Element p = multiply(a, e);
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, v) = p.coords[r];
  }
  return m;
}

Matrix Algebra::right_mult_matrix(const Element& a, std::size_t len) const {
  Matrix m(dim(len + a.length), dim(len));
  for (std::size_t v = 0; v < m.cols(); ++v) {
    Element e = zero(len);
    e.coords[v] = Scalar(1);
    Element p = multiply(e, a);
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, v) = p.coords[r];
  }
  return m;
}

Matrix Algebra::automorphism_matrix(const GradedAutomorphism& s, std::size_t len) const {
  if (s.matrix.rows() != n() || s.matrix.cols() != n()) throw InputError("automorphism has the wrong size");
  std::vector<Element> images = {one()};
  for (std::size_t l = 1; l <= len; ++l) {
    const Component& comp = component(l);
    std::vector<Element> next;
    for (std::size_t b = 0; b < comp.basis.size(); ++b) {
      const Element& base = images[comp.parent[b]];
      Element img = zero(l);
      for (std::size_t i = 0; i < n(); ++i) {
        const Scalar& c = s.matrix(i, comp.last[b]);
        if (c.is_zero()) continue;
        Element t = times_letter(base, i);
        for (std::size_t k = 0; k < t.coords.size(); ++k) img.coords[k] += c * t.coords[k];
      }
      next.push_back(std::move(img));
    }
    images.swap(next);
  }
  Matrix m(dim(len), dim(len));
  for (std::size_t b = 0; b < images.size(); ++b)
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, b) = images[b].coords[r];
  return m;
}

Element Algebra::apply(const GradedAutomorphism& s, const Element& a) const {
  Matrix m = automorphism_matrix(s, a.length);
  Element out = zero(a.length);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!a.coords[c].is_zero() && !m(r, c).is_zero()) out.coords[r] += m(r, c) * a.coords[c];
  return out;
}

bool Algebra::preserves_relations(const GradedAutomorphism& s) const {
  std::vector<Element> images;
  for (std::size_t j = 0; j < n(); ++j) {
    Element e = zero(1);
    for (std::size_t i = 0; i < n(); ++i)
      if (!s.matrix(i, j).is_zero()) e = add(e, scale(generator(i), s.matrix(i, j)));
    images.push_back(std::move(e));
  }
  for (const NCPoly& rho : presentation().relations()) {
    Element acc = zero(rho.length());
    for (const auto& [w, c] : rho.terms()) {
      Element e = one();
      for (std::uint8_t g : w) e = multiply(e, images[g]);
      acc = add(acc, scale(e, c));
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<GradedAutomorphism> Algebra::is_normal(const Element& f) const {
  if (f.is_zero()) throw InputError("is_normal: element is zero");
  if (f.length == 0) return GradedAutomorphism::identity(n());
  std::size_t out_dim = dim(f.length + 1);
  Matrix cols(out_dim, n());
  for (std::size_t i = 0; i < n(); ++i) {
    Element p = multiply(generator(i), f);
    for (std::size_t r = 0; r < out_dim; ++r) cols(r, i) = p.coords[r];
  }
  Matrix rhs(out_dim, n());
  for (std::size_t j = 0; j < n(); ++j) {
    Element p = times_letter(f, j);
    for (std::size_t r = 0; r < out_dim; ++r) rhs(r, j) = p.coords[r];
  }
  auto sol = solve(cols, rhs);
  if (!sol) return std::nullopt;
  GradedAutomorphism s{*sol};
  if (rank(s.matrix) != n()) return std::nullopt;
  if (!preserves_relations(s)) return std::nullopt;
  return s;
}

bool Algebra::is_regular_up_to(const Element& f, std::size_t d_max) const {
  if (f.is_zero()) return false;
  for (std::size_t i = 0; i <= d_max; ++i) {
    if (rank(left_mult_matrix(f, i)) != dim(i)) return false;
    if (rank(right_mult_matrix(f, i)) != dim(i)) return false;
  }
  return true;
}

Algebra Algebra::opposite() const { return Algebra(presentation().opposite()); }

Algebra Algebra::quotient(const Element& f) const {
  if (f.is_zero()) throw InputError("quotient: the element is zero in the algebra");
  if (f.length == 0) throw InputError("quotient: the element must have positive degree");
  return Algebra(presentation().with_relation(lift(f)));
}

}  // namespace pointex
