#include "pointex/commpoly.hpp"

#include <algorithm>
#include <map>

#include "expr_parser.hpp"

namespace pointex {

Monomial Monomial::variable(std::size_t i) {
  Monomial m;
  m.exp[i] = 1;
  m.degree = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(exp[i], other.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
  m.degree = other.degree - degree;
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  m.degree = a.degree + b.degree;
  return m;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return {OrderKind::Lex, 0};
  if (name == "deglex") return {OrderKind::DegLex, 0};
  if (name == "degrevlex" || name == "grevlex") return {OrderKind::DegRevLex, 0};
  throw InputError("unknown monomial order '" + name + "' (lex, deglex, degrevlex)");
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Elimination: return "elim" + std::to_string(block);
  }
  return "?";
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  return 0;
}

int cmp_revlex_tail(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  return 0;
}

int cmp_degrevlex(const Monomial& a, const Monomial& b, std::size_t n) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  return cmp_revlex_tail(a, b, n);
}

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp_degrevlex(a, b, kMaxVars) > 0; }
};

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind) {
    case OrderKind::Lex: return cmp_lex(a, b, nvars);
    case OrderKind::DegLex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      return cmp_lex(a, b, nvars);
    case OrderKind::DegRevLex: return cmp_degrevlex(a, b, nvars);
    case OrderKind::Elimination: {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < block; ++i) {
        da += a.exp[i];
        db += b.exp[i];
      }
      if (da != db) return da < db ? -1 : 1;
      return cmp_degrevlex(a, b, nvars);
    }
  }
  return 0;
}

CommPoly::CommPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw ResourceError("too many variables (limit " + std::to_string(kMaxVars) + ")");
}

CommPoly CommPoly::constant(std::size_t nvars, const Scalar& c) {
  CommPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

CommPoly CommPoly::variable(std::size_t nvars, std::size_t index, const Scalar& coeff) {
  if (index >= nvars) throw InputError("variable index out of range");
  CommPoly p(nvars);
  if (!coeff.is_zero()) p.terms_.push_back({Monomial::variable(index), coeff});
  return p;
}

CommPoly CommPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Scalar, DegRevLexGreater> acc;
  for (Term& t : terms) {
    auto [it, inserted] = acc.emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  CommPoly p(nvars);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool CommPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }

std::uint32_t CommPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree; }

bool CommPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree == terms_.front().mono.degree; });
}

Scalar CommPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  Scalar sum;
  for (const Term& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint16_t e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

CommPoly CommPoly::normalized(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  const Term* lead = &terms_.front();
  for (const Term& t : terms_)
    if (order.compare(t.mono, lead->mono, nvars_) > 0) lead = &t;
  CommPoly out = *this;
  if (lead->coeff.modulus() != 0) {
    Scalar inv = lead->coeff.inverse();
    for (Term& t : out.terms_) t.coeff *= inv;
    return out;
  }
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (lead->coeff.sign() < 0) factor = -factor;
  Scalar f{factor};
  for (Term& t : out.terms_) t.coeff *= f;
  return out;
}

CommPoly CommPoly::remap(std::size_t nvars, std::span<const std::size_t> mapping) const {
  if (mapping.size() != nvars_) throw InputError("remap: mapping has wrong length");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    m.degree = t.mono.degree;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono.exp[i] && mapping[i] >= nvars) throw InputError("remap: target index out of range");
      if (t.mono.exp[i]) m.exp[mapping[i]] = static_cast<std::uint16_t>(m.exp[mapping[i]] + t.mono.exp[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_terms(nvars, std::move(terms));
}

CommPoly CommPoly::operator-() const {
  CommPoly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

void merge_add(std::vector<CommPoly::Term>& a, const std::vector<CommPoly::Term>& b, bool subtract) {
  std::vector<CommPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : cmp_degrevlex(a[i].mono, b[j].mono, kMaxVars);
    if (c > 0) {
      out.push_back(std::move(a[i++]));
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Scalar v = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!v.is_zero()) out.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  a.swap(out);
}

}  // namespace

CommPoly& CommPoly::operator+=(const CommPoly& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomials over different variable lists");
  merge_add(terms_, other.terms_, false);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
  if (other.nvars_ != nvars_) throw InputError("polynomials over different variable lists");
  merge_add(terms_, other.terms_, true);
  return *this;
}

CommPoly& CommPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomials over different variable lists");
  std::vector<CommPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) terms.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
  return CommPoly::from_terms(a.nvars_, std::move(terms));
}

bool operator==(const CommPoly& a, const CommPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string CommPoly::to_string(std::span<const std::string> names, const MonomialOrder& order) const {
  if (names.size() < nvars_) throw InputError("not enough variable names");
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  for (const Term& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
    return order.compare(a->mono, b->mono, nvars_) > 0;
  });
  std::string out;
  bool first = true;
  for (const Term* t : sorted) {
    Scalar c = t->coeff;
    bool negative = c.sign() < 0 && c.modulus() == 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t->mono.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t->mono.exp[i] > 1) mono += "^" + std::to_string(t->mono.exp[i]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else {
      if (!c.is_one()) out += c.to_string() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

struct CommRing {
  using Value = CommPoly;
  std::size_t nvars;
  Field fld;
  Field field() const { return fld; }
  Value one() const { return CommPoly::constant(nvars, Scalar::from_rational(1, fld)); }
  Value constant(const Scalar& s) const { return CommPoly::constant(nvars, s); }
  Value variable(std::size_t i) const { return CommPoly::variable(nvars, i, Scalar::from_rational(1, fld)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value negate(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
};

}  // namespace

CommPoly CommPoly::parse(const std::string& text, std::span<const std::string> names, const Field& field) {
  CommRing ring{names.size(), field};
  return detail::ExprParser<CommRing>(text, names, ring).parse();
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace pointex
