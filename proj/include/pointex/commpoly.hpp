#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pointex/scalar.hpp"

namespace pointex {

/// Hard limit on the number of commutative variables (including any
/// auxiliary elimination variables).
inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t i);
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

enum class OrderKind { Lex, DegLex, DegRevLex, Elimination };

/// Monomial order on the first `nvars` exponents. Elimination compares the
/// total degree of the first `block` variables, then breaks ties by
/// degrevlex on all variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::size_t block = 0;

  static MonomialOrder parse(const std::string& name);
  std::string name() const;
  /// Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;
};

/// Commutative multivariate polynomial. Terms are kept in decreasing
/// degrevlex order with nonzero coefficients; the zero polynomial has none.
class CommPoly {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  explicit CommPoly(std::size_t nvars = 0);
  static CommPoly constant(std::size_t nvars, const Scalar& c);
  static CommPoly variable(std::size_t nvars, std::size_t index, const Scalar& coeff = Scalar(1));
  /// Builds from unsorted terms, combining duplicates and dropping zeros.
  static CommPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t total_degree() const;
  bool is_homogeneous() const;

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Divides by the content and makes the leading coefficient (under the
  /// given order) positive; over F_p makes it monic.
  CommPoly normalized(const MonomialOrder& order = {}) const;
  /// Re-embeds in `nvars` variables, sending variable i to mapping[i].
  CommPoly remap(std::size_t nvars, std::span<const std::size_t> mapping) const;

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& other);
  CommPoly& operator-=(const CommPoly& other);
  CommPoly& operator*=(const Scalar& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(CommPoly a, const Scalar& c) { return a *= c; }
  friend bool operator==(const CommPoly& a, const CommPoly& b);

  /// Canonical rendering: terms in decreasing `order`, `^` for powers and
  /// explicit `*`, e.g. "2*x^2*y - 1/3*z^3".
  std::string to_string(std::span<const std::string> names, const MonomialOrder& order = {}) const;
  static CommPoly parse(const std::string& text, std::span<const std::string> names,
                        const Field& field = {});

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Default names x1..xn.
std::vector<std::string> default_names(std::size_t n);

}  // namespace pointex
