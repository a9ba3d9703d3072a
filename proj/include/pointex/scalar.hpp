#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pointex {

/// Raised for malformed input and violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (a bug or a false
/// mathematical assumption upstream).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground field: characteristic 0 means the rationals, otherwise F_p.
struct Field {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  std::string to_string() const;
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element. Rationals are stored as reduced GMP fractions,
/// F_p elements as residues in [0, p). A scalar created without a field
/// (e.g. from an integer literal) adopts the field of the other operand.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  static Scalar from_rational(const mpq_class& q, const Field& field);
  static Scalar parse(const std::string& text, const Field& field = {});

  bool is_zero() const { return modulus_ ? residue_ == 0 : sgn(value_) == 0; }
  bool is_one() const { return modulus_ ? residue_ == 1 : value_ == 1; }
  std::uint32_t modulus() const { return modulus_; }
  Field field() const { return Field{modulus_}; }

  /// Rational value; only meaningful for characteristic 0.
  const mpq_class& rational() const { return value_; }
  /// Sign used for normalization: residues count as positive when nonzero.
  int sign() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  static std::uint64_t reduce(const mpq_class& q, std::uint32_t p);
  void adopt(std::uint32_t p);
  std::uint32_t unify(const Scalar& other);

  mpq_class value_{0};
  std::uint64_t residue_ = 0;
  std::uint32_t modulus_ = 0;
};

}  // namespace pointex
