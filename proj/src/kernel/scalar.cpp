#include "pointex/scalar.hpp"

#include <ostream>

namespace pointex {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string Field::to_string() const {
  return is_rational() ? "QQ" : std::to_string(characteristic);
}

Field Field::parse(const std::string& text) {
  if (text == "QQ" || text == "Q" || text == "0") return Field{};
  std::size_t used = 0;
  unsigned long p = 0;
  try {
    p = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw InputError("field must be QQ or a prime, got '" + text + "'");
  }
  if (used != text.size() || p > 0xFFFFFFFFul || !is_prime(static_cast<std::uint32_t>(p)))
    throw InputError("field must be QQ or a prime, got '" + text + "'");
  // keep products of residues inside 64 bits
  if (p >= (1ul << 31)) throw InputError("prime field characteristic must be below 2^31");
  return Field{static_cast<std::uint32_t>(p)};
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar Scalar::from_rational(const mpq_class& q, const Field& field) {
  Scalar s{mpq_class(q)};
  if (!field.is_rational()) s.adopt(field.characteristic);
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& field) {
  mpq_class q;
  std::string body = text;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  if (body.empty() || q.set_str(body, 10) != 0) throw InputError("invalid number '" + text + "'");
  if (q.get_den() == 0) throw InputError("division by zero in '" + text + "'");
  q.canonicalize();
  return from_rational(q, field);
}

std::uint64_t Scalar::reduce(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw InputError("denominator not invertible in F_" + std::to_string(p));
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return n * pow_mod(d, p - 2, p) % p;
}

void Scalar::adopt(std::uint32_t p) {
  if (modulus_ == p) return;
  if (modulus_ != 0) throw InputError("scalars from different prime fields mixed");
  residue_ = reduce(value_, p);
  modulus_ = p;
  value_ = 0;
}

std::uint32_t Scalar::unify(const Scalar& other) {
  if (other.modulus_ == modulus_) return modulus_;
  if (modulus_ == 0) {
    adopt(other.modulus_);
    return modulus_;
  }
  if (other.modulus_ != 0) throw InputError("scalars from different prime fields mixed");
  return modulus_;
}

int Scalar::sign() const {
  if (modulus_) return residue_ == 0 ? 0 : 1;
  return sgn(value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar r = *this;
  if (modulus_) {
    r.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  } else {
    r.value_ = 1 / value_;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_) {
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  } else {
    r.value_ = -value_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (std::uint32_t p = unify(other)) {
    std::uint64_t o = other.modulus_ ? other.residue_ : reduce(other.value_, p);
    residue_ = (residue_ + o) % p;
  } else {
    value_ += other.value_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (std::uint32_t p = unify(other)) {
    std::uint64_t o = other.modulus_ ? other.residue_ : reduce(other.value_, p);
    residue_ = (residue_ + p - o) % p;
  } else {
    value_ -= other.value_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (std::uint32_t p = unify(other)) {
    std::uint64_t o = other.modulus_ ? other.residue_ : reduce(other.value_, p);
    residue_ = residue_ * o % p;
  } else {
    value_ *= other.value_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw InputError("division by zero");
  if (std::uint32_t p = unify(other)) {
    std::uint64_t o = other.modulus_ ? other.residue_ : reduce(other.value_, p);
    residue_ = residue_ * pow_mod(o, p - 2, p) % p;
  } else {
    value_ /= other.value_;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.modulus_ ? a.residue_ == b.residue_ : a.value_ == b.value_;
  if (a.modulus_ && b.modulus_) return false;
  if (a.modulus_) return a.residue_ == Scalar::reduce(b.value_, a.modulus_);
  return b.residue_ == Scalar::reduce(a.value_, b.modulus_);
}

std::string Scalar::to_string() const {
  if (modulus_) return std::to_string(residue_);
  return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pointex
