#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pointex/linalg.hpp"
#include "pointex/scalar.hpp"

namespace pointex {

/// Word in the generators, letters are generator indices.
using Word = std::vector<std::uint8_t>;

/// Element of the free algebra k<x_1..x_n>.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly word(const Word& w, const Scalar& c = Scalar(1));
  static NCPoly parse(const std::string& text, std::span<const std::string> names, const Field& field = {});

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Word length of a nonzero homogeneous element.
  std::size_t length() const;
  NCPoly reversed() const;
  std::string to_string(std::span<const std::string> names) const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a += b * Scalar(-1); }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<Word, Scalar> terms_;
};

/// Homogeneous presentation T(V)/(relations). All generators carry the same
/// internal degree `weight`. Relations are stored as a canonical basis of
/// their span in each word length: monic, leading word (the lexicographically
/// largest, x1 < x2 < ...) eliminated from the others.
class Presentation {
 public:
  Presentation() = default;
  Presentation(Field field, std::vector<std::string> names, std::vector<NCPoly> relations, unsigned weight = 1);
  /// Skew polynomial algebra x_j x_i - q_ij x_i x_j (i < j).
  static Presentation skew(Field field, std::vector<std::string> names, const Matrix& q);

  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t n() const { return names_.size(); }
  unsigned weight() const { return weight_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  bool is_quadratic() const;
  /// Coefficient matrix a with relation k = sum a_uv x_u x_v (quadratic only).
  Matrix relation_matrix(std::size_t k) const;

  Presentation opposite() const;
  Presentation with_relation(const NCPoly& extra) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<NCPoly> relations_;
  unsigned weight_ = 1;
};

/// Homogeneous element of A_len, in coordinates of the normal-word basis.
struct Element {
  std::size_t length = 0;
  std::vector<Scalar> coords;

  bool is_zero() const;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Linear automorphism of V given by its matrix: column j is the image of
/// x_j in the basis x_1..x_n.
struct GradedAutomorphism {
  Matrix matrix;

  static GradedAutomorphism identity(std::size_t n) { return {Matrix::identity(n)}; }
  GradedAutomorphism inverse() const;
  GradedAutomorphism power(long k) const;
  friend GradedAutomorphism operator*(const GradedAutomorphism& a, const GradedAutomorphism& b) {
    return {a.matrix * b.matrix};
  }
  friend bool operator==(const GradedAutomorphism&, const GradedAutomorphism&) = default;
};

/// Hard cap on the dimension of a single graded component.
inline constexpr std::size_t kMaxComponentDim = 200'000;

/// The algebra of a presentation with memoized graded components. Copies
/// share the component cache; the cache is safe to fill from several
/// threads.
class Algebra {
 public:
  explicit Algebra(Presentation p);

  const Presentation& presentation() const;
  std::size_t n() const { return presentation().n(); }
  const Field& field() const { return presentation().field(); }

  std::size_t dim(std::size_t len) const;
  /// Normal words of length len, increasing.
  const std::vector<Word>& basis(std::size_t len) const;

  Element zero(std::size_t len) const;
  Element one() const;
  Element generator(std::size_t i) const;
  /// Normal form of a homogeneous free-algebra element.
  Element reduce(const NCPoly& p) const;
  /// Normal form of an element written in another algebra's normal words
  /// (used to push elements of A into a quotient of A).
  Element reduce_from(const Algebra& other, const Element& a) const;
  Element parse(const std::string& text) const;
  /// The section representative: a combination of normal words.
  NCPoly lift(const Element& a) const;
  std::string to_string(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Scalar& c) const;
  Element multiply(const Element& a, const Element& b) const;
  /// Right multiplication by a generator.
  Element times_letter(const Element& a, std::size_t letter) const;
  /// Matrix of A_len -> A_{len+|a|}, x -> a x (left) or x a (right).
  Matrix left_mult_matrix(const Element& a, std::size_t len) const;
  Matrix right_mult_matrix(const Element& a, std::size_t len) const;

  /// Matrix of the induced map on A_len.
  Matrix automorphism_matrix(const GradedAutomorphism& s, std::size_t len) const;
  Element apply(const GradedAutomorphism& s, const Element& a) const;
  /// True iff s sends every relation into the ideal.
  bool preserves_relations(const GradedAutomorphism& s) const;

  /// Normalizing automorphism s with f x = s(x) f, if one exists and is an
  /// invertible algebra automorphism.
  std::optional<GradedAutomorphism> is_normal(const Element& f) const;
  /// Left and right multiplication by f injective on A_i, i <= d_max.
  bool is_regular_up_to(const Element& f, std::size_t d_max) const;

  Algebra opposite() const;
  /// Presentation of A/(f) with the section lift of f adjoined.
  Algebra quotient(const Element& f) const;

  struct Component;

 private:
  const Component& component(std::size_t len) const;
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace pointex
