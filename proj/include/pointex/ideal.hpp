#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "pointex/commpoly.hpp"

namespace pointex {

/// Reduced Groebner basis of the ideal generated by `gens`. Elements are
/// monic under `order`, sorted by increasing leading monomial. The zero
/// ideal has an empty basis; the unit ideal has basis {1}.
std::vector<CommPoly> groebner(const std::vector<CommPoly>& gens, std::size_t nvars,
                               const MonomialOrder& order = {});

Monomial leading_monomial(const CommPoly& p, const MonomialOrder& order);

/// Fully reduced normal form of f with respect to a Groebner basis.
CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& basis, const MonomialOrder& order = {});

/// Ideal of a commutative polynomial ring with a lazily computed degrevlex
/// basis. Copies share the cache.
class Ideal {
 public:
  explicit Ideal(std::size_t nvars = 0, std::vector<CommPoly> gens = {});

  std::size_t nvars() const { return nvars_; }
  const std::vector<CommPoly>& generators() const { return gens_; }
  bool is_zero() const;
  bool is_homogeneous() const;

  const std::vector<CommPoly>& basis() const;
  bool contains(const CommPoly& f) const;
  bool is_unit() const;

  Ideal operator+(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<CommPoly> basis;
  };
  std::size_t nvars_;
  std::vector<CommPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// f in sqrt(I), by the Rabinowitsch trick with the auxiliary variable last.
bool radical_member(const CommPoly& f, const Ideal& ideal);
/// sqrt(I) == sqrt(J).
bool variety_equal(const Ideal& a, const Ideal& b);
/// True iff a homogeneous ideal has no projective zeros.
bool projective_empty(const Ideal& ideal);
/// Same decision through radical_member(x_j, I) for every variable.
bool projective_empty_by_radical(const Ideal& ideal);

/// I ∩ J by elimination of t from tI + (1 - t)J.
Ideal intersect(const Ideal& a, const Ideal& b);

}  // namespace pointex
