#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointex/algebra.hpp"
#include "pointex/linear_forms.hpp"

namespace pointex {

/// Map between graded free right modules, given by a matrix acting on
/// column vectors. Shifts are generator degrees in word-length units; entry
/// (r, c) lies in A_{source[c] - target[r]} and is zero when that is negative.
struct FreeModuleMap {
  std::vector<long> target;
  std::vector<long> source;
  std::vector<Element> entries;  // row-major

  FreeModuleMap() = default;
  FreeModuleMap(const Algebra& a, std::vector<long> target, std::vector<long> source);

  std::size_t rows() const { return target.size(); }
  std::size_t cols() const { return source.size(); }
  long entry_length(std::size_t r, std::size_t c) const { return source[c] - target[r]; }
  Element& at(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }

  bool is_zero() const;
  /// True iff no nonzero entry has degree 0.
  bool has_scalar_entry() const;
  /// Entries as linear forms; all nonzero entries must have length 1.
  LinearFormMatrix linear_forms() const;
  friend bool operator==(const FreeModuleMap&, const FreeModuleMap&) = default;
};

/// f o g. The source shifts of f may differ from the target shifts of g by
/// a constant; the result keeps the target of f.
FreeModuleMap compose(const Algebra& a, const FreeModuleMap& f, const FreeModuleMap& g);
FreeModuleMap add(const Algebra& a, const FreeModuleMap& f, const FreeModuleMap& g);
FreeModuleMap negate(const FreeModuleMap& f);
/// Entrywise application of an automorphism.
FreeModuleMap twist(const Algebra& a, const FreeModuleMap& f, const GradedAutomorphism& s);
/// Pushes entries into another algebra (a quotient, or an extension by a new
/// variable) through normal-word lifts.
FreeModuleMap push_forward(const Algebra& from, const Algebra& to, const FreeModuleMap& f);
/// Diagonal map with every diagonal entry equal to `entry`.
FreeModuleMap diagonal_map(const Algebra& a, const std::vector<long>& shifts, const Element& entry);

enum class Side { Right, Left };
std::string side_name(Side s);

/// Complex of free modules P_L -> ... -> P_0 over `algebra`. maps[i-1] is
/// d_i : P_i -> P_{i-1}. A left complex resolves the left trivial module of
/// the opposite of `algebra`: it is stored as a right complex over the
/// opposite algebra, and its left-module matrices are the transposes.
struct FreeComplex {
  Algebra algebra;
  Side side = Side::Right;
  std::vector<FreeModuleMap> maps;

  std::size_t length() const { return maps.size(); }
  std::vector<std::size_t> ranks() const;
  const FreeModuleMap& d(std::size_t i) const { return maps.at(i - 1); }
  /// Generator degrees of P_i.
  std::vector<long> shifts(std::size_t i) const;
  /// d_i as a matrix of linear forms in left-module orientation for the
  /// left side (h_i = transpose).
  LinearFormMatrix differential_forms(std::size_t i) const;
};

struct HomologyCheck {
  std::size_t index;   // homological index
  std::size_t degree;  // internal degree
  std::size_t kernel;
  std::size_t image;
  bool exact() const { return kernel == image; }
};

struct VerificationReport {
  std::size_t cap = 0;
  bool composites_zero = true;
  std::vector<std::size_t> nonzero_composites;  // i with d_i d_{i+1} != 0
  bool exact = true;
  std::vector<HomologyCheck> checks;
  bool minimal = true;
  std::vector<std::size_t> scalar_entries;  // i with a degree-0 entry in d_i
};

/// Composite-zero, homology and minimality checks in internal degrees <= cap.
VerificationReport verify_complex(const FreeComplex& c, std::size_t internal_degree_cap);

/// Raised by linear_resolution when the kernel of some d_i needs a
/// generator beyond the linear degree.
class NotKoszulError : public InputError {
 public:
  NotKoszulError(std::size_t index, const std::string& what) : InputError(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Minimal linear resolution of the trivial module up to homological
/// degree `length`, verified exact in internal degrees <= length + 1.
FreeComplex linear_resolution(const Algebra& a, Side side, std::size_t length);

/// Mapping cone extension of a resolution over a skew polynomial algebra in
/// n variables by a new variable with q_{i,n+1} = q[i].
struct ConeExtension {
  FreeComplex complex;
  std::vector<std::vector<Scalar>> phi;  // phi_i = x_{n+1} * diag(phi[i])
};
ConeExtension cone_extension(const FreeComplex& p, const std::vector<Scalar>& q, const std::string& name = "");

/// Iterated cone extensions starting from k[x_1].
FreeComplex canonical_skew_resolution(const Matrix& q, std::size_t length,
                                      const std::vector<std::string>& names = {});
/// Same, keeping the diagonal data of every step.
std::vector<ConeExtension> canonical_skew_steps(const Matrix& q, std::size_t length,
                                                const std::vector<std::string>& names = {});

/// Invertible scalar matrices phi_i with d'_i phi_i = phi_{i-1} d_i and
/// phi_0 = 1, if they exist.
std::optional<std::vector<Matrix>> scalar_chain_isomorphism(const FreeComplex& from, const FreeComplex& to);

/// Homotopies c^n_l : P_l(-n|f|) -> P_{l+2n-1} for a regular normal f.
/// c[0][l] is d_l (c[0][0] unused). c[n][l] is defined for l + 2n <= L.
struct HomotopyTower {
  Element f;
  GradedAutomorphism sigma;
  GradedAutomorphism tau;
  std::vector<std::vector<FreeModuleMap>> c;

  std::size_t top() const { return c.size() - 1; }
  bool has(std::size_t n, std::size_t l) const { return n < c.size() && l < c[n].size(); }
};

/// Solves d_{l+1+shift} X = rhs for X with entries of the forced degree,
/// choosing the reduced-echelon particular solution (free variables 0).
/// Throws InvariantError when the system is inconsistent.
FreeModuleMap homotopy_lift(const FreeComplex& p, std::size_t target_index, const FreeModuleMap& rhs,
                            const std::vector<long>& source_shifts);

HomotopyTower build_homotopy_tower(const FreeComplex& p, const Element& f, const GradedAutomorphism& sigma);

/// sum_{0<=i<=n} c^i_{l+2(n-i)-1} (tau^i . c^{n-i}_l); equals f I for n = 1
/// and 0 for n >= 2.
FreeModuleMap tower_identity_sum(const FreeComplex& p, const HomotopyTower& t, std::size_t n, std::size_t l);

struct ShamashResult {
  Algebra quotient;
  FreeComplex complex;
  HomotopyTower tower;
  VerificationReport report;
};

/// Resolution of the trivial module over A/(f) assembled from a minimal
/// resolution P over A (length >= L) and the homotopy tower of f.
ShamashResult shamash(const FreeComplex& p, const Element& f, std::size_t length, std::size_t cap);

std::string complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const std::string& text, const Algebra& a);

}  // namespace pointex
