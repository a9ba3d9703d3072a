#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointex/resolutions.hpp"

namespace pointex {

/// Right and left resolutions of the trivial module over one algebra. The
/// left complex lives over the opposite algebra.
struct Resolutions {
  Algebra algebra;
  FreeComplex right;
  FreeComplex left;
  std::optional<VerificationReport> right_report;
  std::optional<VerificationReport> left_report;
};

/// Linear resolutions on both sides.
Resolutions resolve_both(const Algebra& a, std::size_t length);
/// Resolutions of A/(f) on both sides through the Shamash construction; the
/// left side uses the opposite algebra and the reversed element.
Resolutions shamash_both(const Algebra& a, const Element& f, std::size_t length, std::size_t cap);

struct PointVarietyIdeal {
  Side side = Side::Right;
  LinearFormMatrix matrix;       // d_2 (right) or h_2 (left)
  std::vector<CommPoly> minors;  // normalized, deduplicated n-minors
  Ideal ideal;                   // generated by a basis of their span
  std::size_t n = 0;
  std::size_t r = 0;             // number of relations = rank of P_2
};

PointVarietyIdeal point_variety(const Resolutions& res, Side side);
/// p lies on the variety iff the evaluated matrix has rank below n.
bool on_point_variety(const PointVarietyIdeal& pv, const ProjPoint& p);

struct SemiStandardReport {
  bool semi_standard = false;
  PointVarietyIdeal right;
  PointVarietyIdeal left;
  /// A small rational point on exactly one of the two varieties, if the
  /// search found one.
  std::optional<ProjPoint> witness;
};

/// Decides the equality of the two varieties exactly. The witness search
/// tries every point with coordinates in [-2, 2], then `samples` seeded
/// random points; it never changes the verdict.
SemiStandardReport is_semi_standard(const Resolutions& res, std::uint64_t seed = 0, std::size_t samples = 64);

struct DegreeEvidence {
  std::size_t degree = 0;
  long target_rank = 0;
  bool upper = false;  // every (target+1)-minor vanishes on the variety
  bool lower = false;  // no point of the variety has rank below target
  std::string failed_minor;
  bool holds() const { return upper && lower; }
};

struct PointExactReport {
  Side side = Side::Right;
  std::size_t max_degree = 0;
  std::vector<DegreeEvidence> degrees;  // degrees 1 .. max_degree + 1
  bool verdict = false;
};

/// Rank identity rank(d_i)_p = sum_{j=1}^{i} (-1)^{j+1} s_{i-j} for every p
/// on the side's point variety, i = 1 .. max_degree + 1, decided by radical
/// membership and projective emptiness.
PointExactReport check_point_exact(const Resolutions& res, Side side, std::size_t max_degree);

struct GeometricPair {
  Ideal e;                       // ideal of E
  std::vector<Matrix> relations; // f_k(p, q) = p^T a_k q
  std::size_t n = 0;
  std::size_t r = 0;
  bool semi_standard = true;
  bool point_exact_at_one = true;
};

struct G1Report {
  bool holds = false;
  SemiStandardReport semi;
  PointExactReport right_degree_one;
  PointExactReport left_degree_one;
  bool r_plus_one_at_least_n = false;
  std::optional<GeometricPair> pair;
};

/// Semi-standard and point-exact at degree 1 on both sides.
G1Report check_g1(const Resolutions& res, std::uint64_t seed = 0);

/// Relation matrices of a quadratic presentation.
std::vector<Matrix> relation_matrices(const Presentation& p);

/// True iff f_k(p, q) = 0 for every relation.
bool vr_membership(const Algebra& a, const ProjPoint& p, const ProjPoint& q);

/// The unique q with (p, q) on the relation variety. Throws InputError when
/// p is not on E and InvariantError when the solution is not unique.
ProjPoint sigma_at(const GeometricPair& pair, const ProjPoint& p);

struct PointwiseReport {
  bool exact = false;
  std::vector<ProjPoint> orbit;      // p, sigma(p), ...
  std::vector<std::size_t> ranks;    // rank of the i-th evaluated map, i = 1..L
  std::string reason;
};

/// The scalar complex with d_i evaluated at sigma^{i-1}(p), checked for
/// composites zero and rank-counting exactness at P_0 .. P_{L-1}.
PointwiseReport pointwise_complex_exact(const Resolutions& res, const GeometricPair& pair, const ProjPoint& p,
                                        std::size_t length);

}  // namespace pointex
