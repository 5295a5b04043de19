#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trident/curve.hpp"

namespace trident {

/// Classes of (x - e1, x - e2) in (Q*/Q*^2)^2.
struct DescentImage {
  SquareClass first, second;
  bool is_identity() const { return first.is_identity() && second.is_identity(); }
  friend bool operator==(const DescentImage&, const DescentImage&) = default;
};

/// Basis refined from every numerator and denominator of x - e_i over the
/// given points and of the root differences e_i - e_j.
CoprimeBasis descent_basis(const SplitCurve& S, const std::vector<PointQ>& points);

/// The 2-descent map. Throws MathError for off-curve points and
/// IncompleteBasis when the basis does not cover the point.
DescentImage descent_image(const SplitCurve& S, const PointQ& P, const CoprimeBasis& basis);

/// Descent image flattened to an F2 row: [sign1, parities1, sign2, parities2].
std::vector<bool> image_row(const DescentImage& img);

/// F2 rank of a set of equal-length rows.
int f2_rank(const std::vector<std::vector<bool>>& rows);

/// Q with 2Q = P on S, or nullopt when P is not in 2E(Q).
std::optional<PointQ> halve(const SplitCurve& S, const PointQ& P);

/// One 2-saturation step: the sum of the working points in `combo` plus a
/// torsion point equals 2 * half, and half replaced working point
/// `replaced`. The rank of the span does not change.
struct Halving {
  std::vector<int> combo;
  PointQ torsion;
  PointQ sum;
  PointQ half;
  int replaced = -1;
};

/// Proof data for "these points are independent modulo torsion".
struct IndependenceCertificate {
  std::string curve_id;
  SplitCurve split;
  std::vector<PointQ> input_points;  // on split.curve(), as given
  std::vector<Halving> halvings;
  std::vector<PointQ> points;  // working points after the halvings
  std::vector<PointQ> torsion;
  std::vector<Int> basis;
  std::vector<std::vector<bool>> rows;
  std::vector<std::vector<bool>> torsion_rows;
  int torsion_rank = 0;
  int bound = 0;
  /// When bound < points.size(): indices of a combination whose image lies
  /// in the torsion image span, and whether the plain sum is torsion.
  std::vector<int> dependency;
  std::optional<bool> dependency_is_torsion;
};

/// Certificate for points already on the split curve S. When the F2 rank
/// falls short, a dependent sum is halved and the working set updated, up
/// to a fixed number of rounds.
IndependenceCertificate independence_bound(const SplitCurve& S, const std::vector<PointQ>& points,
                                           const std::string& curve_id = "");

/// Maps E and the points to a split model first; E needs full rational
/// 2-torsion.
IndependenceCertificate independence_bound(const CurveQ& E, const std::vector<PointQ>& points,
                                           const std::string& curve_id = "");

/// Single-threaded reference with identical output.
IndependenceCertificate independence_bound_serial(const SplitCurve& S, const std::vector<PointQ>& points,
                                                  const std::string& curve_id = "");

/// Re-derives the F2 algebra (not the images) and checks the stated bound.
bool verify_certificate_algebra(const IndependenceCertificate& cert);
/// Replays the halvings from input_points exactly and checks that they end
/// at points.
bool verify_halvings(const IndependenceCertificate& cert);

/// h(x(2^n P)) / 4^n with h the log naive height; nullopt when a torsion
/// point shows up. Heuristic only.
std::optional<double> canonical_height(const CurveQ& E, const PointQ& P, int n = 4);

/// Determinant of the pairing matrix built from canonical_height by
/// polarization. Throws MathError if a point turns out to be torsion.
double regulator_heuristic(const CurveQ& E, const std::vector<PointQ>& points, int n = 4);

/// Naive logarithmic height of a rational.
double log_height(const Rat& q);

}  // namespace trident
