#pragma once

#include <array>
#include <utility>
#include <vector>

#include "trident/descent.hpp"
#include "trident/triples.hpp"

namespace trident {

/// Parameters of the two-parameter family. Valid when u, v != 0,
/// u != 4v, v != 16u, v != +-2, v != +-2u.
struct UVParams {
  Rat u, v;
};

/// Throws MathError naming the violated condition.
void validate_uv(const UVParams& q);
bool uv_is_valid(const UVParams& q);

/// t1 from the doubled point, then t3 from t1 and t2 from t3.
TripleParams uv_to_t(const UVParams& q);

/// Closed-form (a, b, c) of the family, validated as a triple.
DiophTriple uv_to_triple(const UVParams& q);

/// Coefficients of y^2 = x^3 + A x^2 + B x.
std::pair<Rat, Rat> uv_model_coefficients(const UVParams& q);

struct UVFamilyCurve {
  UVParams q;
  Rat A, B;
  PointQ P, R, T1, T2, T3;

  CurveQ curve() const { return CurveQ::from_ab(A, B); }
  std::vector<PointQ> sections() const { return {P, R, T1, T2, T3}; }
};

/// Model and the five sections. Throws std::logic_error if a section does
/// not satisfy the model equation.
UVFamilyCurve uv_curve(const UVParams& q);

/// Relations between the family model and the induced curve of the triple.
/// Correspondences are compared up to the automorphism [-1].
struct UVCrossCheck {
  bool isomorphic = false;
  bool p_matches = false;       // P <-> [0, abc]
  bool two_r_matches = false;   // 2R <-> [1, rst]
  std::array<bool, 3> t_matches{};  // T_i <-> rank-jump point i
};

UVCrossCheck uv_cross_check(const UVParams& q);

/// Descent bound for the five sections.
IndependenceCertificate uv_certify(const UVParams& q);

/// The sixteen published parameters giving rank 11.
std::vector<UVParams> rank11_parameter_list();

}  // namespace trident
