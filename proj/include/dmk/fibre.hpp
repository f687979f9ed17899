#pragma once

#include "dmk/stdmodel.hpp"

namespace dmk {

/// D-transverse fibre product of standard models over R^p:
///   W = S_{V_X x V_Y, E_X + E_Y + R^p, (s o pi_X, t o pi_Y, g o pi_X - h o pi_Y)}.
/// e, f are the projections and eta witnesses g o e => h o f.
struct FibreData {
  StdModel X, Y;
  int p;
  std::vector<Poly> g, h;  // maps X -> R^p, Y -> R^p
  StdModel W;
  StdMor e, f;
  StdTwoMor eta;
};

FibreData fibre_product(const StdModel& X, const std::vector<Poly>& g,
                        const StdModel& Y, const std::vector<Poly>& h, int p);

/// Parity factor of the committed orientation convention:
///   sigma = (-1)^{(n_X + k_X)(k_Y + p)}.
/// Fixed so the commutativity and associativity sign laws hold once the
/// canonical block-permutation identifications are accounted for.
int orientation_sigma(int nX, int kX, int nY, int kY, int p);

int orient_fibre_product(int orientX, int orientY, int nX, int kX, int nY, int kY, int p);

/// Pointwise d-transversality of g: X -> Z, h: Y -> Z at a witness pair:
/// the stacked matrix [ghat^T; -hhat^T; (grad u)^T] has full column rank
/// k_Z. Trivially true when Z is a manifold (k_Z = 0).
struct DTransverseVerdict {
  bool transverse = true;
  bool vacuous = false;  // empty witness list
};

DTransverseVerdict d_transverse_at(const StdMor& g, const StdMor& h,
                                   const std::vector<std::pair<WitnessPoint, WitnessPoint>>& pts);

/// Manifold-target form: always true (obstruction space of R^p is zero);
/// validates that the pairs are genuine witnesses with g(v) = h(w).
DTransverseVerdict d_transverse_at(const StdModel& X, const std::vector<Poly>& g,
                                   const StdModel& Y, const std::vector<Poly>& h,
                                   const std::vector<std::pair<WitnessPoint, WitnessPoint>>& pts);

/// Pointwise rank-exactness of the cotangent sequence
///   (g o e)*(T*Z) -> e*(T*X) (+) f*(T*Y) -> T*W -> 0
/// at a witness pair (v, w), with cotangent spaces of the quotient rings.
bool cotangent_exact_at(const FibreData& fd, const WitnessPoint& v, const WitnessPoint& w);

/// Combine witnesses of X and Y into one of W (coordinates concatenated).
WitnessPoint combine_witness(const WitnessPoint& v, const WitnessPoint& w);

}  // namespace dmk
