#pragma once

#include "dmk/cinf.hpp"
#include "dmk/witness.hpp"

namespace dmk {

/// Two-term complex phi: E1 -> E2 of free modules over a ring presentation;
/// a virtual vector bundle of rank r2 - r1.
struct VComplex {
  FgRing ring;
  int r1 = 0;
  int r2 = 0;
  PolyMatrix phi;  // r2 x r1, reduced mod ring ideal

  VComplex(FgRing R, int rank1, int rank2, PolyMatrix map);
  int rank() const { return r2 - r1; }
};

/// 1-morphism of two-term complexes; the chain-map identity
/// psi o f1 = f2 o phi holds mod the ring ideal (checked at construction).
struct VMor {
  VComplex source, target;
  PolyMatrix f1;  // target.r1 x source.r1
  PolyMatrix f2;  // target.r2 x source.r2

  VMor(VComplex src, VComplex tgt, PolyMatrix m1, PolyMatrix m2);
  static VMor identity(const VComplex& c);
};

/// 2-morphism eta: f => g with g1 = f1 + eta o phi, g2 = f2 + psi o eta
/// mod the ring ideal (checked at construction).
struct VTwoMor {
  VMor from, to;
  PolyMatrix eta;  // target.r1 x source.r2

  VTwoMor(VMor f, VMor g, PolyMatrix e);
  static VTwoMor identity(const VMor& f);
};

/// Pointwise classification flags for a 1-morphism of complexes.
struct MorClass {
  bool weakly_injective = false;
  bool injective = false;
  bool weakly_surjective = false;
  bool surjective = false;
  bool equivalence = false;
  bool on_zero_locus = true;  // false flags evaluation off the zero locus
};

VMor compose_vmor(const VMor& g, const VMor& f);

/// Entrywise equality of both components mod the ring ideal.
bool vmor_equal(const VMor& a, const VMor& b);

/// Vertical composition zeta . eta (eta: f=>g, zeta: g=>h).
VTwoMor vcompose(const VTwoMor& zeta, const VTwoMor& eta);

/// Horizontal composition zeta * eta = g1 o eta + zeta o f2 + zeta o psi o eta.
VTwoMor hcompose(const VTwoMor& zeta, const VTwoMor& eta);

bool vtwo_equal(const VTwoMor& a, const VTwoMor& b);

/// Pointwise classification of a 1-morphism at a witness point.
/// With M = [f1; -phi] and N = [psi | f2] evaluated at the point:
///   weakly injective  <=> rank M = source.r1
///   weakly surjective <=> rank N = target.r2
///   injective         <=> weakly injective and rank M + rank N = target.r1 + source.r2
///   surjective        <=> weakly injective and weakly surjective
///   equivalence       <=> injective and surjective
/// The rank forms are validated against the brute-force (gamma, delta)
/// search oracle over F2/F3 in the acceptance suite.
MorClass classify_at(const VMor& m, const WitnessPoint& pt);

/// Symbolic orientation line Lambda^{r1}(E1)* (x) Lambda^{r2}(E2) of a free
/// complex; for trivialized E1, E2 an orientation is a single sign.
struct OrientationLine {
  int dual_exterior_power;  // r1, on E1*
  int exterior_power;       // r2, on E2
  std::string str() const;
};

OrientationLine orientation_line(const VComplex& c);

}  // namespace dmk
