#include "dmk/vvect.hpp"

#include <sstream>

namespace dmk {

namespace {

void require_same_ring(const FgRing& a, const FgRing& b, const char* what) {
  if (!a.same_presentation(b)) throw DimensionError(std::string(what) + ": ring mismatch");
}

bool reduces_to_zero(const PolyMatrix& m, const FgRing& R) {
  return m.reduce(R.ideal()) == PolyMatrix::zero(m.rows(), m.cols(), m.nvars());
}

}  // namespace

VComplex::VComplex(FgRing R, int rank1, int rank2, PolyMatrix map)
    : ring(std::move(R)), r1(rank1), r2(rank2), phi(std::move(map)) {
  if (phi.rows() != r2 || phi.cols() != r1)
    throw DimensionError("VComplex phi shape must be r2 x r1");
  phi = phi.reduce(ring.ideal());
}

VMor::VMor(VComplex src, VComplex tgt, PolyMatrix m1, PolyMatrix m2)
    : source(std::move(src)), target(std::move(tgt)), f1(std::move(m1)), f2(std::move(m2)) {
  require_same_ring(source.ring, target.ring, "VMor");
  if (f1.rows() != target.r1 || f1.cols() != source.r1 ||
      f2.rows() != target.r2 || f2.cols() != source.r2)
    throw DimensionError("VMor component shape mismatch");
  f1 = f1.reduce(source.ring.ideal());
  f2 = f2.reduce(source.ring.ideal());
  if (!reduces_to_zero(target.phi * f1 - f2 * source.phi, source.ring))
    throw std::invalid_argument("VMor chain-map identity psi o f1 = f2 o phi fails");
}

VMor VMor::identity(const VComplex& c) {
  return VMor(c, c, PolyMatrix::identity(c.r1, c.ring.nvars()),
              PolyMatrix::identity(c.r2, c.ring.nvars()));
}

VTwoMor::VTwoMor(VMor f, VMor g, PolyMatrix e)
    : from(std::move(f)), to(std::move(g)), eta(std::move(e)) {
  if (eta.rows() != from.target.r1 || eta.cols() != from.source.r2)
    throw DimensionError("VTwoMor eta shape mismatch");
  const FgRing& R = from.source.ring;
  eta = eta.reduce(R.ideal());
  if (!(from.source.phi == to.source.phi) || !(from.target.phi == to.target.phi) ||
      from.source.r1 != to.source.r1 || from.source.r2 != to.source.r2 ||
      from.target.r1 != to.target.r1 || from.target.r2 != to.target.r2)
    throw DimensionError("VTwoMor endpoints mismatch");
  if (!reduces_to_zero(to.f1 - from.f1 - eta * from.source.phi, R) ||
      !reduces_to_zero(to.f2 - from.f2 - from.target.phi * eta, R))
    throw std::invalid_argument("VTwoMor identities g1 = f1 + eta o phi, g2 = f2 + psi o eta fail");
}

VTwoMor VTwoMor::identity(const VMor& f) {
  return VTwoMor(f, f, PolyMatrix::zero(f.target.r1, f.source.r2, f.source.ring.nvars()));
}

VMor compose_vmor(const VMor& g, const VMor& f) {
  if (f.target.r1 != g.source.r1 || f.target.r2 != g.source.r2 ||
      !(f.target.phi == g.source.phi))
    throw DimensionError("compose_vmor endpoint mismatch");
  return VMor(f.source, g.target, g.f1 * f.f1, g.f2 * f.f2);
}

VTwoMor vcompose(const VTwoMor& zeta, const VTwoMor& eta) {
  // eta: f => g, zeta: g => h, shared endpoints.
  if (!(zeta.from.f1 == eta.to.f1) || !(zeta.from.f2 == eta.to.f2))
    throw DimensionError("vcompose endpoint mismatch");
  return VTwoMor(eta.from, zeta.to, zeta.eta + eta.eta);
}

VTwoMor hcompose(const VTwoMor& zeta, const VTwoMor& eta) {
  // eta: f => ftilde between (E,phi) -> (F,psi);
  // zeta: g => gtilde between (F,psi) -> (G,xi).
  const VMor& f = eta.from;
  const VMor& g = zeta.from;
  if (f.target.r1 != g.source.r1 || f.target.r2 != g.source.r2 ||
      !(f.target.phi == g.source.phi))
    throw DimensionError("hcompose endpoint mismatch");
  PolyMatrix e = g.f1 * eta.eta + zeta.eta * f.f2 + zeta.eta * f.target.phi * eta.eta;
  return VTwoMor(compose_vmor(g, f), compose_vmor(zeta.to, eta.to), std::move(e));
}

bool vmor_equal(const VMor& a, const VMor& b) {
  if (a.source.r1 != b.source.r1 || a.source.r2 != b.source.r2 ||
      a.target.r1 != b.target.r1 || a.target.r2 != b.target.r2)
    return false;
  const FgRing& R = a.source.ring;
  return reduces_to_zero(a.f1 - b.f1, R) && reduces_to_zero(a.f2 - b.f2, R);
}

bool vtwo_equal(const VTwoMor& a, const VTwoMor& b) {
  const FgRing& R = a.from.source.ring;
  PolyMatrix d = a.eta - b.eta;
  return d.reduce(R.ideal()) == PolyMatrix::zero(d.rows(), d.cols(), d.nvars());
}

MorClass classify_at(const VMor& m, const WitnessPoint& pt) {
  if (pt.size() != static_cast<size_t>(m.source.ring.nvars()))
    throw DimensionError("classify_at point length mismatch");
  PolyMatrix M = vstack(m.f1, -m.source.phi);
  PolyMatrix N = hstack(m.target.phi, m.f2);
  int rM = rank_at(M, pt);
  int rN = rank_at(N, pt);

  MorClass c;
  c.weakly_injective = (rM == m.source.r1);
  c.weakly_surjective = (rN == m.target.r2);
  c.injective = c.weakly_injective && (rM + rN == m.target.r1 + m.source.r2);
  c.surjective = c.weakly_injective && c.weakly_surjective;
  c.equivalence = c.injective && c.surjective;
  c.on_zero_locus = vanishes_at(m.source.ring.ideal().generators(), pt);
  return c;
}

OrientationLine orientation_line(const VComplex& c) {
  return OrientationLine{c.r1, c.r2};
}

std::string OrientationLine::str() const {
  std::ostringstream os;
  os << "Lambda^" << dual_exterior_power << "(E1)* (x) Lambda^" << exterior_power << "(E2)";
  return os.str();
}

}  // namespace dmk
