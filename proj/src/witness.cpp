#include "dmk/witness.hpp"

#include <cmath>

namespace dmk {

int rank_at(const PolyMatrix& m, const WitnessPoint& pt) {
  if (pt.exact) return rank_exact(m.eval(pt.exact_coords));
  double tol = pt.tolerance > 0 ? pt.tolerance : 1e-9;
  return rank_float(m.eval(pt.float_coords), tol);
}

bool vanishes_at(const std::vector<Poly>& polys, const WitnessPoint& pt) {
  if (pt.exact) {
    for (const Poly& p : polys)
      if (p.eval(pt.exact_coords) != 0) return false;
    return true;
  }
  double tol = pt.tolerance > 0 ? pt.tolerance : 1e-9;
  for (const Poly& p : polys)
    if (std::abs(p.eval(pt.float_coords)) > tol) return false;
  return true;
}

}  // namespace dmk
