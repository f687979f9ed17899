#pragma once

#include "dmk/matrix.hpp"

namespace dmk {

/// A point of a zero locus, exact rational or approximate binary64, at
/// which pointwise linear-algebra criteria are evaluated.
struct WitnessPoint {
  std::vector<Scalar> exact_coords;   // used when `exact`
  std::vector<double> float_coords;   // used otherwise
  bool exact = true;
  double tolerance = 0.0;  // 0 for exact points

  static WitnessPoint from_exact(std::vector<Scalar> coords) {
    WitnessPoint w;
    w.exact_coords = std::move(coords);
    w.exact = true;
    return w;
  }
  static WitnessPoint from_float(std::vector<double> coords, double tol = 1e-9) {
    WitnessPoint w;
    w.float_coords = std::move(coords);
    w.exact = false;
    w.tolerance = tol;
    return w;
  }

  size_t size() const { return exact ? exact_coords.size() : float_coords.size(); }

  std::vector<double> as_float() const {
    if (!exact) return float_coords;
    std::vector<double> v;
    v.reserve(exact_coords.size());
    for (const Scalar& c : exact_coords) v.push_back(c.get_d());
    return v;
  }
};

/// Rank of a polynomial matrix evaluated at a witness point: exact rank
/// for exact points, tolerance rank for float points.
int rank_at(const PolyMatrix& m, const WitnessPoint& pt);

/// Exact/approximate vanishing of a list of polynomials at the point.
bool vanishes_at(const std::vector<Poly>& polys, const WitnessPoint& pt);

}  // namespace dmk
