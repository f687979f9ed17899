#pragma once

#include <map>

#include "dmk/stdmodel.hpp"

namespace dmk {

/// Overlap data for a chart pair i < j: domain V_ij (strict inequalities in
/// chart i's variables), transition map e_ij: V_ij -> V_j, bundle map
/// ehat_ij, witnesses on the overlap, and optional positive denominators
/// for the localized membership retry.
struct Overlap {
  std::vector<Poly> domain;
  std::vector<Poly> map;    // n_j polys in n_i variables
  PolyMatrix bundle;        // k_j x k_i over chart i's variables
  std::vector<WitnessPoint> witnesses;  // points of chart i inside V_ij
  std::vector<Poly> denominators;       // optional, positive on V_ij
};

/// Good-coordinate-system data: charts of a common virtual dimension, a
/// total order given by the index, overlap data for i < j, and optional
/// out-maps g_i to a common R^q.
struct GlueData {
  int vdim = 0;
  std::vector<StdModel> charts;
  std::map<std::pair<int, int>, Overlap> overlaps;
  std::vector<std::vector<WitnessPoint>> chart_witnesses;  // per chart
  std::vector<std::vector<Poly>> out_maps;  // per chart, q polys; empty if absent
  int out_dim = 0;
};

struct GlueEntry {
  std::string condition;  // e.g. "(ii)-algebraic", "(iii)-cocycle-map"
  std::vector<int> indices;
  bool pass = true;
  std::string detail;
};

struct GlueReport {
  std::vector<GlueEntry> entries;
  bool valid = true;
};

/// Checks the good-coordinate-system hypotheses:
///  - chart shape: dim V_i - rank E_i = vdim for every chart;
///  - cover shadow: every supplied witness lies in its chart's domain;
///  - (ii)-algebraic: ehat_ij . s_i - s_j o e_ij in I_{s_i}^2 (global-ring
///    membership; localized retry with supplied denominators);
///  - (ii)-exactness at every overlap witness (pointwise ranks);
///  - (iii)-cocycle on triple overlaps, map part mod I_{s_i}^2 and bundle
///    part mod I_{s_i};
///  - map-out: g_j o e_ij = g_i + O(s_i).
/// Report order follows the total order on the index set; deterministic.
GlueReport validate_glue(const GlueData& d);

}  // namespace dmk
