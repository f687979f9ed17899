#include "dmk/glue.hpp"

#include <sstream>

namespace dmk {

namespace {

// Membership with the localized fallback: p in I, or denom * p in I for a
// supplied positive denominator. Pass implies the condition holds on V_ij.
bool member_localized(const Poly& p, const Ideal& I, const std::vector<Poly>& denoms) {
  if (ideal_member(p, I)) return true;
  for (const Poly& d : denoms)
    if (ideal_member(d * p, I)) return true;
  return false;
}

std::vector<Poly> compose_all(const std::vector<Poly>& ps, const std::vector<Poly>& args,
                              int out_vars) {
  std::vector<Poly> r;
  r.reserve(ps.size());
  for (const Poly& p : ps) r.push_back(p.compose(args, out_vars));
  return r;
}

PolyMatrix column(const std::vector<Poly>& v, int nvars) {
  PolyMatrix m(static_cast<int>(v.size()), 1, nvars);
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
  return m;
}

}  // namespace

GlueReport validate_glue(const GlueData& d) {
  GlueReport rep;
  auto add = [&rep](std::string cond, std::vector<int> idx, bool pass, std::string detail) {
    if (!pass) rep.valid = false;
    rep.entries.push_back(GlueEntry{std::move(cond), std::move(idx), pass, std::move(detail)});
  };

  const int nc = static_cast<int>(d.charts.size());

  // Chart shape condition: dim V_i - rank E_i = n.
  for (int i = 0; i < nc; ++i) {
    bool ok = d.charts[i].vdim() == d.vdim;
    add("chart-vdim", {i}, ok,
        ok ? "" : "dim V_i - rank E_i != n for chart " + std::to_string(i));
  }

  // Cover shadow: every supplied chart witness lies in its chart's domain
  // and on its zero locus (witness-level check only; full covering is not
  // decidable in this representation).
  for (int i = 0; i < nc && i < static_cast<int>(d.chart_witnesses.size()); ++i) {
    bool ok = true;
    for (const auto& w : d.chart_witnesses[i])
      if (!d.charts[i].is_witness(w)) ok = false;
    add("(i)-cover-witnesses", {i}, ok, ok ? "" : "witness outside chart domain or zero locus");
  }

  for (const auto& [key, ov] : d.overlaps) {
    auto [i, j] = key;
    if (i >= j || i < 0 || j >= nc) throw std::invalid_argument("malformed overlap index pair");
    const StdModel& Ci = d.charts[i];
    const StdModel& Cj = d.charts[j];
    if (static_cast<int>(ov.map.size()) != Cj.n() || ov.bundle.rows() != Cj.k() ||
        ov.bundle.cols() != Ci.k())
      throw DimensionError("overlap data shape mismatch");

    // (ii)-algebraic: ehat . s_i - s_j o e_ij in I_{s_i}^2.
    {
      PolyMatrix lhs = ov.bundle * column(Ci.section(), Ci.n());
      std::vector<Poly> rhs = compose_all(Cj.section(), ov.map, Ci.n());
      bool ok = true;
      std::ostringstream detail;
      for (int c = 0; c < Cj.k(); ++c) {
        Poly res = lhs.at(c, 0) - rhs[c];
        if (!member_localized(res, Ci.Is2(), ov.denominators)) {
          ok = false;
          detail << "component " << c << " residual normal form "
                 << normal_form(res, Ci.Is2()).str() << "; ";
        }
      }
      add("(ii)-algebraic", {i, j}, ok, detail.str());
    }

    // (ii)-exactness at each overlap witness:
    //   0 -> T_v V_i -> E_i + T_{v_j} V_j -> E_j -> 0.
    {
      PolyMatrix M = vstack(jacobian(Ci.section(), Ci.n()), jacobian(ov.map, Ci.n()));
      PolyMatrix N = hstack(ov.bundle,
                            -jacobian(Cj.section(), Cj.n()).compose(ov.map, Ci.n()));
      bool ok = true;
      std::ostringstream detail;
      for (size_t wi = 0; wi < ov.witnesses.size(); ++wi) {
        const WitnessPoint& w = ov.witnesses[wi];
        if (!Ci.is_witness(w))
          throw std::invalid_argument("overlap witness is not a witness of chart " +
                                      std::to_string(i));
        int rM = rank_at(M, w), rN = rank_at(N, w);
        bool exact = rM == Ci.n() && rN == Cj.k() && rM + rN == Ci.k() + Cj.n();
        if (!exact) {
          ok = false;
          detail << "witness " << wi << ": rank[ds;de]=" << rM << ", rank[ehat|-ds_j]=" << rN
                 << "; ";
        }
      }
      add("(ii)-exactness", {i, j}, ok, detail.str());
    }
  }

  // (iii)-cocycle on triple overlaps.
  for (const auto& [key_ij, ov_ij] : d.overlaps) {
    auto [i, j] = key_ij;
    for (const auto& [key_jk, ov_jk] : d.overlaps) {
      auto [j2, k] = key_jk;
      if (j2 != j) continue;
      auto it_ik = d.overlaps.find({i, k});
      if (it_ik == d.overlaps.end()) continue;
      const Overlap& ov_ik = it_ik->second;
      const StdModel& Ci = d.charts[i];

      // e_ik = e_jk o e_ij + O(s_i^2) componentwise.
      bool ok_map = true;
      std::ostringstream dm;
      std::vector<Poly> comp = compose_all(ov_jk.map, ov_ij.map, Ci.n());
      for (size_t c = 0; c < comp.size(); ++c) {
        Poly res = ov_ik.map[c] - comp[c];
        if (!member_localized(res, Ci.Is2(), ov_ik.denominators)) {
          ok_map = false;
          dm << "component " << c << "; ";
        }
      }
      add("(iii)-cocycle-map", {i, j, k}, ok_map, dm.str());

      // ehat_ik = (ehat_jk o e_ij) . ehat_ij + O(s_i).
      bool ok_bun = true;
      std::ostringstream db;
      PolyMatrix prod = ov_jk.bundle.compose(ov_ij.map, Ci.n()) * ov_ij.bundle;
      PolyMatrix diff = ov_ik.bundle - prod;
      for (int r = 0; r < diff.rows(); ++r)
        for (int c = 0; c < diff.cols(); ++c)
          if (!member_localized(diff.at(r, c), Ci.Is(), ov_ik.denominators)) {
            ok_bun = false;
            db << "entry (" << r << "," << c << "); ";
          }
      add("(iii)-cocycle-bundle", {i, j, k}, ok_bun, db.str());
    }
  }

  // Map-out condition: g_j o e_ij = g_i + O(s_i).
  if (!d.out_maps.empty()) {
    for (const auto& [key, ov] : d.overlaps) {
      auto [i, j] = key;
      if (d.out_maps[i].empty() || d.out_maps[j].empty()) continue;
      const StdModel& Ci = d.charts[i];
      bool ok = true;
      std::ostringstream detail;
      std::vector<Poly> gj = compose_all(d.out_maps[j], ov.map, Ci.n());
      for (size_t c = 0; c < gj.size(); ++c) {
        Poly res = gj[c] - d.out_maps[i][c];
        if (!member_localized(res, Ci.Is(), ov.denominators)) {
          ok = false;
          detail << "component " << c << "; ";
        }
      }
      add("map-out", {i, j}, ok, detail.str());
    }
  }

  return rep;
}

}  // namespace dmk
