#include "dmk/fibre.hpp"

#include <cmath>

namespace dmk {

namespace {

// Lift a poly in n vars into n_total vars at the given variable offset.
Poly lift(const Poly& p, int n_total, int offset) {
  Poly r(n_total);
  for (const auto& [m, c] : p.terms()) {
    Monomial big(n_total, 0);
    for (size_t i = 0; i < m.size(); ++i) big[offset + i] = m[i];
    r.add_term(big, c);
  }
  return r;
}

std::vector<Poly> lift_all(const std::vector<Poly>& ps, int n_total, int offset) {
  std::vector<Poly> r;
  r.reserve(ps.size());
  for (const Poly& p : ps) r.push_back(lift(p, n_total, offset));
  return r;
}

std::vector<Poly> projection_vars(int n_total, int offset, int count) {
  std::vector<Poly> v;
  v.reserve(count);
  for (int i = 0; i < count; ++i) v.push_back(Poly::variable(n_total, offset + i));
  return v;
}

// fhat block [0 .. | I | .. 0] of shape rows x cols with the identity
// starting at column `at`.
PolyMatrix block_id(int rows, int cols, int at, int nvars, const Scalar& diag = Scalar(1)) {
  PolyMatrix m(rows, cols, nvars);
  for (int i = 0; i < rows; ++i) m.at(i, at + i) = Poly(nvars, diag);
  return m;
}

}  // namespace

int orientation_sigma(int nX, int kX, int nY, int kY, int p) {
  return ((nX + kX) * (kY + p)) % 2 ? -1 : +1;
}

int orient_fibre_product(int orientX, int orientY, int nX, int kX, int nY, int kY, int p) {
  return orientX * orientY * orientation_sigma(nX, kX, nY, kY, p);
}

FibreData fibre_product(const StdModel& X, const std::vector<Poly>& g,
                        const StdModel& Y, const std::vector<Poly>& h, int p) {
  if (static_cast<int>(g.size()) != p || static_cast<int>(h.size()) != p)
    throw DimensionError("fibre_product: maps must have p components");
  for (const Poly& q : g)
    if (q.nvars() != X.n()) throw DimensionError("fibre_product: g variable count mismatch");
  for (const Poly& q : h)
    if (q.nvars() != Y.n()) throw DimensionError("fibre_product: h variable count mismatch");

  const int nW = X.n() + Y.n();
  const int kW = X.k() + Y.k() + p;

  std::vector<Poly> section = lift_all(X.section(), nW, 0);
  for (const Poly& t : lift_all(Y.section(), nW, X.n())) section.push_back(t);
  std::vector<Poly> gl = lift_all(g, nW, 0);
  std::vector<Poly> hl = lift_all(h, nW, X.n());
  for (int i = 0; i < p; ++i) section.push_back(gl[i] - hl[i]);

  std::vector<Poly> domain = lift_all(X.domain(), nW, 0);
  for (const Poly& d : lift_all(Y.domain(), nW, X.n())) domain.push_back(d);

  int orient = orient_fibre_product(X.orient(), Y.orient(), X.n(), X.k(), Y.n(), Y.k(), p);
  StdModel W(nW, kW, std::move(section), std::move(domain), orient);

  // Projections; the inclusion E_W >= e*(E_X) component is the identity block.
  StdMor e(W, X, projection_vars(nW, 0, X.n()), block_id(X.k(), kW, 0, nW));
  StdMor f(W, Y, projection_vars(nW, X.n(), Y.n()), block_id(Y.k(), kW, X.k(), nW));

  // 2-morphism g o e => h o f via Lambda = [0 | 0 | -I_p].
  StdModel Rp(p, 0, {});
  StdMor ge(W, Rp, gl, PolyMatrix::zero(0, kW, nW));
  StdMor hf(W, Rp, hl, PolyMatrix::zero(0, kW, nW));
  PolyMatrix lam = block_id(p, kW, X.k() + Y.k(), nW, Scalar(-1));
  StdTwoMor eta(ge, hf, std::move(lam));

  return FibreData{X, Y, p, g, h, std::move(W), std::move(e), std::move(f), std::move(eta)};
}

DTransverseVerdict d_transverse_at(
    const StdMor& g, const StdMor& h,
    const std::vector<std::pair<WitnessPoint, WitnessPoint>>& pts) {
  if (!g.target().same_model(h.target()))
    throw DimensionError("d_transverse_at: targets differ");
  const StdModel& Z = g.target();
  DTransverseVerdict v;
  if (pts.empty()) {
    v.vacuous = true;
    return v;
  }
  for (const auto& [pv, pw] : pts) {
    if (!g.source().is_witness(pv) || !h.source().is_witness(pw))
      throw std::invalid_argument("d_transverse_at: non-witness pair");
    if (Z.k() == 0) continue;  // manifold target: alpha is from the zero space
    // alpha = [ghat^T; -hhat^T; (grad u)^T] evaluated at the pair.
    PolyMatrix top = g.fhat().transpose();
    PolyMatrix mid = -h.fhat().transpose();
    PolyMatrix bot = jacobian(Z.section(), Z.n()).transpose();
    WitnessPoint zpt = g.image_point(pv);
    Eigen::MatrixXd a(g.source().k() + h.source().k() + Z.n(), Z.k());
    a.topRows(g.source().k()) = top.eval(pv.as_float());
    a.middleRows(g.source().k(), h.source().k()) = mid.eval(pw.as_float());
    a.bottomRows(Z.n()) = bot.eval(zpt.as_float());
    if (rank_float(a) != Z.k()) v.transverse = false;
  }
  return v;
}

DTransverseVerdict d_transverse_at(
    const StdModel& X, const std::vector<Poly>& g, const StdModel& Y,
    const std::vector<Poly>& h,
    const std::vector<std::pair<WitnessPoint, WitnessPoint>>& pts) {
  DTransverseVerdict v;
  if (pts.empty()) {
    v.vacuous = true;
    return v;
  }
  for (const auto& [pv, pw] : pts) {
    if (!X.is_witness(pv) || !Y.is_witness(pw))
      throw std::invalid_argument("d_transverse_at: non-witness pair");
    std::vector<double> fv = pv.as_float(), fw = pw.as_float();
    double tol = std::max({pv.tolerance, pw.tolerance, 1e-9});
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (std::abs(g[i].eval(fv) - h[i].eval(fw)) > tol)
        throw std::invalid_argument("d_transverse_at: pair does not satisfy g(v) = h(w)");
  }
  return v;  // manifold target R^p: always d-transverse
}

WitnessPoint combine_witness(const WitnessPoint& v, const WitnessPoint& w) {
  if (v.exact && w.exact) {
    std::vector<Scalar> c = v.exact_coords;
    c.insert(c.end(), w.exact_coords.begin(), w.exact_coords.end());
    return WitnessPoint::from_exact(std::move(c));
  }
  std::vector<double> c = v.as_float();
  std::vector<double> wf = w.as_float();
  c.insert(c.end(), wf.begin(), wf.end());
  return WitnessPoint::from_float(std::move(c), std::max(v.tolerance, w.tolerance));
}

bool cotangent_exact_at(const FibreData& fd, const WitnessPoint& v, const WitnessPoint& w) {
  // Pointwise cotangent spaces of the quotient rings:
  //   T*X_v = R^{nX} / im(Js_X(v)^T), similarly for Y and W; T*Z_z = R^p.
  // The sequence is exact at the middle iff
  //   rank(induced A) = dim middle - rank(induced B),
  // and exact at T*W since B is induced by the identity on R^{nW}.
  auto jac_t = [](const std::vector<Poly>& s, int n, const std::vector<double>& at) {
    PolyMatrix j = jacobian(s, n);
    Eigen::MatrixXd m = j.eval(at);
    return Eigen::MatrixXd(m.transpose());
  };
  std::vector<double> pv = v.as_float(), pw = w.as_float();
  std::vector<double> pvw = combine_witness(v, w).as_float();

  const int nX = fd.X.n(), nY = fd.Y.n(), nW = fd.W.n();
  Eigen::MatrixXd qx = jac_t(fd.X.section(), nX, pv);        // nX x kX
  Eigen::MatrixXd qy = jac_t(fd.Y.section(), nY, pw);        // nY x kY
  Eigen::MatrixXd qw = jac_t(fd.W.section(), nW, pvw);       // nW x kW
  Eigen::MatrixXd jg = jacobian(fd.g, nX).eval(pv);          // p x nX
  Eigen::MatrixXd jh = jacobian(fd.h, nY).eval(pw);          // p x nY

  int rx = rank_float(qx), ry = rank_float(qy), rw = rank_float(qw);
  int dim_mid = (nX - rx) + (nY - ry);
  int dim_w = nW - rw;

  // Induced map A: R^p -> T*X_v (+) T*Y_w from [Jg^T; -Jh^T].
  Eigen::MatrixXd ma(nX + nY, fd.p);
  ma.topRows(nX) = jg.transpose();
  ma.bottomRows(nY) = -jh.transpose();
  Eigen::MatrixXd q_mid = Eigen::MatrixXd::Zero(nX + nY, qx.cols() + qy.cols());
  q_mid.topLeftCorner(nX, qx.cols()) = qx;
  q_mid.bottomRightCorner(nY, qy.cols()) = qy;
  Eigen::MatrixXd a_aug(nX + nY, ma.cols() + q_mid.cols());
  a_aug << ma, q_mid;
  int rank_a = rank_float(a_aug) - rank_float(q_mid);

  // B is induced by the identity R^{nX+nY} = R^{nW}, hence surjective onto
  // T*W with rank dim_w; im A lies in ker B since the (g-h) gradients are
  // columns of qw. Exactness at the middle is then a rank equality.
  int rank_b = dim_w;
  return rank_a == dim_mid - rank_b;
}

}  // namespace dmk
