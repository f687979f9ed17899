#include "dmk/stdmodel.hpp"

#include <cmath>
#include <sstream>

namespace dmk {

namespace {

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

std::vector<Poly> identity_vars(int n) {
  std::vector<Poly> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(Poly::variable(n, i));
  return v;
}

}  // namespace

StdModel::StdModel(int n, int k, std::vector<Poly> section, std::vector<Poly> domain,
                   int orient)
    : n_(n), k_(k), orient_(orient), s_(std::move(section)), domain_(std::move(domain)) {
  if (n < 0 || k < 0) throw DimensionError("StdModel dimensions must be nonnegative");
  if (static_cast<int>(s_.size()) != k_)
    throw DimensionError("StdModel section must have k components");
  if (orient_ != 1 && orient_ != -1) throw std::invalid_argument("orientation must be +1 or -1");
  for (const Poly& p : s_)
    if (p.nvars() != n_) throw DimensionError("section component variable count mismatch");
  for (const Poly& p : domain_)
    if (p.nvars() != n_) throw DimensionError("domain inequality variable count mismatch");
  Ideal is(n_, s_);
  Is2_ = std::make_shared<Ideal>(ideal_square(is));
  Is_ = std::make_shared<Ideal>(std::move(is));
  ring_ = std::make_shared<FgRing>(n_, *Is_);
}

bool StdModel::is_witness(const WitnessPoint& pt) const {
  if (pt.size() != static_cast<size_t>(n_)) return false;
  if (!vanishes_at(s_, pt)) return false;
  if (pt.exact) {
    for (const Poly& p : domain_)
      if (p.eval(pt.exact_coords) <= 0) return false;
  } else {
    for (const Poly& p : domain_)
      if (p.eval(pt.float_coords) <= 0) return false;
  }
  return true;
}

bool StdModel::is_manifold_at(const WitnessPoint& pt) const {
  return rank_at(jacobian(s_, n_), pt) == k_;
}

bool StdModel::same_model(const StdModel& o) const {
  return n_ == o.n_ && k_ == o.k_ && s_ == o.s_ && domain_ == o.domain_ &&
         orient_ == o.orient_;
}

ValidationReport validate_mor(const StdModel& source, const StdModel& target,
                              const std::vector<Poly>& f, const PolyMatrix& fhat) {
  ValidationReport rep;
  if (static_cast<int>(f.size()) != target.n()) {
    rep.fail("map must have one component per target variable");
    return rep;
  }
  for (const Poly& p : f)
    if (p.nvars() != source.n()) {
      rep.fail("map component variable count mismatch");
      return rep;
    }
  if (fhat.rows() != target.k() || fhat.cols() != source.k() ||
      (source.k() > 0 && target.k() > 0 && fhat.nvars() != source.n())) {
    rep.fail("fhat must be an l x k matrix over the source variables");
    return rep;
  }
  // Validity: fhat . s - t o f = O(s^2), componentwise.
  PolyMatrix lhs = fhat * column(source.section(), source.n());
  std::vector<Poly> tof = compose_all(target.section(), f, source.n());
  for (int i = 0; i < target.k(); ++i) {
    Poly residual = lhs.at(i, 0) - tof[i];
    Poly nf = normal_form(residual, source.Is2());
    if (!nf.is_zero()) {
      std::ostringstream os;
      os << "validity residual (component " << i << "): normal form " << nf.str()
         << " not in I_s^2";
      rep.fail(os.str());
    }
  }
  return rep;
}

StdMor::StdMor(StdModel source, StdModel target, std::vector<Poly> map, PolyMatrix fhat)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(map)),
      fhat_(std::move(fhat)) {
  ValidationReport rep = validate_mor(source_, target_, f_, fhat_);
  if (!rep.valid) {
    std::string msg = "invalid standard-model 1-morphism:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
}

StdMor StdMor::identity(const StdModel& X) {
  return StdMor(X, X, identity_vars(X.n()), PolyMatrix::identity(X.k(), X.n()));
}

WitnessPoint StdMor::image_point(const WitnessPoint& pt) const {
  if (pt.exact) {
    std::vector<Scalar> img;
    img.reserve(f_.size());
    for (const Poly& p : f_) img.push_back(p.eval(pt.exact_coords));
    return WitnessPoint::from_exact(std::move(img));
  }
  std::vector<double> img;
  img.reserve(f_.size());
  for (const Poly& p : f_) img.push_back(p.eval(pt.float_coords));
  return WitnessPoint::from_float(std::move(img), pt.tolerance);
}

bool mor_equal(const StdMor& a, const StdMor& b) {
  if (!a.source().same_model(b.source()) || !a.target().same_model(b.target()))
    throw DimensionError("mor_equal endpoint mismatch");
  for (int i = 0; i < a.target().n(); ++i)
    if (!ideal_member(a.map()[i] - b.map()[i], a.source().Is2())) return false;
  return (a.fhat() - b.fhat()).all_in(a.source().Is());
}

StdMor compose_mor(const StdMor& g, const StdMor& f) {
  if (!f.target().same_model(g.source()))
    throw DimensionError("compose_mor endpoint mismatch");
  // Reduce the composed representative: maps are classes mod I_s^2 and
  // bundle maps classes mod I_s, and small representatives keep later
  // compositions tractable.
  std::vector<Poly> map = compose_all(g.map(), f.map(), f.source().n());
  for (Poly& c : map) c = normal_form(c, f.source().Is2());
  PolyMatrix fhat = (g.fhat().rows() == 0 || g.fhat().cols() == 0)
                        ? PolyMatrix::zero(g.target().k(), f.source().k(), f.source().n())
                        : (g.fhat().compose(f.map(), f.source().n()) * f.fhat()).reduce(f.source().Is());
  if (g.target().k() == 0 || f.source().k() == 0)
    fhat = PolyMatrix::zero(g.target().k(), f.source().k(), f.source().n());
  return StdMor(f.source(), g.target(), std::move(map), std::move(fhat));
}

ValidationReport validate_2mor(const StdMor& a, const StdMor& b, const PolyMatrix& Lambda) {
  ValidationReport rep;
  if (!a.source().same_model(b.source()) || !a.target().same_model(b.target())) {
    rep.fail("2-morphism endpoints mismatch");
    return rep;
  }
  const StdModel& X = a.source();
  const StdModel& Y = a.target();
  if (Lambda.rows() != Y.n() || Lambda.cols() != X.k()) {
    rep.fail("Lambda must be (dim target) x k");
    return rep;
  }
  // g = f + Lambda . s + O(s^2)
  PolyMatrix ls = Lambda * column(X.section(), X.n());
  for (int i = 0; i < Y.n(); ++i) {
    Poly nf = normal_form(b.map()[i] - a.map()[i] - ls.at(i, 0), X.Is2());
    if (!nf.is_zero()) {
      std::ostringstream os;
      os << "first congruence residual (component " << i << "): " << nf.str();
      rep.fail(os.str());
    }
  }
  // ghat = fhat + (Jt o f) . Lambda + O(s)
  PolyMatrix jt = jacobian(Y.section(), Y.n()).compose(a.map(), X.n());
  PolyMatrix expected = a.fhat() + jt * Lambda;
  PolyMatrix diff = b.fhat() - expected;
  for (int i = 0; i < diff.rows(); ++i)
    for (int j = 0; j < diff.cols(); ++j) {
      Poly nf = normal_form(diff.at(i, j), X.Is());
      if (!nf.is_zero()) {
        std::ostringstream os;
        os << "second congruence residual (entry " << i << "," << j << "): " << nf.str();
        rep.fail(os.str());
      }
    }
  return rep;
}

StdTwoMor::StdTwoMor(StdMor a, StdMor b, PolyMatrix Lambda)
    : from_(std::move(a)), to_(std::move(b)), Lambda_(std::move(Lambda)) {
  ValidationReport rep = validate_2mor(from_, to_, Lambda_);
  if (!rep.valid) {
    std::string msg = "invalid standard-model 2-morphism:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
}

StdTwoMor StdTwoMor::identity(const StdMor& f) {
  return StdTwoMor(f, f, PolyMatrix::zero(f.target().n(), f.source().k(), f.source().n()));
}

bool two_mor_equal(const StdTwoMor& a, const StdTwoMor& b) {
  return (a.lambda() - b.lambda()).all_in(a.from().source().Is());
}

StdTwoMor vcompose_2mor(const StdTwoMor& zeta, const StdTwoMor& eta) {
  if (!mor_equal(zeta.from(), eta.to()))
    throw DimensionError("vcompose_2mor endpoint mismatch");
  return StdTwoMor(eta.from(), zeta.to(), zeta.lambda() + eta.lambda());
}

StdTwoMor hcompose_2mor(const StdTwoMor& zeta, const StdTwoMor& eta) {
  // eta: (f, fhat) => (ftilde, ...) for X -> Y; zeta: (g, ghat) => ... for Y -> Z.
  const StdMor& f = eta.from();
  const StdMor& g = zeta.from();
  if (!f.target().same_model(g.source()))
    throw DimensionError("hcompose_2mor endpoint mismatch");
  const StdModel& X = f.source();
  const StdModel& Y = f.target();
  PolyMatrix jg = jacobian(g.map(), Y.n()).compose(f.map(), X.n());      // q x m over X
  PolyMatrix jt = jacobian(Y.section(), Y.n()).compose(f.map(), X.n());  // l x m over X
  PolyMatrix lz = zeta.lambda().compose(f.map(), X.n());                 // q x l over X
  PolyMatrix lam =
      (jg * eta.lambda() + lz * f.fhat() + lz * jt * eta.lambda()).reduce(X.Is());
  return StdTwoMor(compose_mor(g, f), compose_mor(zeta.to(), eta.to()), std::move(lam));
}

VComplex cotangent_complex(const StdModel& X) {
  PolyMatrix phi = jacobian(X.section(), X.n()).transpose();
  return VComplex(X.ring(), X.k(), X.n(), phi.reduce(X.Is()));
}

VMor omega(const StdMor& m) {
  const StdModel& X = m.source();
  const StdModel& Y = m.target();
  // Pullback of the target cotangent complex along f, over the source ring.
  PolyMatrix phi_pull = jacobian(Y.section(), Y.n()).compose(m.map(), X.n()).transpose();
  VComplex pulled(X.ring(), Y.k(), Y.n(), phi_pull.reduce(X.Is()));
  VComplex src_cot = cotangent_complex(X);
  PolyMatrix f1 = m.fhat().transpose();
  PolyMatrix f2 = jacobian(m.map(), X.n()).transpose();
  return VMor(pulled, src_cot, f1.reduce(X.Is()), f2.reduce(X.Is()));
}

EtaleVerdict etale_at(const StdMor& m, const WitnessPoint& pt) {
  const StdModel& X = m.source();
  const StdModel& Y = m.target();
  if (!X.is_witness(pt))
    throw std::invalid_argument("etale_at: point is not a witness of the source");
  PolyMatrix M = vstack(jacobian(X.section(), X.n()), jacobian(m.map(), X.n()));
  PolyMatrix jt_pull = jacobian(Y.section(), Y.n()).compose(m.map(), X.n());
  PolyMatrix N = hstack(m.fhat(), -jt_pull);

  EtaleVerdict v;
  v.rank_m = rank_at(M, pt);
  v.rank_n = rank_at(N, pt);
  v.etale = (v.rank_m == X.n()) && (v.rank_n == Y.k()) &&
            (v.rank_m + v.rank_n == X.k() + Y.n());
  v.classify_agrees = (classify_at(omega(m), pt).equivalence == v.etale);
  return v;
}

std::vector<EtaleVerdict> etale_at(const StdMor& m, const std::vector<WitnessPoint>& pts) {
  std::vector<EtaleVerdict> out;
  out.reserve(pts.size());
  for (const auto& pt : pts) out.push_back(etale_at(m, pt));
  return out;
}

std::vector<MorClassification> classify_mor_at(const StdMor& m,
                                               const std::vector<WitnessPoint>& pts) {
  VMor om = omega(m);
  // Witness-set injectivity of the underlying map (partial check for the
  // embedding classes).
  bool inj = true;
  std::vector<std::vector<double>> images;
  for (const auto& pt : pts) images.push_back(m.image_point(pt).as_float());
  for (size_t i = 0; i < pts.size() && inj; ++i)
    for (size_t j = i + 1; j < pts.size() && inj; ++j) {
      double d2 = 0, p2 = 0;
      std::vector<double> pi = pts[i].as_float(), pj = pts[j].as_float();
      for (size_t c = 0; c < images[i].size(); ++c)
        d2 += (images[i][c] - images[j][c]) * (images[i][c] - images[j][c]);
      for (size_t c = 0; c < pi.size(); ++c) p2 += (pi[c] - pj[c]) * (pi[c] - pj[c]);
      if (p2 > 1e-18 && d2 <= 1e-18) inj = false;
    }
  std::vector<MorClassification> out;
  for (const auto& pt : pts) {
    if (!m.source().is_witness(pt))
      throw std::invalid_argument("classify_mor_at: point is not a witness of the source");
    out.push_back(MorClassification{classify_at(om, pt), inj});
  }
  return out;
}

StdMor standard_embedding(const StdModel& X) {
  StdModel target(X.n(), 0, {}, X.domain(), +1);
  return StdMor(X, target, identity_vars(X.n()), PolyMatrix::zero(0, X.k(), X.n()));
}

}  // namespace dmk
