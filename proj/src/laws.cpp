#include "dmk/laws.hpp"

#include <random>

namespace dmk {

namespace {

using Rng = std::mt19937_64;

// Random configurations occasionally hit expensive basis computations;
// a tight step cap rejects those so the suite stays fast. Restores the
// global cap on exit.
struct CapGuard {
  int saved;
  explicit CapGuard(int tight) : saved(groebner_step_cap()) {
    set_groebner_step_cap(std::min(saved, tight));
  }
  ~CapGuard() { set_groebner_step_cap(saved); }
};

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Scalar rand_coeff(Rng& rng) { return Scalar(rand_int(rng, -2, 2)); }

// Random polynomial with the given degree bounds; may be zero.
Poly rand_poly(Rng& rng, int nvars, int min_deg, int max_deg, int terms = 2) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    int deg = rand_int(rng, min_deg, max_deg);
    Monomial m(nvars, 0);
    for (int d = 0; d < deg && nvars > 0; ++d) m[rand_int(rng, 0, nvars - 1)] += 1;
    if (nvars == 0 && deg > 0) continue;
    p.add_term(m, rand_coeff(rng));
  }
  return p;
}

PolyMatrix rand_matrix(Rng& rng, int rows, int cols, int nvars, int max_deg) {
  PolyMatrix m(rows, cols, nvars);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rand_poly(rng, nvars, 0, max_deg);
  return m;
}

Poly lift_to(const Poly& p, int n_total) {
  Poly r(n_total);
  for (const auto& [m, c] : p.terms()) {
    Monomial big(n_total, 0);
    for (size_t i = 0; i < m.size(); ++i) big[i] = m[i];
    r.add_term(big, c);
  }
  return r;
}

struct Checker {
  LawReport& rep;
  void operator()(bool ok, const std::string& what, std::uint64_t seed, int trial) {
    ++rep.checks;
    if (!ok)
      rep.failures.push_back(what + " (seed " + std::to_string(seed) + ", trial " +
                             std::to_string(trial) + ")");
  }
};

// --- two-term complex generators -------------------------------------------

FgRing rand_ring(Rng& rng) {
  int nv = rand_int(rng, 0, 2);
  if (nv > 0 && rand_int(rng, 0, 2) == 0) {
    Poly g = rand_poly(rng, nv, 1, 2);
    if (!g.is_zero()) return FgRing(nv, Ideal(nv, {g}));
  }
  return FgRing::free_ring(nv);
}

VComplex rand_complex(Rng& rng, const FgRing& R) {
  int r1 = rand_int(rng, 0, 2), r2 = rand_int(rng, 0, 2);
  return VComplex(R, r1, r2, rand_matrix(rng, r2, r1, R.nvars(), 1));
}

// Perturb a chain map by a free eta; returns the perturbed map with the
// connecting 2-morphism.
std::pair<VMor, VTwoMor> vperturb(Rng& rng, const VMor& f) {
  PolyMatrix eta = rand_matrix(rng, f.target.r1, f.source.r2, f.source.ring.nvars(), 1);
  VMor g(f.source, f.target, f.f1 + eta * f.source.phi, f.f2 + f.target.phi * eta);
  return {g, VTwoMor(f, g, eta)};
}

// Random chain map into T: f2 = identity, phi_source = psi o f1.
VMor extend_source(Rng& rng, const VComplex& T) {
  int r1s = rand_int(rng, 0, 2);
  PolyMatrix f1 = rand_matrix(rng, T.r1, r1s, T.ring.nvars(), 1);
  VComplex S(T.ring, r1s, T.r2, T.phi * f1);
  VMor base(S, T, f1, PolyMatrix::identity(T.r2, T.ring.nvars()));
  if (rand_int(rng, 0, 1)) return vperturb(rng, base).first;
  return base;
}

// --- standard-model generators ---------------------------------------------

StdModel rand_model(Rng& rng) {
  int n = rand_int(rng, 1, 2), k = rand_int(rng, 0, 2);
  std::vector<Poly> s;
  for (int j = 0; j < k; ++j) s.push_back(rand_poly(rng, n, 1, 2));
  return StdModel(n, k, std::move(s));
}

// Random morphism out of X into a freshly built target: the target section
// is an fhat-combination of the source section plus graph relations for
// the extra variables, which makes validity exact.
StdMor extend_target(Rng& rng, const StdModel& X) {
  int extra = X.n() < 3 ? rand_int(rng, 0, 1) : 0;
  int m = X.n() + extra, l = rand_int(rng, 0, 2);

  std::vector<Poly> q;
  for (int r = 0; r < extra; ++r) q.push_back(rand_poly(rng, X.n(), 0, 2));

  PolyMatrix A(l, X.k(), X.n());
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < X.k(); ++j) A.at(i, j) = rand_poly(rng, X.n(), 0, 1);

  std::vector<Poly> t;
  for (int i = 0; i < l; ++i) {
    Poly ti(m);
    for (int j = 0; j < X.k(); ++j) ti += lift_to(A.at(i, j) * X.section()[j], m);
    for (int r = 0; r < extra; ++r) {
      Poly graph = Poly::variable(m, X.n() + r) - lift_to(q[r], m);
      ti += rand_poly(rng, m, 0, 1) * graph;
    }
    t.push_back(std::move(ti));
  }
  StdModel T(m, l, std::move(t));

  std::vector<Poly> f;
  for (int i = 0; i < X.n(); ++i) f.push_back(Poly::variable(X.n(), i));
  for (int r = 0; r < extra; ++r) f.push_back(q[r]);
  return StdMor(X, std::move(T), std::move(f), std::move(A));
}

std::pair<StdMor, StdTwoMor> sperturb(Rng& rng, const StdMor& f) {
  const StdModel& X = f.source();
  const StdModel& T = f.target();
  PolyMatrix lam(T.n(), X.k(), X.n());
  for (int r = 0; r < T.n(); ++r)
    for (int c = 0; c < X.k(); ++c) lam.at(r, c) = rand_poly(rng, X.n(), 0, 1, 1);

  std::vector<Poly> g = f.map();
  for (int i = 0; i < T.n(); ++i)
    for (int j = 0; j < X.k(); ++j) g[i] += lam.at(i, j) * X.section()[j];
  PolyMatrix jt = jacobian(T.section(), T.n()).compose(f.map(), X.n());
  StdMor gm(X, T, std::move(g), f.fhat() + jt * lam);
  return {gm, StdTwoMor(f, gm, std::move(lam))};
}

}  // namespace

LawReport vvect_laws(std::uint64_t seed, int trials) {
  LawReport rep;
  Checker check{rep};
  Rng rng(seed);
  CapGuard cap(5000);
  int attempts = 0;
  while (rep.trials < trials && attempts < trials * 10) {
    ++attempts;
    try {
      FgRing R = rand_ring(rng);
      VComplex C3 = rand_complex(rng, R);
      VMor h = extend_source(rng, C3);
      VMor g = extend_source(rng, h.source);
      VMor f = extend_source(rng, g.source);
      int trial = rep.trials;

      check(vmor_equal(compose_vmor(compose_vmor(h, g), f),
                       compose_vmor(h, compose_vmor(g, f))),
            "1-composition associativity", seed, trial);
      check(vmor_equal(compose_vmor(g, VMor::identity(g.source)), g) &&
                vmor_equal(compose_vmor(VMor::identity(g.target), g), g),
            "1-composition identity", seed, trial);

      auto [fa, e1] = vperturb(rng, f);
      auto [fb, e2] = vperturb(rng, fa);
      auto [fc, e3] = vperturb(rng, fb);
      check(vtwo_equal(vcompose(e3, vcompose(e2, e1)), vcompose(vcompose(e3, e2), e1)),
            "vertical associativity", seed, trial);
      check(vtwo_equal(vcompose(VTwoMor::identity(fa), e1), e1) &&
                vtwo_equal(vcompose(e1, VTwoMor::identity(f)), e1),
            "vertical identity", seed, trial);

      auto [ga, z1] = vperturb(rng, g);
      auto [ha, t1] = vperturb(rng, h);
      check(vtwo_equal(hcompose(t1, hcompose(z1, e1)), hcompose(hcompose(t1, z1), e1)),
            "horizontal associativity", seed, trial);

      auto [gb, z2] = vperturb(rng, ga);
      check(vtwo_equal(hcompose(vcompose(z2, z1), vcompose(e2, e1)),
                       vcompose(hcompose(z2, e2), hcompose(z1, e1))),
            "interchange", seed, trial);

      ++rep.trials;
    } catch (const GroebnerCapExceeded&) {
      ++rep.regenerated;
    }
  }
  return rep;
}

LawReport std_laws(std::uint64_t seed, int trials) {
  LawReport rep;
  Checker check{rep};
  Rng rng(seed);
  CapGuard cap(500);
  int attempts = 0;
  while (rep.trials < trials && attempts < trials * 10) {
    ++attempts;
    try {
      StdModel X = rand_model(rng);
      StdMor f = extend_target(rng, X);
      StdMor g = extend_target(rng, f.target());
      StdMor h = extend_target(rng, g.target());
      int trial = rep.trials;

      check(mor_equal(compose_mor(compose_mor(h, g), f), compose_mor(h, compose_mor(g, f))),
            "1-composition associativity", seed, trial);
      check(mor_equal(compose_mor(f, StdMor::identity(X)), f) &&
                mor_equal(compose_mor(StdMor::identity(f.target()), f), f),
            "1-composition identity", seed, trial);

      auto [fa, e1] = sperturb(rng, f);
      auto [fb, e2] = sperturb(rng, fa);
      auto [fc, e3] = sperturb(rng, fb);
      check(two_mor_equal(vcompose_2mor(e3, vcompose_2mor(e2, e1)),
                          vcompose_2mor(vcompose_2mor(e3, e2), e1)),
            "vertical associativity", seed, trial);
      check(two_mor_equal(vcompose_2mor(StdTwoMor::identity(fa), e1), e1) &&
                two_mor_equal(vcompose_2mor(e1, StdTwoMor::identity(f)), e1),
            "vertical identity", seed, trial);

      auto [ga, z1] = sperturb(rng, g);
      auto [ha, t1] = sperturb(rng, h);
      check(two_mor_equal(hcompose_2mor(t1, hcompose_2mor(z1, e1)),
                          hcompose_2mor(hcompose_2mor(t1, z1), e1)),
            "horizontal associativity", seed, trial);

      auto [gb, z2] = sperturb(rng, ga);
      check(two_mor_equal(hcompose_2mor(vcompose_2mor(z2, z1), vcompose_2mor(e2, e1)),
                          vcompose_2mor(hcompose_2mor(z2, e2), hcompose_2mor(z1, e1))),
            "interchange", seed, trial);

      ++rep.trials;
    } catch (const GroebnerCapExceeded&) {
      ++rep.regenerated;
    }
  }
  return rep;
}

}  // namespace dmk
