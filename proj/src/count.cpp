#include "dmk/count.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dmk/fibre.hpp"

namespace dmk {

namespace {

std::vector<double> random_unit(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> u(k);
  double norm2 = 0;
  do {
    norm2 = 0;
    for (double& x : u) {
      x = nd(rng);
      norm2 += x * x;
    }
  } while (norm2 < 1e-12);
  double inv = 1.0 / std::sqrt(norm2);
  for (double& x : u) x *= inv;
  return u;
}

struct Evaluator {
  const StdModel& X;
  double epsilon;
  std::vector<double> u;

  Eigen::VectorXd value(const std::vector<double>& x) const {
    Eigen::VectorXd v(X.k());
    for (int i = 0; i < X.k(); ++i) v(i) = X.section()[i].eval(x) - epsilon * u[i];
    return v;
  }
  Eigen::MatrixXd jac(const std::vector<double>& x, const PolyMatrix& J) const {
    return J.eval(x);
  }
};

bool in_box(const std::vector<double>& x, const std::vector<std::pair<double, double>>& box,
            double slack) {
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] < box[i].first - slack || x[i] > box[i].second + slack) return false;
  return true;
}

bool in_domain(const StdModel& X, const std::vector<double>& x) {
  for (const Poly& d : X.domain())
    if (d.eval(x) <= 0) return false;
  return true;
}

// Damped Newton from a grid seed; returns true on convergence to a zero.
bool newton(const Evaluator& ev, const PolyMatrix& J, const NewtonParams& np,
            const std::vector<std::pair<double, double>>& box, std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  for (int it = 0; it < np.max_iterations; ++it) {
    Eigen::VectorXd f = ev.value(x);
    double res = f.norm();
    if (res < np.tolerance) return true;
    Eigen::MatrixXd j = ev.jac(x, J);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
    if (!lu.isInvertible()) return false;
    Eigen::VectorXd dx = lu.solve(-f);
    double lam = 1.0;
    std::vector<double> cand(n);
    bool stepped = false;
    for (int bt = 0; bt < 30; ++bt) {
      for (int i = 0; i < n; ++i) cand[i] = x[i] + lam * dx[i];
      if (ev.value(cand).norm() < (1.0 - 0.25 * lam) * res) {
        stepped = true;
        break;
      }
      lam *= 0.5;
    }
    if (!stepped) return false;
    x = cand;
    if (!in_box(x, box, 1.0)) return false;  // diverging far outside
  }
  return ev.value(x).norm() < np.tolerance;
}

// One (seed, epsilon) replica; returns false if a non-transverse zero
// survives all resamples.
bool run_replica(const StdModel& X, const std::vector<std::pair<double, double>>& box,
                 const NewtonParams& np, const PolyMatrix& J, std::uint64_t seed,
                 double epsilon, Replica& out, std::string& err) {
  const int n = X.n();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= np.max_resamples; ++attempt) {
    Evaluator ev{X, epsilon, random_unit(rng, X.k())};
    std::vector<ZeroRecord> zeros;
    bool degenerate = false;

    std::vector<int> idx(n, 0);
    const int g = np.grid_density;
    const long total = static_cast<long>(std::pow(g, n));
    for (long cell = 0; cell < total && !degenerate; ++cell) {
      long c = cell;
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) {
        int gi = static_cast<int>(c % g);
        c /= g;
        x[i] = box[i].first + (box[i].second - box[i].first) * (gi + 0.5) / g;
      }
      if (!newton(ev, J, np, box, x)) continue;
      if (!in_box(x, box, np.dedupe_radius) || !in_domain(X, x)) continue;
      bool dup = false;
      for (const ZeroRecord& z : zeros) {
        double d2 = 0;
        for (int i = 0; i < n; ++i) d2 += (x[i] - z.point[i]) * (x[i] - z.point[i]);
        if (d2 < np.dedupe_radius * np.dedupe_radius) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      double det = ev.jac(x, J).determinant();
      if (std::abs(det) < np.min_jacobian_det) {
        degenerate = true;
        break;
      }
      zeros.push_back(ZeroRecord{x, det > 0 ? +1 : -1});
    }
    if (degenerate) continue;  // resample the perturbation direction

    std::sort(zeros.begin(), zeros.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.point < b.point; });
    int sum = 0;
    for (const ZeroRecord& z : zeros) sum += z.sign;
    out.seed = seed;
    out.epsilon = epsilon;
    out.count = sum * X.orient();
    out.zeros = std::move(zeros);
    return true;
  }
  err = "non-transverse zeros after max resamples";
  return false;
}

}  // namespace

CountReport virtual_count(const CountProblem& p) {
  CountReport rep;
  const StdModel& X = p.X;
  const int n = X.n();
  if (X.vdim() != 0) {
    rep.error = "virtual count requires vdim 0";
    return rep;
  }
  if (n > 3) {
    rep.error = "grid search limited to n <= 3";
    return rep;
  }
  if (static_cast<int>(p.box.size()) != n) {
    rep.error = "box dimension mismatch";
    return rep;
  }
  if (p.epsilons.empty() || p.seeds.empty()) {
    rep.error = "need at least one epsilon and one seed";
    return rep;
  }

  if (n == 0) {
    // A point with no obstruction: count is the orientation.
    rep.ok = true;
    rep.count = X.orient();
    for (std::uint64_t s : p.seeds)
      for (double e : p.epsilons)
        rep.replicas.push_back(Replica{s, e, X.orient(), {}});
    return rep;
  }

  // Boundary margin: min |s| on a boundary grid must exceed the largest
  // perturbation, so no zero of s~ can cross the boundary.
  double eps_max = *std::max_element(p.epsilons.begin(), p.epsilons.end());
  {
    double min_norm = std::numeric_limits<double>::infinity();
    const int g = std::max(p.newton.grid_density, 2);
    const long total = static_cast<long>(std::pow(g + 1, n));
    for (long cell = 0; cell < total; ++cell) {
      long c = cell;
      std::vector<double> x(n);
      bool boundary = false;
      for (int i = 0; i < n; ++i) {
        int gi = static_cast<int>(c % (g + 1));
        c /= (g + 1);
        if (gi == 0 || gi == g) boundary = true;
        x[i] = p.box[i].first + (p.box[i].second - p.box[i].first) * gi / g;
      }
      if (!boundary) continue;
      double norm2 = 0;
      for (int i = 0; i < X.k(); ++i) {
        double v = X.section()[i].eval(x);
        norm2 += v * v;
      }
      min_norm = std::min(min_norm, std::sqrt(norm2));
    }
    if (min_norm <= 2.0 * eps_max) {
      std::ostringstream os;
      os << "boundary margin violation: min |s| on boundary grid " << min_norm
         << " <= " << 2.0 * eps_max;
      rep.error = os.str();
      return rep;
    }
  }

  PolyMatrix J = jacobian(X.section(), n);
  for (std::uint64_t seed : p.seeds)
    for (double eps : p.epsilons) {
      Replica r;
      std::string err;
      if (!run_replica(X, p.box, p.newton, J, seed, eps, r, err)) {
        rep.error = err;
        return rep;
      }
      rep.replicas.push_back(std::move(r));
    }

  rep.count = rep.replicas.front().count;
  for (const Replica& r : rep.replicas)
    if (r.count != rep.count) {
      std::ostringstream os;
      os << "replica disagreement:";
      for (const Replica& q : rep.replicas)
        os << " (seed " << q.seed << ", eps " << q.epsilon << ") -> " << q.count;
      rep.error = os.str();
      rep.count = 0;
      return rep;
    }
  rep.ok = true;
  return rep;
}

CountReport intersection_number(const StdModel& X, const std::vector<Poly>& g,
                                const StdModel& Y, const std::vector<Poly>& h, int p,
                                const std::vector<std::pair<double, double>>& box,
                                const CountProblem& defaults) {
  CountReport rep;
  if (X.vdim() + Y.vdim() - p != 0) {
    rep.error = "intersection number requires vdim X + vdim Y - p = 0";
    return rep;
  }
  FibreData fd = fibre_product(X, g, Y, h, p);
  CountProblem cp{std::move(fd.W), box, defaults.epsilons, defaults.seeds, defaults.newton};
  return virtual_count(cp);
}

}  // namespace dmk
