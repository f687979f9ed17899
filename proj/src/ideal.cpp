#include "dmk/ideal.hpp"

#include <algorithm>
#include <climits>

namespace dmk {

namespace {

int g_step_cap = 200000;

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Poly monomial_times(const Poly& p, const Monomial& m, const Scalar& c) {
  Poly shift(p.nvars());
  shift.add_term(m, c);
  return p * shift;
}

void make_monic(Poly& p) {
  if (!p.is_zero() && p.leading_coeff() != 1) p = p * (Scalar(1) / p.leading_coeff());
}

// Scale to integer coefficients with content 1 and positive leading
// coefficient. Keeps intermediate basis elements small; monic scaling
// compounds denominators catastrophically on random inputs.
void make_primitive(Poly& p) {
  if (p.is_zero()) return;
  mpz_class den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    mpz_class scaled = c.get_num() * (den / c.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  Scalar scale(den, num);
  scale.canonicalize();
  if (p.leading_coeff() < 0) scale = -scale;
  if (scale != 1) p = p * scale;
}

// Work budget for basis construction: counts individual reduction steps,
// since the pair cap alone does not bound the cost of one reduction.
thread_local long* g_work = nullptr;

}  // namespace

int groebner_step_cap() { return g_step_cap; }
void set_groebner_step_cap(int cap) { g_step_cap = cap; }

Poly reduce_by(const Poly& p, const std::vector<Poly>& divisors) {
  Poly rem(p.nvars());
  Poly cur = p;
  while (!cur.is_zero()) {
    if (g_work) {
      if (++*g_work > static_cast<long>(g_step_cap) * 20)
        throw GroebnerCapExceeded("Groebner reduction work cap exceeded");
      const Scalar& lc = cur.leading_coeff();
      if (mpz_sizeinbase(lc.get_num().get_mpz_t(), 2) > 512 ||
          mpz_sizeinbase(lc.get_den().get_mpz_t(), 2) > 512)
        throw GroebnerCapExceeded("Groebner coefficient growth cap exceeded");
    }
    bool reduced = false;
    const Monomial& lm = cur.leading_monomial();
    for (const Poly& d : divisors) {
      if (d.is_zero()) continue;
      if (divides(d.leading_monomial(), lm)) {
        Scalar c = cur.leading_coeff() / d.leading_coeff();
        cur -= monomial_times(d, quotient(lm, d.leading_monomial()), c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Poly lt(cur.nvars());
      lt.add_term(lm, cur.leading_coeff());
      rem += lt;
      cur -= lt;
    }
  }
  return rem;
}

Poly s_poly(const Poly& f, const Poly& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = monomial_times(f, quotient(l, f.leading_monomial()),
                          Scalar(1) / f.leading_coeff());
  Poly b = monomial_times(g, quotient(l, g.leading_monomial()),
                          Scalar(1) / g.leading_coeff());
  return a - b;
}

Ideal::Ideal(int nvars, std::vector<Poly> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  for (const Poly& g : gens_)
    if (g.nvars() != nvars_) throw DimensionError("ideal generator variable count mismatch");

  // Buchberger with the first-pair criterion (coprime leading monomials).
  long work = 0;
  g_work = &work;
  struct WorkReset {
    ~WorkReset() { g_work = nullptr; }
  } reset;

  std::vector<Poly> basis;
  for (const Poly& g : gens_)
    if (!g.is_zero()) {
      Poly m = g;
      make_primitive(m);
      basis.push_back(m);
    }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  int steps = 0;
  while (!pairs.empty()) {
    // Normal selection: smallest lcm degree first.
    size_t best = 0;
    int best_deg = INT_MAX;
    for (size_t p = 0; p < pairs.size(); ++p) {
      int d = total_degree(lcm(basis[pairs[p].first].leading_monomial(),
                               basis[pairs[p].second].leading_monomial()));
      if (d < best_deg) { best_deg = d; best = p; }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + best);
    if (++steps > g_step_cap)
      throw GroebnerCapExceeded("Groebner basis step cap exceeded");
    const Monomial &li = basis[i].leading_monomial(), &lj = basis[j].leading_monomial();
    bool coprime = true;
    for (size_t v = 0; v < li.size(); ++v)
      if (li[v] > 0 && lj[v] > 0) { coprime = false; break; }
    if (coprime) continue;
    Poly r = reduce_by(s_poly(basis[i], basis[j]), basis);
    if (!r.is_zero()) {
      make_primitive(r);
      for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
      basis.push_back(std::move(r));
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (divides(basis[j].leading_monomial(), basis[i].leading_monomial())) {
        // Tie-break equal leading monomials by keeping the first.
        if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Reduce: replace each element by its normal form against the others.
  std::vector<Poly> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_by(reduced[i], others);
    make_monic(reduced[i]);
  }
  reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                               [](const Poly& p) { return p.is_zero(); }),
                reduced.end());
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return GrevlexLess{}(a.leading_monomial(), b.leading_monomial());
  });
  basis_ = std::move(reduced);

  // Construction check: each generator reduces to zero.
  for (const Poly& g : gens_)
    if (!reduce_by(g, basis_).is_zero())
      throw std::logic_error("Groebner basis does not reduce a generator to zero");
}

Poly normal_form(const Poly& p, const Ideal& I) {
  if (p.nvars() != I.nvars()) throw DimensionError("normal_form variable count mismatch");
  return reduce_by(p, I.basis());
}

bool ideal_member(const Poly& p, const Ideal& I) {
  return normal_form(p, I).is_zero();
}

Ideal ideal_square(const Ideal& I) {
  std::vector<Poly> gens;
  const auto& g = I.generators();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i; j < g.size(); ++j) gens.push_back(g[i] * g[j]);
  if (gens.empty()) gens.push_back(Poly(I.nvars()));
  return Ideal(I.nvars(), std::move(gens));
}

}  // namespace dmk
