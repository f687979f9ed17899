#pragma once

#include <optional>

#include "dmk/poly.hpp"

namespace dmk {

struct GroebnerCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global cap on Buchberger pair reductions, configurable from the CLI.
/// Exceeding it is a hard error, never a silent timeout.
int groebner_step_cap();
void set_groebner_step_cap(int cap);

/// Polynomial ideal with an eagerly computed reduced Groebner basis
/// (grevlex). Immutable after construction.
class Ideal {
 public:
  Ideal(int nvars, std::vector<Poly> generators);

  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& basis() const { return basis_; }

 private:
  int nvars_;
  std::vector<Poly> gens_;
  std::vector<Poly> basis_;
};

/// Unique remainder of p modulo the reduced basis of I.
Poly normal_form(const Poly& p, const Ideal& I);

/// True iff normal_form(p, I) == 0.
bool ideal_member(const Poly& p, const Ideal& I);

/// Ideal generated by all pairwise products of I's generators.
Ideal ideal_square(const Ideal& I);

/// Multivariate division of p by the (not necessarily reduced) divisor
/// list; returns the remainder. Exposed for the Buchberger certificate
/// and test oracles.
Poly reduce_by(const Poly& p, const std::vector<Poly>& divisors);

/// S-polynomial of f and g.
Poly s_poly(const Poly& f, const Poly& g);

}  // namespace dmk
