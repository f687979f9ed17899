#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmk {

/// Exact rational scalar. All coefficient arithmetic is exact; mpq_class
/// keeps fractions reduced with positive denominator.
using Scalar = mpq_class;

/// Exponent vector of a monomial; length equals the variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Graded reverse lexicographic order. a < b iff deg a < deg b, or degrees
/// are equal and the last nonzero entry of a - b is positive.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Multivariate polynomial with exact rational coefficients over a fixed
/// number of variables. Terms are kept in grevlex order with no zero
/// coefficients stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Scalar& c);

  static Poly variable(int nvars, int index);
  static Poly constant(int nvars, const Scalar& c) { return Poly(nvars, c); }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial

  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;

  void add_term(const Monomial& m, const Scalar& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Scalar& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;

  /// Partial derivative with respect to variable `index`.
  Poly derivative(int index) const;

  /// Exact evaluation at a rational point.
  Scalar eval(const std::vector<Scalar>& pt) const;
  /// Floating (binary64) evaluation.
  double eval(const std::vector<double>& pt) const;

  /// Substitution: replace variable i by args[i]. All args must share a
  /// common variable count, which becomes the result's. `out_vars` pins
  /// the result's variable count when args is empty.
  Poly compose(const std::vector<Poly>& args, int out_vars = -1) const;

  /// Canonical term-ordered string, leading term first.
  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  void check_same(const Poly& o) const;

  int nvars_;
  TermMap terms_;
};

inline Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

std::string monomial_str(const Monomial& m,
                         const std::vector<std::string>& var_names);

}  // namespace dmk
