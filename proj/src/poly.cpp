#include "dmk/poly.hpp"

#include <sstream>

namespace dmk {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool GrevlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: a < b iff the last nonzero entry of a-b is positive.
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0;
  }
  return false;
}

Poly::Poly(int nvars, const Scalar& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Monomial(nvars, 0), c);
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Scalar(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (static_cast<int>(m.size()) != nvars_) throw DimensionError("exponent vector length mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("variable count mismatch");
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (this == &o) return *this = *this + o;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (this == &o) { terms_.clear(); return *this; }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  Poly r(nvars_);
  Monomial prod(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly r(nvars_, Scalar(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::derivative(int index) const {
  if (index < 0 || index >= nvars_) throw DimensionError("derivative index out of range");
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial d = m;
    d[index] -= 1;
    r.add_term(d, c * Scalar(m[index]));
  }
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& pt) const {
  if (static_cast<int>(pt.size()) != nvars_) throw DimensionError("evaluation point length mismatch");
  Scalar acc(0);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= pt[i];
    acc += t;
  }
  return acc;
}

double Poly::eval(const std::vector<double>& pt) const {
  if (static_cast<int>(pt.size()) != nvars_) throw DimensionError("evaluation point length mismatch");
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= pt[i];
    acc += t;
  }
  return acc;
}

Poly Poly::compose(const std::vector<Poly>& args, int out_vars_hint) const {
  if (static_cast<int>(args.size()) != nvars_) throw DimensionError("substitution arity mismatch");
  int out_vars = args.empty() ? std::max(out_vars_hint, 0) : args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != out_vars) throw DimensionError("substitution arguments disagree on variable count");
  // Cache argument powers; repeated pow() of dense arguments dominates
  // otherwise.
  std::vector<std::vector<Poly>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) pows[i].push_back(Poly(out_vars, Scalar(1)));
  auto power = [&](int i, int e) -> const Poly& {
    while (static_cast<int>(pows[i].size()) <= e)
      pows[i].push_back(pows[i].back() * args[i]);
    return pows[i][e];
  };
  Poly acc(out_vars);
  for (const auto& [m, c] : terms_) {
    Poly t(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) t *= power(i, m[i]);
    acc += t;
  }
  return acc;
}

std::string monomial_str(const Monomial& m,
                         const std::vector<std::string>& var_names) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    if (i < var_names.size())
      os << var_names[i];
    else
      os << "x" << i;
    if (m[i] > 1) os << "^" << m[i];
  }
  return os.str();
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar c = it->second;
    std::string mono = monomial_str(it->first, var_names);
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace dmk
