#pragma once

#include <memory>
#include <optional>

#include "dmk/vvect.hpp"

namespace dmk {

/// Standard-model d-manifold S_{V,E,s}: V an open semialgebraic subset of
/// R^n cut out by strict inequalities, E the trivial rank-k bundle, s its
/// section. Carries the ideals I_s, I_s^2 and the coordinate ring
/// Q[x]/I_s, all computed eagerly. Immutable.
class StdModel {
 public:
  StdModel(int n, int k, std::vector<Poly> section, std::vector<Poly> domain = {},
           int orient = +1);

  int n() const { return n_; }
  int k() const { return k_; }
  int vdim() const { return n_ - k_; }
  int orient() const { return orient_; }
  const std::vector<Poly>& section() const { return s_; }
  const std::vector<Poly>& domain() const { return domain_; }
  const Ideal& Is() const { return *Is_; }
  const Ideal& Is2() const { return *Is2_; }
  const FgRing& ring() const { return *ring_; }

  /// True iff pt satisfies |s_i| <= tolerance and every domain inequality
  /// strictly.
  bool is_witness(const WitnessPoint& pt) const;

  /// Pointwise vector-bundle criterion: grad s has full row rank k at pt,
  /// i.e. phi has a pointwise left inverse.
  bool is_manifold_at(const WitnessPoint& pt) const;

  bool same_model(const StdModel& o) const;

 private:
  int n_, k_, orient_;
  std::vector<Poly> s_, domain_;
  std::shared_ptr<const Ideal> Is_, Is2_;
  std::shared_ptr<const FgRing> ring_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  void fail(std::string what) {
    valid = false;
    violations.push_back(std::move(what));
  }
};

/// 1-morphism S_{f,fhat}: (n,k,s) -> (m,l,t). Validity: every component of
/// fhat . s - t o f lies in I_s^2.
class StdMor {
 public:
  StdMor(StdModel source, StdModel target, std::vector<Poly> map, PolyMatrix fhat);

  static StdMor identity(const StdModel& X);

  const StdModel& source() const { return source_; }
  const StdModel& target() const { return target_; }
  const std::vector<Poly>& map() const { return f_; }
  const PolyMatrix& fhat() const { return fhat_; }

  /// Image of a witness point under the underlying map.
  WitnessPoint image_point(const WitnessPoint& pt) const;

 private:
  StdModel source_, target_;
  std::vector<Poly> f_;
  PolyMatrix fhat_;
};

/// Residual check without construction; lists offending components and
/// their normal forms.
ValidationReport validate_mor(const StdModel& source, const StdModel& target,
                              const std::vector<Poly>& f, const PolyMatrix& fhat);

/// Congruence-class equality: f-difference in I_s^2 componentwise and
/// fhat-difference in I_s.
bool mor_equal(const StdMor& a, const StdMor& b);

/// Composition (g o f, (ghat o f) . fhat); validity re-checked.
StdMor compose_mor(const StdMor& g, const StdMor& f);

/// 2-morphism S_Lambda: a => b with
///   b = a + Lambda . s + O(s^2)  and  bhat = ahat + (Jt o f) . Lambda + O(s).
class StdTwoMor {
 public:
  StdTwoMor(StdMor a, StdMor b, PolyMatrix Lambda);

  static StdTwoMor identity(const StdMor& f);

  const StdMor& from() const { return from_; }
  const StdMor& to() const { return to_; }
  const PolyMatrix& lambda() const { return Lambda_; }

 private:
  StdMor from_, to_;
  PolyMatrix Lambda_;
};

ValidationReport validate_2mor(const StdMor& a, const StdMor& b, const PolyMatrix& Lambda);

/// S_Lambda = S_Lambda' iff Lambda - Lambda' = O(s).
bool two_mor_equal(const StdTwoMor& a, const StdTwoMor& b);

/// Vertical composition: Lambda sum.
StdTwoMor vcompose_2mor(const StdTwoMor& zeta, const StdTwoMor& eta);

/// Horizontal composition, transcribed to Lambda matrices:
///   Lambda = (Jg o f) . L_eta + (L_zeta o f) . fhat + (L_zeta o f) . (Jt o f) . L_eta.
StdTwoMor hcompose_2mor(const StdTwoMor& zeta, const StdTwoMor& eta);

/// Virtual cotangent complex: (grad s)^T : E* -> T*V over Q[x]/I_s,
/// r1 = k, r2 = n, rank = vdim.
VComplex cotangent_complex(const StdModel& X);

/// Omega_f = (fhat^T, (Jf o .)^T): pullback of the target cotangent
/// complex along f -> source cotangent complex.
VMor omega(const StdMor& m);

struct EtaleVerdict {
  bool etale = false;
  int rank_m = 0;  // stacked [ds; df]
  int rank_n = 0;  // [fhat | -dt]
  bool classify_agrees = true;  // cross-check vs classify_at(omega).equivalence
};

/// Pointwise etale criterion: exactness of
///   0 -> T_vV -> E_v + T_wW -> F_w -> 0.
EtaleVerdict etale_at(const StdMor& m, const WitnessPoint& pt);
std::vector<EtaleVerdict> etale_at(const StdMor& m, const std::vector<WitnessPoint>& pts);

struct MorClassification {
  MorClass cls;                  // pointwise flags of Omega_f
  bool witness_injective = true; // underlying-map injectivity on the witness set
};

/// Classification of a 1-morphism at witness points; embedding-type flags
/// additionally require injectivity on the supplied witness set.
std::vector<MorClassification> classify_mor_at(const StdMor& m,
                                               const std::vector<WitnessPoint>& pts);

/// Canonical embedding X -> S_{V,0,0}: identity variables, zero fhat.
StdMor standard_embedding(const StdModel& X);

}  // namespace dmk
