#pragma once

#include <memory>

#include "dmk/matrix.hpp"

namespace dmk {

/// Finitely generated ring presentation Q[x1..xn]/I. Element equality is
/// equality of normal forms.
class FgRing {
 public:
  FgRing(int nvars, Ideal ideal)
      : nvars_(nvars), ideal_(std::make_shared<Ideal>(std::move(ideal))) {
    if (ideal_->nvars() != nvars_) throw DimensionError("ring ideal variable count mismatch");
  }

  static FgRing free_ring(int nvars) {
    return FgRing(nvars, Ideal(nvars, {}));
  }

  int nvars() const { return nvars_; }
  const Ideal& ideal() const { return *ideal_; }

  Poly reduce(const Poly& p) const { return normal_form(p, *ideal_); }
  bool equal(const Poly& a, const Poly& b) const { return reduce(a - b).is_zero(); }

  bool same_presentation(const FgRing& o) const {
    return nvars_ == o.nvars_ &&
           ideal_->basis() == o.ideal_->basis();
  }

 private:
  int nvars_;
  std::shared_ptr<const Ideal> ideal_;
};

/// Ring morphism source -> target presented by generator images; the
/// ideal-mapping condition is checked at construction.
class RingMor {
 public:
  RingMor(FgRing source, FgRing target, std::vector<Poly> images);

  const FgRing& source() const { return source_; }
  const FgRing& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }

  /// Image of a source element (substitution, reduced in the target).
  Poly apply(const Poly& p) const { return target_.reduce(p.compose(images_)); }

  RingMor compose_after(const RingMor& inner) const;

 private:
  FgRing source_, target_;
  std::vector<Poly> images_;
};

/// Cotangent module presentation: free on dx1..dxn modulo one relation row
/// per ideal generator (the generator's gradient).
struct CotModule {
  FgRing ring;
  int rank;
  PolyMatrix relations;  // one row per ideal generator, `rank` columns
};

/// Apply the polynomial f (in r variables) to r elements of R, reduced.
Poly quotient_op(const Poly& f, const std::vector<Poly>& args, const FgRing& R);

CotModule cotangent(const FgRing& R);

/// Matrix of the induced map on cotangent modules: row i is the gradient
/// of the i-th generator image, entries reduced mod the target ideal.
/// Sends dx_i (source) to sum_j (d f_i / d y_j) dy_j (target).
PolyMatrix cotangent_pushforward(const RingMor& phi);

}  // namespace dmk
