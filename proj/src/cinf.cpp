#include "dmk/cinf.hpp"

namespace dmk {

RingMor::RingMor(FgRing source, FgRing target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.nvars())
    throw DimensionError("ring morphism needs one image per source generator");
  for (const Poly& f : images_)
    if (f.nvars() != target_.nvars())
      throw DimensionError("ring morphism image variable count mismatch");
  // Ideal-mapping condition: each source ideal generator maps into the
  // target ideal.
  for (const Poly& g : source_.ideal().generators())
    if (!ideal_member(g.compose(images_), target_.ideal()))
      throw std::invalid_argument("ring morphism does not map ideal into ideal");
}

RingMor RingMor::compose_after(const RingMor& inner) const {
  // this : B -> C, inner : A -> B; result : A -> C.
  if (!inner.target().same_presentation(source_))
    throw DimensionError("ring morphism composition endpoint mismatch");
  std::vector<Poly> images;
  images.reserve(inner.images().size());
  for (const Poly& f : inner.images()) images.push_back(apply(f));
  return RingMor(inner.source(), target_, std::move(images));
}

Poly quotient_op(const Poly& f, const std::vector<Poly>& args, const FgRing& R) {
  if (static_cast<int>(args.size()) != f.nvars())
    throw DimensionError("quotient_op arity mismatch");
  for (const Poly& a : args)
    if (a.nvars() != R.nvars()) throw DimensionError("quotient_op argument variable count mismatch");
  return R.reduce(f.compose(args));
}

CotModule cotangent(const FgRing& R) {
  const auto& gens = R.ideal().generators();
  PolyMatrix rel = jacobian(gens, R.nvars());
  return CotModule{R, R.nvars(), rel};
}

PolyMatrix cotangent_pushforward(const RingMor& phi) {
  // Row i = gradient of image f_i, reduced mod target ideal.
  PolyMatrix m = jacobian(phi.images(), phi.target().nvars());
  return m.reduce(phi.target().ideal());
}

}  // namespace dmk
