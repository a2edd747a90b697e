#include "qelim/bounds.hpp"

#include "qelim/errors.hpp"

namespace qelim {

namespace {

void check_epsilon(const Rat& epsilon) {
  if (!epsilon.is_probability()) throw DomainError("epsilon must lie in [0,1], got " + epsilon.str());
}

// epsilon here may exceed 1 (eps + delta); the numerator then clamps to 0.
BoundReport bound_report(const FiniteFunction& f, const ProductDistribution& mu,
                         const Rat& epsilon) {
  BoundReport r;
  r.plurality_error = plurality_error(f, mu);
  MaxInfluence m = max_influence(f, mu);
  r.inf_max = std::move(m.value);
  r.inf_argmax = m.coord;
  r.epsilon = epsilon;
  if (!r.inf_max.is_zero() && r.plurality_error > epsilon) {
    r.bound = (r.plurality_error - epsilon) / r.inf_max;
  }
  if (f.labels().size() == 2) r.variance_ratio = variance_ratio(f, mu);
  return r;
}

}  // namespace

BoundReport theorem1_bound(const FiniteFunction& f, const ProductDistribution& mu,
                           const Rat& epsilon) {
  check_epsilon(epsilon);
  return bound_report(f, mu, epsilon);
}

CorollaryBound corollary_bound(const FiniteFunction& f, const FiniteFunction& g,
                               const ProductDistribution& mu, const Rat& epsilon) {
  check_epsilon(epsilon);
  check_same_shape(f, g);
  CorollaryBound out;
  out.delta = closeness(f, g, mu);
  out.report = bound_report(g, mu, epsilon + out.delta);
  return out;
}

BestBound best_bound(const FiniteFunction& f, std::span<const FiniteFunction> candidates,
                     const ProductDistribution& mu, const Rat& epsilon) {
  if (candidates.empty()) throw PreconditionError("best_bound needs at least one candidate");
  BestBound best{0, corollary_bound(f, candidates[0], mu, epsilon)};
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    CorollaryBound r = corollary_bound(f, candidates[c], mu, epsilon);
    if (r.report.bound > best.result.report.bound) best = {c, std::move(r)};
  }
  return best;
}

}  // namespace qelim
