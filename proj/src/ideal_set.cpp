#include "ringlab/ideal_set.hpp"

#include "ringlab/error.hpp"

namespace ringlab {

IdealSet::IdealSet(RingPtr ring, ElementSet members, std::vector<Elem> generators)
    : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {
  size_ = members_.count();
}

IdealSet IdealSet::from_span(RingPtr ring, const AdditiveSpan& span) {
  for (Elem x : span.generators()) {
    for (Elem g : ring->additive_generators()) {
      const Elem left = ring->mul(g, x);
      const Elem right = ring->mul(x, g);
      if (!span.contains(left) || !span.contains(right)) {
        fail(ErrorKind::invalid_ideal, "not closed under multiplication: " + ring->format(g) + " * " +
                                           ring->format(x) + " escapes the set in " + ring->describe());
      }
    }
  }
  return IdealSet(std::move(ring), span.members(), span.generators());
}

IdealSet IdealSet::from_members(RingPtr ring, const ElementSet& members) {
  if (members.universe() != ring->size()) fail(ErrorKind::ring_mismatch, "member set over wrong universe");
  if (!members.contains(ring->zero())) fail(ErrorKind::invalid_ideal, "set does not contain zero");
  AdditiveSpan span(*ring);
  for (Elem x = members.first(); x < members.universe(); x = members.next(x)) {
    span.adjoin(x);
    if (span.size() > members.count()) break;
  }
  if (!(span.members() == members)) {
    fail(ErrorKind::invalid_ideal, "set is not an additive subgroup of " + ring->describe());
  }
  return from_span(std::move(ring), span);
}

IdealSet IdealSet::from_elements(RingPtr ring, const std::vector<Elem>& elems) {
  const auto n = ring->size();
  for (Elem e : elems) {
    if (e >= n) fail(ErrorKind::invalid_ideal, "element index out of range");
  }
  return from_members(ring, ElementSet::of(n, elems));
}

IdealSet IdealSet::zero(RingPtr ring) {
  AdditiveSpan span(*ring);
  return IdealSet(ring, span.members(), {});
}

IdealSet IdealSet::whole(RingPtr ring) {
  auto gens = ring->additive_generators();
  auto all = ElementSet::full(ring->size());
  return IdealSet(std::move(ring), std::move(all), std::move(gens));
}

}  // namespace ringlab
