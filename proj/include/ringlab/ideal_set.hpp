#pragma once

#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// A verified two-sided ideal, stored as a member bit set together with an
// additive generating set.
class IdealSet {
 public:
  // Throws invalid-ideal when `members` is not a two-sided ideal of `ring`.
  static IdealSet from_members(RingPtr ring, const ElementSet& members);
  static IdealSet from_elements(RingPtr ring, const std::vector<Elem>& elems);
  // Throws invalid-ideal when the span is not closed under multiplication by R.
  static IdealSet from_span(RingPtr ring, const AdditiveSpan& span);
  static IdealSet zero(RingPtr ring);
  static IdealSet whole(RingPtr ring);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::vector<Elem> elements() const { return members_.elements(); }

  std::size_t size() const { return size_; }
  bool contains(Elem e) const { return members_.contains(e); }
  bool is_proper() const { return size_ < ring_->size(); }
  bool is_zero() const { return size_ == 1; }
  bool subset_of(const IdealSet& other) const { return members_.subset_of(other.members_); }

  friend bool operator==(const IdealSet& a, const IdealSet& b) { return a.members_ == b.members_; }

 private:
  IdealSet(RingPtr ring, ElementSet members, std::vector<Elem> generators);

  RingPtr ring_;
  ElementSet members_;
  std::vector<Elem> generators_;
  std::size_t size_ = 0;
};

}  // namespace ringlab
