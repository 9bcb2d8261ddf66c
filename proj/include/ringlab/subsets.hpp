#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/element_set.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class SubsetKind { mult_closed, m_system };

const char* to_string(SubsetKind kind);

class SubsetS;

// Throws invalid-subset (with the violating pair) or invalid-parameter for an empty set.
SubsetS validate_subset(RingPtr ring, const ElementSet& members, SubsetKind kind = SubsetKind::mult_closed);

// A nonempty multiplicatively closed set or m-system. Instances only come
// out of validating constructors, so `validated()` is always true.
class SubsetS {
 public:
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ElementSet& members() const { return members_; }
  std::vector<Elem> elements() const { return members_.elements(); }
  SubsetKind kind() const { return kind_; }
  bool validated() const { return true; }
  std::size_t size() const { return members_.count(); }
  bool contains(Elem e) const { return members_.contains(e); }
  // `{a, b, ...}` in element literals.
  std::string format() const;

  friend bool operator==(const SubsetS& a, const SubsetS& b) { return a.members_ == b.members_ && a.kind_ == b.kind_; }

 private:
  friend SubsetS validate_subset(RingPtr ring, const ElementSet& members, SubsetKind kind);
  SubsetS(RingPtr ring, ElementSet members, SubsetKind kind)
      : ring_(std::move(ring)), members_(std::move(members)), kind_(kind) {}

  RingPtr ring_;
  ElementSet members_;
  SubsetKind kind_;
};

// Lexicographically smallest (a, b) breaking the closure condition of `kind`.
std::optional<std::pair<Elem, Elem>> subset_violation(const Ring& ring, const ElementSet& members, SubsetKind kind);

SubsetS validate_subset(RingPtr ring, const std::vector<Elem>& members, SubsetKind kind = SubsetKind::mult_closed);

// Closure of `gens` under multiplication.
SubsetS generate_mulclosed(RingPtr ring, const std::vector<Elem>& gens);

enum class SubsetStrategy { singleton_generated, with_identity, budgeted_all };

inline constexpr std::size_t kBudgetedAllLimit = 16;

struct SubsetEnumeration {
  std::vector<SubsetS> subsets;
  bool truncated = false;
};

// Deterministic list of multiplicatively closed sets, ordered by size and
// then lexicographically.
SubsetEnumeration enumerate_subsets(const RingPtr& ring, SubsetStrategy strategy, std::size_t budget = 100'000);

// S1 x S2 in a product ring.
SubsetS product_subset(const RingPtr& product, const SubsetS& s1, const SubsetS& s2);
// S ⊞ M = {(s, m) : s in S, m in M}.
SubsetS idealization_subset(const RingPtr& idealization, const SubsetS& s);
// {(s, f(s)) : s in S}.
SubsetS amalgamation_subset(const RingPtr& amalgamation, const SubsetS& s);
// ψ(S), validated with the same kind.
SubsetS image_subset(const Hom& hom, const SubsetS& s);

}  // namespace ringlab
