#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ideal_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr std::size_t kDefaultIdealBudget = 100'000;

// Smallest two-sided ideal containing `gens`.
IdealSet ideal_generate(const RingPtr& ring, const std::vector<Elem>& gens);

// All two-sided ideals of a ring, sorted by size and then lexicographically,
// so index 0 is {0} and the last index is R.
class LatticeIndex {
 public:
  LatticeIndex(RingPtr ring, std::vector<IdealSet> ideals, std::vector<std::size_t> principal, bool complete);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t size() const { return ideals_.size(); }
  const IdealSet& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<IdealSet>& ideals() const { return ideals_; }
  bool complete() const { return complete_; }

  std::size_t zero_index() const { return 0; }
  std::size_t whole_index() const { return ideals_.size() - 1; }
  // Index of the principal ideal <a>.
  std::size_t principal_index(Elem a) const { return principal_[a]; }
  const IdealSet& principal(Elem a) const { return ideals_[principal_[a]]; }
  std::optional<std::size_t> find(const ElementSet& members) const;
  std::size_t index_of(const IdealSet& ideal) const;
  // Distinct principal ideals, each with its least generating element.
  const std::vector<std::pair<std::size_t, Elem>>& principal_classes() const { return principal_classes_; }

 private:
  RingPtr ring_;
  std::vector<IdealSet> ideals_;
  std::vector<std::size_t> principal_;
  std::vector<std::pair<std::size_t, Elem>> principal_classes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  bool complete_;
};

using LatticePtr = std::shared_ptr<const LatticeIndex>;

// Join-closure of the principal ideals. Throws capacity-exceeded when more
// than `budget` ideals appear, unless `allow_partial` is set, in which case
// the result is flagged incomplete.
LatticePtr enumerate_ideals(const RingPtr& ring, std::size_t budget = kDefaultIdealBudget, bool allow_partial = false);

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b);
IdealSet ideal_product(const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersect(const IdealSet& a, const IdealSet& b);
// AB ⊆ C, decided on additive generators.
bool product_within(const IdealSet& a, const IdealSet& b, const IdealSet& c);
bool product_within(const IdealSet& a, const IdealSet& b, const ElementSet& c);
// A^k for k >= 1.
IdealSet ideal_power(const IdealSet& a, std::size_t k);
bool is_nilpotent(const IdealSet& a);

// {x : xT ⊆ P}. Always a left ideal; `colon` additionally requires the result
// to be a two-sided ideal and throws invalid-ideal otherwise.
ElementSet colon_set(const IdealSet& p, const std::vector<Elem>& t);
IdealSet colon(const IdealSet& p, const std::vector<Elem>& t);
// {x : Tx ⊆ P}.
ElementSet colon_left_set(const IdealSet& p, const std::vector<Elem>& t);

struct IdealFlags {
  bool proper = false;
  std::optional<bool> maximal;
  std::optional<bool> prime;
  bool nilpotent = false;
  std::optional<bool> superfluous;
  bool modular = false;
};

IdealFlags ideal_properties(const IdealSet& ideal, const LatticeIndex& lattice);
bool is_prime(const IdealSet& ideal, const LatticeIndex& lattice);
bool is_maximal(const IdealSet& ideal, const LatticeIndex& lattice);
bool is_superfluous(const IdealSet& ideal, const LatticeIndex& lattice);
bool is_modular(const IdealSet& ideal);

// Greedy generating set in index order, then pruned of redundant members.
std::vector<Elem> minimal_generating_set(const IdealSet& ideal, std::size_t bound = 64);

}  // namespace ringlab
