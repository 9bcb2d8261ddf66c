#pragma once

#include <memory>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/radicals.hpp"

namespace ringlab {

// Everything the predicates need about one ring, computed once: the ideal
// lattice, both radicals, prime/maximal flags per lattice ideal, the center
// and one representative (the least element) per principal ideal.
class RingAnalysis {
 public:
  explicit RingAnalysis(RingPtr ring, std::size_t budget = kDefaultIdealBudget);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const LatticeIndex& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const IdealSet& jacobson() const { return jacobson_; }
  const IdealSet& prime_radical() const { return prime_radical_.ideal; }
  bool prime_radical_degenerate() const { return prime_radical_.degenerate; }
  bool is_prime(std::size_t lattice_index) const { return prime_[lattice_index]; }
  bool is_maximal(std::size_t lattice_index) const { return maximal_[lattice_index]; }
  const ElementSet& center() const { return center_; }
  const std::vector<Elem>& class_representatives() const { return representatives_; }
  // R·R = {0}: every element is radical, so no proper ideal can avoid 𝒥.
  bool zero_multiplication() const { return zero_multiplication_; }

 private:
  RingPtr ring_;
  LatticePtr lattice_;
  IdealSet jacobson_;
  PrimeRadical prime_radical_;
  std::vector<bool> prime_;
  std::vector<bool> maximal_;
  ElementSet center_;
  std::vector<Elem> representatives_;
  bool zero_multiplication_ = false;
};

using AnalysisPtr = std::shared_ptr<const RingAnalysis>;

AnalysisPtr analyze(RingPtr ring, std::size_t budget = kDefaultIdealBudget);

}  // namespace ringlab
