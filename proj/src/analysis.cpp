#include "ringlab/analysis.hpp"

#include <algorithm>

#include "ringlab/ring_checks.hpp"

namespace ringlab {

RingAnalysis::RingAnalysis(RingPtr ring, std::size_t budget)
    : ring_(std::move(ring)),
      lattice_(enumerate_ideals(ring_, budget)),
      jacobson_(jacobson_radical(*lattice_)),
      prime_radical_(ringlab::prime_radical(*lattice_)),
      center_(ringlab::center(*ring_)) {
  const auto& l = *lattice_;
  prime_.resize(l.size());
  maximal_.resize(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    prime_[i] = ringlab::is_prime(l[i], l);
    maximal_[i] = ringlab::is_maximal(l[i], l);
  }
  for (const auto& [idx, rep] : l.principal_classes()) representatives_.push_back(rep);
  std::sort(representatives_.begin(), representatives_.end());

  zero_multiplication_ = true;
  for (Elem g : ring_->additive_generators()) {
    for (Elem h : ring_->additive_generators()) {
      if (ring_->mul(g, h) != ring_->zero()) zero_multiplication_ = false;
    }
  }
}

AnalysisPtr analyze(RingPtr ring, std::size_t budget) { return std::make_shared<const RingAnalysis>(std::move(ring), budget); }

}  // namespace ringlab
