#pragma once

#include <string>
#include <vector>

#include "ringlab/ideal_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// A verified ring homomorphism between finite rings.
class Hom {
 public:
  // Throws invalid-hom if `map` does not respect + and ·.
  static Hom make(RingPtr source, RingPtr target, std::vector<Elem> map, std::string label = "map");

  const Ring& source() const { return *source_; }
  const Ring& target() const { return *target_; }
  const RingPtr& source_ptr() const { return source_; }
  const RingPtr& target_ptr() const { return target_; }
  const std::string& label() const { return label_; }

  Elem operator()(Elem a) const { return map_[a]; }
  const std::vector<Elem>& table() const { return map_; }
  const IdealSet& kernel() const { return kernel_; }
  bool is_surjective() const { return surjective_; }

  ElementSet image(const ElementSet& xs) const;
  ElementSet preimage(const ElementSet& ys) const;
  std::vector<Elem> image(const std::vector<Elem>& xs) const;

 private:
  Hom(RingPtr source, RingPtr target, std::vector<Elem> map, IdealSet kernel, bool surjective, std::string label);

  RingPtr source_;
  RingPtr target_;
  std::vector<Elem> map_;
  IdealSet kernel_;
  bool surjective_;
  std::string label_;
};

Hom identity_hom(RingPtr ring);
// Reduction Z_n -> Z_m for m | n.
Hom zn_reduction(RingPtr zn, RingPtr zm);
Hom zn_reduction(std::uint32_t n, std::uint32_t m);

}  // namespace ringlab
