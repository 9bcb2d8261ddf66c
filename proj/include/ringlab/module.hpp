#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// A finite left module over a ring, given by explicit tables.
class Module {
 public:
  // Z_order as a module over Z_n (order must divide n); r·m = (r mod order)·m.
  static Module cyclic(RingPtr ring, std::uint32_t order);
  // Tables are row-major: add[m*size+n], action[r*size+m]. Validates the
  // group and module axioms; throws invalid-module with a witness.
  static Module from_tables(RingPtr ring, std::size_t size, std::vector<Elem> add, std::vector<Elem> action,
                            Elem zero);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::size_t size() const { return size_; }
  Elem zero() const { return zero_; }
  Elem add(Elem m, Elem n) const { return add_[std::size_t{m} * size_ + n]; }
  Elem neg(Elem m) const { return neg_[m]; }
  Elem act(Elem r, Elem m) const { return action_[std::size_t{r} * size_ + m]; }
  std::optional<std::uint32_t> cyclic_order() const { return cyclic_order_; }
  std::string describe() const;

 private:
  Module() = default;
  void validate();

  RingPtr ring_;
  std::size_t size_ = 0;
  Elem zero_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> action_;
  std::optional<std::uint32_t> cyclic_order_;
};

}  // namespace ringlab
