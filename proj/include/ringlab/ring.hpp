#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/literal.hpp"

namespace ringlab {

// Largest ring the index type is allowed to address.
inline constexpr std::size_t kMaxRingSize = std::size_t{1} << 24;
// Rings up to this size materialize full Cayley tables at construction.
inline constexpr std::size_t kTableThreshold = 4096;

enum class Backend {
  table,
  zn,
  product,
  matrix,
  quotient,
  idealization,
  amalgamation,
  truncated_poly,
  ideal_as_ring,
};

const char* to_string(Backend b);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A finite associative ring whose elements are the indices 0..size()-1.
//
// Subclasses supply the arithmetic; the base class caches Cayley tables for
// small rings, an additive generating set, the identity (if any) and an exact
// commutativity flag. Instances are immutable after construction.
class Ring {
 public:
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  std::size_t size() const { return size_; }
  Elem zero() const { return zero_; }
  std::optional<Elem> one() const { return one_; }
  bool has_identity() const { return one_.has_value(); }
  bool is_commutative() const { return commutative_; }
  Backend backend() const { return backend_; }
  bool has_tables() const { return !mul_table_.empty(); }

  Elem add(Elem a, Elem b) const {
    return add_table_.empty() ? add_impl(a, b) : add_table_[std::size_t{a} * size_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_table_.empty() ? mul_impl(a, b) : mul_table_[std::size_t{a} * size_ + b];
  }
  Elem neg(Elem a) const { return neg_table_.empty() ? neg_impl(a) : neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  // Integer multiple k·a.
  Elem times(std::int64_t k, Elem a) const;

  // Small set whose integer span is the whole additive group. Every bilinear
  // property (commuting, annihilating, landing in an ideal) only needs to be
  // checked on these.
  const std::vector<Elem>& additive_generators() const { return additive_gens_; }

  // Parseable expression for rings built from expressions or constructions.
  const std::string& describe() const { return description_; }

  virtual ElementLiteral to_literal(Elem e) const;
  // Integer literals denote k·1 in rings with identity and raw indices otherwise.
  virtual Elem from_literal(const ElementLiteral& lit) const;
  std::string format(Elem e) const { return to_string(to_literal(e)); }

 protected:
  Ring(Backend backend, std::size_t size, Elem zero);

  virtual Elem add_impl(Elem a, Elem b) const = 0;
  virtual Elem mul_impl(Elem a, Elem b) const = 0;
  virtual Elem neg_impl(Elem a) const = 0;

  // Must be called once at the end of every subclass constructor.
  void finalize(std::optional<Elem> known_one, std::string description);

 private:
  Backend backend_;
  std::size_t size_;
  Elem zero_;
  std::optional<Elem> one_;
  bool commutative_ = false;
  std::string description_;
  std::vector<Elem> additive_gens_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
};

// Growing additive subgroup; `adjoin` keeps it closed under + and -.
class AdditiveSpan {
 public:
  explicit AdditiveSpan(const Ring& ring);

  // Adds the cyclic subgroup of x; returns false when x was already a member.
  bool adjoin(Elem x);

  bool contains(Elem x) const { return members_.contains(x); }
  std::size_t size() const { return elements_.size(); }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }

 private:
  const Ring* ring_;
  ElementSet members_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

}  // namespace ringlab
