#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ringlab {

using Elem = std::uint32_t;

// A set of ring-element indices over a fixed universe 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, const std::vector<Elem>& elems);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Elem e) const { return bits_.test(e); }
  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  bool subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const ElementSet& other) const { return bits_.intersects(other.bits_); }

  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;

  // Smallest member, or universe() when empty.
  Elem first() const;
  Elem next(Elem after) const;

  std::vector<Elem> elements() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  // Lexicographic order on sorted member lists; used for deterministic sorting.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace ringlab
