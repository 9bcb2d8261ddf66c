#include "ringlab/element_set.hpp"

#include <iterator>

namespace ringlab {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

ElementSet ElementSet::of(std::size_t universe, const std::vector<Elem>& elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.insert(e);
  return s;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r;
  r.bits_ = bits_ & other.bits_;
  return r;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet r;
  r.bits_ = bits_ | other.bits_;
  return r;
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  ElementSet r;
  r.bits_ = bits_ - other.bits_;
  return r;
}

Elem ElementSet::first() const {
  auto pos = bits_.find_first();
  return pos == boost::dynamic_bitset<std::uint64_t>::npos ? static_cast<Elem>(universe())
                                                             : static_cast<Elem>(pos);
}

Elem ElementSet::next(Elem after) const {
  auto pos = bits_.find_next(after);
  return pos == boost::dynamic_bitset<std::uint64_t>::npos ? static_cast<Elem>(universe())
                                                             : static_cast<Elem>(pos);
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count());
  for (Elem e = first(); e < universe(); e = next(e)) out.push_back(e);
  return out;
}

std::size_t ElementSet::hash() const {
  std::vector<std::uint64_t> blocks;
  blocks.reserve(bits_.num_blocks());
  boost::to_block_range(bits_, std::back_inserter(blocks));
  std::uint64_t h = 0xcbf29ce484222325ULL ^ bits_.size();
  for (auto b : blocks) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  Elem x = a.first();
  Elem y = b.first();
  while (x < a.universe() && y < b.universe()) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x >= a.universe() && y < b.universe();
}

}  // namespace ringlab
