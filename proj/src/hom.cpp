#include "ringlab/hom.hpp"

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

Hom::Hom(RingPtr source, RingPtr target, std::vector<Elem> map, IdealSet kernel, bool surjective, std::string label)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(std::move(map)),
      kernel_(std::move(kernel)),
      surjective_(surjective),
      label_(std::move(label)) {}

Hom Hom::make(RingPtr source, RingPtr target, std::vector<Elem> map, std::string label) {
  const Ring& s = *source;
  const Ring& t = *target;
  if (map.size() != s.size()) fail(ErrorKind::invalid_hom, "map must have one entry per source element");
  for (Elem v : map) {
    if (v >= t.size()) fail(ErrorKind::invalid_hom, "map value out of range of " + t.describe());
  }
  const auto& gens = s.additive_generators();
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem g : gens) {
      if (map[s.add(a, g)] != t.add(map[a], map[g])) {
        fail(ErrorKind::invalid_hom, "map does not respect addition at (" + s.format(a) + ", " + s.format(g) + ")");
      }
    }
  }
  for (Elem g : gens) {
    for (Elem h : gens) {
      if (map[s.mul(g, h)] != t.mul(map[g], map[h])) {
        fail(ErrorKind::invalid_hom,
             "map does not respect multiplication at (" + s.format(g) + ", " + s.format(h) + ")");
      }
    }
  }
  ElementSet ker(s.size());
  ElementSet hit(t.size());
  for (Elem a = 0; a < s.size(); ++a) {
    if (map[a] == t.zero()) ker.insert(a);
    hit.insert(map[a]);
  }
  const bool surjective = hit.count() == t.size();
  IdealSet kernel = IdealSet::from_members(source, ker);
  return Hom(std::move(source), std::move(target), std::move(map), std::move(kernel), surjective, std::move(label));
}

ElementSet Hom::image(const ElementSet& xs) const {
  ElementSet out(target_->size());
  for (Elem x = xs.first(); x < xs.universe(); x = xs.next(x)) out.insert(map_[x]);
  return out;
}

std::vector<Elem> Hom::image(const std::vector<Elem>& xs) const { return image(ElementSet::of(source_->size(), xs)).elements(); }

ElementSet Hom::preimage(const ElementSet& ys) const {
  ElementSet out(source_->size());
  for (Elem a = 0; a < source_->size(); ++a) {
    if (ys.contains(map_[a])) out.insert(a);
  }
  return out;
}

Hom identity_hom(RingPtr ring) {
  std::vector<Elem> map(ring->size());
  for (Elem a = 0; a < map.size(); ++a) map[a] = a;
  auto copy = ring;
  return Hom::make(std::move(ring), std::move(copy), std::move(map), "id");
}

Hom zn_reduction(RingPtr zn, RingPtr zm) {
  const auto* a = dynamic_cast<const ZnRing*>(zn.get());
  const auto* b = dynamic_cast<const ZnRing*>(zm.get());
  if (a == nullptr || b == nullptr) fail(ErrorKind::invalid_hom, "reduction is defined between rings Z_n only");
  if (a->modulus() % b->modulus() != 0) {
    fail(ErrorKind::invalid_hom, "reduction Z" + std::to_string(a->modulus()) + " -> Z" + std::to_string(b->modulus()) +
                                     " needs " + std::to_string(b->modulus()) + " | " + std::to_string(a->modulus()));
  }
  std::vector<Elem> map(zn->size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = x % b->modulus();
  return Hom::make(std::move(zn), std::move(zm), std::move(map), "mod");
}

Hom zn_reduction(std::uint32_t n, std::uint32_t m) { return zn_reduction(make_zn(n), make_zn(m)); }

}  // namespace ringlab
