#include "ringlab/subsets.hpp"

#include <algorithm>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

// Rings built from the same expression share their element numbering.
bool same_ring(const Ring& a, const Ring& b) { return &a == &b || (a.size() == b.size() && a.describe() == b.describe()); }

}  // namespace

const char* to_string(SubsetKind kind) { return kind == SubsetKind::mult_closed ? "mult-closed" : "m-system"; }

std::string SubsetS::format() const {
  std::string out = "{";
  bool first = true;
  for (Elem e : elements()) {
    if (!first) out += ", ";
    out += ring_->format(e);
    first = false;
  }
  return out + "}";
}

std::optional<std::pair<Elem, Elem>> subset_violation(const Ring& ring, const ElementSet& members, SubsetKind kind) {
  const auto elems = members.elements();
  for (Elem a : elems) {
    for (Elem b : elems) {
      if (kind == SubsetKind::mult_closed) {
        if (!members.contains(ring.mul(a, b))) return std::make_pair(a, b);
        continue;
      }
      bool found = false;
      for (Elem r = 0; r < ring.size() && !found; ++r) found = members.contains(ring.mul(ring.mul(a, r), b));
      if (!found) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

SubsetS validate_subset(RingPtr ring, const ElementSet& members, SubsetKind kind) {
  if (members.universe() != ring->size()) fail(ErrorKind::ring_mismatch, "subset over the wrong universe");
  if (members.empty()) fail(ErrorKind::invalid_parameter, "subset must be nonempty");
  if (auto bad = subset_violation(*ring, members, kind)) {
    const std::string pair = "(" + ring->format(bad->first) + ", " + ring->format(bad->second) + ")";
    if (kind == SubsetKind::mult_closed) {
      fail(ErrorKind::invalid_subset, "not multiplicatively closed: " + ring->format(bad->first) + " * " +
                                          ring->format(bad->second) + " = " +
                                          ring->format(ring->mul(bad->first, bad->second)) + " is missing");
    }
    fail(ErrorKind::invalid_subset, "not an m-system: no r with a*r*b in S for " + pair);
  }
  return SubsetS(std::move(ring), members, kind);
}

SubsetS validate_subset(RingPtr ring, const std::vector<Elem>& members, SubsetKind kind) {
  for (Elem e : members) {
    if (e >= ring->size()) fail(ErrorKind::invalid_parameter, "subset element out of range");
  }
  auto set = ElementSet::of(ring->size(), members);
  return validate_subset(std::move(ring), set, kind);
}

SubsetS generate_mulclosed(RingPtr ring, const std::vector<Elem>& gens) {
  if (gens.empty()) fail(ErrorKind::invalid_parameter, "need at least one generator");
  ElementSet members(ring->size());
  std::vector<Elem> list;
  for (Elem g : gens) {
    if (g >= ring->size()) fail(ErrorKind::invalid_parameter, "generator out of range");
    if (!members.contains(g)) {
      members.insert(g);
      list.push_back(g);
    }
  }
  // Closing under right multiplication by generators yields all products.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem g : gens) {
      const Elem p = ring->mul(list[i], g);
      if (!members.contains(p)) {
        members.insert(p);
        list.push_back(p);
      }
    }
  }
  return validate_subset(std::move(ring), members, SubsetKind::mult_closed);
}

namespace {

void sort_unique(std::vector<SubsetS>& xs) {
  std::sort(xs.begin(), xs.end(), [](const SubsetS& a, const SubsetS& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a.members(), b.members());
  });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

SubsetEnumeration enumerate_subsets(const RingPtr& ring, SubsetStrategy strategy, std::size_t budget) {
  SubsetEnumeration out;
  const Ring& r = *ring;
  auto with_one = [&](const SubsetS& s) {
    ElementSet m = s.members();
    m.insert(*r.one());
    return validate_subset(ring, m, SubsetKind::mult_closed);
  };
  switch (strategy) {
    case SubsetStrategy::singleton_generated:
      for (Elem a = 0; a < r.size(); ++a) {
        auto s = generate_mulclosed(ring, {a});
        if (r.one()) out.subsets.push_back(with_one(s));
        out.subsets.push_back(std::move(s));
      }
      break;
    case SubsetStrategy::with_identity:
      if (!r.one()) break;
      for (Elem a = 0; a < r.size(); ++a) out.subsets.push_back(with_one(generate_mulclosed(ring, {a})));
      break;
    case SubsetStrategy::budgeted_all: {
      if (r.size() > kBudgetedAllLimit) {
        out.truncated = true;
        break;
      }
      const std::uint32_t n = static_cast<std::uint32_t>(r.size());
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        ElementSet m(n);
        for (Elem e = 0; e < n; ++e) {
          if (mask & (1U << e)) m.insert(e);
        }
        if (subset_violation(r, m, SubsetKind::mult_closed)) continue;
        if (out.subsets.size() >= budget) {
          out.truncated = true;
          break;
        }
        out.subsets.push_back(validate_subset(ring, m, SubsetKind::mult_closed));
      }
      break;
    }
  }
  sort_unique(out.subsets);
  return out;
}

SubsetS product_subset(const RingPtr& product, const SubsetS& s1, const SubsetS& s2) {
  const auto* p = dynamic_cast<const ProductRing*>(product.get());
  if (p == nullptr || !same_ring(*p->first(), s1.ring()) || !same_ring(*p->second(), s2.ring())) {
    fail(ErrorKind::ring_mismatch, "product subset needs the factors of " + product->describe());
  }
  ElementSet m(product->size());
  for (Elem a : s1.elements()) {
    for (Elem b : s2.elements()) m.insert(p->pair(a, b));
  }
  const auto kind = s1.kind() == SubsetKind::mult_closed && s2.kind() == SubsetKind::mult_closed
                        ? SubsetKind::mult_closed
                        : SubsetKind::m_system;
  return validate_subset(product, m, kind);
}

SubsetS idealization_subset(const RingPtr& idealization, const SubsetS& s) {
  const auto* r = dynamic_cast<const IdealizationRing*>(idealization.get());
  if (r == nullptr || !same_ring(*r->base(), s.ring())) {
    fail(ErrorKind::ring_mismatch, "idealization subset needs the base ring of " + idealization->describe());
  }
  ElementSet m(idealization->size());
  for (Elem a : s.elements()) {
    for (Elem x = 0; x < r->module().size(); ++x) m.insert(r->pair(a, x));
  }
  return validate_subset(idealization, m, s.kind());
}

SubsetS amalgamation_subset(const RingPtr& amalgamation, const SubsetS& s) {
  const auto* r = dynamic_cast<const AmalgamationRing*>(amalgamation.get());
  if (r == nullptr || !same_ring(*r->base(), s.ring())) {
    fail(ErrorKind::ring_mismatch, "amalgamation subset needs the base ring of " + amalgamation->describe());
  }
  ElementSet m(amalgamation->size());
  for (Elem a : s.elements()) m.insert(r->encode(a, r->target()->zero()));
  return validate_subset(amalgamation, m, s.kind());
}

SubsetS image_subset(const Hom& hom, const SubsetS& s) {
  if (hom.source_ptr() != s.ring_ptr()) fail(ErrorKind::ring_mismatch, "subset is not in the hom source");
  return validate_subset(hom.target_ptr(), hom.image(s.members()), s.kind());
}

}  // namespace ringlab
