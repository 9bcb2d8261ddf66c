#include "ringlab/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "ringlab/error.hpp"
#include "ringlab/ring_checks.hpp"

namespace ringlab {

namespace {

void same_ring(const IdealSet& a, const IdealSet& b) {
  if (a.ring_ptr() != b.ring_ptr()) fail(ErrorKind::ring_mismatch, "ideals belong to different rings");
}

// Additive order of x.
std::uint64_t additive_order(const Ring& r, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != r.zero(); y = r.add(y, x)) ++k;
  return k;
}

// A few cheap units: c·1 for small c prime to the characteristic, and
// g, 1+g, 1-g for additive generators g. Two-sided multiplication by units
// preserves principal ideals.
std::vector<Elem> small_units(const Ring& r) {
  std::vector<Elem> units;
  if (!r.one()) return units;
  const Elem one = *r.one();
  auto consider = [&](Elem u) {
    if (u == one || std::find(units.begin(), units.end(), u) != units.end()) return;
    if (is_unit(r, u)) units.push_back(u);
  };
  const std::uint64_t characteristic = additive_order(r, one);
  Elem c = one;
  for (std::uint64_t k = 2; k < characteristic && units.size() < 8; ++k) {
    c = r.add(c, one);
    if (std::gcd(k, characteristic) == 1) consider(c);
  }
  for (Elem g : r.additive_generators()) {
    consider(g);
    consider(r.add(one, g));
    consider(r.sub(one, g));
  }
  return units;
}

}  // namespace

IdealSet ideal_generate(const RingPtr& ring, const std::vector<Elem>& gens) {
  const Ring& r = *ring;
  AdditiveSpan span(r);
  std::vector<Elem> stack;
  for (Elem g : gens) {
    if (g >= r.size()) fail(ErrorKind::invalid_parameter, "generator index out of range");
    stack.push_back(g);
  }
  const auto& ring_gens = r.additive_generators();
  while (!stack.empty()) {
    const Elem x = stack.back();
    stack.pop_back();
    if (!span.adjoin(x)) continue;
    for (Elem g : ring_gens) {
      const Elem left = r.mul(g, x);
      if (!span.contains(left)) stack.push_back(left);
      const Elem right = r.mul(x, g);
      if (!span.contains(right)) stack.push_back(right);
    }
  }
  return IdealSet::from_span(ring, span);
}

// ---------------------------------------------------------------- lattice

LatticeIndex::LatticeIndex(RingPtr ring, std::vector<IdealSet> ideals, std::vector<std::size_t> principal,
                           bool complete)
    : ring_(std::move(ring)), ideals_(std::move(ideals)), principal_(std::move(principal)), complete_(complete) {
  for (std::size_t i = 0; i < ideals_.size(); ++i) lookup_.emplace(ideals_[i].members(), i);
  std::vector<bool> seen(ideals_.size(), false);
  for (Elem a = 0; a < principal_.size(); ++a) {
    if (!seen[principal_[a]]) {
      seen[principal_[a]] = true;
      principal_classes_.emplace_back(principal_[a], a);
    }
  }
}

std::optional<std::size_t> LatticeIndex::find(const ElementSet& members) const {
  auto it = lookup_.find(members);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t LatticeIndex::index_of(const IdealSet& ideal) const {
  auto i = find(ideal.members());
  if (!i) fail(ErrorKind::internal_inconsistency, "ideal missing from lattice of " + ring_->describe());
  return *i;
}

LatticePtr enumerate_ideals(const RingPtr& ring, std::size_t budget, bool allow_partial) {
  const Ring& r = *ring;
  const auto n = static_cast<Elem>(r.size());
  std::vector<IdealSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto insert = [&](IdealSet ideal) {
    auto [it, fresh] = index.emplace(ideal.members(), found.size());
    if (fresh) found.push_back(std::move(ideal));
    return it->second;
  };

  // <ka> = <a> whenever k is prime to the additive order of a, and
  // <uav> = <a> for units u, v; each such class is generated only once.
  constexpr std::size_t unset = ~std::size_t{0};
  std::vector<std::size_t> principal(n, unset);
  const auto units = small_units(r);
  std::vector<Elem> orbit;
  for (Elem a = 0; a < n; ++a) {
    if (principal[a] != unset) continue;
    const std::size_t idx = insert(ideal_generate(ring, {a}));
    principal[a] = idx;
    const std::uint64_t ord = additive_order(r, a);
    Elem ka = a;
    for (std::uint64_t k = 2; k < ord; ++k) {
      ka = r.add(ka, a);
      if (std::gcd(k, ord) == 1) principal[ka] = idx;
    }
    orbit.assign(1, a);
    while (!orbit.empty()) {
      const Elem y = orbit.back();
      orbit.pop_back();
      for (Elem u : units) {
        for (Elem z : {r.mul(u, y), r.mul(y, u)}) {
          if (principal[z] == unset) {
            principal[z] = idx;
            orbit.push_back(z);
          }
        }
      }
    }
  }

  bool complete = true;
  for (std::size_t i = 0; i < found.size() && complete; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].subset_of(found[i]) || found[i].subset_of(found[j])) continue;
      insert(ideal_sum(found[i], found[j]));
      if (found.size() > budget) {
        if (!allow_partial) {
          fail(ErrorKind::capacity_exceeded, "more than " + std::to_string(budget) + " ideals in " + r.describe());
        }
        complete = false;
        break;
      }
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (found[x].size() != found[y].size()) return found[x].size() < found[y].size();
    return lex_less(found[x].members(), found[y].members());
  });
  std::vector<std::size_t> rank(found.size());
  std::vector<IdealSet> sorted;
  sorted.reserve(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    sorted.push_back(found[order[i]]);
  }
  for (auto& p : principal) p = rank[p];
  return std::make_shared<const LatticeIndex>(ring, std::move(sorted), std::move(principal), complete);
}

// ---------------------------------------------------------------- arithmetic

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b) {
  same_ring(a, b);
  const IdealSet& big = a.size() >= b.size() ? a : b;
  const IdealSet& small = a.size() >= b.size() ? b : a;
  AdditiveSpan span(a.ring());
  for (Elem g : big.generators()) span.adjoin(g);
  for (Elem g : small.generators()) span.adjoin(g);
  return IdealSet::from_span(a.ring_ptr(), span);
}

IdealSet ideal_product(const IdealSet& a, const IdealSet& b) {
  same_ring(a, b);
  const Ring& r = a.ring();
  AdditiveSpan span(r);
  for (Elem x : a.generators()) {
    for (Elem y : b.generators()) span.adjoin(r.mul(x, y));
  }
  return IdealSet::from_span(a.ring_ptr(), span);
}

IdealSet ideal_intersect(const IdealSet& a, const IdealSet& b) {
  same_ring(a, b);
  return IdealSet::from_members(a.ring_ptr(), a.members() & b.members());
}

bool product_within(const IdealSet& a, const IdealSet& b, const ElementSet& c) {
  const Ring& r = a.ring();
  for (Elem x : a.generators()) {
    for (Elem y : b.generators()) {
      if (!c.contains(r.mul(x, y))) return false;
    }
  }
  return true;
}

bool product_within(const IdealSet& a, const IdealSet& b, const IdealSet& c) {
  same_ring(a, b);
  same_ring(a, c);
  return product_within(a, b, c.members());
}

IdealSet ideal_power(const IdealSet& a, std::size_t k) {
  if (k == 0) fail(ErrorKind::invalid_parameter, "ideal powers start at 1");
  IdealSet p = a;
  for (std::size_t i = 1; i < k; ++i) {
    IdealSet next = ideal_product(p, a);
    if (next == p) break;
    p = std::move(next);
  }
  return p;
}

bool is_nilpotent(const IdealSet& a) {
  IdealSet p = a;
  while (!p.is_zero()) {
    IdealSet next = ideal_product(p, a);
    if (next == p) return false;
    p = std::move(next);
  }
  return true;
}

// ---------------------------------------------------------------- colon ideals

namespace {

std::vector<Elem> span_generators(const Ring& r, const std::vector<Elem>& t) {
  if (t.empty()) fail(ErrorKind::invalid_parameter, "colon needs a nonempty set");
  AdditiveSpan span(r);
  for (Elem x : t) {
    if (x >= r.size()) fail(ErrorKind::invalid_parameter, "element index out of range");
    span.adjoin(x);
  }
  return span.generators();
}

}  // namespace

ElementSet colon_set(const IdealSet& p, const std::vector<Elem>& t) {
  const Ring& r = p.ring();
  const auto gens = span_generators(r, t);
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool inside = true;
    for (Elem g : gens) {
      if (!p.contains(r.mul(x, g))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(x);
  }
  return out;
}

IdealSet colon(const IdealSet& p, const std::vector<Elem>& t) { return IdealSet::from_members(p.ring_ptr(), colon_set(p, t)); }

ElementSet colon_left_set(const IdealSet& p, const std::vector<Elem>& t) {
  const Ring& r = p.ring();
  const auto gens = span_generators(r, t);
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool inside = true;
    for (Elem g : gens) {
      if (!p.contains(r.mul(g, x))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(x);
  }
  return out;
}

// ---------------------------------------------------------------- properties

bool is_maximal(const IdealSet& ideal, const LatticeIndex& lattice) {
  if (!ideal.is_proper()) return false;
  for (const auto& k : lattice.ideals()) {
    if (k.is_proper() && k.size() > ideal.size() && ideal.subset_of(k)) return false;
  }
  return true;
}

bool is_prime(const IdealSet& ideal, const LatticeIndex& lattice) {
  if (!ideal.is_proper()) return false;
  std::vector<const IdealSet*> outside;
  for (const auto& a : lattice.ideals()) {
    if (!a.subset_of(ideal)) outside.push_back(&a);
  }
  for (const auto* a : outside) {
    for (const auto* b : outside) {
      if (product_within(*a, *b, ideal.members())) return false;
    }
  }
  return true;
}

bool is_superfluous(const IdealSet& ideal, const LatticeIndex& lattice) {
  const std::size_t n = ideal.ring().size();
  for (const auto& b : lattice.ideals()) {
    if (!b.is_proper()) continue;
    // |I + B| = |I||B| / |I ∩ B| for additive subgroups.
    const std::size_t meet = (ideal.members() & b.members()).count();
    if (ideal.size() * b.size() == n * meet) return false;
  }
  return true;
}

bool is_modular(const IdealSet& ideal) {
  const Ring& r = ideal.ring();
  if (r.has_identity()) return true;
  const auto& gens = r.additive_generators();
  for (Elem e = 0; e < r.size(); ++e) {
    bool ok = true;
    for (Elem g : gens) {
      if (!ideal.contains(r.sub(r.mul(e, g), g)) || !ideal.contains(r.sub(r.mul(g, e), g))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

IdealFlags ideal_properties(const IdealSet& ideal, const LatticeIndex& lattice) {
  if (ideal.ring_ptr() != lattice.ring_ptr()) fail(ErrorKind::ring_mismatch, "ideal and lattice differ in ring");
  IdealFlags f;
  f.proper = ideal.is_proper();
  f.nilpotent = is_nilpotent(ideal);
  f.modular = is_modular(ideal);
  if (lattice.complete()) {
    f.maximal = is_maximal(ideal, lattice);
    f.prime = is_prime(ideal, lattice);
    f.superfluous = is_superfluous(ideal, lattice);
  }
  return f;
}

std::vector<Elem> minimal_generating_set(const IdealSet& ideal, std::size_t bound) {
  const RingPtr& ring = ideal.ring_ptr();
  std::vector<Elem> gens;
  ElementSet current = IdealSet::zero(ring).members();
  for (Elem x = ideal.members().first(); x < ideal.members().universe() && !(current == ideal.members());
       x = ideal.members().next(x)) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    if (gens.size() > bound) {
      fail(ErrorKind::capacity_exceeded, "ideal needs more than " + std::to_string(bound) + " generators");
    }
    current = ideal_generate(ring, gens).members();
  }
  for (std::size_t i = gens.size(); i-- > 0;) {
    if (gens.size() == 1) break;
    std::vector<Elem> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (ideal_generate(ring, rest).members() == ideal.members()) gens = std::move(rest);
  }
  if (gens.empty()) gens.push_back(ring->zero());
  return gens;
}

}  // namespace ringlab
