#include "ringlab/ring_checks.hpp"

#include <functional>
#include <random>

namespace ringlab {

namespace {

using Law = std::function<bool(Elem, Elem, Elem)>;

struct NamedLaw {
  const char* name;
  Law holds;
  int arity = 3;
};

std::vector<NamedLaw> laws_of(const Ring& r) {
  std::vector<NamedLaw> laws;
  laws.push_back({"additive associativity", [&r](Elem a, Elem b, Elem c) {
                    return r.add(r.add(a, b), c) == r.add(a, r.add(b, c));
                  }});
  laws.push_back({"additive commutativity", [&r](Elem a, Elem b, Elem) { return r.add(a, b) == r.add(b, a); }, 2});
  laws.push_back({"additive identity", [&r](Elem a, Elem, Elem) { return r.add(a, r.zero()) == a; }, 1});
  laws.push_back({"additive inverse", [&r](Elem a, Elem, Elem) { return r.add(a, r.neg(a)) == r.zero(); }, 1});
  laws.push_back({"multiplicative associativity", [&r](Elem a, Elem b, Elem c) {
                    return r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c));
                  }});
  laws.push_back({"left distributivity", [&r](Elem a, Elem b, Elem c) {
                    return r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c));
                  }});
  laws.push_back({"right distributivity", [&r](Elem a, Elem b, Elem c) {
                    return r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
                  }});
  if (r.one()) {
    const Elem one = *r.one();
    laws.push_back({"multiplicative identity",
                    [&r, one](Elem a, Elem, Elem) { return r.mul(one, a) == a && r.mul(a, one) == a; }, 1});
  }
  if (r.is_commutative()) {
    laws.push_back({"commutativity", [&r](Elem a, Elem b, Elem) { return r.mul(a, b) == r.mul(b, a); }, 2});
  }
  return laws;
}

}  // namespace

AxiomReport ring_axioms_check(const Ring& ring, AxiomEffort effort, std::uint64_t seed, std::uint64_t samples) {
  AxiomReport report;
  const auto n = static_cast<Elem>(ring.size());
  const bool exhaustive =
      effort == AxiomEffort::exhaustive || (effort == AxiomEffort::automatic && ring.size() <= kExhaustiveAxiomLimit);
  const auto laws = laws_of(ring);

  if (exhaustive) {
    for (const auto& law : laws) {
      const Elem nb = law.arity >= 2 ? n : 1;
      const Elem nc = law.arity >= 3 ? n : 1;
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < nb; ++b) {
          for (Elem c = 0; c < nc; ++c) {
            ++report.triples;
            if (!law.holds(a, b, c)) {
              report.passed = false;
              report.law = law.name;
              report.witness = {a, b, c};
              return report;
            }
          }
        }
      }
    }
    return report;
  }

  report.sampled = true;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Elem a = pick(rng);
    const Elem b = pick(rng);
    const Elem c = pick(rng);
    ++report.triples;
    for (const auto& law : laws) {
      if (!law.holds(a, b, c)) {
        report.passed = false;
        report.law = law.name;
        report.witness = {a, b, c};
        return report;
      }
    }
  }
  return report;
}

bool is_unit(const Ring& ring, Elem u) {
  if (!ring.one()) return false;
  // Brent's cycle search on u, u^2, u^3, ...; u is a unit iff u^period = 1.
  std::uint64_t power = 1;
  std::uint64_t period = 1;
  Elem tortoise = u;
  Elem hare = ring.mul(u, u);
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = ring.mul(hare, u);
    ++period;
  }
  Elem x = u;
  for (std::uint64_t i = 1; i < period; ++i) x = ring.mul(x, u);
  return x == *ring.one();
}

ElementSet center(const Ring& ring) {
  ElementSet out(ring.size());
  const auto& gens = ring.additive_generators();
  for (Elem x = 0; x < ring.size(); ++x) {
    bool central = true;
    for (Elem g : gens) {
      if (ring.mul(x, g) != ring.mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) out.insert(x);
  }
  return out;
}

}  // namespace ringlab
