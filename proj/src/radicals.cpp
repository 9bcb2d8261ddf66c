#include "ringlab/radicals.hpp"

#include "ringlab/error.hpp"
#include "ringlab/ring_checks.hpp"

namespace ringlab {

namespace {

void require_complete(const LatticeIndex& lattice) {
  if (!lattice.complete()) {
    fail(ErrorKind::capacity_exceeded, "ideal lattice of " + lattice.ring().describe() + " is incomplete");
  }
}

}  // namespace

IdealSet jacobson_radical(const LatticeIndex& lattice) {
  require_complete(lattice);
  // The sum of all nilpotent ideals is nilpotent, so it is the largest one.
  for (std::size_t i = lattice.size(); i-- > 0;) {
    if (is_nilpotent(lattice[i])) return lattice[i];
  }
  return lattice[lattice.zero_index()];
}

PrimeRadical prime_radical(const LatticeIndex& lattice) {
  require_complete(lattice);
  ElementSet meet = ElementSet::full(lattice.ring().size());
  bool any = false;
  for (const auto& p : lattice.ideals()) {
    if (is_prime(p, lattice)) {
      meet = meet & p.members();
      any = true;
    }
  }
  return {IdealSet::from_members(lattice.ring_ptr(), meet), !any};
}

JacobsonStar jacobson_star(const IdealSet& ideal, const LatticeIndex& lattice) {
  require_complete(lattice);
  ElementSet meet = ElementSet::full(lattice.ring().size());
  bool any = false;
  for (const auto& m : lattice.ideals()) {
    if (ideal.subset_of(m) && is_maximal(m, lattice)) {
      meet = meet & m.members();
      any = true;
    }
  }
  return {IdealSet::from_members(lattice.ring_ptr(), meet), !any};
}

ElementSet units(const Ring& ring) {
  if (!ring.has_identity()) fail(ErrorKind::not_applicable, ring.describe() + " has no identity, so no units");
  ElementSet out(ring.size());
  for (Elem u = 0; u < ring.size(); ++u) {
    if (is_unit(ring, u)) out.insert(u);
  }
  return out;
}

ElementSet quasi_regular_set(const Ring& ring) {
  ElementSet out(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) {
    for (Elem y = 0; y < ring.size(); ++y) {
      if (ring.add(ring.add(y, x), ring.mul(y, x)) == ring.zero()) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

RadicalReport jacobson_crosscheck(const LatticeIndex& lattice) {
  const Ring& r = lattice.ring();
  RadicalReport report{jacobson_radical(lattice), prime_radical(lattice).ideal, {"largest-nilpotent-ideal"}, true};
  if (r.size() > kCrosscheckLimit) return report;

  auto disagree = [&](const std::string& method, const ElementSet& got) {
    if (!(got == report.jacobson.members())) {
      report.agreement = false;
      fail(ErrorKind::internal_inconsistency, "Jacobson radical of " + r.describe() + " by " + method +
                                                  " has " + std::to_string(got.count()) + " elements, expected " +
                                                  std::to_string(report.jacobson.size()));
    }
  };

  // Largest ideal inside Q: the elements whose principal ideal stays in Q.
  const ElementSet q = quasi_regular_set(r);
  ElementSet by_q(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    if (lattice.principal(x).members().subset_of(q)) by_q.insert(x);
  }
  report.methods_used.push_back("quasi-regular");
  disagree("quasi-regularity", by_q);

  if (r.has_identity()) {
    const Elem one = *r.one();
    const ElementSet u = units(r);
    ElementSet by_units(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
      bool ok = true;
      for (Elem y = 0; y < r.size() && ok; ++y) ok = u.contains(r.add(one, r.mul(y, x)));
      if (ok) by_units.insert(x);
    }
    report.methods_used.push_back("units");
    disagree("units", by_units);
  }
  return report;
}

}  // namespace ringlab
