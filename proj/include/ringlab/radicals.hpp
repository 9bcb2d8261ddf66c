#pragma once

#include <string>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ideal_set.hpp"

namespace ringlab {

// Largest nilpotent ideal of the lattice (the Jacobson radical of a finite ring).
IdealSet jacobson_radical(const LatticeIndex& lattice);

// Intersection of the prime ideals; R itself when there is none.
struct PrimeRadical {
  IdealSet ideal;
  bool degenerate = false;
};
PrimeRadical prime_radical(const LatticeIndex& lattice);

// Intersection of the maximal ideals containing I.
struct JacobsonStar {
  IdealSet ideal;
  bool degenerate = false;
};
JacobsonStar jacobson_star(const IdealSet& ideal, const LatticeIndex& lattice);

// Throws not-applicable without an identity.
ElementSet units(const Ring& ring);

// {x : y + x + yx = 0 for some y}.
ElementSet quasi_regular_set(const Ring& ring);

inline constexpr std::size_t kCrosscheckLimit = 4096;

struct RadicalReport {
  IdealSet jacobson;
  IdealSet prime_radical;
  std::vector<std::string> methods_used;
  bool agreement = true;
};

// Recomputes J by the quasi-regular and (with identity) unit characterizations
// and throws internal-inconsistency on any disagreement.
RadicalReport jacobson_crosscheck(const LatticeIndex& lattice);

}  // namespace ringlab
