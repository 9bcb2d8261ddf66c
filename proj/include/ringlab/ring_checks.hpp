#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr std::uint64_t kDefaultAxiomSeed = 0x5EED2024ULL;
inline constexpr std::uint64_t kDefaultAxiomSamples = 1'000'000;
inline constexpr std::size_t kExhaustiveAxiomLimit = 256;

enum class AxiomEffort { automatic, exhaustive, sampled };

struct AxiomReport {
  bool passed = true;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t triples = 0;
  // Name of the first failing law and the triple (a,b,c) it failed on.
  std::string law;
  std::array<Elem, 3> witness{};
};

// Checks the abelian group laws, associativity, both distributive laws and
// the identity (when present). Laws are checked one after another, each over
// triples in lexicographic order, so the reported witness is the first
// failing triple of the first failing law.
AxiomReport ring_axioms_check(const Ring& ring, AxiomEffort effort = AxiomEffort::automatic,
                              std::uint64_t seed = kDefaultAxiomSeed, std::uint64_t samples = kDefaultAxiomSamples);

// u is a unit iff some power of u equals 1; needs an identity.
bool is_unit(const Ring& ring, Elem u);

// {x : xr = rx for all r}.
ElementSet center(const Ring& ring);

}  // namespace ringlab
