#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/analysis.hpp"
#include "ringlab/ideal_set.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

enum class Predicate { j, n, s_prime, s_n, s_j, right_s_prime, right_s_j };
enum class Quantifier { fixed_s, per_pair };
enum class Method { elementwise, lattice };

const char* to_string(Predicate p);
const char* to_string(Quantifier q);
const char* to_string(Method m);
std::optional<Predicate> parse_predicate(std::string_view text);
bool uses_subset(Predicate p);

// Inside the elementwise limit, right S-𝒥 checks may scan all element pairs.
inline constexpr std::size_t kElementwiseLimit = 300;

// A violating pair: two ring elements, or two ideals given by lattice index.
struct PairWitness {
  enum class Kind { elements, ideals };
  Kind kind = Kind::elements;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct SViolation {
  Elem s = 0;
  PairWitness pair;
};

struct CheckResult {
  Predicate predicate = Predicate::j;
  bool verdict = false;
  std::optional<Elem> witness_s;
  std::optional<PairWitness> counterexample;
  // Fixed-s mode: the smallest violation of every s tried before the verdict
  // was settled, in increasing s.
  std::vector<SViolation> violations;
  Quantifier mode = Quantifier::fixed_s;
  Method method = Method::elementwise;
};

// 𝒥-ideal: ab ∈ I (aRb ⊆ I when R is noncommutative) and a ∉ 𝒥(R) force b ∈ I.
CheckResult is_J_ideal(const RingAnalysis& a, const IdealSet& i);
// Commutative; β(R) in place of 𝒥(R).
CheckResult is_n_ideal(const RingAnalysis& a, const IdealSet& i);
// Commutative; ∃s ∀a,b: ab ∈ I ⟹ sa ∈ I or sb ∈ I.
CheckResult is_S_prime(const RingAnalysis& a, const IdealSet& i, const SubsetS& s,
                       Quantifier mode = Quantifier::fixed_s);
// Commutative; ∃s ∀a,b: ab ∈ I ⟹ sa ∈ β(R) or sb ∈ I.
CheckResult is_S_n_ideal(const RingAnalysis& a, const IdealSet& i, const SubsetS& s,
                         Quantifier mode = Quantifier::fixed_s);
// Commutative; ∃s ∀a,b: ab ∈ I ⟹ sa ∈ 𝒥(R) or sb ∈ I.
CheckResult is_S_J_ideal(const RingAnalysis& a, const IdealSet& i, const SubsetS& s,
                         Quantifier mode = Quantifier::fixed_s);
// ∃s ∀ ideals I,K: IK ⊆ P ⟹ I⟨s⟩ ⊆ P or K⟨s⟩ ⊆ P.
CheckResult is_right_S_prime(const RingAnalysis& a, const IdealSet& p, const SubsetS& s,
                             Method method = Method::lattice, Quantifier mode = Quantifier::fixed_s);
// ∃s ∀ ideals I,K: IK ⊆ P ⟹ I⟨s⟩ ⊆ 𝒥(R) or K⟨s⟩ ⊆ P. The elementwise method
// uses the form xRy ⊆ P ⟹ x⟨s⟩ ⊆ 𝒥(R) or y⟨s⟩ ⊆ P and needs an identity.
CheckResult is_right_S_J_ideal(const RingAnalysis& a, const IdealSet& p, const SubsetS& s,
                               Method method = Method::lattice, Quantifier mode = Quantifier::fixed_s);

struct CheckOptions {
  Quantifier mode = Quantifier::fixed_s;
  std::optional<Method> method;
};

// Dispatch by predicate; `s` may be null for j and n.
CheckResult run_check(const RingAnalysis& a, Predicate p, const IdealSet& i, const SubsetS* s,
                      const CheckOptions& options = {});

// Smallest violation of the inner condition for one fixed s (ignored for j
// and n), or nullopt when s witnesses the predicate.
std::optional<PairWitness> violation_for(const RingAnalysis& a, Predicate p, const IdealSet& i, const SubsetS* s,
                                         std::optional<Elem> s_value, Method method);

// Does the pair violate the inner condition for this s?
bool pair_violates(const RingAnalysis& a, Predicate p, const IdealSet& i, std::optional<Elem> s_value,
                   const PairWitness& pair);

// Ks ⊆ F ⊆ K with F generated by Ks; in a finite ring this always holds.
struct SFiniteResult {
  bool verdict = true;
  Elem s = 0;
  IdealSet f;
  std::vector<Elem> generators;
};
SFiniteResult is_S_finite(const IdealSet& k, const SubsetS& s);

struct RelatedChecks {
  std::optional<Elem> witness_s;
  // I ⊆ (𝒥(R) : s) for the witness.
  std::optional<bool> within_radical_colon;
  IdealSet jacobson_star;
  bool jacobson_star_degenerate = false;
  std::optional<bool> superfluous;
  // (I : s) and (𝒥(R) : s) for the witness, and (I : ⟨s⟩).
  std::optional<ElementSet> colon_i_s;
  std::optional<ElementSet> colon_j_s;
  std::optional<ElementSet> colon_i_span;
};
RelatedChecks related_checks(const RingAnalysis& a, const IdealSet& i, const SubsetS& s);

std::string format_pair(const RingAnalysis& a, const PairWitness& pair);

}  // namespace ringlab
