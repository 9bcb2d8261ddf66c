#include "ringlab/predicates.hpp"

#include <functional>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::j: return "j";
    case Predicate::n: return "n";
    case Predicate::s_prime: return "s-prime";
    case Predicate::s_n: return "s-n";
    case Predicate::s_j: return "s-j";
    case Predicate::right_s_prime: return "right-s-prime";
    case Predicate::right_s_j: return "right-s-j";
  }
  return "?";
}

const char* to_string(Quantifier q) { return q == Quantifier::fixed_s ? "fixed" : "per-pair"; }
const char* to_string(Method m) { return m == Method::elementwise ? "elementwise" : "lattice"; }

std::optional<Predicate> parse_predicate(std::string_view text) {
  for (auto p : {Predicate::j, Predicate::n, Predicate::s_prime, Predicate::s_n, Predicate::s_j,
                 Predicate::right_s_prime, Predicate::right_s_j}) {
    if (text == to_string(p)) return p;
  }
  return std::nullopt;
}

bool uses_subset(Predicate p) { return p != Predicate::j && p != Predicate::n; }

namespace {

bool is_right_form(Predicate p) { return p == Predicate::right_s_prime || p == Predicate::right_s_j; }

// The ideal the "left" factor must fall into.
const IdealSet& left_target(const RingAnalysis& a, Predicate p, const IdealSet& i) {
  switch (p) {
    case Predicate::j:
    case Predicate::s_j:
    case Predicate::right_s_j: return a.jacobson();
    case Predicate::n:
    case Predicate::s_n: return a.prime_radical();
    case Predicate::s_prime:
    case Predicate::right_s_prime: return i;
  }
  return i;
}

// Ingredients of "premise(x, y) ⟹ left(s, x) or right(s, y)" over items that
// are either ring elements or lattice indices.
struct Evaluator {
  PairWitness::Kind kind = PairWitness::Kind::elements;
  std::vector<std::size_t> items;
  std::function<bool(std::size_t, std::size_t)> premise;
  std::function<bool(std::optional<Elem>, std::size_t)> left;
  std::function<bool(std::optional<Elem>, std::size_t)> right;
};

// x·T ⊆ target for the additive generators T of a subgroup.
bool times_within(const Ring& r, Elem x, const std::vector<Elem>& t, const IdealSet& target) {
  for (Elem g : t) {
    if (!target.contains(r.mul(x, g))) return false;
  }
  return true;
}

bool times_within(const IdealSet& l, const std::vector<Elem>& t, const IdealSet& target) {
  for (Elem x : l.generators()) {
    if (!times_within(l.ring(), x, t, target)) return false;
  }
  return true;
}

Evaluator make_evaluator(const RingAnalysis& a, Predicate p, const IdealSet& i, Method method) {
  const Ring& r = a.ring();
  const IdealSet& x_target = left_target(a, p, i);
  const bool right_form = is_right_form(p);
  Evaluator ev;

  // Right-hand factor for s: ⟨s⟩ in the right forms, {s} otherwise.
  auto factor = [&a, right_form](Elem s) -> std::vector<Elem> {
    if (right_form) return a.lattice().principal(s).generators();
    return {s};
  };

  if (method == Method::lattice) {
    const LatticeIndex& l = a.lattice();
    ev.kind = PairWitness::Kind::ideals;
    for (std::size_t k = 0; k < l.size(); ++k) ev.items.push_back(k);
    ev.premise = [&l, &i](std::size_t x, std::size_t y) { return product_within(l[x], l[y], i.members()); };
    auto side = [&l, factor](const IdealSet& target) {
      return [&l, &target, factor](std::optional<Elem> s, std::size_t x) {
        if (!s) return l[x].subset_of(target);
        return times_within(l[x], factor(*s), target);
      };
    };
    ev.left = side(x_target);
    ev.right = side(i);
    return ev;
  }

  ev.kind = PairWitness::Kind::elements;
  const bool commutative_form = !right_form && r.is_commutative();
  if (!right_form && r.has_identity()) {
    // With an identity every condition depends only on <x> and <y>.
    for (Elem e : a.class_representatives()) ev.items.push_back(e);
  } else {
    for (Elem e = 0; e < r.size(); ++e) ev.items.push_back(e);
  }
  if (commutative_form) {
    ev.premise = [&r, &i](std::size_t x, std::size_t y) {
      return i.contains(r.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
    };
  } else {
    ev.premise = [&r, &i](std::size_t x, std::size_t y) {
      for (Elem g : r.additive_generators()) {
        if (!i.contains(r.mul(r.mul(static_cast<Elem>(x), g), static_cast<Elem>(y)))) return false;
      }
      return true;
    };
  }
  auto side = [&r, factor](const IdealSet& target) {
    return [&r, &target, factor](std::optional<Elem> s, std::size_t x) {
      if (!s) return target.contains(static_cast<Elem>(x));
      return times_within(r, static_cast<Elem>(x), factor(*s), target);
    };
  };
  ev.left = side(x_target);
  ev.right = side(i);
  return ev;
}

struct Table {
  std::size_t n = 0;
  std::vector<char> premise;
};

Table premise_table(const Evaluator& ev) {
  Table t;
  t.n = ev.items.size();
  t.premise.resize(t.n * t.n);
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) t.premise[x * t.n + y] = ev.premise(ev.items[x], ev.items[y]) ? 1 : 0;
  }
  return t;
}

std::vector<char> side_flags(const Evaluator& ev, const std::function<bool(std::optional<Elem>, std::size_t)>& f,
                             std::optional<Elem> s) {
  std::vector<char> out(ev.items.size());
  for (std::size_t x = 0; x < ev.items.size(); ++x) out[x] = f(s, ev.items[x]) ? 1 : 0;
  return out;
}

std::optional<PairWitness> first_violation(const Evaluator& ev, const Table& t, std::optional<Elem> s) {
  const auto left = side_flags(ev, ev.left, s);
  const auto right = side_flags(ev, ev.right, s);
  for (std::size_t x = 0; x < t.n; ++x) {
    if (left[x]) continue;
    for (std::size_t y = 0; y < t.n; ++y) {
      if (!right[y] && t.premise[x * t.n + y]) return PairWitness{ev.kind, ev.items[x], ev.items[y]};
    }
  }
  return std::nullopt;
}

void require_same_ring(const RingAnalysis& a, const IdealSet& i) {
  if (i.ring_ptr() != a.ring_ptr()) fail(ErrorKind::ring_mismatch, "ideal does not belong to " + a.ring().describe());
}

void require_commutative(const RingAnalysis& a, Predicate p) {
  if (!a.ring().is_commutative()) {
    fail(ErrorKind::not_applicable,
         std::string("predicate ") + to_string(p) + " needs a commutative ring; " + a.ring().describe() + " is not");
  }
}

void require_disjoint(const IdealSet& i, const SubsetS& s) {
  if (i.members().intersects(s.members())) {
    const Elem e = (i.members() & s.members()).first();
    fail(ErrorKind::precondition_violation,
         "ideal meets S in " + i.ring().format(e) + "; the predicate needs I and S disjoint");
  }
}

Method resolve_method(const RingAnalysis& a, Predicate p, std::optional<Method> requested) {
  if (is_right_form(p)) {
    const Method m = requested.value_or(Method::lattice);
    if (m == Method::elementwise) {
      if (!a.ring().has_identity()) {
        fail(ErrorKind::not_applicable, "elementwise right-S checks need a ring with identity");
      }
      if (a.ring().size() > kElementwiseLimit) {
        fail(ErrorKind::not_applicable, "elementwise right-S checks are limited to rings of at most " +
                                            std::to_string(kElementwiseLimit) + " elements");
      }
    }
    return m;
  }
  return requested.value_or(Method::elementwise);
}

CheckResult evaluate(const RingAnalysis& a, Predicate p, const IdealSet& i, const SubsetS* s, Quantifier mode,
                     Method method) {
  CheckResult res;
  res.predicate = p;
  res.mode = mode;
  res.method = method;
  const Evaluator ev = make_evaluator(a, p, i, method);
  const Table t = premise_table(ev);

  std::vector<std::optional<Elem>> s_values;
  if (s == nullptr) {
    s_values.push_back(std::nullopt);
    res.mode = Quantifier::fixed_s;
  } else {
    for (Elem e : s->elements()) s_values.push_back(e);
  }

  if (res.mode == Quantifier::fixed_s) {
    for (const auto& sv : s_values) {
      auto v = first_violation(ev, t, sv);
      if (!v) {
        res.verdict = true;
        res.witness_s = sv;
        res.counterexample.reset();
        return res;
      }
      if (sv) res.violations.push_back({*sv, *v});
      if (!res.counterexample) res.counterexample = v;
    }
    res.verdict = false;
    return res;
  }

  // Per-pair: every premise pair must be rescued by some s of its own.
  std::vector<std::vector<char>> lefts, rights;
  for (const auto& sv : s_values) {
    lefts.push_back(side_flags(ev, ev.left, sv));
    rights.push_back(side_flags(ev, ev.right, sv));
  }
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      if (!t.premise[x * t.n + y]) continue;
      bool rescued = false;
      for (std::size_t k = 0; k < s_values.size() && !rescued; ++k) rescued = lefts[k][x] || rights[k][y];
      if (!rescued) {
        res.verdict = false;
        res.counterexample = PairWitness{ev.kind, ev.items[x], ev.items[y]};
        return res;
      }
    }
  }
  res.verdict = true;
  return res;
}

}  // namespace

CheckResult run_check(const RingAnalysis& a, Predicate p, const IdealSet& i, const SubsetS* s,
                      const CheckOptions& options) {
  require_same_ring(a, i);
  switch (p) {
    case Predicate::j:
      if (!i.is_proper()) fail(ErrorKind::precondition_violation, "the 𝒥-ideal predicate needs a proper ideal");
      break;
    case Predicate::n:
      require_commutative(a, p);
      if (!i.is_proper()) fail(ErrorKind::precondition_violation, "the n-ideal predicate needs a proper ideal");
      break;
    case Predicate::s_prime:
    case Predicate::s_n:
    case Predicate::s_j:
      require_commutative(a, p);
      [[fallthrough]];
    case Predicate::right_s_prime:
    case Predicate::right_s_j:
      if (s == nullptr) fail(ErrorKind::invalid_parameter, std::string("predicate ") + to_string(p) + " needs a subset S");
      if (s->ring_ptr() != a.ring_ptr()) fail(ErrorKind::ring_mismatch, "subset does not belong to " + a.ring().describe());
      require_disjoint(i, *s);
      break;
  }
  const Method method = resolve_method(a, p, options.method);
  return evaluate(a, p, i, uses_subset(p) ? s : nullptr, options.mode, method);
}

CheckResult is_J_ideal(const RingAnalysis& a, const IdealSet& i) { return run_check(a, Predicate::j, i, nullptr); }

CheckResult is_n_ideal(const RingAnalysis& a, const IdealSet& i) { return run_check(a, Predicate::n, i, nullptr); }

CheckResult is_S_prime(const RingAnalysis& a, const IdealSet& i, const SubsetS& s, Quantifier mode) {
  return run_check(a, Predicate::s_prime, i, &s, {mode, std::nullopt});
}

CheckResult is_S_n_ideal(const RingAnalysis& a, const IdealSet& i, const SubsetS& s, Quantifier mode) {
  return run_check(a, Predicate::s_n, i, &s, {mode, std::nullopt});
}

CheckResult is_S_J_ideal(const RingAnalysis& a, const IdealSet& i, const SubsetS& s, Quantifier mode) {
  return run_check(a, Predicate::s_j, i, &s, {mode, std::nullopt});
}

CheckResult is_right_S_prime(const RingAnalysis& a, const IdealSet& p, const SubsetS& s, Method method,
                             Quantifier mode) {
  return run_check(a, Predicate::right_s_prime, p, &s, {mode, method});
}

CheckResult is_right_S_J_ideal(const RingAnalysis& a, const IdealSet& p, const SubsetS& s, Method method,
                               Quantifier mode) {
  return run_check(a, Predicate::right_s_j, p, &s, {mode, method});
}

std::optional<PairWitness> violation_for(const RingAnalysis& a, Predicate p, const IdealSet& i, const SubsetS* s,
                                         std::optional<Elem> s_value, Method method) {
  require_same_ring(a, i);
  if (uses_subset(p)) {
    if (s != nullptr) require_disjoint(i, *s);
    if (!s_value) fail(ErrorKind::invalid_parameter, "an element s is needed to replay this predicate");
  } else {
    s_value.reset();
  }
  const Evaluator ev = make_evaluator(a, p, i, method);
  return first_violation(ev, premise_table(ev), s_value);
}

bool pair_violates(const RingAnalysis& a, Predicate p, const IdealSet& i, std::optional<Elem> s_value,
                   const PairWitness& pair) {
  require_same_ring(a, i);
  if (!uses_subset(p)) s_value.reset();
  const Method method = pair.kind == PairWitness::Kind::ideals ? Method::lattice : Method::elementwise;
  const Evaluator ev = make_evaluator(a, p, i, method);
  return ev.premise(pair.first, pair.second) && !ev.left(s_value, pair.first) && !ev.right(s_value, pair.second);
}

SFiniteResult is_S_finite(const IdealSet& k, const SubsetS& s) {
  if (k.ring_ptr() != s.ring_ptr()) fail(ErrorKind::ring_mismatch, "ideal and subset live in different rings");
  const Ring& r = k.ring();
  const Elem sv = s.members().first();
  std::vector<Elem> ks{r.zero()};
  for (Elem x : k.generators()) ks.push_back(r.mul(x, sv));
  IdealSet f = ideal_generate(k.ring_ptr(), ks);
  auto gens = minimal_generating_set(f);
  const bool holds = f.subset_of(k);
  return {holds, sv, std::move(f), std::move(gens)};
}

RelatedChecks related_checks(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  const LatticeIndex& l = a.lattice();
  auto star = jacobson_star(i, l);
  RelatedChecks out{std::nullopt, std::nullopt, star.ideal, star.degenerate, std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt};
  out.superfluous = is_superfluous(i, l);
  const CheckResult c = a.ring().is_commutative() ? is_S_J_ideal(a, i, s) : is_right_S_J_ideal(a, i, s);
  if (!c.witness_s) return out;
  const Elem w = *c.witness_s;
  out.witness_s = w;
  out.colon_i_s = colon_set(i, {w});
  out.colon_j_s = colon_set(a.jacobson(), {w});
  out.within_radical_colon = i.members().subset_of(*out.colon_j_s);
  out.colon_i_span = colon_set(i, l.principal(w).generators());
  return out;
}

std::string format_pair(const RingAnalysis& a, const PairWitness& pair) {
  if (pair.kind == PairWitness::Kind::elements) {
    return "(" + a.ring().format(static_cast<Elem>(pair.first)) + ", " +
           a.ring().format(static_cast<Elem>(pair.second)) + ")";
  }
  const LatticeIndex& l = a.lattice();
  return "(" + ideal_spec(l[pair.first]) + ", " + ideal_spec(l[pair.second]) + ")";
}

}  // namespace ringlab
