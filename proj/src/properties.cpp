#include <algorithm>

#include "harness_internal.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/radicals.hpp"

namespace ringlab {

const std::vector<PropertyInfo>& property_registry() {
  static const std::vector<PropertyInfo> registry = {
      {"P1", "Prop 2.3: I ⊆ (𝒥(R):s)", PropertyStatus::gating},
      {"P2", "Cor 2.4: 𝒥-ideal ⟹ I ⊆ 𝒥(R)", PropertyStatus::gating},
      {"P3", "Cor 2.5: S-n ⟹ S-𝒥, n ⟹ 𝒥, 𝒥(R) S-𝒥 ⟺ S-prime", PropertyStatus::gating},
      {"P4", "Prop 2.7: ideal-pair characterization", PropertyStatus::gating},
      {"P5", "Thm 2.8: (I:s) a 𝒥-ideal", PropertyStatus::gating},
      {"P6", "Prop 2.9: (I:a) ⊆ (𝒥(R):s)", PropertyStatus::gating},
      {"P7", "Prop 2.10: (I:b) ⊆ (I:s)", PropertyStatus::gating},
      {"P8", "Cor 2.12: ideal regarded as a ring", PropertyStatus::gating},
      {"P9", "Cor 2.13: Jacobson ideals and S-finiteness", PropertyStatus::gating},
      {"P10", "Prop 2.14: A ⊄ (𝒥(R):s) for all s", PropertyStatus::gating},
      {"P11", "Lemma 2.16: (I:X) is S-𝒥", PropertyStatus::gating},
      {"P12", "Prop 2.17: maximal S-𝒥-ideals are prime", PropertyStatus::gating},
      {"P13", "Prop 2.18: a_1s ∈ 𝒥*(I) or a_2s ∈ I", PropertyStatus::gating},
      {"P14", "Thm 2.20: epimorphic images and preimages", PropertyStatus::gating},
      {"P15", "Prop 2.21: quotients P_2/P_1", PropertyStatus::gating},
      {"P16", "Cor 2.22: intersections", PropertyStatus::gating},
      {"P17", "Thm 2.23: products I_1 × R_2", PropertyStatus::gating},
      {"P18", "Thm 2.25: power series, checked on R[x]/(x^d)", PropertyStatus::exploratory},
      {"P19", "Thm 2.26: polynomial rings", PropertyStatus::out_of_scope},
      {"P20", "Thm 2.27: idealization I ⊞ M", PropertyStatus::gating},
      {"P21", "Prop 2.28: idealization I ⊞ N", PropertyStatus::gating},
      {"P22", "Prop 2.30: amalgamation I ⋈^f J", PropertyStatus::gating},
      {"P23", "Prop 3.2: element and principal forms", PropertyStatus::gating},
      {"P24", "Prop 3.3: the two definitions agree", PropertyStatus::gating},
      {"P25", "Cor 3.4: right S-prime inside 𝒥(R)", PropertyStatus::gating},
      {"P26", "Thm 3.7: (P:⟨s⟩) right S-𝒥", PropertyStatus::gating},
      {"P27", "Prop 3.8: (P:⟨s⟩) a 𝒥-ideal ⟹ right S-𝒥", PropertyStatus::gating},
      {"P28", "Prop 3.9: central S, (P:⟨s⟩) a 𝒥-ideal", PropertyStatus::gating},
      {"P29", "Thm 3.10: f(P) right f(S)-𝒥", PropertyStatus::gating},
      {"P30", "Thm 3.11: preimages under epimorphisms", PropertyStatus::gating},
      {"P31", "Prop 3.12: P ⊆ (𝒥(R):⟨s⟩)", PropertyStatus::gating},
      {"P32", "Prop 3.13: 𝒥(R) right S-𝒥 ⟺ right S-prime", PropertyStatus::gating},
      {"P33", "Cor 3.14: superfluous ideals in local rings", PropertyStatus::gating},
  };
  return registry;
}

const PropertyInfo* find_property(const std::string& id) {
  for (const auto& p : property_registry()) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

namespace {

// ---------------------------------------------------------------- outcomes

Outcome vacuous() { return {}; }

Outcome passed() {
  Outcome o;
  o.kind = OutcomeKind::passed;
  return o;
}

Outcome violated(std::string detail) {
  Outcome o;
  o.kind = OutcomeKind::violated;
  o.detail = std::move(detail);
  return o;
}

template <class Detail>
Outcome implies(bool hypothesis, bool conclusion, Detail detail) {
  if (!hypothesis) return vacuous();
  return conclusion ? passed() : violated(detail());
}

template <class Detail>
Outcome iff(bool lhs, bool rhs, Detail detail) {
  if (lhs == rhs) return passed();
  return violated(detail() + " (left side " + (lhs ? "true" : "false") + ", right side " + (rhs ? "true" : "false") +
                  ")");
}

// ---------------------------------------------------------------- set helpers

struct Loaded {
  HarnessContext& ctx;
  const Instance& in;
  RingPtr ring;
  AnalysisPtr an;

  Loaded(HarnessContext& c, const Instance& i) : ctx(c), in(i), ring(c.ring(i.ring_expr)), an(c.analysis(ring)) {}

  const RingAnalysis& a() const { return *an; }
  const Ring& r() const { return *ring; }
  const IdealSet& jac() const { return an->jacobson(); }
  IdealSet ideal(std::size_t k) const { return ctx.ideal(ring, in.ideal_gens.at(k)); }
  SubsetS subset(std::size_t k) const { return ctx.subset(ring, in.subset.at(k)); }
  std::int64_t param(std::size_t k) const { return in.params.at(k); }
};

bool disjoint(const IdealSet& i, const SubsetS& s) { return !i.members().intersects(s.members()); }

// I·s ⊆ target.
bool scaled_within(const IdealSet& i, Elem s, const ElementSet& target) {
  for (Elem g : i.generators()) {
    if (!target.contains(i.ring().mul(g, s))) return false;
  }
  return true;
}

// I·⟨s⟩ ⊆ target.
bool span_within(const RingAnalysis& a, const IdealSet& i, Elem s, const ElementSet& target) {
  const auto& t = a.lattice().principal(s).generators();
  for (Elem g : i.generators()) {
    for (Elem h : t) {
      if (!target.contains(i.ring().mul(g, h))) return false;
    }
  }
  return true;
}

IdealSet colon_elem(const IdealSet& i, Elem s) { return colon(i, {s}); }

IdealSet colon_span(const RingAnalysis& a, const IdealSet& p, Elem s) {
  return colon(p, a.lattice().principal(s).generators());
}

bool j_ideal(const RingAnalysis& a, const IdealSet& i) { return i.is_proper() && is_J_ideal(a, i).verdict; }

std::optional<Elem> sj_witness(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  auto r = is_S_J_ideal(a, i, s);
  return r.verdict ? r.witness_s : std::nullopt;
}

bool sj(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  return disjoint(i, s) && is_S_J_ideal(a, i, s).verdict;
}

bool sj_with(const RingAnalysis& a, const IdealSet& i, const SubsetS& s, Elem w) {
  return !violation_for(a, Predicate::s_j, i, &s, w, Method::elementwise);
}

std::optional<Elem> rsj_witness(const RingAnalysis& a, const IdealSet& p, const SubsetS& s) {
  auto r = is_right_S_J_ideal(a, p, s);
  return r.verdict ? r.witness_s : std::nullopt;
}

bool rsj(const RingAnalysis& a, const IdealSet& p, const SubsetS& s) {
  return disjoint(p, s) && is_right_S_J_ideal(a, p, s).verdict;
}

bool rsj_with(const RingAnalysis& a, const IdealSet& p, const SubsetS& s, Elem w) {
  return !violation_for(a, Predicate::right_s_j, p, &s, w, Method::lattice);
}

std::string spec(const IdealSet& i) { return ideal_spec(i); }

IdealSet image_ideal(const Hom& f, const IdealSet& i) {
  return IdealSet::from_members(f.target_ptr(), f.image(i.members()));
}

IdealSet preimage_ideal(const Hom& f, const IdealSet& l) {
  return IdealSet::from_members(f.source_ptr(), f.preimage(l.members()));
}

// ---------------------------------------------------------------- generators

using Filter = std::function<bool(const CorpusRing&)>;

bool comm_id(const CorpusRing& r) { return r.commutative && r.identity; }
bool with_id(const CorpusRing& r) { return r.identity; }

template <class Body>
void for_views(const CorpusSpec& c, HarnessContext& ctx, const Filter& f, Body body) {
  for (const auto& info : c.rings) {
    if (f(info)) body(ctx.view(info));
  }
}

Instance make(const RingView& v, std::vector<std::string> ideals, std::vector<std::string> subsets,
              std::vector<std::int64_t> params = {}) {
  return {v.info->expr, std::move(ideals), std::move(subsets), std::move(params)};
}

// Every disjoint (I, S) of the selected sets, once per parameter list.
std::vector<Instance> pairs(const CorpusSpec& c, HarnessContext& ctx, const Filter& f,
                            const std::vector<std::vector<std::int64_t>>& params = {{}}) {
  std::vector<Instance> out;
  for_views(c, ctx, f, [&](const RingView& v) {
    for (const auto& p : params) {
      for (std::size_t k = 0; k < v.ideals.size(); ++k) {
        for (std::size_t t = 0; t < v.subsets.size(); ++t) {
          if (disjoint(v.ideals[k], v.subsets[t])) out.push_back(make(v, {v.info->ideals[k]}, {v.info->subsets[t]}, p));
        }
      }
    }
  });
  return out;
}

// Proper ideals and zero-free multiplicatively closed sets of a ring outside
// the corpus (factors and base rings), capped.
struct SmallSets {
  std::vector<IdealSet> ideals;
  std::vector<SubsetS> subsets;
};

SmallSets small_sets(HarnessContext& ctx, const RingPtr& ring, std::size_t max_ideals, std::size_t max_subsets) {
  SmallSets out;
  const auto a = ctx.analysis(ring);
  const auto& l = a->lattice();
  for (std::size_t k = 0; k < l.whole_index() && out.ideals.size() < max_ideals; ++k) out.ideals.push_back(l[k]);
  auto push = [&](const SubsetS& s) {
    if (out.subsets.size() >= max_subsets || s.contains(ring->zero())) return;
    if (std::find(out.subsets.begin(), out.subsets.end(), s) == out.subsets.end()) out.subsets.push_back(s);
  };
  if (ring->one()) push(validate_subset(ring, std::vector<Elem>{*ring->one()}));
  for (const auto& s : enumerate_subsets(ring, SubsetStrategy::singleton_generated).subsets) push(s);
  return out;
}

// Instances over a base ring attached to a corpus ring (idealizations,
// amalgamations, truncations).
std::vector<Instance> base_pairs(const RingView& v, HarnessContext& ctx, const RingPtr& base,
                                 const std::vector<std::vector<std::int64_t>>& params) {
  std::vector<Instance> out;
  const auto sets = small_sets(ctx, base, 6, 4);
  for (const auto& p : params) {
    for (const auto& i : sets.ideals) {
      for (const auto& s : sets.subsets) {
        if (disjoint(i, s)) out.push_back(make(v, {spec(i)}, {subset_spec(s)}, p));
      }
    }
  }
  return out;
}

template <class T>
const T* as(const Ring& r) {
  return dynamic_cast<const T*>(&r);
}

// ---------------------------------------------------------------- §2 checks

Outcome check_p1(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  const auto w = sj_witness(l.a(), i, s);
  return implies(w.has_value(), w && scaled_within(i, *w, l.jac().members()),
                 [&] { return "I ⊄ (𝒥(R):s) for the witness s = " + l.r().format(*w); });
}

Outcome check_p2(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  return implies(j_ideal(l.a(), i), i.subset_of(l.jac()), [] { return std::string("𝒥-ideal not inside 𝒥(R)"); });
}

Outcome check_p3(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  switch (l.param(0)) {
    case 0: {
      const SubsetS s = l.subset(0);
      const auto r = is_S_n_ideal(l.a(), i, s);
      return implies(r.verdict, r.verdict && sj_with(l.a(), i, s, *r.witness_s),
                     [&] { return "S-n witness s = " + l.r().format(*r.witness_s) + " does not witness S-𝒥"; });
    }
    case 1:
      return implies(i.is_proper() && is_n_ideal(l.a(), i).verdict, j_ideal(l.a(), i),
                     [] { return std::string("n-ideal that is not a 𝒥-ideal"); });
    default: {
      const SubsetS s = l.subset(0);
      return iff(sj(l.a(), i, s), is_S_prime(l.a(), i, s).verdict,
                 [] { return std::string("𝒥(R): S-𝒥 and S-prime disagree"); });
    }
  }
}

Outcome check_p4(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  for (Elem e : s.elements()) {
    const bool by_elements = !violation_for(l.a(), Predicate::s_j, i, &s, e, Method::elementwise);
    const bool by_ideals = !violation_for(l.a(), Predicate::s_j, i, &s, e, Method::lattice);
    if (by_elements != by_ideals) {
      return iff(by_elements, by_ideals, [&] { return "element and ideal-pair forms differ at s = " + l.r().format(e); });
    }
  }
  return passed();
}

bool some_colon_j_ideal(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  for (Elem e : s.elements()) {
    if (j_ideal(a, colon_elem(i, e))) return true;
  }
  return false;
}

Outcome check_p5(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  if (l.param(0) == 0) {
    return implies(some_colon_j_ideal(l.a(), i, s), sj(l.a(), i, s),
                   [] { return std::string("(I:s) is a 𝒥-ideal but I is not S-𝒥"); });
  }
  const bool hyp = j_ideal(l.a(), l.jac()) && disjoint(l.jac(), s) && sj(l.a(), i, s);
  return implies(hyp, some_colon_j_ideal(l.a(), i, s),
                 [] { return std::string("I is S-𝒥 but no (I:s) is a 𝒥-ideal"); });
}

// ∃s ∀a ∉ (I:s): (I:a) ⊆ (𝒥(R):s).
bool colon_form_a(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  for (Elem e : s.elements()) {
    const ElementSet cis = colon_set(i, {e});
    const ElementSet cjs = colon_set(a.jacobson(), {e});
    bool ok = true;
    for (Elem x : a.class_representatives()) {
      if (!cis.contains(x) && !colon_set(i, {x}).subset_of(cjs)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// ∃s ∀b ∉ (𝒥(R):s): (I:b) ⊆ (I:s).
bool colon_form_b(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  for (Elem e : s.elements()) {
    const ElementSet cis = colon_set(i, {e});
    const ElementSet cjs = colon_set(a.jacobson(), {e});
    bool ok = true;
    for (Elem x : a.class_representatives()) {
      if (!cjs.contains(x) && !colon_set(i, {x}).subset_of(cis)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Outcome check_p6(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  return iff(sj(l.a(), i, s), colon_form_a(l.a(), i, s), [] { return std::string("colon form (I:a) disagrees"); });
}

Outcome check_p7(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  return iff(sj(l.a(), i, s), colon_form_b(l.a(), i, s), [] { return std::string("colon form (I:b) disagrees"); });
}

std::string ideal_ring_key(const Instance& in) { return "idealring(" + in.ring_expr + ", " + in.ideal_gens.at(0) + ")"; }

Outcome check_p8(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  if (!sj(l.a(), i, s)) return vacuous();
  const RingPtr ir = ctx.derived(ideal_ring_key(in), [&] { return make_ideal_as_ring(i); });
  const auto& sub = static_cast<const IdealAsRing&>(*ir);
  const auto ia = ctx.analysis(ir);
  const IdealSet p = ctx.ideal(ir, in.ideal_gens.at(1));
  const Ring& q = *ir;
  // (P:i) = P inside the ring I for every i ∈ I \ P.
  for (Elem x = 0; x < q.size(); ++x) {
    if (p.contains(x)) continue;
    for (Elem y = 0; y < q.size(); ++y) {
      if (p.contains(q.mul(y, x)) != p.contains(y)) return vacuous();
    }
  }
  const IdealSet& ji = ia->jacobson();
  for (Elem w : s.elements()) {
    bool ok = true;
    for (Elem x = 0; x < q.size() && ok; ++x) {
      const auto xs = sub.from_base(l.r().mul(sub.to_base(x), w));
      if (xs && ji.contains(*xs)) continue;
      for (Elem y = 0; y < q.size(); ++y) {
        if (!p.contains(q.mul(x, y))) continue;
        const auto ys = sub.from_base(l.r().mul(sub.to_base(y), w));
        if (!ys || !p.contains(*ys)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return passed();
  }
  return violated("no s ∈ S makes P an S-𝒥-ideal of the ring I");
}

Outcome check_p9(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  const auto star = jacobson_star(i, l.a().lattice());
  if (star.degenerate || !(star.ideal == i)) return vacuous();
  const auto w = sj_witness(l.a(), i, s);
  if (!w) return vacuous();
  const IdealSet& j = l.jac();
  ElementSet iw(l.r().size());
  for (Elem x : i.elements()) iw.insert(l.r().mul(x, *w));
  bool jw_in_iw = true;
  for (Elem x : j.elements()) jw_in_iw = jw_in_iw && iw.contains(l.r().mul(x, *w));
  const bool ok = j.subset_of(i) && jw_in_iw && iw.subset_of(j.members()) && is_S_finite(j, s).verdict;
  return ok ? passed() : violated("𝒥(R)s ⊆ Is ⊆ 𝒥(R) fails for s = " + l.r().format(*w));
}

bool avoids_all_colons(const RingAnalysis& a, const IdealSet& ideal, const SubsetS& s) {
  for (Elem e : s.elements()) {
    if (scaled_within(ideal, e, a.jacobson().members())) return false;
  }
  return true;
}

Outcome check_p10(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet a_ideal = l.ideal(0);
  const IdealSet i = l.ideal(1);
  const SubsetS s = l.subset(0);
  if (!avoids_all_colons(l.a(), a_ideal, s)) return vacuous();
  if (l.param(0) == 1) {
    const IdealSet j = l.ideal(2);
    if (!(ideal_product(a_ideal, i) == ideal_product(a_ideal, j))) return vacuous();
    if (!disjoint(i, s) || !disjoint(j, s)) return vacuous();
    const auto wi = sj_witness(l.a(), i, s);
    const auto wj = sj_witness(l.a(), j, s);
    if (!wi || !wj) return vacuous();
    const bool ok = scaled_within(i, *wj, j.members()) && scaled_within(j, *wi, i.members());
    return ok ? passed() : violated("I·w(J) ⊄ J or J·w(I) ⊄ I");
  }
  const IdealSet ai = ideal_product(a_ideal, i);
  if (!disjoint(ai, s)) return vacuous();
  const auto w = sj_witness(l.a(), ai, s);
  return implies(w.has_value(), w && scaled_within(i, *w, ai.members()),
                 [&] { return "I·s ⊄ AI for the witness s = " + l.r().format(*w); });
}

Outcome check_p11(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  std::vector<Elem> x;
  for (auto v : in.params) x.push_back(static_cast<Elem>(v));
  if (!sj(l.a(), i, s)) return vacuous();
  const IdealSet cx = colon(i, x);
  if (!disjoint(cx, s)) return vacuous();
  return implies(true, sj(l.a(), cx, s), [&] { return "(I:X) = " + spec(cx) + " is not S-𝒥"; });
}

// Among the S-𝒥-ideals of the lattice, nothing strictly larger than I.
bool maximal_sj(const RingAnalysis& a, const IdealSet& i, const SubsetS& s) {
  const auto& lat = a.lattice();
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const IdealSet& other = lat[k];
    if (other.size() > i.size() && i.subset_of(other) && sj(a, other, s)) return false;
  }
  return true;
}

Outcome check_p12(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  const bool prime = is_prime(i, l.a().lattice());
  if (l.param(0) == 1) {
    return implies(sj(l.a(), i, s) && maximal_sj(l.a(), i, s), prime,
                   [] { return std::string("maximal S-𝒥-ideal that is not prime"); });
  }
  bool is_colon = false;
  for (Elem e : s.elements()) is_colon = is_colon || colon_elem(l.jac(), e) == i;
  return implies(prime && disjoint(i, s) && is_colon, sj(l.a(), i, s) && maximal_sj(l.a(), i, s),
                 [] { return std::string("prime (𝒥(R):s) is not maximal among S-𝒥-ideals"); });
}

Outcome check_p13(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  const auto star = jacobson_star(i, l.a().lattice());
  const Ring& r = l.r();
  bool any = false;
  for (Elem e : s.elements()) {
    if (!(colon_elem(l.jac(), e) == l.jac())) continue;
    any = true;
    const bool lhs = sj_with(l.a(), i, s, e);
    bool rhs = scaled_within(i, e, l.jac().members());
    for (Elem x : l.a().class_representatives()) {
      if (!rhs) break;
      if (star.ideal.contains(r.mul(x, e))) continue;
      for (Elem y : l.a().class_representatives()) {
        if (i.contains(r.mul(x, y)) && !i.contains(r.mul(y, e))) {
          rhs = false;
          break;
        }
      }
    }
    if (lhs != rhs) return iff(lhs, rhs, [&] { return "𝒥*(I) criterion disagrees at s = " + r.format(e); });
  }
  return any ? passed() : vacuous();
}

// The epimorphism of a P14 instance: params[0] = 0 canonical surjection onto
// R/K (K = ideal_gens[1]), 1 projection onto the first factor, 2 reduction
// Z_n -> Z_m with m = params[2].
Hom p14_hom(const Loaded& l) {
  switch (l.param(0)) {
    case 0: return l.ctx.quotient(l.ideal(1)).surjection;
    case 1: {
      const auto* p = as<ProductRing>(l.r());
      std::vector<Elem> map(l.r().size());
      for (Elem e = 0; e < map.size(); ++e) map[e] = p->split(e).first;
      return Hom::make(l.ring, p->first(), std::move(map), "pr1");
    }
    default: return zn_reduction(l.ring, l.ctx.ring("Z" + std::to_string(l.param(2))));
  }
}

Outcome check_p14(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const SubsetS s = l.subset(0);
  const Hom f = p14_hom(l);
  const auto ta = ctx.analysis(f.target_ptr());
  const SubsetS fs = image_subset(f, s);
  if (l.param(1) == 1) {
    const IdealSet p = l.ideal(0);
    if (!f.kernel().subset_of(p)) return vacuous();
    const auto w = sj_witness(l.a(), p, s);
    if (!w) return vacuous();
    const IdealSet fp = image_ideal(f, p);
    return implies(true, disjoint(fp, fs) && sj_with(*ta, fp, fs, f(*w)),
                   [&] { return "ψ(P) = " + spec(fp) + " is not ψ(S)-𝒥 with ψ(s)"; });
  }
  const IdealSet lt = ctx.ideal(f.target_ptr(), in.ideal_gens.at(0));
  if (!f.kernel().subset_of(l.jac()) || !disjoint(lt, fs)) return vacuous();
  const auto t = sj_witness(*ta, lt, fs);
  if (!t) return vacuous();
  const IdealSet pre = preimage_ideal(f, lt);
  bool ok = false;
  for (Elem e : s.elements()) ok = ok || (f(e) == *t && sj_with(l.a(), pre, s, e));
  return ok ? passed() : violated("ψ^-1(L) = " + spec(pre) + " is not S-𝒥 with a preimage of the witness");
}

Outcome check_p15(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p1 = l.ideal(0);
  const IdealSet p2 = l.ideal(1);
  const SubsetS s = l.subset(0);
  const Quotient q = ctx.quotient(p1);
  const auto qa = ctx.analysis(q.ring);
  const SubsetS sbar = image_subset(q.surjection, s);
  const IdealSet p2bar = image_ideal(q.surjection, p2);
  const bool up = sj(l.a(), p2, s);
  const bool down = sj(*qa, p2bar, sbar);
  switch (l.param(0)) {
    case 1: return implies(up, down, [] { return std::string("P_2/P_1 is not S̄-𝒥"); });
    case 2: return implies(down && p1.subset_of(l.jac()), up, [] { return std::string("P_2 is not S-𝒥"); });
    default: return implies(down && j_ideal(l.a(), p1), up, [] { return std::string("P_2 is not S-𝒥"); });
  }
}

Outcome check_p16(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const SubsetS s = l.subset(0);
  std::optional<IdealSet> meet;
  for (std::size_t k = 0; k < in.ideal_gens.size(); ++k) {
    const IdealSet p = l.ideal(k);
    if (!sj(l.a(), p, s)) return vacuous();
    meet = meet ? ideal_intersect(*meet, p) : p;
  }
  return implies(true, sj(l.a(), *meet, s), [&] { return "intersection " + spec(*meet) + " is not S-𝒥"; });
}

Outcome check_p17(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const auto* prod = as<ProductRing>(l.r());
  const bool first = l.param(0) == 1;
  const RingPtr& own = first ? prod->first() : prod->second();
  const RingPtr& other = first ? prod->second() : prod->first();
  const IdealSet i = ctx.ideal(own, in.ideal_gens.at(0));
  const SubsetS s1 = ctx.subset(prod->first(), in.subset.at(0));
  const SubsetS s2 = ctx.subset(prod->second(), in.subset.at(1));
  const SubsetS& own_s = first ? s1 : s2;
  const SubsetS& other_s = first ? s2 : s1;
  if (!disjoint(i, own_s)) return vacuous();
  ElementSet members(l.r().size());
  for (Elem x : i.elements()) {
    for (Elem y = 0; y < other->size(); ++y) members.insert(first ? prod->pair(x, y) : prod->pair(y, x));
  }
  const IdealSet big = IdealSet::from_members(l.ring, members);
  const SubsetS s = product_subset(l.ring, s1, s2);
  const auto oa = ctx.analysis(other);
  const bool lhs = sj(l.a(), big, s);
  const bool rhs = sj(*ctx.analysis(own), i, own_s) && oa->jacobson().members().intersects(other_s.members());
  return iff(lhs, rhs, [] { return std::string("product criterion disagrees"); });
}

Outcome check_p18(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const auto* t = as<TruncatedPolyRing>(l.r());
  const RingPtr& base = t->base();
  const auto ba = ctx.analysis(base);
  const IdealSet i = ctx.ideal(base, in.ideal_gens.at(0));
  const SubsetS s = ctx.subset(base, in.subset.at(0));
  if (!j_ideal(*ba, ba->jacobson())) return vacuous();
  ElementSet ix(l.r().size());
  for (Elem e = 0; e < l.r().size(); ++e) {
    const auto c = t->coefficients(e);
    if (std::all_of(c.begin(), c.end(), [&](Elem x) { return i.contains(x); })) ix.insert(e);
  }
  std::vector<Elem> consts;
  for (Elem e : s.elements()) {
    std::vector<Elem> c(t->degree_bound(), base->zero());
    c[0] = e;
    consts.push_back(t->encode(c));
  }
  const IdealSet big = IdealSet::from_members(l.ring, ix);
  const SubsetS sx = validate_subset(l.ring, consts, s.kind());
  return iff(sj(*ba, i, s), sj(l.a(), big, sx), [] { return std::string("I[x]/(x^d) criterion disagrees"); });
}

IdealSet idealization_ideal(const IdealizationRing& r, const RingPtr& ring, const IdealSet& i, std::int64_t d) {
  ElementSet m(r.size());
  for (Elem a : i.elements()) {
    for (Elem x = 0; x < r.module().size(); ++x) {
      if (x % d == 0) m.insert(r.pair(a, x));
    }
  }
  return IdealSet::from_members(ring, m);
}

Outcome check_p20(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const auto* t = as<IdealizationRing>(l.r());
  const auto ba = ctx.analysis(t->base());
  const IdealSet i = ctx.ideal(t->base(), in.ideal_gens.at(0));
  const SubsetS s = ctx.subset(t->base(), in.subset.at(0));
  if (!disjoint(i, s)) return vacuous();
  const IdealSet big = idealization_ideal(*t, l.ring, i, 1);
  const SubsetS sm = idealization_subset(l.ring, s);
  return iff(sj(*ba, i, s), sj(l.a(), big, sm), [] { return std::string("I ⊞ M criterion disagrees"); });
}

Outcome check_p21(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const auto* t = as<IdealizationRing>(l.r());
  const auto ba = ctx.analysis(t->base());
  const IdealSet i = ctx.ideal(t->base(), in.ideal_gens.at(0));
  const SubsetS s = ctx.subset(t->base(), in.subset.at(0));
  const std::int64_t d = l.param(0);
  for (Elem g : i.generators()) {
    if (t->module().act(g, 1) % d != 0) return vacuous();
  }
  const IdealSet big = idealization_ideal(*t, l.ring, i, d);
  const SubsetS sm = idealization_subset(l.ring, s);
  return implies(sj(l.a(), big, sm), sj(*ba, i, s), [] { return std::string("I ⊞ N is S_M-𝒥 but I is not S-𝒥"); });
}

Outcome check_p22(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const auto* t = as<AmalgamationRing>(l.r());
  const auto ba = ctx.analysis(t->base());
  const auto ta = ctx.analysis(t->target());
  const IdealSet i = ctx.ideal(t->base(), in.ideal_gens.at(0));
  const SubsetS s = ctx.subset(t->base(), in.subset.at(0));
  if (!disjoint(i, s)) return vacuous();
  ElementSet m(l.r().size());
  for (Elem x : i.elements()) {
    for (Elem j : t->ideal().elements()) m.insert(t->encode(x, j));
  }
  const IdealSet big = IdealSet::from_members(l.ring, m);
  const SubsetS sb = amalgamation_subset(l.ring, s);
  const bool down = sj(*ba, i, s);
  const bool up = sj(l.a(), big, sb);
  if (l.param(0) == 1) return implies(up, down, [] { return std::string("I ⋈ J is S⋈-𝒥 but I is not S-𝒥"); });
  return implies(down && t->ideal().subset_of(ta->jacobson()), up,
                 [] { return std::string("I is S-𝒥 but I ⋈ J is not S⋈-𝒥"); });
}

// ---------------------------------------------------------------- §3 checks

// ⟨x⟩⟨y⟩ ⊆ P ⟹ ⟨x⟩⟨s⟩ ⊆ 𝒥(R) or ⟨y⟩⟨s⟩ ⊆ P over principal ideals; fixed s
// when `per_pair` is false.
bool principal_form(const RingAnalysis& a, const IdealSet& p, const SubsetS& s, bool per_pair) {
  const auto& lat = a.lattice();
  const auto& classes = lat.principal_classes();
  const auto elems = s.elements();
  auto rescued = [&](std::size_t x, std::size_t y, Elem e) {
    return span_within(a, lat[x], e, a.jacobson().members()) || span_within(a, lat[y], e, p.members());
  };
  if (!per_pair) {
    for (Elem e : elems) {
      bool ok = true;
      for (const auto& [x, rx] : classes) {
        for (const auto& [y, ry] : classes) {
          if (product_within(lat[x], lat[y], p) && !rescued(x, y, e)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) return true;
    }
    return false;
  }
  for (const auto& [x, rx] : classes) {
    for (const auto& [y, ry] : classes) {
      if (!product_within(lat[x], lat[y], p)) continue;
      if (std::none_of(elems.begin(), elems.end(), [&](Elem e) { return rescued(x, y, e); })) return false;
    }
  }
  return true;
}

Outcome check_p23(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  const bool f1 = is_right_S_J_ideal(l.a(), p, s, Method::lattice).verdict;
  const bool f2 = principal_form(l.a(), p, s, false);
  std::optional<bool> f3;
  if (l.r().size() <= kElementwiseLimit) f3 = is_right_S_J_ideal(l.a(), p, s, Method::elementwise).verdict;
  if (f1 != f2 || (f3 && *f3 != f1)) {
    return violated(std::string("fixed-s forms disagree: ideals ") + (f1 ? "true" : "false") + ", principal " +
                    (f2 ? "true" : "false") + ", elements " + (f3 ? (*f3 ? "true" : "false") : "n/a"));
  }
  Outcome o = passed();
  const bool g1 = is_right_S_J_ideal(l.a(), p, s, Method::lattice, Quantifier::per_pair).verdict;
  const bool g2 = principal_form(l.a(), p, s, true);
  std::optional<bool> g3;
  if (f3) g3 = is_right_S_J_ideal(l.a(), p, s, Method::elementwise, Quantifier::per_pair).verdict;
  if (g1 != f1 || g2 != f1 || (g3 && *g3 != f1)) {
    o.divergence = std::string("per-pair readings: ideals ") + (g1 ? "true" : "false") + ", principal " +
                   (g2 ? "true" : "false") + ", elements " + (g3 ? (*g3 ? "true" : "false") : "n/a") +
                   "; fixed-s verdict " + (f1 ? "true" : "false");
  }
  return o;
}

Outcome check_p24(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  for (Elem e : s.elements()) {
    const bool a = sj_with(l.a(), p, s, e);
    const bool b = rsj_with(l.a(), p, s, e);
    if (a != b) return iff(a, b, [&] { return "definitions differ at s = " + l.r().format(e); });
  }
  return iff(sj(l.a(), p, s), rsj(l.a(), p, s), [] { return std::string("definitions differ"); });
}

Outcome check_p25(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  const auto r = is_right_S_prime(l.a(), p, s);
  return implies(r.verdict && p.subset_of(l.jac()), r.verdict && rsj_with(l.a(), p, s, *r.witness_s),
                 [&] { return "right S-prime witness s = " + l.r().format(*r.witness_s) + " fails for right S-𝒥"; });
}

Outcome check_p26(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  bool lhs = false;
  for (Elem e : s.elements()) lhs = lhs || rsj(l.a(), colon_span(l.a(), p, e), s);
  return iff(lhs, rsj(l.a(), p, s), [] { return std::string("(P:⟨s⟩) criterion disagrees"); });
}

Outcome check_p27(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  bool hyp = false;
  for (Elem e : s.elements()) hyp = hyp || j_ideal(l.a(), colon_span(l.a(), p, e));
  return implies(hyp, rsj(l.a(), p, s), [] { return std::string("(P:⟨s⟩) is a 𝒥-ideal but P is not right S-𝒥"); });
}

Outcome check_p28(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  if (!s.members().subset_of(l.a().center()) || !rsj(l.a(), p, s)) return vacuous();
  bool any = false;
  for (Elem e : s.elements()) {
    const IdealSet cj = colon_span(l.a(), l.jac(), e);
    if (!j_ideal(l.a(), cj) || !disjoint(cj, s)) continue;
    any = true;
    if (!j_ideal(l.a(), colon_span(l.a(), p, e))) {
      return violated("(P:⟨s⟩) is not a 𝒥-ideal for s = " + l.r().format(e));
    }
  }
  return any ? passed() : vacuous();
}

Outcome check_p29(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  const Quotient q = ctx.quotient(l.ideal(1));
  const Hom& f = q.surjection;
  if (!f.kernel().subset_of(p)) return vacuous();
  const auto w = rsj_witness(l.a(), p, s);
  if (!w) return vacuous();
  const auto qa = ctx.analysis(q.ring);
  const IdealSet fp = image_ideal(f, p);
  const SubsetS fs = image_subset(f, s);
  return implies(true, disjoint(fp, fs) && rsj_with(*qa, fp, fs, f(*w)),
                 [&] { return "f(P) = " + spec(fp) + " is not right f(S)-𝒥 with f(s)"; });
}

Outcome check_p30(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  const Quotient q = ctx.quotient(l.ideal(1));
  const Hom& f = q.surjection;
  if (!f.kernel().subset_of(ideal_intersect(p, l.jac())) || !disjoint(p, s)) return vacuous();
  const auto qa = ctx.analysis(q.ring);
  const IdealSet fp = image_ideal(f, p);
  const SubsetS fs = image_subset(f, s);
  if (!disjoint(fp, fs)) return vacuous();
  const auto t = rsj_witness(*qa, fp, fs);
  if (!t) return vacuous();
  bool ok = false;
  for (Elem e : s.elements()) ok = ok || (f(e) == *t && rsj_with(l.a(), p, s, e));
  return ok ? passed() : violated("P is not right S-𝒥 with a preimage of the witness");
}

Outcome check_p31(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  const auto& lat = l.a().lattice();
  const auto star = jacobson_star(p, lat);
  bool any = false;
  for (Elem e : s.elements()) {
    if (!(colon_span(l.a(), l.jac(), e) == l.jac())) continue;
    any = true;
    const bool lhs = rsj_with(l.a(), p, s, e);
    bool rhs = span_within(l.a(), p, e, l.jac().members());
    // With an identity xRy ⊆ P depends only on ⟨x⟩ and ⟨y⟩.
    for (const auto& [x, rx] : lat.principal_classes()) {
      if (!rhs) break;
      if (span_within(l.a(), lat[x], e, star.ideal.members())) continue;
      for (const auto& [y, ry] : lat.principal_classes()) {
        if (product_within(lat[x], lat[y], p) && !span_within(l.a(), lat[y], e, p.members())) {
          rhs = false;
          break;
        }
      }
    }
    if (lhs != rhs) return iff(lhs, rhs, [&] { return "criterion disagrees at s = " + l.r().format(e); });
  }
  return any ? passed() : vacuous();
}

Outcome check_p32(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet p = l.ideal(0);
  const SubsetS s = l.subset(0);
  if (l.param(0) == 1) {
    bool concl = false;
    for (Elem e : s.elements()) concl = concl || span_within(l.a(), p, e, l.jac().members());
    return implies(rsj(l.a(), p, s), concl, [] { return std::string("P ⊄ (𝒥(R):⟨s⟩) for every s"); });
  }
  return iff(rsj(l.a(), p, s), is_right_S_prime(l.a(), p, s).verdict,
             [] { return std::string("𝒥(R): right S-𝒥 and right S-prime disagree"); });
}

Outcome check_p33(HarnessContext& ctx, const Instance& in) {
  Loaded l(ctx, in);
  const IdealSet i = l.ideal(0);
  const SubsetS s = l.subset(0);
  bool hyp = false;
  for (Elem e : s.elements()) hyp = hyp || j_ideal(l.a(), colon_span(l.a(), l.jac(), e));
  return implies(hyp && rsj(l.a(), i, s), is_superfluous(i, l.a().lattice()),
                 [] { return std::string("right S-𝒥-ideal that is not superfluous"); });
}

// ---------------------------------------------------------------- generators

std::vector<Instance> gen_p2(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    for (const auto& i : v.info->ideals) out.push_back(make(v, {i}, {}));
  });
  return out;
}

std::vector<Instance> gen_p3(const CorpusSpec& c, HarnessContext& ctx) {
  auto out = pairs(c, ctx, comm_id, {{0}});
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    for (const auto& i : v.info->ideals) out.push_back(make(v, {i}, {}, {1}));
    const IdealSet& j = v.analysis->jacobson();
    for (std::size_t t = 0; t < v.subsets.size(); ++t) {
      if (disjoint(j, v.subsets[t])) out.push_back(make(v, {spec(j)}, {v.info->subsets[t]}, {2}));
    }
  });
  return out;
}

std::vector<Instance> gen_p8(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    if (v.ring->size() > 200) return;
    for (std::size_t k = 0; k < v.ideals.size(); ++k) {
      const IdealSet& i = v.ideals[k];
      if (i.is_zero()) continue;
      Instance probe = make(v, {v.info->ideals[k]}, {});
      const RingPtr ir = ctx.derived(ideal_ring_key(probe), [&] { return make_ideal_as_ring(i); });
      const auto& lat = ctx.analysis(ir)->lattice();
      for (std::size_t t = 0; t < v.subsets.size(); ++t) {
        if (!disjoint(i, v.subsets[t])) continue;
        for (std::size_t q = 0; q < lat.whole_index() && q < 6; ++q) {
          out.push_back(make(v, {v.info->ideals[k], spec(lat[q])}, {v.info->subsets[t]}));
        }
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p10(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    if (v.ring->size() > 100) return;
    const auto& names = v.info->ideals;
    for (std::size_t t = 0; t < v.subsets.size() && t < 3; ++t) {
      const SubsetS& s = v.subsets[t];
      for (std::size_t a = 0; a < v.ideals.size(); ++a) {
        if (!avoids_all_colons(*v.analysis, v.ideals[a], s)) continue;
        for (std::size_t i = 0; i < v.ideals.size(); ++i) {
          out.push_back(make(v, {names[a], names[i]}, {v.info->subsets[t]}, {2}));
          const IdealSet ai = ideal_product(v.ideals[a], v.ideals[i]);
          for (std::size_t j = i + 1; j < v.ideals.size(); ++j) {
            if (ideal_product(v.ideals[a], v.ideals[j]) == ai) {
              out.push_back(make(v, {names[a], names[i], names[j]}, {v.info->subsets[t]}, {1}));
            }
          }
        }
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p11(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    for (std::size_t k = 0; k < v.ideals.size(); ++k) {
      std::vector<Elem> outside;
      for (Elem x : v.analysis->class_representatives()) {
        if (!v.ideals[k].contains(x) && outside.size() < 3) outside.push_back(x);
      }
      for (std::size_t t = 0; t < v.subsets.size(); ++t) {
        if (!disjoint(v.ideals[k], v.subsets[t])) continue;
        for (Elem x : outside) out.push_back(make(v, {v.info->ideals[k]}, {v.info->subsets[t]}, {x}));
        if (outside.size() >= 2) {
          out.push_back(make(v, {v.info->ideals[k]}, {v.info->subsets[t]}, {outside[0], outside[1]}));
        }
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p12(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    const auto& lat = v.analysis->lattice();
    for (std::size_t t = 0; t < v.subsets.size(); ++t) {
      for (std::size_t k = 0; k < lat.whole_index(); ++k) {
        if (!disjoint(lat[k], v.subsets[t])) continue;
        for (std::int64_t part : {1, 2}) out.push_back(make(v, {spec(lat[k])}, {v.info->subsets[t]}, {part}));
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p14(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    const auto& names = v.info->ideals;
    for (std::size_t k = 0; k < v.ideals.size(); ++k) {
      const IdealSet& kk = v.ideals[k];
      if (kk.is_zero()) continue;
      const auto& qlat = ctx.analysis(ctx.quotient(kk).ring)->lattice();
      for (std::size_t t = 0; t < v.subsets.size(); ++t) {
        for (std::size_t p = 0; p < v.ideals.size(); ++p) {
          if (kk.subset_of(v.ideals[p]) && disjoint(v.ideals[p], v.subsets[t])) {
            out.push_back(make(v, {names[p], names[k]}, {v.info->subsets[t]}, {0, 1}));
          }
        }
        if (!kk.subset_of(v.analysis->jacobson())) continue;
        for (std::size_t q = 0; q < qlat.whole_index() && q < 6; ++q) {
          out.push_back(make(v, {spec(qlat[q]), names[k]}, {v.info->subsets[t]}, {0, 2}));
        }
      }
    }
    if (const auto* prod = as<ProductRing>(*v.ring)) {
      ElementSet ker(v.ring->size());
      for (Elem y = 0; y < prod->second()->size(); ++y) ker.insert(prod->pair(0, y));
      for (std::size_t t = 0; t < v.subsets.size(); ++t) {
        for (std::size_t p = 0; p < v.ideals.size(); ++p) {
          if (ker.subset_of(v.ideals[p].members()) && disjoint(v.ideals[p], v.subsets[t])) {
            out.push_back(make(v, {names[p]}, {v.info->subsets[t]}, {1, 1}));
          }
        }
      }
    }
    if (const auto* zn = as<ZnRing>(*v.ring)) {
      const std::uint32_t n = zn->modulus();
      for (std::uint32_t m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        const RingPtr target = ctx.ring("Z" + std::to_string(m));
        const Hom f = zn_reduction(v.ring, target);
        const auto& tlat = ctx.analysis(target)->lattice();
        for (std::size_t t = 0; t < v.subsets.size(); ++t) {
          for (std::size_t p = 0; p < v.ideals.size(); ++p) {
            if (f.kernel().subset_of(v.ideals[p]) && disjoint(v.ideals[p], v.subsets[t])) {
              out.push_back(make(v, {names[p]}, {v.info->subsets[t]}, {2, 1, m}));
            }
          }
          if (!f.kernel().subset_of(v.analysis->jacobson())) continue;
          for (std::size_t q = 0; q < tlat.whole_index(); ++q) {
            out.push_back(make(v, {spec(tlat[q])}, {v.info->subsets[t]}, {2, 2, m}));
          }
        }
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p15(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    const auto& names = v.info->ideals;
    for (std::size_t t = 0; t < v.subsets.size(); ++t) {
      for (std::size_t p2 = 0; p2 < v.ideals.size(); ++p2) {
        if (!disjoint(v.ideals[p2], v.subsets[t])) continue;
        for (std::size_t p1 = 0; p1 < v.ideals.size(); ++p1) {
          if (!v.ideals[p1].subset_of(v.ideals[p2])) continue;
          for (std::int64_t part : {1, 2, 3}) out.push_back(make(v, {names[p1], names[p2]}, {v.info->subsets[t]}, {part}));
        }
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p16(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    const auto& names = v.info->ideals;
    for (std::size_t t = 0; t < v.subsets.size(); ++t) {
      std::vector<std::string> family;
      for (std::size_t a = 0; a < v.ideals.size(); ++a) {
        if (!disjoint(v.ideals[a], v.subsets[t])) continue;
        family.push_back(names[a]);
        for (std::size_t b = a + 1; b < v.ideals.size(); ++b) {
          if (disjoint(v.ideals[b], v.subsets[t])) out.push_back(make(v, {names[a], names[b]}, {v.info->subsets[t]}, {0}));
        }
      }
      if (family.size() > 2) out.push_back(make(v, family, {v.info->subsets[t]}, {1}));
    }
  });
  return out;
}

std::vector<Instance> gen_p17(const CorpusSpec& c, HarnessContext& ctx) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    const auto* prod = as<ProductRing>(*v.ring);
    if (prod == nullptr) return;
    const auto f1 = small_sets(ctx, prod->first(), 4, 3);
    const auto f2 = small_sets(ctx, prod->second(), 4, 3);
    for (const auto& s1 : f1.subsets) {
      for (const auto& s2 : f2.subsets) {
        for (const auto& i : f1.ideals) out.push_back(make(v, {spec(i)}, {subset_spec(s1), subset_spec(s2)}, {1}));
        for (const auto& i : f2.ideals) out.push_back(make(v, {spec(i)}, {subset_spec(s1), subset_spec(s2)}, {2}));
      }
    }
    if (v.info->expr == "Z36 x Z8") {
      out.push_back(make(v, {"gen(4)"}, {"mulclosed(1, 3, 9, 27)", "mulclosed(0, 2, 4)"}, {1}));
    } else if (v.info->expr == "Z36 x Z36") {
      out.push_back(make(v, {"gen(4)"}, {"mulclosed(1, 3, 9, 27)", "mulclosed(1, 3, 9, 27)"}, {1}));
    }
  });
  return out;
}

template <class T>
std::vector<Instance> gen_over_base(const CorpusSpec& c, HarnessContext& ctx,
                                    const std::function<std::vector<std::vector<std::int64_t>>(const T&)>& params) {
  std::vector<Instance> out;
  for_views(c, ctx, comm_id, [&](const RingView& v) {
    const auto* t = as<T>(*v.ring);
    if (t == nullptr) return;
    auto more = base_pairs(v, ctx, t->base(), params(*t));
    out.insert(out.end(), more.begin(), more.end());
  });
  return out;
}

// (P, K) with K ⊆ P for the canonical surjection R -> R/K; `in_radical` also
// asks for K ⊆ 𝒥(R).
std::vector<Instance> gen_surjections(const CorpusSpec& c, HarnessContext& ctx, bool in_radical) {
  std::vector<Instance> out;
  for_views(c, ctx, with_id, [&](const RingView& v) {
    const auto& names = v.info->ideals;
    for (std::size_t k = 0; k < v.ideals.size(); ++k) {
      const IdealSet& kk = v.ideals[k];
      if (kk.is_zero() || (in_radical && !kk.subset_of(v.analysis->jacobson()))) continue;
      for (std::size_t t = 0; t < v.subsets.size(); ++t) {
        for (std::size_t p = 0; p < v.ideals.size(); ++p) {
          if (kk.subset_of(v.ideals[p]) && disjoint(v.ideals[p], v.subsets[t])) {
            out.push_back(make(v, {names[p], names[k]}, {v.info->subsets[t]}));
          }
        }
      }
    }
  });
  return out;
}

std::vector<Instance> gen_p32(const CorpusSpec& c, HarnessContext& ctx) {
  auto out = pairs(c, ctx, with_id, {{1}});
  for_views(c, ctx, with_id, [&](const RingView& v) {
    const IdealSet& j = v.analysis->jacobson();
    for (std::size_t t = 0; t < v.subsets.size(); ++t) {
      if (disjoint(j, v.subsets[t])) out.push_back(make(v, {spec(j)}, {v.info->subsets[t]}, {2}));
    }
  });
  return out;
}

bool is_local(const RingView& v) {
  const auto& lat = v.analysis->lattice();
  std::size_t maximal = 0;
  for (std::size_t k = 0; k < lat.size(); ++k) maximal += v.analysis->is_maximal(k) ? 1 : 0;
  return maximal == 1;
}

Generator over_pairs(Filter f, std::vector<std::vector<std::int64_t>> params = {{}}) {
  return [f = std::move(f), params = std::move(params)](const CorpusSpec& c, HarnessContext& ctx) {
    return pairs(c, ctx, f, params);
  };
}

}  // namespace

const std::vector<PropertyImpl>& property_impls() {
  static const std::vector<PropertyImpl> impls = {
      {"P1", over_pairs(comm_id), check_p1},
      {"P2", gen_p2, check_p2},
      {"P3", gen_p3, check_p3},
      {"P4", over_pairs(comm_id), check_p4},
      {"P5", over_pairs(comm_id, {{0}, {1}}), check_p5},
      {"P6", over_pairs(comm_id), check_p6},
      {"P7", over_pairs(comm_id), check_p7},
      {"P8", gen_p8, check_p8},
      {"P9", over_pairs(comm_id), check_p9},
      {"P10", gen_p10, check_p10},
      {"P11", gen_p11, check_p11},
      {"P12", gen_p12, check_p12},
      {"P13", over_pairs(comm_id), check_p13},
      {"P14", gen_p14, check_p14},
      {"P15", gen_p15, check_p15},
      {"P16", gen_p16, check_p16},
      {"P17", gen_p17, check_p17},
      {"P18",
       [](const CorpusSpec& c, HarnessContext& ctx) {
         return gen_over_base<TruncatedPolyRing>(c, ctx, [](const TruncatedPolyRing&) {
           return std::vector<std::vector<std::int64_t>>{{}};
         });
       },
       check_p18},
      {"P20",
       [](const CorpusSpec& c, HarnessContext& ctx) {
         return gen_over_base<IdealizationRing>(c, ctx, [](const IdealizationRing&) {
           return std::vector<std::vector<std::int64_t>>{{}};
         });
       },
       check_p20},
      {"P21",
       [](const CorpusSpec& c, HarnessContext& ctx) {
         return gen_over_base<IdealizationRing>(c, ctx, [](const IdealizationRing& r) {
           std::vector<std::vector<std::int64_t>> ds;
           const auto m = static_cast<std::int64_t>(r.module().size());
           for (std::int64_t d = 1; d <= m; ++d) {
             if (m % d == 0) ds.push_back({d});
           }
           return ds;
         });
       },
       check_p21},
      {"P22",
       [](const CorpusSpec& c, HarnessContext& ctx) {
         return gen_over_base<AmalgamationRing>(c, ctx, [](const AmalgamationRing&) {
           return std::vector<std::vector<std::int64_t>>{{1}, {2}};
         });
       },
       check_p22},
      {"P23", over_pairs(with_id), check_p23},
      {"P24", over_pairs(comm_id), check_p24},
      {"P25", over_pairs(with_id), check_p25},
      {"P26", over_pairs(with_id), check_p26},
      {"P27", over_pairs(with_id), check_p27},
      {"P28", over_pairs(with_id), check_p28},
      {"P29", [](const CorpusSpec& c, HarnessContext& ctx) { return gen_surjections(c, ctx, false); }, check_p29},
      {"P30", [](const CorpusSpec& c, HarnessContext& ctx) { return gen_surjections(c, ctx, true); }, check_p30},
      {"P31", over_pairs(with_id), check_p31},
      {"P32", gen_p32, check_p32},
      {"P33",
       [](const CorpusSpec& c, HarnessContext& ctx) {
         std::vector<Instance> out;
         for (auto& x : pairs(c, ctx, with_id)) {
           for (const auto& info : c.rings) {
             if (info.expr == x.ring_expr && is_local(ctx.view(info))) out.push_back(std::move(x));
           }
         }
         return out;
       },
       check_p33},
  };
  return impls;
}

const PropertyImpl* find_impl(const std::string& id) {
  for (const auto& p : property_impls()) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

}  // namespace ringlab
