#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/predicates.hpp"

namespace ringlab {

namespace {

RingPtr ring_of(const std::string& text) { return elaborate(parse_ring_expr(text)); }

ExampleResult run(std::string id, std::string description, const std::function<std::string()>& body) {
  ExampleResult r{std::move(id), std::move(description), false, ""};
  try {
    r.detail = body();
    r.passed = r.detail.rfind("ok", 0) == 0;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::string witness_text(const Ring& r, const CheckResult& c) {
  return c.witness_s ? r.format(*c.witness_s) : std::string("none");
}

}  // namespace

std::vector<ExampleResult> run_worked_examples() {
  std::vector<ExampleResult> out;
  out.push_back(run("E1", "Z36, I = <4>, S = {1, 3, 9, 27}: S-J with s = 3, not a J-ideal", [] {
    const RingPtr r = ring_of("Z36");
    const auto a = analyze(r);
    const IdealSet i = elaborate_ideal(r, parse_ideal_spec("gen(4)"));
    const SubsetS s = elaborate_subset(r, parse_subset_spec("mulclosed(1, 3, 9, 27)"));
    const auto j = is_J_ideal(*a, i);
    const auto sj = is_S_J_ideal(*a, i, s);
    const PairWitness two{PairWitness::Kind::elements, 2, 2};
    if (j.verdict || j.counterexample != two) return std::string("J-ideal check did not fail at (2, 2)");
    if (!sj.verdict || sj.witness_s != Elem{3}) return "S-J verdict wrong, witness " + witness_text(*r, sj);
    return std::string("ok: witness 3, J-ideal counterexample (2, 2)");
  }));
  out.push_back(run("E2", "Z36 x Z36, <4> x Z36, S1 x S1: ((2,1), (2,1)) violates for every s", [] {
    const RingPtr r = ring_of("Z36 x Z36");
    const auto a = analyze(r);
    const auto& prod = static_cast<const ProductRing&>(*r);
    const IdealSet p = elaborate_ideal(r, parse_ideal_spec("gen((4, 0), (0, 1))"));
    const SubsetS s1 = elaborate_subset(prod.first(), parse_subset_spec("mulclosed(1, 3, 9, 27)"));
    const SubsetS s = product_subset(r, s1, s1);
    if (is_S_J_ideal(*a, p, s).verdict) return std::string("verdict true");
    const Elem x = prod.pair(2, 1);
    const PairWitness pair{PairWitness::Kind::elements, x, x};
    for (Elem e : s.elements()) {
      if (!pair_violates(*a, Predicate::s_j, p, e, pair)) return "pair does not violate at s = " + r->format(e);
    }
    return "ok: false, pair violates all " + std::to_string(s.size()) + " elements of S";
  }));
  out.push_back(run("E3", "Z36 x Z8, <4> x Z8, S1 x {0, 2, 4}: S-J", [] {
    const RingPtr r = ring_of("Z36 x Z8");
    const auto a = analyze(r);
    const auto& prod = static_cast<const ProductRing&>(*r);
    const IdealSet p = elaborate_ideal(r, parse_ideal_spec("gen((4, 0), (0, 1))"));
    const SubsetS s1 = elaborate_subset(prod.first(), parse_subset_spec("mulclosed(1, 3, 9, 27)"));
    const SubsetS x = elaborate_subset(prod.second(), parse_subset_spec("mulclosed(0, 2, 4)"));
    const auto c = is_S_J_ideal(*a, p, product_subset(r, s1, x));
    if (!c.verdict) return std::string("verdict false");
    return "ok: true, witness " + witness_text(*r, c);
  }));
  const RingPtr m2 = ring_of("M(2, Z12)");
  const auto m2a = analyze(m2);
  const auto& mat = static_cast<const MatrixRing&>(*m2);
  out.push_back(run("E4", "M_2(Z12), P = M_2(<4>), S = {I, 3I, 9I}: right S-J with 3I, not a J-ideal", [&] {
    const IdealSet p = ideal_generate(m2, {mat.scalar(4)});
    const SubsetS s = validate_subset(m2, std::vector<Elem>{mat.scalar(1), mat.scalar(3), mat.scalar(9)},
                                      SubsetKind::m_system);
    if (is_J_ideal(*m2a, p).verdict) return std::string("P is a J-ideal");
    const auto c = is_right_S_J_ideal(*m2a, p, s, Method::lattice);
    if (!c.verdict) return std::string("right S-J verdict false");
    if (c.witness_s != mat.scalar(3) && c.witness_s != mat.scalar(9)) return "witness " + witness_text(*m2, c);
    if (violation_for(*m2a, Predicate::right_s_j, p, &s, mat.scalar(3), Method::lattice)) {
      return std::string("3I does not replay");
    }
    return "ok: witness " + witness_text(*m2, c) + ", 3I replays";
  }));
  out.push_back(run("E5", "J(Z36) = <6>, J(M_2(Z12)) = M_2(<6>), J(Z36 x Z8) = <6> x <2>", [&] {
    const RingPtr z = ring_of("Z36");
    const RingPtr zz = ring_of("Z36 x Z8");
    const auto& prod = static_cast<const ProductRing&>(*zz);
    if (!(analyze(z)->jacobson() == ideal_generate(z, {6}))) return std::string("J(Z36) wrong");
    if (!(m2a->jacobson() == ideal_generate(m2, {mat.scalar(6)}))) return std::string("J(M_2(Z12)) wrong");
    if (!(analyze(zz)->jacobson() == ideal_generate(zz, {prod.pair(6, 0), prod.pair(0, 2)}))) {
      return std::string("J(Z36 x Z8) wrong");
    }
    return std::string("ok: all three radicals match");
  }));
  return out;
}

}  // namespace ringlab
