#include "doctest.h"

#include "ringlab/analysis.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/radicals.hpp"

using namespace ringlab;

namespace {

RingPtr ring_of(const std::string& text) { return elaborate(parse_ring_expr(text)); }

IdealSet gen(const RingPtr& r, std::vector<Elem> gens) { return ideal_generate(r, gens); }

}  // namespace

TEST_CASE("Jacobson radical values") {
  const RingPtr z36 = make_zn(36);
  CHECK(analyze(z36)->jacobson().elements() == std::vector<Elem>{0, 6, 12, 18, 24, 30});
  CHECK(analyze(make_zn(7))->jacobson().is_zero());
  CHECK(analyze(make_zn(30))->jacobson().is_zero());

  const RingPtr zz = ring_of("Z36 x Z8");
  const auto& p = static_cast<const ProductRing&>(*zz);
  const IdealSet j = analyze(zz)->jacobson();
  CHECK(j.size() == 24);
  for (Elem e = 0; e < zz->size(); ++e) {
    const auto [a, b] = p.split(e);
    CHECK(j.contains(e) == (a % 6 == 0 && b % 2 == 0));
  }

  const RingPtr t = ring_of("idealize(Z36, 6)");
  const auto& id = static_cast<const IdealizationRing&>(*t);
  const IdealSet jt = analyze(t)->jacobson();
  for (Elem e = 0; e < t->size(); ++e) CHECK(jt.contains(e) == (id.split(e).first % 6 == 0));
}

TEST_CASE("Jacobson radical of a ring without identity") {
  const RingPtr z36 = make_zn(36);
  const RingPtr r = make_ideal_as_ring(gen(z36, {6}));
  const auto a = analyze(r);
  CHECK(a->jacobson().size() == 6);
  CHECK(a->zero_multiplication());

  const RingPtr s = make_ideal_as_ring(gen(z36, {4}));
  const auto& sr = static_cast<const IdealAsRing&>(*s);
  const IdealSet js = analyze(s)->jacobson();
  const IdealSet jz = analyze(z36)->jacobson();
  for (Elem e = 0; e < s->size(); ++e) CHECK(js.contains(e) == jz.contains(sr.to_base(e)));
}

TEST_CASE("crosscheck methods agree") {
  for (const char* e : {"Z36", "Z7", "Z36 x Z8", "M(2, Z4)", "idealize(Z36, 6)", "idealring(Z36, gen(6))",
                        "trunc(Z6, 3)", "amalg(Z36, Z12, mod, gen(6))"}) {
    CAPTURE(e);
    const auto a = analyze(ring_of(e));
    const auto rep = jacobson_crosscheck(a->lattice());
    CHECK(rep.agreement);
    CHECK(rep.jacobson == a->jacobson());
    CHECK_FALSE(rep.methods_used.empty());
  }
}

TEST_CASE("prime radical") {
  CHECK(analyze(make_zn(36))->prime_radical() == gen(make_zn(36), {6}));
  CHECK(analyze(make_zn(30))->prime_radical().is_zero());
  CHECK(analyze(make_zn(5))->prime_radical().is_zero());
  for (const char* e : {"Z36", "Z8 x Z9", "M(2, Z4)", "idealize(Z12, 6)", "trunc(Z4, 3)"}) {
    CAPTURE(e);
    const auto a = analyze(ring_of(e));
    CHECK(a->prime_radical().subset_of(a->jacobson()));
  }
}

TEST_CASE("semisimple quotient") {
  for (const char* e : {"Z36", "Z6 x Z8", "M(2, Z4)", "idealize(Z9, 3)"}) {
    CAPTURE(e);
    const auto a = analyze(ring_of(e));
    const auto q = make_quotient(a->jacobson());
    CHECK(analyze(q.ring)->jacobson().is_zero());
  }
}

TEST_CASE("Jacobson radical is the intersection of maximal ideals in commutative rings") {
  for (const char* e : {"Z36", "Z6 x Z8", "trunc(Z6, 2)", "idealize(Z12, 4)"}) {
    CAPTURE(e);
    const auto a = analyze(ring_of(e));
    ElementSet meet = ElementSet::full(a->ring().size());
    for (std::size_t k = 0; k < a->lattice().size(); ++k) {
      if (a->is_maximal(k)) meet = meet & a->lattice()[k].members();
    }
    CHECK(meet == a->jacobson().members());
  }
}

TEST_CASE("J star") {
  const RingPtr z = make_zn(36);
  const auto a = analyze(z);
  const auto four = jacobson_star(gen(z, {4}), a->lattice());
  CHECK(four.ideal == gen(z, {2}));
  CHECK_FALSE(four.degenerate);
  CHECK(jacobson_star(IdealSet::zero(z), a->lattice()).ideal == a->jacobson());
  CHECK(jacobson_star(gen(z, {3}), a->lattice()).ideal == gen(z, {3}));
  CHECK(jacobson_star(IdealSet::whole(z), a->lattice()).degenerate);
}

TEST_CASE("units and quasi-regular elements") {
  CHECK(units(*make_zn(36)).count() == 12);
  CHECK(units(*make_zn(7)).count() == 6);
  CHECK(units(*ring_of("M(2, Z2)")).count() == 6);
  CHECK_THROWS_AS(units(*ring_of("idealring(Z36, gen(6))")), RingError);
  const ElementSet q = quasi_regular_set(*make_zn(7));
  CHECK(q.count() == 6);
  CHECK_FALSE(q.contains(6));
}
