#include "doctest.h"

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/ring_checks.hpp"

using namespace ringlab;

namespace {

RingPtr ring_of(const std::string& text) { return elaborate(parse_ring_expr(text)); }

bool axioms_hold(const Ring& r) { return ring_axioms_check(r, AxiomEffort::exhaustive).passed; }

}  // namespace

TEST_CASE("Zn basics") {
  const RingPtr z36 = make_zn(36);
  CHECK(z36->size() == 36);
  CHECK(z36->one() == Elem{1});
  CHECK(z36->is_commutative());
  CHECK(make_zn(2)->size() == 2);
  CHECK(make_zn(12)->mul(3, 8) == 0);
  CHECK(make_zn(12)->mul(5, 7) == 11);
  CHECK_THROWS_AS(make_zn(1), RingError);
  try {
    make_zn(0);
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::invalid_parameter);
  }
}

TEST_CASE("products") {
  const RingPtr r = make_product(make_zn(36), make_zn(8));
  CHECK(r->size() == 288);
  const auto& p = static_cast<const ProductRing&>(*r);
  CHECK(r->one() == p.pair(1, 1));
  CHECK(p.split(p.pair(7, 5)) == std::pair<Elem, Elem>{7, 5});

  const RingPtr z2z2 = make_product(make_zn(2), make_zn(2));
  const auto& q = static_cast<const ProductRing&>(*z2z2);
  CHECK(z2z2->mul(q.pair(1, 0), q.pair(0, 1)) == q.pair(0, 0));
  CHECK(axioms_hold(*z2z2));
}

TEST_CASE("matrix rings") {
  const RingPtr m = make_matrix(2, make_zn(12));
  CHECK(m->size() == 20736);
  CHECK_FALSE(m->is_commutative());
  const auto& mat = static_cast<const MatrixRing&>(*m);
  CHECK(m->mul(mat.scalar(3), mat.scalar(3)) == mat.scalar(9));
  CHECK(m->one() == mat.scalar(1));
  for (Elem e = 0; e < m->size(); e += 97) CHECK(mat.encode(mat.entries(e)) == e);
  CHECK(ring_axioms_check(*m, AxiomEffort::sampled, kDefaultAxiomSeed, 20'000).passed);

  const RingPtr m1 = make_matrix(1, make_zn(6));
  const RingPtr z6 = make_zn(6);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      CHECK(m1->add(a, b) == z6->add(a, b));
      CHECK(m1->mul(a, b) == z6->mul(a, b));
    }
  }
  CHECK(ring_axioms_check(*make_matrix(2, make_zn(6))).passed);
}

TEST_CASE("quotients") {
  const RingPtr z36 = make_zn(36);
  const auto q = make_quotient(ideal_generate(z36, {12}));
  CHECK(q.ring->size() == 12);
  CHECK(q.surjection.kernel() == ideal_generate(z36, {12}));
  const RingPtr z12 = make_zn(12);
  for (Elem a = 0; a < 36; ++a) {
    for (Elem b = 0; b < 36; ++b) {
      CHECK(q.surjection(z36->mul(a, b)) == q.ring->mul(q.surjection(a), q.surjection(b)));
    }
    CHECK(q.ring->format(q.surjection(a)) == z12->format(a % 12));
  }
  CHECK(make_quotient(ideal_generate(z36, {4})).ring->size() == 4);
  const auto same = make_quotient(IdealSet::zero(z36));
  CHECK(same.ring->size() == 36);
  for (Elem a = 0; a < 36; ++a) CHECK(same.surjection(a) == a);
}

TEST_CASE("idealization") {
  const RingPtr z36 = make_zn(36);
  const RingPtr t = make_idealization(Module::cyclic(z36, 6));
  CHECK(t->size() == 216);
  const auto& id = static_cast<const IdealizationRing&>(*t);
  CHECK(t->one() == id.pair(1, 0));
  for (Elem e = 0; e < t->size(); ++e) CHECK(t->mul(e, id.pair(1, 0)) == e);
  for (Elem m1 = 0; m1 < 6; ++m1) {
    for (Elem m2 = 0; m2 < 6; ++m2) CHECK(t->mul(id.pair(0, m1), id.pair(0, m2)) == id.pair(0, 0));
  }
  CHECK(t->mul(id.pair(5, 1), id.pair(2, 3)) == id.pair(10, (5 * 3 + 2 * 1) % 6));
  CHECK(axioms_hold(*t));
  CHECK_THROWS_AS(Module::cyclic(z36, 5), RingError);
}

TEST_CASE("amalgamation") {
  const RingPtr z36 = make_zn(36);
  const RingPtr z12 = make_zn(12);
  const RingPtr a = make_amalgamation(zn_reduction(z36, z12), ideal_generate(z12, {6}));
  CHECK(a->size() == 72);
  CHECK(axioms_hold(*a));
  const auto& am = static_cast<const AmalgamationRing&>(*a);
  for (Elem e = 0; e < a->size(); ++e) {
    const auto [r, y] = am.point(e);
    CHECK((y + 12 - r % 12) % 6 == 0);
  }
  CHECK(make_amalgamation(zn_reduction(z36, z12), IdealSet::zero(z12))->size() == 36);
}

TEST_CASE("truncated polynomials") {
  const RingPtr t = make_truncated_poly(make_zn(4), 2);
  CHECK(t->size() == 16);
  const auto& tp = static_cast<const TruncatedPolyRing&>(*t);
  const Elem x = tp.encode({0, 1});
  CHECK(t->mul(x, x) == t->zero());
  CHECK(t->mul(tp.encode({1, 1}), tp.encode({1, 3})) == t->one());
  CHECK(axioms_hold(*t));
  CHECK(make_truncated_poly(make_zn(5), 1)->size() == 5);
}

TEST_CASE("ideal as a ring") {
  const RingPtr z36 = make_zn(36);
  const RingPtr r = make_ideal_as_ring(ideal_generate(z36, {6}));
  CHECK(r->size() == 6);
  CHECK_FALSE(r->has_identity());
  CHECK(axioms_hold(*r));
  const IdealSet j = jacobson_radical(*enumerate_ideals(r));
  CHECK(j.size() == 6);
  CHECK(make_ideal_as_ring(IdealSet::whole(z36))->one().has_value());
}

TEST_CASE("homomorphisms") {
  const Hom f = zn_reduction(36, 12);
  CHECK(f.is_surjective());
  CHECK(f.kernel().elements() == std::vector<Elem>{0, 12, 24});
  CHECK(identity_hom(make_zn(10)).kernel().is_zero());
  const RingPtr z36 = make_zn(36);
  CHECK(canonical_surjection(ideal_generate(z36, {4})).kernel() == ideal_generate(z36, {4}));
  std::vector<Elem> bad(36);
  for (Elem a = 0; a < 36; ++a) bad[a] = (a + 1) % 12;
  CHECK_THROWS_AS(Hom::make(z36, make_zn(12), bad), RingError);
}

TEST_CASE("center") {
  const RingPtr m = make_matrix(2, make_zn(6));
  const auto& mat = static_cast<const MatrixRing&>(*m);
  std::vector<Elem> scalars;
  for (Elem c = 0; c < 6; ++c) scalars.push_back(mat.scalar(c));
  std::sort(scalars.begin(), scalars.end());
  CHECK(center(*m).elements() == scalars);
  CHECK(center(*make_zn(36)).count() == 36);
}

TEST_CASE("axiom check detects a corrupted table") {
  const RingPtr z6 = make_zn(6);
  std::vector<Elem> add(36), mul(36);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      add[a * 6 + b] = z6->add(a, b);
      mul[a * 6 + b] = z6->mul(a, b);
    }
  }
  CHECK(ring_axioms_check(*make_table_ring(6, add, mul, 0)).passed);
  mul[2 * 6 + 3] = 1;
  const auto rep = ring_axioms_check(*make_table_ring(6, add, mul, 0));
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.law.empty());
}

TEST_CASE("every small construction satisfies the axioms") {
  for (const char* e : {"Z36", "Z4 x Z6", "quot(Z36, gen(4))", "idealize(Z12, 6)", "trunc(Z6, 3)",
                        "idealring(Z36, gen(6))", "amalg(Z12, Z6, mod, gen(3))", "M(2, Z2)"}) {
    CAPTURE(e);
    CHECK(axioms_hold(*ring_of(e)));
  }
}
