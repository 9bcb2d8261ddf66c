#include "doctest.h"

#include "naive_reference.hpp"
#include "ringlab/analysis.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ideal.hpp"

using namespace ringlab;

namespace {

RingPtr ring_of(const std::string& text) { return elaborate(parse_ring_expr(text)); }

IdealSet gen(const RingPtr& r, std::vector<Elem> gens) { return ideal_generate(r, gens); }

}  // namespace

TEST_CASE("ideal generation") {
  const RingPtr z36 = make_zn(36);
  CHECK(gen(z36, {4}).elements() == std::vector<Elem>{0, 4, 8, 12, 16, 20, 24, 28, 32});
  CHECK(gen(z36, {0}).is_zero());
  CHECK(gen(z36, {5}).size() == 36);

  const RingPtr m = make_matrix(2, make_zn(12));
  const auto& mat = static_cast<const MatrixRing&>(*m);
  const IdealSet three = gen(m, {mat.scalar(3)});
  CHECK(three.size() == 256);
  for (Elem e = 0; e < m->size(); e += 11) {
    const auto entries = mat.entries(e);
    const bool in = std::all_of(entries.begin(), entries.end(), [](Elem x) { return x % 3 == 0; });
    CHECK(three.contains(e) == in);
  }
}

TEST_CASE("principal ideals match a naive closure") {
  for (const char* e : {"Z36", "Z4 x Z6", "M(2, Z2)", "idealize(Z8, 4)", "idealring(Z36, gen(6))"}) {
    CAPTURE(e);
    const RingPtr r = ring_of(e);
    const naive::Reference ref(*r);
    for (Elem a = 0; a < r->size(); ++a) CHECK(naive::same(ref.ideal_of({a}), gen(r, {a}).members()));
  }
}

TEST_CASE("lattice sizes") {
  CHECK(enumerate_ideals(make_zn(36))->size() == 9);
  CHECK(enumerate_ideals(ring_of("Z2 x Z2"))->size() == 4);
  CHECK(enumerate_ideals(make_zn(7))->size() == 2);

  const RingPtr m = make_matrix(2, make_zn(12));
  const auto lat = enumerate_ideals(m);
  REQUIRE(lat->size() == 6);
  const auto& mat = static_cast<const MatrixRing&>(*m);
  for (Elem d : {1u, 2u, 3u, 4u, 6u, 12u}) CHECK(lat->find(gen(m, {mat.scalar(d % 12)}).members()));

  const auto z = enumerate_ideals(make_zn(36));
  CHECK((*z)[z->zero_index()].is_zero());
  CHECK((*z)[z->whole_index()].size() == 36);
  CHECK_THROWS_AS(enumerate_ideals(ring_of("Z2 x Z2 x Z2 x Z2"), 8), RingError);
  CHECK_FALSE(enumerate_ideals(ring_of("Z2 x Z2 x Z2 x Z2"), 8, true)->complete());
}

TEST_CASE("lattice closed under sum, product and intersection") {
  for (const char* e : {"Z36", "Z6 x Z4", "M(2, Z4)", "trunc(Z4, 2)"}) {
    CAPTURE(e);
    const auto lat = enumerate_ideals(ring_of(e));
    for (const auto& a : lat->ideals()) {
      for (const auto& b : lat->ideals()) {
        CHECK(lat->find(ideal_sum(a, b).members()));
        CHECK(lat->find(ideal_product(a, b).members()));
        CHECK(lat->find(ideal_intersect(a, b).members()));
      }
    }
  }
}

TEST_CASE("sums, products and intersections in Z36") {
  const RingPtr z = make_zn(36);
  CHECK(ideal_sum(gen(z, {4}), gen(z, {6})) == gen(z, {2}));
  const IdealSet prod = ideal_product(gen(z, {4}), gen(z, {6}));
  const naive::Reference ref(*z);
  std::vector<Elem> pairwise;
  for (Elem a : gen(z, {4}).elements()) {
    for (Elem b : gen(z, {6}).elements()) pairwise.push_back(z->mul(a, b));
  }
  CHECK(naive::same(ref.ideal_of(pairwise), prod.members()));
  CHECK(prod == gen(z, {12}));
  CHECK(ideal_product(gen(z, {4}), IdealSet::zero(z)).is_zero());
  CHECK(ideal_intersect(gen(z, {4}), gen(z, {6})) == gen(z, {12}));
  CHECK(product_within(gen(z, {2}), gen(z, {2}), gen(z, {4})));
  CHECK_FALSE(product_within(gen(z, {2}), gen(z, {3}), gen(z, {4})));
  CHECK(ideal_power(gen(z, {6}), 2).is_zero());
  CHECK(is_nilpotent(gen(z, {6})));
  CHECK_FALSE(is_nilpotent(gen(z, {2})));
}

TEST_CASE("colon ideals") {
  const RingPtr z = make_zn(36);
  CHECK(colon(gen(z, {4}), {2}) == gen(z, {2}));
  CHECK(colon(gen(z, {6}), {3}) == gen(z, {2}));
  CHECK(colon(gen(z, {4}), {1}) == gen(z, {4}));
  for (Elem s = 0; s < 36; ++s) {
    const IdealSet c = colon(gen(z, {4}), {s});
    CHECK(gen(z, {4}).subset_of(c));
    CHECK(c.contains(1) == gen(z, {4}).contains(s));
  }
  const RingPtr m = make_matrix(2, make_zn(4));
  const auto& mat = static_cast<const MatrixRing&>(*m);
  const IdealSet two = gen(m, {mat.scalar(2)});
  CHECK(colon(IdealSet::zero(m), two.elements()) == two);
}

TEST_CASE("prime, maximal and superfluous ideals") {
  const RingPtr z = make_zn(36);
  const auto lat = enumerate_ideals(z);
  CHECK_FALSE(is_prime(gen(z, {6}), *lat));
  CHECK(is_prime(gen(z, {2}), *lat));
  CHECK(is_maximal(gen(z, {2}), *lat));
  CHECK(is_maximal(gen(z, {3}), *lat));
  CHECK_FALSE(is_maximal(gen(z, {4}), *lat));
  CHECK_FALSE(is_prime(IdealSet::whole(z), *lat));
  CHECK(is_superfluous(gen(z, {6}), *lat));
  CHECK_FALSE(is_superfluous(gen(z, {2}), *lat));

  const RingPtr f = make_zn(7);
  const auto flat = enumerate_ideals(f);
  CHECK(is_prime(IdealSet::zero(f), *flat));
  CHECK(is_maximal(IdealSet::zero(f), *flat));

  const auto flags = ideal_properties(gen(z, {6}), *lat);
  CHECK(flags.proper);
  CHECK(flags.nilpotent);
  CHECK(flags.prime == false);
  CHECK(flags.modular);
}

TEST_CASE("lattice primality agrees with the elementwise test") {
  for (const char* e : {"Z36", "Z30", "Z4 x Z6", "M(2, Z2)", "M(2, Z4)", "idealize(Z12, 6)"}) {
    CAPTURE(e);
    const RingPtr r = ring_of(e);
    const auto lat = enumerate_ideals(r);
    for (const auto& p : lat->ideals()) {
      bool elementwise = p.is_proper();
      for (Elem a = 0; a < r->size() && elementwise; ++a) {
        for (Elem b = 0; b < r->size() && elementwise; ++b) {
          bool inside = true;
          for (Elem x = 0; x < r->size() && inside; ++x) inside = p.contains(r->mul(r->mul(a, x), b));
          if (inside && !p.contains(a) && !p.contains(b)) elementwise = false;
        }
      }
      CHECK(is_prime(p, *lat) == elementwise);
    }
  }
}

TEST_CASE("minimal generating sets") {
  const RingPtr z = make_zn(36);
  CHECK(minimal_generating_set(gen(z, {4})) == std::vector<Elem>{4});
  const RingPtr m = make_matrix(2, make_zn(12));
  const auto& mat = static_cast<const MatrixRing&>(*m);
  const IdealSet p = gen(m, {mat.scalar(4)});
  CHECK(p.size() == 81);
  CHECK(gen(m, {mat.encode({4, 0, 0, 0})}) == p);
  const auto g = minimal_generating_set(p);
  CHECK(g.size() == 1);
  CHECK(gen(m, g) == p);
}
