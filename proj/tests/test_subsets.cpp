#include "doctest.h"

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/subsets.hpp"

using namespace ringlab;

namespace {

RingPtr ring_of(const std::string& text) { return elaborate(parse_ring_expr(text)); }

}  // namespace

TEST_CASE("validation") {
  const SubsetS s = validate_subset(make_zn(36), std::vector<Elem>{1, 3, 9, 27});
  CHECK(s.size() == 4);
  CHECK(s.kind() == SubsetKind::mult_closed);
  CHECK(s.format() == "{1, 3, 9, 27}");
  CHECK(validate_subset(make_zn(8), std::vector<Elem>{0, 2, 4}).size() == 3);

  const RingPtr m = make_matrix(2, make_zn(12));
  const auto& mat = static_cast<const MatrixRing&>(*m);
  const SubsetS ms = validate_subset(m, std::vector<Elem>{mat.scalar(3), mat.scalar(9)}, SubsetKind::m_system);
  CHECK(ms.kind() == SubsetKind::m_system);
  CHECK(ms.size() == 2);
}

TEST_CASE("invalid subsets carry a witness") {
  const RingPtr z6 = make_zn(6);
  const ElementSet bad = ElementSet::of(6, {2, 3});
  const auto w = subset_violation(*z6, bad, SubsetKind::mult_closed);
  REQUIRE(w);
  CHECK_FALSE(bad.contains(z6->mul(w->first, w->second)));
  try {
    validate_subset(z6, std::vector<Elem>{2, 3});
    FAIL("expected invalid-subset");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::invalid_subset);
  }
  CHECK_THROWS_AS(validate_subset(z6, std::vector<Elem>{}), RingError);
  CHECK_THROWS_AS(validate_subset(make_zn(36), std::vector<Elem>{3, 9}), RingError);
}

TEST_CASE("generated closures") {
  const RingPtr z36 = make_zn(36);
  CHECK(generate_mulclosed(z36, {3}).elements() == std::vector<Elem>{3, 9, 27});
  CHECK(generate_mulclosed(z36, {5}).size() == 6);
  CHECK(generate_mulclosed(z36, {1}).elements() == std::vector<Elem>{1});
  CHECK(generate_mulclosed(z36, {0}).elements() == std::vector<Elem>{0});
  for (Elem a = 0; a < 36; ++a) {
    const SubsetS s = generate_mulclosed(z36, {a});
    CHECK_FALSE(subset_violation(*z36, s.members(), SubsetKind::mult_closed));
    CHECK_FALSE(subset_violation(*z36, s.members(), SubsetKind::m_system));
  }
}

TEST_CASE("enumeration strategies") {
  const RingPtr z6 = make_zn(6);
  const auto single = enumerate_subsets(z6, SubsetStrategy::singleton_generated);
  CHECK_FALSE(single.truncated);
  for (Elem a = 0; a < 6; ++a) {
    const SubsetS c = generate_mulclosed(z6, {a});
    CHECK(std::count(single.subsets.begin(), single.subsets.end(), c) == 1);
  }

  const auto all = enumerate_subsets(make_zn(4), SubsetStrategy::budgeted_all);
  std::size_t expect = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Elem> xs;
    for (Elem e = 0; e < 4; ++e) {
      if (mask & (1u << e)) xs.push_back(e);
    }
    if (!subset_violation(*make_zn(4), ElementSet::of(4, xs), SubsetKind::mult_closed)) ++expect;
  }
  CHECK(all.subsets.size() == expect);

  for (const char* e : {"Z6", "Z2 x Z3", "M(2, Z2)"}) {
    const RingPtr r = ring_of(e);
    const auto with = enumerate_subsets(r, SubsetStrategy::with_identity);
    const SubsetS one = validate_subset(r, std::vector<Elem>{*r->one()});
    CHECK(std::count(with.subsets.begin(), with.subsets.end(), one) == 1);
  }
}

TEST_CASE("derived subsets") {
  const RingPtr zz = ring_of("Z36 x Z8");
  const auto& p = static_cast<const ProductRing&>(*zz);
  const SubsetS s1 = validate_subset(p.first(), std::vector<Elem>{1, 3, 9, 27});
  const SubsetS x = validate_subset(p.second(), std::vector<Elem>{0, 2, 4});
  const SubsetS sx = product_subset(zz, s1, x);
  CHECK(sx.size() == 12);
  CHECK(sx.contains(p.pair(3, 2)));

  const RingPtr t = ring_of("idealize(Z12, 6)");
  const SubsetS st = idealization_subset(t, validate_subset(make_zn(12), std::vector<Elem>{1, 5}));
  CHECK(st.size() == 12);

  const Hom f = zn_reduction(p.first(), make_zn(12));
  const SubsetS img = image_subset(f, s1);
  CHECK(img.elements() == std::vector<Elem>{1, 3, 9});

  const RingPtr a = ring_of("amalg(Z36, Z12, mod, gen(6))");
  CHECK(amalgamation_subset(a, s1).size() == 4);
}
