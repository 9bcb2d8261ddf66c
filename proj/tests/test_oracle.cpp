#include "doctest.h"

#include "naive_reference.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/expr.hpp"

using namespace ringlab;

TEST_CASE("reference values") {
  const RingPtr z36 = make_zn(36);
  const naive::Reference ref(*z36);
  CHECK(ref.ideals().size() == 9);
  CHECK(naive::members(ref.jacobson()) == std::vector<Elem>{0, 6, 12, 18, 24, 30});
  CHECK(naive::members(ref.nilradical()) == std::vector<Elem>{0, 6, 12, 18, 24, 30});
  CHECK(ref.verdict(Predicate::s_j, ref.ideal_of({4}), {1, 3, 9, 27}, false));
  CHECK(ref.holds_for(Predicate::s_j, ref.ideal_of({4}), 3));
  CHECK_FALSE(ref.holds_for(Predicate::s_j, ref.ideal_of({4}), 1));
  CHECK_FALSE(ref.verdict(Predicate::j, ref.ideal_of({4}), {}, false));

  const naive::Reference m(*elaborate(parse_ring_expr("M(2, Z2)")));
  CHECK(m.ideals().size() == 2);
  CHECK(naive::members(m.jacobson()) == std::vector<Elem>{0});
}

TEST_CASE("library agrees with the reference on a small corpus") {
  CorpusConfig c;
  c.families = {"zn", "products", "idealizations", "truncated", "ideal-rings"};
  c.extra_rings = {"M(2, Z2)", "M(2, Z3)", "quot(Z36, gen(4))", "amalg(Z12, Z6, mod, gen(3))"};
  c.max_size = 64;
  c.max_ideals_per_ring = 4;
  c.max_subsets_per_ring = 3;
  const auto summary = naive::compare_corpus(build_corpus(c), 100);
  for (const auto& d : summary.disagreements) CAPTURE(d);
  CHECK(summary.disagreements.empty());
  CHECK(summary.rings > 20);
  CHECK(summary.instances > 50);
}
