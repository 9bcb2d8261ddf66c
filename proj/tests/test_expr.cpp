#include "doctest.h"

#include <random>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"

using namespace ringlab;

namespace {

using Rng = std::mt19937_64;

std::int64_t pick(Rng& g, std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(g); }

ElementLiteral random_literal(Rng& g, int depth) {
  const auto k = depth <= 0 ? 0 : pick(g, 0, 3);
  if (k == 0) return ElementLiteral::integer(pick(g, -50, 500));
  std::vector<ElementLiteral> items;
  const auto n = pick(g, k == 1 ? 2 : 1, 3);
  for (std::int64_t i = 0; i < n; ++i) items.push_back(random_literal(g, depth - 1));
  if (k == 1) return ElementLiteral::tuple(items);
  if (k == 2) return ElementLiteral::list(items);
  return ElementLiteral::poly(items);
}

IdealSpec random_ideal(Rng& g) {
  IdealSpec s;
  const auto n = pick(g, 1, 3);
  for (std::int64_t i = 0; i < n; ++i) s.gens.push_back(random_literal(g, 2));
  return s;
}

RingExpr random_ring(Rng& g, int depth) {
  const auto k = depth <= 0 ? 0 : pick(g, 0, 7);
  switch (k) {
    case 1: return RingExpr::prod(random_ring(g, depth - 1), random_ring(g, depth - 1));
    case 2: return RingExpr::mat(pick(g, 1, 4), random_ring(g, depth - 1));
    case 3: return RingExpr::quot(random_ring(g, depth - 1), random_ideal(g));
    case 4: return RingExpr::idealize(random_ring(g, depth - 1), pick(g, 1, 40));
    case 5: return RingExpr::amalg(random_ring(g, depth - 1), random_ring(g, depth - 1), random_ideal(g));
    case 6: return RingExpr::trunc(random_ring(g, depth - 1), pick(g, 1, 5));
    case 7: return RingExpr::idealring(random_ring(g, depth - 1), random_ideal(g));
    default: return RingExpr::zn(pick(g, 2, 1000));
  }
}

SourcePos syntax_pos(const std::string& text) {
  try {
    parse_ring_expr(text);
  } catch (const SyntaxError& e) {
    return e.pos();
  }
  FAIL("expected a syntax error for " << text);
  return {};
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_ring_expr("M(2, Z12)") == RingExpr::mat(2, RingExpr::zn(12)));
  CHECK(parse_ring_expr("Z36 x Z8") == RingExpr::prod(RingExpr::zn(36), RingExpr::zn(8)));
  IdealSpec twelve;
  twelve.gens.push_back(ElementLiteral::integer(12));
  CHECK(parse_ring_expr("quot(Z36, gen(12))") == RingExpr::quot(RingExpr::zn(36), twelve));
  CHECK(parse_ring_expr("Z2 x Z3 x Z5") ==
        RingExpr::prod(RingExpr::prod(RingExpr::zn(2), RingExpr::zn(3)), RingExpr::zn(5)));
  CHECK(parse_ring_expr("Z2 x (Z3 x Z5)") ==
        RingExpr::prod(RingExpr::zn(2), RingExpr::prod(RingExpr::zn(3), RingExpr::zn(5))));
  CHECK(parse_ring_expr("  idealize( Z36 ,6 ) ") == RingExpr::idealize(RingExpr::zn(36), 6));
}

TEST_CASE("subset and ideal specs") {
  const SubsetSpec s = parse_subset_spec("mulclosed(1, 3, 9, 27)");
  CHECK(s.kind == SubsetSpecKind::mulclosed);
  CHECK(s.elems.size() == 4);
  CHECK(parse_subset_spec("gen_s(3)").kind == SubsetSpecKind::gen_s);
  CHECK(parse_subset_spec("msystem([[1,0],[0,1]])").kind == SubsetSpecKind::msystem);
  CHECK(parse_ideal_spec("gen((4, 0), (0, 1))").gens.size() == 2);
  CHECK(parse_element("poly(1, -1)") ==
        ElementLiteral::poly({ElementLiteral::integer(1), ElementLiteral::integer(-1)}));
}

TEST_CASE("syntax errors are positioned") {
  const SourcePos p = syntax_pos("M(2 Z12)");
  CHECK(p.line == 1);
  CHECK(p.column == 5);
  CHECK(syntax_pos("Z36 x").column == 6);
  const SourcePos q = syntax_pos("quot(Z36,\n  gen 4)");
  CHECK(q.line == 2);
  CHECK(q.column == 7);
  try {
    parse_ring_expr("trunc(Z4 2)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.kind() == ErrorKind::syntax_error);
    CHECK(e.pos().column == 10);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "','") != e.expected().end());
  }
  CHECK_THROWS_AS(parse_subset_spec("mulclosed(1, 3"), SyntaxError);
  CHECK_THROWS_AS(parse_ideal_spec("gen()"), SyntaxError);
}

TEST_CASE("semantic errors") {
  auto kind_of = [](const std::string& text) {
    try {
      elaborate(parse_ring_expr(text));
    } catch (const RingError& e) {
      return e.kind();
    }
    return ErrorKind::internal_inconsistency;
  };
  CHECK(kind_of("M(0, Z4)") == ErrorKind::semantic_error);
  CHECK(kind_of("Z1") == ErrorKind::semantic_error);
  CHECK(kind_of("idealize(Z12, 5)") == ErrorKind::semantic_error);
  CHECK(kind_of("M(5, Z12)") == ErrorKind::capacity_exceeded);
}

TEST_CASE("elaboration of literals") {
  const RingPtr r = elaborate(parse_ring_expr("Z36 x Z8"));
  const auto& p = static_cast<const ProductRing&>(*r);
  CHECK(elaborate_element(r, parse_element("(4, 0)")) == p.pair(4, 0));
  CHECK(elaborate_element(r, parse_element("(-1, 9)")) == p.pair(35, 1));
  CHECK(elaborate_element(r, parse_element("7"), ElaborateOptions{true}) == 7);
  const IdealSet i = elaborate_ideal(r, parse_ideal_spec("gen((4, 0), (0, 1))"));
  CHECK(i.size() == 72);
  CHECK(elaborate_subset(make_zn(36), parse_subset_spec("gen_s(3)")).size() == 3);
  CHECK_THROWS_AS(elaborate_subset(make_zn(6), parse_subset_spec("mulclosed(2, 3)")), RingError);

  const RingPtr m = elaborate(parse_ring_expr("M(2, Z12)"));
  const auto& mat = static_cast<const MatrixRing&>(*m);
  CHECK(elaborate_element(m, parse_element("[[3,0],[0,3]]")) == mat.scalar(3));
  CHECK(elaborate_element(m, parse_element("5")) == mat.scalar(5));

  const RingPtr t = elaborate(parse_ring_expr("trunc(Z4, 2)"));
  CHECK(to_string(t->to_literal(elaborate_element(t, parse_element("poly(1, 3)")))) == "poly(1,3)");
}

TEST_CASE("printing round trips on random expressions") {
  Rng g(20240917);
  for (int k = 0; k < 1500; ++k) {
    const RingExpr e = random_ring(g, 3);
    const std::string text = print(e);
    CAPTURE(text);
    CHECK(parse_ring_expr(text) == e);
    const IdealSpec i = random_ideal(g);
    CHECK(parse_ideal_spec(print(i)) == i);
    SubsetSpec s;
    s.kind = static_cast<SubsetSpecKind>(pick(g, 0, 2));
    s.elems = random_ideal(g).gens;
    CHECK(parse_subset_spec(print(s)) == s);
  }
}

TEST_CASE("describe strings reparse to the same ring") {
  for (const char* e : {"Z36 x Z8", "M(2, Z3)", "quot(Z36, gen(12))", "idealize(Z12, 6)", "amalg(Z36, Z12, mod, gen(6))",
                        "trunc(Z4, 2)", "idealring(Z36, gen(6))"}) {
    CAPTURE(e);
    const RingPtr r = elaborate(parse_ring_expr(e));
    const RingPtr again = elaborate(parse_ring_expr(r->describe()));
    REQUIRE(again->size() == r->size());
    for (Elem a = 0; a < r->size(); a += 3) {
      for (Elem b = 0; b < r->size(); b += 5) CHECK(again->mul(a, b) == r->mul(a, b));
    }
  }
}
