// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <iostream>
#include <sstream>

#include "naive_reference.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/radicals.hpp"

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int n, const std::string& title, Line& line) {
  if (!line.ok) ++failures;
  std::cout << "criterion " << n << ": " << (line.ok ? "PASS" : "FAIL") << "  " << title << " -" << line.note.str()
            << std::endl;
}

template <class Body>
void criterion(int n, const std::string& title, Body body) {
  Line line;
  try {
    body(line);
  } catch (const std::exception& e) {
    line.require(false, e.what());
  }
  report(n, title, line);
}

RingPtr ring_of(const std::string& text) { return elaborate(parse_ring_expr(text)); }

}  // namespace

int main() {
  criterion(1, "Z36 worked example", [](Line& l) {
    const auto t = Clock::now();
    const RingPtr r = ring_of("Z36");
    const auto a = analyze(r);
    const IdealSet i = elaborate_ideal(r, parse_ideal_spec("gen(4)"));
    const SubsetS s = elaborate_subset(r, parse_subset_spec("mulclosed(1, 3, 9, 27)"));
    const auto j = is_J_ideal(*a, i);
    const auto sj = is_S_J_ideal(*a, i, s);
    const PairWitness two{PairWitness::Kind::elements, 2, 2};
    l.require(!j.verdict && j.counterexample == two, "J-ideal false at (2,2)");
    l.require(sj.verdict && sj.witness_s == Elem{3}, "S-J true with s = 3");
    l.require(!violation_for(*a, Predicate::s_j, i, &s, 3, Method::elementwise), "s = 3 replays");
    const double dt = seconds_since(t);
    l.require(dt < 1.0, "runtime under 1 s");
    l.note << " J false at (2, 2), S-J witness " << (sj.witness_s ? r->format(*sj.witness_s) : "none") << ", "
           << dt << " s";
  });

  criterion(2, "radicals", [](Line& l) {
    const auto t = Clock::now();
    const RingPtr z = ring_of("Z36");
    const RingPtr zz = ring_of("Z36 x Z8");
    const RingPtr m = ring_of("M(2, Z12)");
    const auto& prod = static_cast<const ProductRing&>(*zz);
    const auto& mat = static_cast<const MatrixRing&>(*m);
    l.require(analyze(z)->jacobson().elements() == std::vector<Elem>{0, 6, 12, 18, 24, 30}, "J(Z36)");
    std::vector<Elem> expect;
    for (Elem a : {0u, 6u, 12u, 18u, 24u, 30u}) {
      for (Elem b : {0u, 2u, 4u, 6u}) expect.push_back(prod.pair(a, b));
    }
    std::sort(expect.begin(), expect.end());
    l.require(analyze(zz)->jacobson().elements() == expect, "J(Z36 x Z8)");
    const auto ma = analyze(m);
    bool all_six = true;
    std::size_t count = 0;
    for (Elem e = 0; e < m->size(); ++e) {
      const auto entries = mat.entries(e);
      const bool in = std::all_of(entries.begin(), entries.end(), [](Elem x) { return x % 6 == 0; });
      count += in ? 1 : 0;
      all_six = all_six && (in == ma->jacobson().contains(e));
    }
    l.require(all_six && count == 16, "J(M_2(Z12)) = M_2(<6>)");
    const double dt = seconds_since(t);
    l.require(dt < 30.0, "runtime under 30 s");
    l.note << " three set equalities, " << dt << " s";
  });

  criterion(3, "M_2(Z12) worked example", [](Line& l) {
    const auto t = Clock::now();
    const RingPtr m = ring_of("M(2, Z12)");
    const auto a = analyze(m);
    const auto& mat = static_cast<const MatrixRing&>(*m);
    const SubsetS s = elaborate_subset(m, parse_subset_spec("msystem([[1,0],[0,1]], [[3,0],[0,3]], [[9,0],[0,9]])"));
    const IdealSet p = ideal_generate(m, {mat.scalar(4)});
    l.require(s.kind() == SubsetKind::m_system && s.size() == 3, "S validated as an m-system");
    l.require(p.size() == 81, "P = M_2(<4>)");
    l.require(!is_J_ideal(*a, p).verdict, "P is not a J-ideal");
    const auto c = is_right_S_J_ideal(*a, p, s, Method::lattice);
    l.require(c.verdict && (c.witness_s == mat.scalar(3) || c.witness_s == mat.scalar(9)), "witness in {3I, 9I}");
    l.require(!violation_for(*a, Predicate::right_s_j, p, &s, mat.scalar(3), Method::lattice), "3I replays");
    const double dt = seconds_since(t);
    l.require(dt < 60.0, "runtime under 60 s");
    l.note << " not J, right S-J witness " << (c.witness_s ? m->format(*c.witness_s) : "none") << ", " << dt << " s";
  });

  criterion(4, "product theorem edge cases", [](Line& l) {
    const RingPtr r = ring_of("Z36 x Z36");
    const auto a = analyze(r);
    const auto& prod = static_cast<const ProductRing&>(*r);
    const IdealSet p = elaborate_ideal(r, parse_ideal_spec("gen((4, 0), (0, 1))"));
    const SubsetS s1 = elaborate_subset(prod.first(), parse_subset_spec("mulclosed(1, 3, 9, 27)"));
    const SubsetS s = product_subset(r, s1, s1);
    const auto c = is_S_J_ideal(*a, p, s);
    l.require(!c.verdict, "<4> x Z36 is not (S1 x S1)-J");
    l.require(c.violations.size() == s.size(), "every s has a violation");
    const Elem x = prod.pair(2, 1);
    const PairWitness pair{PairWitness::Kind::elements, x, x};
    bool all = true;
    for (Elem e : s.elements()) all = all && pair_violates(*a, Predicate::s_j, p, e, pair);
    l.require(all, "((2,1), (2,1)) violates for every s");

    const RingPtr q = ring_of("Z36 x Z8");
    const auto qa = analyze(q);
    const auto& qprod = static_cast<const ProductRing&>(*q);
    const IdealSet qp = elaborate_ideal(q, parse_ideal_spec("gen((4, 0), (0, 1))"));
    const SubsetS x8 = elaborate_subset(qprod.second(), parse_subset_spec("mulclosed(0, 2, 4)"));
    const SubsetS qs1 = elaborate_subset(qprod.first(), parse_subset_spec("mulclosed(1, 3, 9, 27)"));
    l.require(is_S_J_ideal(*qa, qp, product_subset(q, qs1, x8)).verdict, "Z36 x Z8 verdict true");
    l.note << " counterexample holds for all " << s.size() << " s, Z36 x Z8 true";
  });

  const auto corpus_start = Clock::now();
  const CorpusSpec corpus = build_corpus(CorpusConfig::standard());

  criterion(5, "property suite on the default corpus", [&](Line& l) {
    Harness h(corpus);
    std::vector<std::string> ids;
    for (const auto& p : property_registry()) ids.push_back(p.id);
    const auto reports = h.verify_all(ids);
    std::size_t tested = 0;
    std::size_t violated = 0;
    std::size_t gating = 0;
    for (const auto& r : reports) {
      const auto* info = find_property(r.property_id);
      if (info->status == PropertyStatus::out_of_scope) {
        l.require(r.tested == 0, r.property_id + " reported out of scope");
        continue;
      }
      if (info->status != PropertyStatus::gating) continue;
      ++gating;
      tested += r.tested;
      violated += r.violated;
      l.require(r.violated == 0, r.property_id + " has " + std::to_string(r.violated) + " violations");
      l.require(r.tested >= 5, r.property_id + " tested only " + std::to_string(r.tested));
    }
    l.require(gating == 31, "31 gating properties");
    l.require(corpus.rings.size() >= 60, "at least 60 rings");
    l.require(tested >= 500, "at least 500 non-vacuous instances");
    const double dt = seconds_since(corpus_start);
    l.require(dt < 600.0, "runtime under 10 minutes");
    l.note << " " << corpus.rings.size() << " rings, " << gating << " gating properties, " << tested
           << " non-vacuous instances, " << violated << " violations, " << dt << " s";
  });

  criterion(6, "oracle agreement on rings up to 200 elements", [&](Line& l) {
    const auto t = Clock::now();
    const auto summary = naive::compare_corpus(corpus, 200);
    l.require(summary.disagreements.empty(), std::to_string(summary.disagreements.size()) + " disagreements");
    for (std::size_t k = 0; k < summary.disagreements.size() && k < 5; ++k) l.note << " {" << summary.disagreements[k] << "}";
    l.require(summary.rings > 0 && summary.instances > 0, "nonempty comparison");
    l.note << " " << summary.rings << " rings, " << summary.instances << " instances, " << summary.checks
           << " comparisons, " << seconds_since(t) << " s";
  });

  criterion(7, "radical methods agree on rings up to 4096 elements", [&](Line& l) {
    std::size_t rings = 0;
    for (const auto& info : corpus.rings) {
      if (info.size > kCrosscheckLimit) continue;
      const auto a = analyze(ring_of(info.expr));
      const auto rep = jacobson_crosscheck(a->lattice());
      l.require(rep.agreement && rep.jacobson == a->jacobson(), info.expr);
      ++rings;
    }
    l.note << " " << rings << " rings";
  });

  criterion(8, "S-J and right S-J agree on commutative rings with identity", [&](Line& l) {
    std::size_t instances = 0;
    for (const auto& info : corpus.rings) {
      if (!info.commutative || !info.identity) continue;
      const RingPtr r = ring_of(info.expr);
      const auto a = analyze(r);
      for (const auto& ispec : info.ideals) {
        const IdealSet i = elaborate_ideal(r, parse_ideal_spec(ispec));
        for (const auto& sspec : info.subsets) {
          const SubsetS s = elaborate_subset(r, parse_subset_spec(sspec));
          if (i.members().intersects(s.members())) continue;
          ++instances;
          for (Quantifier q : {Quantifier::fixed_s, Quantifier::per_pair}) {
            const bool x = is_S_J_ideal(*a, i, s, q).verdict;
            const bool y = is_right_S_J_ideal(*a, i, s, Method::lattice, q).verdict;
            l.require(x == y, info.expr + " " + ispec + " " + sspec);
          }
        }
      }
    }
    l.note << " " << instances << " instances, both quantifier readings";
  });

  criterion(9, "deterministic reports", [&](Line& l) {
    auto run = [&] {
      Harness h(build_corpus(CorpusConfig::standard()));
      return report_json(h.corpus(), h.verify_all({}), run_worked_examples()).dump(2);
    };
    const std::string first = run();
    const std::string second = run();
    l.require(first == second, "byte-identical JSON");
    l.note << " two runs, " << first.size() << " bytes each";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
