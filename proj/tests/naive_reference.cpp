#include "naive_reference.hpp"

#include <algorithm>
#include <set>

#include "ringlab/expr.hpp"

namespace naive {

Reference::Reference(const ringlab::Ring& ring) : r_(ring), n_(ring.size()) {
  for (Elem a = 0; a < n_ && commutative_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (r_.mul(a, b) != r_.mul(b, a)) {
        commutative_ = false;
        break;
      }
    }
  }
  for (Elem a = 0; a < n_; ++a) principal_.push_back(ideal_of({a}));

  // Every ideal is a finite sum of principal ideals.
  std::set<Set> seen(principal_.begin(), principal_.end());
  std::vector<Set> queue(seen.begin(), seen.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const Set& p : principal_) {
      std::vector<Elem> gens = members(queue[k]);
      const auto more = members(p);
      gens.insert(gens.end(), more.begin(), more.end());
      Set sum = ideal_of(gens);
      if (seen.insert(sum).second) queue.push_back(sum);
    }
  }
  ideals_ = queue;

  qr_.assign(n_, 0);
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      if (r_.add(y, r_.sub(x, r_.mul(y, x))) == r_.zero()) {
        qr_[x] = 1;
        break;
      }
    }
  }
  // a ∈ 𝒥 iff the left ideal {ra + ka} consists of left quasi-regular elements.
  jac_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    bool ok = true;
    for (Elem r = 0; r < n_ && ok; ++r) {
      Elem x = r_.mul(r, a);
      const Elem start = x;
      do {
        ok = ok && qr_[x];
        x = r_.add(x, a);
      } while (x != start && ok);
    }
    jac_[a] = ok ? 1 : 0;
  }

  nil_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    Elem p = a;
    for (std::size_t k = 0; k <= n_ && p != r_.zero(); ++k) p = r_.mul(p, a);
    nil_[a] = p == r_.zero() ? 1 : 0;
  }
}

Set Reference::ideal_of(const std::vector<Elem>& gens) const {
  Set in(n_, 0);
  std::vector<Elem> list;
  auto push = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  push(r_.zero());
  for (Elem g : gens) push(g);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Elem x = list[k];
    for (Elem r = 0; r < n_; ++r) {
      push(r_.mul(r, x));
      push(r_.mul(x, r));
    }
    for (std::size_t j = 0; j <= k; ++j) push(r_.add(x, list[j]));
  }
  return in;
}

bool Reference::scaled_within(const Set& a, Elem s, const Set& target) const {
  const Set& span = principal(s);
  for (Elem x = 0; x < n_; ++x) {
    if (!a[x]) continue;
    for (Elem t = 0; t < n_; ++t) {
      if (span[t] && !target[r_.mul(x, t)]) return false;
    }
  }
  return true;
}

bool Reference::product_within(const Set& a, const Set& b, const Set& target) const {
  for (Elem x = 0; x < n_; ++x) {
    if (!a[x]) continue;
    for (Elem y = 0; y < n_; ++y) {
      if (b[y] && !target[r_.mul(x, y)]) return false;
    }
  }
  return true;
}

bool Reference::elementwise(Predicate p) const {
  return p != Predicate::right_s_prime && p != Predicate::right_s_j;
}

// ab ∈ I (aRb ⊆ I without commutativity).
bool Reference::pair_bad(Predicate, const Set& ideal, Elem a, Elem b) const {
  if (commutative_) return ideal[r_.mul(a, b)];
  for (Elem r = 0; r < n_; ++r) {
    if (!ideal[r_.mul(r_.mul(a, r), b)]) return false;
  }
  return true;
}

bool Reference::pair_rescued(Predicate p, const Set& ideal, Elem a, Elem b, Elem s) const {
  switch (p) {
    case Predicate::j: return jac_[a] || ideal[b];
    case Predicate::n: return nil_[a] || ideal[b];
    case Predicate::s_prime: return ideal[r_.mul(s, a)] || ideal[r_.mul(s, b)];
    case Predicate::s_n: return nil_[r_.mul(s, a)] || ideal[r_.mul(s, b)];
    default: return jac_[r_.mul(s, a)] || ideal[r_.mul(s, b)];
  }
}

bool Reference::holds_for(Predicate p, const Set& ideal, Elem s) const {
  if (elementwise(p)) {
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        if (pair_bad(p, ideal, a, b) && !pair_rescued(p, ideal, a, b, s)) return false;
      }
    }
    return true;
  }
  const Set& left_target = p == Predicate::right_s_j ? jac_ : ideal;
  for (const Set& a : ideals_) {
    for (const Set& b : ideals_) {
      if (product_within(a, b, ideal) && !scaled_within(a, s, left_target) && !scaled_within(b, s, ideal)) {
        return false;
      }
    }
  }
  return true;
}

bool Reference::verdict(Predicate p, const Set& ideal, const std::vector<Elem>& subset, bool per_pair) const {
  if (p == Predicate::j || p == Predicate::n) return holds_for(p, ideal, 0);
  if (!per_pair) {
    return std::any_of(subset.begin(), subset.end(), [&](Elem s) { return holds_for(p, ideal, s); });
  }
  if (elementwise(p)) {
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        if (!pair_bad(p, ideal, a, b)) continue;
        if (std::none_of(subset.begin(), subset.end(), [&](Elem s) { return pair_rescued(p, ideal, a, b, s); })) {
          return false;
        }
      }
    }
    return true;
  }
  const Set& left_target = p == Predicate::right_s_j ? jac_ : ideal;
  for (const Set& a : ideals_) {
    for (const Set& b : ideals_) {
      if (!product_within(a, b, ideal)) continue;
      if (std::none_of(subset.begin(), subset.end(), [&](Elem s) {
            return scaled_within(a, s, left_target) || scaled_within(b, s, ideal);
          })) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Elem> members(const Set& s) {
  std::vector<Elem> out;
  for (Elem x = 0; x < s.size(); ++x) {
    if (s[x]) out.push_back(x);
  }
  return out;
}

bool same(const Set& a, const ringlab::ElementSet& b) {
  if (a.size() != b.universe()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (static_cast<bool>(a[x]) != b.contains(x)) return false;
  }
  return true;
}

using namespace ringlab;

OracleSummary compare_corpus(const CorpusSpec& corpus, std::size_t max_size) {
  OracleSummary out;
  auto disagree = [&](const std::string& where, const std::string& what) {
    out.disagreements.push_back(where + ": " + what);
  };
  for (const auto& info : corpus.rings) {
    if (info.size > max_size) continue;
    ++out.rings;
    const RingPtr ring = elaborate(parse_ring_expr(info.expr));
    const auto a = analyze(ring);
    const Reference ref(*ring);
    const std::string& at = info.expr;

    ++out.checks;
    if (a->lattice().size() != ref.ideals().size()) disagree(at, "ideal count");
    for (const auto& s : ref.ideals()) {
      if (!a->lattice().find(ElementSet::of(ring->size(), members(s)))) disagree(at, "missing ideal");
    }
    ++out.checks;
    if (!same(ref.jacobson(), a->jacobson().members())) disagree(at, "jacobson radical");
    if (ring->is_commutative()) {
      ++out.checks;
      if (!same(ref.nilradical(), a->prime_radical().members())) disagree(at, "prime radical");
    }

    const bool comm = ring->is_commutative();
    for (const auto& ispec : info.ideals) {
      const IdealSet i = elaborate_ideal(ring, parse_ideal_spec(ispec));
      const Set iset = ref.ideal_of(i.elements());
      const std::string where = at + " " + ispec;
      auto compare = [&](Predicate p, const SubsetS* s, Quantifier q, std::optional<Method> m) {
        CheckOptions opts;
        opts.mode = q;
        opts.method = m;
        const CheckResult c = run_check(*a, p, i, s, opts);
        const std::vector<Elem> elems = s ? s->elements() : std::vector<Elem>{};
        const bool expect = ref.verdict(p, iset, elems, q == Quantifier::per_pair);
        ++out.checks;
        std::string label = where + (s ? " " + subset_spec(*s) : "") + " " + to_string(p) + " " + to_string(q);
        if (m) label += std::string(" ") + to_string(*m);
        if (c.verdict != expect) {
          disagree(label, c.verdict ? "library true, reference false" : "library false, reference true");
        } else if (c.verdict && q == Quantifier::fixed_s && s && c.witness_s &&
                   !ref.holds_for(p, iset, *c.witness_s)) {
          disagree(label, "witness does not replay");
        }
      };
      compare(Predicate::j, nullptr, Quantifier::fixed_s, std::nullopt);
      if (comm) compare(Predicate::n, nullptr, Quantifier::fixed_s, std::nullopt);
      for (const auto& sspec : info.subsets) {
        const SubsetS s = elaborate_subset(ring, parse_subset_spec(sspec));
        if (i.members().intersects(s.members())) continue;
        ++out.instances;
        for (Quantifier q : {Quantifier::fixed_s, Quantifier::per_pair}) {
          if (comm) {
            for (Predicate p : {Predicate::s_prime, Predicate::s_n, Predicate::s_j}) compare(p, &s, q, std::nullopt);
          }
          for (Predicate p : {Predicate::right_s_prime, Predicate::right_s_j}) {
            compare(p, &s, q, Method::lattice);
            if (ring->has_identity() && ring->size() <= kElementwiseLimit) compare(p, &s, q, Method::elementwise);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace naive
