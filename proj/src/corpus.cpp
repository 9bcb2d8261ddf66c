#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "harness_internal.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"

namespace ringlab {

CorpusConfig CorpusConfig::standard() {
  CorpusConfig c;
  c.families = kCorpusFamilies;
  return c;
}

CorpusConfig CorpusConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_parameter, "corpus config must be a JSON object");
  CorpusConfig c = standard();
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "families") {
        c.families = value.get<std::vector<std::string>>();
        for (const auto& f : c.families) {
          if (std::find(kCorpusFamilies.begin(), kCorpusFamilies.end(), f) == kCorpusFamilies.end()) {
            fail(ErrorKind::invalid_parameter, "unknown corpus family '" + f + "'");
          }
        }
      } else if (key == "extra_rings") {
        c.extra_rings = value.get<std::vector<std::string>>();
      } else if (key == "max_size") {
        c.max_size = value.get<std::size_t>();
      } else if (key == "max_ideals_per_ring") {
        c.max_ideals_per_ring = value.get<std::size_t>();
      } else if (key == "max_subsets_per_ring") {
        c.max_subsets_per_ring = value.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else {
        fail(ErrorKind::invalid_parameter, "unknown corpus config key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::invalid_parameter, "corpus config key '" + key + "': " + e.what());
    }
  }
  return c;
}

nlohmann::ordered_json CorpusConfig::to_json() const {
  nlohmann::ordered_json j;
  j["families"] = families;
  j["extra_rings"] = extra_rings;
  j["max_size"] = max_size;
  j["max_ideals_per_ring"] = max_ideals_per_ring;
  j["max_subsets_per_ring"] = max_subsets_per_ring;
  j["seed"] = seed;
  return j;
}

std::string subset_spec(const SubsetS& s) {
  std::string out = s.kind() == SubsetKind::m_system ? "msystem(" : "mulclosed(";
  bool first = true;
  for (Elem e : s.elements()) {
    if (!first) out += ", ";
    out += s.ring().format(e);
    first = false;
  }
  return out + ")";
}

namespace {

struct Entry {
  std::string expr;
  std::string family;
};

struct Named {
  std::vector<std::string> ideals;
  std::vector<std::string> subsets;
};

const std::map<std::string, Named>& named_sets() {
  static const std::map<std::string, Named> named = {
      {"Z36", {{"gen(4)"}, {"mulclosed(1, 3, 9, 27)"}}},
      {"Z36 x Z8", {{"gen((4,0), (0,1))"}, {"mulclosed((1,0), (1,2), (1,4), (3,0), (3,2), (3,4), (9,0), (9,2), "
                                            "(9,4), (27,0), (27,2), (27,4))"}}},
      {"Z36 x Z36", {{"gen((4,0), (0,1))"}, {"mulclosed((1,1), (1,3), (1,9), (1,27), (3,1), (3,3), (3,9), (3,27), "
                                             "(9,1), (9,3), (9,9), (9,27), (27,1), (27,3), (27,9), (27,27))"}}},
  };
  return named;
}

std::vector<Entry> family_entries(const std::string& family) {
  std::vector<Entry> out;
  auto add = [&](std::string e) { out.push_back({std::move(e), family}); };
  auto z = [](int n) { return "Z" + std::to_string(n); };
  if (family == "zn") {
    for (int n = 2; n <= 40; ++n) add(z(n));
  } else if (family == "products") {
    for (int n = 2; n <= 12; ++n) {
      for (int m = n; m <= 12; ++m) add(z(n) + " x " + z(m));
    }
  } else if (family == "quotients") {
    for (int d : {2, 3, 4, 6, 9, 12, 18}) add("quot(Z36, gen(" + std::to_string(d) + "))");
  } else if (family == "matrices") {
    for (int n : {2, 3, 4, 6}) add("M(2, " + z(n) + ")");
  } else if (family == "idealizations") {
    for (int n = 2; n <= 36; ++n) {
      for (int m = 2; m <= n; ++m) {
        if (n % m == 0) add("idealize(" + z(n) + ", " + std::to_string(m) + ")");
      }
    }
  } else if (family == "amalgamations") {
    for (int m = 2; m <= 24; ++m) {
      // Nonzero ideals inside J(Z_m) = <rad(m)>: generated by multiples of rad(m) dividing m.
      int rad = 1;
      for (int p = 2, k = m; p <= k; ++p) {
        if (k % p == 0) {
          rad *= p;
          while (k % p == 0) k /= p;
        }
      }
      for (int d = rad; d < m; d += rad) {
        if (m % d != 0) continue;
        for (int n = m; n <= 24; n += m) {
          add("amalg(" + z(n) + ", " + z(m) + ", mod, gen(" + std::to_string(d) + "))");
        }
      }
    }
  } else if (family == "truncated") {
    for (int n = 2; n <= 8; ++n) {
      for (int d : {2, 3}) add("trunc(" + z(n) + ", " + std::to_string(d) + ")");
    }
  } else if (family == "ideal-rings") {
    for (int d : {2, 3, 4, 6, 9, 12, 18}) add("idealring(Z36, gen(" + std::to_string(d) + "))");
  } else if (family == "named") {
    add("Z36");
    add("Z36 x Z8");
    add("Z36 x Z36");
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Keeps the `forced` candidates and fills up to `cap` with the candidates of
// smallest random key; the result keeps candidate order.
std::vector<std::size_t> pick(std::size_t n, const std::vector<std::size_t>& forced, std::size_t cap,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> keys(n);
  for (auto& k : keys) k = rng();
  std::set<std::size_t> chosen(forced.begin(), forced.end());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t i : order) {
    if (chosen.size() >= std::max(cap, forced.size())) break;
    chosen.insert(i);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<IdealSet> select_ideals(const RingAnalysis& a, const Entry& e, const CorpusConfig& c,
                                    const std::vector<IdealSet>& named) {
  const LatticeIndex& l = a.lattice();
  std::vector<std::size_t> forced = {l.zero_index()};
  if (a.jacobson().is_proper()) forced.push_back(l.index_of(a.jacobson()));
  for (const auto& i : named) forced.push_back(l.index_of(i));
  std::vector<IdealSet> out;
  for (std::size_t k : pick(l.whole_index(), forced, c.max_ideals_per_ring, c.seed ^ fnv1a(e.expr))) {
    out.push_back(l[k]);
  }
  return out;
}

std::vector<SubsetS> select_subsets(const RingPtr& ring, const Entry& e, const CorpusConfig& c,
                                    const std::vector<SubsetS>& named) {
  const Ring& r = *ring;
  std::vector<SubsetS> candidates;
  std::vector<std::size_t> forced;
  auto push = [&](const SubsetS& s, bool force) {
    if (s.contains(r.zero())) return;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (candidates[k] == s) {
        if (force) forced.push_back(k);
        return;
      }
    }
    if (force) forced.push_back(candidates.size());
    candidates.push_back(s);
  };
  if (r.one()) push(validate_subset(ring, std::vector<Elem>{*r.one()}), true);
  for (const auto& s : named) push(s, true);
  for (const auto& s : enumerate_subsets(ring, SubsetStrategy::singleton_generated).subsets) push(s, false);
  if (auto m = dynamic_cast<const MatrixRing*>(&r)) {
    for (const auto& t : enumerate_subsets(m->base(), SubsetStrategy::singleton_generated).subsets) {
      if (t.contains(m->base()->zero())) continue;
      std::vector<Elem> scalars;
      for (Elem x : t.elements()) scalars.push_back(m->scalar(x));
      push(validate_subset(ring, scalars, SubsetKind::m_system), false);
    }
  }
  std::vector<SubsetS> out;
  for (std::size_t k : pick(candidates.size(), forced, c.max_subsets_per_ring, c.seed ^ fnv1a(e.expr) ^ 1)) {
    out.push_back(candidates[k]);
  }
  return out;
}

}  // namespace

CorpusSpec build_corpus(const CorpusConfig& config) {
  CorpusSpec spec;
  spec.config = config;
  std::vector<Entry> entries;
  if (config.families.empty() && config.extra_rings.empty()) {
    entries = {{"Z4", "minimal"}, {"Z6", "minimal"}};
  }
  for (const auto& f : config.families) {
    auto more = family_entries(f);
    // The matrix block runs as a unit: it is kept only when every member fits.
    if (f == "matrices" && config.max_size != 0 && config.max_size < 1296) {
      spec.skipped.push_back("matrices: family needs max_size >= 1296");
      continue;
    }
    entries.insert(entries.end(), more.begin(), more.end());
  }
  for (const auto& x : config.extra_rings) entries.push_back({x, "extra"});

  HarnessContext ctx;
  std::set<std::string> seen;
  for (const auto& e : entries) {
    if (!seen.insert(e.expr).second) continue;
    RingPtr ring;
    AnalysisPtr a;
    try {
      ring = ctx.ring(e.expr);
      if (config.max_size != 0 && ring->size() > config.max_size) continue;
      a = ctx.analysis(ring);
    } catch (const RingError& err) {
      if (err.kind() != ErrorKind::capacity_exceeded) throw;
      spec.skipped.push_back(e.expr + ": " + err.what());
      continue;
    }
    std::vector<IdealSet> named_ideals;
    std::vector<SubsetS> named_subsets;
    if (auto it = named_sets().find(e.expr); it != named_sets().end()) {
      for (const auto& s : it->second.ideals) named_ideals.push_back(ctx.ideal(ring, s));
      for (const auto& s : it->second.subsets) named_subsets.push_back(ctx.subset(ring, s));
    }
    CorpusRing cr;
    cr.expr = e.expr;
    cr.family = e.family;
    cr.size = ring->size();
    cr.commutative = ring->is_commutative();
    cr.identity = ring->has_identity();
    const auto ideals = select_ideals(*a, e, config, named_ideals);
    const auto subsets = select_subsets(ring, e, config, named_subsets);
    for (const auto& i : ideals) cr.ideals.push_back(ideal_spec(i));
    for (const auto& s : subsets) cr.subsets.push_back(subset_spec(s));
    for (const auto& i : ideals) {
      for (const auto& s : subsets) {
        if (!i.members().intersects(s.members())) ++spec.instances;
      }
    }
    spec.rings.push_back(std::move(cr));
  }
  return spec;
}

// ---------------------------------------------------------------- context

RingPtr HarnessContext::ring(const std::string& expr) {
  std::lock_guard lock(mutex_);
  if (auto it = rings_.find(expr); it != rings_.end()) return it->second;
  RingPtr r = elaborate(parse_ring_expr(expr));
  rings_.emplace(expr, r);
  return r;
}

AnalysisPtr HarnessContext::analysis(const RingPtr& ring) {
  std::lock_guard lock(mutex_);
  if (auto it = analyses_.find(ring.get()); it != analyses_.end()) return it->second.second;
  AnalysisPtr a = analyze(ring);
  analyses_.emplace(ring.get(), std::make_pair(ring, a));
  return a;
}

RingPtr HarnessContext::derived(const std::string& key, const std::function<RingPtr()>& build) {
  std::lock_guard lock(mutex_);
  if (auto it = derived_.find(key); it != derived_.end()) return it->second;
  RingPtr r = build();
  derived_.emplace(key, r);
  return r;
}

Quotient HarnessContext::quotient(const IdealSet& k) {
  std::lock_guard lock(mutex_);
  // The cached hom keeps its source alive, so the address stays unique.
  const std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(k.ring_ptr().get())) + " / " + ideal_spec(k);
  if (auto it = quotients_.find(key); it != quotients_.end()) return it->second;
  Quotient q = make_quotient(k);
  quotients_.emplace(key, q);
  return q;
}

const RingView& HarnessContext::view(const CorpusRing& info) {
  std::lock_guard lock(mutex_);
  if (auto it = views_.find(info.expr); it != views_.end()) return it->second;
  RingView v;
  v.info = &info;
  v.ring = ring(info.expr);
  v.analysis = analysis(v.ring);
  for (const auto& s : info.ideals) v.ideals.push_back(ideal(v.ring, s));
  for (const auto& s : info.subsets) v.subsets.push_back(subset(v.ring, s));
  return views_.emplace(info.expr, std::move(v)).first->second;
}

IdealSet HarnessContext::ideal(const RingPtr& ring, const std::string& spec) {
  return elaborate_ideal(ring, parse_ideal_spec(spec));
}

SubsetS HarnessContext::subset(const RingPtr& ring, const std::string& spec) {
  return elaborate_subset(ring, parse_subset_spec(spec));
}

}  // namespace ringlab
