#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "ringlab/analysis.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/ideal_set.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

// A corpus ring with its selected ideals and subsets elaborated.
struct RingView {
  const CorpusRing* info = nullptr;
  RingPtr ring;
  AnalysisPtr analysis;
  std::vector<IdealSet> ideals;
  std::vector<SubsetS> subsets;
};

// Rings, analyses and derived rings shared by every property of one run.
// Derived rings are always built from the cached base so that ideals, subsets
// and homomorphisms refer to the same ring objects.
class HarnessContext {
 public:
  RingPtr ring(const std::string& expr);
  AnalysisPtr analysis(const RingPtr& ring);
  AnalysisPtr analysis(const std::string& expr) { return analysis(ring(expr)); }
  RingPtr derived(const std::string& key, const std::function<RingPtr()>& build);

  // R/K, cached per ring object and K.
  Quotient quotient(const IdealSet& k);
  const RingView& view(const CorpusRing& info);

  IdealSet ideal(const RingPtr& ring, const std::string& spec);
  SubsetS subset(const RingPtr& ring, const std::string& spec);

 private:
  std::recursive_mutex mutex_;
  std::map<std::string, RingPtr> rings_;
  std::map<const Ring*, std::pair<RingPtr, AnalysisPtr>> analyses_;
  std::map<std::string, RingPtr> derived_;
  std::map<std::string, Quotient> quotients_;
  std::map<std::string, RingView> views_;
};

using Generator = std::function<std::vector<Instance>(const CorpusSpec&, HarnessContext&)>;
using Checker = std::function<Outcome(HarnessContext&, const Instance&)>;

struct PropertyImpl {
  std::string id;
  Generator generate;
  Checker check;
};

// Same order as property_registry(); out-of-scope entries are absent.
const std::vector<PropertyImpl>& property_impls();
const PropertyImpl* find_impl(const std::string& id);

}  // namespace ringlab
