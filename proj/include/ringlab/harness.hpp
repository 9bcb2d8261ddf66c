#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ringlab/analysis.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

// Ring families of the standard corpus.
inline const std::vector<std::string> kCorpusFamilies = {
    "zn", "products", "quotients", "matrices", "idealizations", "amalgamations", "truncated", "ideal-rings", "named",
};

inline constexpr std::uint64_t kDefaultCorpusSeed = 0x5EED2024;

// A value-initialized config selects no family and yields the minimal corpus
// {Z4, Z6}; `standard()` is the full default corpus.
struct CorpusConfig {
  std::vector<std::string> families;
  std::vector<std::string> extra_rings;
  std::size_t max_size = 0;  // 0: no bound
  std::size_t max_ideals_per_ring = 10;
  std::size_t max_subsets_per_ring = 6;
  std::uint64_t seed = kDefaultCorpusSeed;

  static CorpusConfig standard();
  // Keys override `standard()`; unknown keys are rejected.
  static CorpusConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;
};

struct CorpusRing {
  std::string expr;
  std::string family;
  std::size_t size = 0;
  bool commutative = false;
  bool identity = false;
  // Ideal specs (proper ideals) and subset specs selected for this ring.
  std::vector<std::string> ideals;
  std::vector<std::string> subsets;
};

struct CorpusSpec {
  CorpusConfig config;
  std::vector<CorpusRing> rings;
  // Disjoint (ring, ideal, S) triples.
  std::size_t instances = 0;
  // Entries dropped for capacity reasons, with the reason.
  std::vector<std::string> skipped;
};

CorpusSpec build_corpus(const CorpusConfig& config);

// Spec text for a validated subset: mulclosed(...) or msystem(...).
std::string subset_spec(const SubsetS& s);

enum class PropertyStatus { gating, exploratory, out_of_scope };

struct PropertyInfo {
  std::string id;
  std::string citation;
  PropertyStatus status = PropertyStatus::gating;
};

const std::vector<PropertyInfo>& property_registry();
const PropertyInfo* find_property(const std::string& id);

// One evaluation of a property; everything needed to replay it.
struct Instance {
  std::string ring_expr;
  std::vector<std::string> ideal_gens;
  std::vector<std::string> subset;
  std::vector<std::int64_t> params;
};

struct Violation {
  Instance instance;
  std::string mode = "fixed";
  std::string counterexample;
};

struct PropertyReport {
  std::string property_id;
  std::string citation;
  std::size_t tested = 0;
  std::size_t vacuous = 0;
  std::size_t passed = 0;
  std::size_t violated = 0;
  std::vector<Violation> violations;
  // Per-pair versus fixed-s disagreements; informative, never violations.
  std::vector<Violation> divergences;
  // Instances skipped for capacity reasons.
  std::size_t skipped = 0;
};

enum class OutcomeKind { vacuous, passed, violated };

struct Outcome {
  OutcomeKind kind = OutcomeKind::vacuous;
  std::string detail;
  std::optional<std::string> divergence;
};

class HarnessContext;

// Runs properties over one corpus; rings and analyses are cached and shared
// between properties.
class Harness {
 public:
  explicit Harness(CorpusSpec corpus);
  ~Harness();

  const CorpusSpec& corpus() const { return corpus_; }

  PropertyReport verify(const std::string& id);
  // Registry order regardless of scheduling; `threads` = 0 reads RINGLAB_THREADS.
  std::vector<PropertyReport> verify_all(const std::vector<std::string>& ids, std::size_t threads = 0);
  std::vector<Instance> instances(const std::string& id);
  Outcome evaluate(const std::string& id, const Instance& instance);
  // Re-evaluates a reported violation; true when it still fails.
  bool replay(const std::string& id, const Violation& v);

 private:
  CorpusSpec corpus_;
  std::unique_ptr<HarnessContext> ctx_;
};

std::size_t worker_count();

struct ExampleResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

std::vector<ExampleResult> run_worked_examples();

nlohmann::ordered_json to_json(const Violation& v);
Violation violation_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const PropertyReport& r);
nlohmann::ordered_json to_json(const ExampleResult& e);
nlohmann::ordered_json report_json(const CorpusSpec& corpus, const std::vector<PropertyReport>& reports,
                                   const std::vector<ExampleResult>& examples);

}  // namespace ringlab
