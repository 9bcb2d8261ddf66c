#include "ringlab/error.hpp"
#include "ringlab/harness.hpp"

namespace ringlab {

using nlohmann::ordered_json;

ordered_json to_json(const Violation& v) {
  ordered_json j;
  j["ring_expr"] = v.instance.ring_expr;
  j["ideal_gens"] = v.instance.ideal_gens;
  j["subset"] = v.instance.subset;
  j["params"] = v.instance.params;
  j["mode"] = v.mode;
  j["counterexample"] = v.counterexample;
  return j;
}

Violation violation_from_json(const nlohmann::json& j) {
  try {
    Violation v;
    v.instance.ring_expr = j.at("ring_expr").get<std::string>();
    v.instance.ideal_gens = j.at("ideal_gens").get<std::vector<std::string>>();
    v.instance.subset = j.at("subset").get<std::vector<std::string>>();
    if (j.contains("params")) v.instance.params = j.at("params").get<std::vector<std::int64_t>>();
    if (j.contains("mode")) v.mode = j.at("mode").get<std::string>();
    if (j.contains("counterexample")) v.counterexample = j.at("counterexample").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_parameter, std::string("malformed violation: ") + e.what());
  }
}

ordered_json to_json(const PropertyReport& r) {
  ordered_json j;
  j["property_id"] = r.property_id;
  j["citation"] = r.citation;
  j["tested"] = r.tested;
  j["vacuous"] = r.vacuous;
  j["passed"] = r.passed;
  j["violated"] = r.violated;
  j["skipped"] = r.skipped;
  j["violations"] = ordered_json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["divergences"] = ordered_json::array();
  for (const auto& v : r.divergences) j["divergences"].push_back(to_json(v));
  return j;
}

ordered_json to_json(const ExampleResult& e) {
  return ordered_json{{"id", e.id}, {"description", e.description}, {"passed", e.passed}, {"detail", e.detail}};
}

ordered_json report_json(const CorpusSpec& corpus, const std::vector<PropertyReport>& reports,
                         const std::vector<ExampleResult>& examples) {
  std::size_t violations = 0;
  std::size_t tested = 0;
  for (const auto& r : reports) {
    const PropertyInfo* info = find_property(r.property_id);
    if (info != nullptr && info->status == PropertyStatus::gating) violations += r.violated;
    tested += r.tested;
  }
  bool examples_ok = true;
  for (const auto& e : examples) examples_ok = examples_ok && e.passed;

  ordered_json j;
  j["summary"] = {{"rings", corpus.rings.size()},
                  {"instances", corpus.instances},
                  {"tested", tested},
                  {"violations", violations},
                  {"examples_passed", examples_ok},
                  {"ok", violations == 0 && examples_ok}};
  j["corpus"] = corpus.config.to_json();
  j["corpus"]["skipped"] = corpus.skipped;
  j["properties"] = ordered_json::array();
  for (const auto& r : reports) j["properties"].push_back(to_json(r));
  j["non_gating"] = ordered_json::array();
  j["out_of_scope"] = ordered_json::array();
  for (const auto& p : property_registry()) {
    if (p.status == PropertyStatus::exploratory) j["non_gating"].push_back(p.id);
    if (p.status == PropertyStatus::out_of_scope) j["out_of_scope"].push_back(p.id);
  }
  j["examples"] = ordered_json::array();
  for (const auto& e : examples) j["examples"].push_back(to_json(e));
  return j;
}

}  // namespace ringlab
