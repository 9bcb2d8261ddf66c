#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/predicates.hpp"

using namespace ringlab;
using nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, check_false = 1, usage = 2, capacity = 3, violations = 4 };

struct Options {
  std::string expr;
  std::string ideal;
  std::string subset;
  std::string predicate = "s-j";
  std::string mode = "fixed";
  std::string method;
  std::string json_path;
  bool raw = false;
  std::vector<std::string> properties;
  std::string config_path;
  std::size_t max_size = 0;
};

std::string fmt(const Ring& r, Elem e, bool raw) { return raw ? std::to_string(e) : r.format(e); }

std::string fmt_set(const Ring& r, const std::vector<Elem>& xs, bool raw) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + fmt(r, xs[k], raw);
  return out + "}";
}

std::string fmt_pair(const RingAnalysis& a, const PairWitness& p, bool raw) {
  if (p.kind == PairWitness::Kind::elements && raw) {
    return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
  }
  return format_pair(a, p);
}

void write_json(const std::string& path, const ordered_json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) fail(ErrorKind::invalid_parameter, "cannot write " + path);
  f << j.dump(2) << "\n";
}

RingPtr load_ring(const Options& o) { return elaborate(parse_ring_expr(o.expr), {o.raw}); }

int cmd_describe(const Options& o) {
  const RingPtr r = load_ring(o);
  const auto a = analyze(r);
  const Ring& ring = *r;
  std::cout << "ring           " << ring.describe() << "\n"
            << "size           " << ring.size() << "\n"
            << "commutative    " << (ring.is_commutative() ? "yes" : "no") << "\n"
            << "identity       " << (ring.one() ? fmt(ring, *ring.one(), o.raw) : std::string("none")) << "\n"
            << "backend        " << to_string(ring.backend()) << "\n"
            << "ideals         " << a->lattice().size() << "\n"
            << "jacobson       " << ideal_spec(a->jacobson()) << " (" << a->jacobson().size() << " elements)\n"
            << "prime radical  " << ideal_spec(a->prime_radical()) << "\n"
            << "center         " << a->center().count() << " elements\n";
  ordered_json j{{"ring", ring.describe()},
                 {"size", ring.size()},
                 {"commutative", ring.is_commutative()},
                 {"identity", ring.one().has_value()},
                 {"ideals", a->lattice().size()},
                 {"jacobson", ideal_spec(a->jacobson())},
                 {"prime_radical", ideal_spec(a->prime_radical())},
                 {"center_size", a->center().count()}};
  write_json(o.json_path, j);
  return ok;
}

int cmd_ideals(const Options& o) {
  const RingPtr r = load_ring(o);
  const auto a = analyze(r);
  const auto& lat = a->lattice();
  auto flag = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "?"; };
  std::cout << std::left << std::setw(6) << "index" << std::setw(8) << "size" << std::setw(8) << "prime"
            << std::setw(10) << "maximal" << std::setw(12) << "nilpotent" << "ideal\n";
  ordered_json j = ordered_json::array();
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const auto f = ideal_properties(lat[k], lat);
    std::cout << std::setw(6) << k << std::setw(8) << lat[k].size() << std::setw(8) << flag(f.prime) << std::setw(10)
              << flag(f.maximal) << std::setw(12) << (f.nilpotent ? "yes" : "no") << ideal_spec(lat[k]) << "\n";
    j.push_back({{"index", k},
                 {"ideal", ideal_spec(lat[k])},
                 {"size", lat[k].size()},
                 {"prime", f.prime.value_or(false)},
                 {"maximal", f.maximal.value_or(false)},
                 {"nilpotent", f.nilpotent}});
  }
  write_json(o.json_path, j);
  return ok;
}

int cmd_check(const Options& o) {
  const auto pred = parse_predicate(o.predicate);
  if (!pred) fail(ErrorKind::invalid_parameter, "unknown predicate '" + o.predicate + "'");
  if (o.mode != "fixed" && o.mode != "per-pair") fail(ErrorKind::invalid_parameter, "mode must be fixed or per-pair");
  const RingPtr r = load_ring(o);
  const auto a = analyze(r);
  const ElaborateOptions eo{o.raw};
  const IdealSet i = elaborate_ideal(r, parse_ideal_spec(o.ideal), eo);
  std::optional<SubsetS> s;
  if (uses_subset(*pred)) {
    if (o.subset.empty()) fail(ErrorKind::invalid_parameter, "predicate " + o.predicate + " needs --subset");
    s = elaborate_subset(r, parse_subset_spec(o.subset), eo);
  }
  CheckOptions opts;
  opts.mode = o.mode == "fixed" ? Quantifier::fixed_s : Quantifier::per_pair;
  if (o.method == "lattice") {
    opts.method = Method::lattice;
  } else if (o.method == "elementwise") {
    opts.method = Method::elementwise;
  } else if (!o.method.empty()) {
    fail(ErrorKind::invalid_parameter, "method must be lattice or elementwise");
  }
  const CheckResult c = run_check(*a, *pred, i, s ? &*s : nullptr, opts);
  const Ring& ring = *r;
  std::cout << "ring            " << ring.describe() << "\n"
            << "ideal           " << ideal_spec(i) << " (" << i.size() << " elements)\n";
  if (s) std::cout << "subset          " << fmt_set(ring, s->elements(), o.raw) << "\n";
  std::cout << "predicate       " << to_string(c.predicate) << " [" << to_string(c.mode) << ", " << to_string(c.method)
            << "]\n"
            << "verdict         " << (c.verdict ? "true" : "false") << "\n";
  if (c.witness_s) std::cout << "witness s       " << fmt(ring, *c.witness_s, o.raw) << "\n";
  if (c.counterexample) std::cout << "counterexample  " << fmt_pair(*a, *c.counterexample, o.raw) << "\n";
  for (const auto& v : c.violations) {
    std::cout << "  s = " << fmt(ring, v.s, o.raw) << " violated by " << fmt_pair(*a, v.pair, o.raw) << "\n";
  }
  ordered_json j{{"ring", ring.describe()},
                 {"ideal", ideal_spec(i)},
                 {"predicate", to_string(c.predicate)},
                 {"mode", to_string(c.mode)},
                 {"method", to_string(c.method)},
                 {"verdict", c.verdict}};
  j["subset"] = s ? ordered_json(fmt_set(ring, s->elements(), o.raw)) : ordered_json(nullptr);
  j["witness_s"] = c.witness_s ? ordered_json(fmt(ring, *c.witness_s, o.raw)) : ordered_json(nullptr);
  j["counterexample"] = c.counterexample ? ordered_json(fmt_pair(*a, *c.counterexample, o.raw)) : ordered_json(nullptr);
  j["violations"] = ordered_json::array();
  for (const auto& v : c.violations) {
    j["violations"].push_back({{"s", fmt(ring, v.s, o.raw)}, {"pair", fmt_pair(*a, v.pair, o.raw)}});
  }
  write_json(o.json_path, j);
  return c.verdict ? ok : check_false;
}

void print_examples(const std::vector<ExampleResult>& examples) {
  for (const auto& e : examples) {
    std::cout << e.id << "  " << (e.passed ? "pass" : "FAIL") << "  " << e.description << "\n    " << e.detail << "\n";
  }
}

int cmd_verify(const Options& o) {
  CorpusConfig config = CorpusConfig::standard();
  if (!o.config_path.empty()) {
    std::ifstream f(o.config_path);
    if (!f) fail(ErrorKind::invalid_parameter, "cannot read " + o.config_path);
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::invalid_parameter, std::string("config: ") + e.what());
    }
    config = CorpusConfig::from_json(j);
  }
  if (o.max_size != 0) config.max_size = o.max_size;
  Harness h(build_corpus(config));
  const auto reports = h.verify_all(o.properties);
  const auto examples = run_worked_examples();
  std::size_t bad = 0;
  std::cout << "corpus: " << h.corpus().rings.size() << " rings, " << h.corpus().instances << " instances\n";
  std::cout << std::left << std::setw(6) << "id" << std::setw(10) << "tested" << std::setw(10) << "vacuous"
            << std::setw(10) << "violated" << "citation\n";
  for (const auto& r : reports) {
    const auto* info = find_property(r.property_id);
    std::string note;
    if (info->status == PropertyStatus::exploratory) note = " [non-gating]";
    if (info->status == PropertyStatus::out_of_scope) note = " [out of scope]";
    if (info->status == PropertyStatus::gating) bad += r.violated;
    std::cout << std::setw(6) << r.property_id << std::setw(10) << r.tested << std::setw(10) << r.vacuous
              << std::setw(10) << r.violated << r.citation << note << "\n";
    for (const auto& v : r.violations) std::cout << "    " << to_json(v).dump() << "\n";
  }
  print_examples(examples);
  write_json(o.json_path, report_json(h.corpus(), reports, examples));
  const bool examples_ok = std::all_of(examples.begin(), examples.end(), [](const auto& e) { return e.passed; });
  return bad == 0 && examples_ok ? ok : violations;
}

int cmd_reproduce(const Options& o) {
  const auto examples = run_worked_examples();
  print_examples(examples);
  ordered_json j = ordered_json::array();
  for (const auto& e : examples) j.push_back(to_json(e));
  write_json(o.json_path, j);
  return std::all_of(examples.begin(), examples.end(), [](const auto& e) { return e.passed; }) ? ok : violations;
}

int exit_code(ErrorKind k) { return k == ErrorKind::capacity_exceeded ? capacity : usage; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring ideals: S-J-ideal checks and property verification"};
  app.require_subcommand(1);
  Options o;

  auto* describe = app.add_subcommand("describe", "Summarize a ring");
  describe->add_option("ring", o.expr, "Ring expression")->required();

  auto* ideals = app.add_subcommand("ideals", "List the ideal lattice");
  ideals->add_option("ring", o.expr, "Ring expression")->required();

  auto* check = app.add_subcommand("check", "Evaluate one predicate");
  check->add_option("ring", o.expr, "Ring expression")->required();
  check->add_option("--ideal", o.ideal, "Ideal spec, e.g. gen(4)")->required();
  check->add_option("--subset", o.subset, "Subset spec, e.g. mulclosed(1,3,9,27)");
  check->add_option("--predicate", o.predicate, "j, n, s-prime, s-n, s-j, right-s-prime, right-s-j");
  check->add_option("--mode", o.mode, "fixed or per-pair");
  check->add_option("--method", o.method, "lattice or elementwise");
  check->add_flag("--raw", o.raw, "Element literals are raw indices");

  auto* verify = app.add_subcommand("verify", "Run the property suite over the corpus");
  verify->add_option("--property", o.properties, "Property ids (default: all)");
  verify->add_option("--config", o.config_path, "Corpus config (JSON)");
  verify->add_option("--max-size", o.max_size, "Largest ring size in the corpus");

  auto* reproduce = app.add_subcommand("reproduce", "Run the worked examples");

  for (auto* sub : {describe, ideals, check, verify, reproduce}) {
    sub->add_option("--json", o.json_path, "Also write JSON to this path");
  }
  for (auto* sub : {describe, ideals}) sub->add_flag("--raw", o.raw, "Element literals are raw indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*describe) return cmd_describe(o);
    if (*ideals) return cmd_ideals(o);
    if (*check) return cmd_check(o);
    if (*verify) return cmd_verify(o);
    return cmd_reproduce(o);
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
}
