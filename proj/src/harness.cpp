#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "harness_internal.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

namespace {

constexpr std::size_t kStoredViolations = 25;
constexpr std::size_t kStoredDivergences = 25;

const PropertyImpl& impl_for(const std::string& id) {
  const PropertyInfo* info = find_property(id);
  if (info == nullptr) fail(ErrorKind::invalid_parameter, "unknown property '" + id + "'");
  const PropertyImpl* impl = find_impl(id);
  if (impl == nullptr) fail(ErrorKind::not_applicable, "property " + id + " is out of scope");
  return *impl;
}

}  // namespace

Harness::Harness(CorpusSpec corpus) : corpus_(std::move(corpus)), ctx_(std::make_unique<HarnessContext>()) {}

Harness::~Harness() = default;

PropertyReport Harness::verify(const std::string& id) {
  const PropertyInfo* info = find_property(id);
  if (info == nullptr) fail(ErrorKind::invalid_parameter, "unknown property '" + id + "'");
  PropertyReport r;
  r.property_id = info->id;
  r.citation = info->citation;
  if (info->status == PropertyStatus::out_of_scope) return r;
  const PropertyImpl& impl = impl_for(id);
  for (const Instance& in : impl.generate(corpus_, *ctx_)) {
    Outcome o;
    try {
      o = impl.check(*ctx_, in);
    } catch (const RingError& e) {
      if (e.kind() == ErrorKind::capacity_exceeded) {
        ++r.skipped;
        continue;
      }
      o.kind = OutcomeKind::violated;
      o.detail = e.what();
    }
    switch (o.kind) {
      case OutcomeKind::vacuous:
        ++r.vacuous;
        break;
      case OutcomeKind::passed:
        ++r.tested;
        ++r.passed;
        break;
      case OutcomeKind::violated:
        ++r.tested;
        ++r.violated;
        if (r.violations.size() < kStoredViolations) r.violations.push_back({in, "fixed", o.detail});
        break;
    }
    if (o.divergence && r.divergences.size() < kStoredDivergences) {
      r.divergences.push_back({in, "per-pair", *o.divergence});
    }
  }
  return r;
}

std::vector<PropertyReport> Harness::verify_all(const std::vector<std::string>& ids, std::size_t threads) {
  std::vector<std::string> todo = ids;
  if (todo.empty()) {
    for (const auto& p : property_registry()) todo.push_back(p.id);
  }
  for (const auto& id : todo) {
    if (find_property(id) == nullptr) fail(ErrorKind::invalid_parameter, "unknown property '" + id + "'");
  }
  std::vector<PropertyReport> out(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      try {
        out[k] = verify(todo[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min(threads == 0 ? worker_count() : threads, todo.size());
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<Instance> Harness::instances(const std::string& id) { return impl_for(id).generate(corpus_, *ctx_); }

Outcome Harness::evaluate(const std::string& id, const Instance& instance) {
  return impl_for(id).check(*ctx_, instance);
}

bool Harness::replay(const std::string& id, const Violation& v) {
  return evaluate(id, v.instance).kind == OutcomeKind::violated;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("RINGLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace ringlab
