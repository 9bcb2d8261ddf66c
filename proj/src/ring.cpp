#include "ringlab/ring.hpp"

#include "ringlab/error.hpp"

namespace ringlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::capacity_exceeded: return "capacity-exceeded";
    case ErrorKind::invalid_ideal: return "invalid-ideal";
    case ErrorKind::invalid_module: return "invalid-module";
    case ErrorKind::invalid_hom: return "invalid-hom";
    case ErrorKind::invalid_subset: return "invalid-subset";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::semantic_error: return "semantic-error";
  }
  return "unknown";
}

const char* to_string(Backend b) {
  switch (b) {
    case Backend::table: return "table";
    case Backend::zn: return "Zn";
    case Backend::product: return "product";
    case Backend::matrix: return "matrix";
    case Backend::quotient: return "quotient";
    case Backend::idealization: return "idealization";
    case Backend::amalgamation: return "amalgamation";
    case Backend::truncated_poly: return "truncated-poly";
    case Backend::ideal_as_ring: return "ideal-as-ring";
  }
  return "unknown";
}

std::string to_string(const ElementLiteral& lit) {
  auto join = [](const std::vector<ElementLiteral>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ",";
      out += to_string(xs[i]);
    }
    return out;
  };
  switch (lit.kind) {
    case ElementLiteral::Kind::integer: return std::to_string(lit.value);
    case ElementLiteral::Kind::tuple: return "(" + join(lit.items) + ")";
    case ElementLiteral::Kind::list: return "[" + join(lit.items) + "]";
    case ElementLiteral::Kind::poly: return "poly(" + join(lit.items) + ")";
  }
  return "?";
}

Ring::Ring(Backend backend, std::size_t size, Elem zero) : backend_(backend), size_(size), zero_(zero) {
  if (size == 0) fail(ErrorKind::invalid_parameter, "ring must have at least one element");
  if (size > kMaxRingSize) {
    fail(ErrorKind::capacity_exceeded, "ring of size " + std::to_string(size) + " exceeds index capacity");
  }
}

void Ring::finalize(std::optional<Elem> known_one, std::string description) {
  description_ = std::move(description);
  if (size_ <= kTableThreshold) {
    const std::size_t n = size_;
    std::vector<std::uint16_t> add_t(n * n), mul_t(n * n), neg_t(n);
    for (Elem a = 0; a < n; ++a) {
      neg_t[a] = static_cast<std::uint16_t>(neg_impl(a));
      for (Elem b = 0; b < n; ++b) {
        add_t[a * n + b] = static_cast<std::uint16_t>(add_impl(a, b));
        mul_t[a * n + b] = static_cast<std::uint16_t>(mul_impl(a, b));
      }
    }
    add_table_ = std::move(add_t);
    mul_table_ = std::move(mul_t);
    neg_table_ = std::move(neg_t);
  }

  AdditiveSpan span(*this);
  for (Elem x = 0; x < size_ && span.size() < size_; ++x) span.adjoin(x);
  additive_gens_ = span.generators();

  commutative_ = true;
  for (Elem g : additive_gens_) {
    for (Elem h : additive_gens_) {
      if (mul(g, h) != mul(h, g)) commutative_ = false;
    }
  }

  if (known_one) {
    one_ = known_one;
  } else {
    for (Elem e = 0; e < size_; ++e) {
      bool ok = true;
      for (Elem g : additive_gens_) {
        if (mul(e, g) != g || mul(g, e) != g) {
          ok = false;
          break;
        }
      }
      if (ok) {
        one_ = e;
        break;
      }
    }
  }
}

Elem Ring::times(std::int64_t k, Elem a) const {
  const bool negative = k < 0;
  std::uint64_t u = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Elem result = zero_;
  Elem base = a;
  while (u != 0) {
    if (u & 1U) result = add(result, base);
    base = add(base, base);
    u >>= 1U;
  }
  return negative ? neg(result) : result;
}

ElementLiteral Ring::to_literal(Elem e) const { return ElementLiteral::integer(e); }

Elem Ring::from_literal(const ElementLiteral& lit) const {
  if (lit.kind != ElementLiteral::Kind::integer) {
    fail(ErrorKind::semantic_error, "literal " + to_string(lit) + " does not denote an element of " + describe());
  }
  if (one_) return times(lit.value, *one_);
  if (lit.value < 0 || static_cast<std::size_t>(lit.value) >= size_) {
    fail(ErrorKind::semantic_error, "index " + std::to_string(lit.value) + " out of range for " + describe());
  }
  return static_cast<Elem>(lit.value);
}

AdditiveSpan::AdditiveSpan(const Ring& ring) : ring_(&ring), members_(ring.size()) {
  members_.insert(ring.zero());
  elements_.push_back(ring.zero());
}

bool AdditiveSpan::adjoin(Elem x) {
  if (members_.contains(x)) return false;
  const std::size_t base = elements_.size();
  Elem kx = x;
  // H + <x> is the union of the cosets H + kx up to the first k with kx in H.
  while (!members_.contains(kx)) {
    for (std::size_t i = 0; i < base; ++i) {
      const Elem y = ring_->add(elements_[i], kx);
      members_.insert(y);
      elements_.push_back(y);
    }
    kx = ring_->add(kx, x);
  }
  generators_.push_back(x);
  return true;
}

}  // namespace ringlab
