#include "ringlab/module.hpp"

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

Module Module::cyclic(RingPtr ring, std::uint32_t order) {
  const auto* zn = dynamic_cast<const ZnRing*>(ring.get());
  if (zn == nullptr) fail(ErrorKind::invalid_module, "cyclic modules are only defined over Z_n, got " + ring->describe());
  if (order < 1) fail(ErrorKind::invalid_module, "module order must be positive");
  if (zn->modulus() % order != 0) {
    fail(ErrorKind::invalid_module, "Z" + std::to_string(order) + " is not a module over " + ring->describe() +
                                        ": " + std::to_string(order) + " does not divide " +
                                        std::to_string(zn->modulus()));
  }
  const std::size_t n = order;
  std::vector<Elem> add(n * n);
  std::vector<Elem> action(ring->size() * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) add[a * n + b] = static_cast<Elem>((a + b) % order);
  }
  for (Elem r = 0; r < ring->size(); ++r) {
    for (Elem m = 0; m < n; ++m) {
      action[r * n + m] = static_cast<Elem>((std::uint64_t{r % order} * m) % order);
    }
  }
  Module out = from_tables(std::move(ring), n, std::move(add), std::move(action), 0);
  out.cyclic_order_ = order;
  return out;
}

Module Module::from_tables(RingPtr ring, std::size_t size, std::vector<Elem> add, std::vector<Elem> action,
                           Elem zero) {
  if (size == 0) fail(ErrorKind::invalid_module, "module must have at least one element");
  if (add.size() != size * size || action.size() != ring->size() * size) {
    fail(ErrorKind::invalid_module, "module tables have the wrong shape");
  }
  Module m;
  m.ring_ = std::move(ring);
  m.size_ = size;
  m.zero_ = zero;
  m.add_ = std::move(add);
  m.action_ = std::move(action);
  m.validate();
  return m;
}

void Module::validate() {
  const std::size_t n = size_;
  auto bad = [](const std::string& what) { fail(ErrorKind::invalid_module, what); };
  if (zero_ >= n) bad("module zero out of range");
  for (Elem v : add_) {
    if (v >= n) bad("module addition leaves the carrier");
  }
  for (Elem v : action_) {
    if (v >= n) bad("module action leaves the carrier");
  }
  neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (add(a, zero_) != a || add(zero_, a) != a) bad("module zero is not neutral for " + std::to_string(a));
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) {
        bad("module addition not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (!found && add(a, b) == zero_) {
        neg_[a] = b;
        found = true;
      }
      for (Elem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) {
          bad("module addition not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + ")");
        }
      }
    }
    if (!found) bad("module element " + std::to_string(a) + " has no negative");
  }

  const Ring& r = *ring_;
  const auto& gens = r.additive_generators();
  auto witness = [&](Elem x, Elem y, Elem m) {
    return " at (" + r.format(x) + ", " + r.format(y) + ", " + std::to_string(m) + ")";
  };
  // With additivity in the ring argument it suffices to test the other laws
  // on additive generators of R.
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem g : gens) {
      for (Elem m = 0; m < n; ++m) {
        if (act(r.add(x, g), m) != add(act(x, m), act(g, m))) bad("action not additive in the ring" + witness(x, g, m));
      }
    }
  }
  for (Elem g : gens) {
    for (Elem m = 0; m < n; ++m) {
      for (Elem k = 0; k < n; ++k) {
        if (act(g, add(m, k)) != add(act(g, m), act(g, k))) {
          bad("action not additive in the module" + witness(g, g, m));
        }
      }
    }
    for (Elem h : gens) {
      for (Elem m = 0; m < n; ++m) {
        if (act(r.mul(g, h), m) != act(g, act(h, m))) bad("action not associative" + witness(g, h, m));
      }
    }
  }
}

std::string Module::describe() const {
  if (cyclic_order_) return "Z" + std::to_string(*cyclic_order_);
  return "module(" + std::to_string(size_) + ")";
}

}  // namespace ringlab
