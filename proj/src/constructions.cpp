#include "ringlab/constructions.hpp"

#include <array>

#include "ringlab/error.hpp"
#include "ringlab/ideal.hpp"

namespace ringlab {

namespace {

constexpr std::size_t kMaxCells = 24;

std::size_t checked_mul(std::size_t a, std::size_t b, const std::string& what) {
  if (a != 0 && b > kMaxRingSize / a) fail(ErrorKind::capacity_exceeded, what + " exceeds index capacity");
  return a * b;
}

std::size_t checked_pow(std::size_t base, std::size_t exp, const std::string& what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = checked_mul(out, base, what);
  return out;
}

std::string wrap_product(const Ring& r) {
  return r.backend() == Backend::product ? "(" + r.describe() + ")" : r.describe();
}

void expect_items(const ElementLiteral& lit, ElementLiteral::Kind kind, std::size_t n, const Ring& ring) {
  if (lit.kind != kind || lit.items.size() != n) {
    fail(ErrorKind::semantic_error, "literal " + to_string(lit) + " does not denote an element of " + ring.describe());
  }
}

std::size_t quotient_size(const IdealSet& ideal) { return ideal.ring().size() / ideal.size(); }

}  // namespace

std::string ideal_spec(const IdealSet& ideal) {
  const Ring& r = ideal.ring();
  std::vector<Elem> gens;
  try {
    gens = minimal_generating_set(ideal);
  } catch (const RingError&) {
    gens = ideal.generators();
  }
  if (gens.empty()) gens.push_back(r.zero());
  std::string out = "gen(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += r.format(gens[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- Z_n

ZnRing::ZnRing(std::uint32_t n) : Ring(Backend::zn, n, 0), n_(n) {
  finalize(n == 1 ? Elem{0} : Elem{1}, "Z" + std::to_string(n));
}

Elem ZnRing::add_impl(Elem a, Elem b) const {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Elem>(s >= n_ ? s - n_ : s);
}

Elem ZnRing::mul_impl(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % n_); }

Elem ZnRing::neg_impl(Elem a) const { return a == 0 ? 0 : n_ - a; }

// ---------------------------------------------------------------- product

ProductRing::ProductRing(RingPtr first, RingPtr second, std::string description)
    : Ring(Backend::product, checked_mul(first->size(), second->size(), "product ring"),
           static_cast<Elem>(first->zero() * second->size() + second->zero())),
      first_(std::move(first)),
      second_(std::move(second)) {
  std::optional<Elem> one;
  if (first_->one() && second_->one()) one = pair(*first_->one(), *second_->one());
  if (description.empty()) description = first_->describe() + " x " + wrap_product(*second_);
  finalize(one.has_value() ? one : std::optional<Elem>{}, std::move(description));
}

Elem ProductRing::add_impl(Elem a, Elem b) const {
  auto [a1, a2] = split(a);
  auto [b1, b2] = split(b);
  return pair(first_->add(a1, b1), second_->add(a2, b2));
}

Elem ProductRing::mul_impl(Elem a, Elem b) const {
  auto [a1, a2] = split(a);
  auto [b1, b2] = split(b);
  return pair(first_->mul(a1, b1), second_->mul(a2, b2));
}

Elem ProductRing::neg_impl(Elem a) const {
  auto [a1, a2] = split(a);
  return pair(first_->neg(a1), second_->neg(a2));
}

ElementLiteral ProductRing::to_literal(Elem e) const {
  auto [a, b] = split(e);
  return ElementLiteral::tuple({first_->to_literal(a), second_->to_literal(b)});
}

Elem ProductRing::from_literal(const ElementLiteral& lit) const {
  if (lit.kind == ElementLiteral::Kind::integer) return Ring::from_literal(lit);
  expect_items(lit, ElementLiteral::Kind::tuple, 2, *this);
  return pair(first_->from_literal(lit.items[0]), second_->from_literal(lit.items[1]));
}

// ---------------------------------------------------------------- matrices

MatrixRing::MatrixRing(std::uint32_t k, RingPtr base, std::string description)
    : Ring(Backend::matrix, checked_pow(base->size(), std::size_t{k} * k, "matrix ring"), 0),
      k_(k),
      base_(std::move(base)),
      cells_(std::size_t{k} * k) {
  if (cells_ > kMaxCells) fail(ErrorKind::capacity_exceeded, "matrix dimension too large");
  if (size() <= (std::size_t{1} << 20)) {
    decoded_.resize(size() * cells_);
    for (Elem e = 0; e < size(); ++e) {
      Elem x = e;
      for (std::size_t i = cells_; i-- > 0;) {
        decoded_[e * cells_ + i] = static_cast<Elem>(x % base_->size());
        x /= static_cast<Elem>(base_->size());
      }
    }
  }
  std::vector<Elem> z(cells_, base_->zero());
  const Elem zero_index = encode(z);
  if (zero_index != zero()) fail(ErrorKind::invalid_parameter, "matrix base ring must have zero at index 0");
  if (description.empty()) description = "M(" + std::to_string(k) + ", " + base_->describe() + ")";
  std::optional<Elem> one;
  if (base_->one()) one = scalar(*base_->one());
  finalize(one, std::move(description));
}

void MatrixRing::decode(Elem e, Elem* out) const {
  if (!decoded_.empty()) {
    const Elem* src = &decoded_[std::size_t{e} * cells_];
    for (std::size_t i = 0; i < cells_; ++i) out[i] = src[i];
    return;
  }
  for (std::size_t i = cells_; i-- > 0;) {
    out[i] = static_cast<Elem>(e % base_->size());
    e /= static_cast<Elem>(base_->size());
  }
}

std::vector<Elem> MatrixRing::entries(Elem e) const {
  std::vector<Elem> out(cells_);
  decode(e, out.data());
  return out;
}

Elem MatrixRing::encode(const std::vector<Elem>& entries) const {
  std::size_t e = 0;
  for (Elem v : entries) e = e * base_->size() + v;
  return static_cast<Elem>(e);
}

Elem MatrixRing::scalar(Elem c) const {
  std::vector<Elem> m(cells_, base_->zero());
  for (std::uint32_t i = 0; i < k_; ++i) m[i * k_ + i] = c;
  return encode(m);
}

Elem MatrixRing::add_impl(Elem a, Elem b) const {
  std::array<Elem, kMaxCells> x{}, y{};
  decode(a, x.data());
  decode(b, y.data());
  std::size_t e = 0;
  for (std::size_t i = 0; i < cells_; ++i) e = e * base_->size() + base_->add(x[i], y[i]);
  return static_cast<Elem>(e);
}

Elem MatrixRing::mul_impl(Elem a, Elem b) const {
  std::array<Elem, kMaxCells> x{}, y{};
  decode(a, x.data());
  decode(b, y.data());
  std::size_t e = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      Elem acc = base_->zero();
      for (std::uint32_t l = 0; l < k_; ++l) acc = base_->add(acc, base_->mul(x[i * k_ + l], y[l * k_ + j]));
      e = e * base_->size() + acc;
    }
  }
  return static_cast<Elem>(e);
}

Elem MatrixRing::neg_impl(Elem a) const {
  std::array<Elem, kMaxCells> x{};
  decode(a, x.data());
  std::size_t e = 0;
  for (std::size_t i = 0; i < cells_; ++i) e = e * base_->size() + base_->neg(x[i]);
  return static_cast<Elem>(e);
}

ElementLiteral MatrixRing::to_literal(Elem e) const {
  auto m = entries(e);
  std::vector<ElementLiteral> rows;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::vector<ElementLiteral> row;
    for (std::uint32_t j = 0; j < k_; ++j) row.push_back(base_->to_literal(m[i * k_ + j]));
    rows.push_back(ElementLiteral::list(std::move(row)));
  }
  return ElementLiteral::list(std::move(rows));
}

Elem MatrixRing::from_literal(const ElementLiteral& lit) const {
  if (lit.kind == ElementLiteral::Kind::integer) return Ring::from_literal(lit);
  expect_items(lit, ElementLiteral::Kind::list, k_, *this);
  std::vector<Elem> m;
  for (const auto& row : lit.items) {
    expect_items(row, ElementLiteral::Kind::list, k_, *this);
    for (const auto& x : row.items) m.push_back(base_->from_literal(x));
  }
  return encode(m);
}

// ---------------------------------------------------------------- quotients

QuotientRing::QuotientRing(IdealSet ideal, std::string description)
    : Ring(Backend::quotient, quotient_size(ideal), 0), ideal_(std::move(ideal)) {
  const Ring& r = ideal_.ring();
  const auto members = ideal_.elements();
  constexpr Elem unset = ~Elem{0};
  coset_.assign(r.size(), unset);
  for (Elem x = 0; x < r.size(); ++x) {
    if (coset_[x] != unset) continue;
    const auto id = static_cast<Elem>(reps_.size());
    reps_.push_back(x);
    for (Elem i : members) coset_[r.add(x, i)] = id;
  }
  if (coset_[r.zero()] != 0) fail(ErrorKind::invalid_parameter, "quotient base ring must have zero at index 0");
  if (description.empty()) description = "quot(" + r.describe() + ", " + ideal_spec(ideal_) + ")";
  std::optional<Elem> one;
  if (r.one()) one = coset_[*r.one()];
  finalize(one, std::move(description));
}

Elem QuotientRing::add_impl(Elem a, Elem b) const { return coset_[base()->add(reps_[a], reps_[b])]; }
Elem QuotientRing::mul_impl(Elem a, Elem b) const { return coset_[base()->mul(reps_[a], reps_[b])]; }
Elem QuotientRing::neg_impl(Elem a) const { return coset_[base()->neg(reps_[a])]; }

ElementLiteral QuotientRing::to_literal(Elem e) const { return base()->to_literal(reps_[e]); }
Elem QuotientRing::from_literal(const ElementLiteral& lit) const { return coset_[base()->from_literal(lit)]; }

// ---------------------------------------------------------------- idealization

IdealizationRing::IdealizationRing(Module module, std::string description)
    : Ring(Backend::idealization, checked_mul(module.ring().size(), module.size(), "idealization"),
           static_cast<Elem>(module.ring().zero() * module.size() + module.zero())),
      module_(std::move(module)) {
  const Ring& r = module_.ring();
  if (!r.is_commutative()) fail(ErrorKind::invalid_module, "idealization needs a commutative base ring");
  if (description.empty()) {
    description = "idealize(" + r.describe() + ", " +
                  (module_.cyclic_order() ? std::to_string(*module_.cyclic_order()) : module_.describe()) + ")";
  }
  std::optional<Elem> one;
  if (r.one()) one = pair(*r.one(), module_.zero());
  finalize(one, std::move(description));
}

Elem IdealizationRing::add_impl(Elem a, Elem b) const {
  auto [a1, m1] = split(a);
  auto [a2, m2] = split(b);
  return pair(base()->add(a1, a2), module_.add(m1, m2));
}

Elem IdealizationRing::mul_impl(Elem a, Elem b) const {
  auto [a1, m1] = split(a);
  auto [a2, m2] = split(b);
  return pair(base()->mul(a1, a2), module_.add(module_.act(a1, m2), module_.act(a2, m1)));
}

Elem IdealizationRing::neg_impl(Elem a) const {
  auto [a1, m1] = split(a);
  return pair(base()->neg(a1), module_.neg(m1));
}

ElementLiteral IdealizationRing::to_literal(Elem e) const {
  auto [a, m] = split(e);
  return ElementLiteral::tuple({base()->to_literal(a), ElementLiteral::integer(m)});
}

Elem IdealizationRing::from_literal(const ElementLiteral& lit) const {
  if (lit.kind == ElementLiteral::Kind::integer) return Ring::from_literal(lit);
  expect_items(lit, ElementLiteral::Kind::tuple, 2, *this);
  const auto& m = lit.items[1];
  if (m.kind != ElementLiteral::Kind::integer) expect_items(m, ElementLiteral::Kind::integer, 0, *this);
  std::int64_t v = m.value;
  const auto s = static_cast<std::int64_t>(module_.size());
  if (module_.cyclic_order()) {
    v = ((v % s) + s) % s;
  } else if (v < 0 || v >= s) {
    fail(ErrorKind::semantic_error, "module index " + std::to_string(v) + " out of range");
  }
  return pair(base()->from_literal(lit.items[0]), static_cast<Elem>(v));
}

// ---------------------------------------------------------------- amalgamation

AmalgamationRing::AmalgamationRing(Hom f, IdealSet j, std::string description)
    : Ring(Backend::amalgamation, checked_mul(f.source().size(), j.size(), "amalgamation"), 0),
      f_(std::move(f)),
      j_(std::move(j)) {
  if (j_.ring_ptr() != f_.target_ptr()) fail(ErrorKind::ring_mismatch, "amalgamation ideal must live in the hom target");
  j_elems_ = j_.elements();
  j_pos_.assign(target()->size(), -1);
  for (std::size_t i = 0; i < j_elems_.size(); ++i) j_pos_[j_elems_[i]] = static_cast<std::int64_t>(i);
  if (base()->zero() != 0 || j_pos_[target()->zero()] != 0) {
    fail(ErrorKind::invalid_parameter, "amalgamation rings must have zero at index 0");
  }
  if (description.empty()) {
    description = "amalg(" + base()->describe() + ", " + target()->describe() + ", " + f_.label() + ", " +
                  ideal_spec(j_) + ")";
  }
  finalize(std::nullopt, std::move(description));
}

Elem AmalgamationRing::encode(Elem r, Elem j) const {
  return static_cast<Elem>(r * j_elems_.size() + static_cast<std::size_t>(j_pos_[j]));
}

std::pair<Elem, Elem> AmalgamationRing::split(Elem e) const {
  const auto n = static_cast<Elem>(j_elems_.size());
  return {e / n, j_elems_[e % n]};
}

std::pair<Elem, Elem> AmalgamationRing::point(Elem e) const {
  auto [r, j] = split(e);
  return {r, target()->add(f_(r), j)};
}

Elem AmalgamationRing::add_impl(Elem a, Elem b) const {
  auto [r1, j1] = split(a);
  auto [r2, j2] = split(b);
  return encode(base()->add(r1, r2), target()->add(j1, j2));
}

Elem AmalgamationRing::mul_impl(Elem a, Elem b) const {
  auto [r1, y1] = point(a);
  auto [r2, y2] = point(b);
  const Ring& t = *target();
  const Elem r = base()->mul(r1, r2);
  return encode(r, t.sub(t.mul(y1, y2), f_(r)));
}

Elem AmalgamationRing::neg_impl(Elem a) const {
  auto [r, j] = split(a);
  return encode(base()->neg(r), target()->neg(j));
}

ElementLiteral AmalgamationRing::to_literal(Elem e) const {
  auto [r, y] = point(e);
  return ElementLiteral::tuple({base()->to_literal(r), target()->to_literal(y)});
}

Elem AmalgamationRing::from_literal(const ElementLiteral& lit) const {
  if (lit.kind == ElementLiteral::Kind::integer) return Ring::from_literal(lit);
  expect_items(lit, ElementLiteral::Kind::tuple, 2, *this);
  const Elem r = base()->from_literal(lit.items[0]);
  const Elem y = target()->from_literal(lit.items[1]);
  const Elem j = target()->sub(y, f_(r));
  if (j_pos_[j] < 0) {
    fail(ErrorKind::semantic_error, "literal " + to_string(lit) + " is not of the form (r, f(r)+j) in " + describe());
  }
  return encode(r, j);
}

// ---------------------------------------------------------------- truncated polynomials

TruncatedPolyRing::TruncatedPolyRing(RingPtr base, std::uint32_t d, std::string description)
    : Ring(Backend::truncated_poly, checked_pow(base->size(), d, "truncated polynomial ring"), 0),
      base_(std::move(base)),
      d_(d) {
  if (base_->zero() != 0) fail(ErrorKind::invalid_parameter, "polynomial base ring must have zero at index 0");
  if (!base_->one()) fail(ErrorKind::invalid_parameter, "truncated polynomial ring needs a base ring with identity");
  if (description.empty()) description = "trunc(" + base_->describe() + ", " + std::to_string(d) + ")";
  std::vector<Elem> one(d_, base_->zero());
  one[0] = *base_->one();
  finalize(encode(one), std::move(description));
}

std::vector<Elem> TruncatedPolyRing::coefficients(Elem e) const {
  std::vector<Elem> c(d_);
  for (std::size_t i = d_; i-- > 0;) {
    c[i] = static_cast<Elem>(e % base_->size());
    e /= static_cast<Elem>(base_->size());
  }
  return c;
}

Elem TruncatedPolyRing::encode(const std::vector<Elem>& coeffs) const {
  std::size_t e = 0;
  for (Elem v : coeffs) e = e * base_->size() + v;
  return static_cast<Elem>(e);
}

Elem TruncatedPolyRing::add_impl(Elem a, Elem b) const {
  auto x = coefficients(a);
  auto y = coefficients(b);
  for (std::size_t i = 0; i < d_; ++i) x[i] = base_->add(x[i], y[i]);
  return encode(x);
}

Elem TruncatedPolyRing::mul_impl(Elem a, Elem b) const {
  auto x = coefficients(a);
  auto y = coefficients(b);
  std::vector<Elem> z(d_, base_->zero());
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; i + j < d_; ++j) z[i + j] = base_->add(z[i + j], base_->mul(x[i], y[j]));
  }
  return encode(z);
}

Elem TruncatedPolyRing::neg_impl(Elem a) const {
  auto x = coefficients(a);
  for (auto& v : x) v = base_->neg(v);
  return encode(x);
}

ElementLiteral TruncatedPolyRing::to_literal(Elem e) const {
  std::vector<ElementLiteral> items;
  for (Elem c : coefficients(e)) items.push_back(base_->to_literal(c));
  return ElementLiteral::poly(std::move(items));
}

Elem TruncatedPolyRing::from_literal(const ElementLiteral& lit) const {
  if (lit.kind == ElementLiteral::Kind::integer) return Ring::from_literal(lit);
  if (lit.kind != ElementLiteral::Kind::poly || lit.items.empty() || lit.items.size() > d_) {
    fail(ErrorKind::semantic_error, "literal " + to_string(lit) + " does not denote an element of " + describe());
  }
  std::vector<Elem> c(d_, base_->zero());
  for (std::size_t i = 0; i < lit.items.size(); ++i) c[i] = base_->from_literal(lit.items[i]);
  return encode(c);
}

// ---------------------------------------------------------------- ideal as ring

IdealAsRing::IdealAsRing(IdealSet ideal, std::string description)
    : Ring(Backend::ideal_as_ring, ideal.size(), 0), ideal_(std::move(ideal)), members_(ideal_.elements()) {
  const Ring& r = ideal_.ring();
  if (members_.front() != r.zero()) fail(ErrorKind::invalid_parameter, "ideal ring base must have zero at index 0");
  rank_.assign(r.size(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) rank_[members_[i]] = static_cast<std::int64_t>(i);
  if (description.empty()) description = "idealring(" + r.describe() + ", " + ideal_spec(ideal_) + ")";
  finalize(std::nullopt, std::move(description));
}

std::optional<Elem> IdealAsRing::from_base(Elem x) const {
  if (rank_[x] < 0) return std::nullopt;
  return static_cast<Elem>(rank_[x]);
}

Elem IdealAsRing::add_impl(Elem a, Elem b) const {
  return static_cast<Elem>(rank_[base()->add(members_[a], members_[b])]);
}
Elem IdealAsRing::mul_impl(Elem a, Elem b) const {
  return static_cast<Elem>(rank_[base()->mul(members_[a], members_[b])]);
}
Elem IdealAsRing::neg_impl(Elem a) const { return static_cast<Elem>(rank_[base()->neg(members_[a])]); }

ElementLiteral IdealAsRing::to_literal(Elem e) const { return base()->to_literal(members_[e]); }

Elem IdealAsRing::from_literal(const ElementLiteral& lit) const {
  const Elem x = base()->from_literal(lit);
  if (rank_[x] < 0) fail(ErrorKind::semantic_error, "element " + to_string(lit) + " is not in the ideal " + describe());
  return static_cast<Elem>(rank_[x]);
}

// ---------------------------------------------------------------- explicit tables

TableRing::TableRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                     std::string description)
    : Ring(Backend::table, size, zero), add_(std::move(add)), mul_(std::move(mul)) {
  if (add_.size() != size * size || mul_.size() != size * size) {
    fail(ErrorKind::invalid_parameter, "Cayley tables must have size*size entries");
  }
  if (zero >= size) fail(ErrorKind::invalid_parameter, "zero out of range");
  for (Elem v : add_) {
    if (v >= size) fail(ErrorKind::invalid_parameter, "addition table value out of range");
  }
  for (Elem v : mul_) {
    if (v >= size) fail(ErrorKind::invalid_parameter, "multiplication table value out of range");
  }
  neg_.assign(size, zero);
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      if (add_[a * size + b] == zero) {
        neg_[a] = b;
        break;
      }
    }
  }
  finalize(std::nullopt, std::move(description));
}

// ---------------------------------------------------------------- factories

RingPtr make_zn(std::int64_t n) {
  if (n < 2) fail(ErrorKind::invalid_parameter, "Z_n needs n >= 2, got " + std::to_string(n));
  if (static_cast<std::uint64_t>(n) > kMaxRingSize) fail(ErrorKind::capacity_exceeded, "Z_n too large");
  return std::make_shared<ZnRing>(static_cast<std::uint32_t>(n));
}

RingPtr make_product(RingPtr r1, RingPtr r2) { return std::make_shared<ProductRing>(std::move(r1), std::move(r2)); }

RingPtr make_matrix(std::int64_t k, RingPtr r) {
  if (k < 1) fail(ErrorKind::invalid_parameter, "matrix size must be at least 1");
  if (!r->has_identity()) fail(ErrorKind::invalid_parameter, "matrix rings need a base ring with identity");
  if (static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k) > kMaxCells) {
    fail(ErrorKind::capacity_exceeded, "matrix ring exceeds index capacity");
  }
  return std::make_shared<MatrixRing>(static_cast<std::uint32_t>(k), std::move(r));
}

Quotient make_quotient(const IdealSet& ideal) {
  RingPtr q = std::make_shared<QuotientRing>(ideal);
  const auto& qr = static_cast<const QuotientRing&>(*q);
  std::vector<Elem> map(ideal.ring().size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = qr.coset_of(x);
  Hom h = Hom::make(ideal.ring_ptr(), q, std::move(map), "proj");
  return {std::move(q), std::move(h)};
}

Hom canonical_surjection(const IdealSet& ideal) { return make_quotient(ideal).surjection; }

RingPtr make_idealization(const Module& module) { return std::make_shared<IdealizationRing>(module); }

RingPtr make_amalgamation(const Hom& f, const IdealSet& j) { return std::make_shared<AmalgamationRing>(f, j); }

RingPtr make_truncated_poly(RingPtr r, std::int64_t d) {
  if (d < 1) fail(ErrorKind::invalid_parameter, "truncation degree must be at least 1");
  if (d > 24) fail(ErrorKind::capacity_exceeded, "truncated polynomial ring exceeds index capacity");
  return std::make_shared<TruncatedPolyRing>(std::move(r), static_cast<std::uint32_t>(d));
}

RingPtr make_ideal_as_ring(const IdealSet& ideal) { return std::make_shared<IdealAsRing>(ideal); }

RingPtr make_table_ring(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                        std::string description) {
  return std::make_shared<TableRing>(size, std::move(add), std::move(mul), zero, std::move(description));
}

}  // namespace ringlab
