#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/hom.hpp"
#include "ringlab/ideal_set.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

class ZnRing final : public Ring {
 public:
  explicit ZnRing(std::uint32_t n);
  std::uint32_t modulus() const { return n_; }

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  std::uint32_t n_;
};

// R1 x R2, index i1*|R2| + i2.
class ProductRing final : public Ring {
 public:
  ProductRing(RingPtr first, RingPtr second, std::string description = {});
  const RingPtr& first() const { return first_; }
  const RingPtr& second() const { return second_; }
  Elem pair(Elem a, Elem b) const { return static_cast<Elem>(a * second_->size() + b); }
  std::pair<Elem, Elem> split(Elem e) const {
    const auto m = static_cast<Elem>(second_->size());
    return {e / m, e % m};
  }
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  RingPtr first_;
  RingPtr second_;
};

// k x k matrices; entries in row-major order, first entry most significant.
class MatrixRing final : public Ring {
 public:
  MatrixRing(std::uint32_t k, RingPtr base, std::string description = {});
  std::uint32_t dim() const { return k_; }
  const RingPtr& base() const { return base_; }
  std::vector<Elem> entries(Elem e) const;
  Elem encode(const std::vector<Elem>& entries) const;
  // c on the diagonal, zero elsewhere.
  Elem scalar(Elem c) const;
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  void decode(Elem e, Elem* out) const;

  std::uint32_t k_;
  RingPtr base_;
  std::size_t cells_;
  std::vector<Elem> decoded_;
};

// R/I; cosets are numbered in increasing order of their least member.
class QuotientRing final : public Ring {
 public:
  QuotientRing(IdealSet ideal, std::string description = {});
  const RingPtr& base() const { return ideal_.ring_ptr(); }
  const IdealSet& ideal() const { return ideal_; }
  Elem coset_of(Elem x) const { return coset_[x]; }
  Elem representative(Elem q) const { return reps_[q]; }
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  IdealSet ideal_;
  std::vector<Elem> coset_;
  std::vector<Elem> reps_;
};

// R ⊞ M with (a,m)(b,n) = (ab, an + bm); index a*|M| + m.
class IdealizationRing final : public Ring {
 public:
  IdealizationRing(Module module, std::string description = {});
  const RingPtr& base() const { return module_.ring_ptr(); }
  const Module& module() const { return module_; }
  Elem pair(Elem a, Elem m) const { return static_cast<Elem>(a * module_.size() + m); }
  std::pair<Elem, Elem> split(Elem e) const {
    const auto s = static_cast<Elem>(module_.size());
    return {e / s, e % s};
  }
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  Module module_;
};

// R ⋈^f J = {(r, f(r) + j)}; index r*|J| + position of j in J.
class AmalgamationRing final : public Ring {
 public:
  AmalgamationRing(Hom f, IdealSet j, std::string description = {});
  const RingPtr& base() const { return f_.source_ptr(); }
  const RingPtr& target() const { return f_.target_ptr(); }
  const Hom& hom() const { return f_; }
  const IdealSet& ideal() const { return j_; }
  Elem encode(Elem r, Elem j) const;
  std::pair<Elem, Elem> split(Elem e) const;
  // The pair (r, f(r) + j) as elements of R and A.
  std::pair<Elem, Elem> point(Elem e) const;
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  Hom f_;
  IdealSet j_;
  std::vector<Elem> j_elems_;
  std::vector<std::int64_t> j_pos_;
};

// R[x]/(x^d); coefficient c0 is the most significant digit of the index.
class TruncatedPolyRing final : public Ring {
 public:
  TruncatedPolyRing(RingPtr base, std::uint32_t d, std::string description = {});
  const RingPtr& base() const { return base_; }
  std::uint32_t degree_bound() const { return d_; }
  std::vector<Elem> coefficients(Elem e) const;
  Elem encode(const std::vector<Elem>& coeffs) const;
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  RingPtr base_;
  std::uint32_t d_;
};

// An ideal I of R regarded as a ring; index = rank of the member in I.
class IdealAsRing final : public Ring {
 public:
  IdealAsRing(IdealSet ideal, std::string description = {});
  const RingPtr& base() const { return ideal_.ring_ptr(); }
  const IdealSet& ideal() const { return ideal_; }
  Elem to_base(Elem e) const { return members_[e]; }
  std::optional<Elem> from_base(Elem x) const;
  ElementLiteral to_literal(Elem e) const override;
  Elem from_literal(const ElementLiteral& lit) const override;

 protected:
  Elem add_impl(Elem a, Elem b) const override;
  Elem mul_impl(Elem a, Elem b) const override;
  Elem neg_impl(Elem a) const override;

 private:
  IdealSet ideal_;
  std::vector<Elem> members_;
  std::vector<std::int64_t> rank_;
};

// Explicit Cayley tables taken on trust; ring_axioms_check decides whether
// they describe a ring.
class TableRing final : public Ring {
 public:
  TableRing(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, std::string description);

 protected:
  Elem add_impl(Elem a, Elem b) const override { return add_[std::size_t{a} * size() + b]; }
  Elem mul_impl(Elem a, Elem b) const override { return mul_[std::size_t{a} * size() + b]; }
  Elem neg_impl(Elem a) const override { return neg_[a]; }

 private:
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
};

RingPtr make_zn(std::int64_t n);
RingPtr make_product(RingPtr r1, RingPtr r2);
RingPtr make_matrix(std::int64_t k, RingPtr r);
struct Quotient {
  RingPtr ring;
  Hom surjection;
};
Quotient make_quotient(const IdealSet& ideal);
RingPtr make_idealization(const Module& module);
RingPtr make_amalgamation(const Hom& f, const IdealSet& j);
RingPtr make_truncated_poly(RingPtr r, std::int64_t d);
RingPtr make_ideal_as_ring(const IdealSet& ideal);
RingPtr make_table_ring(std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                        std::string description = "table");
Hom canonical_surjection(const IdealSet& ideal);

// Description fragment `gen(a, b, ...)` for an ideal, from a small two-sided generating set.
std::string ideal_spec(const IdealSet& ideal);

}  // namespace ringlab
