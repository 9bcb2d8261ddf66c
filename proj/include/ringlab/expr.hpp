#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/ideal_set.hpp"
#include "ringlab/literal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct IdealSpec {
  std::vector<ElementLiteral> gens;
  SourcePos pos;

  friend bool operator==(const IdealSpec& a, const IdealSpec& b) { return a.gens == b.gens; }
};

enum class SubsetSpecKind { mulclosed, gen_s, msystem };

// mulclosed(...) lists S exactly, gen_s(...) closes the generators under
// multiplication, msystem(...) lists an m-system exactly.
struct SubsetSpec {
  SubsetSpecKind kind = SubsetSpecKind::mulclosed;
  std::vector<ElementLiteral> elems;
  SourcePos pos;

  friend bool operator==(const SubsetSpec& a, const SubsetSpec& b) { return a.kind == b.kind && a.elems == b.elems; }
};

struct RingExpr {
  enum class Kind { zn, prod, mat, quot, idealize, amalg, trunc, idealring };

  Kind kind = Kind::zn;
  // Zn modulus, matrix dimension, module order or truncation degree.
  std::int64_t n = 0;
  std::vector<RingExpr> children;
  std::optional<IdealSpec> ideal;
  SourcePos pos;

  static RingExpr zn(std::int64_t n);
  static RingExpr prod(RingExpr a, RingExpr b);
  static RingExpr mat(std::int64_t k, RingExpr r);
  static RingExpr quot(RingExpr r, IdealSpec i);
  static RingExpr idealize(RingExpr r, std::int64_t k);
  static RingExpr amalg(RingExpr a, RingExpr b, IdealSpec j);
  static RingExpr trunc(RingExpr r, std::int64_t d);
  static RingExpr idealring(RingExpr r, IdealSpec i);

  friend bool operator==(const RingExpr& a, const RingExpr& b) {
    return a.kind == b.kind && a.n == b.n && a.children == b.children && a.ideal == b.ideal;
  }
};

class SyntaxError : public RingError {
 public:
  SyntaxError(SourcePos pos, std::vector<std::string> expected, const std::string& found);

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

RingExpr parse_ring_expr(std::string_view text);
IdealSpec parse_ideal_spec(std::string_view text);
SubsetSpec parse_subset_spec(std::string_view text);
ElementLiteral parse_element(std::string_view text);

std::string print(const RingExpr& e);
std::string print(const IdealSpec& i);
std::string print(const SubsetSpec& s);

// With `raw`, integer literals are element indices instead of native notation.
struct ElaborateOptions {
  bool raw = false;
};

// Failures other than capacity become semantic errors naming the position.
RingPtr elaborate(const RingExpr& e, const ElaborateOptions& options = {});
Elem elaborate_element(const RingPtr& ring, const ElementLiteral& lit, const ElaborateOptions& options = {});
IdealSet elaborate_ideal(const RingPtr& ring, const IdealSpec& spec, const ElaborateOptions& options = {});
SubsetS elaborate_subset(const RingPtr& ring, const SubsetSpec& spec, const ElaborateOptions& options = {});

}  // namespace ringlab
