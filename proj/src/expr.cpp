#include "ringlab/expr.hpp"

#include <cctype>
#include <limits>

#include "ringlab/constructions.hpp"
#include "ringlab/hom.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"

namespace ringlab {

RingExpr RingExpr::zn(std::int64_t n) { return {Kind::zn, n, {}, std::nullopt, {}}; }
RingExpr RingExpr::prod(RingExpr a, RingExpr b) {
  return {Kind::prod, 0, {std::move(a), std::move(b)}, std::nullopt, {}};
}
RingExpr RingExpr::mat(std::int64_t k, RingExpr r) { return {Kind::mat, k, {std::move(r)}, std::nullopt, {}}; }
RingExpr RingExpr::quot(RingExpr r, IdealSpec i) { return {Kind::quot, 0, {std::move(r)}, std::move(i), {}}; }
RingExpr RingExpr::idealize(RingExpr r, std::int64_t k) {
  return {Kind::idealize, k, {std::move(r)}, std::nullopt, {}};
}
RingExpr RingExpr::amalg(RingExpr a, RingExpr b, IdealSpec j) {
  return {Kind::amalg, 0, {std::move(a), std::move(b)}, std::move(j), {}};
}
RingExpr RingExpr::trunc(RingExpr r, std::int64_t d) { return {Kind::trunc, d, {std::move(r)}, std::nullopt, {}}; }
RingExpr RingExpr::idealring(RingExpr r, IdealSpec i) {
  return {Kind::idealring, 0, {std::move(r)}, std::move(i), {}};
}

namespace {

std::string where(SourcePos pos) {
  return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column);
}

std::string syntax_message(SourcePos pos, const std::vector<std::string>& expected, const std::string& found) {
  std::string out = where(pos) + ": expected ";
  if (expected.size() > 1) out += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out + " but found " + found;
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::vector<std::string> expected, const std::string& found)
    : RingError(ErrorKind::syntax_error, syntax_message(pos, expected, found)),
      pos_(pos),
      expected_(std::move(expected)) {}

namespace {

struct Token {
  enum class Type { integer, ident, punct, end };
  Type type = Type::end;
  std::string text;
  std::int64_t value = 0;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.type = Token::Type::integer;
      std::int64_t v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        const int d = text[j] - '0';
        if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
          throw SyntaxError(pos, {"integer"}, "an integer that does not fit in 64 bits");
        }
        v = v * 10 + d;
        ++j;
      }
      t.value = v;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Type::ident;
      while (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
    } else if (c == '(' || c == ')' || c == ',' || c == '[' || c == ']' || c == '-') {
      t.type = Token::Type::punct;
      j = i + 1;
    } else {
      throw SyntaxError(pos, {"a token"}, "'" + std::string(1, c) + "'");
    }
    t.text = std::string(text.substr(i, j - i));
    out.push_back(std::move(t));
    advance(j - i);
  }
  Token end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  RingExpr ring() {
    RingExpr left = term();
    while (peek_ident("x")) {
      const SourcePos pos = next().pos;
      RingExpr right = term();
      left = RingExpr::prod(std::move(left), std::move(right));
      left.pos = pos;
    }
    return left;
  }

  IdealSpec ideal() {
    IdealSpec spec;
    spec.pos = peek().pos;
    expect_ident({"gen"});
    spec.gens = element_list();
    return spec;
  }

  SubsetSpec subset() {
    SubsetSpec spec;
    spec.pos = peek().pos;
    const std::string head = expect_ident({"mulclosed", "gen_s", "msystem"});
    spec.kind = head == "mulclosed" ? SubsetSpecKind::mulclosed
                : head == "gen_s"   ? SubsetSpecKind::gen_s
                                    : SubsetSpecKind::msystem;
    spec.elems = element_list();
    return spec;
  }

  ElementLiteral element() {
    const Token& t = peek();
    if (t.type == Token::Type::integer) return ElementLiteral::integer(next().value);
    if (peek_punct("-")) {
      next();
      if (peek().type != Token::Type::integer) fail_here({"integer"});
      return ElementLiteral::integer(-next().value);
    }
    if (peek_punct("(")) {
      next();
      std::vector<ElementLiteral> xs{element()};
      do {
        expect_punct(",");
        xs.push_back(element());
      } while (!peek_punct(")"));
      next();
      return ElementLiteral::tuple(std::move(xs));
    }
    if (peek_punct("[")) {
      next();
      std::vector<ElementLiteral> xs{element()};
      while (peek_punct(",")) {
        next();
        xs.push_back(element());
      }
      expect_punct("]");
      return ElementLiteral::list(std::move(xs));
    }
    if (peek_ident("poly")) {
      next();
      return ElementLiteral::poly(element_list());
    }
    fail_here({"integer", "'-'", "'('", "'['", "'poly'"});
  }

  void finish() {
    if (peek().type != Token::Type::end) fail_here(expected_after_);
  }

  void expect_after_ring() { expected_after_ = {"'x'", "end of input"}; }

 private:
  RingExpr term() {
    const SourcePos pos = peek().pos;
    RingExpr e;
    if (peek_punct("(")) {
      next();
      e = ring();
      expect_punct_or({")"}, {"'x'", "')'"});
      e.pos = pos;
      return e;
    }
    const std::string head = expect_ident({"Z", "M", "quot", "idealize", "amalg", "trunc", "idealring", "("});
    if (head == "Z") {
      e = RingExpr::zn(integer());
    } else if (head == "M") {
      expect_punct("(");
      const std::int64_t k = integer();
      expect_punct(",");
      RingExpr r = ring();
      close_ring_arg(")");
      e = RingExpr::mat(k, std::move(r));
    } else if (head == "quot" || head == "idealring") {
      expect_punct("(");
      RingExpr r = ring();
      close_ring_arg(",");
      IdealSpec i = ideal();
      expect_punct(")");
      e = head == "quot" ? RingExpr::quot(std::move(r), std::move(i)) : RingExpr::idealring(std::move(r), std::move(i));
    } else if (head == "idealize" || head == "trunc") {
      expect_punct("(");
      RingExpr r = ring();
      close_ring_arg(",");
      const std::int64_t k = integer();
      expect_punct(")");
      e = head == "idealize" ? RingExpr::idealize(std::move(r), k) : RingExpr::trunc(std::move(r), k);
    } else {
      expect_punct("(");
      RingExpr a = ring();
      close_ring_arg(",");
      RingExpr b = ring();
      close_ring_arg(",");
      expect_ident({"mod"});
      expect_punct(",");
      IdealSpec j = ideal();
      expect_punct(")");
      e = RingExpr::amalg(std::move(a), std::move(b), std::move(j));
    }
    e.pos = pos;
    return e;
  }

  std::vector<ElementLiteral> element_list() {
    expect_punct("(");
    std::vector<ElementLiteral> xs{element()};
    while (peek_punct(",")) {
      next();
      xs.push_back(element());
    }
    expect_punct_or({")"}, {"','", "')'"});
    return xs;
  }

  std::int64_t integer() {
    if (peek().type != Token::Type::integer) fail_here({"integer"});
    return next().value;
  }

  // After a ring argument a product operator is also acceptable.
  void close_ring_arg(const std::string& p) { expect_punct_or({p}, {"'x'", quoted(p)}); }

  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }
  bool peek_ident(const std::string& s) const { return peek().type == Token::Type::ident && peek().text == s; }
  bool peek_punct(const std::string& s) const { return peek().type == Token::Type::punct && peek().text == s; }

  void expect_punct(const std::string& p) { expect_punct_or({p}, {quoted(p)}); }

  void expect_punct_or(const std::string& p, std::vector<std::string> expected) {
    if (!peek_punct(p)) fail_here(std::move(expected));
    next();
  }

  std::string expect_ident(const std::vector<std::string>& options) {
    if (peek().type == Token::Type::ident) {
      for (const auto& o : options) {
        if (peek().text == o) return next().text;
      }
    }
    std::vector<std::string> expected;
    for (const auto& o : options) expected.push_back(quoted(o));
    fail_here(std::move(expected));
  }

  [[noreturn]] void fail_here(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.type == Token::Type::end ? "end of input" : quoted(t.text);
    throw SyntaxError(t.pos, std::move(expected), found);
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::vector<std::string> expected_after_{"end of input"};
};

}  // namespace

RingExpr parse_ring_expr(std::string_view text) {
  Parser p(text);
  RingExpr e = p.ring();
  p.expect_after_ring();
  p.finish();
  return e;
}

IdealSpec parse_ideal_spec(std::string_view text) {
  Parser p(text);
  IdealSpec i = p.ideal();
  p.finish();
  return i;
}

SubsetSpec parse_subset_spec(std::string_view text) {
  Parser p(text);
  SubsetSpec s = p.subset();
  p.finish();
  return s;
}

ElementLiteral parse_element(std::string_view text) {
  Parser p(text);
  ElementLiteral e = p.element();
  p.finish();
  return e;
}

namespace {

std::string join(const std::vector<ElementLiteral>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string print(const IdealSpec& i) { return "gen(" + join(i.gens) + ")"; }

std::string print(const SubsetSpec& s) {
  const char* head = s.kind == SubsetSpecKind::mulclosed ? "mulclosed" : s.kind == SubsetSpecKind::gen_s ? "gen_s" : "msystem";
  return std::string(head) + "(" + join(s.elems) + ")";
}

std::string print(const RingExpr& e) {
  const auto& c = e.children;
  switch (e.kind) {
    case RingExpr::Kind::zn: return "Z" + std::to_string(e.n);
    case RingExpr::Kind::prod: {
      std::string right = print(c[1]);
      if (c[1].kind == RingExpr::Kind::prod) right = "(" + right + ")";
      return print(c[0]) + " x " + right;
    }
    case RingExpr::Kind::mat: return "M(" + std::to_string(e.n) + ", " + print(c[0]) + ")";
    case RingExpr::Kind::quot: return "quot(" + print(c[0]) + ", " + print(*e.ideal) + ")";
    case RingExpr::Kind::idealize: return "idealize(" + print(c[0]) + ", " + std::to_string(e.n) + ")";
    case RingExpr::Kind::amalg:
      return "amalg(" + print(c[0]) + ", " + print(c[1]) + ", mod, " + print(*e.ideal) + ")";
    case RingExpr::Kind::trunc: return "trunc(" + print(c[0]) + ", " + std::to_string(e.n) + ")";
    case RingExpr::Kind::idealring: return "idealring(" + print(c[0]) + ", " + print(*e.ideal) + ")";
  }
  return "?";
}

namespace {

[[noreturn]] void rethrow_at(SourcePos pos, const RingError& err, ErrorKind kind) {
  std::string what = err.what();
  const std::string prefix = std::string(to_string(kind)) + ": ";
  if (what.rfind(prefix, 0) == 0) what.erase(0, prefix.size());
  throw RingError(kind, where(pos) + ": " + what);
}

RingPtr build(const RingExpr& e, const ElaborateOptions& options) {
  std::vector<RingPtr> kids;
  for (const auto& c : e.children) kids.push_back(build(c, options));
  try {
    switch (e.kind) {
      case RingExpr::Kind::zn: return make_zn(e.n);
      case RingExpr::Kind::prod: return make_product(kids[0], kids[1]);
      case RingExpr::Kind::mat: return make_matrix(e.n, kids[0]);
      case RingExpr::Kind::quot: return make_quotient(elaborate_ideal(kids[0], *e.ideal, options)).ring;
      case RingExpr::Kind::idealize: return make_idealization(Module::cyclic(kids[0], e.n));
      case RingExpr::Kind::amalg:
        return make_amalgamation(zn_reduction(kids[0], kids[1]), elaborate_ideal(kids[1], *e.ideal, options));
      case RingExpr::Kind::trunc: return make_truncated_poly(kids[0], e.n);
      case RingExpr::Kind::idealring: return make_ideal_as_ring(elaborate_ideal(kids[0], *e.ideal, options));
    }
  } catch (const RingError& err) {
    if (err.kind() == ErrorKind::capacity_exceeded || err.kind() == ErrorKind::semantic_error) throw;
    rethrow_at(e.pos, err, ErrorKind::semantic_error);
  }
  fail(ErrorKind::internal_inconsistency, "unknown expression kind");
}

}  // namespace

RingPtr elaborate(const RingExpr& e, const ElaborateOptions& options) { return build(e, options); }

Elem elaborate_element(const RingPtr& ring, const ElementLiteral& lit, const ElaborateOptions& options) {
  if (!options.raw) return ring->from_literal(lit);
  if (lit.kind != ElementLiteral::Kind::integer) {
    fail(ErrorKind::semantic_error, "raw addressing takes element indices, not " + to_string(lit));
  }
  if (lit.value < 0 || static_cast<std::uint64_t>(lit.value) >= ring->size()) {
    fail(ErrorKind::semantic_error,
         "index " + std::to_string(lit.value) + " is outside 0.." + std::to_string(ring->size() - 1));
  }
  return static_cast<Elem>(lit.value);
}

IdealSet elaborate_ideal(const RingPtr& ring, const IdealSpec& spec, const ElaborateOptions& options) {
  try {
    std::vector<Elem> gens;
    for (const auto& g : spec.gens) gens.push_back(elaborate_element(ring, g, options));
    return ideal_generate(ring, gens);
  } catch (const RingError& err) {
    if (err.kind() == ErrorKind::capacity_exceeded) throw;
    rethrow_at(spec.pos, err, ErrorKind::semantic_error);
  }
}

SubsetS elaborate_subset(const RingPtr& ring, const SubsetSpec& spec, const ElaborateOptions& options) {
  std::vector<Elem> elems;
  try {
    for (const auto& x : spec.elems) elems.push_back(elaborate_element(ring, x, options));
  } catch (const RingError& err) {
    rethrow_at(spec.pos, err, ErrorKind::semantic_error);
  }
  switch (spec.kind) {
    case SubsetSpecKind::mulclosed: return validate_subset(ring, elems, SubsetKind::mult_closed);
    case SubsetSpecKind::gen_s: return generate_mulclosed(ring, elems);
    case SubsetSpecKind::msystem: return validate_subset(ring, elems, SubsetKind::m_system);
  }
  fail(ErrorKind::internal_inconsistency, "unknown subset kind");
}

}  // namespace ringlab
