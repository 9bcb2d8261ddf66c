#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

// Construction-native element notation: `5`, `(a,b)`, `[[a,b],[c,d]]`,
// `poly(c0,c1,...)`.
struct ElementLiteral {
  enum class Kind { integer, tuple, list, poly };

  Kind kind = Kind::integer;
  std::int64_t value = 0;
  std::vector<ElementLiteral> items;

  static ElementLiteral integer(std::int64_t v) { return {Kind::integer, v, {}}; }
  static ElementLiteral tuple(std::vector<ElementLiteral> xs) { return {Kind::tuple, 0, std::move(xs)}; }
  static ElementLiteral list(std::vector<ElementLiteral> xs) { return {Kind::list, 0, std::move(xs)}; }
  static ElementLiteral poly(std::vector<ElementLiteral> xs) { return {Kind::poly, 0, std::move(xs)}; }

  friend bool operator==(const ElementLiteral&, const ElementLiteral&) = default;
};

std::string to_string(const ElementLiteral& lit);

}  // namespace ringlab
