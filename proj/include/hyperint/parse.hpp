#pragma once

// Expression front end:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | variable | field-name | '(' expr ')' | alg(minpoly; coords) | form(...)
// Variables are x1..x9, z and t. `with name: minpoly-in-t` declares an
// algebraic number usable by name.

#include <map>
#include <stdexcept>
#include <string>

#include "hyperint/rfunc.hpp"

namespace hyperint {

struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct UnknownVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseContext {
 public:
  explicit ParseContext(int nvars = 9) : nvars_(nvars) {}
  int nvars() const { return nvars_; }
  void set_nvars(int n) { nvars_ = n; }
  // `name: poly` or `with name: poly`
  void declare(const std::string& line);
  void declare(const std::string& name, const QPoly& minpoly);
  // Field with this minimal polynomial (shared across the context).
  FieldPtr field_for(const QPoly& minpoly);
  const std::map<std::string, AlgNumber>& names() const { return names_; }

 private:
  int nvars_;
  std::map<std::string, AlgNumber> names_;
  std::vector<FieldPtr> fields_;
};

RFunc parse_rfunc(const std::string& text, ParseContext& ctx);
inline RFunc parse_rfunc(const std::string& text) {
  ParseContext ctx;
  return parse_rfunc(text, ctx);
}
MPoly parse_poly(const std::string& text, ParseContext& ctx);
inline MPoly parse_poly(const std::string& text) {
  ParseContext ctx;
  return parse_poly(text, ctx);
}
// Items of `form(e1, ..., en)`; a bare expression yields one item.
std::vector<RFunc> parse_form_items(const std::string& text, ParseContext& ctx);

}  // namespace hyperint
