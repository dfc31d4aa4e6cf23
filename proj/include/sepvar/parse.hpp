#pragma once

#include "sepvar/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sepvar {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, whitespace ignored:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' integer]
//   atom   := integer ['/' integer] | 'x' | '(' expr ')'
Poly parse_poly(std::string_view text);

}  // namespace sepvar
