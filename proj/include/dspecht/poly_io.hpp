#pragma once

// Text form of polynomials.
//
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)? | '(' poly ')'
//   var    := 'x' uint            (1-based)
//   coeff  := int ('/' uint)?
//
// A single leading '-' is accepted before the first term. Whitespace is
// ignored between tokens. Printing emits terms in descending graded-lex order,
// suppresses a unit coefficient and folds a negative sign into the operator,
// e.g. "3*x1^2*x2 - x2^3". parse(print(f)) == f for every f.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dspecht/polynomial.hpp"

namespace dspecht::alg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `text` in `nvars` variables; a variable index above `nvars` is a
/// ParseError. With nvars == 0 the ambient count is the largest index seen.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars = 0);

std::string to_string(const Polynomial& f);
/// "x1^2*x3", or "1" for the constant monomial.
std::string to_string(const Monomial& m);

}  // namespace dspecht::alg
