#pragma once

#include "famcode/order.hpp"
#include "famcode/poly.hpp"

#include <stdexcept>
#include <string>

namespace famcode {

/// Syntax error with a 1-based column (and line, when known).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses "2*t1 - t1^2 + z" style input, with an optional trailing
/// "@ c" component tag. Unknown identifiers are appended to the ring when
/// allowNew is set, otherwise rejected.
Poly parsePoly(const std::string& text, Ring& ring, bool allowNew = false, int line = 0);

/// Order specifiers: "lex:x>y>z", "grlex:x>y>z", "extend(grlex:x>y>z; t1,t2)".
/// Listed variables are added to the ring if missing.
MonomialOrder parseOrder(const std::string& spec, Ring& ring);

/// Parses "x^4*z @ 1".
Monomial parseMonomial(const std::string& text, Ring& ring, bool allowNew = false, int line = 0);

/// Scalar rendering with terms in ascending order (initial term first).
std::string render(const Poly& p, const Ring& ring, const MonomialOrder& order);
/// Vector rendering "(p1, p2)" when s > 1, plain scalar rendering otherwise.
std::string renderVector(const Poly& p, const Ring& ring, const MonomialOrder& order, int s);
std::string renderMonomial(const Monomial& m, const Ring& ring);

}  // namespace famcode
