#pragma once

#include <set>
#include <string>

#include "cgknot/casson_gordon.hpp"
#include "cgknot/knot.hpp"
#include "cgknot/laurent.hpp"

namespace cgknot {

// Thrown for malformed input; carries the source text and a 1-based column.
class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& msg, std::size_t column, std::string source)
        : std::invalid_argument(msg), column_(column), source_(std::move(source))
    {
    }
    std::size_t column() const { return column_; }
    const std::string& source() const { return source_; }

  private:
    std::size_t column_;
    std::string source_;
};

// Grammar (docs/grammar.ebnf): signed sums of "U" and "T(p,q;...)" terms with
// optional positive integer coefficients; the bare literal "0" is the empty sum.
KnotExpr parse_expression(const std::string& src);

// A single knot: an expression with exactly one term and coefficient 1.
CableWord parse_word(const std::string& src);

// "K=<word>; q=<odd>,<even>[; n=<int>]", members separated by "|".
FamilySpec parse_family(const std::string& src);

// "c/m" reduced mod 1, or an integer for a whole turn.
UnitAngle parse_angle(const std::string& src);

// Comma-separated positive integers.
std::set<long> parse_orders(const std::string& src);

} // namespace cgknot
