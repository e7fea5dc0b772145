#ifndef DQW_EXPR_HPP
#define DQW_EXPR_HPP

#include "dqw/ncpoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace dqw {

/// Parse error with a 0-based character position into the input text.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// A parsed expression is either a plain polynomial or a potential (any
/// expression containing cyc(...) at the top additive level).
struct ParsedExpr {
    std::optional<NcPoly> poly;
    std::optional<Potential> potential;
};

/// Recursive-descent parser for the shared expression grammar:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ['^' posint]
///   atom    := rational | identifier | '(' expr ')' | 'cyc' '(' expr ')'
///   rational:= int ['/' posint]
/// Identifiers resolve to generators of the alphabet or to named rational
/// parameters; `hbar` is reserved and rejected here.
class ExprParser {
  public:
    ExprParser(AlphabetPtr alphabet, std::map<std::string, Rational> params = {})
        : alphabet_(std::move(alphabet)), params_(std::move(params)) {}

    /// Parse a polynomial-valued expression; cyc(...) is rejected.
    NcPoly parse_poly(const std::string& text) const;

    /// Parse a potential-valued expression: a rational combination of
    /// cyc(...) atoms (products of potentials are rejected).
    Potential parse_potential(const std::string& text) const;

    /// Parse either; used by the workbench reader.
    ParsedExpr parse(const std::string& text) const;

  private:
    AlphabetPtr alphabet_;
    std::map<std::string, Rational> params_;
};

} // namespace dqw

#endif
