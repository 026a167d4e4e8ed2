#pragma once

#include <memory>
#include <string>
#include <variant>

#include "tlj/scalar.hpp"
#include "tlj/tl.hpp"

namespace tlj {

/// AST for the expression language over TL elements and scalars.
/// Grammar (precedence ^ over * / over + -, parentheses as usual):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := unary ('^' ['-'] digits)?
///   unary   := '-' unary | primary
///   primary := digits | 'e_'digits ['@'digits] | 'id_'digits | 'jw(' digits ')'
///            | 'd' | 'q' | 't' | ('tr'|'atr'|'adj') '(' expr ')'
///            | 'inner(' expr ',' expr ')' | '(' expr ')' ['@'digits]
/// e_i defaults to size i+1 unless ascribed; '@m' on a parenthesized
/// expression asserts the computed size.
struct ExprNode {
    enum class Kind {
        Number, // integer literal (value)
        Delta,  // d
        VarQ,   // q
        VarT,   // t
        Gen,    // e_i, optional size (index, size; size 0 = default i+1)
        Id,     // id_m (size)
        JW,     // jw(m) (size)
        Neg,
        Add,
        Sub,
        Mul,
        Div,
        Pow, // (a, exponent in `value`)
        Tr,
        ATr,
        Adj,
        Inner,
        Ascribe // (a, size): size assertion on a subexpression
    };

    Kind kind;
    long value = 0; ///< Number literal or Pow exponent
    int index = 0;  ///< generator index
    int size = 0;   ///< strand count for Gen/Id/JW/Ascribe
    std::shared_ptr<const ExprNode> a, b;
    std::size_t pos = 0; ///< source offset, for error messages
};

using ExprAST = std::shared_ptr<const ExprNode>;

ExprAST parse(const std::string& input); ///< throws parse_error with position

/// Canonical fully parenthesized rendering; parse(print(ast)) == ast.
std::string print(const ExprAST& ast);

bool ast_equal(const ExprAST& a, const ExprAST& b);

/// Result of evaluating an expression.
using Value = std::variant<Scalar, TPoly, TLElement>;

/// Evaluates exactly; reports type errors (size mismatches and the like)
/// with the source offset of the offending node.
Value evaluate(const ExprAST& ast);

std::string value_str(const Value& v);

} // namespace tlj
