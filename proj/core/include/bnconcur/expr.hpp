#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bnconcur/config.hpp"

namespace bnconcur {

/// Immutable Boolean expression tree. Variables are 0-based component
/// indices; names live in the enclosing network, not in the tree.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Const, Var, Not, And, Or };
    Kind kind;
    bool value = false;            // Const
    int var = -1;                  // Var
    std::vector<ExprPtr> kids;     // Not (1), And/Or (>= 1)
};

ExprPtr make_const(bool v);
ExprPtr make_var(int index);
ExprPtr make_not(ExprPtr e);
/// Empty child list collapses to the neutral constant.
ExprPtr make_and(std::vector<ExprPtr> kids);
ExprPtr make_or(std::vector<ExprPtr> kids);

/// Evaluates under x; throws InputError if a variable index >= x.n.
bool eval(const Expr& e, const Config& x);
bool eval(const ExprPtr& e, const Config& x);

/// Bitmask of variable indices occurring syntactically.
std::uint32_t support(const Expr& e);

/// Replaces every occurrence of variable i by map[i] (nullptr = keep).
ExprPtr substitute(const ExprPtr& e, const std::vector<ExprPtr>& map);

/// Canonical rendering with minimal parentheses: ! binds tighter than &,
/// which binds tighter than |.
std::string to_string(const Expr& e, const std::vector<std::string>& names);

/// Parses the expression grammar
///   or := and ('|' and)* ; and := unary ('&' unary)* ;
///   unary := '!' unary | '0' | '1' | IDENT | '(' or ')'
/// against a fixed symbol table. Unknown identifiers and syntax errors
/// raise ParseError with 1-based line:col.
ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& names);

} // namespace bnconcur
