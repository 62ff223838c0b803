#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "qpd/series.hpp"

namespace qpd {

/// Expression language for q-series identities.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := atom ('^' int)?
///   atom   := '(' expr ')' | int | 'q' '^' int | 'f' digits
///           | 'P' '(' int ',' int ')'
///           | 'theta' '(' int ',' int ',' int ',' int ')'
///           | 'subst' '(' expr ',' int ')'
///           | 'prog' '(' expr ',' int ',' int ')'
///           | name
///
/// Named atoms: pd, pd_<k>, g, h, phi, psi, sq_not3, sq_odd, sq_alt, oddmult.
/// 'subst(e, k)' substitutes q -> q^k in e; 'prog(e, A, r)' is the series
/// whose n-th coefficient is the (A n + r)-th coefficient of e.
enum class ExprKind {
    IntLit,  // integer constant
    QPow,    // q^j
    Eta,     // f_k
    Poch,    // P(a, b) = (q^a; q^b)_inf
    Theta,   // theta(x, y, s1, s2) = f(s1 q^x, s2 q^y)
    Named,   // named series atom
    Add,
    Sub,
    Mul,
    Div,
    Pow,    // lhs ^ args[0]
    Subst,  // lhs with q -> q^args[0]
    Prog,   // coefficient progression of lhs with step args[0], offset args[1]
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Integer value;                        // IntLit
    std::string name;                     // Named ("pd_k" stores "pd" + args[0])
    std::array<std::int64_t, 4> args{};   // numeric parameters, kind-specific
    ExprPtr lhs, rhs;                     // children (rhs only for binary ops)
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Parses the expression language; throws ParseError on malformed input.
ExprPtr parse_expr(const std::string& text);

/// Canonical compact rendering (no whitespace, minimal parentheses).
/// print_expr(parse_expr(s)) == s for strings already in canonical form.
std::string print_expr(const ExprPtr& e);

/// Structural equality.
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

/// Evaluates to a truncated series at the given precision. For prog(e, A, r)
/// the child is evaluated at precision A*N + r so the result reaches N.
TruncatedSeries evaluate(const ExprPtr& e, std::int64_t N, OptMod mod = {});
TruncatedSeries evaluate(const std::string& text, std::int64_t N, OptMod mod = {});

}  // namespace qpd
