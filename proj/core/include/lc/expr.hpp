#pragma once

/**
 * @file expr.hpp
 * @brief Arithmetic expressions in u, v and named parameters.
 *
 * Grammar (standard precedence, ^ binds tighter than unary minus,
 * binary operators associate left):
 *
 *   expr   := term  (('+' | '-') term)*
 *   term   := unary (('*' | '/') unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' integer)?
 *   atom   := number | 'u' | 'v' | ident | ident '(' expr ')' | '(' expr ')'
 *
 * The only functions are sin, cos, exp, sqrt. Exponents are nonnegative
 * integer literals. ASTs are immutable and freely shareable.
 */

#include "lc/errors.hpp"
#include "lc/geometry.hpp"
#include "lc/jet.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace lc {

using ParamMap = std::map<std::string, double, std::less<>>;

namespace detail {
struct ExprNode;
}

class Expr {
public:
    Expr() = default;
    explicit Expr(std::shared_ptr<const detail::ExprNode> root) : root_(std::move(root)) {}

    bool empty() const { return root_ == nullptr; }
    const detail::ExprNode* node() const { return root_.get(); }
    std::shared_ptr<const detail::ExprNode> share() const { return root_; }

private:
    std::shared_ptr<const detail::ExprNode> root_;
};

Expr parse(std::string_view text);

std::string to_string(const Expr& e);

/// plain pointwise evaluation
double eval(const Expr& e, double u, double v, const ParamMap& params);

/// jet of the expression at the given center and degree (2..6)
Jet eval_jet(const Expr& e, Vec2 center, int degree, const ParamMap& params);

/// replace the variables u and v by sub-expressions
Expr substitute(const Expr& e, const Expr& for_u, const Expr& for_v);

/// true when the expression uses only +, -, *, ^ over literals/variables/params
bool is_polynomial(const Expr& e);

} // namespace lc
