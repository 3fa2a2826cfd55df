#pragma once

/// \file
/// Parsed phi(r, s) expressions, evaluable over doubles or jets.
///
/// Grammar (no implicit multiplication, `^` right-associative):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := unary ('^' factor)?
///     unary  := '-'? atom
///     atom   := number | ident | ident '(' expr ')' | '(' expr ')'
///
/// Note that unary minus binds tighter than `^`, so `-s^2` is `(-s)^2`.

#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "finsler/errors.hpp"
#include "finsler/jet.hpp"

namespace finsler {

using ParamMap = std::map<std::string, double, std::less<>>;

enum class NodeKind { Literal, VarR, VarS, Param, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Sqrt, Exp, Ln, Sin, Cos };

struct ExprNode {
    NodeKind kind;
    double literal = 0.0;
    std::string name;  // parameter name
    Func func = Func::Sqrt;
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
    bool depends_on_s = false;
};

using NodePtr = std::shared_ptr<const ExprNode>;

class MetricExpr {
public:
    MetricExpr() = default;
    explicit MetricExpr(NodePtr root) : root_(std::move(root)) {}

    const ExprNode& root() const { return *root_; }
    bool empty() const noexcept { return !root_; }

    /// Fully parenthesized text that parses back to the same tree.
    std::string to_string() const;

    /// Names of every parameter referenced by the tree.
    std::set<std::string> parameters() const;

    friend bool operator==(const MetricExpr& a, const MetricExpr& b);

private:
    NodePtr root_;
};

MetricExpr parse_metric_expr(std::string_view source, const std::set<std::string, std::less<>>& params);

std::string to_string(const ExprNode& node);
bool structurally_equal(const ExprNode& a, const ExprNode& b);
const char* func_name(Func f);

namespace detail {

template <typename S>
S eval_node(const ExprNode& node, double r, const S& s, const ParamMap& params);

inline double param_value(const ExprNode& node, const ParamMap& params)
{
    auto it = params.find(node.name);
    if (it == params.end()) throw MissingParam(node.name);
    return it->second;
}

[[noreturn]] inline void domain_fail(const char* what, const ExprNode& node)
{
    throw DomainError(std::string(what) + " in '" + to_string(node) + "'");
}

template <typename S>
S eval_pow(const ExprNode& node, double r, const S& s, const ParamMap& params)
{
    using std::exp;
    using std::log;
    using std::pow;
    const S base = eval_node(*node.lhs, r, s, params);
    const double b0 = primal(base);
    if (!node.rhs->depends_on_s) {
        const double p = eval_node<double>(*node.rhs, r, primal(s), params);
        const bool integral = p == std::floor(p);
        if (b0 < 0.0 && !integral) domain_fail("negative base with non-integer exponent", node);
        if (b0 == 0.0 && p < 0.0) domain_fail("zero base with negative exponent", node);
        if constexpr (is_jet_v<S>) {
            if (b0 == 0.0 && !(integral && p >= 0.0)) domain_fail("derivative of power at zero base", node);
        }
        return pow(base, p);
    }
    if (b0 <= 0.0) domain_fail("non-positive base with variable exponent", node);
    return exp(eval_node(*node.rhs, r, s, params) * log(base));
}

template <typename S>
S eval_node(const ExprNode& node, double r, const S& s, const ParamMap& params)
{
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    using std::sqrt;
    switch (node.kind) {
    case NodeKind::Literal:
        return S(node.literal);
    case NodeKind::VarR:
        return S(r);
    case NodeKind::VarS:
        return s;
    case NodeKind::Param:
        return S(param_value(node, params));
    case NodeKind::Negate:
        return -eval_node(*node.lhs, r, s, params);
    case NodeKind::Add:
        return eval_node(*node.lhs, r, s, params) + eval_node(*node.rhs, r, s, params);
    case NodeKind::Sub:
        return eval_node(*node.lhs, r, s, params) - eval_node(*node.rhs, r, s, params);
    case NodeKind::Mul:
        return eval_node(*node.lhs, r, s, params) * eval_node(*node.rhs, r, s, params);
    case NodeKind::Div: {
        const S den = eval_node(*node.rhs, r, s, params);
        if (primal(den) == 0.0) domain_fail("division by zero", node);
        return eval_node(*node.lhs, r, s, params) / den;
    }
    case NodeKind::Pow:
        return eval_pow(node, r, s, params);
    case NodeKind::Call: {
        const S arg = eval_node(*node.lhs, r, s, params);
        switch (node.func) {
        case Func::Sqrt:
            if (primal(arg) <= 0.0) domain_fail("sqrt of non-positive value", node);
            return sqrt(arg);
        case Func::Exp:
            return exp(arg);
        case Func::Ln:
            if (primal(arg) <= 0.0) domain_fail("ln of non-positive value", node);
            return log(arg);
        case Func::Sin:
            return sin(arg);
        case Func::Cos:
            return cos(arg);
        }
    }
    }
    throw DomainError("corrupt expression node");
}

}  // namespace detail

/// Value of the expression at (r, s). With a jet in the s slot the result
/// carries the s-derivatives of phi. Throws DomainError naming the failing
/// subexpression.
template <typename S>
S eval_expr(const MetricExpr& expr, double r, const S& s, const ParamMap& params)
{
    S v = detail::eval_node(expr.root(), r, s, params);
    if (!std::isfinite(primal(v))) throw DomainError("non-finite value of '" + expr.to_string() + "'");
    return v;
}

}  // namespace finsler
