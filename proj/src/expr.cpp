#include "finsler/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace finsler {

namespace {

NodePtr make_leaf(NodeKind kind, double literal = 0.0, std::string name = {})
{
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->literal = literal;
    n->name = std::move(name);
    n->depends_on_s = kind == NodeKind::VarS;
    return n;
}

NodePtr make_unary(NodeKind kind, NodePtr arg, Func f = Func::Sqrt)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->func = f;
    n->depends_on_s = arg->depends_on_s;
    n->lhs = std::move(arg);
    return n;
}

NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->depends_on_s = a->depends_on_s || b->depends_on_s;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

class Parser {
public:
    Parser(std::string_view src, const std::set<std::string, std::less<>>& params) : src_(src), params_(params) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        skip_space();
        if (pos_ != src_.size()) throw SyntaxError(pos_, "end of input");
        return e;
    }

private:
    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    // Accepts ASCII '-' and U+2212 MINUS SIGN.
    bool accept_minus()
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (src_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = make_binary(NodeKind::Add, lhs, term());
            } else if (accept_minus()) {
                lhs = make_binary(NodeKind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = make_binary(NodeKind::Mul, lhs, factor());
            } else if (accept('/')) {
                lhs = make_binary(NodeKind::Div, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor()
    {
        NodePtr base = unary();
        if (accept('^')) return make_binary(NodeKind::Pow, base, factor());
        return base;
    }

    NodePtr unary()
    {
        if (accept_minus()) return make_unary(NodeKind::Negate, atom());
        return atom();
    }

    NodePtr atom()
    {
        skip_space();
        if (pos_ >= src_.size()) throw SyntaxError(pos_, "number, identifier or '('");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) throw SyntaxError(pos_, "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw SyntaxError(pos_, "number, identifier or '('");
    }

    NodePtr number()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
        }
        double v = 0.0;
        const auto text = src_.substr(start, pos_ - start);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) throw SyntaxError(start, "decimal literal");
        return make_leaf(NodeKind::Literal, v);
    }

    NodePtr identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
        const std::string name(src_.substr(start, pos_ - start));
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == '(') {
            static const std::map<std::string, Func, std::less<>> funcs = {
                {"sqrt", Func::Sqrt}, {"exp", Func::Exp}, {"ln", Func::Ln}, {"sin", Func::Sin}, {"cos", Func::Cos}};
            auto it = funcs.find(name);
            if (it == funcs.end()) throw UnknownIdentifier(name);
            ++pos_;
            NodePtr arg = expr();
            if (!accept(')')) throw SyntaxError(pos_, "')'");
            return make_unary(NodeKind::Call, std::move(arg), it->second);
        }
        if (name == "r") return make_leaf(NodeKind::VarR);
        if (name == "s") return make_leaf(NodeKind::VarS);
        if (params_.count(name) == 0) throw UnknownIdentifier(name);
        return make_leaf(NodeKind::Param, 0.0, name);
    }

    std::string_view src_;
    const std::set<std::string, std::less<>>& params_;
    std::size_t pos_ = 0;
};

void collect_params(const ExprNode& n, std::set<std::string>& out)
{
    if (n.kind == NodeKind::Param) out.insert(n.name);
    if (n.lhs) collect_params(*n.lhs, out);
    if (n.rhs) collect_params(*n.rhs, out);
}

}  // namespace

const char* func_name(Func f)
{
    switch (f) {
    case Func::Sqrt: return "sqrt";
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    }
    return "?";
}

std::string to_string(const ExprNode& n)
{
    auto bin = [&](const char* op) { return "(" + to_string(*n.lhs) + op + to_string(*n.rhs) + ")"; };
    switch (n.kind) {
    case NodeKind::Literal: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n.literal);
        return buf;
    }
    case NodeKind::VarR: return "r";
    case NodeKind::VarS: return "s";
    case NodeKind::Param: return n.name;
    case NodeKind::Negate: return "(-" + to_string(*n.lhs) + ")";
    case NodeKind::Add: return bin("+");
    case NodeKind::Sub: return bin("-");
    case NodeKind::Mul: return bin("*");
    case NodeKind::Div: return bin("/");
    case NodeKind::Pow: return bin("^");
    case NodeKind::Call: return std::string(func_name(n.func)) + "(" + to_string(*n.lhs) + ")";
    }
    return "?";
}

bool structurally_equal(const ExprNode& a, const ExprNode& b)
{
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case NodeKind::Literal: return a.literal == b.literal;
    case NodeKind::Param: return a.name == b.name;
    case NodeKind::Call:
        return a.func == b.func && structurally_equal(*a.lhs, *b.lhs);
    default: break;
    }
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

std::string MetricExpr::to_string() const { return root_ ? finsler::to_string(*root_) : std::string{}; }

std::set<std::string> MetricExpr::parameters() const
{
    std::set<std::string> out;
    if (root_) collect_params(*root_, out);
    return out;
}

bool operator==(const MetricExpr& a, const MetricExpr& b)
{
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    return structurally_equal(a.root(), b.root());
}

MetricExpr parse_metric_expr(std::string_view source, const std::set<std::string, std::less<>>& params)
{
    return MetricExpr(Parser(source, params).parse());
}

}  // namespace finsler
