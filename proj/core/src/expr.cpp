#include "lc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace lc {
namespace detail {

enum class Op : int { number, var_u, var_v, param, neg, add, sub, mul, div, pow, call };
enum class Fn : int { sin, cos, exp, sqrt };

struct ExprNode {
    Op op;
    double number = 0.0;
    int exponent = 0;
    Fn fn = Fn::sin;
    std::string name;
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double x) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::number;
    n->number = x;
    return n;
}

NodePtr make_leaf(Op op, std::string name = {}) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->name = std::move(name);
    return n;
}

NodePtr make_unary(Op op, NodePtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(arg);
    return n;
}

NodePtr make_binary(Op op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

NodePtr make_pow(NodePtr base, int k) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::pow;
    n->lhs = std::move(base);
    n->exponent = k;
    return n;
}

NodePtr make_call(Fn fn, NodePtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->op = Op::call;
    n->fn = fn;
    n->lhs = std::move(arg);
    return n;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (consume('+'))
                lhs = make_binary(Op::add, lhs, parse_term());
            else if (consume('-'))
                lhs = make_binary(Op::sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (consume('*'))
                lhs = make_binary(Op::mul, lhs, parse_unary());
            else if (consume('/'))
                lhs = make_binary(Op::div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) return make_unary(Op::neg, parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (!consume('^')) return base;
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start)
            throw SyntaxError("expected nonnegative integer exponent", start);
        int k = 0;
        std::from_chars(text_.data() + start, text_.data() + pos_, k);
        return make_pow(base, k);
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError("expected number, identifier or '('", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!consume(')'))
                throw SyntaxError("expected ')'", pos_);
            return inner;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        double value = 0.0;
        auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + text_.size(), value);
        if (ec != std::errc{})
            throw SyntaxError("malformed number", start);
        pos_ = static_cast<std::size_t>(end - text_.data());
        return make_number(value);
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (peek_is('(')) {
            ++pos_;
            NodePtr arg = parse_expr();
            if (!consume(')'))
                throw SyntaxError("expected ')'", pos_);
            if (name == "sin") return make_call(Fn::sin, arg);
            if (name == "cos") return make_call(Fn::cos, arg);
            if (name == "exp") return make_call(Fn::exp, arg);
            if (name == "sqrt") return make_call(Fn::sqrt, arg);
            throw UnknownFunction("unknown function '" + name + "'", start);
        }
        if (name == "u") return make_leaf(Op::var_u);
        if (name == "v") return make_leaf(Op::var_v);
        return make_leaf(Op::param, name);
    }
};

int precedence(Op op) {
    switch (op) {
    case Op::add:
    case Op::sub: return 1;
    case Op::mul:
    case Op::div: return 2;
    case Op::neg: return 3;
    case Op::pow: return 4;
    default: return 5;
    }
}

void print_node(std::ostringstream& out, const ExprNode* n, int parent_prec) {
    const int prec = precedence(n->op);
    const bool need_parens = prec < parent_prec;
    if (need_parens) out << '(';
    switch (n->op) {
    case Op::number: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", n->number);
        out << buf;
        break;
    }
    case Op::var_u: out << 'u'; break;
    case Op::var_v: out << 'v'; break;
    case Op::param: out << n->name; break;
    case Op::neg:
        out << '-';
        print_node(out, n->lhs.get(), prec + 1);
        break;
    case Op::add:
        print_node(out, n->lhs.get(), prec);
        out << " + ";
        print_node(out, n->rhs.get(), prec + 1);
        break;
    case Op::sub:
        print_node(out, n->lhs.get(), prec);
        out << " - ";
        print_node(out, n->rhs.get(), prec + 1);
        break;
    case Op::mul:
        print_node(out, n->lhs.get(), prec);
        out << "*";
        print_node(out, n->rhs.get(), prec + 1);
        break;
    case Op::div:
        print_node(out, n->lhs.get(), prec);
        out << "/";
        print_node(out, n->rhs.get(), prec + 1);
        break;
    case Op::pow:
        print_node(out, n->lhs.get(), prec + 1);
        out << '^' << n->exponent;
        break;
    case Op::call:
        switch (n->fn) {
        case Fn::sin: out << "sin"; break;
        case Fn::cos: out << "cos"; break;
        case Fn::exp: out << "exp"; break;
        case Fn::sqrt: out << "sqrt"; break;
        }
        out << '(';
        print_node(out, n->lhs.get(), 0);
        out << ')';
        break;
    }
    if (need_parens) out << ')';
}

double eval_node(const ExprNode* n, double u, double v, const ParamMap& params) {
    switch (n->op) {
    case Op::number: return n->number;
    case Op::var_u: return u;
    case Op::var_v: return v;
    case Op::param: {
        auto it = params.find(n->name);
        if (it == params.end())
            throw UnboundParameter("unbound parameter '" + n->name + "'");
        return it->second;
    }
    case Op::neg: return -eval_node(n->lhs.get(), u, v, params);
    case Op::add: return eval_node(n->lhs.get(), u, v, params) + eval_node(n->rhs.get(), u, v, params);
    case Op::sub: return eval_node(n->lhs.get(), u, v, params) - eval_node(n->rhs.get(), u, v, params);
    case Op::mul: return eval_node(n->lhs.get(), u, v, params) * eval_node(n->rhs.get(), u, v, params);
    case Op::div: return eval_node(n->lhs.get(), u, v, params) / eval_node(n->rhs.get(), u, v, params);
    case Op::pow: {
        double base = eval_node(n->lhs.get(), u, v, params);
        double r = 1.0;
        for (int k = 0; k < n->exponent; ++k) r *= base;
        return r;
    }
    case Op::call: {
        const double a = eval_node(n->lhs.get(), u, v, params);
        switch (n->fn) {
        case Fn::sin: return std::sin(a);
        case Fn::cos: return std::cos(a);
        case Fn::exp: return std::exp(a);
        case Fn::sqrt: return std::sqrt(a);
        }
        return 0.0;
    }
    }
    return 0.0;
}

Jet eval_jet_node(const ExprNode* n, Vec2 center, int degree, const ParamMap& params) {
    switch (n->op) {
    case Op::number: return Jet::constant(degree, center, n->number);
    case Op::var_u: return Jet::variable_u(degree, center);
    case Op::var_v: return Jet::variable_v(degree, center);
    case Op::param: {
        auto it = params.find(n->name);
        if (it == params.end())
            throw UnboundParameter("unbound parameter '" + n->name + "'");
        return Jet::constant(degree, center, it->second);
    }
    case Op::neg: return -eval_jet_node(n->lhs.get(), center, degree, params);
    case Op::add:
        return eval_jet_node(n->lhs.get(), center, degree, params) +
               eval_jet_node(n->rhs.get(), center, degree, params);
    case Op::sub:
        return eval_jet_node(n->lhs.get(), center, degree, params) -
               eval_jet_node(n->rhs.get(), center, degree, params);
    case Op::mul:
        return eval_jet_node(n->lhs.get(), center, degree, params) *
               eval_jet_node(n->rhs.get(), center, degree, params);
    case Op::div:
        return eval_jet_node(n->lhs.get(), center, degree, params) *
               recip(eval_jet_node(n->rhs.get(), center, degree, params));
    case Op::pow: {
        Jet base = eval_jet_node(n->lhs.get(), center, degree, params);
        Jet r = Jet::constant(degree, center, 1.0);
        for (int k = 0; k < n->exponent; ++k) r *= base;
        return r;
    }
    case Op::call: {
        Jet a = eval_jet_node(n->lhs.get(), center, degree, params);
        switch (n->fn) {
        case Fn::sin: return sin(a);
        case Fn::cos: return cos(a);
        case Fn::exp: return exp(a);
        case Fn::sqrt: return sqrt(a);
        }
        return a;
    }
    }
    return Jet::constant(degree, center, 0.0);
}

NodePtr substitute_node(const ExprNode* n, const NodePtr& for_u, const NodePtr& for_v) {
    switch (n->op) {
    case Op::var_u: return for_u;
    case Op::var_v: return for_v;
    case Op::number:
    case Op::param: {
        auto copy = std::make_shared<ExprNode>(*n);
        return copy;
    }
    default: {
        auto copy = std::make_shared<ExprNode>(*n);
        if (n->lhs) copy->lhs = substitute_node(n->lhs.get(), for_u, for_v);
        if (n->rhs) copy->rhs = substitute_node(n->rhs.get(), for_u, for_v);
        return copy;
    }
    }
}

bool is_polynomial_node(const ExprNode* n) {
    switch (n->op) {
    case Op::number:
    case Op::var_u:
    case Op::var_v:
    case Op::param: return true;
    case Op::neg: return is_polynomial_node(n->lhs.get());
    case Op::add:
    case Op::sub:
    case Op::mul: return is_polynomial_node(n->lhs.get()) && is_polynomial_node(n->rhs.get());
    case Op::pow: return is_polynomial_node(n->lhs.get());
    case Op::div:
    case Op::call: return false;
    }
    return false;
}

} // namespace
} // namespace detail

Expr parse(std::string_view text) { return Expr(detail::Parser(text).run()); }

std::string to_string(const Expr& e) {
    if (e.empty()) return {};
    std::ostringstream out;
    detail::print_node(out, e.node(), 0);
    return out.str();
}

double eval(const Expr& e, double u, double v, const ParamMap& params) {
    return detail::eval_node(e.node(), u, v, params);
}

Jet eval_jet(const Expr& e, Vec2 center, int degree, const ParamMap& params) {
    if (degree < 2 || degree > Jet::max_degree)
        throw StructuralError("eval_jet: degree must be in [2, 6]");
    return detail::eval_jet_node(e.node(), center, degree, params);
}

Expr substitute(const Expr& e, const Expr& for_u, const Expr& for_v) {
    return Expr(detail::substitute_node(e.node(), for_u.share(), for_v.share()));
}

bool is_polynomial(const Expr& e) { return !e.empty() && detail::is_polynomial_node(e.node()); }

} // namespace lc
