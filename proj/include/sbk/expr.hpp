#pragma once

#include "sbk/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbk {

/// Raised when evaluating an expression hits a vanishing denominator.
/// Samplers catch it and treat the sample point as excluded.
struct ExcludedPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ParamMap = std::map<std::string, Rational>;

/// Minimal arithmetic expressions over named rational parameters:
/// integers, identifiers, + - * / ^ and parentheses. Used for catalog
/// entries and equivalence-witness formulas so they can be audited and
/// serialized as plain strings.
class Expr {
public:
    static Expr parse(std::string_view text);

    Rational eval(const ParamMap& params) const {
        return node_->eval(params);
    }

    const std::string& text() const { return text_; }

private:
    struct Node {
        virtual ~Node() = default;
        virtual Rational eval(const ParamMap&) const = 0;
    };
    using NodePtr = std::shared_ptr<const Node>;

    struct Const : Node {
        Rational value;
        explicit Const(Rational v) : value(std::move(v)) {}
        Rational eval(const ParamMap&) const override { return value; }
    };
    struct Param : Node {
        std::string name;
        explicit Param(std::string n) : name(std::move(n)) {}
        Rational eval(const ParamMap& p) const override {
            auto it = p.find(name);
            if (it == p.end())
                throw std::invalid_argument("unbound parameter '" + name + "'");
            return it->second;
        }
    };
    struct Binary : Node {
        char op;
        NodePtr lhs, rhs;
        Binary(char o, NodePtr l, NodePtr r) : op(o), lhs(std::move(l)), rhs(std::move(r)) {}
        Rational eval(const ParamMap& p) const override {
            Rational a = lhs->eval(p);
            Rational b = rhs->eval(p);
            switch (op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (b == 0) throw ExcludedPoint("division by zero");
                    return a / b;
                default: break;
            }
            throw std::logic_error("bad operator");
        }
    };
    struct Pow : Node {
        NodePtr base;
        long exp;
        Pow(NodePtr b, long e) : base(std::move(b)), exp(e) {}
        Rational eval(const ParamMap& p) const override {
            Rational b = base->eval(p);
            if (exp < 0 && b == 0) throw ExcludedPoint("zero to negative power");
            Rational out(1);
            for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) out *= b;
            return exp < 0 ? Rational(1) / out : out;
        }
    };
    struct Neg : Node {
        NodePtr inner;
        explicit Neg(NodePtr n) : inner(std::move(n)) {}
        Rational eval(const ParamMap& p) const override { return -inner->eval(p); }
    };

    class Parser {
    public:
        explicit Parser(std::string_view s) : s_(s) {}
        NodePtr run() {
            auto n = expr();
            skip_ws();
            if (pos_ != s_.size())
                throw std::invalid_argument("trailing characters in expression");
            return n;
        }

    private:
        std::string_view s_;
        size_t pos_ = 0;

        void skip_ws() {
            while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
        }
        bool eat(char c) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
            return false;
        }
        char peek() {
            skip_ws();
            return pos_ < s_.size() ? s_[pos_] : '\0';
        }

        NodePtr expr() {
            auto lhs = term();
            for (;;) {
                if (eat('+')) lhs = std::make_shared<Binary>('+', lhs, term());
                else if (eat('-')) lhs = std::make_shared<Binary>('-', lhs, term());
                else return lhs;
            }
        }
        NodePtr term() {
            auto lhs = factor();
            for (;;) {
                if (eat('*')) lhs = std::make_shared<Binary>('*', lhs, factor());
                else if (eat('/')) lhs = std::make_shared<Binary>('/', lhs, factor());
                else return lhs;
            }
        }
        NodePtr factor() {
            if (eat('-')) return std::make_shared<Neg>(factor());
            if (eat('+')) return factor();
            auto base = primary();
            if (eat('^')) {
                bool neg = eat('-');
                long e = integer();
                return std::make_shared<Pow>(base, neg ? -e : e);
            }
            return base;
        }
        NodePtr primary() {
            skip_ws();
            if (eat('(')) {
                auto n = expr();
                if (!eat(')')) throw std::invalid_argument("missing ')'");
                return n;
            }
            char c = peek();
            if (c >= '0' && c <= '9')
                return std::make_shared<Const>(Rational(Integer(std::to_string(integer()))));
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                        s_[pos_] == '_' || s_[pos_] == '\'')) {
                    name += s_[pos_++];
                }
                return std::make_shared<Param>(name);
            }
            throw std::invalid_argument("unexpected character in expression");
        }
        long integer() {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9')
                throw std::invalid_argument("expected integer");
            long v = 0;
            while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9')
                v = v * 10 + (s_[pos_++] - '0');
            return v;
        }
    };

    NodePtr node_;
    std::string text_;
};

inline Expr Expr::parse(std::string_view text) {
    Expr e;
    e.node_ = Parser(text).run();
    e.text_ = std::string(text);
    return e;
}

inline Rational eval_expr(std::string_view text, const ParamMap& params) {
    return Expr::parse(text).eval(params);
}

}  // namespace sbk
