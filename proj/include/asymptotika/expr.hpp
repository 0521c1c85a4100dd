#pragma once

// Small expression language over one free variable t:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | 't' | 'pi' | 'e' | 'i' | func '(' expr (',' expr)? ')' | '(' expr ')'
// with func in {exp, log, sqrt, sin, cos, pow}.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>
#include <utility>

#include "error.hpp"
#include "jet.hpp"
#include "types.hpp"

namespace asymptotika {

class Expr {
public:
    enum class Op { constant, var, add, sub, mul, div, neg, exp, log, sqrt, sin, cos, pow };

    /// Parse `text`; throws domain_error with the offending position on bad input.
    static Expr parse(const std::string& text) {
        Parser p{text, 0};
        Expr e{p.expr(), text};
        p.skip();
        if (p.pos != text.size()) p.fail("unexpected trailing input");
        return e;
    }

    const std::string& text() const { return text_; }
    bool depends_on_t() const { return node_->has_var; }

    cplx operator()(cplx t) const { return eval<cplx>(*node_, t); }
    Jet operator()(const Jet& t) const { return eval<Jet>(*node_, t); }

    JetProgram program() const {
        auto n = node_;
        return [n](const Jet& t) { return eval<Jet>(*n, t); };
    }

private:
    struct Node {
        Op op = Op::constant;
        cplx value{};
        std::shared_ptr<const Node> a, b;
        bool has_var = false;
    };
    using Ptr = std::shared_ptr<const Node>;

    Expr(Ptr n, std::string text) : node_(std::move(n)), text_(std::move(text)) {}

    static Ptr make(Op op, Ptr a = nullptr, Ptr b = nullptr, cplx v = {}) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->value = v;
        n->has_var = op == Op::var || (a && a->has_var) || (b && b->has_var);
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    static Jet lift(cplx c, const Jet& like) { return Jet::constant(c, like.anchor(), like.order()); }
    static cplx lift(cplx c, cplx) { return c; }

    template <class T>
    static T eval(const Node& n, const T& t) {
        using std::cos;
        using std::exp;
        using std::log;
        using std::sin;
        using std::sqrt;
        switch (n.op) {
            case Op::constant: return lift(n.value, t);
            case Op::var: return t;
            case Op::add: return eval(*n.a, t) + eval(*n.b, t);
            case Op::sub: return eval(*n.a, t) - eval(*n.b, t);
            case Op::mul: return eval(*n.a, t) * eval(*n.b, t);
            case Op::div: {
                if (!n.b->has_var) return eval(*n.a, t) / eval<cplx>(*n.b, cplx{});
                return eval(*n.a, t) / eval(*n.b, t);
            }
            case Op::neg: return -eval(*n.a, t);
            case Op::exp: return exp(eval(*n.a, t));
            case Op::log: return log(eval(*n.a, t));
            case Op::sqrt: return sqrt(eval(*n.a, t));
            case Op::sin: return sin(eval(*n.a, t));
            case Op::cos: return cos(eval(*n.a, t));
            case Op::pow: {
                const T base = eval(*n.a, t);
                if (n.b->has_var) return exp(eval(*n.b, t) * log(base));
                const cplx p = eval<cplx>(*n.b, cplx{});
                if (p.imag() == 0.0 && p.real() == std::round(p.real()) && std::abs(p.real()) <= 64.0) {
                    const int k = static_cast<int>(p.real());
                    if constexpr (std::is_same_v<T, Jet>) {
                        return k >= 0 ? pow(base, k) : 1.0 / pow(base, -k);
                    } else {
                        return k >= 0 ? ipow(base, k) : 1.0 / ipow(base, -k);
                    }
                }
                if constexpr (std::is_same_v<T, Jet>) {
                    return pow(base, p);
                } else {
                    return std::pow(base, p);
                }
            }
        }
        throw domain_error("Expr: corrupt node");
    }

    static cplx ipow(cplx b, int k) {
        cplx r = 1.0;
        while (k > 0) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    struct Parser {
        const std::string& s;
        std::size_t pos;

        [[noreturn]] void fail(const char* what) const {
            throw domain_error("expression '" + s + "': " + what + " at position " + std::to_string(pos));
        }
        void skip() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        void expect(char c) {
            if (!eat(c)) fail((std::string("expected '") + c + "'").c_str());
        }

        Ptr expr() {
            Ptr l = term();
            for (;;) {
                if (eat('+')) l = make(Op::add, l, term());
                else if (eat('-')) l = make(Op::sub, l, term());
                else return l;
            }
        }
        Ptr term() {
            Ptr l = unary();
            for (;;) {
                if (eat('*')) l = make(Op::mul, l, unary());
                else if (eat('/')) l = make(Op::div, l, unary());
                else return l;
            }
        }
        Ptr unary() {
            if (eat('-')) return make(Op::neg, unary());
            if (eat('+')) return unary();
            return power();
        }
        Ptr power() {
            Ptr b = primary();
            if (eat('^')) return make(Op::pow, b, unary());
            return b;
        }
        Ptr primary() {
            skip();
            if (pos >= s.size()) fail("unexpected end of input");
            const char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                const char* begin = s.c_str() + pos;
                char* end = nullptr;
                const double v = std::strtod(begin, &end);
                if (end == begin) fail("malformed number");
                pos += static_cast<std::size_t>(end - begin);
                return make(Op::constant, nullptr, nullptr, v);
            }
            if (eat('(')) {
                Ptr e = expr();
                expect(')');
                return e;
            }
            if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
            const std::size_t start = pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
            const std::string id = s.substr(start, pos - start);
            if (id == "t") return make(Op::var);
            if (id == "pi") return make(Op::constant, nullptr, nullptr, pi);
            if (id == "e") return make(Op::constant, nullptr, nullptr, std::exp(1.0));
            if (id == "i") return make(Op::constant, nullptr, nullptr, cplx(0.0, 1.0));
            Op op;
            if (id == "exp") op = Op::exp;
            else if (id == "log") op = Op::log;
            else if (id == "sqrt") op = Op::sqrt;
            else if (id == "sin") op = Op::sin;
            else if (id == "cos") op = Op::cos;
            else if (id == "pow") op = Op::pow;
            else {
                pos = start;
                fail(("unknown identifier '" + id + "'").c_str());
            }
            expect('(');
            Ptr a = expr();
            Ptr b;
            if (op == Op::pow) {
                expect(',');
                b = expr();
            }
            expect(')');
            return make(op, a, b);
        }
    };

    Ptr node_;
    std::string text_;
};

/// Parse an expression straight to a jet program.
inline JetProgram parse_program(const std::string& text) { return Expr::parse(text).program(); }

}  // namespace asymptotika
