#include "tlj/parser.hpp"

#include <cctype>
#include <sstream>

#include "tlj/annular.hpp"
#include "tlj/jw.hpp"

namespace tlj {

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }

    bool peek_digit() {
        skip_ws();
        return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
    }

    long digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw parse_error("expected an integer", pos);
        return std::stol(src.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        return src.substr(start, pos - start);
    }

    static ExprAST node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprAST expr() {
        ExprAST lhs = term();
        for (;;) {
            skip_ws();
            std::size_t at = pos;
            if (eat('+')) {
                lhs = node({ExprNode::Kind::Add, 0, 0, 0, lhs, term(), at});
            } else if (eat('-')) {
                lhs = node({ExprNode::Kind::Sub, 0, 0, 0, lhs, term(), at});
            } else {
                return lhs;
            }
        }
    }

    ExprAST term() {
        ExprAST lhs = factor();
        for (;;) {
            skip_ws();
            std::size_t at = pos;
            if (eat('*')) {
                lhs = node({ExprNode::Kind::Mul, 0, 0, 0, lhs, factor(), at});
            } else if (eat('/')) {
                lhs = node({ExprNode::Kind::Div, 0, 0, 0, lhs, factor(), at});
            } else {
                return lhs;
            }
        }
    }

    ExprAST factor() {
        ExprAST base = unary();
        skip_ws();
        std::size_t at = pos;
        if (eat('^')) {
            long sign = eat('-') ? -1 : 1;
            long e = digits();
            return node({ExprNode::Kind::Pow, sign * e, 0, 0, base, nullptr, at});
        }
        return base;
    }

    ExprAST unary() {
        skip_ws();
        std::size_t at = pos;
        if (eat('-')) return node({ExprNode::Kind::Neg, 0, 0, 0, unary(), nullptr, at});
        return primary();
    }

    ExprAST primary() {
        skip_ws();
        std::size_t at = pos;
        if (pos >= src.size()) throw parse_error("unexpected end of input", pos);
        if (std::isdigit(static_cast<unsigned char>(src[pos])))
            return node({ExprNode::Kind::Number, digits(), 0, 0, nullptr, nullptr, at});
        if (eat('(')) {
            ExprAST inner = expr();
            expect(')');
            if (eat('@')) {
                int m = static_cast<int>(digits());
                return node({ExprNode::Kind::Ascribe, 0, 0, m, inner, nullptr, at});
            }
            return inner;
        }
        std::string name = ident();
        if (name.empty()) throw parse_error("unexpected character", pos);
        if (name == "d") return node({ExprNode::Kind::Delta, 0, 0, 0, nullptr, nullptr, at});
        if (name == "q") return node({ExprNode::Kind::VarQ, 0, 0, 0, nullptr, nullptr, at});
        if (name == "t") return node({ExprNode::Kind::VarT, 0, 0, 0, nullptr, nullptr, at});
        if (name == "jw") {
            expect('(');
            int m = static_cast<int>(digits());
            expect(')');
            return node({ExprNode::Kind::JW, 0, 0, m, nullptr, nullptr, at});
        }
        if (name == "tr" || name == "atr" || name == "adj") {
            expect('(');
            ExprAST arg = expr();
            expect(')');
            ExprNode::Kind k = name == "tr" ? ExprNode::Kind::Tr
                               : name == "atr" ? ExprNode::Kind::ATr
                                               : ExprNode::Kind::Adj;
            return node({k, 0, 0, 0, arg, nullptr, at});
        }
        if (name == "inner") {
            expect('(');
            ExprAST x = expr();
            expect(',');
            ExprAST y = expr();
            expect(')');
            return node({ExprNode::Kind::Inner, 0, 0, 0, x, y, at});
        }
        if (name.rfind("e_", 0) == 0) {
            int i = std::stoi(name.substr(2));
            int size = 0;
            if (eat('@')) size = static_cast<int>(digits());
            return node({ExprNode::Kind::Gen, 0, i, size, nullptr, nullptr, at});
        }
        if (name.rfind("id_", 0) == 0) {
            int m = std::stoi(name.substr(3));
            return node({ExprNode::Kind::Id, 0, 0, m, nullptr, nullptr, at});
        }
        throw parse_error("unknown symbol '" + name + "'", at);
    }
};

} // namespace

ExprAST parse(const std::string& input) {
    Parser p(input);
    ExprAST ast = p.expr();
    p.skip_ws();
    if (p.pos != input.size()) throw parse_error("trailing input", p.pos);
    return ast;
}

std::string print(const ExprAST& ast) {
    using K = ExprNode::Kind;
    std::ostringstream out;
    switch (ast->kind) {
        case K::Number: out << ast->value; break;
        case K::Delta: out << "d"; break;
        case K::VarQ: out << "q"; break;
        case K::VarT: out << "t"; break;
        case K::Gen:
            out << "e_" << ast->index;
            if (ast->size) out << "@" << ast->size;
            break;
        case K::Id: out << "id_" << ast->size; break;
        case K::JW: out << "jw(" << ast->size << ")"; break;
        case K::Neg: out << "-" << print(ast->a); break;
        case K::Add: out << "(" << print(ast->a) << " + " << print(ast->b) << ")"; break;
        case K::Sub: out << "(" << print(ast->a) << " - " << print(ast->b) << ")"; break;
        case K::Mul: out << "(" << print(ast->a) << "*" << print(ast->b) << ")"; break;
        case K::Div: out << "(" << print(ast->a) << "/" << print(ast->b) << ")"; break;
        case K::Pow: out << print(ast->a) << "^" << ast->value; break;
        case K::Tr: out << "tr(" << print(ast->a) << ")"; break;
        case K::ATr: out << "atr(" << print(ast->a) << ")"; break;
        case K::Adj: out << "adj(" << print(ast->a) << ")"; break;
        case K::Inner: out << "inner(" << print(ast->a) << ", " << print(ast->b) << ")"; break;
        case K::Ascribe: out << "(" << print(ast->a) << ")@" << ast->size; break;
    }
    return out.str();
}

bool ast_equal(const ExprAST& a, const ExprAST& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->value != b->value || a->index != b->index || a->size != b->size)
        return false;
    return ast_equal(a->a, b->a) && ast_equal(a->b, b->b);
}

namespace {

[[noreturn]] void type_fail(const ExprAST& at, const std::string& msg) {
    throw domain_error(msg + " (at offset " + std::to_string(at->pos) + ")");
}

bool is_tl(const Value& v) { return std::holds_alternative<TLElement>(v); }

// Scalar/TPoly tower: lift a Scalar to TPoly when the other side carries t.
TPoly as_tpoly(const Value& v) {
    if (std::holds_alternative<TPoly>(v)) return std::get<TPoly>(v);
    return TPoly(std::get<Scalar>(v));
}

Value eval_node(const ExprAST& ast);

Value eval_binary(const ExprAST& ast) {
    using K = ExprNode::Kind;
    Value lhs = eval_node(ast->a);
    Value rhs = eval_node(ast->b);
    const K k = ast->kind;
    if (is_tl(lhs) && is_tl(rhs)) {
        TLElement x = std::get<TLElement>(lhs);
        TLElement y = std::get<TLElement>(rhs);
        if (x.size() != y.size())
            type_fail(ast, "size mismatch: TL_" + std::to_string(x.size()) + " vs TL_" +
                               std::to_string(y.size()));
        if (k == K::Add) return x + y;
        if (k == K::Sub) return x - y;
        if (k == K::Mul) return x * y;
        type_fail(ast, "cannot divide TL elements");
    }
    if (is_tl(lhs) || is_tl(rhs)) {
        // scalar combined with a TL element
        if (k == K::Mul) {
            const Value& sv = is_tl(lhs) ? rhs : lhs;
            const TLElement& x = std::get<TLElement>(is_tl(lhs) ? lhs : rhs);
            if (std::holds_alternative<TPoly>(sv)) type_fail(ast, "cannot scale a TL element by t");
            return x * std::get<Scalar>(sv);
        }
        if (k == K::Div && is_tl(lhs)) {
            if (std::holds_alternative<TPoly>(rhs)) type_fail(ast, "cannot divide a TL element by t");
            return std::get<TLElement>(lhs) * std::get<Scalar>(rhs).inverse();
        }
        if (k == K::Add || k == K::Sub) type_fail(ast, "cannot add a scalar to a TL element");
        type_fail(ast, "unsupported operands");
    }
    bool any_t = std::holds_alternative<TPoly>(lhs) || std::holds_alternative<TPoly>(rhs);
    if (any_t) {
        TPoly x = as_tpoly(lhs);
        TPoly y = as_tpoly(rhs);
        if (k == K::Add) return x + y;
        if (k == K::Sub) return x - y;
        if (k == K::Mul) return x * y;
        // division: only by a scalar (degree-0 polynomial)
        if (y.degree() == 0) return x * y.coeff(0).inverse();
        type_fail(ast, "cannot divide by a polynomial in t");
    }
    const Scalar& x = std::get<Scalar>(lhs);
    const Scalar& y = std::get<Scalar>(rhs);
    if (k == K::Add) return x + y;
    if (k == K::Sub) return x - y;
    if (k == K::Mul) return x * y;
    if (y.is_zero()) type_fail(ast, "division by zero");
    return x / y;
}

Value eval_node(const ExprAST& ast) {
    using K = ExprNode::Kind;
    switch (ast->kind) {
        case K::Number: return Scalar(ast->value);
        case K::Delta: return delta_scalar();
        case K::VarQ: return Scalar::q();
        case K::VarT: return TPoly::t();
        case K::Gen: {
            int size = ast->size ? ast->size : ast->index + 1;
            if (ast->index < 1 || ast->index > size - 1)
                type_fail(ast, "generator e_" + std::to_string(ast->index) + " undefined in TL_" +
                                   std::to_string(size));
            return TLElement::generator(size, ast->index);
        }
        case K::Id: return TLElement::identity(ast->size);
        case K::JW: return jones_wenzl(ast->size);
        case K::Neg: {
            Value v = eval_node(ast->a);
            if (is_tl(v)) return -std::get<TLElement>(v);
            if (std::holds_alternative<TPoly>(v)) return -std::get<TPoly>(v);
            return -std::get<Scalar>(v);
        }
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: return eval_binary(ast);
        case K::Pow: {
            Value v = eval_node(ast->a);
            long e = ast->value;
            if (is_tl(v)) {
                if (e < 0) type_fail(ast, "negative power of a TL element");
                TLElement x = std::get<TLElement>(v);
                TLElement r = TLElement::identity(x.size());
                for (long k = 0; k < e; ++k) r = r * x;
                return r;
            }
            if (std::holds_alternative<TPoly>(v)) {
                if (e < 0) type_fail(ast, "negative power of a polynomial in t");
                TPoly x = std::get<TPoly>(v);
                TPoly r(1);
                for (long k = 0; k < e; ++k) r = r * x;
                return r;
            }
            return std::get<Scalar>(v).pow(e);
        }
        case K::Tr: {
            Value v = eval_node(ast->a);
            if (!is_tl(v)) type_fail(ast, "tr expects a TL element");
            return markov_trace(std::get<TLElement>(v));
        }
        case K::ATr: {
            Value v = eval_node(ast->a);
            if (!is_tl(v)) type_fail(ast, "atr expects a TL element");
            return annular_trace(std::get<TLElement>(v));
        }
        case K::Adj: {
            Value v = eval_node(ast->a);
            if (!is_tl(v)) type_fail(ast, "adj expects a TL element");
            return adjoint(std::get<TLElement>(v));
        }
        case K::Inner: {
            Value x = eval_node(ast->a);
            Value y = eval_node(ast->b);
            if (!is_tl(x) || !is_tl(y)) type_fail(ast, "inner expects TL elements");
            const TLElement& xe = std::get<TLElement>(x);
            const TLElement& ye = std::get<TLElement>(y);
            if (xe.size() != ye.size()) type_fail(ast, "inner: size mismatch");
            return inner(xe, ye);
        }
        case K::Ascribe: {
            Value v = eval_node(ast->a);
            if (!is_tl(v)) type_fail(ast, "size ascription expects a TL element");
            if (std::get<TLElement>(v).size() != ast->size)
                type_fail(ast, "ascribed size " + std::to_string(ast->size) +
                                   " does not match computed size " +
                                   std::to_string(std::get<TLElement>(v).size()));
            return v;
        }
    }
    throw error("unreachable expression kind");
}

} // namespace

Value evaluate(const ExprAST& ast) { return eval_node(ast); }

std::string value_str(const Value& v) {
    if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v).str();
    if (std::holds_alternative<TPoly>(v)) return std::get<TPoly>(v).str();
    return std::get<TLElement>(v).str();
}

} // namespace tlj
