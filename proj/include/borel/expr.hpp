#ifndef BOREL_EXPR_HPP
#define BOREL_EXPR_HPP

// The growth-function expression language: parsing, printing, and two
// evaluation paths (machine doubles for the scanning engines, certified
// MPFR intervals for digit-exact results).
//
// Grammar (whitespace-insensitive, no implicit multiplication):
//   expr    ::= term (('+' | '-') term)*
//   term    ::= unary (('*' | '/') unary)*
//   unary   ::= '-' unary | power
//   power   ::= primary ('^' unary)?            -- right-associative
//   primary ::= NUMBER | 'e' | 'pi' | 'r'
//             | ('exp' | 'log' | 'sqrt') '(' expr ')'
//             | '(' expr ')'
//   NUMBER  ::= digits ['.' digits]
//
// 'log' is the natural logarithm. Unary minus desugars to (0 - x). The
// only free variable is r.

#include <cctype>
#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "borel/interval.hpp"

namespace borel {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t offset, std::string message, std::vector<std::string> expected)
        : std::runtime_error(format(offset, message, expected)),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(size_t offset, const std::string& message,
                              const std::vector<std::string>& expected) {
        std::string s = "syntax error at byte " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            s += " (expected ";
            for (size_t i = 0; i < expected.size(); ++i) {
                if (i) s += ", ";
                s += expected[i];
            }
            s += ")";
        }
        return s;
    }

    size_t offset_;
    std::string message_;
    std::vector<std::string> expected_;
};

class EvalError : public std::runtime_error {
public:
    EvalError(std::string what_arg, double r)
        : std::runtime_error(what_arg + " (at r = " + std::to_string(r) + ")"), r_(r) {}
    double at_r() const { return r_; }

private:
    double r_;
};

enum class NodeKind { Number, ConstE, ConstPi, Var, Exp, Log, Sqrt, Add, Sub, Mul, Div, Pow };

struct ExprNode {
    NodeKind kind;
    std::string lexeme;        // Number only: the literal text, kept exact
    double number = 0.0;       // Number only: cached double value
    std::shared_ptr<const ExprNode> lhs, rhs;  // unary functions use lhs
};

using NodePtr = std::shared_ptr<const ExprNode>;

namespace expr_detail {

inline NodePtr make_number(std::string lexeme) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Number;
    n->number = std::strtod(lexeme.c_str(), nullptr);
    n->lexeme = std::move(lexeme);
    return n;
}

inline NodePtr make_leaf(NodeKind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

inline NodePtr make_unary(NodeKind k, NodePtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(arg);
    return n;
}

inline NodePtr make_binary(NodeKind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    size_t offset;
    std::string text;
};

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const size_t at = i;
        switch (c) {
            case '+': out.push_back({Tok::Plus, at, "+"}); ++i; continue;
            case '-': out.push_back({Tok::Minus, at, "-"}); ++i; continue;
            case '*': out.push_back({Tok::Star, at, "*"}); ++i; continue;
            case '/': out.push_back({Tok::Slash, at, "/"}); ++i; continue;
            case '^': out.push_back({Tok::Caret, at, "^"}); ++i; continue;
            case '(': out.push_back({Tok::LParen, at, "("}); ++i; continue;
            case ')': out.push_back({Tok::RParen, at, ")"}); ++i; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '.') {
                ++j;
                if (j >= src.size() || !std::isdigit(static_cast<unsigned char>(src[j]))) {
                    throw ParseError(j, "digit required after decimal point", {"digit"});
                }
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            out.push_back({Tok::Number, at, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Ident, at, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        throw ParseError(at, std::string("unexpected character '") + c + "'", {});
    }
    out.push_back({Tok::End, src.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        if (peek().kind != Tok::End) {
            throw ParseError(peek().offset, "trailing input after expression",
                             {"operator", "end of input"});
        }
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (peek().kind == Tok::Plus) {
                advance();
                lhs = make_binary(NodeKind::Add, std::move(lhs), parse_term());
            } else if (peek().kind == Tok::Minus) {
                advance();
                lhs = make_binary(NodeKind::Sub, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (peek().kind == Tok::Star) {
                advance();
                lhs = make_binary(NodeKind::Mul, std::move(lhs), parse_unary());
            } else if (peek().kind == Tok::Slash) {
                advance();
                lhs = make_binary(NodeKind::Div, std::move(lhs), parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (peek().kind == Tok::Minus) {
            advance();
            return make_binary(NodeKind::Sub, make_number("0"), parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (peek().kind == Tok::Caret) {
            advance();
            return make_binary(NodeKind::Pow, std::move(base), parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number:
                advance();
                return make_number(t.text);
            case Tok::LParen: {
                advance();
                NodePtr e = parse_expr();
                expect(Tok::RParen, ")");
                return e;
            }
            case Tok::Ident: {
                advance();
                if (t.text == "e") return make_leaf(NodeKind::ConstE);
                if (t.text == "pi") return make_leaf(NodeKind::ConstPi);
                if (t.text == "r") return make_leaf(NodeKind::Var);
                if (t.text == "exp" || t.text == "log" || t.text == "sqrt") {
                    expect(Tok::LParen, "(");
                    NodePtr arg = parse_expr();
                    expect(Tok::RParen, ")");
                    NodeKind k = t.text == "exp"   ? NodeKind::Exp
                                 : t.text == "log" ? NodeKind::Log
                                                   : NodeKind::Sqrt;
                    return make_unary(k, std::move(arg));
                }
                throw ParseError(t.offset, "unknown identifier '" + t.text + "'",
                                 {"e", "pi", "r", "exp", "log", "sqrt"});
            }
            default:
                throw ParseError(t.offset, "expected a primary expression",
                                 {"number", "identifier", "(", "-"});
        }
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) {
            throw ParseError(peek().offset, "unexpected token '" + peek().text + "'", {what});
        }
        advance();
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

inline int precedence(NodeKind k) {
    switch (k) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Pow: return 3;
        default: return 4;
    }
}

inline void print_node(const ExprNode& n, std::string& out);

inline void print_child(const ExprNode& child, int parent_prec, bool needs_paren_on_tie,
                        std::string& out) {
    const int cp = precedence(child.kind);
    const bool paren = cp < parent_prec || (cp == parent_prec && needs_paren_on_tie);
    if (paren) out += '(';
    print_node(child, out);
    if (paren) out += ')';
}

inline void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case NodeKind::Number: out += n.lexeme; return;
        case NodeKind::ConstE: out += 'e'; return;
        case NodeKind::ConstPi: out += "pi"; return;
        case NodeKind::Var: out += 'r'; return;
        case NodeKind::Exp:
        case NodeKind::Log:
        case NodeKind::Sqrt:
            out += n.kind == NodeKind::Exp ? "exp" : n.kind == NodeKind::Log ? "log" : "sqrt";
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: {
            const int p = precedence(n.kind);
            print_child(*n.lhs, p, false, out);
            out += n.kind == NodeKind::Add   ? " + "
                   : n.kind == NodeKind::Sub ? " - "
                   : n.kind == NodeKind::Mul ? "*"
                                             : "/";
            // Right operand of - and / must re-parenthesize equal precedence.
            print_child(*n.rhs, p, true, out);
            return;
        }
        case NodeKind::Pow:
            // Right-associative: parenthesize a Pow appearing as the base.
            print_child(*n.lhs, precedence(NodeKind::Pow), true, out);
            out += '^';
            print_child(*n.rhs, precedence(NodeKind::Pow), false, out);
            return;
    }
}

inline bool structurally_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == NodeKind::Number && a.lexeme != b.lexeme) return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
    if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

inline double eval_double_node(const ExprNode& n, double r) {
    switch (n.kind) {
        case NodeKind::Number: return n.number;
        case NodeKind::ConstE: return 2.718281828459045235360287471352662498;
        case NodeKind::ConstPi: return 3.141592653589793238462643383279502884;
        case NodeKind::Var: return r;
        case NodeKind::Exp: return std::exp(eval_double_node(*n.lhs, r));
        case NodeKind::Log: {
            const double a = eval_double_node(*n.lhs, r);
            if (!(a > 0.0)) throw EvalError("log of non-positive value", r);
            return std::log(a);
        }
        case NodeKind::Sqrt: {
            const double a = eval_double_node(*n.lhs, r);
            if (a < 0.0) throw EvalError("sqrt of negative value", r);
            return std::sqrt(a);
        }
        case NodeKind::Add:
            return eval_double_node(*n.lhs, r) + eval_double_node(*n.rhs, r);
        case NodeKind::Sub:
            return eval_double_node(*n.lhs, r) - eval_double_node(*n.rhs, r);
        case NodeKind::Mul:
            return eval_double_node(*n.lhs, r) * eval_double_node(*n.rhs, r);
        case NodeKind::Div: {
            const double b = eval_double_node(*n.rhs, r);
            if (b == 0.0) throw EvalError("division by zero", r);
            return eval_double_node(*n.lhs, r) / b;
        }
        case NodeKind::Pow: {
            const double a = eval_double_node(*n.lhs, r);
            const double b = eval_double_node(*n.rhs, r);
            const double v = std::pow(a, b);
            if (std::isnan(v)) throw EvalError("invalid power (negative base?)", r);
            return v;
        }
    }
    throw std::logic_error("unreachable node kind");
}

// Thrown when an interval straddles a domain boundary; a precision retry
// may resolve it.
struct StraddleError {
    const char* what;
};

inline Interval eval_interval_node(const ExprNode& n, const Interval& r, mpfr_prec_t p,
                                   double r_hint) {
    switch (n.kind) {
        case NodeKind::Number: return Interval::from_decimal(n.lexeme, p);
        case NodeKind::ConstE: return Interval::euler_e(p);
        case NodeKind::ConstPi: return Interval::pi(p);
        case NodeKind::Var: return r;
        case NodeKind::Exp: return exp(eval_interval_node(*n.lhs, r, p, r_hint));
        case NodeKind::Log: {
            Interval a = eval_interval_node(*n.lhs, r, p, r_hint);
            if (mpfr_sgn(a.hi()) <= 0) throw EvalError("log of non-positive value", r_hint);
            if (mpfr_sgn(a.lo()) <= 0) throw StraddleError{"log near zero"};
            return log(a);
        }
        case NodeKind::Sqrt: {
            Interval a = eval_interval_node(*n.lhs, r, p, r_hint);
            if (mpfr_sgn(a.hi()) < 0) throw EvalError("sqrt of negative value", r_hint);
            if (mpfr_sgn(a.lo()) < 0) throw StraddleError{"sqrt near zero"};
            return sqrt(a);
        }
        case NodeKind::Add:
            return add(eval_interval_node(*n.lhs, r, p, r_hint),
                       eval_interval_node(*n.rhs, r, p, r_hint));
        case NodeKind::Sub:
            return sub(eval_interval_node(*n.lhs, r, p, r_hint),
                       eval_interval_node(*n.rhs, r, p, r_hint));
        case NodeKind::Mul:
            return mul(eval_interval_node(*n.lhs, r, p, r_hint),
                       eval_interval_node(*n.rhs, r, p, r_hint));
        case NodeKind::Div: {
            Interval a = eval_interval_node(*n.lhs, r, p, r_hint);
            Interval b = eval_interval_node(*n.rhs, r, p, r_hint);
            if (mpfr_zero_p(b.lo()) && mpfr_zero_p(b.hi())) {
                throw EvalError("division by zero", r_hint);
            }
            if (b.contains_zero()) throw StraddleError{"denominator near zero"};
            return div(a, b);
        }
        case NodeKind::Pow: {
            Interval a = eval_interval_node(*n.lhs, r, p, r_hint);
            Interval b = eval_interval_node(*n.rhs, r, p, r_hint);
            // Integer exponents admit non-positive bases.
            if (mpfr_cmp(b.lo(), b.hi()) == 0 && mpfr_integer_p(b.lo()) &&
                mpfr_fits_slong_p(b.lo(), MPFR_RNDN)) {
                const long k = mpfr_get_si(b.lo(), MPFR_RNDN);
                if (k >= 0 || !a.contains_zero()) return pow(a, k);
                throw EvalError("negative power of zero", r_hint);
            }
            if (mpfr_sgn(a.hi()) <= 0) throw EvalError("power with non-positive base", r_hint);
            if (mpfr_sgn(a.lo()) <= 0) throw StraddleError{"power base near zero"};
            return pow(a, b);
        }
    }
    throw std::logic_error("unreachable node kind");
}

}  // namespace expr_detail

struct EvalResult {
    bool finite = true;          // false: the value overflows every precision (treated as +inf)
    double approx = 0.0;
    std::string decimal;         // rounded to the requested digits, or "inf"
    Interval enclosure;
};

class GrowthExpr {
public:
    GrowthExpr() = default;

    std::string str() const {
        std::string out;
        expr_detail::print_node(*root_, out);
        return out;
    }

    bool operator==(const GrowthExpr& o) const {
        return expr_detail::structurally_equal(*root_, *o.root_);
    }

    // Machine-precision fast path; infinities propagate, domain faults throw.
    double operator()(double r) const { return expr_detail::eval_double_node(*root_, r); }

    Interval eval_interval(const Interval& r, mpfr_prec_t p) const {
        try {
            return expr_detail::eval_interval_node(*root_, r, p, r.mid_double());
        } catch (const expr_detail::StraddleError& s) {
            throw EvalError(std::string("cannot resolve domain boundary: ") + s.what,
                            r.mid_double());
        }
    }

    const ExprNode& root() const { return *root_; }
    NodePtr root_ptr() const { return root_; }

    static GrowthExpr from_root(NodePtr root) {
        GrowthExpr g;
        g.root_ = std::move(root);
        return g;
    }

private:
    NodePtr root_;
};

inline GrowthExpr parse_growth(std::string_view text) {
    if (text.empty()) throw ParseError(0, "empty expression", {"expression"});
    return GrowthExpr::from_root(expr_detail::Parser(text).run());
}

// Certified evaluation: correct to within one unit in the last of `digits`
// significant digits, found by widening the working precision until the
// enclosure is thin enough (or the value is recognized as overflowing).
inline EvalResult eval(const GrowthExpr& expr, double r, int digits) {
    if (digits < 15) throw std::invalid_argument("eval: digits must be >= 15");
    if (!std::isfinite(r)) throw std::invalid_argument("eval: r must be finite");

    mpfr_prec_t p = prec_for_digits(digits + 6);
    for (int attempt = 0; attempt < 4; ++attempt, p *= 2) {
        std::optional<Interval> maybe;
        try {
            maybe = expr_detail::eval_interval_node(expr.root(), Interval::exact(r, p), p, r);
        } catch (const expr_detail::StraddleError& s) {
            if (attempt == 3) {
                throw EvalError(std::string("cannot resolve domain boundary: ") + s.what, r);
            }
            continue;
        }
        Interval v = std::move(*maybe);

        if (mpfr_inf_p(v.hi())) {
            // Symbolic overflow: the true value exceeds MPFR's exponent range.
            EvalResult res;
            res.finite = false;
            res.approx = std::numeric_limits<double>::infinity();
            res.decimal = "inf";
            res.enclosure = std::move(v);
            return res;
        }

        Real mid = v.mid();
        const double w = v.width_double();
        const double scale = std::max(std::fabs(mid.to_double()), 1e-300);
        if (w <= scale * 0.5 * std::pow(10.0, -digits) ||
            (mpfr_zero_p(v.lo()) && mpfr_zero_p(v.hi()))) {
            EvalResult res;
            res.finite = true;
            res.approx = mid.to_double();
            res.decimal = to_decimal_string(mid.raw(), digits, MPFR_RNDN);
            res.enclosure = std::move(v);
            return res;
        }
        if (attempt == 3) {
            throw EvalError("cannot certify the requested digits (interval stays wide)", r);
        }
    }
    throw std::logic_error("eval: unreachable");
}

struct MonotoneReport {
    bool is_increasing = false;
    double min_value = 0.0;
    std::optional<double> first_violation;  // leftmost grid point that decreases
    long grid_points = 0;
    double tolerance = 0.0;
};

// Grid check of the "continuous increasing" hypothesis. Samples at machine
// precision; tolerance 10^(-digits/2) absorbs roundoff on flat stretches.
inline MonotoneReport validate_monotone(const GrowthExpr& expr, double r_lo, double r_hi,
                                        long grid, int digits = 15) {
    if (!(r_lo < r_hi)) throw std::invalid_argument("validate_monotone: requires r_lo < r_hi");
    if (grid < 2) throw std::invalid_argument("validate_monotone: requires grid >= 2");

    MonotoneReport rep;
    rep.grid_points = grid;
    rep.tolerance = std::pow(10.0, -digits / 2.0);
    const double h = (r_hi - r_lo) / static_cast<double>(grid - 1);

    double prev = expr(r_lo);
    if (!std::isfinite(prev)) throw EvalError("non-finite sample", r_lo);
    rep.min_value = prev;
    for (long i = 1; i < grid; ++i) {
        const double x = r_lo + static_cast<double>(i) * h;
        const double v = expr(x);
        if (!std::isfinite(v)) throw EvalError("non-finite sample", x);
        if (v < prev - rep.tolerance && !rep.first_violation) {
            rep.first_violation = x;
        }
        rep.min_value = std::min(rep.min_value, v);
        prev = v;
    }
    rep.is_increasing = !rep.first_violation.has_value();
    return rep;
}

}  // namespace borel

#endif  // BOREL_EXPR_HPP
