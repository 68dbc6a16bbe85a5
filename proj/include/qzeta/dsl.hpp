#pragma once

// A small expression language for q-series, evaluated exactly to truncated
// PowerSeries values. It covers sums and products over an index variable
// (finite or infinite upper bound), rational terms in powers of q, and the
// integer index arithmetic the shipped identities need.
//
// Grammar (whitespace insignificant, identifiers single lowercase letters,
// integers decimal):
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := base ('^' intAtom)?
//   base    := 'q' '^' intAtom | number | '(' expr ')'
//            | 'sum'  '(' var '=' intExpr '..' (intExpr|'inf') ',' expr ')'
//            | 'prod' '(' var '=' intExpr '..' (intExpr|'inf') ',' expr ')'
//   intExpr := ['-'] intTerm (('+'|'-') intTerm)*
//   intTerm := intFactor ('*' intFactor)*
//   intFactor := intAtom ('^' intAtom)?
//   intAtom := number | var | '(-1)' '^' var
//            | 'floor' '(' intExpr '/' intExpr ')' | '(' intExpr ')'
//
// Integer division exists only as floor(a/b), which rounds toward minus
// infinity; this matters for the alternating exponents of Eq-(1.4)-style
// sums, where truncating division silently corrupts the odd-index terms.
// (-1)^k is a dedicated parity form, not a general power with negative base.
//
// Series division a/b is a * invert(b) and requires b to start with +1 or -1.
// An infinite sum or product iterates its index and watches the minimal
// q-degree of the terms (for products, of factor - 1). Termination: once
// `guard` consecutive terms are trivial at the target order (degree >= N) the
// tail cannot touch the result and iteration stops. Divergence: `guard`
// consecutive non-trivial terms whose degree fails to exceed the previous
// non-trivial term's raise DivergenceGuard, as does exhausting the overall
// step budget guard*(N+2); the comparison is against the previous term, not a
// high-water mark, because legitimate sums interleave fast- and slow-growing
// subsequences (the alternating exponents of Eq-(1.4) are the shipped case).

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qzeta/catalog.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/power_series.hpp"

namespace qzeta::dsl {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_, col_;
};

class UnboundVariable : public ParseError {
public:
    UnboundVariable(std::size_t line, std::size_t col, char name)
        : ParseError(line, col, std::string("unbound variable '") + name + "'") {}
};

/// Raised when an infinite sum/product makes no minimal-degree progress.
class DivergenceGuard : public Error {
public:
    explicit DivergenceGuard(const std::string& what) : Error(what) {}
};

class NegativeQExponent : public Error {
public:
    explicit NegativeQExponent(const std::string& what) : Error(what) {}
};

/// Any other evaluation-time failure (negative series power, division of
/// integers outside floor, overflow).
class EvalError : public Error {
public:
    explicit EvalError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

struct IntExpr {
    enum class Op { literal, variable, add, sub, mul, neg, pow, floor_div, parity };
    Op op = Op::literal;
    long long value = 0;  // literal
    char name = 0;        // variable, parity index
    std::vector<IntExpr> args;

    bool operator==(const IntExpr&) const = default;
};

struct SeriesExpr {
    enum class Op { number, q_pow, add, sub, neg, mul, div, pow, sum, prod };
    Op op = Op::number;
    long long value = 0;          // number
    char binder = 0;              // sum/prod index variable
    bool upper_infinite = false;  // sum/prod bound kind
    std::vector<IntExpr> iargs;   // q_pow/pow: {exponent}; sum/prod: {lower[, upper]}
    std::vector<SeriesExpr> args;

    bool operator==(const SeriesExpr&) const = default;
};

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace detail {

enum class Tok {
    integer, q, var, kw_sum, kw_prod, kw_floor, kw_inf,
    plus, minus, star, slash, caret, lparen, rparen, comma, equals, dotdot, end
};

struct Token {
    Tok kind;
    long long value = 0;  // integer
    char name = 0;        // var
    std::size_t line = 1, col = 1;
};

inline const char* tok_name(Tok t) {
    switch (t) {
        case Tok::integer: return "integer";
        case Tok::q: return "'q'";
        case Tok::var: return "variable";
        case Tok::kw_sum: return "'sum'";
        case Tok::kw_prod: return "'prod'";
        case Tok::kw_floor: return "'floor'";
        case Tok::kw_inf: return "'inf'";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::equals: return "'='";
        case Tok::dotdot: return "'..'";
        case Tok::end: return "end of input";
    }
    return "?";
}

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t at_col, long long v = 0, char n = 0) {
        out.push_back({k, v, n, line, at_col});
    };
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t at = col;
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            std::size_t len = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                if (v > (std::numeric_limits<long long>::max() - 9) / 10)
                    throw ParseError(line, at, "integer literal too large");
                v = v * 10 + (text[i] - '0');
                ++i;
                ++len;
            }
            col += len;
            push(Tok::integer, at, v);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            const std::string_view word = text.substr(i, j - i);
            if (word == "sum") push(Tok::kw_sum, at);
            else if (word == "prod") push(Tok::kw_prod, at);
            else if (word == "floor") push(Tok::kw_floor, at);
            else if (word == "inf") push(Tok::kw_inf, at);
            else if (word.size() == 1 && word[0] == 'q') push(Tok::q, at);
            else if (word.size() == 1 && std::islower(static_cast<unsigned char>(word[0])))
                push(Tok::var, at, 0, word[0]);
            else
                throw ParseError(line, at, "unknown identifier '" + std::string(word) + "'");
            col += j - i;
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Tok::plus, at); break;
            case '-': push(Tok::minus, at); break;
            case '*': push(Tok::star, at); break;
            case '/': push(Tok::slash, at); break;
            case '^': push(Tok::caret, at); break;
            case '(': push(Tok::lparen, at); break;
            case ')': push(Tok::rparen, at); break;
            case ',': push(Tok::comma, at); break;
            case '=': push(Tok::equals, at); break;
            case '.':
                if (i + 1 < text.size() && text[i + 1] == '.') {
                    push(Tok::dotdot, at);
                    ++i;
                    ++col;
                    break;
                }
                throw ParseError(line, at, "stray '.' (did you mean '..'?)");
            default:
                throw ParseError(line, at, std::string("unexpected character '") + c + "'");
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::end, 0, 0, line, col});
    return out;
}

// ---------------------------------------------------------------------------
// Parser (recursive descent over the token vector)
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    SeriesExpr parse() {
        SeriesExpr e = parse_expr();
        expect(Tok::end, "after expression");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string scope_;  // currently bound index variables, innermost last

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& advance() { return toks_[pos_++]; }
    bool match(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k, const std::string& context) {
        if (peek().kind != k)
            throw ParseError(peek().line, peek().col,
                             std::string("expected ") + tok_name(k) + " " + context + ", found " +
                                 tok_name(peek().kind));
        return advance();
    }

    bool bound(char v) const { return scope_.find(v) != std::string::npos; }

    SeriesExpr parse_expr() {
        SeriesExpr lhs;
        if (match(Tok::minus)) {
            lhs.op = SeriesExpr::Op::neg;
            lhs.args.push_back(parse_term());
        } else {
            lhs = parse_term();
        }
        for (;;) {
            if (match(Tok::plus)) {
                SeriesExpr node;
                node.op = SeriesExpr::Op::add;
                node.args = {std::move(lhs), parse_term()};
                lhs = std::move(node);
            } else if (match(Tok::minus)) {
                SeriesExpr node;
                node.op = SeriesExpr::Op::sub;
                node.args = {std::move(lhs), parse_term()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    SeriesExpr parse_term() {
        SeriesExpr lhs = parse_factor();
        for (;;) {
            if (match(Tok::star)) {
                SeriesExpr node;
                node.op = SeriesExpr::Op::mul;
                node.args = {std::move(lhs), parse_factor()};
                lhs = std::move(node);
            } else if (match(Tok::slash)) {
                SeriesExpr node;
                node.op = SeriesExpr::Op::div;
                node.args = {std::move(lhs), parse_factor()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    SeriesExpr parse_factor() {
        SeriesExpr base = parse_base();
        if (match(Tok::caret)) {
            SeriesExpr node;
            node.op = SeriesExpr::Op::pow;
            node.iargs.push_back(parse_int_atom());
            node.args.push_back(std::move(base));
            return node;
        }
        return base;
    }

    SeriesExpr parse_base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::q: {
                advance();
                expect(Tok::caret, "after 'q' (bare q is not in the grammar; write q^1)");
                SeriesExpr node;
                node.op = SeriesExpr::Op::q_pow;
                node.iargs.push_back(parse_int_atom());
                return node;
            }
            case Tok::integer: {
                advance();
                SeriesExpr node;
                node.op = SeriesExpr::Op::number;
                node.value = t.value;
                return node;
            }
            case Tok::lparen: {
                advance();
                SeriesExpr e = parse_expr();
                expect(Tok::rparen, "after parenthesized expression");
                return e;
            }
            case Tok::kw_sum:
            case Tok::kw_prod:
                return parse_sum_prod(t.kind == Tok::kw_sum);
            case Tok::var:
                throw ParseError(t.line, t.col,
                                 std::string("index variable '") + t.name +
                                     "' cannot stand alone as a series; use q^" + t.name +
                                     " or an integer expression context");
            default:
                throw ParseError(t.line, t.col,
                                 std::string("expected a series (q^, number, parenthesis, sum, "
                                             "prod), found ") +
                                     tok_name(t.kind));
        }
    }

    SeriesExpr parse_sum_prod(bool is_sum) {
        advance();  // sum / prod
        SeriesExpr node;
        node.op = is_sum ? SeriesExpr::Op::sum : SeriesExpr::Op::prod;
        expect(Tok::lparen, is_sum ? "after 'sum'" : "after 'prod'");
        const Token& v = expect(Tok::var, "as the index of the iteration");
        node.binder = v.name;
        expect(Tok::equals, "after the index variable");
        node.iargs.push_back(parse_int_expr());  // lower bound, outer scope
        expect(Tok::dotdot, "between the iteration bounds");
        if (match(Tok::kw_inf)) {
            node.upper_infinite = true;
        } else {
            node.iargs.push_back(parse_int_expr());
        }
        expect(Tok::comma, "before the iteration body");
        scope_.push_back(node.binder);
        node.args.push_back(parse_expr());
        scope_.pop_back();
        expect(Tok::rparen, "to close the sum/prod");
        return node;
    }

    IntExpr parse_int_expr() {
        IntExpr lhs;
        if (match(Tok::minus)) {
            lhs.op = IntExpr::Op::neg;
            lhs.args.push_back(parse_int_term());
        } else {
            lhs = parse_int_term();
        }
        for (;;) {
            if (match(Tok::plus)) {
                IntExpr node;
                node.op = IntExpr::Op::add;
                node.args = {std::move(lhs), parse_int_term()};
                lhs = std::move(node);
            } else if (match(Tok::minus)) {
                IntExpr node;
                node.op = IntExpr::Op::sub;
                node.args = {std::move(lhs), parse_int_term()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    IntExpr parse_int_term() {
        IntExpr lhs = parse_int_factor();
        while (match(Tok::star)) {
            IntExpr node;
            node.op = IntExpr::Op::mul;
            node.args = {std::move(lhs), parse_int_factor()};
            lhs = std::move(node);
        }
        return lhs;
    }

    IntExpr parse_int_factor() {
        IntExpr base = parse_int_atom();
        if (base.op == IntExpr::Op::parity) return base;  // '^' already consumed
        if (match(Tok::caret)) {
            IntExpr node;
            node.op = IntExpr::Op::pow;
            node.args = {std::move(base), parse_int_atom()};
            return node;
        }
        return base;
    }

    IntExpr parse_int_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                advance();
                IntExpr node;
                node.op = IntExpr::Op::literal;
                node.value = t.value;
                return node;
            }
            case Tok::var: {
                advance();
                if (!bound(t.name)) throw UnboundVariable(t.line, t.col, t.name);
                IntExpr node;
                node.op = IntExpr::Op::variable;
                node.name = t.name;
                return node;
            }
            case Tok::kw_floor: {
                advance();
                expect(Tok::lparen, "after 'floor'");
                IntExpr node;
                node.op = IntExpr::Op::floor_div;
                node.args.push_back(parse_int_expr());
                expect(Tok::slash, "inside floor(a/b)");
                node.args.push_back(parse_int_expr());
                expect(Tok::rparen, "to close floor(a/b)");
                return node;
            }
            case Tok::lparen: {
                // '(-1)' '^' var is the dedicated parity form.
                if (peek(1).kind == Tok::minus && peek(2).kind == Tok::integer &&
                    peek(2).value == 1 && peek(3).kind == Tok::rparen &&
                    peek(4).kind == Tok::caret && peek(5).kind == Tok::var) {
                    const Token& pv = peek(5);
                    if (!bound(pv.name)) throw UnboundVariable(pv.line, pv.col, pv.name);
                    pos_ += 6;
                    IntExpr node;
                    node.op = IntExpr::Op::parity;
                    node.name = pv.name;
                    return node;
                }
                advance();
                IntExpr e = parse_int_expr();
                expect(Tok::rparen, "after parenthesized integer expression");
                return e;
            }
            default:
                throw ParseError(t.line, t.col,
                                 std::string("expected an integer expression, found ") +
                                     tok_name(t.kind));
        }
    }
};

}  // namespace detail

/// Parse a DSL text to its AST. All variables are resolved at parse time;
/// unbound ones raise UnboundVariable (a ParseError).
inline SeriesExpr parse(std::string_view text) { return detail::Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluation parameters: the target truncation order and the divergence
/// guard (max consecutive index steps of an infinite sum/prod that fail to
/// raise the minimal q-degree before the iteration is declared divergent).
struct EvalContext {
    std::size_t order = 1;
    unsigned guard = 64;
};

namespace detail {

class Evaluator {
public:
    Evaluator(std::size_t order, unsigned guard) : order_(order), guard_(guard) {
        if (order_ == 0) throw std::invalid_argument("eval: order must be >= 1");
        if (guard_ == 0) throw std::invalid_argument("eval: guard must be >= 1");
    }

    long long eval_int(const IntExpr& e) {
        switch (e.op) {
            case IntExpr::Op::literal: return e.value;
            case IntExpr::Op::variable: return lookup(e.name);
            case IntExpr::Op::add: return checked_add(eval_int(e.args[0]), eval_int(e.args[1]));
            case IntExpr::Op::sub: return checked_add(eval_int(e.args[0]), -eval_int(e.args[1]));
            case IntExpr::Op::mul: return checked_mul(eval_int(e.args[0]), eval_int(e.args[1]));
            case IntExpr::Op::neg: return -eval_int(e.args[0]);
            case IntExpr::Op::pow: {
                const long long b = eval_int(e.args[0]);
                const long long p = eval_int(e.args[1]);
                if (p < 0) throw EvalError("integer power with negative exponent");
                long long r = 1;
                for (long long i = 0; i < p; ++i) r = checked_mul(r, b);
                return r;
            }
            case IntExpr::Op::floor_div: {
                const long long a = eval_int(e.args[0]);
                const long long b = eval_int(e.args[1]);
                if (b == 0) throw EvalError("floor division by zero");
                return floor_div(a, b);
            }
            case IntExpr::Op::parity: return lookup(e.name) % 2 == 0 ? 1 : -1;
        }
        throw EvalError("corrupt integer expression");
    }

    PowerSeries eval(const SeriesExpr& e) {
        const std::size_t N = order_;
        switch (e.op) {
            case SeriesExpr::Op::number: return monomial(e.value, 0, N);
            case SeriesExpr::Op::q_pow: {
                const long long p = eval_int(e.iargs[0]);
                if (p < 0)
                    throw NegativeQExponent("q^" + std::to_string(p) +
                                            " is not a power series term");
                return monomial(1, static_cast<std::size_t>(p), N);
            }
            case SeriesExpr::Op::add: return eval(e.args[0]) + eval(e.args[1]);
            case SeriesExpr::Op::sub: return eval(e.args[0]) - eval(e.args[1]);
            case SeriesExpr::Op::neg: return -eval(e.args[0]);
            case SeriesExpr::Op::mul: return eval(e.args[0]) * eval(e.args[1]);
            case SeriesExpr::Op::div: {
                PowerSeries numer = eval(e.args[0]);
                PowerSeries denom = eval(e.args[1]);
                if (denom[0] != 1 && denom[0] != -1)
                    throw NonUnitConstantTerm("division: denominator constant term " +
                                              denom[0].str() + " is not a unit");
                if (numer.is_zero()) return PowerSeries(std::min(numer.order(), denom.order()));
                return numer * invert(denom);
            }
            case SeriesExpr::Op::pow: {
                const long long p = eval_int(e.iargs[0]);
                if (p < 0) throw EvalError("series power with negative exponent");
                PowerSeries base = eval(e.args[0]);
                PowerSeries acc = PowerSeries::one(base.order());
                long long left = p;
                while (left > 0) {  // square-and-multiply
                    if (left & 1) acc *= base;
                    left >>= 1;
                    if (left > 0) base *= base;
                }
                return acc;
            }
            case SeriesExpr::Op::sum: return eval_iteration(e, /*is_sum=*/true);
            case SeriesExpr::Op::prod: return eval_iteration(e, /*is_sum=*/false);
        }
        throw EvalError("corrupt series expression");
    }

private:
    long long lookup(char name) const {
        const auto it = env_.find(name);
        if (it == env_.end())
            throw EvalError(std::string("variable '") + name + "' has no binding");
        return it->second;
    }

    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw EvalError("integer overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw EvalError("integer overflow");
        return r;
    }

    PowerSeries eval_iteration(const SeriesExpr& e, bool is_sum) {
        const std::size_t N = order_;
        PowerSeries acc = is_sum ? PowerSeries::zero(N) : PowerSeries::one(N);
        const long long lo = eval_int(e.iargs[0]);

        const bool had = env_.count(e.binder) > 0;
        const long long saved = had ? env_[e.binder] : 0;

        auto combine = [&](const PowerSeries& term) {
            if (is_sum) acc += term;
            else acc *= term;
        };
        // Minimal degree of what the term contributes beyond the identity
        // element: the term itself for sums, term - 1 for products.
        auto contribution_degree = [&](const PowerSeries& term) -> std::size_t {
            if (is_sum) return term.min_degree().value_or(N);
            for (std::size_t i = 0; i < term.order(); ++i) {
                const bool identity_coeff = (i == 0) ? (term[i] == 1) : (term[i] == 0);
                if (!identity_coeff) return i;
            }
            return N;
        };

        if (!e.upper_infinite) {
            const long long hi = eval_int(e.iargs[1]);
            for (long long idx = lo; idx <= hi; ++idx) {
                env_[e.binder] = idx;
                combine(eval(e.args[0]));
            }
        } else {
            long long prev_degree = -1;  // previous non-trivial term
            unsigned no_progress = 0;
            unsigned trivial_streak = 0;
            const unsigned long long step_budget =
                static_cast<unsigned long long>(guard_) * (N + 2) + guard_;
            unsigned long long steps = 0;
            for (long long idx = lo;; ++idx) {
                if (++steps > step_budget)
                    throw DivergenceGuard(std::string(is_sum ? "sum" : "prod") + " over '" +
                                          e.binder + "' exhausted the step budget of " +
                                          std::to_string(step_budget) +
                                          " without settling at order " + std::to_string(N));
                env_[e.binder] = idx;
                const PowerSeries term = eval(e.args[0]);
                const std::size_t d = contribution_degree(term);
                if (d >= N) {
                    if (++trivial_streak >= guard_) break;  // tail is null at this order
                    continue;  // identity contribution, nothing to combine
                }
                combine(term);
                trivial_streak = 0;
                if (static_cast<long long>(d) > prev_degree) {
                    no_progress = 0;
                } else if (++no_progress >= guard_) {
                    throw DivergenceGuard(
                        std::string(is_sum ? "sum" : "prod") + " over '" + e.binder +
                        "' made no minimal-degree progress for " + std::to_string(guard_) +
                        " consecutive terms (last degree " + std::to_string(d) + ")");
                }
                prev_degree = static_cast<long long>(d);
            }
        }

        if (had) env_[e.binder] = saved;
        else env_.erase(e.binder);
        return acc;
    }

    std::size_t order_;
    unsigned guard_;
    std::map<char, long long> env_;
};

}  // namespace detail

/// Evaluate an AST to a series of ctx.order coefficients.
inline PowerSeries eval(const SeriesExpr& ast, const EvalContext& ctx) {
    return detail::Evaluator(ctx.order, ctx.guard).eval(ast);
}

inline PowerSeries eval_text(std::string_view text, const EvalContext& ctx) {
    return eval(parse(text), ctx);
}

/// Parse and evaluate both texts at order N, then compare coefficientwise.
inline VerificationReport check(std::string_view lhs_text, std::string_view rhs_text,
                                std::size_t N, unsigned guard = 64,
                                std::string label = "check") {
    const auto t0 = std::chrono::steady_clock::now();
    const EvalContext ctx{N, guard};
    const PowerSeries lhs = eval_text(lhs_text, ctx);
    const PowerSeries rhs = eval_text(rhs_text, ctx);
    VerificationReport report;
    report.identity = std::move(label);
    report.order = N;
    report.first_mismatch = equal_up_to(lhs, rhs, N);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// ---------------------------------------------------------------------------
// Pretty printer (canonical, fully parenthesized; parse . print is identity)
// ---------------------------------------------------------------------------

inline void pretty_print(const IntExpr& e, std::ostream& os) {
    switch (e.op) {
        case IntExpr::Op::literal: os << e.value; return;
        case IntExpr::Op::variable: os << e.name; return;
        case IntExpr::Op::add:
            os << '(';
            pretty_print(e.args[0], os);
            os << '+';
            pretty_print(e.args[1], os);
            os << ')';
            return;
        case IntExpr::Op::sub:
            os << '(';
            pretty_print(e.args[0], os);
            os << '-';
            pretty_print(e.args[1], os);
            os << ')';
            return;
        case IntExpr::Op::mul:
            os << '(';
            pretty_print(e.args[0], os);
            os << '*';
            pretty_print(e.args[1], os);
            os << ')';
            return;
        case IntExpr::Op::neg:
            os << "(-";
            pretty_print(e.args[0], os);
            os << ')';
            return;
        case IntExpr::Op::pow:
            os << '(';
            pretty_print(e.args[0], os);
            os << ")^(";
            pretty_print(e.args[1], os);
            os << ')';
            return;
        case IntExpr::Op::floor_div:
            os << "floor(";
            pretty_print(e.args[0], os);
            os << '/';
            pretty_print(e.args[1], os);
            os << ')';
            return;
        case IntExpr::Op::parity: os << "(-1)^" << e.name; return;
    }
}

inline void pretty_print(const SeriesExpr& e, std::ostream& os) {
    auto binary = [&](char sign) {
        os << '(';
        pretty_print(e.args[0], os);
        os << sign;
        pretty_print(e.args[1], os);
        os << ')';
    };
    switch (e.op) {
        case SeriesExpr::Op::number: os << e.value; return;
        case SeriesExpr::Op::q_pow:
            os << "q^(";
            pretty_print(e.iargs[0], os);
            os << ')';
            return;
        case SeriesExpr::Op::add: binary('+'); return;
        case SeriesExpr::Op::sub: binary('-'); return;
        case SeriesExpr::Op::neg:
            os << "(-";
            pretty_print(e.args[0], os);
            os << ')';
            return;
        case SeriesExpr::Op::mul: binary('*'); return;
        case SeriesExpr::Op::div: binary('/'); return;
        case SeriesExpr::Op::pow:
            os << '(';
            pretty_print(e.args[0], os);
            os << ")^(";
            pretty_print(e.iargs[0], os);
            os << ')';
            return;
        case SeriesExpr::Op::sum:
        case SeriesExpr::Op::prod:
            os << (e.op == SeriesExpr::Op::sum ? "sum(" : "prod(") << e.binder << '=';
            pretty_print(e.iargs[0], os);
            os << "..";
            if (e.upper_infinite) os << "inf";
            else pretty_print(e.iargs[1], os);
            os << ", ";
            pretty_print(e.args[0], os);
            os << ')';
            return;
    }
}

inline std::string pretty_print(const SeriesExpr& e) {
    std::ostringstream os;
    pretty_print(e, os);
    return os.str();
}

}  // namespace qzeta::dsl
