#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfield/division.hpp"

namespace sfield {

enum class TokenKind {
    number,
    symbol_a,
    plus,
    minus,
    star,
    slash,
    lparen,
    rparen,
    comma,
    end,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t pos; // byte offset into the source
};

/// Half-open byte range [begin, end) into the source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class LexError : public Error {
public:
    LexError(std::size_t position, char character);

    std::size_t position;
    char character;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected);

    std::size_t position;
    std::string expected;
};

/// Evaluation failure; wraps a division status when the failure came from a
/// division node.
class EvalError : public Error {
public:
    EvalError(std::string message, Span span);
    EvalError(DivisionStatus status, Span span);

    Span span;
    std::optional<DivisionStatus> status;
};

/// Longest-match lexing; whitespace skipped; both "*" and the UTF-8 middle
/// dot are accepted as the product sign.  Unknown bytes raise LexError.
std::vector<Token> tokenize(std::string_view input);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

/// Parse tree over literals, the base unit A, +, -, *, / and parentheses.
/// Literals keep their exact numeric payload; a concrete context interprets
/// them at evaluation time.  Every node records its source span.
struct Expr {
    enum class Kind { literal, scalar_literal, base_unit, neg, add, sub, mul, div };

    Kind kind;
    Span span;

    // literal: the two coordinates as exact fractions
    Int lit_x_num = 0;
    Int lit_x_den = 1;
    Int lit_y_num = 0;
    Int lit_y_den = 1;
    // scalar_literal
    Int value = 0;
    // children (neg uses only lhs)
    ExprPtr lhs;
    ExprPtr rhs;
};

/// Precedence: unary minus binds tightest, then {*, /} left-associative,
/// then {+, -} left-associative.  Left association of the product is a
/// semantic commitment here, because the product is not associative.
/// Pair literals "(a, b)" with signed fraction components become one
/// literal node.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view input);

/// Evaluates the tree in the given context.  Scalar literals are embedded
/// (reduced mod p over GF(p)); division failures surface as EvalError with
/// the offending node's span.
SElement evaluate(const Expr& e, const Context& ctx);

enum class RenderFormat { coords, canonical };

std::string render(const SElement& s, RenderFormat format);

/// Fully parenthesized text of a parse tree; used to surface how chained
/// products were grouped.
std::string unparse(const Expr& e);

/// True when a product node sits directly under another product node,
/// i.e. the input chained three or more factors.
bool has_product_chain(const Expr& e);

/// "error: <message>" followed by the source line and a caret under pos.
void print_diagnostic(std::ostream& os, std::string_view source, std::size_t pos,
                      const std::string& message);

struct ReplConfig {
    Context ctx = Context::rationals();
    RenderFormat format = RenderFormat::coords;
    bool show_prompt = true;
};

/// Reads one expression per line, prints the rendered value or a caret
/// diagnostic, and keeps going.  Meta-commands: :field rational, :field gf <p>,
/// :format coords|canonical, :check, :help, :quit.  Returns the process exit
/// status (nonzero only on stream failure).
int repl_session(ReplConfig config, std::istream& in, std::ostream& out,
                 std::ostream& err);

} // namespace sfield
