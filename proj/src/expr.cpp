#include "sfield/expr.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "sfield/axiom_lab.hpp"

namespace sfield {

namespace {

std::string fraction_str(const Int& num, const Int& den) {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string status_message(DivisionStatus status) {
    switch (status) {
        case DivisionStatus::quotient: return "quotient";
        case DivisionStatus::indeterminate: return "0/0 is indeterminate";
        case DivisionStatus::no_solution:
            return "no solution: cannot divide a non-scalar by zero";
        case DivisionStatus::not_invertible: return "divisor is not invertible";
        case DivisionStatus::not_a_scalar_divisor: return "divisor must be a scalar";
    }
    return "?";
}

} // namespace

LexError::LexError(std::size_t position_, char character_)
    : Error("unexpected character '" + std::string(1, character_) + "' at offset " +
            std::to_string(position_)),
      position(position_),
      character(character_) {}

ParseError::ParseError(std::size_t position_, std::string expected_)
    : Error("expected " + expected_ + " at offset " + std::to_string(position_)),
      position(position_),
      expected(std::move(expected_)) {}

EvalError::EvalError(std::string message, Span span_)
    : Error(std::move(message)), span(span_) {}

EvalError::EvalError(DivisionStatus status_, Span span_)
    : Error(status_message(status_)), span(span_), status(status_) {}

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = input.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(input[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
            out.push_back({TokenKind::number, std::string(input.substr(i, j - i)), i});
            i = j;
            continue;
        }
        // UTF-8 middle dot, accepted as the product sign
        if (c == 0xC2 && i + 1 < n && static_cast<unsigned char>(input[i + 1]) == 0xB7) {
            out.push_back({TokenKind::star, std::string(input.substr(i, 2)), i});
            i += 2;
            continue;
        }
        TokenKind kind;
        switch (c) {
            case 'A': kind = TokenKind::symbol_a; break;
            case '+': kind = TokenKind::plus; break;
            case '-': kind = TokenKind::minus; break;
            case '*': kind = TokenKind::star; break;
            case '/': kind = TokenKind::slash; break;
            case '(': kind = TokenKind::lparen; break;
            case ')': kind = TokenKind::rparen; break;
            case ',': kind = TokenKind::comma; break;
            default: throw LexError(i, input[i]);
        }
        out.push_back({kind, std::string(input.substr(i, 1)), i});
        ++i;
    }
    out.push_back({TokenKind::end, "", n});
    return out;
}

namespace {

ExprPtr make_node(Expr::Kind kind, Span span) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->span = span;
    return e;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    ExprPtr run() {
        ExprPtr e = expression();
        if (peek().kind != TokenKind::end) {
            throw ParseError(peek().pos, "end of input");
        }
        return e;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t i_ = 0;

    const Token& peek() const { return toks_[i_]; }
    const Token& advance() { return toks_[i_++]; }
    bool match(TokenKind k) {
        if (peek().kind == k) {
            ++i_;
            return true;
        }
        return false;
    }
    const Token& expect(TokenKind k, const char* what) {
        if (peek().kind != k) throw ParseError(peek().pos, what);
        return toks_[i_++];
    }

    ExprPtr expression() {
        ExprPtr lhs = term();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            Expr::Kind kind =
                advance().kind == TokenKind::plus ? Expr::Kind::add : Expr::Kind::sub;
            ExprPtr rhs = term();
            ExprPtr node = make_node(kind, {lhs->span.begin, rhs->span.end});
            node->lhs = std::move(lhs);
            node->rhs = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
            Expr::Kind kind =
                advance().kind == TokenKind::star ? Expr::Kind::mul : Expr::Kind::div;
            ExprPtr rhs = unary();
            ExprPtr node = make_node(kind, {lhs->span.begin, rhs->span.end});
            node->lhs = std::move(lhs);
            node->rhs = std::move(rhs);
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == TokenKind::minus) {
            const Token& sign = advance();
            ExprPtr inner = unary();
            ExprPtr node = make_node(Expr::Kind::neg, {sign.pos, inner->span.end});
            node->lhs = std::move(inner);
            return node;
        }
        return primary();
    }

    ExprPtr primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::number: {
                advance();
                ExprPtr node = make_node(Expr::Kind::scalar_literal,
                                         {tok.pos, tok.pos + tok.lexeme.size()});
                node->value = Int{tok.lexeme};
                return node;
            }
            case TokenKind::symbol_a: {
                advance();
                return make_node(Expr::Kind::base_unit, {tok.pos, tok.pos + 1});
            }
            case TokenKind::lparen: {
                const Token& open = advance();
                // A signed fraction followed by a comma means a pair literal;
                // anything else is ordinary grouping.
                std::size_t saved = i_;
                auto first = signed_fraction();
                if (first && peek().kind == TokenKind::comma) {
                    advance();
                    auto second = signed_fraction();
                    if (!second) {
                        throw ParseError(peek().pos, "a pair coordinate");
                    }
                    const Token& close = expect(TokenKind::rparen, "')'");
                    ExprPtr node =
                        make_node(Expr::Kind::literal, {open.pos, close.pos + 1});
                    node->lit_x_num = first->first;
                    node->lit_x_den = first->second;
                    node->lit_y_num = second->first;
                    node->lit_y_den = second->second;
                    return node;
                }
                i_ = saved;
                ExprPtr inner = expression();
                const Token& close = expect(TokenKind::rparen, "')'");
                inner->span = {open.pos, close.pos + 1};
                return inner;
            }
            default:
                throw ParseError(tok.pos, "a number, 'A', '-' or '('");
        }
    }

    std::optional<std::pair<Int, Int>> signed_fraction() {
        bool negative = match(TokenKind::minus);
        if (peek().kind != TokenKind::number) return std::nullopt;
        Int num{advance().lexeme};
        Int den = 1;
        if (match(TokenKind::slash)) {
            if (peek().kind != TokenKind::number) return std::nullopt;
            den = Int{advance().lexeme};
        }
        if (negative) num = -num;
        return std::make_pair(std::move(num), std::move(den));
    }
};

} // namespace

ExprPtr parse(const std::vector<Token>& tokens) {
    return Parser(tokens).run();
}

ExprPtr parse(std::string_view input) {
    return parse(tokenize(input));
}

SElement evaluate(const Expr& e, const Context& ctx) {
    switch (e.kind) {
        case Expr::Kind::literal:
            try {
                return {Scalar::from_fraction(e.lit_x_num, e.lit_x_den, ctx),
                        Scalar::from_fraction(e.lit_y_num, e.lit_y_den, ctx)};
            } catch (const Error& err) {
                throw EvalError(std::string("literal not representable over ") +
                                    ctx.str() + ": " + err.what(),
                                e.span);
            }
        case Expr::Kind::scalar_literal:
            return embed_scalar(Scalar::from_integer(e.value, ctx));
        case Expr::Kind::base_unit:
            return SElement::base_unit(ctx);
        case Expr::Kind::neg:
            return -evaluate(*e.lhs, ctx);
        case Expr::Kind::add:
            return evaluate(*e.lhs, ctx) + evaluate(*e.rhs, ctx);
        case Expr::Kind::sub:
            return evaluate(*e.lhs, ctx) - evaluate(*e.rhs, ctx);
        case Expr::Kind::mul:
            return evaluate(*e.lhs, ctx) * evaluate(*e.rhs, ctx);
        case Expr::Kind::div: {
            DivisionOutcome out = divide(evaluate(*e.lhs, ctx), evaluate(*e.rhs, ctx));
            if (!out.ok()) throw EvalError(out.status, e.span);
            return *out.value;
        }
    }
    throw EvalError("malformed expression tree", e.span);
}

std::string render(const SElement& s, RenderFormat format) {
    return format == RenderFormat::coords ? s.coords_str() : s.canonical_str();
}

std::string unparse(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::literal:
            return "(" + fraction_str(e.lit_x_num, e.lit_x_den) + ", " +
                   fraction_str(e.lit_y_num, e.lit_y_den) + ")";
        case Expr::Kind::scalar_literal:
            return e.value.str();
        case Expr::Kind::base_unit:
            return "A";
        case Expr::Kind::neg:
            return "(-" + unparse(*e.lhs) + ")";
        case Expr::Kind::add:
            return "(" + unparse(*e.lhs) + " + " + unparse(*e.rhs) + ")";
        case Expr::Kind::sub:
            return "(" + unparse(*e.lhs) + " - " + unparse(*e.rhs) + ")";
        case Expr::Kind::mul:
            return "(" + unparse(*e.lhs) + " * " + unparse(*e.rhs) + ")";
        case Expr::Kind::div:
            return "(" + unparse(*e.lhs) + " / " + unparse(*e.rhs) + ")";
    }
    return "?";
}

bool has_product_chain(const Expr& e) {
    bool nested = e.kind == Expr::Kind::mul &&
                  (e.lhs->kind == Expr::Kind::mul || e.rhs->kind == Expr::Kind::mul);
    if (nested) return true;
    if (e.lhs && has_product_chain(*e.lhs)) return true;
    if (e.rhs && has_product_chain(*e.rhs)) return true;
    return false;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

// Returns false when the session should end.
bool handle_meta(const std::string& line, ReplConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    std::vector<std::string> words = split_words(line);
    const std::string& cmd = words[0];
    if (cmd == ":quit") return false;
    if (cmd == ":help") {
        out << "commands: :field rational | :field gf <p> | :field integer | "
               ":format coords|canonical | :check | :quit\n";
        return true;
    }
    if (cmd == ":field") {
        if (words.size() == 2 && words[1] == "rational") {
            cfg.ctx = Context::rationals();
            out << "field: rational\n";
        } else if (words.size() == 2 && words[1] == "integer") {
            cfg.ctx = Context::integers();
            out << "field: integer\n";
        } else if (words.size() == 3 && words[1] == "gf") {
            try {
                cfg.ctx = Context::gf(std::stoll(words[2]));
                out << "field: gf:" << words[2] << "\n";
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
            }
        } else {
            err << "error: usage: :field rational | :field gf <p> | :field integer\n";
        }
        return true;
    }
    if (cmd == ":format") {
        if (words.size() == 2 && words[1] == "coords") {
            cfg.format = RenderFormat::coords;
            out << "format: coords\n";
        } else if (words.size() == 2 && words[1] == "canonical") {
            cfg.format = RenderFormat::canonical;
            out << "format: canonical\n";
        } else {
            err << "error: usage: :format coords|canonical\n";
        }
        return true;
    }
    if (cmd == ":check") {
        if (cfg.ctx.backend() != Backend::prime_field) {
            err << "error: :check needs a prime field; use :field gf <p>\n";
            return true;
        }
        try {
            AxiomReport report = run_full_suite(cfg.ctx.modulus());
            out << report.table();
            out << (report.all_passed() ? "result: all checks passed\n"
                                        : "result: CHECKS FAILED\n");
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
        }
        return true;
    }
    err << "error: unknown command '" << cmd << "'; try :help\n";
    return true;
}

} // namespace

void print_diagnostic(std::ostream& os, std::string_view source, std::size_t pos,
                      const std::string& message) {
    if (pos > source.size()) pos = source.size();
    os << "error: " << message << "\n";
    os << "  " << source << "\n";
    os << "  " << std::string(pos, ' ') << "^\n";
}

int repl_session(ReplConfig config, std::istream& in, std::ostream& out,
                 std::ostream& err) {
    std::string line;
    while (true) {
        if (config.show_prompt) out << "sfield> " << std::flush;
        if (!std::getline(in, line)) break;
        std::string text = trim(line);
        if (text.empty()) continue;
        if (text[0] == ':') {
            if (!handle_meta(text, config, out, err)) return 0;
            continue;
        }
        try {
            ExprPtr ast = parse(text);
            if (has_product_chain(*ast)) {
                out << "note: '*' is not associative; parsed as " << unparse(*ast)
                    << "\n";
            }
            SElement value = evaluate(*ast, config.ctx);
            out << render(value, config.format) << "\n";
        } catch (const LexError& e) {
            print_diagnostic(err, text, e.position, e.what());
        } catch (const ParseError& e) {
            print_diagnostic(err, text, e.position, e.what());
        } catch (const EvalError& e) {
            print_diagnostic(err, text, e.span.begin, e.what());
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
        }
    }
    return in.bad() ? 1 : 0;
}

} // namespace sfield
