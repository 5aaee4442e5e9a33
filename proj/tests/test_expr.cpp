#include <doctest.h>

#include <random>
#include <sstream>

#include "sfield/expr.hpp"

using namespace sfield;

namespace {

const Context Q = Context::rationals();

SElement q(long long x, long long y) {
    return {Scalar::rational(x), Scalar::rational(y)};
}

SElement eval(std::string_view text, const Context& ctx = Q) {
    return evaluate(*parse(text), ctx);
}

} // namespace

TEST_CASE("tokenize") {
    auto toks = tokenize("1/0");
    REQUIRE(toks.size() == 4); // includes end marker
    CHECK(toks[0].kind == TokenKind::number);
    CHECK(toks[0].lexeme == "1");
    CHECK(toks[1].kind == TokenKind::slash);
    CHECK(toks[2].kind == TokenKind::number);
    CHECK(toks[2].lexeme == "0");
    CHECK(toks[3].kind == TokenKind::end);

    toks = tokenize("2 + 3*A");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0].kind == TokenKind::number);
    CHECK(toks[1].kind == TokenKind::plus);
    CHECK(toks[2].kind == TokenKind::number);
    CHECK(toks[3].kind == TokenKind::star);
    CHECK(toks[4].kind == TokenKind::symbol_a);
    CHECK(toks[4].pos == 6);

    try {
        tokenize("2 $ 3");
        FAIL("expected LexError");
    } catch (const LexError& e) {
        CHECK(e.position == 2);
        CHECK(e.character == '$');
    }
}

TEST_CASE("the middle dot works as a product sign") {
    CHECK(eval("2\xC2\xB7" "3") == q(6, 0));
    CHECK(eval("2\xC2\xB7" "3") == eval("2*3"));
}

TEST_CASE("precedence and association") {
    CHECK(unparse(*parse("1+2*A")) == "(1 + (2 * A))");
    CHECK(unparse(*parse("2*3*4")) == "((2 * 3) * 4)");
    CHECK(unparse(*parse("1-2-3")) == "((1 - 2) - 3)");
    CHECK(unparse(*parse("-2*3")) == "((-2) * 3)");
    CHECK(unparse(*parse("2*-3")) == "(2 * (-3))");
    CHECK(unparse(*parse("(2, 3) / 2")) == "((2, 3) / 2)");
    CHECK(unparse(*parse("(1+2)*A")) == "((1 + 2) * A)");

    CHECK_FALSE(has_product_chain(*parse("2*3")));
    CHECK(has_product_chain(*parse("2*3*4")));
    CHECK(has_product_chain(*parse("2*(3*4)")));
    CHECK_FALSE(has_product_chain(*parse("(2*3)+(4*5)")));
}

TEST_CASE("parse errors carry a position and expectation") {
    try {
        parse("1+");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
    try {
        parse("(2,3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
        CHECK(e.expected == "')'");
    }
    try {
        parse("1 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
        CHECK(e.expected == "end of input");
    }
    CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("evaluation") {
    CHECK(eval("1/0") == q(0, 1));
    CHECK(eval("2 + 3*A") == q(3, 3));
    CHECK(eval("-A") == q(-1, -1));
    CHECK(eval("(2, 3) / 2") ==
          SElement(Scalar::rational(7, 4), Scalar::rational(3, 2)));
    CHECK(eval("(-1, 2) + (1, -2)") == q(0, 0));
    CHECK(eval("(7/4, 3/2)") == SElement(Scalar::rational(7, 4), Scalar::rational(3, 2)));
    CHECK(eval("((2, 3))") == q(2, 3));
    CHECK(eval("3/0", Context::gf(5)) ==
          SElement(Scalar::gf(0, 5), Scalar::gf(3, 5)));
    // literals reduce mod p
    CHECK(eval("7", Context::gf(5)) == SElement(Scalar::gf(2, 5), Scalar::gf(0, 5)));
    CHECK(eval("1/2", Context::gf(5)) == SElement(Scalar::gf(3, 5), Scalar::gf(0, 5)));
}

TEST_CASE("evaluation failures carry status and span") {
    try {
        eval("0/0");
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        REQUIRE(e.status.has_value());
        CHECK(*e.status == DivisionStatus::indeterminate);
        CHECK(e.span.begin == 0);
        CHECK(e.span.end == 3);
    }
    try {
        eval("(5, 7) / 0");
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(*e.status == DivisionStatus::no_solution);
    }
    try {
        eval("1 / (1, 1)");
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(*e.status == DivisionStatus::not_a_scalar_divisor);
    }
    try {
        eval("1/2", Context::integers());
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(*e.status == DivisionStatus::not_invertible);
    }
    // a fraction literal with no meaning over GF(5)
    CHECK_THROWS_AS(eval("(1/5, 0)", Context::gf(5)), EvalError);
}

TEST_CASE("error spans stay inside the input") {
    for (const char* bad : {"", "1+", "(2,3", "2 $ 3", "0/0", ")", "1 2", "A A"}) {
        std::string text(bad);
        try {
            eval(text);
        } catch (const LexError& e) {
            CHECK(e.position <= text.size());
        } catch (const ParseError& e) {
            CHECK(e.position <= text.size());
        } catch (const EvalError& e) {
            CHECK(e.span.begin <= text.size());
            CHECK(e.span.end <= text.size());
        }
    }
}

TEST_CASE("render") {
    CHECK(render(q(3, 3), RenderFormat::coords) == "(3, 3)");
    CHECK(render(q(0, 1), RenderFormat::canonical) == "0 - 1 + 1*A");
    CHECK(render(SElement(Scalar::rational(7, 4), Scalar::rational(3, 2)),
                 RenderFormat::coords) == "(7/4, 3/2)");
}

TEST_CASE("coords output reparses to the identical element") {
    std::mt19937_64 rng(0x9e4d);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 15);
    for (int i = 0; i < 300; ++i) {
        SElement s{Scalar::rational(num(rng), den(rng)),
                   Scalar::rational(num(rng), den(rng))};
        CHECK(eval(render(s, RenderFormat::coords)) == s);
    }
    Context gf7 = Context::gf(7);
    for (int i = 0; i < 100; ++i) {
        SElement s{Scalar::gf(num(rng), 7), Scalar::gf(num(rng), 7)};
        CHECK(eval(render(s, RenderFormat::coords), gf7) == s);
    }
}

TEST_CASE("evaluation is referentially transparent") {
    for (int i = 0; i < 3; ++i) {
        CHECK(eval("(2,3)*(1,4) - A/2") == eval("(2,3)*(1,4) - A/2"));
    }
}

TEST_CASE("repl session") {
    ReplConfig config;
    config.show_prompt = false;

    SUBCASE("evaluates lines and keeps going after errors") {
        std::istringstream in("3/0\n0/0\n2 + 3*A\n");
        std::ostringstream out, err;
        int rc = repl_session(config, in, out, err);
        CHECK(rc == 0);
        CHECK(out.str() == "(0, 3)\n(3, 3)\n");
        CHECK(err.str().find("indeterminate") != std::string::npos);
    }

    SUBCASE("meta commands switch field and format") {
        std::istringstream in(":field gf 5\n2/0\n:format canonical\n2/0\n:quit\n");
        std::ostringstream out, err;
        CHECK(repl_session(config, in, out, err) == 0);
        CHECK(out.str() == "field: gf:5\n(0, 2)\nformat: canonical\n0 - 1 + 2*A\n");
        CHECK(err.str().empty());
    }

    SUBCASE("product chains are echoed fully parenthesized") {
        std::istringstream in("2*3*4\n");
        std::ostringstream out, err;
        repl_session(config, in, out, err);
        CHECK(out.str().find("((2 * 3) * 4)") != std::string::npos);
    }

    SUBCASE("check command runs the suite") {
        std::istringstream in(":field gf 3\n:check\n");
        std::ostringstream out, err;
        repl_session(config, in, out, err);
        CHECK(out.str().find("result: all checks passed") != std::string::npos);
    }

    SUBCASE("check refuses non-prime-field backends") {
        std::istringstream in(":check\n");
        std::ostringstream out, err;
        repl_session(config, in, out, err);
        CHECK(err.str().find(":field gf") != std::string::npos);
    }

    SUBCASE("unknown commands do not end the session") {
        std::istringstream in(":bogus\n1+1\n");
        std::ostringstream out, err;
        CHECK(repl_session(config, in, out, err) == 0);
        CHECK(out.str() == "(2, 0)\n");
        CHECK(err.str().find("unknown command") != std::string::npos);
    }
}
