#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfield/axiom_lab.hpp"
#include "sfield/expr.hpp"

#if defined(_WIN32)
#include <io.h>
#define SFIELD_ISATTY _isatty
#define SFIELD_FILENO _fileno
#else
#include <unistd.h>
#define SFIELD_ISATTY isatty
#define SFIELD_FILENO fileno
#endif

namespace {

using namespace sfield;

// "rational", "integer" or "gf:<p>".
Context parse_field(const std::string& spec) {
    if (spec == "rational") return Context::rationals();
    if (spec == "integer") return Context::integers();
    if (spec.rfind("gf:", 0) == 0) {
        return Context::gf(std::stoll(spec.substr(3)));
    }
    throw ConstructionError("unknown field '" + spec + "'; use rational, integer or gf:<p>");
}

int eval_once(const std::string& text, const Context& ctx, RenderFormat format,
              bool json_output) {
    try {
        ExprPtr ast = parse(text);
        SElement value = evaluate(*ast, ctx);
        if (json_output) {
            nlohmann::json doc;
            doc["x"] = value.x().str();
            doc["y"] = value.y().str();
            doc["text"] = render(value, format);
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << render(value, format) << "\n";
        }
        return 0;
    } catch (const LexError& e) {
        print_diagnostic(std::cerr, text, e.position, e.what());
        return 3;
    } catch (const ParseError& e) {
        print_diagnostic(std::cerr, text, e.position, e.what());
        return 3;
    } catch (const EvalError& e) {
        print_diagnostic(std::cerr, text, e.span.begin, e.what());
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int check_suite(const Context& ctx, bool json_output) {
    if (ctx.backend() != Backend::prime_field) {
        std::cerr << "error: --check needs a prime field; pass --field gf:<p>\n";
        return 2;
    }
    try {
        AxiomReport report = run_full_suite(ctx.modulus());
        if (json_output) {
            std::cout << report.json() << "\n";
        } else {
            std::cout << report.table();
            std::cout << (report.all_passed() ? "result: all checks passed\n"
                                              : "result: CHECKS FAILED\n");
        }
        return report.all_passed() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact pair-model arithmetic with a well-defined division by zero"};

    std::string field = "rational";
    std::string format = "coords";
    std::string expr_text;
    bool run_check = false;
    bool json_output = false;

    app.add_option("--field", field, "Coefficient field: rational, integer or gf:<p>")
        ->capture_default_str();
    app.add_option("--format", format, "Result rendering: coords or canonical")
        ->check(CLI::IsMember({"coords", "canonical"}))
        ->capture_default_str();
    auto* eval_opt = app.add_option("--eval", expr_text, "Evaluate one expression and exit");
    auto* check_flag =
        app.add_flag("--check", run_check, "Run the exhaustive axiom suite and exit");
    app.add_flag("--json", json_output, "Machine-readable output");
    eval_opt->excludes(check_flag);

    CLI11_PARSE(app, argc, argv);

    sfield::Context ctx = sfield::Context::rationals();
    try {
        ctx = parse_field(field);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    sfield::RenderFormat render_format = format == "canonical"
                                             ? sfield::RenderFormat::canonical
                                             : sfield::RenderFormat::coords;

    if (eval_opt->count() > 0) {
        return eval_once(expr_text, ctx, render_format, json_output);
    }
    if (run_check) {
        return check_suite(ctx, json_output);
    }

    sfield::ReplConfig config;
    config.ctx = ctx;
    config.format = render_format;
    config.show_prompt = SFIELD_ISATTY(SFIELD_FILENO(stdin)) != 0;
    return sfield::repl_session(config, std::cin, std::cout, std::cerr);
}
