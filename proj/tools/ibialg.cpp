// ibialg: command-line front end.
//
// Exit status: 0 success, 1 law violation (including a D that is not
// nilpotent within the cap), 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ibialg/ibialg.hpp"

namespace
{

using namespace ibialg;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct options {
    std::string algebra;
    std::string weight;
    std::string expr, lhs, rhs;
    std::string suite;
    std::size_t cap = default_nilpotency_cap;
    std::size_t max_len = 6;
    std::uint64_t seed = 1;
    bool json = false;
    bool closed_form = false;
    bool table = false;
};

template <class Key, class Value>
void print(const algebra<Key> &A, const Value &v, const options &o)
{
    std::cout << emit(A, v, o.json ? output_format::json : output_format::text) << '\n';
}

/// Sum over terms of a basis-level bracket.
element<ematrix> extend_bracket(const algebra<ematrix> &A, const element<ematrix> &a, const element<ematrix> &b,
                                bool closed_form)
{
    detail::require_member(A, a);
    detail::require_member(A, b);
    element<ematrix> out = A.zero();
    for (const auto &[p, c] : a.terms())
        for (const auto &[q, d] : b.terms())
            out.add_scaled(closed_form ? matrix_bracket_closed_form(A.space_handle(), p, q)
                                       : matrix_bracket_case_table(A.space_handle(), p, q),
                           c * d);
    return out;
}

template <class Key>
int run_operation(const std::string &command, const instance &inst, const algebra<Key> &A, const options &o)
{
    if (command == "coproduct") {
        print(A, coproduct(A, parse_element(A, o.expr)), o);
    } else if (command == "antipode") {
        print(A, antipode(A, parse_element(A, o.expr), o.cap), o);
    } else if (command == "multiply") {
        print(A, multiply(A, parse_element(A, o.lhs), parse_element(A, o.rhs)), o);
    } else if (command == "prelie") {
        print(A, prelie_product(A, parse_element(A, o.lhs), parse_element(A, o.rhs)), o);
    } else if (command == "bracket") {
        const element<Key> a = parse_element(A, o.lhs);
        const element<Key> b = parse_element(A, o.rhs);
        if (!o.closed_form && !o.table) {
            print(A, commutator_bracket(A, a, b), o);
            return exit_ok;
        }
        if constexpr (std::is_same_v<Key, ematrix>) {
            if (inst.kind == instance_kind::matrix) {
                print(A, extend_bracket(A, a, b, o.closed_form), o);
                return exit_ok;
            }
        }
        throw usage_error("--closed-form and --table need a matrix:N instance");
    }
    return exit_ok;
}

int run(const std::string &command, const options &o)
{
    std::optional<lambda_poly> weight;
    if (!o.weight.empty())
        weight = parse_scalar(o.weight);
    const instance inst = make_instance(o.algebra, weight);
    if (command == "verify") {
        const verify_options vo{o.max_len, o.cap, o.seed};
        const verify_result r = run_verify(o.suite, inst, vo);
        if (o.json)
            std::cout << to_json(r).dump(2) << '\n';
        else
            std::cout << to_string(r);
        return r.passed() ? exit_ok : exit_violation;
    }
    return std::visit([&](const auto &A) { return run_operation(command, inst, A, o); }, inst.algebra);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact computations in weighted infinitesimal unitary bialgebras over Q[L]"};
    app.require_subcommand(1);
    app.fallthrough();
    options o;
    app.add_option("--algebra", o.algebra,
                   "matrix:N | comatrix:N | lmatrix:N:<expr> | rmatrix:N:<r-expr>:<weight> | word:<letters> | "
                   "deconcat:<letters> | univar")
        ->required();
    app.add_option("--weight", o.weight, "weight override (word, univar, rmatrix)");
    app.add_flag("--json", o.json, "emit JSON");

    auto *coproduct = app.add_subcommand("coproduct", "Delta(expr)");
    coproduct->add_option("--expr", o.expr)->required();
    auto *antipode = app.add_subcommand("antipode", "S(expr), weight 0 only");
    antipode->add_option("--expr", o.expr)->required();
    antipode->add_option("--cap", o.cap, "nilpotency cap")->capture_default_str();
    for (auto [name, help] : {std::pair{"multiply", "lhs * rhs"}, std::pair{"prelie", "lhs |> rhs, weight 0 only"},
                              std::pair{"bracket", "[lhs, rhs], weight 0 only"}}) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--lhs", o.lhs)->required();
        sub->add_option("--rhs", o.rhs)->required();
        if (std::string(name) == "bracket") {
            auto *cf = sub->add_flag("--closed-form", o.closed_form, "sgn-based closed form on E[i,j]");
            auto *tb = sub->add_flag("--table", o.table, "case table on E[i,j]");
            cf->excludes(tb);
        }
    }
    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite)
        ->required()
        ->check(CLI::IsMember({"coassoc", "cocycle", "antipode", "prelie", "jacobi", "representation",
                               "bracket-closed-form", "paper-examples", "all"}));
    verify->add_option("--max-len", o.max_len, "word length bound")->capture_default_str();
    verify->add_option("--cap", o.cap, "nilpotency cap")->capture_default_str();
    verify->add_option("--seed", o.seed, "seed for random matrices")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), o);
    } catch (const not_nilpotent_within_cap &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_violation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
