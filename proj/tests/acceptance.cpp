// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "corpus.hpp"
#include "ibialg/ibialg.hpp"
#include "oracles.hpp"

using namespace ibialg;

namespace
{

/// Collects the reason for the first failed expectation.
struct checker {
    std::string failure;

    bool operator()(bool ok, const std::string &what)
    {
        if (!ok && failure.empty())
            failure = what;
        return ok;
    }
    template <class Key>
    bool operator()(const law_report<Key> &r, const std::string &what)
    {
        if (r.passed())
            return true;
        return (*this)(false, what + ": " + to_string(r));
    }
    template <class Key>
    bool operator()(const sweep_report<Key> &r, const std::string &what)
    {
        if (r.passed())
            return true;
        return (*this)(false, what + ": " + to_string(*r.first_failure));
    }
};

struct criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<std::string(checker &)> body; // returns a short summary
};

std::string golden_examples(checker &ok)
{
    const suite_outcome s = golden_examples_suite();
    ok(s.verdict == suite_outcome::status::pass, "golden " + s.note);
    return std::to_string(s.checked) + " golden values";
}

std::string newtonian_laws(checker &ok)
{
    std::size_t keys = 0, pairs = 0;
    for (int n = 2; n <= 5; ++n) {
        const auto A = matrix_algebra(n);
        const auto co = sweep_coassoc(A, A.basis_keys());
        const auto cy = sweep_cocycle(A, A.basis_keys());
        ok(co, "coassoc n=" + std::to_string(n));
        ok(cy, "cocycle n=" + std::to_string(n));
        keys += co.checked;
        pairs += cy.checked;
    }
    // every ordered pair of two-term elements E_ab + E_cd in M_5
    const auto A = matrix_algebra(5);
    std::vector<element<ematrix>> two_term;
    for (const auto &p : A.basis_keys())
        for (const auto &q : A.basis_keys())
            two_term.push_back(A.basis(p) + A.basis(q));
    std::size_t extra = 0;
    for (const auto &a : two_term)
        for (const auto &b : two_term) {
            ++extra;
            if (!ok(check_cocycle(A, a, b), "cocycle on two-term elements"))
                return "";
        }
    return std::to_string(keys) + " keys, " + std::to_string(pairs) + " basis pairs, " + std::to_string(extra)
           + " two-term pairs at n=5";
}

std::string matrix_antipode(checker &ok)
{
    std::size_t count = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto A = matrix_algebra(n);
        for (const auto &k : A.basis_keys()) {
            const auto a = A.basis(k);
            ok(d_map(A, a).is_zero(), "D(" + to_string(a) + ") != 0");
            const auto s = antipode(A, a);
            ok(s == -a, "S(" + to_string(a) + ") = " + to_string(s));
            ok(antipode(A, s) == a, "S(S(" + to_string(a) + ")) != id");
            ok(check_antipode_axiom(A, a), "axiom n=" + std::to_string(n));
            ++count;
        }
        ok(antipode(A, A.unit()) == -A.unit(), "S(1) != -1 at n=" + std::to_string(n));
    }
    const auto M3 = matrix_algebra(3);
    for (const auto &p : M3.basis_keys())
        for (const auto &q : M3.basis_keys())
            ok(check_antipode_properties(M3, M3.basis(p), M3.basis(q)), "properties on basis pairs");
    std::mt19937_64 rng(1);
    std::vector<element<ematrix>> samples;
    for (int i = 0; i < 100; ++i)
        samples.push_back(oracle::from_dense(M3, oracle::random_dense(3, rng)));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto &m = samples[i];
        ok(antipode(M3, m) == -m, "S != -id on " + to_string(m));
        ok(antipode(M3, antipode(M3, m)) == m, "S o S != id on " + to_string(m));
        ok(check_antipode_axiom(M3, m), "axiom on random matrix");
        ok(check_antipode_properties(M3, m, samples[(i + 1) % samples.size()]), "properties on random matrices");
    }
    return std::to_string(count) + " basis keys for n <= 6, 100 random matrices in M_3";
}

std::string word_laws(checker &ok)
{
    const auto W = word_algebra({"x", "y"});
    const auto words = words_up_to(2, 6);
    ok(words.size() == 127, "expected 127 words");
    const auto co = sweep_coassoc(W, words);
    ok(co, "coassoc on words");
    std::size_t bounded = 0, all = 0;
    for (const auto &a : words)
        for (const auto &b : words) {
            ++all;
            if (a.letters.size() + b.letters.size() <= 6)
                ++bounded;
            if (!ok(check_cocycle(W, a, b), "cocycle on word pairs"))
                return "";
        }
    return std::to_string(co.checked) + " words, " + std::to_string(bounded) + " pairs of total length <= 6, "
           + std::to_string(all) + " pairs of length <= 6 each";
}

std::string other_instances(checker &ok)
{
    const auto D = deconcat_algebra({"x", "y"});
    const auto words = words_up_to(2, 5);
    const auto co = sweep_coassoc(D, words);
    const auto cy = sweep_cocycle(D, words);
    ok(co, "deconcat coassoc");
    ok(cy, "deconcat cocycle");

    const auto P = univar_algebra(lambda_poly::lambda());
    std::size_t coassoc = 0, cocycle = 0;
    for (unsigned n = 0; n <= 30; ++n, ++coassoc)
        ok(check_coassoc(P, monomial{n}), "univar coassoc x^" + std::to_string(n));
    for (unsigned m = 0; m <= 20; ++m)
        for (unsigned n = 0; m + n <= 20; ++n, ++cocycle)
            ok(check_cocycle(P, monomial{m}, monomial{n}), "univar cocycle");
    return "deconcat " + std::to_string(co.checked) + " words and " + std::to_string(cy.checked) + " pairs; univar "
           + std::to_string(coassoc) + " coassoc, " + std::to_string(cocycle) + " cocycle";
}

std::string prelie_laws(checker &ok)
{
    std::size_t triples = 0;
    for (int n : {3, 4}) {
        const auto A = matrix_algebra(n);
        const auto keys = A.basis_keys();
        for (const auto &a : keys)
            for (const auto &b : keys)
                for (const auto &c : keys) {
                    ++triples;
                    const auto x = A.basis(a), y = A.basis(b), z = A.basis(c);
                    ok(check_prelie_identity(A, x, y, z), "pre-Lie identity");
                    ok(check_jacobi(A, x, y, z), "Jacobi");
                    ok(check_left_representation(A, x, y, z), "left representation");
                }
    }
    std::size_t pairs = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto A = matrix_algebra(n);
        const auto &s = A.space_handle();
        const bracket_table<ematrix> generic(A.basis_keys(), [&](const auto &p, const auto &q) {
            return commutator_bracket(A, A.basis(p), A.basis(q));
        });
        const bracket_table<ematrix> closed(A.basis_keys(),
                                            [&](const auto &p, const auto &q) { return matrix_bracket_closed_form(s, p, q); });
        const bracket_table<ematrix> table(A.basis_keys(),
                                           [&](const auto &p, const auto &q) { return matrix_bracket_case_table(s, p, q); });
        ok(generic == closed, "closed form differs from the commutator at n=" + std::to_string(n));
        ok(generic == table, "case table differs from the commutator at n=" + std::to_string(n));
        ok(!generic.antisymmetry_violation() && !closed.antisymmetry_violation()
               && !table.antisymmetry_violation(),
           "antisymmetry at n=" + std::to_string(n));
        pairs += generic.entries().size();
    }
    return std::to_string(triples) + " triples, " + std::to_string(pairs) + " bracket pairs for n <= 6";
}

std::string negative_controls(checker &ok)
{
    bool rejected = false;
    try {
        (void)make_instance("lmatrix:2:E[1,1]");
    } catch (const l_square_not_zero &) {
        rejected = true;
    }
    ok(rejected, "lmatrix with L = E[1,1] was accepted");

    const instance r = make_instance("rmatrix:2:E[1,1] (x) E[1,1]:0");
    const auto &R = std::get<algebra<ematrix>>(r.algebra);
    const auto co = sweep_coassoc(R, R.basis_keys());
    ok(!co.passed(), "coassoc passed on the r-coproduct");
    ok(sweep_cocycle(R, R.basis_keys()), "cocycle on the r-coproduct");

    bool capped = false;
    const auto W0 = word_algebra({"x", "y"}, 0);
    try {
        (void)antipode(W0, W0.basis(word{{0}}), 64);
    } catch (const not_nilpotent_within_cap &) {
        capped = true;
    }
    ok(capped, "antipode on weight-0 words did not hit the cap");
    return "L^2 != 0 rejected; coassoc FAIL at " + (co.first_failure ? to_string(co.first_failure->witness->inputs[0]) : "?")
           + " with cocycle PASS; NotNilpotentWithinCap at cap 64";
}

std::string comatrix_contrast(checker &ok)
{
    for (int n = 1; n <= 5; ++n) {
        const auto C = comatrix_algebra(n);
        ok(sweep_coassoc(C, C.basis_keys()), "comatrix coassoc n=" + std::to_string(n));
        for (const auto &k : C.basis_keys())
            ok(check_counit(C, comatrix_counit, C.basis(k)), "comatrix counit n=" + std::to_string(n));
    }
    for (int n = 2; n <= 8; ++n) {
        const auto C = comatrix_algebra(n);
        const auto M = matrix_algebra(n);
        ok(C.basis_coproduct({1, 2}) != M.basis_coproduct({1, 2}),
           "Newtonian and classical agree on E[1,2] at n=" + std::to_string(n));
    }
    return "coassoc and counits for n <= 5, contrast on E[1,2] for n = 2..8";
}

std::string cli_contract(checker &ok)
{
    for (const auto &e : corpus::expressions) {
        const instance inst = make_instance(e.algebra);
        std::visit(
            [&](const auto &A) {
                const auto first = parse_expression(A, e.text);
                const std::string emitted = std::visit([](const auto &v) { return to_string(v); }, first);
                ok(parse_expression(A, emitted) == first, "round trip of " + std::string(e.text));
            },
            inst.algebra);
    }
    const auto all = cli::run({"verify", "--suite", "all", "--algebra", "matrix:3"});
    ok(all.status == 0, "verify all on matrix:3 exited " + std::to_string(all.status));
    const auto neg = cli::run({"verify", "--suite", "coassoc", "--algebra", "rmatrix:2:E[1,1] (x) E[1,1]:0"});
    ok(neg.status == 1, "negative control exited " + std::to_string(neg.status));
    ok(neg.out.find("inputs: E[1,2]") != std::string::npos && neg.out.find("difference: ") != std::string::npos,
       "negative control printed no witness");
    for (const auto &args : {std::initializer_list<std::string>{"verify", "--suite", "all", "--algebra", "matrix:3"},
                             {"--json", "coproduct", "--algebra", "word:xy", "--expr", "x*y*y*x*y"}}) {
        const auto a = cli::run(args), b = cli::run(args);
        ok(a.out == b.out && a.status == b.status, "repeated runs differ");
    }
    return std::to_string(corpus::expressions.size()) + " expressions; exit codes 0 and 1; repeat runs identical";
}

} // namespace

int main()
{
    const std::vector<criterion> criteria{
        {1, "worked examples", 1, golden_examples},
        {2, "Newtonian cocycle and coassociativity, n = 2..5", 30, newtonian_laws},
        {3, "matrix antipode", 5, matrix_antipode},
        {4, "weighted words at generic L", 10, word_laws},
        {5, "deconcatenation and univariate instances", 5, other_instances},
        {6, "pre-Lie, Jacobi, representation and bracket forms", 60, prelie_laws},
        {7, "negative controls", 5, negative_controls},
        {8, "classical comatrix contrast", 5, comatrix_contrast},
        {9, "CLI contract", 10, cli_contract},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        checker ok;
        std::string summary;
        const auto start = std::chrono::steady_clock::now();
        try {
            summary = c.body(ok);
        } catch (const std::exception &e) {
            ok(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok(secs < c.limit_seconds, "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        char time[32];
        std::snprintf(time, sizeof time, "%.2f s", secs);
        if (ok.failure.empty()) {
            std::cout << "PASS criterion " << c.number << " (" << c.title << "): " << summary << " [" << time << "]\n";
        } else {
            ++failed;
            std::cout << "FAIL criterion " << c.number << " (" << c.title << "): " << ok.failure << " [" << time
                      << "]\n";
        }
    }
    return failed == 0 ? 0 : 1;
}
