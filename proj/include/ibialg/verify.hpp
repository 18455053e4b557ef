#pragma once

// Verification suites run by `ibialg verify`, including the golden suite
// of worked examples.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "matrix.hpp"
#include "prelie.hpp"
#include "selector.hpp"
#include "text.hpp"
#include "word.hpp"

namespace ibialg
{

inline constexpr std::array<std::string_view, 9> suite_names{
    "coassoc", "cocycle", "antipode", "prelie", "jacobi", "representation", "bracket-closed-form", "paper-examples",
    "all"};

struct verify_options {
    std::size_t max_len = 6; // word length; univar degrees go up to 5 * max_len
    std::size_t cap = default_nilpotency_cap;
    std::uint64_t seed = 1;
    std::size_t random_samples = 100;
};

struct suite_outcome {
    enum class status { pass, fail, skipped };

    std::string suite;
    status verdict = status::pass;
    std::size_t checked = 0;
    std::string note;
    std::vector<std::string> inputs;
    std::optional<nlohmann::json> difference; // {"terms": ..., "text": ...}
};

struct verify_result {
    std::string algebra;
    std::vector<suite_outcome> suites;

    bool passed() const
    {
        for (const auto &s : suites)
            if (s.verdict == suite_outcome::status::fail)
                return false;
        return true;
    }
};

namespace detail
{

template <class Key>
void record_witness(suite_outcome &out, const law_report<Key> &r)
{
    out.verdict = suite_outcome::status::fail;
    out.note = r.law;
    for (const auto &in : r.witness->inputs)
        out.inputs.push_back(to_string(in));
    out.difference = std::visit(
        [](const auto &d) { return nlohmann::json{{"terms", terms_json(d)}, {"text", to_string(d)}}; },
        r.witness->difference);
}

/// Runs `body(check)` where `check(report)` counts and stops at the first
/// failure; library errors become a failure with the error text.
template <class Body>
suite_outcome run_checks(std::string suite, Body &&body)
{
    suite_outcome out;
    out.suite = std::move(suite);
    try {
        body([&](const auto &report) {
            ++out.checked;
            if (report.passed())
                return true;
            record_witness(out, report);
            return false;
        });
    } catch (const not_nilpotent_within_cap &e) {
        out.verdict = suite_outcome::status::fail;
        out.note = std::string("not nilpotent within cap: ") + e.what();
    }
    return out;
}

inline std::vector<monomial> monomials_up_to(std::size_t deg)
{
    std::vector<monomial> out;
    for (std::size_t e = 0; e <= deg; ++e)
        out.push_back({static_cast<unsigned>(e)});
    return out;
}

inline std::size_t size_of(const word &w)
{
    return w.length();
}

inline std::size_t size_of(const monomial &m)
{
    return m.exponent;
}

inline std::size_t size_of(const ematrix &)
{
    return 0;
}

/// Keys for single-input laws.
template <class Key>
std::vector<Key> sweep_keys(const algebra<Key> &A, const verify_options &o)
{
    if (A.finite_basis())
        return A.basis_keys();
    if constexpr (std::is_same_v<Key, word>)
        return words_up_to(A.space().alphabet.size(), o.max_len);
    else if constexpr (std::is_same_v<Key, monomial>)
        return monomials_up_to(5 * o.max_len);
    else
        return A.basis_keys();
}

/// Pair bound on total size for infinite bases.
template <class Key>
std::size_t pair_bound(const verify_options &o)
{
    return std::is_same_v<Key, monomial> ? 5 * o.max_len : o.max_len;
}

/// Keys for three-input laws: small enough for a cubic sweep.
template <class Key>
std::vector<Key> triple_keys(const algebra<Key> &A, const verify_options &o)
{
    if (A.finite_basis())
        return A.basis_keys();
    if constexpr (std::is_same_v<Key, word>)
        return words_up_to(A.space().alphabet.size(), std::min<std::size_t>(o.max_len, 2));
    else if constexpr (std::is_same_v<Key, monomial>)
        return monomials_up_to(std::min<std::size_t>(o.max_len, 4));
    else
        return A.basis_keys();
}

template <class Key>
suite_outcome suite_coassoc(const algebra<Key> &A, const verify_options &o)
{
    return run_checks("coassoc", [&](auto &&check) {
        for (const auto &k : sweep_keys(A, o))
            if (!check(check_coassoc(A, k)))
                return;
    });
}

template <class Key>
suite_outcome suite_cocycle(const algebra<Key> &A, const verify_options &o)
{
    return run_checks("cocycle", [&](auto &&check) {
        const auto keys = sweep_keys(A, o);
        const std::size_t bound = pair_bound<Key>(o);
        for (const auto &a : keys)
            for (const auto &b : keys) {
                if (!A.finite_basis() && size_of(a) + size_of(b) > bound)
                    continue;
                if (!check(check_cocycle(A, a, b)))
                    return;
            }
    });
}

/// S o S = id is only claimed for the Newtonian matrices; on k[x] it fails
/// (S(p)(x) = -p(x - 1)), so the caller opts in.
template <class Key>
suite_outcome suite_antipode(const algebra<Key> &A, const verify_options &o, bool involution)
{
    return run_checks("antipode", [&](auto &&check) {
        std::vector<Key> keys = A.finite_basis() ? A.basis_keys() : triple_keys(A, o);
        const linear_map<Key> S = antipode_map(A, o.cap);
        check(make_report<Key>("antipode-unit", {A.unit()}, S(A.unit()) + A.unit()));
        for (const auto &k : keys) {
            const element<Key> a = A.basis(k);
            if (!check(check_antipode_axiom(A, a, o.cap)))
                return;
            if (involution && !check(make_report<Key>("antipode-involution", {a}, S(S(a)) - a)))
                return;
        }
        for (const auto &x : keys)
            for (const auto &y : keys)
                if (!check(check_antipode_properties(A, A.basis(x), A.basis(y), o.cap)))
                    return;
        if constexpr (std::is_same_v<Key, ematrix>) {
            std::mt19937_64 rng(o.seed);
            for (std::size_t i = 0; i < o.random_samples; ++i) {
                const element<ematrix> m = random_integer_matrix(A.space_handle(), rng);
                if (!check(check_antipode_axiom(A, m, o.cap)))
                    return;
            }
        }
    });
}

template <class Key, class Law>
suite_outcome suite_triples(std::string name, const algebra<Key> &A, const verify_options &o, Law &&law)
{
    return run_checks(std::move(name), [&](auto &&check) {
        const auto keys = triple_keys(A, o);
        for (const auto &a : keys)
            for (const auto &b : keys)
                for (const auto &c : keys)
                    if (!check(law(A, A.basis(a), A.basis(b), A.basis(c))))
                        return;
    });
}

inline suite_outcome suite_bracket_closed_form(const algebra<ematrix> &A)
{
    return run_checks("bracket-closed-form", [&](auto &&check) {
        const auto &space = A.space_handle();
        const auto &keys = A.basis_keys();
        for (const auto &p : keys)
            for (const auto &q : keys) {
                const element<ematrix> generic = commutator_bracket(A, A.basis(p), A.basis(q));
                const std::vector<element<ematrix>> in{A.basis(p), A.basis(q)};
                if (!check(make_report<ematrix>("closed-form", in, matrix_bracket_closed_form(space, p, q) - generic)))
                    return;
                if (!check(make_report<ematrix>("case-table", in, matrix_bracket_case_table(space, p, q) - generic)))
                    return;
                if (!check(make_report<ematrix>("prelie-table", in,
                                                matrix_prelie_table(space, p, q)
                                                    - prelie_product(A, A.basis(p), A.basis(q)))))
                    return;
            }
        const auto tables = std::array{
            bracket_table<ematrix>(keys, [&](const auto &p, const auto &q) { return commutator_bracket(A, A.basis(p), A.basis(q)); }),
            bracket_table<ematrix>(keys, [&](const auto &p, const auto &q) { return matrix_bracket_closed_form(space, p, q); }),
            bracket_table<ematrix>(keys, [&](const auto &p, const auto &q) { return matrix_bracket_case_table(space, p, q); }),
        };
        for (const auto &t : tables)
            if (auto bad = t.antisymmetry_violation()) {
                const auto [p, q] = *bad;
                check(make_report<ematrix>("antisymmetry", {A.basis(p), A.basis(q)}, t(p, q) + t(q, p)));
                return;
            }
    });
}

template <class Key>
law_report<Key> golden(const algebra<Key> &A, std::string name, const std::type_identity_t<expression_value<Key>> &computed,
                       std::string_view expected)
{
    const expression_value<Key> want = parse_expression(A, expected);
    if (computed.index() != want.index())
        throw invalid_instance(name + ": computed and expected values have different kinds");
    if (computed.index() == 0)
        return make_report<Key>(std::move(name), {}, std::get<0>(computed) - std::get<0>(want));
    const auto &c = std::get<1>(computed);
    const auto &w = std::get<1>(want);
    if (c.legs() != w.legs())
        return make_report<Key>(std::move(name), {}, c);
    return make_report<Key>(std::move(name), {}, c - w);
}

} // namespace detail

/// Every worked example, as exact golden values.
inline suite_outcome golden_examples_suite()
{
    return detail::run_checks("paper-examples", [](auto &&check) {
        using detail::golden;
        const algebra<ematrix> M2 = matrix_algebra(2);
        const auto delta = [&](const tensor<ematrix> &t, std::size_t leg) {
            return expand_leg(t, leg, [&](const ematrix &k) { return M2.basis_coproduct(k); });
        };
        const element<ematrix> M = parse_element(M2, "[[1,0],[1,0]]");
        const element<ematrix> N = parse_element(M2, "[[0,1],[0,1]]");
        const tensor<ematrix> dM = coproduct(M2, M);
        const tensor<ematrix> dN = coproduct(M2, N);
        if (!check(golden(M2, "Delta(M)", dM, "-E[2,1] (x) E[2,1]"))
            || !check(golden(M2, "Delta(N)", dN, "E[1,1] (x) E[2,2]"))
            || !check(golden(M2, "(Delta x id)Delta(M)", delta(dM, 0), "E[2,1] (x) E[2,1] (x) E[2,1]"))
            || !check(golden(M2, "(id x Delta)Delta(M)", delta(dM, 1), "E[2,1] (x) E[2,1] (x) E[2,1]"))
            || !check(golden(M2, "(Delta x id)Delta(N)", delta(dN, 0), "0 (x) 0 (x) 0"))
            || !check(golden(M2, "(id x Delta)Delta(N)", delta(dN, 1), "0 (x) 0 (x) 0"))
            || !check(golden(M2, "Delta(M).N", bimodule_right(M2, dM, N), "-E[2,1] (x) E[2,2]"))
            || !check(golden(M2, "M.Delta(N)", bimodule_left(M2, M, dN), "(E[1,1] + E[2,1]) (x) E[2,2]"))
            || !check(golden(M2, "Delta(M).N + M.Delta(N)", bimodule_right(M2, dM, N) + bimodule_left(M2, M, dN),
                             "E[1,1] (x) E[2,2]"))
            || !check(golden(M2, "Delta(MN)", coproduct(M2, multiply(M2, M, N)), "E[1,1] (x) E[2,2]")))
            return;

        const auto &space = M2.space_handle();
        element<ematrix> by_formula(space);
        for (const auto &[p, c] : M.terms())
            for (const auto &[q, d] : N.terms())
                by_formula.add_scaled(matrix_bracket_closed_form(space, p, q), c * d);
        element<ematrix> sandwich(space);
        for (const auto &[legs, c] : dN.terms())
            sandwich.add_scaled(multiply(M2, multiply(M2, M2.basis(legs[0]), M), M2.basis(legs[1])), c);
        for (const auto &[legs, c] : dM.terms())
            sandwich.add_scaled(multiply(M2, multiply(M2, M2.basis(legs[0]), N), M2.basis(legs[1])), -c);
        if (!check(golden(M2, "[M,N] by formula", by_formula, "E[2,1]"))
            || !check(golden(M2, "[M,N] by Sweedler", sandwich, "E[2,1]"))
            || !check(golden(M2, "[M,N] commutator", commutator_bracket(M2, M, N), "E[2,1]"))
            || !check(golden(M2, "[E21,E12]", commutator_bracket(M2, M2.basis({2, 1}), M2.basis({1, 2})), "E[2,1]")))
            return;

        const algebra<word> W = word_algebra({"x", "y"});
        const auto w = [&](std::string_view s) { return parse_element(W, s); };
        const auto wdelta = [&](const tensor<word> &t, std::size_t leg) {
            return expand_leg(t, leg, [&](const word &k) { return W.basis_coproduct(k); });
        };
        const element<word> w1 = w("x*y"), w2 = w("y*x*y");
        const tensor<word> d1 = coproduct(W, w1), d2 = coproduct(W, w2);
        const std::string co_w1 = "x (x) x*y (x) y + x*y (x) y (x) y + x (x) x (x) x*y + L*x (x) y (x) y"
                                  " + L*x (x) x (x) y";
        const std::string co_w2 = "y (x) y*x*y (x) y + y (x) y*x (x) x*y + y (x) y (x) y*x*y"
                                  " + L*y (x) y*x (x) y + L*y (x) y (x) x*y"
                                  " + y*x (x) x*y (x) y + y*x (x) x (x) x*y + L*y*x (x) x (x) y"
                                  " + y*x*y (x) y (x) y"
                                  " + L*y (x) x*y (x) y + L*y (x) x (x) x*y + L^2*y (x) x (x) y"
                                  " + L*y*x (x) y (x) y";
        const std::string d12 = "x (x) x*y*y*x*y + x*y (x) y*y*x*y + x*y*y (x) y*x*y + x*y*y*x (x) x*y"
                                " + x*y*y*x*y (x) y + L*x (x) y*y*x*y + L*x*y (x) y*x*y + L*x*y*y (x) x*y"
                                " + L*x*y*y*x (x) y";
        const word xxyxy{std::string("\0\0\1\0\1", 5)};
        if (!check(golden(W, "Delta(xy)", d1, "x*y (x) y + x (x) x*y + L*x (x) y"))
            || !check(golden(W, "Delta(yxy)", d2,
                             "y*x*y (x) y + y*x (x) x*y + y (x) y*x*y + L*y*x (x) y + L*y (x) x*y"))
            || !check(golden(W, "(Delta x id)Delta(xy)", wdelta(d1, 0), co_w1))
            || !check(golden(W, "(id x Delta)Delta(xy)", wdelta(d1, 1), co_w1))
            || !check(golden(W, "(Delta x id)Delta(yxy)", wdelta(d2, 0), co_w2))
            || !check(golden(W, "(id x Delta)Delta(yxy)", wdelta(d2, 1), co_w2))
            || !check(golden(W, "w1.Delta(w2) + Delta(w1).w2 + L w1 (x) w2",
                             bimodule_left(W, w1, d2) + bimodule_right(W, d1, w2)
                                 + lambda_poly::lambda() * tensor_product(w1, w2),
                             d12))
            || !check(golden(W, "Delta(xyyxy)", coproduct(W, multiply(W, w1, w2)), d12))
            || !check(golden(W, "w[1,4]", W.basis(subword(xxyxy, 1, 4)), "x*x*y*x"))
            || !check(golden(W, "w[3,3]", W.basis(subword(xxyxy, 3, 3)), "y"))
            || !check(golden(W, "w[2,3]", W.basis(subword(xxyxy, 2, 3)), "x*y")))
            return;
    });
}

namespace detail
{

inline bool applicable(std::string_view suite, instance_kind kind, const lambda_poly &weight, std::string &why)
{
    const bool words = kind == instance_kind::word || kind == instance_kind::deconcat;
    if (suite == "antipode" || suite == "prelie" || suite == "jacobi" || suite == "representation") {
        if (!weight.is_zero()) {
            why = "requires weight 0, instance has weight " + to_string(weight);
            return false;
        }
        if (suite == "antipode" && words) {
            why = "D raises word length, so the antipode series never truncates on words";
            return false;
        }
    }
    if (suite == "bracket-closed-form" && kind != instance_kind::matrix) {
        why = "needs a matrix:N instance";
        return false;
    }
    return true;
}

template <class Key>
suite_outcome run_one(std::string_view suite, instance_kind kind, const algebra<Key> &A, const verify_options &o)
{
    if (suite == "coassoc")
        return suite_coassoc(A, o);
    if (suite == "cocycle")
        return suite_cocycle(A, o);
    if (suite == "antipode")
        return suite_antipode(A, o, kind == instance_kind::matrix);
    if (suite == "prelie")
        return suite_triples("prelie", A, o, [](const auto &...x) { return check_prelie_identity(x...); });
    if (suite == "jacobi")
        return suite_triples("jacobi", A, o, [](const auto &...x) { return check_jacobi(x...); });
    if (suite == "representation")
        return suite_triples("representation", A, o, [](const auto &...x) { return check_left_representation(x...); });
    if (suite == "bracket-closed-form") {
        if constexpr (std::is_same_v<Key, ematrix>)
            return suite_bracket_closed_form(A);
    }
    if (suite == "paper-examples")
        return golden_examples_suite();
    throw unknown_suite("unknown suite '" + std::string(suite) + "'");
}

} // namespace detail

/// Runs one suite, or every applicable suite for "all". Naming a suite
/// that does not apply to the instance is a usage error; "all" skips it.
inline verify_result run_verify(std::string_view suite, const instance &inst, const verify_options &o = {})
{
    if (std::find(suite_names.begin(), suite_names.end(), suite) == suite_names.end())
        throw unknown_suite("unknown suite '" + std::string(suite) + "'");
    verify_result out{inst.name(), {}};
    std::visit(
        [&](const auto &A) {
            std::string why;
            if (suite != "all") {
                if (!detail::applicable(suite, inst.kind, A.weight(), why)
                    && !(suite == "antipode" && A.weight().is_zero()))
                    throw usage_error("suite " + std::string(suite) + " does not apply to " + A.name() + ": " + why);
                out.suites.push_back(detail::run_one(suite, inst.kind, A, o));
                return;
            }
            for (std::size_t i = 0; i + 1 < suite_names.size(); ++i) {
                const std::string_view s = suite_names[i];
                if (detail::applicable(s, inst.kind, A.weight(), why)) {
                    out.suites.push_back(detail::run_one(s, inst.kind, A, o));
                } else {
                    suite_outcome skipped;
                    skipped.suite = std::string(s);
                    skipped.verdict = suite_outcome::status::skipped;
                    skipped.note = why;
                    out.suites.push_back(std::move(skipped));
                }
            }
        },
        inst.algebra);
    return out;
}

inline std::string to_string(const verify_result &r)
{
    std::string out;
    for (const auto &s : r.suites) {
        switch (s.verdict) {
        case suite_outcome::status::pass:
            out += "PASS " + s.suite + " on " + r.algebra + ": " + std::to_string(s.checked) + " checks\n";
            break;
        case suite_outcome::status::skipped:
            out += "SKIP " + s.suite + ": " + s.note + "\n";
            break;
        case suite_outcome::status::fail:
            out += "FAIL " + s.suite + " on " + r.algebra + ": " + s.note;
            if (s.difference) {
                out += " (check " + std::to_string(s.checked) + ")\n";
                out += "  inputs:";
                for (std::size_t i = 0; i < s.inputs.size(); ++i)
                    out += (i ? ", " : " ") + s.inputs[i];
                if (s.inputs.empty())
                    out += " (none)";
                out += "\n  difference: " + (*s.difference)["text"].get<std::string>() + "\n";
            } else {
                out += "\n";
            }
            break;
        }
    }
    out += r.passed() ? "verdict: pass\n" : "verdict: fail\n";
    return out;
}

inline nlohmann::json to_json(const verify_result &r)
{
    nlohmann::json suites = nlohmann::json::array();
    for (const auto &s : r.suites) {
        nlohmann::json j{{"suite", s.suite}, {"checks", s.checked}};
        j["verdict"] = s.verdict == suite_outcome::status::pass ? "pass"
                       : s.verdict == suite_outcome::status::fail ? "fail"
                                                                  : "skipped";
        if (!s.note.empty())
            j["note"] = s.note;
        if (s.difference)
            j["witness"] = {{"inputs", s.inputs}, {"difference", *s.difference}};
        suites.push_back(std::move(j));
    }
    return {{"algebra", r.algebra}, {"verdict", r.passed() ? "pass" : "fail"}, {"suites", suites}};
}

} // namespace ibialg
