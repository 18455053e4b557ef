#pragma once

// Named instances, as selected on the command line:
//   matrix:N            M_N, Newtonian coproduct, weight 0
//   comatrix:N          M_N, classical comatrix coproduct
//   lmatrix:N:<L>       M -> ML (x) L - L (x) LM, needs L^2 = 0
//   rmatrix:N:<r>:<w>   Delta_r(a) = a.r - r.a - w (a (x) 1)
//   word:<letters>      free algebra, weighted coproduct (default weight L)
//   deconcat:<letters>  free algebra, deconcatenation, weight -1
//   univar              k[x], weighted coproduct (default weight L)
// Letters are either one character each ("xy") or comma separated
// ("x1,x2,x3").

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "text.hpp"
#include "word.hpp"

namespace ibialg
{

enum class instance_kind { matrix, comatrix, lmatrix, rmatrix, word, deconcat, univar };

using any_algebra = std::variant<algebra<ematrix>, algebra<word>, algebra<monomial>>;

struct instance {
    instance_kind kind;
    any_algebra algebra;

    const std::string &name() const
    {
        return std::visit([](const auto &A) -> const std::string & { return A.name(); }, algebra);
    }
};

namespace detail
{

inline int parse_dimension(std::string_view s)
{
    int n = 0;
    if (s.empty() || s.size() > 4)
        throw usage_error("bad matrix dimension '" + std::string(s) + "'");
    for (char c : s) {
        if (c < '0' || c > '9')
            throw usage_error("bad matrix dimension '" + std::string(s) + "'");
        n = 10 * n + (c - '0');
    }
    if (n < 1)
        throw usage_error("matrix dimension must be at least 1");
    return n;
}

inline std::vector<std::string> parse_alphabet(std::string_view s)
{
    std::vector<std::string> letters;
    if (s.find(',') == std::string_view::npos) {
        for (char c : s)
            letters.emplace_back(1, c);
        return letters;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        letters.emplace_back(s.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return letters;
}

} // namespace detail

/// Builds the instance named by `selector`. A weight override is accepted
/// for word, univar and rmatrix only.
inline instance make_instance(std::string_view selector, const std::optional<lambda_poly> &weight = std::nullopt)
{
    const auto colon = selector.find(':');
    const std::string_view head = selector.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : selector.substr(colon + 1);
    const auto no_weight = [&] {
        if (weight)
            throw usage_error("--weight does not apply to " + std::string(head) + " instances");
    };
    const auto need_rest = [&] {
        if (colon == std::string_view::npos || rest.empty())
            throw usage_error("selector '" + std::string(selector) + "' is missing its parameter");
    };

    if (head == "matrix" || head == "comatrix") {
        need_rest();
        no_weight();
        const int n = detail::parse_dimension(rest);
        if (head == "matrix")
            return {instance_kind::matrix, matrix_algebra(n)};
        return {instance_kind::comatrix, comatrix_algebra(n)};
    }
    if (head == "lmatrix") {
        need_rest();
        no_weight();
        const auto sep = rest.find(':');
        if (sep == std::string_view::npos)
            throw usage_error("expected lmatrix:N:<expr>");
        const algebra<ematrix> base = matrix_algebra(detail::parse_dimension(rest.substr(0, sep)));
        const element<ematrix> L = parse_element(base, rest.substr(sep + 1));
        return {instance_kind::lmatrix, l_coproduct_algebra(base.space().dim, L)};
    }
    if (head == "rmatrix") {
        need_rest();
        const auto first = rest.find(':');
        const auto last = rest.rfind(':');
        if (first == std::string_view::npos || first == last)
            throw usage_error("expected rmatrix:N:<r-expr>:<weight>");
        const algebra<ematrix> base = matrix_algebra(detail::parse_dimension(rest.substr(0, first)));
        const tensor<ematrix> r = parse_tensor(base, rest.substr(first + 1, last - first - 1));
        const lambda_poly w = weight ? *weight : parse_scalar(rest.substr(last + 1));
        return {instance_kind::rmatrix, coproduct_from_r(base, r, w, "rmatrix:" + std::to_string(base.space().dim)
                                                                       + ":" + to_string(r) + ":" + to_string(w))};
    }
    if (head == "word" || head == "deconcat") {
        need_rest();
        auto letters = detail::parse_alphabet(rest);
        if (head == "word")
            return {instance_kind::word, word_algebra(std::move(letters), weight.value_or(lambda_poly::lambda()))};
        no_weight();
        return {instance_kind::deconcat, deconcat_algebra(std::move(letters))};
    }
    if (head == "univar") {
        if (colon != std::string_view::npos)
            throw usage_error("univar takes no parameter");
        return {instance_kind::univar, univar_algebra(weight.value_or(lambda_poly::lambda()))};
    }
    throw usage_error("unknown algebra selector '" + std::string(selector) + "'");
}

} // namespace ibialg
