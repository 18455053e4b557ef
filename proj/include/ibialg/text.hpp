#pragma once

// Expression parsing and canonical emission.
//
// Grammar (`*` is mandatory, juxtaposition is an error):
//   expr    := ['-'] tensor (('+' | '-') tensor)*
//   tensor  := term ('(x)' term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer ['/' integer] | 'L' | 'lambda' | atom | '(' expr ')'
//   atom    := 'E' '[' integer ',' integer ']' | letter | 'x'
// The character sequence "(x)" is always the tensor separator; a
// parenthesized lone letter x must be written with inner spaces.

#include <cctype>
#include <cstddef>
#include <optional>
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
#include "scalar.hpp"
#include "word.hpp"

namespace ibialg
{

/// Parsed expression before it is bound to an algebra.
struct expression_ast {
    enum class node_kind { number, weight, atom, add, subtract, multiply, power, tensor };

    node_kind kind = node_kind::number;
    std::size_t position = 0;
    rational number;             // node_kind::number
    std::string name;            // node_kind::atom
    std::vector<integer> indices; // node_kind::atom, e.g. E[i,j]
    unsigned long exponent = 0;  // node_kind::power
    std::vector<expression_ast> children;
};

namespace detail
{

class expression_parser
{
public:
    explicit expression_parser(std::string_view text) : text_(text) {}

    expression_ast parse()
    {
        expression_ast e = parse_expr();
        skip_space();
        if (pos_ != text_.size())
            throw parse_error("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    using kind = expression_ast::node_kind;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_tensor_sep()
    {
        skip_space();
        return text_.substr(pos_, 3) == "(x)";
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c && !(c == '(' && at_tensor_sep())) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            skip_space();
            throw parse_error(std::string("expected '") + c + "'", pos_);
        }
    }

    static expression_ast binary(kind k, std::size_t pos, expression_ast a, expression_ast b)
    {
        expression_ast n;
        n.kind = k;
        n.position = pos;
        n.children.push_back(std::move(a));
        n.children.push_back(std::move(b));
        return n;
    }

    expression_ast parse_expr()
    {
        skip_space();
        const std::size_t start = pos_;
        expression_ast acc;
        if (accept('-')) {
            // unary minus is 0 - term
            expression_ast zero;
            zero.kind = kind::number;
            zero.position = start;
            zero.number = 0;
            acc = binary(kind::subtract, start, std::move(zero), parse_tensor());
        } else {
            acc = parse_tensor();
        }
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('+'))
                acc = binary(kind::add, at, std::move(acc), parse_tensor());
            else if (accept('-'))
                acc = binary(kind::subtract, at, std::move(acc), parse_tensor());
            else
                return acc;
        }
    }

    expression_ast parse_tensor()
    {
        skip_space();
        const std::size_t start = pos_;
        expression_ast first = parse_term();
        if (!at_tensor_sep())
            return first;
        expression_ast n;
        n.kind = kind::tensor;
        n.position = start;
        n.children.push_back(std::move(first));
        while (at_tensor_sep()) {
            pos_ += 3;
            n.children.push_back(parse_term());
        }
        return n;
    }

    expression_ast parse_term()
    {
        expression_ast acc = parse_factor();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (!accept('*'))
                return acc;
            acc = binary(kind::multiply, at, std::move(acc), parse_factor());
        }
    }

    expression_ast parse_factor()
    {
        expression_ast base = parse_primary();
        skip_space();
        const std::size_t at = pos_;
        if (!accept('^'))
            return base;
        skip_space();
        const integer e = parse_integer();
        if (!e.fits_ulong_p() || e > 4096)
            throw parse_error("exponent too large", at);
        expression_ast n;
        n.kind = kind::power;
        n.position = at;
        n.exponent = e.get_ui();
        n.children.push_back(std::move(base));
        return n;
    }

    integer parse_integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw parse_error("expected an integer", start);
        return integer(std::string(text_.substr(start, pos_ - start)));
    }

    expression_ast parse_primary()
    {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size())
            throw parse_error("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (at_tensor_sep())
            throw parse_error("unexpected tensor separator", pos_);
        if (accept('(')) {
            expression_ast inner = parse_expr();
            expect(')');
            return inner;
        }
        expression_ast n;
        n.position = start;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            n.kind = kind::number;
            const integer num = parse_integer();
            integer den(1);
            skip_space();
            if (accept('/')) {
                den = parse_integer();
                if (den == 0)
                    throw parse_error("zero denominator", start);
            }
            n.number = rational(num, den);
            n.number.canonicalize();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            n.name = std::string(text_.substr(start, pos_ - start));
            if (is_weight_symbol(n.name)) {
                n.kind = kind::weight;
                return n;
            }
            n.kind = kind::atom;
            if (accept('[')) {
                n.indices.push_back(parse_integer());
                while (accept(','))
                    n.indices.push_back(parse_integer());
                expect(']');
            }
            return n;
        }
        throw parse_error("unexpected '" + std::string(1, c) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Atom resolution per basis kind.

inline ematrix resolve_atom(const matrix_space &space, const expression_ast &a)
{
    if (a.name != "E" || a.indices.size() != 2)
        throw unknown_atom("unknown atom '" + a.name + "' in " + space.name(), a.position);
    for (const auto &v : a.indices)
        if (!v.fits_sint_p())
            throw dimension_mismatch("matrix index out of range");
    const ematrix e{static_cast<int>(a.indices[0].get_si()), static_cast<int>(a.indices[1].get_si())};
    space.validate(e);
    return e;
}

inline word resolve_atom(const word_space &space, const expression_ast &a)
{
    const int idx = a.indices.empty() ? space.find(a.name) : -1;
    if (idx < 0)
        throw unknown_atom("unknown atom '" + a.name + "' in " + space.name(), a.position);
    return word{std::string(1, static_cast<char>(idx))};
}

inline monomial resolve_atom(const univar_space &space, const expression_ast &a)
{
    if (a.name != "x" || !a.indices.empty())
        throw unknown_atom("unknown atom '" + a.name + "' in " + space.name(), a.position);
    return monomial{1};
}

} // namespace detail

inline expression_ast parse_ast(std::string_view text)
{
    return detail::expression_parser(text).parse();
}

inline lambda_poly evaluate_scalar(const expression_ast &n)
{
    using kind = expression_ast::node_kind;
    switch (n.kind) {
    case kind::number:
        return lambda_poly(n.number);
    case kind::weight:
        return lambda_poly::lambda();
    case kind::atom:
        throw unknown_atom("'" + n.name + "' is not a scalar", n.position);
    case kind::add:
        return evaluate_scalar(n.children[0]) + evaluate_scalar(n.children[1]);
    case kind::subtract:
        return evaluate_scalar(n.children[0]) - evaluate_scalar(n.children[1]);
    case kind::multiply:
        return evaluate_scalar(n.children[0]) * evaluate_scalar(n.children[1]);
    case kind::power: {
        const lambda_poly base = evaluate_scalar(n.children[0]);
        lambda_poly out(1);
        for (unsigned long i = 0; i < n.exponent; ++i)
            out *= base;
        return out;
    }
    case kind::tensor:
        throw parse_error("a scalar cannot contain a tensor separator", n.position);
    }
    throw parse_error("malformed expression", n.position);
}

/// "2*L - 1/3" and friends.
inline lambda_poly parse_scalar(std::string_view text)
{
    return evaluate_scalar(parse_ast(text));
}

template <class Key>
using expression_value = std::variant<element<Key>, tensor<Key>>;

namespace detail
{

template <class Key>
std::size_t legs_of(const expression_value<Key> &v)
{
    return v.index() == 0 ? 1 : std::get<1>(v).legs();
}

template <class Key>
element<Key> as_element(expression_value<Key> v, std::size_t pos)
{
    if (v.index() != 0)
        throw parse_error("expected an algebra element, found a tensor", pos);
    return std::get<0>(std::move(v));
}

template <class Key>
expression_value<Key> evaluate(const algebra<Key> &A, const expression_ast &n)
{
    using kind = expression_ast::node_kind;
    switch (n.kind) {
    case kind::number:
        return lambda_poly(n.number) * A.unit();
    case kind::weight:
        return lambda_poly::lambda() * A.unit();
    case kind::atom:
        return A.basis(resolve_atom(A.space(), n));
    case kind::add:
    case kind::subtract: {
        auto a = evaluate(A, n.children[0]);
        auto b = evaluate(A, n.children[1]);
        // The zero element is also the zero of every tensor power, which
        // covers unary minus (0 - t) on tensors.
        if (a.index() == 0 && b.index() == 1 && std::get<0>(a).is_zero())
            a = tensor<Key>(A.space_handle(), std::get<1>(b).legs());
        if (b.index() == 0 && a.index() == 1 && std::get<0>(b).is_zero())
            b = tensor<Key>(A.space_handle(), std::get<1>(a).legs());
        if (legs_of(a) != legs_of(b))
            throw parse_error("cannot add terms with different numbers of tensor legs", n.position);
        const lambda_poly sign = n.kind == kind::add ? lambda_poly(1) : lambda_poly(-1);
        if (a.index() == 0) {
            std::get<0>(a).add_scaled(std::get<0>(b), sign);
        } else {
            std::get<1>(a).add_scaled(std::get<1>(b), sign);
        }
        return a;
    }
    case kind::multiply:
        return multiply(A, as_element(evaluate(A, n.children[0]), n.position),
                        as_element(evaluate(A, n.children[1]), n.position));
    case kind::power: {
        const element<Key> base = as_element(evaluate(A, n.children[0]), n.position);
        element<Key> out = A.unit();
        for (unsigned long i = 0; i < n.exponent; ++i)
            out = multiply(A, out, base);
        return out;
    }
    case kind::tensor: {
        tensor<Key> t = tensor_product(as_element(evaluate(A, n.children[0]), n.children[0].position),
                                       as_element(evaluate(A, n.children[1]), n.children[1].position));
        for (std::size_t i = 2; i < n.children.size(); ++i)
            t = tensor_product(t, as_element(evaluate(A, n.children[i]), n.children[i].position));
        return t;
    }
    }
    throw parse_error("malformed expression", n.position);
}

inline bool looks_dense(std::string_view text)
{
    const auto p = text.find_first_not_of(" \t\n");
    return p != std::string_view::npos && text[p] == '[';
}

inline element<ematrix> parse_dense(const space_ptr<ematrix> &space, std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw parse_error("malformed dense matrix", e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_array())
        throw parse_error("dense matrix must be a list of rows", 0);
    std::vector<std::vector<rational>> rows;
    for (const auto &row : j) {
        if (!row.is_array())
            throw parse_error("dense matrix must be a list of rows", 0);
        auto &r = rows.emplace_back();
        for (const auto &v : row) {
            if (!v.is_number_integer())
                throw parse_error("dense matrix entries must be integers", 0);
            r.emplace_back(rational(v.get<long>()));
        }
    }
    return from_dense(space, rows);
}

} // namespace detail

/// Parses an element or a tensor. Matrix algebras also accept dense rows
/// such as [[1,0],[1,0]].
template <class Key>
expression_value<Key> parse_expression(const algebra<Key> &A, std::string_view text)
{
    if constexpr (std::is_same_v<Key, ematrix>) {
        if (detail::looks_dense(text))
            return detail::parse_dense(A.space_handle(), text);
    }
    return detail::evaluate(A, parse_ast(text));
}

template <class Key>
element<Key> parse_element(const algebra<Key> &A, std::string_view text)
{
    return detail::as_element(parse_expression(A, text), 0);
}

template <class Key>
tensor<Key> parse_tensor(const algebra<Key> &A, std::string_view text)
{
    auto v = parse_expression(A, text);
    if (v.index() == 0) {
        if (std::get<0>(v).is_zero())
            throw parse_error("expected a tensor; write a zero tensor as 0 (x) 0", 0);
        throw parse_error("expected a tensor, found an algebra element", 0);
    }
    return std::get<1>(std::move(v));
}

// ---------------------------------------------------------------------------
// JSON

/// {"poly": [[degree, "num/den"], ...]} in ascending degree.
inline nlohmann::json to_json(const lambda_poly &p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[d, c] : p.terms())
        terms.push_back(nlohmann::json::array({d, to_fraction_string(c)}));
    return nlohmann::json{{"poly", terms}};
}

template <class Key>
nlohmann::json terms_json(const element<Key> &a)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[k, c] : a.terms())
        terms.push_back({{"coeff", to_json(c)}, {"legs", nlohmann::json::array({a.space().format(k)})}});
    return terms;
}

template <class Key>
nlohmann::json terms_json(const tensor<Key> &t)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[legs, c] : t.terms()) {
        nlohmann::json names = nlohmann::json::array();
        for (const auto &k : legs)
            names.push_back(t.space().format(k));
        terms.push_back({{"coeff", to_json(c)}, {"legs", names}});
    }
    return terms;
}

template <class Key, class Value>
nlohmann::json to_json(const algebra<Key> &A, const Value &v)
{
    return nlohmann::json{{"algebra", A.name()}, {"weight", to_json(A.weight())}, {"terms", terms_json(v)}};
}

template <class Key>
nlohmann::json to_json(const algebra<Key> &A, const law_report<Key> &r)
{
    nlohmann::json out{{"algebra", A.name()},
                       {"weight", to_json(A.weight())},
                       {"law", r.law},
                       {"verdict", r.passed() ? "pass" : "fail"}};
    if (r.witness) {
        nlohmann::json inputs = nlohmann::json::array();
        for (const auto &in : r.witness->inputs)
            inputs.push_back(to_string(in));
        const auto diff = std::visit([](const auto &d) { return terms_json(d); }, r.witness->difference);
        const auto text = std::visit([](const auto &d) { return to_string(d); }, r.witness->difference);
        out["witness"] = {{"inputs", inputs}, {"difference", {{"terms", diff}, {"text", text}}}};
    }
    return out;
}

template <class Key>
std::string to_string(const law_report<Key> &r)
{
    std::string out = (r.passed() ? "PASS " : "FAIL ") + r.law;
    if (r.witness) {
        out += "\n  inputs:";
        for (std::size_t i = 0; i < r.witness->inputs.size(); ++i)
            out += (i ? ", " : " ") + to_string(r.witness->inputs[i]);
        out += "\n  difference: " + std::visit([](const auto &d) { return to_string(d); }, r.witness->difference);
    }
    return out;
}

enum class output_format { text, json };

template <class Key, class Value>
std::string emit(const algebra<Key> &A, const Value &v, output_format f)
{
    if (f == output_format::json)
        return to_json(A, v).dump(2);
    return to_string(v);
}

} // namespace ibialg
