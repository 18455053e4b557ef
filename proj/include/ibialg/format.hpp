#pragma once

// Canonical text form of elements and tensors. Terms appear in key order,
// legs are separated by " (x) ", and the output re-parses to an equal value.

#include <ostream>
#include <string>

#include "lincomb.hpp"
#include "scalar.hpp"

namespace ibialg
{

namespace detail
{

/// Appends one term "coeff*basis" with its sign handled by the joiner.
inline void append_term(std::string &out, bool first, const lambda_poly &c, const std::string &basis)
{
    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
        const auto &[d, q] = c.terms()[0];
        negative = sgn(q) < 0;
        const lambda_poly mag = lambda_poly::monomial(d, abs(q));
        if (!mag.is_one())
            coeff = to_string(mag);
    } else {
        coeff = "(" + to_string(c) + ")";
    }
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (coeff.empty())
        out += basis;
    else if (basis == "1")
        out += coeff;
    else
        out += coeff + "*" + basis;
}

} // namespace detail

template <class Key>
std::string to_string(const element<Key> &a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[k, c] : a.terms()) {
        detail::append_term(out, first, c, a.space().format(k));
        first = false;
    }
    return out;
}

template <class Key>
std::string to_string(const tensor<Key> &t)
{
    // "0 (x) 0" keeps the leg count, so the text parses back to a tensor
    if (t.is_zero()) {
        std::string out = "0";
        for (std::size_t i = 1; i < t.legs(); ++i)
            out += " (x) 0";
        return out;
    }
    std::string out;
    bool first = true;
    for (const auto &[legs, c] : t.terms()) {
        std::string basis;
        for (std::size_t i = 0; i < legs.size(); ++i) {
            if (i)
                basis += " (x) ";
            basis += t.space().format(legs[i]);
        }
        detail::append_term(out, first, c, basis);
        first = false;
    }
    return out;
}

template <class Key>
std::ostream &operator<<(std::ostream &os, const element<Key> &a)
{
    return os << to_string(a);
}

template <class Key>
std::ostream &operator<<(std::ostream &os, const tensor<Key> &t)
{
    return os << to_string(t);
}

} // namespace ibialg
