#pragma once

// The pre-Lie product a |> b = sum b_(1) a b_(2) of a weight-zero
// infinitesimal unitary bialgebra, its commutator bracket, and the closed
// forms of both on elementary matrices.

#include <map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"

namespace ibialg
{

template <class Key>
element<Key> prelie_product(const algebra<Key> &A, const element<Key> &a, const element<Key> &b)
{
    detail::require_weight_zero(A, "pre-Lie product");
    detail::require_member(A, a);
    detail::require_member(A, b);
    element<Key> out = A.zero();
    for (const auto &[k, c] : b.terms()) {
        const tensor<Key> delta = A.basis_coproduct(k);
        for (const auto &[legs, d] : delta.terms()) {
            const element<Key> left = multiply(A, A.basis(legs[0]), a);
            if (left.is_zero())
                continue;
            out.add_scaled(multiply(A, left, A.basis(legs[1])), c * d);
        }
    }
    return out;
}

/// [a,b] = a |> b - b |> a
template <class Key>
element<Key> commutator_bracket(const algebra<Key> &A, const element<Key> &a, const element<Key> &b)
{
    return prelie_product(A, a, b) - prelie_product(A, b, a);
}

/// (a|>b)|>c - a|>(b|>c) = (b|>a)|>c - b|>(a|>c)
template <class Key>
law_report<Key> check_prelie_identity(const algebra<Key> &A, const element<Key> &a, const element<Key> &b,
                                      const element<Key> &c)
{
    const auto P = [&](const element<Key> &x, const element<Key> &y) { return prelie_product(A, x, y); };
    element<Key> diff = P(P(a, b), c) - P(a, P(b, c));
    diff -= P(P(b, a), c) - P(b, P(a, c));
    return make_report<Key>("prelie", {a, b, c}, std::move(diff));
}

template <class Key>
law_report<Key> check_jacobi(const algebra<Key> &A, const element<Key> &a, const element<Key> &b,
                             const element<Key> &c)
{
    const auto B = [&](const element<Key> &x, const element<Key> &y) { return commutator_bracket(A, x, y); };
    element<Key> sum = B(B(a, b), c) + B(B(b, c), a) + B(B(c, a), b);
    return make_report<Key>("jacobi", {a, b, c}, std::move(sum));
}

/// L_{[a,b]} = L_a L_b - L_b L_a applied to x.
template <class Key>
law_report<Key> check_left_representation(const algebra<Key> &A, const element<Key> &a, const element<Key> &b,
                                          const element<Key> &x)
{
    const auto P = [&](const element<Key> &u, const element<Key> &v) { return prelie_product(A, u, v); };
    element<Key> diff = P(commutator_bracket(A, a, b), x);
    diff -= P(a, P(b, x)) - P(b, P(a, x));
    return make_report<Key>("representation", {a, b, x}, std::move(diff));
}

// ---------------------------------------------------------------------------
// Closed forms on E_ij

/// E_ij |> E_kl:  E_kl if k < j = i+1 <= l;  -E_kl if l < j = i+1 <= k;  else 0.
inline element<ematrix> matrix_prelie_table(const space_ptr<ematrix> &space, const ematrix &p, const ematrix &q)
{
    space->validate(p);
    space->validate(q);
    const int i = p.row, j = p.col, k = q.row, l = q.col;
    element<ematrix> out(space);
    if (j == i + 1 && k < j && j <= l)
        out.add_term(q, 1);
    else if (j == i + 1 && l < j && j <= k)
        out.add_term(q, -1);
    return out;
}

/// The sgn-based three-case bracket. The half-integer products are
/// evaluated exactly.
inline element<ematrix> matrix_bracket_closed_form(const space_ptr<ematrix> &space, const ematrix &p,
                                                   const ematrix &q)
{
    space->validate(p);
    space->validate(q);
    const int i = p.row, j = p.col, k = q.row, l = q.col;
    const rational half(1, 2);
    element<ematrix> out(space);
    if (j == i + 1 && l != k + 1 && (rational(i - k) + half) * (rational(i - l) + half) < 0)
        out.add_term(q, sgn(l - k));
    else if (j != i + 1 && l == k + 1 && (rational(k - i) + half) * (rational(k - j) + half) < 0)
        out.add_term(p, sgn(i - j));
    return out;
}

/// The six-row case table obtained by subtracting the two pre-Lie tables;
/// first matching row wins.
inline element<ematrix> matrix_bracket_case_table(const space_ptr<ematrix> &space, const ematrix &p,
                                                  const ematrix &q)
{
    space->validate(p);
    space->validate(q);
    const int i = p.row, j = p.col, k = q.row, l = q.col;
    element<ematrix> out(space);
    if (j == i + 1 && i + 1 == l && l == k + 1) {
        out.add_term(q, 1);
        out.add_term(p, -1);
    } else if (k < j && j == i + 1 && j <= l && l != k + 1) {
        out.add_term(q, 1);
    } else if (l < j && j == i + 1 && j <= k) {
        out.add_term(q, -1);
    } else if (i < l && l == k + 1 && l <= j && j != i + 1) {
        out.add_term(p, -1);
    } else if (j < l && l == k + 1 && l <= i) {
        out.add_term(p, 1);
    }
    return out;
}

/// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
inline element<ematrix> classical_matrix_bracket(const space_ptr<ematrix> &space, const ematrix &p,
                                                 const ematrix &q)
{
    element<ematrix> out = ematrix_product(space, p, q);
    out -= ematrix_product(space, q, p);
    return out;
}

/// Structure constants of a bracket on a set of basis keys.
template <class Key>
class bracket_table
{
public:
    template <class Bracket>
    bracket_table(const std::vector<Key> &keys, Bracket &&bracket)
    {
        for (const auto &a : keys)
            for (const auto &b : keys)
                table_.emplace(std::pair{a, b}, bracket(a, b));
    }

    const element<Key> &operator()(const Key &a, const Key &b) const
    {
        return table_.at({a, b});
    }

    const std::map<std::pair<Key, Key>, element<Key>> &entries() const noexcept
    {
        return table_;
    }

    /// First pair (a, b) with [a,b] != -[b,a], if any.
    std::optional<std::pair<Key, Key>> antisymmetry_violation() const
    {
        for (const auto &[ab, v] : table_) {
            auto it = table_.find({ab.second, ab.first});
            if (it == table_.end() || !((v + it->second).is_zero()))
                return ab;
        }
        return std::nullopt;
    }

    friend bool operator==(const bracket_table &, const bracket_table &) = default;

private:
    std::map<std::pair<Key, Key>, element<Key>> table_;
};

} // namespace ibialg
