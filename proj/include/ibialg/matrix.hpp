#pragma once

// The matrix algebra M_n over Q[L] in the elementary-matrix basis, with the
// Newtonian comatrix coproduct, the classical comatrix coproduct, and the
// L-coproduct M -> ML (x) L - L (x) LM.

#include <compare>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "lincomb.hpp"

namespace ibialg
{

struct matrix_space;

/// E[row,col], 1-indexed. Ordered lexicographically on (row, col).
struct ematrix {
    using space_type = matrix_space;
    int row = 1;
    int col = 1;

    friend auto operator<=>(const ematrix &, const ematrix &) = default;
};

struct matrix_space {
    int dim = 1;

    std::string name() const
    {
        return "matrix:" + std::to_string(dim);
    }

    std::string format(const ematrix &e) const
    {
        return "E[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]";
    }

    void validate(const ematrix &e) const
    {
        if (e.row < 1 || e.row > dim || e.col < 1 || e.col > dim)
            throw dimension_mismatch(format(e) + " is not a basis element of M_" + std::to_string(dim));
    }

    friend bool operator==(const matrix_space &, const matrix_space &) = default;
};

inline space_ptr<ematrix> make_matrix_space(int n)
{
    if (n < 1)
        throw dimension_mismatch("matrix dimension must be >= 1, got " + std::to_string(n));
    return std::make_shared<const matrix_space>(matrix_space{n});
}

inline int sgn(long x) noexcept
{
    return (x > 0) - (x < 0);
}

/// All E[i,j] in canonical order.
inline std::vector<ematrix> matrix_basis(int n)
{
    std::vector<ematrix> keys;
    keys.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            keys.push_back({i, j});
    return keys;
}

/// E_ij E_kl = delta_jk E_il
inline element<ematrix> ematrix_product(const space_ptr<ematrix> &space, const ematrix &p, const ematrix &q)
{
    space->validate(p);
    space->validate(q);
    if (p.col != q.row)
        return element<ematrix>(space);
    return element<ematrix>(space, {p.row, q.col});
}

/// Delta(E_ij) = sum_{s=i}^{j-1} E_is (x) E_{s+1,j}   for i < j
///             = 0                                    for i = j
///             = -sum_{s=j}^{i-1} E_is (x) E_{s+1,j}  for i > j
inline tensor<ematrix> newtonian_coproduct(const space_ptr<ematrix> &space, const ematrix &p)
{
    space->validate(p);
    tensor<ematrix> out(space, 2);
    const int i = p.row;
    const int j = p.col;
    if (i < j) {
        for (int s = i; s <= j - 1; ++s)
            out.add_term({{i, s}, {s + 1, j}}, 1);
    } else if (i > j) {
        for (int s = j; s <= i - 1; ++s)
            out.add_term({{i, s}, {s + 1, j}}, -1);
    }
    return out;
}

/// Delta(E_ij) = sum_s E_is (x) E_sj
inline tensor<ematrix> classical_comatrix_coproduct(const space_ptr<ematrix> &space, const ematrix &p)
{
    space->validate(p);
    tensor<ematrix> out(space, 2);
    for (int s = 1; s <= space->dim; ++s)
        out.add_term({{p.row, s}, {s, p.col}}, 1);
    return out;
}

/// epsilon(E_ij) = delta_ij
inline lambda_poly comatrix_counit(const ematrix &p)
{
    return p.row == p.col ? lambda_poly(1) : lambda_poly();
}

inline element<ematrix> identity_matrix(const space_ptr<ematrix> &space)
{
    element<ematrix> e(space);
    for (int i = 1; i <= space->dim; ++i)
        e.add_term({i, i}, 1);
    return e;
}

namespace detail
{

inline algebra_definition<ematrix> matrix_definition(int n, std::string name)
{
    auto space = make_matrix_space(n);
    return algebra_definition<ematrix>{
        .name = std::move(name),
        .space = space,
        .weight = lambda_poly(),
        .product = [space](const ematrix &p, const ematrix &q) { return ematrix_product(space, p, q); },
        .unit = identity_matrix(space),
        .coproduct = [space](const ematrix &p) { return newtonian_coproduct(space, p); },
        .basis = matrix_basis(n),
        .finite_basis = true,
    };
}

} // namespace detail

/// (M_n, m, E, Delta) with the Newtonian comatrix coproduct, weight 0.
inline algebra<ematrix> matrix_algebra(int n)
{
    return algebra<ematrix>(detail::matrix_definition(n, "matrix:" + std::to_string(n)));
}

/// M_n with the classical comatrix coproduct. It has the counit
/// comatrix_counit and is not an infinitesimal bialgebra; it is here for
/// contrast.
inline algebra<ematrix> comatrix_algebra(int n)
{
    auto def = detail::matrix_definition(n, "comatrix:" + std::to_string(n));
    auto space = def.space;
    def.coproduct = [space](const ematrix &p) { return classical_comatrix_coproduct(space, p); };
    return algebra<ematrix>(std::move(def));
}

/// Delta(M) = ML (x) L - L (x) LM, built as coproduct_from_r with r = L (x) L
/// and weight 0. Requires L^2 = 0.
inline algebra<ematrix> l_coproduct_algebra(int n, const element<ematrix> &L)
{
    const algebra<ematrix> base = matrix_algebra(n);
    const element<ematrix> square = multiply(base, L, L);
    if (!square.is_zero())
        throw l_square_not_zero("L^2 must be 0, but L^2 = " + to_string(square));
    algebra<ematrix> A = coproduct_from_r(base, tensor_product(L, L), lambda_poly(),
                                          "lmatrix:" + std::to_string(n) + ":" + to_string(L));
    for (const auto &k : A.basis_keys()) {
        const element<ematrix> M = A.basis(k);
        tensor<ematrix> direct = tensor_product(multiply(A, M, L), L);
        direct -= tensor_product(L, multiply(A, L, M));
        if (!(direct == A.basis_coproduct(k)))
            throw invalid_instance("L-coproduct disagrees with a.r - r.a on " + A.space().format(k));
    }
    return A;
}

/// Dense rows to the E-basis; the matrix must be n x n.
template <class Entry>
element<ematrix> from_dense(const space_ptr<ematrix> &space, const std::vector<std::vector<Entry>> &rows)
{
    const auto n = static_cast<std::size_t>(space->dim);
    if (rows.size() != n)
        throw dimension_mismatch("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    element<ematrix> out(space);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw dimension_mismatch("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size())
                                     + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            out.add_term({static_cast<int>(i) + 1, static_cast<int>(j) + 1}, lambda_poly(rows[i][j]));
    }
    return out;
}

/// Matrix with entries drawn uniformly from [lo, hi].
template <class Rng>
element<ematrix> random_integer_matrix(const space_ptr<ematrix> &space, Rng &rng, int lo = -5, int hi = 5)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    element<ematrix> out(space);
    for (int i = 1; i <= space->dim; ++i)
        for (int j = 1; j <= space->dim; ++j)
            out.add_term({i, j}, dist(rng));
    return out;
}

} // namespace ibialg
