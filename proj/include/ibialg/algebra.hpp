#pragma once

// Generic machinery over a weighted infinitesimal unitary bialgebra
// instance: linear extension of the product and coproduct, law checkers,
// convolution, D = m Delta, local nilpotency and the antipode series.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "lincomb.hpp"
#include "scalar.hpp"

namespace ibialg
{

inline constexpr std::size_t default_nilpotency_cap = 64;

template <class Key>
struct algebra_definition {
    std::string name;
    space_ptr<Key> space;
    lambda_poly weight;
    std::function<element<Key>(const Key &, const Key &)> product;
    element<Key> unit;
    std::function<tensor<Key>(const Key &)> coproduct;
    /// The whole basis when `finite_basis`, otherwise a bounded sample used
    /// for the construction-time associativity and unit checks.
    std::vector<Key> basis;
    bool finite_basis = false;
};

/// A unitary algebra with a coproduct and a weight. Cheap to copy; all
/// state is immutable after construction and shared.
template <class Key>
class algebra
{
public:
    using key_type = Key;
    using space_type = typename Key::space_type;
    using element_type = element<Key>;
    using tensor_type = tensor<Key>;

    explicit algebra(algebra_definition<Key> def) : impl_(std::make_shared<impl>(std::move(def)))
    {
        validate_product();
        impl_->build_table();
    }

    const std::string &name() const noexcept
    {
        return impl_->def.name;
    }

    const space_type &space() const noexcept
    {
        return *impl_->def.space;
    }

    const space_ptr<Key> &space_handle() const noexcept
    {
        return impl_->def.space;
    }

    const lambda_poly &weight() const noexcept
    {
        return impl_->def.weight;
    }

    const element<Key> &unit() const noexcept
    {
        return impl_->def.unit;
    }

    element<Key> zero() const
    {
        return element<Key>(impl_->def.space);
    }

    element<Key> basis(const Key &k, const lambda_poly &c = 1) const
    {
        return element<Key>(impl_->def.space, k, c);
    }

    bool finite_basis() const noexcept
    {
        return impl_->def.finite_basis;
    }

    /// The full basis for finite instances, a bounded sample otherwise.
    const std::vector<Key> &basis_keys() const noexcept
    {
        return impl_->def.basis;
    }

    element<Key> basis_product(const Key &a, const Key &b) const
    {
        return impl_->def.product(a, b);
    }

    tensor<Key> basis_coproduct(const Key &k) const
    {
        if (!impl_->table.empty()) {
            auto it = impl_->table.find(k);
            if (it != impl_->table.end())
                return it->second;
        }
        return impl_->def.coproduct(k);
    }

    /// Same product, unit and basis; a different coproduct and weight. The
    /// product was validated when this instance was built.
    algebra with_coproduct(std::string name, lambda_poly weight,
                           std::function<tensor<Key>(const Key &)> coproduct) const
    {
        algebra_definition<Key> def = impl_->def;
        def.name = std::move(name);
        def.weight = std::move(weight);
        def.coproduct = std::move(coproduct);
        return algebra(std::make_shared<impl>(std::move(def)));
    }

private:
    struct impl {
        explicit impl(algebra_definition<Key> d) : def(std::move(d)) {}

        void build_table()
        {
            if (!def.finite_basis)
                return;
            for (const auto &k : def.basis)
                table.emplace(k, def.coproduct(k));
        }

        algebra_definition<Key> def;
        std::map<Key, tensor<Key>> table;
    };

    explicit algebra(std::shared_ptr<impl> p) : impl_(std::move(p))
    {
        impl_->build_table();
    }

    element<Key> mul(const element<Key> &a, const element<Key> &b) const
    {
        element<Key> out(impl_->def.space);
        for (const auto &[p, cp] : a.terms())
            for (const auto &[q, cq] : b.terms())
                out.add_scaled(impl_->def.product(p, q), cp * cq);
        return out;
    }

    void validate_product() const
    {
        const auto &keys = impl_->def.basis;
        const auto &u = impl_->def.unit;
        for (const auto &k : keys) {
            const auto e = basis(k);
            if (!(mul(u, e) == e) || !(mul(e, u) == e))
                throw invalid_instance(name() + ": unit is not a two-sided identity on "
                                       + space().format(k));
        }
        for (const auto &a : keys)
            for (const auto &b : keys) {
                const auto ab = impl_->def.product(a, b);
                for (const auto &c : keys) {
                    const auto bc = impl_->def.product(b, c);
                    if (!(mul(ab, basis(c)) == mul(basis(a), bc)))
                        throw invalid_instance(name() + ": product is not associative on (" + space().format(a)
                                               + ", " + space().format(b) + ", " + space().format(c) + ")");
                }
            }
    }

    std::shared_ptr<impl> impl_;
};

namespace detail
{

template <class Key>
void require_member(const algebra<Key> &A, const element<Key> &a)
{
    require_same_space(A.space_handle(), a.space_handle());
}

template <class Key>
void require_member(const algebra<Key> &A, const tensor<Key> &t)
{
    require_same_space(A.space_handle(), t.space_handle());
}

template <class Key>
void require_weight_zero(const algebra<Key> &A, const char *what)
{
    if (!A.weight().is_zero())
        throw weight_not_zero(std::string(what) + " requires weight 0, but " + A.name() + " has weight "
                              + to_string(A.weight()));
}

} // namespace detail

template <class Key>
element<Key> multiply(const algebra<Key> &A, const element<Key> &a, const element<Key> &b)
{
    detail::require_member(A, a);
    detail::require_member(A, b);
    element<Key> out = A.zero();
    for (const auto &[p, cp] : a.terms())
        for (const auto &[q, cq] : b.terms())
            out.add_scaled(A.basis_product(p, q), cp * cq);
    return out;
}

template <class Key>
tensor<Key> coproduct(const algebra<Key> &A, const element<Key> &a)
{
    detail::require_member(A, a);
    tensor<Key> out(A.space_handle(), 2);
    for (const auto &[k, c] : a.terms())
        out.add_scaled(A.basis_coproduct(k), c);
    return out;
}

/// Delta applied k times, always expanding the leftmost leg.
template <class Key>
tensor<Key> iterated_coproduct(const algebra<Key> &A, const element<Key> &a, std::size_t k)
{
    if (k < 1)
        throw index_out_of_range("iterated coproduct needs k >= 1");
    tensor<Key> t = coproduct(A, a);
    for (std::size_t i = 1; i < k; ++i)
        t = expand_leg(t, 0, [&](const Key &key) { return A.basis_coproduct(key); });
    return t;
}

template <class Key>
tensor<Key> bimodule_left(const algebra<Key> &A, const element<Key> &a, const tensor<Key> &t)
{
    detail::require_member(A, a);
    return bimodule_left([&](const Key &p, const Key &q) { return A.basis_product(p, q); }, a, t);
}

template <class Key>
tensor<Key> bimodule_right(const algebra<Key> &A, const tensor<Key> &t, const element<Key> &a)
{
    detail::require_member(A, a);
    return bimodule_right([&](const Key &p, const Key &q) { return A.basis_product(p, q); }, t, a);
}

/// Multiplies the legs of every term left to right; for two legs this is m.
template <class Key>
element<Key> contract(const algebra<Key> &A, const tensor<Key> &t)
{
    detail::require_member(A, t);
    element<Key> out = A.zero();
    for (const auto &[legs, c] : t.terms()) {
        element<Key> acc = A.basis(legs[0], c);
        for (std::size_t i = 1; i < legs.size() && !acc.is_zero(); ++i)
            acc = multiply(A, acc, A.basis(legs[i]));
        out += acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Law reports

template <class Key>
struct law_witness {
    std::vector<element<Key>> inputs;
    std::variant<element<Key>, tensor<Key>> difference;
};

/// Verdict of one law check. Passes exactly when no witness is present.
template <class Key>
struct law_report {
    std::string law;
    std::optional<law_witness<Key>> witness;

    bool passed() const noexcept
    {
        return !witness.has_value();
    }
};

template <class Key, class Diff>
law_report<Key> make_report(std::string law, std::vector<element<Key>> inputs, Diff difference)
{
    law_report<Key> r{std::move(law), std::nullopt};
    if (!difference.is_zero())
        r.witness = law_witness<Key>{std::move(inputs), std::move(difference)};
    return r;
}

/// Delta(ab) - a.Delta(b) - Delta(a).b - weight (a (x) b)
template <class Key>
tensor<Key> cocycle_defect(const algebra<Key> &A, const element<Key> &a, const element<Key> &b)
{
    tensor<Key> d = coproduct(A, multiply(A, a, b));
    d -= bimodule_left(A, a, coproduct(A, b));
    d -= bimodule_right(A, coproduct(A, a), b);
    d.add_scaled(tensor_product(a, b), -A.weight());
    return d;
}

template <class Key>
law_report<Key> check_cocycle(const algebra<Key> &A, const element<Key> &a, const element<Key> &b)
{
    return make_report<Key>("cocycle", {a, b}, cocycle_defect(A, a, b));
}

template <class Key>
law_report<Key> check_cocycle(const algebra<Key> &A, const Key &a, const Key &b)
{
    return check_cocycle(A, A.basis(a), A.basis(b));
}

template <class Key>
law_report<Key> check_coassoc(const algebra<Key> &A, const element<Key> &a)
{
    const auto delta = [&](const Key &k) { return A.basis_coproduct(k); };
    const tensor<Key> once = coproduct(A, a);
    tensor<Key> diff = expand_leg(once, 0, delta);
    diff -= expand_leg(once, 1, delta);
    return make_report<Key>("coassoc", {a}, std::move(diff));
}

template <class Key>
law_report<Key> check_coassoc(const algebra<Key> &A, const Key &a)
{
    return check_coassoc(A, A.basis(a));
}

/// Both counit identities (counit (x) id) Delta = id = (id (x) counit) Delta
/// for a coproduct that has a counit.
template <class Key, class Counit>
law_report<Key> check_counit(const algebra<Key> &A, Counit &&counit, const element<Key> &a)
{
    const tensor<Key> d = coproduct(A, a);
    element<Key> left = A.zero();
    element<Key> right = A.zero();
    for (const auto &[legs, c] : d.terms()) {
        left.add_term(legs[1], c * counit(legs[0]));
        right.add_term(legs[0], c * counit(legs[1]));
    }
    left -= a;
    right -= a;
    if (!left.is_zero())
        return make_report<Key>("counit", {a}, std::move(left));
    return make_report<Key>("counit", {a}, std::move(right));
}

// ---------------------------------------------------------------------------
// Linear endomorphisms and convolution

/// A linear map A -> A given on basis keys and extended by linearity.
/// Memoized results are shared between copies; the memo is guarded by a
/// mutex, and a recomputation racing with another caller stores an equal
/// value.
template <class Key>
class linear_map
{
public:
    using rule_type = std::function<element<Key>(const Key &)>;

    linear_map(space_ptr<Key> space, rule_type rule, bool memoize = true)
        : state_(std::make_shared<state>(std::move(space), std::move(rule), memoize))
    {
    }

    const space_ptr<Key> &space_handle() const noexcept
    {
        return state_->space;
    }

    element<Key> operator()(const Key &k) const
    {
        if (!state_->memoize)
            return state_->rule(k);
        {
            std::lock_guard lock(state_->mutex);
            auto it = state_->cache.find(k);
            if (it != state_->cache.end())
                return it->second;
        }
        element<Key> value = state_->rule(k);
        std::lock_guard lock(state_->mutex);
        state_->cache.emplace(k, value);
        return value;
    }

    element<Key> operator()(const element<Key> &a) const
    {
        detail::require_same_space(state_->space, a.space_handle());
        element<Key> out(state_->space);
        for (const auto &[k, c] : a.terms())
            out.add_scaled((*this)(k), c);
        return out;
    }

    friend linear_map operator+(const linear_map &f, const linear_map &g)
    {
        detail::require_same_space(f.space_handle(), g.space_handle());
        return linear_map(f.space_handle(), [f, g](const Key &k) { return f(k) + g(k); });
    }

    friend linear_map operator-(const linear_map &f, const linear_map &g)
    {
        detail::require_same_space(f.space_handle(), g.space_handle());
        return linear_map(f.space_handle(), [f, g](const Key &k) { return f(k) - g(k); });
    }

    friend linear_map operator*(const lambda_poly &c, const linear_map &f)
    {
        return linear_map(f.space_handle(), [c, f](const Key &k) { return c * f(k); });
    }

private:
    struct state {
        state(space_ptr<Key> s, rule_type r, bool m) : space(std::move(s)), rule(std::move(r)), memoize(m) {}
        space_ptr<Key> space;
        rule_type rule;
        bool memoize;
        std::mutex mutex;
        std::map<Key, element<Key>> cache;
    };

    std::shared_ptr<state> state_;
};

template <class Key>
linear_map<Key> identity_map(const algebra<Key> &A)
{
    auto space = A.space_handle();
    return linear_map<Key>(space, [space](const Key &k) { return element<Key>(space, k); }, false);
}

template <class Key>
linear_map<Key> zero_map(const algebra<Key> &A)
{
    auto space = A.space_handle();
    return linear_map<Key>(space, [space](const Key &) { return element<Key>(space); }, false);
}

/// True when f and g agree on every key in `keys`.
template <class Key>
bool agree_on(const linear_map<Key> &f, const linear_map<Key> &g, const std::vector<Key> &keys)
{
    for (const auto &k : keys)
        if (!(f(k) == g(k)))
            return false;
    return true;
}

/// (f * g)(a) = sum f(a_(1)) g(a_(2))
template <class Key>
linear_map<Key> convolution(const algebra<Key> &A, const linear_map<Key> &f, const linear_map<Key> &g)
{
    detail::require_same_space(A.space_handle(), f.space_handle());
    detail::require_same_space(A.space_handle(), g.space_handle());
    return linear_map<Key>(A.space_handle(), [A, f, g](const Key &k) {
        element<Key> out = A.zero();
        const tensor<Key> delta = A.basis_coproduct(k);
        for (const auto &[legs, c] : delta.terms())
            out.add_scaled(multiply(A, f(legs[0]), g(legs[1])), c);
        return out;
    });
}

/// f (*) g = f * g + f + g; the zero map is its unit.
template <class Key>
linear_map<Key> circular_convolution(const algebra<Key> &A, const linear_map<Key> &f,
                                     const linear_map<Key> &g)
{
    return convolution(A, f, g) + f + g;
}

/// D = m Delta.
template <class Key>
element<Key> d_map(const algebra<Key> &A, const element<Key> &a)
{
    return contract(A, coproduct(A, a));
}

/// f^{*(n)}(a) = sum f(a_(1)) ... f(a_(n+1)) over the Sweedler expansion of
/// Delta^n(a).
template <class Key>
element<Key> convolution_power(const algebra<Key> &A, const linear_map<Key> &f, std::size_t n,
                               const element<Key> &a)
{
    const tensor<Key> t = iterated_coproduct(A, a, n);
    element<Key> out = A.zero();
    for (const auto &[legs, c] : t.terms()) {
        element<Key> acc = f(legs[0]);
        for (std::size_t i = 1; i < legs.size() && !acc.is_zero(); ++i)
            acc = multiply(A, acc, f(legs[i]));
        out.add_scaled(acc, c);
    }
    return out;
}

/// Least k in [1, cap] with D^k(a) = 0, or nullopt when no such k exists.
template <class Key>
std::optional<std::size_t> nilpotency_index(const algebra<Key> &A, const element<Key> &a,
                                            std::size_t cap = default_nilpotency_cap)
{
    if (cap < 1)
        throw index_out_of_range("nilpotency cap must be >= 1");
    element<Key> x = a;
    for (std::size_t k = 1; k <= cap; ++k) {
        x = d_map(A, x);
        if (x.is_zero())
            return k;
    }
    return std::nullopt;
}

/// S(a) = -sum_{m>=0} (1/m!) (-D)^m (a), truncated at the nilpotency index
/// of a.
template <class Key>
element<Key> antipode(const algebra<Key> &A, const element<Key> &a, std::size_t cap = default_nilpotency_cap)
{
    detail::require_weight_zero(A, "antipode");
    detail::require_member(A, a);
    const auto index = nilpotency_index(A, a, cap);
    if (!index)
        throw not_nilpotent_within_cap("D^k does not vanish for k <= " + std::to_string(cap) + " in "
                                       + A.name());
    element<Key> out = A.zero();
    element<Key> power = a;         // D^m(a)
    rational coeff(-1);             // -(-1)^m / m!
    for (std::size_t m = 0; m < *index; ++m) {
        out.add_scaled(power, lambda_poly(coeff));
        power = d_map(A, power);
        coeff = -coeff / static_cast<unsigned long>(m + 1);
    }
    return out;
}

template <class Key>
linear_map<Key> antipode_map(const algebra<Key> &A, std::size_t cap = default_nilpotency_cap)
{
    detail::require_weight_zero(A, "antipode");
    return linear_map<Key>(A.space_handle(), [A, cap](const Key &k) { return antipode(A, A.basis(k), cap); });
}

/// sum S(a_(1)) a_(2) + S(a) + a = 0 = sum a_(1) S(a_(2)) + a + S(a)
template <class Key>
law_report<Key> check_antipode_axiom(const algebra<Key> &A, const element<Key> &a,
                                     std::size_t cap = default_nilpotency_cap)
{
    const linear_map<Key> S = antipode_map(A, cap);
    const element<Key> Sa = S(a);
    element<Key> left = Sa + a;
    element<Key> right = a + Sa;
    const tensor<Key> delta = coproduct(A, a);
    for (const auto &[legs, c] : delta.terms()) {
        left.add_scaled(multiply(A, S(legs[0]), A.basis(legs[1])), c);
        right.add_scaled(multiply(A, A.basis(legs[0]), S(legs[1])), c);
    }
    if (!left.is_zero())
        return make_report<Key>("antipode-axiom", {a}, std::move(left));
    return make_report<Key>("antipode-axiom", {a}, std::move(right));
}

/// S(xy) = -S(x)S(y) and Delta S(x) = -(S (x) S) Delta(x)
template <class Key>
law_report<Key> check_antipode_properties(const algebra<Key> &A, const element<Key> &x, const element<Key> &y,
                                          std::size_t cap = default_nilpotency_cap)
{
    const linear_map<Key> S = antipode_map(A, cap);
    element<Key> anti = S(multiply(A, x, y)) + multiply(A, S(x), S(y));
    if (!anti.is_zero())
        return make_report<Key>("antipode-properties", {x, y}, std::move(anti));
    tensor<Key> co = coproduct(A, S(x));
    tensor<Key> sx = coproduct(A, x);
    sx = map_leg(sx, 0, [&](const Key &k) { return S(k); });
    sx = map_leg(sx, 1, [&](const Key &k) { return S(k); });
    co += sx;
    return make_report<Key>("antipode-properties", {x, y}, std::move(co));
}

/// Delta_r(a) = a.r - r.a - lam (a (x) 1). Always a weighted derivation of
/// weight lam; coassociativity depends on r.
template <class Key>
algebra<Key> coproduct_from_r(const algebra<Key> &A, const tensor<Key> &r, const lambda_poly &lam,
                              std::string name = {})
{
    detail::require_member(A, r);
    if (r.legs() != 2)
        throw kind_mismatch("r must be a two-leg tensor");
    if (name.empty())
        name = A.name() + "/r";
    return A.with_coproduct(std::move(name), lam, [A, r, lam](const Key &k) {
        const element<Key> a = A.basis(k);
        tensor<Key> out = bimodule_left(A, a, r);
        out -= bimodule_right(A, r, a);
        out.add_scaled(tensor_product(a, A.unit()), -lam);
        return out;
    });
}

// ---------------------------------------------------------------------------
// Sweeps

/// Outcome of checking one law over many inputs; keeps the first failure in
/// enumeration order.
template <class Key>
struct sweep_report {
    std::string law;
    std::size_t checked = 0;
    std::optional<law_report<Key>> first_failure;

    bool passed() const noexcept
    {
        return !first_failure.has_value();
    }
};

template <class Key, class Range, class Check>
sweep_report<Key> sweep(std::string law, const Range &cases, Check &&check)
{
    sweep_report<Key> out{std::move(law), 0, std::nullopt};
    for (const auto &c : cases) {
        ++out.checked;
        law_report<Key> r = check(c);
        if (!r.passed()) {
            out.first_failure = std::move(r);
            break;
        }
    }
    return out;
}

template <class Key>
sweep_report<Key> sweep_coassoc(const algebra<Key> &A, const std::vector<Key> &keys)
{
    return sweep<Key>("coassoc", keys, [&](const Key &k) { return check_coassoc(A, k); });
}

/// All ordered pairs from `keys`.
template <class Key>
sweep_report<Key> sweep_cocycle(const algebra<Key> &A, const std::vector<Key> &keys)
{
    sweep_report<Key> out{"cocycle", 0, std::nullopt};
    for (const auto &a : keys)
        for (const auto &b : keys) {
            ++out.checked;
            auto r = check_cocycle(A, a, b);
            if (!r.passed()) {
                out.first_failure = std::move(r);
                return out;
            }
        }
    return out;
}

} // namespace ibialg
