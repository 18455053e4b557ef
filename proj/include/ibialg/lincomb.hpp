#pragma once

// Finitely supported linear combinations over basis keys with lambda_poly
// coefficients, their tensor powers, and the bimodule action on A (x) A.
//
// A Key type must be totally ordered and name its module through a nested
// `space_type`, which provides:
//   std::string name() const;
//   std::string format(const Key &) const;
//   void validate(const Key &) const;      // throws on foreign keys
//   bool operator==(const space_type &) const;

#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace ibialg
{

template <class Key>
using space_ptr = std::shared_ptr<const typename Key::space_type>;

namespace detail
{

template <class Space>
bool same_space(const std::shared_ptr<const Space> &a, const std::shared_ptr<const Space> &b)
{
    return a == b || (a && b && *a == *b);
}

template <class Space>
void require_same_space(const std::shared_ptr<const Space> &a, const std::shared_ptr<const Space> &b)
{
    if (!same_space(a, b))
        throw kind_mismatch("operands belong to different algebras: " + (a ? a->name() : "?") + " vs "
                            + (b ? b->name() : "?"));
}

template <class Map>
void accumulate(Map &terms, const typename Map::key_type &key, const lambda_poly &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

} // namespace detail

/// An element sum_k c_k * k of the free module on Key.
template <class Key>
class element
{
public:
    using key_type = Key;
    using space_type = typename Key::space_type;
    using term_map = std::map<Key, lambda_poly>;

    explicit element(space_ptr<Key> space) : space_(std::move(space)) {}

    element(space_ptr<Key> space, const Key &key, const lambda_poly &coeff = 1) : space_(std::move(space))
    {
        space_->validate(key);
        detail::accumulate(terms_, key, coeff);
    }

    const space_type &space() const noexcept
    {
        return *space_;
    }

    const space_ptr<Key> &space_handle() const noexcept
    {
        return space_;
    }

    const term_map &terms() const & noexcept
    {
        return terms_;
    }

    // By value on rvalues, so `for (auto &t : f().terms())` is safe.
    term_map terms() &&
    {
        return std::move(terms_);
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    std::size_t size() const noexcept
    {
        return terms_.size();
    }

    lambda_poly coefficient(const Key &key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? lambda_poly() : it->second;
    }

    /// Adds c * key. The key is trusted to belong to this space.
    void add_term(const Key &key, const lambda_poly &c)
    {
        detail::accumulate(terms_, key, c);
    }

    /// *this += c * other
    void add_scaled(const element &other, const lambda_poly &c)
    {
        detail::require_same_space(space_, other.space_);
        if (c.is_zero())
            return;
        const bool unit = c.is_one();
        for (const auto &[k, v] : other.terms_)
            detail::accumulate(terms_, k, unit ? v : v * c);
    }

    element &operator+=(const element &o)
    {
        add_scaled(o, 1);
        return *this;
    }

    element &operator-=(const element &o)
    {
        add_scaled(o, -1);
        return *this;
    }

    element &operator*=(const lambda_poly &c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[k, v] : terms_)
            v *= c;
        return *this;
    }

    friend element operator+(element a, const element &b)
    {
        a += b;
        return a;
    }

    friend element operator-(element a, const element &b)
    {
        a -= b;
        return a;
    }

    friend element operator-(element a)
    {
        a *= -1;
        return a;
    }

    friend element operator*(const lambda_poly &c, element a)
    {
        a *= c;
        return a;
    }

    friend bool operator==(const element &a, const element &b)
    {
        return detail::same_space(a.space_, b.space_) && a.terms_ == b.terms_;
    }

private:
    space_ptr<Key> space_;
    term_map terms_;
};

/// An element of the k-fold tensor power, stored flat: every term is a
/// tuple of k keys with a single coefficient.
template <class Key>
class tensor
{
public:
    using key_type = Key;
    using space_type = typename Key::space_type;
    using legs_type = std::vector<Key>;
    using term_map = std::map<legs_type, lambda_poly>;

    tensor(space_ptr<Key> space, std::size_t legs) : space_(std::move(space)), legs_(legs) {}

    const space_type &space() const noexcept
    {
        return *space_;
    }

    const space_ptr<Key> &space_handle() const noexcept
    {
        return space_;
    }

    std::size_t legs() const noexcept
    {
        return legs_;
    }

    const term_map &terms() const & noexcept
    {
        return terms_;
    }

    // By value on rvalues, so `for (auto &t : f().terms())` is safe.
    term_map terms() &&
    {
        return std::move(terms_);
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    std::size_t size() const noexcept
    {
        return terms_.size();
    }

    lambda_poly coefficient(const legs_type &key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? lambda_poly() : it->second;
    }

    void add_term(const legs_type &key, const lambda_poly &c)
    {
        if (key.size() != legs_)
            throw kind_mismatch("tensor term has " + std::to_string(key.size()) + " legs, expected "
                                + std::to_string(legs_));
        detail::accumulate(terms_, key, c);
    }

    void add_term(legs_type &&key, const lambda_poly &c)
    {
        if (key.size() != legs_)
            throw kind_mismatch("tensor term has " + std::to_string(key.size()) + " legs, expected "
                                + std::to_string(legs_));
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_scaled(const tensor &other, const lambda_poly &c)
    {
        detail::require_same_space(space_, other.space_);
        if (legs_ != other.legs_)
            throw kind_mismatch("tensor leg counts differ: " + std::to_string(legs_) + " vs "
                                + std::to_string(other.legs_));
        if (c.is_zero())
            return;
        const bool unit = c.is_one();
        for (const auto &[k, v] : other.terms_)
            detail::accumulate(terms_, k, unit ? v : v * c);
    }

    tensor &operator+=(const tensor &o)
    {
        add_scaled(o, 1);
        return *this;
    }

    tensor &operator-=(const tensor &o)
    {
        add_scaled(o, -1);
        return *this;
    }

    tensor &operator*=(const lambda_poly &c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[k, v] : terms_)
            v *= c;
        return *this;
    }

    friend tensor operator+(tensor a, const tensor &b)
    {
        a += b;
        return a;
    }

    friend tensor operator-(tensor a, const tensor &b)
    {
        a -= b;
        return a;
    }

    friend tensor operator-(tensor a)
    {
        a *= -1;
        return a;
    }

    friend tensor operator*(const lambda_poly &c, tensor a)
    {
        a *= c;
        return a;
    }

    friend bool operator==(const tensor &a, const tensor &b)
    {
        return a.legs_ == b.legs_ && detail::same_space(a.space_, b.space_) && a.terms_ == b.terms_;
    }

private:
    space_ptr<Key> space_;
    std::size_t legs_;
    term_map terms_;
};

/// u (x) v, bilinear.
template <class Key>
tensor<Key> tensor_product(const element<Key> &u, const element<Key> &v)
{
    detail::require_same_space(u.space_handle(), v.space_handle());
    tensor<Key> out(u.space_handle(), 2);
    for (const auto &[p, cp] : u.terms())
        for (const auto &[q, cq] : v.terms())
            out.add_term(typename tensor<Key>::legs_type{p, q}, cp * cq);
    return out;
}

/// t (x) v, appending one leg.
template <class Key>
tensor<Key> tensor_product(const tensor<Key> &t, const element<Key> &v)
{
    detail::require_same_space(t.space_handle(), v.space_handle());
    tensor<Key> out(t.space_handle(), t.legs() + 1);
    for (const auto &[legs, ct] : t.terms())
        for (const auto &[q, cq] : v.terms()) {
            auto key = legs;
            key.push_back(q);
            out.add_term(std::move(key), ct * cq);
        }
    return out;
}

/// u (x) t, prepending one leg.
template <class Key>
tensor<Key> tensor_product(const element<Key> &u, const tensor<Key> &t)
{
    detail::require_same_space(u.space_handle(), t.space_handle());
    tensor<Key> out(t.space_handle(), t.legs() + 1);
    for (const auto &[p, cp] : u.terms())
        for (const auto &[legs, ct] : t.terms()) {
            typename tensor<Key>::legs_type key;
            key.reserve(legs.size() + 1);
            key.push_back(p);
            key.insert(key.end(), legs.begin(), legs.end());
            out.add_term(std::move(key), cp * ct);
        }
    return out;
}

/// Replaces leg `leg` of every term by f(key), an element, extending
/// linearly.
template <class Key, class F>
tensor<Key> map_leg(const tensor<Key> &t, std::size_t leg, F &&f)
{
    tensor<Key> out(t.space_handle(), t.legs());
    for (const auto &[legs, c] : t.terms()) {
        const element<Key> image = f(legs[leg]);
        for (const auto &[k, ck] : image.terms()) {
            auto key = legs;
            key[leg] = k;
            out.add_term(std::move(key), c * ck);
        }
    }
    return out;
}

/// Replaces leg `leg` of every term by g(key), a two-leg tensor, so the
/// result has one more leg. With g = coproduct and leg 0 this is
/// (Delta (x) id (x) ... ).
template <class Key, class G>
tensor<Key> expand_leg(const tensor<Key> &t, std::size_t leg, G &&g)
{
    tensor<Key> out(t.space_handle(), t.legs() + 1);
    for (const auto &[legs, c] : t.terms()) {
        const tensor<Key> image = g(legs[leg]);
        for (const auto &[pair, cp] : image.terms()) {
            typename tensor<Key>::legs_type key;
            key.reserve(legs.size() + 1);
            key.insert(key.end(), legs.begin(), legs.begin() + static_cast<std::ptrdiff_t>(leg));
            key.push_back(pair[0]);
            key.push_back(pair[1]);
            key.insert(key.end(), legs.begin() + static_cast<std::ptrdiff_t>(leg) + 1, legs.end());
            out.add_term(std::move(key), c * cp);
        }
    }
    return out;
}

/// a . (b (x) c) = ab (x) c, where `product` multiplies two basis keys into
/// an element.
template <class Key, class Product>
    requires std::invocable<Product &, const Key &, const Key &>
tensor<Key> bimodule_left(Product &&product, const element<Key> &a, const tensor<Key> &t)
{
    detail::require_same_space(a.space_handle(), t.space_handle());
    if (t.legs() != 2)
        throw kind_mismatch("bimodule action needs a two-leg tensor");
    tensor<Key> out(t.space_handle(), 2);
    for (const auto &[p, cp] : a.terms())
        for (const auto &[legs, ct] : t.terms()) {
            const element<Key> prod = product(p, legs[0]);
            const lambda_poly c = cp * ct;
            for (const auto &[k, ck] : prod.terms())
                out.add_term(typename tensor<Key>::legs_type{k, legs[1]}, c * ck);
        }
    return out;
}

/// (b (x) c) . a = b (x) ca
template <class Key, class Product>
    requires std::invocable<Product &, const Key &, const Key &>
tensor<Key> bimodule_right(Product &&product, const tensor<Key> &t, const element<Key> &a)
{
    detail::require_same_space(a.space_handle(), t.space_handle());
    if (t.legs() != 2)
        throw kind_mismatch("bimodule action needs a two-leg tensor");
    tensor<Key> out(t.space_handle(), 2);
    for (const auto &[legs, ct] : t.terms())
        for (const auto &[q, cq] : a.terms()) {
            const element<Key> prod = product(legs[1], q);
            const lambda_poly c = ct * cq;
            for (const auto &[k, ck] : prod.terms())
                out.add_term(typename tensor<Key>::legs_type{legs[0], k}, c * ck);
        }
    return out;
}

} // namespace ibialg
