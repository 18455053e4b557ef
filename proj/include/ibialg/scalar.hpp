#pragma once

// Exact coefficient arithmetic: rationals backed by GMP and sparse
// polynomials in the formal weight L (lambda) over them.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ibialg
{

/// Arbitrary precision rational. mpq_class keeps values canonical
/// (positive denominator, reduced) after every arithmetic operation.
using rational = mpq_class;
using integer = mpz_class;

inline rational make_rational(long num, long den = 1)
{
    rational r(num, den);
    r.canonicalize();
    return r;
}

/// "3", "-3/2".
inline std::string to_string(const rational &r)
{
    return r.get_str();
}

/// Always "num/den", even for integers.
inline std::string to_fraction_string(const rational &r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Polynomial in the weight symbol L with rational coefficients.
///
/// Terms are kept sorted by ascending degree and no stored coefficient is
/// zero, so structural equality is mathematical equality.
class lambda_poly
{
public:
    using degree_type = unsigned;
    using term = std::pair<degree_type, rational>;

    lambda_poly() = default;

    lambda_poly(int c)
    {
        if (c != 0)
            terms_.emplace_back(0u, rational(c));
    }

    lambda_poly(const rational &c)
    {
        if (sgn(c) != 0)
            terms_.emplace_back(0u, c);
    }

    static lambda_poly monomial(degree_type degree, const rational &c)
    {
        lambda_poly p;
        if (sgn(c) != 0)
            p.terms_.emplace_back(degree, c);
        return p;
    }

    /// The weight symbol itself.
    static lambda_poly lambda()
    {
        return monomial(1, rational(1));
    }

    /// Builds from (degree, coefficient) pairs in any order; repeated
    /// degrees are summed.
    static lambda_poly from_terms(std::vector<term> terms)
    {
        lambda_poly p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }

    bool is_one() const
    {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }

    std::optional<rational> constant_value() const
    {
        if (terms_.empty())
            return rational(0);
        if (is_constant())
            return terms_[0].second;
        return std::nullopt;
    }

    /// Degree of the leading term; 0 for the zero polynomial.
    degree_type degree() const noexcept
    {
        return terms_.empty() ? 0 : terms_.back().first;
    }

    rational coefficient(degree_type d) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                                   [](const term &t, degree_type v) { return t.first < v; });
        if (it != terms_.end() && it->first == d)
            return it->second;
        return rational(0);
    }

    std::span<const term> terms() const noexcept
    {
        return terms_;
    }

    /// Evaluates at L = v.
    rational operator()(const rational &v) const
    {
        // Horner over the sparse terms, highest degree first.
        rational acc(0);
        degree_type prev = degree();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            for (degree_type k = it->first; k < prev; ++k)
                acc *= v;
            acc += it->second;
            prev = it->first;
        }
        for (degree_type k = 0; k < prev; ++k)
            acc *= v;
        return acc;
    }

    lambda_poly &operator+=(const lambda_poly &o)
    {
        if (o.terms_.empty())
            return *this;
        if (terms_.empty()) {
            terms_ = o.terms_;
            return *this;
        }
        if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
            terms_[0].second += o.terms_[0].second;
            if (sgn(terms_[0].second) == 0)
                terms_.clear();
            return *this;
        }
        *this = merge(*this, o, false);
        return *this;
    }

    lambda_poly &operator-=(const lambda_poly &o)
    {
        if (o.terms_.empty())
            return *this;
        if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
            terms_[0].second -= o.terms_[0].second;
            if (sgn(terms_[0].second) == 0)
                terms_.clear();
            return *this;
        }
        *this = merge(*this, o, true);
        return *this;
    }

    lambda_poly &operator*=(const lambda_poly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend lambda_poly operator+(lambda_poly a, const lambda_poly &b)
    {
        a += b;
        return a;
    }

    friend lambda_poly operator-(lambda_poly a, const lambda_poly &b)
    {
        a -= b;
        return a;
    }

    friend lambda_poly operator-(lambda_poly a)
    {
        for (auto &t : a.terms_)
            t.second = -t.second;
        return a;
    }

    friend lambda_poly operator*(const lambda_poly &a, const lambda_poly &b)
    {
        lambda_poly r;
        if (a.terms_.empty() || b.terms_.empty())
            return r;
        if (a.terms_.size() == 1 && b.terms_.size() == 1) {
            r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first,
                                  rational(a.terms_[0].second * b.terms_[0].second));
            return r;
        }
        r.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto &[da, ca] : a.terms_)
            for (const auto &[db, cb] : b.terms_)
                r.terms_.emplace_back(da + db, rational(ca * cb));
        r.normalize();
        return r;
    }

    friend bool operator==(const lambda_poly &a, const lambda_poly &b)
    {
        return a.terms_ == b.terms_;
    }

private:
    void normalize()
    {
        std::sort(terms_.begin(), terms_.end(),
                  [](const term &x, const term &y) { return x.first < y.first; });
        std::vector<term> out;
        out.reserve(terms_.size());
        for (auto &t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
            if (sgn(out.back().second) == 0)
                out.pop_back();
        }
        terms_ = std::move(out);
    }

    static lambda_poly merge(const lambda_poly &a, const lambda_poly &b, bool subtract)
    {
        lambda_poly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                r.terms_.emplace_back(j->first, subtract ? rational(-j->second) : j->second);
                ++j;
            } else {
                rational c = subtract ? rational(i->second - j->second) : rational(i->second + j->second);
                if (sgn(c) != 0)
                    r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<term> terms_;
};

inline lambda_poly ring_add(const lambda_poly &a, const lambda_poly &b)
{
    return a + b;
}

inline lambda_poly ring_mul(const lambda_poly &a, const lambda_poly &b)
{
    return a * b;
}

inline rational specialize(const lambda_poly &p, const rational &v)
{
    return p(v);
}

namespace detail
{

inline std::string format_lambda_power(lambda_poly::degree_type d)
{
    return d == 1 ? std::string("L") : "L^" + std::to_string(d);
}

} // namespace detail

/// Highest degree first, e.g. "2*L^2 - L + 1/3". The output re-parses as a
/// scalar expression.
inline std::string to_string(const lambda_poly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    auto terms = p.terms();
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto &[d, c] = *it;
        const bool negative = sgn(c) < 0;
        const rational mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (d == 0)
            out += to_string(mag);
        else if (mag == 1)
            out += detail::format_lambda_power(d);
        else
            out += to_string(mag) + "*" + detail::format_lambda_power(d);
    }
    return out;
}

inline std::ostream &operator<<(std::ostream &os, const lambda_poly &p)
{
    return os << to_string(p);
}

} // namespace ibialg
