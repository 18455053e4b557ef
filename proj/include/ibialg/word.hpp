#pragma once

// The free algebra k<x_1..x_n> on words with the weighted coproduct, the
// deconcatenation coproduct of weight -1, and the one-variable algebra k[x]
// with its weighted coproduct.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "lincomb.hpp"

namespace ibialg
{

struct word_space;

/// A monomial of the free algebra. Each char of `letters` is an index into
/// the alphabet; the empty word is the unit. Ordered by length, then
/// lexicographically.
struct word {
    using space_type = word_space;
    std::string letters;

    std::size_t length() const noexcept
    {
        return letters.size();
    }

    friend bool operator==(const word &, const word &) = default;

    friend std::strong_ordering operator<=>(const word &a, const word &b)
    {
        if (auto c = a.letters.size() <=> b.letters.size(); c != 0)
            return c;
        const int c = a.letters.compare(b.letters);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

inline word make_word(std::initializer_list<int> letters)
{
    word w;
    for (int l : letters)
        w.letters.push_back(static_cast<char>(l));
    return w;
}

struct word_space {
    std::vector<std::string> alphabet;

    std::string name() const
    {
        const bool single = std::all_of(alphabet.begin(), alphabet.end(), [](const auto &s) { return s.size() == 1; });
        std::string out = "word:";
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (i && !single)
                out += ",";
            out += alphabet[i];
        }
        return out;
    }

    std::string format(const word &w) const
    {
        if (w.letters.empty())
            return "1";
        std::string out;
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i)
                out += "*";
            out += alphabet.at(static_cast<unsigned char>(w.letters[i]));
        }
        return out;
    }

    void validate(const word &w) const
    {
        for (char c : w.letters)
            if (static_cast<unsigned char>(c) >= alphabet.size())
                throw alphabet_mismatch("letter index " + std::to_string(static_cast<unsigned char>(c))
                                        + " is outside the alphabet of " + name());
    }

    /// Index of a letter name, or -1.
    int find(const std::string &letter) const
    {
        auto it = std::find(alphabet.begin(), alphabet.end(), letter);
        return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
    }

    friend bool operator==(const word_space &, const word_space &) = default;
};

namespace detail
{

inline bool is_identifier(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline bool is_weight_symbol(const std::string &s)
{
    std::string lower;
    for (char c : s)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return lower == "l" || lower == "lambda";
}

} // namespace detail

/// Letter names must be distinct identifiers other than the weight symbol.
inline space_ptr<word> make_word_space(std::vector<std::string> alphabet)
{
    if (alphabet.empty())
        throw alphabet_mismatch("alphabet must not be empty");
    if (alphabet.size() > 255)
        throw alphabet_mismatch("alphabet has more than 255 letters");
    std::set<std::string> seen;
    for (const auto &l : alphabet) {
        if (!detail::is_identifier(l))
            throw alphabet_mismatch("letter name '" + l + "' is not an identifier");
        if (detail::is_weight_symbol(l))
            throw alphabet_mismatch("letter name '" + l + "' collides with the weight symbol");
        if (!seen.insert(l).second)
            throw alphabet_mismatch("letter name '" + l + "' appears twice");
    }
    return std::make_shared<const word_space>(word_space{std::move(alphabet)});
}

inline word concat(const word_space &space, const word &a, const word &b)
{
    space.validate(a);
    space.validate(b);
    return word{a.letters + b.letters};
}

/// w[i,j]: letters i through j, 1-indexed and inclusive.
inline word subword(const word &w, std::size_t i, std::size_t j)
{
    if (i < 1 || i > j || j > w.length())
        throw index_out_of_range("subword [" + std::to_string(i) + "," + std::to_string(j)
                                 + "] of a word of length " + std::to_string(w.length()));
    return word{w.letters.substr(i - 1, j - i + 1)};
}

/// Delta(1) = -weight (1 (x) 1);
/// Delta(w) = sum_{i=1}^{n} w[1,i] (x) w[i,n] + weight sum_{i=1}^{n-1} w[1,i] (x) w[i+1,n].
/// Adjacent legs of the weight-free part share letter i.
inline tensor<word> weighted_word_coproduct(const space_ptr<word> &space, const word &w, const lambda_poly &weight)
{
    space->validate(w);
    tensor<word> out(space, 2);
    const std::size_t n = w.length();
    if (n == 0) {
        out.add_term({word{}, word{}}, -weight);
        return out;
    }
    for (std::size_t i = 1; i <= n; ++i)
        out.add_term({subword(w, 1, i), subword(w, i, n)}, 1);
    for (std::size_t i = 1; i + 1 <= n; ++i)
        out.add_term({subword(w, 1, i), subword(w, i + 1, n)}, weight);
    return out;
}

/// Delta(v_1..v_n) = sum_{i=0}^{n} v_1..v_i (x) v_{i+1}..v_n
inline tensor<word> deconcat_coproduct(const space_ptr<word> &space, const word &w)
{
    space->validate(w);
    tensor<word> out(space, 2);
    for (std::size_t i = 0; i <= w.length(); ++i)
        out.add_term({word{w.letters.substr(0, i)}, word{w.letters.substr(i)}}, 1);
    return out;
}

/// Every word of length <= max_len over `letters` letters, in canonical order.
inline std::vector<word> words_up_to(std::size_t letters, std::size_t max_len)
{
    std::vector<word> out{word{}};
    std::vector<word> layer{word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<word> next;
        next.reserve(layer.size() * letters);
        for (const auto &w : layer)
            for (std::size_t l = 0; l < letters; ++l)
                next.push_back(word{w.letters + static_cast<char>(l)});
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

namespace detail
{

inline algebra_definition<word> word_definition(std::vector<std::string> alphabet)
{
    auto space = make_word_space(std::move(alphabet));
    const std::size_t sample_len = space->alphabet.size() <= 4 ? 2 : 1;
    return algebra_definition<word>{
        .name = space->name(),
        .space = space,
        .weight = lambda_poly(),
        .product = [space](const word &a, const word &b) { return element<word>(space, concat(*space, a, b)); },
        .unit = element<word>(space, word{}),
        .coproduct = {},
        .basis = words_up_to(space->alphabet.size(), sample_len),
        .finite_basis = false,
    };
}

} // namespace detail

/// k<alphabet> with the weighted coproduct. The default weight is the
/// generic symbol L.
inline algebra<word> word_algebra(std::vector<std::string> alphabet, lambda_poly weight = lambda_poly::lambda())
{
    auto def = detail::word_definition(std::move(alphabet));
    def.weight = weight;
    def.coproduct = [space = def.space, weight](const word &w) { return weighted_word_coproduct(space, w, weight); };
    return algebra<word>(std::move(def));
}

/// Tensor algebra with deconcatenation, weight -1.
inline algebra<word> deconcat_algebra(std::vector<std::string> alphabet)
{
    auto def = detail::word_definition(std::move(alphabet));
    def.name = "deconcat:" + def.name.substr(5);
    def.weight = lambda_poly(-1);
    def.coproduct = [space = def.space](const word &w) { return deconcat_coproduct(space, w); };
    return algebra<word>(std::move(def));
}

// ---------------------------------------------------------------------------
// k[x]

struct univar_space;

/// x^exponent
struct monomial {
    using space_type = univar_space;
    unsigned exponent = 0;

    friend auto operator<=>(const monomial &, const monomial &) = default;
};

struct univar_space {
    std::string name() const
    {
        return "univar";
    }

    std::string format(const monomial &m) const
    {
        if (m.exponent == 0)
            return "1";
        if (m.exponent == 1)
            return "x";
        return "x^" + std::to_string(m.exponent);
    }

    void validate(const monomial &) const {}

    friend bool operator==(const univar_space &, const univar_space &) = default;
};

inline space_ptr<monomial> make_univar_space()
{
    return std::make_shared<const univar_space>();
}

/// Delta(1) = -weight (1 (x) 1);
/// Delta(x^n) = sum_{i=0}^{n-1} x^i (x) x^{n-1-i} + weight sum_{i=1}^{n-1} x^i (x) x^{n-i}.
inline tensor<monomial> univar_coproduct(const space_ptr<monomial> &space, const monomial &m,
                                         const lambda_poly &weight)
{
    tensor<monomial> out(space, 2);
    const unsigned n = m.exponent;
    if (n == 0) {
        out.add_term({monomial{0}, monomial{0}}, -weight);
        return out;
    }
    for (unsigned i = 0; i <= n - 1; ++i)
        out.add_term({monomial{i}, monomial{n - 1 - i}}, 1);
    for (unsigned i = 1; i <= n - 1; ++i)
        out.add_term({monomial{i}, monomial{n - i}}, weight);
    return out;
}

inline algebra<monomial> univar_algebra(lambda_poly weight = lambda_poly::lambda())
{
    auto space = make_univar_space();
    std::vector<monomial> sample;
    for (unsigned e = 0; e <= 4; ++e)
        sample.push_back({e});
    return algebra<monomial>(algebra_definition<monomial>{
        .name = "univar",
        .space = space,
        .weight = weight,
        .product = [space](const monomial &a,
                           const monomial &b) { return element<monomial>(space, {a.exponent + b.exponent}); },
        .unit = element<monomial>(space, monomial{0}),
        .coproduct = [space, weight](const monomial &m) { return univar_coproduct(space, m, weight); },
        .basis = std::move(sample),
        .finite_basis = false,
    });
}

} // namespace ibialg
