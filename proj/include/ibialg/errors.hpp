#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ibialg
{

/// Base of every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live in different algebras, or tensors have different leg counts.
struct kind_mismatch : error {
    using error::error;
};

/// A matrix index lies outside 1..n.
struct dimension_mismatch : error {
    using error::error;
};

/// A word uses a letter outside its alphabet.
struct alphabet_mismatch : error {
    using error::error;
};

struct index_out_of_range : error {
    using error::error;
};

/// Operation requires an instance whose weight is the zero polynomial.
struct weight_not_zero : error {
    using error::error;
};

/// D^k(a) did not vanish for any k up to the cap, so the antipode series
/// cannot be truncated.
struct not_nilpotent_within_cap : error {
    using error::error;
};

struct l_square_not_zero : error {
    using error::error;
};

/// An instance failed its construction-time self check (associativity, unit).
struct invalid_instance : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string &what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), position(pos)
    {
    }
    std::size_t position;
};

struct unknown_atom : parse_error {
    using parse_error::parse_error;
};

struct unknown_suite : error {
    using error::error;
};

/// A malformed algebra selector, or an option that does not apply to it.
struct usage_error : error {
    using error::error;
};

} // namespace ibialg
