#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace arr {

/// Exact rational scalar; mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using ExactScalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError(syntax) on malformed input or q = 0.
ExactScalar parse_scalar(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const ExactScalar& value);

/// Binomial coefficient binom(n, k) for n >= 0; zero when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Converts to int64, throwing ResourceError if out of range.
std::int64_t to_int64(const mpz_class& value);

}  // namespace arr
