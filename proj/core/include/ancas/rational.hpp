#ifndef ANCAS_RATIONAL_HPP
#define ANCAS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ancas {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational scalar, always reduced, denominator > 0 (GMP canonical form).
/// No floating point is used anywhere in the library.
using Rat = mpq_class;

Int factorial(long n);
Int binomial(long n, long k);

/// base^e for e >= 0.
Int ipow(const Int& base, long e);
Rat rpow(const Rat& base, long e);

/// Renders "p" for integers and "p/q" otherwise; never a decimal.
std::string to_string(const Rat& r);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace ancas

#endif
