// rational.hpp: exact rational arithmetic and small combinatorial counts.
#ifndef RPM_RATIONAL_HPP
#define RPM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace rpm {

using Int = mpz_class;
using Rat = mpq_class;

/** n! as an exact integer. */
Int factorial(long n);

/** Double factorial n!! with n!! = 1 for n in {-1, 0}. Negative n below -1 is rejected. */
Int double_factorial(long n);

/** Binomial coefficient C(n, k); zero when k < 0 or k > n. */
Int binomial(long n, long k);

/** x^e for a nonnegative integer exponent (0^0 = 1). */
Rat rat_pow(const Rat& x, long e);

/**
 * Parse "p", "p/q", or a plain decimal such as "0.35" into an exact rational.
 * Throws BadInput on malformed text or zero denominator.
 */
Rat rat_from_string(const std::string& text);

/** Canonical text form: "p" when the denominator is 1, otherwise "p/q" in lowest terms. */
std::string rat_to_string(const Rat& x);

double rat_to_double(const Rat& x);

} // namespace rpm

#endif
