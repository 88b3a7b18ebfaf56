#ifndef SUPERCODIM_RATIONAL_HPP
#define SUPERCODIM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace supercodim {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense coefficient vector over the rationals.
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (decimal, optional sign). Returns false on malformed
/// input or a zero denominator; the result is canonicalized.
bool parse_rational(std::string_view text, Rational& out);

/// "p/q" with q > 1 omitted when the value is an integer.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer pow(const Integer& base, unsigned long exponent);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

bool is_zero(const Vector& v);

}  // namespace supercodim

#endif
