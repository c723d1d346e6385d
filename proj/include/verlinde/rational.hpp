#ifndef VERLINDE_RATIONAL_HPP
#define VERLINDE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace verlinde {

using ExactRational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p" or "p/q" and returns the canonical value.
ExactRational parse_rational(const std::string& text);

std::string to_string(const ExactRational& q);
std::string to_string(const BigInt& z);

// Real q-th root of a rational if it exists (positive root for positive input).
bool rational_root(const ExactRational& value, unsigned long q, ExactRational& out);

ExactRational rational_pow(const ExactRational& base, long exponent);

BigInt binomial(long n, long k);

using RationalMatrix = std::vector<std::vector<ExactRational>>;
// Gauss-Jordan inverse; throws std::domain_error if singular.
RationalMatrix invert_matrix(const RationalMatrix& m);

} // namespace verlinde

#endif
