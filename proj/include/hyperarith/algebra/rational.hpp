#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperarith {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of |n| in ascending prime order; empty for |n| <= 1.
std::vector<PrimePower> factorize(const Integer& n);

/// Distinct primes dividing |n|, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

/// Signed squarefree kernel: n = s * m^2 with s squarefree. n must be nonzero.
Integer squarefree_part(const Integer& n);

/// Canonical representative of q modulo (Q*)^2: the signed squarefree integer
/// in the same square class. q must be nonzero.
Integer square_class(const Rational& q);

bool is_perfect_square(const Integer& n);

/// Exact square root in Q, if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

bool is_integer(const Rational& q);

/// "3", "-2/5", etc. Always canonical.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b"; result is canonicalized. Throws
/// std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Last continued-fraction convergent of x whose denominator does not exceed
/// max_denominator. Used to recover exact coefficients from truncated
/// high-precision values.
Rational rationalize(const Rational& x, const Integer& max_denominator);

}  // namespace hyperarith
