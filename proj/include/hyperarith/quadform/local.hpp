#pragma once

#include <vector>

#include "hyperarith/algebra/rational.hpp"

namespace hyperarith {

/// Places of Q: a prime, or 0 for the real place.
inline const Integer kInfinitePlace = 0;

/// Hilbert symbol (a,b)_v for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place);

/// Hasse invariant prod_{i<j} (a_i, a_j)_v of the diagonal form <a_1,...,a_m>.
int hasse_invariant(const std::vector<Rational>& diagonal, const Integer& place);

/// Product of the entries as a signed squarefree integer.
Integer discriminant_class(const std::vector<Rational>& diagonal);

/// 2 together with every prime dividing a numerator or denominator of the
/// given rationals, sorted.
std::vector<Integer> bad_primes(const std::vector<Rational>& values);

}  // namespace hyperarith
