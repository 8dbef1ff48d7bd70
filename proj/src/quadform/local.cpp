#include "hyperarith/quadform/local.hpp"

#include <algorithm>
#include <set>

#include "hyperarith/core/error.hpp"

namespace hyperarith {
namespace {

// v = p^k * u with p not dividing u.
int split_valuation(Integer& v, const Integer& p) {
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

int legendre(const Integer& u, const Integer& p) {
  Integer r = u % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// Residues mod 8 of an odd integer.
int eps2(const Integer& u) {
  Integer r = u % 4;
  if (r < 0) r += 4;
  return r == 3 ? 1 : 0;
}

int omega2(const Integer& u) {
  Integer r = u % 8;
  if (r < 0) r += 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& place) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DivisionByZero();
  if (place == kInfinitePlace) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = place;
  Integer u = square_class(a), v = square_class(b);
  const int alpha = split_valuation(u, p);
  const int beta = split_valuation(v, p);
  if (p == 2) {
    const int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  if (alpha % 2 == 1 && beta % 2 == 1) {
    Integer half = (p - 1) / 2;
    if (half % 2 == 1) s = -s;
  }
  if (beta % 2 == 1) s *= legendre(u, p);
  if (alpha % 2 == 1) s *= legendre(v, p);
  return s;
}

int hasse_invariant(const std::vector<Rational>& d, const Integer& place) {
  int c = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) c *= hilbert_symbol(d[i], d[j], place);
  return c;
}

Integer discriminant_class(const std::vector<Rational>& d) {
  Rational prod = 1;
  for (const auto& x : d) prod *= x;
  if (sgn(prod) == 0) throw DegenerateForm();
  return square_class(prod);
}

std::vector<Integer> bad_primes(const std::vector<Rational>& values) {
  std::set<Integer> s{Integer(2)};
  for (const auto& x : values) {
    if (sgn(x) == 0) continue;
    for (const auto& p : prime_divisors(abs(Integer(x.get_num())))) s.insert(p);
    for (const auto& p : prime_divisors(Integer(x.get_den()))) s.insert(p);
  }
  return {s.begin(), s.end()};
}

}  // namespace hyperarith
