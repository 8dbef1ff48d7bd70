#include "hyperarith/algebra/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hyperarith {
namespace {

constexpr unsigned long kTrialLimit = 100000;

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<Integer> primes;
  if (n <= 1) return {};
  for (unsigned long p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part of zero");
  Integer s = sgn(n) < 0 ? -1 : 1;
  for (const auto& pp : factorize(n))
    if (pp.exponent % 2 == 1) s *= pp.prime;
  return s;
}

Integer square_class(const Rational& q) {
  if (q == 0) throw std::invalid_argument("square_class of zero");
  // a/b ~ a*b modulo squares.
  return squarefree_part(Integer(q.get_num() * q.get_den()));
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  Rational r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational rationalize(const Rational& x, const Integer& max_denominator) {
  // h1/k1 is the latest convergent, h2/k2 the one before.
  Integer h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  Rational rest = x;
  Rational best;
  for (int iter = 0; iter < 256; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer h = a * h1 + h2;
    Integer k = a * k1 + k2;
    if (k > max_denominator) break;
    h2 = h1;
    k2 = k1;
    h1 = h;
    k1 = k;
    best = Rational(h1, k1);
    best.canonicalize();
    Rational frac = rest - a;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return best;
}

}  // namespace hyperarith
