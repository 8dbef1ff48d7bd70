#include "hyperarith/algebra/multiquadratic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hyperarith/core/error.hpp"
#include "hyperarith/linalg/elimination.hpp"

namespace hyperarith {
namespace {

using Bits = std::vector<bool>;

// Square-class exponent vector of a squarefree integer over a fixed list of
// "primes", where -1 is treated as a prime.
Bits exponent_vector(const Integer& d, std::vector<Integer>& primes) {
  std::vector<Integer> support;
  if (sgn(d) < 0) support.emplace_back(-1);
  for (const auto& p : prime_divisors(d)) support.push_back(p);
  for (const auto& p : support)
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  Bits v(primes.size(), false);
  for (const auto& p : support)
    v[static_cast<std::size_t>(std::find(primes.begin(), primes.end(), p) - primes.begin())] = true;
  return v;
}

// Incremental GF(2) elimination; returns true if v was independent (and adds it).
class Gf2Basis {
 public:
  bool insert(Bits v) {
    for (const auto& [pivot, row] : rows_) {
      if (pivot < v.size() && v[pivot]) xor_into(v, row);
    }
    auto it = std::find(v.begin(), v.end(), true);
    if (it == v.end()) return false;
    rows_.emplace_back(static_cast<std::size_t>(it - v.begin()), v);
    return true;
  }

 private:
  static void xor_into(Bits& v, const Bits& r) {
    if (v.size() < r.size()) v.resize(r.size(), false);
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = v[i] != r[i];
  }
  std::vector<std::pair<std::size_t, Bits>> rows_;
};

void check_disc(const Integer& d) {
  if (d == 0 || d == 1 || squarefree_part(d) != d)
    throw InvalidField("multiquadratic generator " + d.get_str() + " is not a squarefree integer != 0, 1");
}

// Multiplication in the product basis with generators d.
std::vector<Rational> product_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                  const std::vector<Integer>& d) {
  std::vector<Rational> c(a.size(), Rational(0));
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (sgn(a[s]) == 0) continue;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (sgn(b[t]) == 0) continue;
      Rational f = a[s] * b[t];
      std::size_t common = s & t;
      for (std::size_t i = 0; i < d.size(); ++i)
        if (common & (std::size_t{1} << i)) f *= d[i];
      c[s ^ t] += f;
    }
  }
  return c;
}

}  // namespace

bool in_square_class_span(const std::vector<Integer>& gens, const Integer& d) {
  if (d == 0) return false;
  Integer sf = squarefree_part(d);
  if (sf == 1) return true;
  std::vector<Integer> primes;
  Gf2Basis basis;
  for (const auto& g : gens) basis.insert(exponent_vector(squarefree_part(g), primes));
  return !basis.insert(exponent_vector(sf, primes));
}

std::vector<Integer> independent_square_classes(const std::vector<Integer>& gens) {
  std::vector<Integer> sorted;
  for (const auto& g : gens) {
    if (g == 0) throw InvalidField("zero is not a square class generator");
    sorted.push_back(squarefree_part(g));
  }
  std::sort(sorted.begin(), sorted.end(), [](const Integer& a, const Integer& b) {
    const int c = cmp(abs(a), abs(b));
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<Integer> primes, out;
  Gf2Basis basis;
  for (const auto& d : sorted)
    if (d != 1 && basis.insert(exponent_vector(d, primes))) out.push_back(d);
  return out;
}

bool same_square_class_span(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  for (const auto& x : a)
    if (!in_square_class_span(b, x)) return false;
  for (const auto& x : b)
    if (!in_square_class_span(a, x)) return false;
  return true;
}

MultiquadraticField MultiquadraticField::create(const std::vector<Integer>& discs) {
  MultiquadraticField out;
  std::vector<Integer> primes;
  Gf2Basis basis;
  for (const auto& d : discs) {
    check_disc(d);
    if (basis.insert(exponent_vector(d, primes))) out.generators_.push_back(d);
  }
  const std::size_t t = out.generators_.size();
  const std::size_t n = std::size_t{1} << t;
  out.totally_real_ = std::all_of(out.generators_.begin(), out.generators_.end(),
                                  [](const Integer& d) { return sgn(d) > 0; });

  // theta = sum sqrt(d_i) is primitive: its conjugates sum +-sqrt(d_i) are
  // pairwise distinct because the sqrt(d_i) are linearly independent over Q.
  out.weights_.assign(t, Integer(1));
  std::vector<Rational> theta(n, Rational(0));
  for (std::size_t i = 0; i < t; ++i) theta[std::size_t{1} << i] = Rational(out.weights_[i]);
  Matrix<Rational> powers(n, n + 1, Rational(0));
  std::vector<Rational> cur(n, Rational(0));
  cur[0] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t r = 0; r < n; ++r) powers(r, k) = cur[r];
    cur = product_mul(cur, theta, out.generators_);
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Matrix<Rational> m = powers.submatrix(idx, idx);
  auto minv = inverse(m);
  if (!minv) throw InvalidField("sum of square roots is not a primitive element");
  auto c = *minv * powers.column(n);
  std::vector<Rational> mp(n + 1);
  for (std::size_t k = 0; k < n; ++k) mp[k] = -c[k];
  mp[n] = 1;
  out.min_poly_ = RationalPolynomial(mp);
  out.power_to_product_ = m;
  out.product_to_power_ = *minv;

  if (!out.totally_real_) return out;

  const std::size_t chosen = n - 1;  // all square roots positive: the largest root
  out.field_ = NumberField::create(out.min_poly_, chosen);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<Rational> e(n, Rational(0));
    e[std::size_t{1} << i] = 1;
    out.sqrt_gens_.emplace_back(out.field_, *out.product_to_power_ * e);
  }
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::vector<Rational> img(n, Rational(0));
    for (std::size_t i = 0; i < t; ++i)
      img[std::size_t{1} << i] = Rational((mask >> i) & 1U ? -out.weights_[i] : out.weights_[i]);
    out.theta_images_.emplace_back(out.field_, *out.product_to_power_ * img);
  }
  return out;
}

bool MultiquadraticField::contains_sqrt(const Integer& d) const {
  return in_square_class_span(generators_, d);
}

std::optional<FieldElement> MultiquadraticField::sqrt_of(const Integer& d) const {
  if (!field_ || d == 0) return std::nullopt;
  // Find the subset S with prod_{S} d_i in the class of sf.
  const std::size_t t = generators_.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
    Integer prod = 1;
    for (std::size_t i = 0; i < t; ++i)
      if (mask & (std::size_t{1} << i)) prod *= generators_[i];
    Rational ratio = Rational(d) / Rational(prod);
    auto r = rational_sqrt(ratio);
    if (!r) continue;
    FieldElement out(field_, *r);
    for (std::size_t i = 0; i < t; ++i)
      if (mask & (std::size_t{1} << i)) out *= sqrt_gens_[i];
    return out;
  }
  return std::nullopt;
}

FieldElement MultiquadraticField::apply_automorphism(const FieldElement& x,
                                                     const std::vector<int>& signs) const {
  if (!field_) throw InvalidField("automorphisms need the real realization");
  if (signs.size() != generators_.size()) throw DimensionMismatch("automorphism sign vector length");
  std::size_t mask = 0;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] < 0) mask |= std::size_t{1} << i;
  const FieldElement& img = theta_images_[mask];
  FieldElement acc = x.zero_like();
  const auto& c = x.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * img + FieldElement(field_, *it);
  return acc;
}

std::vector<std::vector<int>> MultiquadraticField::automorphism_signs() const {
  std::vector<std::vector<int>> out;
  const std::size_t t = generators_.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
    std::vector<int> s(t);
    for (std::size_t i = 0; i < t; ++i) s[i] = (mask >> i) & 1U ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Rational> MultiquadraticField::product_coordinates(const FieldElement& x) const {
  return *power_to_product_ * x.coefficients();
}

std::string MultiquadraticField::render(const FieldElement& x) const {
  const auto coords = product_coordinates(x);
  std::ostringstream os;
  bool first = true;
  for (std::size_t mask = 0; mask < coords.size(); ++mask) {
    const Rational& c = coords[mask];
    if (sgn(c) == 0) continue;
    Integer radicand = 1;
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (mask & (std::size_t{1} << i)) radicand *= generators_[i];
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mask == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "sqrt(" << radicand.get_str() << ")";
    }
  }
  return first ? "0" : os.str();
}

}  // namespace hyperarith
