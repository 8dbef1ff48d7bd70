#include "hyperarith/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperarith {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::from_descending(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v.emplace_back(*it);
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

bool RationalPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalInterval RationalPolynomial::evaluate(const RationalInterval& iv) const {
  RationalInterval acc{0, 0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational a = acc.lo * iv.lo, b = acc.lo * iv.hi, c = acc.hi * iv.lo, d = acc.hi * iv.hi;
    acc.lo = std::min({a, b, c, d}) + *it;
    acc.hi = std::max({a, b, c, d}) + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RationalPolynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational inv_lead = 1 / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial s0 = RationalPolynomial::constant(1), s1;
  RationalPolynomial t0, t1 = RationalPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPolynomial s2 = s0 - q * s1;
    RationalPolynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

bool is_squarefree(const RationalPolynomial& p) {
  if (p.degree() <= 0) return !p.is_zero();
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RationalPolynomial r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<RationalPolynomial>& chain, const Rational& lo,
                        const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

Rational root_bound(const RationalPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficients()[i] / p.leading())));
  return m + 1;
}

std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& p,
                                                 const Rational& max_width) {
  std::vector<RationalInterval> out;
  if (p.degree() < 1) return out;
  const auto chain = sturm_chain(p);
  const Rational b = root_bound(p);
  std::vector<RationalInterval> work{{-b, b}};
  while (!work.empty()) {
    RationalInterval iv = work.back();
    work.pop_back();
    std::size_t n = count_roots(chain, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      while (iv.width() > max_width) iv = bisect_root(p, iv);
      out.push_back(iv);
      continue;
    }
    Rational mid = iv.midpoint();
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

RationalInterval bisect_root(const RationalPolynomial& p, const RationalInterval& iv) {
  // Root lies in (lo, hi]; signs of p at the ends decide the half.
  Rational mid = iv.midpoint();
  int s_mid = sgn(p(mid));
  if (s_mid == 0) return {mid - (mid - iv.lo) / 2, mid};
  int s_hi = sgn(p(iv.hi));
  if (s_hi == 0) return {mid, iv.hi};
  if (s_mid != s_hi) return {mid, iv.hi};
  return {iv.lo, mid};
}

}  // namespace hyperarith
