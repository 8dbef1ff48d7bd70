#include "hyperarith/algebra/number_field.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperarith/core/error.hpp"
#include "hyperarith/linalg/elimination.hpp"
#include "numeric_roots.hpp"

namespace hyperarith {
namespace detail {

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Complex evaluate(const RationalPolynomial& p, const Complex& z) {
  Complex acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Complex(to_real(*it));
  return acc;
}

Real evaluate(const RationalPolynomial& p, const Real& x) {
  Real acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

std::vector<Complex> complex_roots(const RationalPolynomial& p_in) {
  const RationalPolynomial p = p_in.monic();
  const int d = p.degree();
  if (d < 1) return {};
  if (d == 1) return {Complex(to_real(-p.coefficient(0)))};
  const RationalPolynomial dp = p.derivative();
  std::vector<Complex> z(static_cast<std::size_t>(d));
  const Complex seed(Real("0.4"), Real("0.9"));
  const Real radius = to_real(root_bound(p));
  Complex w = 1;
  for (auto& zi : z) {
    w *= seed;
    zi = w * radius;
  }
  const Real tol("1e-95");
  for (int iter = 0; iter < 5000; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      Complex denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= (z[i] - z[j]);
      Complex delta = evaluate(p, z[i]) / denom;
      z[i] -= delta;
      Real scale = std::max(Real(1), Real(abs(z[i])));
      worst = std::max(worst, Real(abs(delta) / scale));
    }
    if (worst < tol) break;
  }
  for (auto& zi : z)
    for (int k = 0; k < 3; ++k) {
      Complex dv = evaluate(dp, zi);
      if (abs(dv) == 0) break;
      zi -= evaluate(p, zi) / dv;
    }
  return z;
}

}  // namespace detail

namespace {

using detail::Complex;
using detail::Real;

Integer round_to_integer(const Real& x) {
  auto r = boost::multiprecision::round(x).convert_to<boost::multiprecision::cpp_int>();
  return Integer(r.str());
}

// A monic integer polynomial factors over Q iff some subset of its complex
// roots has a monic integer product polynomial dividing it.
bool has_proper_factor(const RationalPolynomial& f, const std::vector<Complex>& roots) {
  const std::size_t d = roots.size();
  const Real tol("1e-40");
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= d / 2; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Complex> prod{Complex(1)};
      for (auto i : idx) {
        std::vector<Complex> next(prod.size() + 1, Complex(0));
        for (std::size_t j = 0; j < prod.size(); ++j) {
          next[j + 1] += prod[j];
          next[j] -= prod[j] * roots[i];
        }
        prod = std::move(next);
      }
      bool near_integral = true;
      std::vector<Integer> coeffs;
      for (const auto& c : prod) {
        Real re = c.real();
        Real nearest = boost::multiprecision::round(re);
        Real scale = std::max(Real(1), Real(abs(re)));
        if (abs(c.imag()) > tol * scale || abs(re - nearest) > tol * scale) {
          near_integral = false;
          break;
        }
        coeffs.push_back(round_to_integer(re));
      }
      if (near_integral) {
        std::vector<Rational> g(coeffs.begin(), coeffs.end());
        RationalPolynomial candidate(std::move(g));
        if ((f % candidate).is_zero()) return true;
      }
      // next combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == d - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

std::shared_ptr<detail::NumericRoots> build_numeric(const RationalPolynomial& f,
                                                     const std::vector<RationalInterval>& ivs) {
  auto out = std::make_shared<detail::NumericRoots>();
  const auto roots = detail::complex_roots(f);
  const Real real_tol("1e-60");
  std::vector<Real> reals;
  std::vector<Complex> uppers;
  for (const auto& z : roots) {
    if (abs(z.imag()) < real_tol)
      reals.push_back(z.real());
    else if (z.imag() > 0)
      uppers.push_back(z);
  }
  std::sort(reals.begin(), reals.end());
  std::sort(uppers.begin(), uppers.end(), [](const Complex& a, const Complex& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  if (reals.size() != ivs.size() || reals.size() + 2 * uppers.size() != roots.size())
    throw InvalidField("numeric root approximation disagrees with Sturm count");
  const Real slack("1e-80");
  for (std::size_t j = 0; j < reals.size(); ++j) {
    // Each approximation must lie in its isolating interval.
    if (reals[j] < detail::to_real(ivs[j].lo) - slack || reals[j] > detail::to_real(ivs[j].hi) + slack)
      throw InvalidField("numeric real root escaped its isolating interval");
  }
  out->real_roots = reals;
  out->complex_upper = uppers;
  for (const auto& r : reals) out->points.emplace_back(r);
  for (const auto& z : uppers) {
    out->points.push_back(z);
    out->points.push_back(conj(z));
  }
  // Invert the Vandermonde matrix V[j][k] = points[j]^k by Gauss-Jordan.
  const std::size_t d = out->points.size();
  std::vector<std::vector<Complex>> a(d, std::vector<Complex>(2 * d, Complex(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Complex pw = 1;
    for (std::size_t k = 0; k < d; ++k) {
      a[j][k] = pw;
      pw *= out->points[j];
    }
    a[j][d + j] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < d; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    Complex inv = Complex(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c) continue;
      Complex fct = a[r][c];
      if (fct == Complex(0)) continue;
      for (std::size_t k = 0; k < 2 * d; ++k) a[r][k] -= fct * a[c][k];
    }
  }
  // a = [I | V^{-1}] with V rows indexed by points; coefficients = V^{-1} * values.
  out->inverse_vandermonde.assign(d, std::vector<Complex>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out->inverse_vandermonde[i][j] = a[i][d + j];
  return out;
}

RationalPolynomial reduce(const RationalPolynomial& p, const RationalPolynomial& f) {
  return p.degree() < f.degree() ? p : p % f;
}

std::vector<Rational> padded(const RationalPolynomial& p, std::size_t d) {
  std::vector<Rational> c(d, Rational(0));
  for (std::size_t i = 0; i < p.coefficients().size() && i < d; ++i) c[i] = p.coefficients()[i];
  return c;
}

Rational resultant(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rational r = 1;
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  if (m == 0) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a.leading();
    return r;
  }
  RationalPolynomial r = a % b;
  if (r.is_zero()) return 0;
  Rational factor = 1;
  for (int i = 0; i < m - r.degree(); ++i) factor *= b.leading();
  if ((m * n) % 2 == 1) factor = -factor;
  return factor * resultant(b, r);
}

}  // namespace

Rational discriminant(const RationalPolynomial& p) {
  const int n = p.degree();
  Rational r = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

FieldPtr NumberField::create(const RationalPolynomial& f, std::optional<std::size_t> chosen) {
  if (f.degree() < 1) throw InvalidField("defining polynomial must have positive degree");
  if (!f.is_monic()) throw InvalidField("defining polynomial must be monic");
  if (!f.has_integer_coefficients()) throw InvalidField("defining polynomial must have integer coefficients");
  if (!is_squarefree(f)) throw InvalidField("defining polynomial is not squarefree");
  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->poly_ = f;
  field->intervals_ = isolate_real_roots(f, Rational(1, 1) / Rational(Integer(1) << 64));
  if (field->intervals_.empty()) throw InvalidField("defining polynomial has no real root");
  field->chosen_ = chosen.value_or(0);
  if (field->chosen_ >= field->intervals_.size())
    throw InvalidField("embedding index " + std::to_string(field->chosen_) + " out of range (" +
                       std::to_string(field->intervals_.size()) + " real roots)");
  field->numeric_ = build_numeric(f, field->intervals_);
  if (f.degree() > 1) {
    std::vector<Complex> roots = field->numeric_->points;
    if (has_proper_factor(f, roots)) throw InvalidField("defining polynomial is reducible over Q");
  }
  return field;
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create(RationalPolynomial(std::vector<Rational>{0, 1}));
  return q;
}

FieldPtr NumberField::with_embedding(std::size_t j) const {
  if (j >= intervals_.size()) throw InvalidField("embedding index out of range");
  auto copy = std::shared_ptr<NumberField>(new NumberField(*this));
  copy->chosen_ = j;
  return copy;
}

std::string NumberField::root_decimal(std::size_t j, int digits) const {
  return numeric_->real_roots.at(j).str(digits);
}

double NumberField::root_approx(std::size_t j) const {
  return static_cast<double>(numeric_->real_roots.at(j));
}

std::string NumberField::describe() const {
  if (is_rationals()) return "Q";
  return "Q[t]/(" + poly_.to_string("t") + "), t ~ " + root_decimal(chosen_, 12);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coefficients)
    : field_(std::move(field)) {
  const std::size_t d = field_->degree();
  RationalPolynomial p(std::move(coefficients));
  coeffs_ = padded(reduce(p, field_->defining_polynomial()), d);
}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  coeffs_.assign(field_->degree(), Rational(0));
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

FieldElement FieldElement::generator(FieldPtr field) {
  return FieldElement(field, std::vector<Rational>{0, 1});
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::optional<Rational> FieldElement::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  return coeffs_[0];
}

void FieldElement::check_same_field(const FieldElement& b) const {
  if (field_ != b.field_ && !(*field_ == *b.field_)) throw FieldMismatch();
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same_field(b);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  RationalPolynomial prod = as_polynomial() * b.as_polynomial();
  coeffs_ = padded(reduce(prod, field_->defining_polynomial()), coeffs_.size());
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (coeffs_.size() == 1) return FieldElement(field_, Rational(1 / coeffs_[0]));
  auto eg = extended_gcd(as_polynomial(), field_->defining_polynomial());
  // f irreducible, so gcd is 1 and s * a = 1 mod f.
  return FieldElement(field_, padded(eg.s, coeffs_.size()));
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  check_same_field(b);
  return *this *= b.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = one_like(), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& b) const {
  if (field_ != b.field_ && !(*field_ == *b.field_)) return false;
  return coeffs_ == b.coeffs_;
}

int FieldElement::sign() const { return sign_at_embedding(*this, field_->chosen_embedding()); }

double FieldElement::approx() const { return approx_at(field_->chosen_embedding()); }

double FieldElement::approx_at(std::size_t embedding) const {
  return static_cast<double>(detail::evaluate(as_polynomial(), field_->numeric().real_roots.at(embedding)));
}

std::string FieldElement::decimal(std::size_t embedding, int digits) const {
  return detail::evaluate(as_polynomial(), field_->numeric().real_roots.at(embedding)).str(digits);
}

std::string FieldElement::to_string(const std::string& var) const {
  return as_polynomial().to_string(var);
}

// ---------------------------------------------------------------------------

int sign_at_embedding(const FieldElement& a, std::size_t embedding) {
  if (a.is_zero()) return 0;
  if (auto q = a.as_rational()) return sgn(*q);
  const NumberField& k = *a.field();
  const RationalPolynomial p = a.as_polynomial();
  RationalInterval iv = k.root_interval(embedding);
  // Terminates: a != 0 and f is squarefree, so p does not vanish at the root.
  while (true) {
    RationalInterval img = p.evaluate(iv);
    if (sgn(img.lo) > 0) return 1;
    if (sgn(img.hi) < 0) return -1;
    iv = bisect_root(k.defining_polynomial(), iv);
  }
}

Matrix<Rational> multiplication_matrix(const FieldElement& a) {
  const std::size_t d = a.field()->degree();
  Matrix<Rational> m(d, d, Rational(0));
  FieldElement basis = a.one_like();
  const FieldElement t = FieldElement::generator(a.field());
  for (std::size_t k = 0; k < d; ++k) {
    FieldElement img = a * basis;
    for (std::size_t i = 0; i < d; ++i) m(i, k) = img.coefficients()[i];
    if (d > 1) basis *= t;
  }
  return m;
}

bool is_algebraic_integer(const FieldElement& a) {
  const auto cp = charpoly(multiplication_matrix(a));
  return std::all_of(cp.begin(), cp.end(), [](const Rational& c) { return is_integer(c); });
}

namespace {

std::optional<Rational> continued_fraction(const Real& x, const Integer& max_den) {
  // Convergents computed in floating point; accepted only if very close.
  Integer h2 = 0, h1 = 1, k2 = 1, k1 = 0;
  Real rest = x;
  std::optional<Rational> best;
  for (int iter = 0; iter < 64; ++iter) {
    Real fl = boost::multiprecision::floor(rest);
    Integer a = round_to_integer(fl);
    Integer h = a * h1 + h2, k = a * k1 + k2;
    if (k > max_den) break;
    h2 = h1;
    k2 = k1;
    h1 = h;
    k1 = k;
    Rational q(h1, k1);
    q.canonicalize();
    best = q;
    Real frac = rest - fl;
    if (frac < Real("1e-60")) break;
    rest = 1 / frac;
  }
  if (!best) return std::nullopt;
  Real err = abs(x - detail::to_real(*best));
  if (err > Real("1e-40") * std::max(Real(1), Real(abs(x)))) return std::nullopt;
  return best;
}

// Of the two witnesses +-r, return the one whose lowest nonzero coefficient is positive.
FieldElement normalized_root(const FieldElement& r) {
  for (const auto& c : r.coefficients())
    if (sgn(c) != 0) return sgn(c) > 0 ? r : -r;
  return r;
}

}  // namespace

std::optional<FieldElement> is_square(const FieldElement& a, const SquareRootOptions& options) {
  if (a.is_zero()) return a;
  const FieldPtr& k = a.field();
  if (k->is_rationals()) {
    auto r = rational_sqrt(a.coefficients()[0]);
    if (!r) return std::nullopt;
    return FieldElement(k, *r);
  }
  for (std::size_t j = 0; j < k->real_embedding_count(); ++j)
    if (sign_at_embedding(a, j) < 0) return std::nullopt;

  const auto& num = k->numeric();
  const std::size_t d = k->degree();
  const std::size_t r1 = num.real_roots.size();
  const std::size_t r2 = num.complex_upper.size();
  const RationalPolynomial pa = a.as_polynomial();

  std::vector<Complex> roots;
  roots.reserve(d);
  for (std::size_t j = 0; j < r1; ++j) {
    Real v = detail::evaluate(pa, num.real_roots[j]);
    roots.emplace_back(v > 0 ? Real(sqrt(v)) : Real(0));
  }
  for (std::size_t j = 0; j < r2; ++j) roots.push_back(sqrt(detail::evaluate(pa, num.complex_upper[j])));

  // Denominator-scaled fallback: with m clearing a's denominators, m*sqrt(a)
  // is an algebraic integer, so its power-basis coefficients lie in (1/disc) Z.
  Integer m = 1;
  for (const auto& c : a.coefficients()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), c.get_den_mpz_t());
  const Integer disc = abs(discriminant(k->defining_polynomial()).get_num());
  const Real disc_real(disc.get_str());
  const Real m_real(m.get_str());

  const std::size_t free_signs = r1 + r2;
  const std::size_t patterns = std::size_t{1} << (free_signs - 1);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    std::vector<Complex> values;
    values.reserve(d);
    for (std::size_t j = 0; j < free_signs; ++j) {
      // The first sign is fixed: r and -r are both witnesses.
      bool neg = j > 0 && ((mask >> (j - 1)) & 1U);
      Complex v = neg ? Complex(-roots[j]) : roots[j];
      if (j < r1) {
        values.push_back(v);
      } else {
        values.push_back(v);
        values.push_back(conj(v));
      }
    }
    std::vector<Real> coeffs(d);
    for (std::size_t i = 0; i < d; ++i) {
      Complex acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += num.inverse_vandermonde[i][j] * values[j];
      coeffs[i] = acc.real();
    }
    std::vector<Rational> exact(d);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      auto q = continued_fraction(coeffs[i], options.max_denominator);
      if (q)
        exact[i] = *q;
      else
        ok = false;
    }
    if (ok) {
      FieldElement r(k, exact);
      if (r * r == a) return normalized_root(r);
    }
    for (std::size_t i = 0; i < d; ++i) {
      Integer n = round_to_integer(coeffs[i] * m_real * disc_real);
      exact[i] = Rational(n, Integer(m * disc));
      exact[i].canonicalize();
    }
    FieldElement r(k, exact);
    if (r * r == a) return normalized_root(r);
  }
  return std::nullopt;
}

std::string NonSquareCertificate::describe() const {
  if (kind == Kind::NegativeEmbedding) return "negative at embedding " + std::to_string(embedding);
  return "nonresidue mod " + prime.get_str() + " at t = " + root.get_str();
}

std::optional<NonSquareCertificate> certify_nonsquare(const FieldElement& a,
                                                      unsigned long prime_bound) {
  if (a.is_zero()) return std::nullopt;
  const auto& field = *a.field();
  for (std::size_t j = 0; j < field.real_embedding_count(); ++j) {
    if (sign_at_embedding(a, j) < 0) {
      NonSquareCertificate c{NonSquareCertificate::Kind::NegativeEmbedding};
      c.embedding = j;
      return c;
    }
  }
  const auto& f = field.defining_polynomial();
  const Integer disc = f.degree() > 1 ? Integer(discriminant(f).get_num()) : Integer(1);
  Integer den = 1;
  for (const auto& c : a.coefficients()) den = lcm(den, Integer(c.get_den()));
  Integer p = 2;
  while (p <= prime_bound) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p > prime_bound) break;
    if (disc % p == 0 || den % p == 0) continue;
    for (Integer r = 0; r < p; ++r) {
      Integer fr = 0;
      for (int k = f.degree(); k >= 0; --k) fr = (fr * r + Integer(f.coefficient(k).get_num())) % p;
      if (fr != 0) continue;
      // a(r) mod p, with the denominators inverted mod p.
      Integer value = 0;
      const auto& co = a.coefficients();
      for (std::size_t k = co.size(); k-- > 0;) {
        Integer num = co[k].get_num(), dinv;
        Integer d = co[k].get_den();
        mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        value = (value * r + num * dinv) % p;
      }
      if (value < 0) value += p;
      if (value == 0) continue;
      if (mpz_legendre(value.get_mpz_t(), p.get_mpz_t()) == -1) {
        NonSquareCertificate c{NonSquareCertificate::Kind::Residue};
        c.prime = p;
        c.root = r;
        return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace hyperarith
