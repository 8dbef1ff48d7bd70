#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperarith/algebra/polynomial.hpp"
#include "hyperarith/algebra/rational.hpp"
#include "hyperarith/linalg/matrix.hpp"
#include "hyperarith/linalg/scalar.hpp"

namespace hyperarith {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

namespace detail {
struct NumericRoots;
}

/// K = Q[t]/(f) for a monic, squarefree, irreducible integer polynomial f with
/// at least one real root. Real embeddings are indexed by ascending root; one
/// of them is the chosen ("identity") embedding. Immutable once built.
class NumberField {
 public:
  /// Validates f and isolates its real roots. Throws InvalidField.
  static FieldPtr create(const RationalPolynomial& defining_polynomial,
                         std::optional<std::size_t> chosen_embedding = std::nullopt);
  /// Q, presented as Q[t]/(t).
  static FieldPtr rationals();

  const RationalPolynomial& defining_polynomial() const { return poly_; }
  std::size_t degree() const { return static_cast<std::size_t>(poly_.degree()); }
  std::size_t real_embedding_count() const { return intervals_.size(); }
  std::size_t chosen_embedding() const { return chosen_; }
  bool is_totally_real() const { return intervals_.size() == degree(); }
  bool is_rationals() const { return degree() == 1; }

  /// Isolating interval of the j-th real root, pre-refined.
  const RationalInterval& root_interval(std::size_t j) const { return intervals_.at(j); }
  /// Decimal approximation (about 100 significant digits) of the j-th real root.
  std::string root_decimal(std::size_t j, int digits = 30) const;
  double root_approx(std::size_t j) const;

  /// Same field with a different chosen embedding.
  FieldPtr with_embedding(std::size_t j) const;

  /// Fields compare equal when they have the same presentation and chosen embedding.
  bool operator==(const NumberField& other) const {
    return poly_ == other.poly_ && chosen_ == other.chosen_;
  }

  const detail::NumericRoots& numeric() const { return *numeric_; }

  std::string describe() const;

 private:
  NumberField() = default;

  RationalPolynomial poly_;
  std::vector<RationalInterval> intervals_;
  std::size_t chosen_ = 0;
  std::shared_ptr<const detail::NumericRoots> numeric_;
};

/// Element of a number field in the power basis 1, t, ..., t^(d-1).
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coefficients);
  FieldElement(FieldPtr field, const Rational& value);

  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  RationalPolynomial as_polynomial() const { return RationalPolynomial(coeffs_); }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  FieldElement zero_like() const { return FieldElement(field_, Rational(0)); }
  FieldElement one_like() const { return FieldElement(field_, Rational(1)); }

  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  bool operator==(const FieldElement& b) const;

  /// Exact sign of the image under the chosen embedding.
  int sign() const;
  double approx() const;
  double approx_at(std::size_t embedding) const;
  std::string decimal(std::size_t embedding, int digits = 15) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void check_same_field(const FieldElement& b) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

template <>
struct ScalarOps<FieldElement> {
  static FieldElement zero_like(const FieldElement& x) { return x.zero_like(); }
  static FieldElement one_like(const FieldElement& x) { return x.one_like(); }
  static FieldElement from_integer(const FieldElement& x, long n) {
    return FieldElement(x.field(), Rational(n));
  }
  static bool is_zero(const FieldElement& x) { return x.is_zero(); }
};

/// Exact sign of sigma_j(a) in {-1, 0, +1}. Zero is decided symbolically; a
/// nonzero value is certified by refining the root interval until the
/// interval image of a excludes 0.
int sign_at_embedding(const FieldElement& a, std::size_t embedding);

struct SquareRootOptions {
  /// Height bound for continued-fraction reconstruction of coefficients.
  Integer max_denominator = 1000000;
};

/// A witness r with r*r == a, verified exactly, or nullopt.
std::optional<FieldElement> is_square(const FieldElement& a, const SquareRootOptions& options = {});

/// Exact proof that a is not a square in its field: either a is negative at
/// some real embedding, or for a prime p not dividing disc(f) and a root r of
/// f mod p, the reduction a(r) is a quadratic nonresidue mod p.
struct NonSquareCertificate {
  enum class Kind { NegativeEmbedding, Residue } kind;
  std::size_t embedding = 0;
  Integer prime = 0;
  Integer root = 0;
  std::string describe() const;
};

std::optional<NonSquareCertificate> certify_nonsquare(const FieldElement& a,
                                                      unsigned long prime_bound = 2000);

/// Matrix of x -> a*x on the power basis (columns are images of basis vectors).
Matrix<Rational> multiplication_matrix(const FieldElement& a);

/// True iff the characteristic polynomial of multiplication by a is integral.
bool is_algebraic_integer(const FieldElement& a);

/// Discriminant of a polynomial, via the Euclidean resultant with its derivative.
Rational discriminant(const RationalPolynomial& p);

}  // namespace hyperarith
