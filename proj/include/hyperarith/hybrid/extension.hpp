#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hyperarith/algebra/number_field.hpp"
#include "hyperarith/linalg/matrix.hpp"

namespace hyperarith {

/// K(sqrt(delta)) for delta in K*. When delta is already a square in K the
/// extension is K itself and elements are collapsed onto their K-part.
class QuadraticExtension {
 public:
  static std::shared_ptr<const QuadraticExtension> create(const FieldElement& delta);

  const FieldPtr& base() const { return base_; }
  const FieldElement& delta() const { return delta_; }
  /// A square root of delta in K, when one exists.
  const std::optional<FieldElement>& root() const { return root_; }
  bool is_trivial() const { return root_.has_value(); }

 private:
  QuadraticExtension(FieldPtr base, FieldElement delta, std::optional<FieldElement> root)
      : base_(std::move(base)), delta_(std::move(delta)), root_(std::move(root)) {}

  FieldPtr base_;
  FieldElement delta_;
  std::optional<FieldElement> root_;
};

using ExtensionPtr = std::shared_ptr<const QuadraticExtension>;

/// a + b*sqrt(delta).
class ExtElement {
 public:
  ExtElement(ExtensionPtr ext, FieldElement a, FieldElement b);
  ExtElement(ExtensionPtr ext, const FieldElement& a);

  static ExtElement sqrt_delta(const ExtensionPtr& ext);

  const ExtensionPtr& extension() const { return ext_; }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base() const { return b_.is_zero(); }
  ExtElement conjugate() const;
  /// a^2 - delta*b^2.
  FieldElement norm() const;

  ExtElement zero_like() const;
  ExtElement one_like() const;

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const ExtElement& o);
  ExtElement& operator/=(const ExtElement& o);
  ExtElement operator-() const;

  friend ExtElement operator+(ExtElement x, const ExtElement& y) { return x += y; }
  friend ExtElement operator-(ExtElement x, const ExtElement& y) { return x -= y; }
  friend ExtElement operator*(ExtElement x, const ExtElement& y) { return x *= y; }
  friend ExtElement operator/(ExtElement x, const ExtElement& y) { return x /= y; }

  bool operator==(const ExtElement& o) const { return a_ == o.a_ && b_ == o.b_; }

  /// Value at the chosen embedding of K with the positive square root.
  double approx() const;
  std::string to_string() const;

 private:
  void check(const ExtElement& o) const;
  void collapse();

  ExtensionPtr ext_;
  FieldElement a_, b_;
};

template <>
struct ScalarOps<ExtElement> {
  static ExtElement zero_like(const ExtElement& x) { return x.zero_like(); }
  static ExtElement one_like(const ExtElement& x) { return x.one_like(); }
  static ExtElement from_integer(const ExtElement& x, long n) {
    return ExtElement(x.extension(), FieldElement(x.extension()->base(), Rational(n)));
  }
  static bool is_zero(const ExtElement& x) { return x.is_zero(); }
};

Vector<ExtElement> embed(const ExtensionPtr& ext, const Vector<FieldElement>& v);
Vector<ExtElement> conjugate(const Vector<ExtElement>& v);

}  // namespace hyperarith
