#include "hyperarith/hybrid/extension.hpp"

#include <cmath>

namespace hyperarith {

std::shared_ptr<const QuadraticExtension> QuadraticExtension::create(const FieldElement& delta) {
  if (delta.is_zero()) throw DivisionByZero();
  return std::shared_ptr<const QuadraticExtension>(new QuadraticExtension(delta.field(), delta, is_square(delta)));
}

ExtElement::ExtElement(ExtensionPtr ext, FieldElement a, FieldElement b)
    : ext_(std::move(ext)), a_(std::move(a)), b_(std::move(b)) {
  if (!(*a_.field() == *ext_->base()) || !(*b_.field() == *ext_->base())) throw FieldMismatch();
  collapse();
}

ExtElement::ExtElement(ExtensionPtr ext, const FieldElement& a) : ExtElement(ext, a, a.zero_like()) {}

ExtElement ExtElement::sqrt_delta(const ExtensionPtr& ext) {
  const FieldElement one(ext->base(), Rational(1));
  return ExtElement(ext, one.zero_like(), one);
}

void ExtElement::collapse() {
  if (ext_->root() && !b_.is_zero()) {
    a_ += b_ * *ext_->root();
    b_ = b_.zero_like();
  }
}

void ExtElement::check(const ExtElement& o) const {
  if (ext_ != o.ext_ && !(ext_->delta() == o.ext_->delta())) throw FieldMismatch();
}

ExtElement ExtElement::conjugate() const { return ExtElement(ext_, a_, -b_); }

FieldElement ExtElement::norm() const { return a_ * a_ - ext_->delta() * b_ * b_; }

ExtElement ExtElement::zero_like() const { return ExtElement(ext_, a_.zero_like()); }
ExtElement ExtElement::one_like() const { return ExtElement(ext_, a_.one_like()); }

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExtElement& ExtElement::operator*=(const ExtElement& o) {
  check(o);
  FieldElement a = a_ * o.a_ + ext_->delta() * b_ * o.b_;
  FieldElement b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExtElement& ExtElement::operator/=(const ExtElement& o) {
  check(o);
  if (o.is_zero()) throw DivisionByZero();
  const FieldElement n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

ExtElement ExtElement::operator-() const { return ExtElement(ext_, -a_, -b_); }

double ExtElement::approx() const {
  const double d = ext_->delta().approx();
  return a_.approx() + b_.approx() * std::sqrt(d);
}

std::string ExtElement::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string s = "(" + b_.to_string() + ")*sqrt(" + ext_->delta().to_string() + ")";
  return a_.is_zero() ? s : a_.to_string() + " + " + s;
}

Vector<ExtElement> embed(const ExtensionPtr& ext, const Vector<FieldElement>& v) {
  Vector<ExtElement> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(ext, x);
  return out;
}

Vector<ExtElement> conjugate(const Vector<ExtElement>& v) {
  Vector<ExtElement> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conjugate());
  return out;
}

}  // namespace hyperarith
