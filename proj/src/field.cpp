#include "paqa/field.hpp"

#include <stdexcept>

namespace paqa {

Scalar::Scalar(long value, unsigned characteristic) : q_(value), p_(characteristic) { normalize(); }

void Scalar::normalize() {
  if (p_ == 0) {
    q_.canonicalize();
    return;
  }
  mpz_class m = p_;
  mpz_class n = q_.get_num() % m;
  if (n < 0) n += m;
  mpz_class d = q_.get_den() % m;
  if (d != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible modulo the characteristic");
    n = (n * inv) % m;
  }
  q_ = mpq_class(n);
}

unsigned Scalar::common(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_ && a.p_ != 0 && b.p_ != 0) throw std::logic_error("mixed characteristics");
  return a.p_ ? a.p_ : b.p_;
}

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(q_ + o.q_, common(*this, o)); }
Scalar Scalar::operator-(const Scalar& o) const { return Scalar(q_ - o.q_, common(*this, o)); }
Scalar Scalar::operator*(const Scalar& o) const { return Scalar(q_ * o.q_, common(*this, o)); }
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }
Scalar Scalar::operator-() const { return Scalar(mpq_class(-q_), p_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Scalar(mpq_class(1) / q_, p_);
}

std::string Scalar::to_string() const { return q_.get_str(); }

}  // namespace paqa
