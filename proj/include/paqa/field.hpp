#pragma once

#include <gmpxx.h>

#include <string>

namespace paqa {

/// Exact scalar: a GMP rational in characteristic 0, a residue mod p otherwise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, unsigned characteristic);

  unsigned characteristic() const { return p_; }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const { return q_ == o.q_; }

  /// "3", "-1/2"; residues print as their representative in [0, p).
  std::string to_string() const;

 private:
  Scalar(mpq_class q, unsigned p) : q_(std::move(q)), p_(p) { normalize(); }
  void normalize();
  static unsigned common(const Scalar& a, const Scalar& b);

  mpq_class q_ = 0;
  unsigned p_ = 0;
};

}  // namespace paqa
