#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qhom {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact base field: the rationals or a prime field F_p with word-sized p.
/// Elements are carried as rationals; over F_p they are normalized to the
/// canonical representatives 0..p-1.
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  static FieldSpec prime(long long p) {
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("field characteristic must be prime: " +
                                  std::to_string(p));
    return FieldSpec(Kind::PrimeField, p);
  }

  Kind kind() const { return kind_; }
  long long characteristic() const {
    return kind_ == Kind::Rationals ? 0 : p_;
  }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  Scalar normalize(const Scalar& x) const {
    if (kind_ == Kind::Rationals) return x;
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt n = mod_p(num);
    BigInt d = mod_p(den);
    if (d == 0)
      throw std::domain_error("denominator not invertible mod " +
                              std::to_string(p_));
    return Scalar(mod_p(n * inv_mod(d)));
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    return normalize(a + b);
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    return normalize(a - b);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    return normalize(a * b);
  }
  Scalar neg(const Scalar& a) const { return normalize(-a); }

  Scalar inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (kind_ == Kind::Rationals) return Scalar(1) / a;
    BigInt v = mod_p(boost::multiprecision::numerator(a));
    return Scalar(inv_mod(v));
  }

  Scalar div(const Scalar& a, const Scalar& b) const {
    return mul(a, inv(b));
  }

  bool is_zero(const Scalar& a) const { return normalize(a) == 0; }

  std::string to_string() const {
    return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
  }

private:
  FieldSpec(Kind k, long long p) : kind_(k), p_(p) {}

  BigInt mod_p(BigInt v) const {
    v %= p_;
    if (v < 0) v += p_;
    return v;
  }

  // extended Euclid; v in [1, p)
  BigInt inv_mod(BigInt v) const {
    BigInt a = v, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      BigInt q = a / b;
      BigInt t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1) throw std::domain_error("element not invertible");
    return mod_p(x0);
  }

  static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Kind kind_;
  long long p_;
};

}  // namespace qhom
