#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace kb {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). GMP keeps it canonical after every arithmetic operation.
using Rational = mpq_class;

/// Configurable-precision binary float. The working precision is a process-wide
/// default; use PrecisionScope to pin it for a computation.
using Real = boost::multiprecision::mpfr_float;

Rational parseRational(std::string_view text);
std::string toString(const Rational& r);
int sign(const Rational& r);

unsigned bitsToDigits10(unsigned bits);

/// Sets the process-wide default Real precision (in bits) for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  unsigned bits() const { return bits_; }

 private:
  unsigned bits_;
  unsigned savedDigits10_;
};

int sign(const Real& r);
int sign(double r);

/// Exact element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }
  QSqrt3(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)

  static QSqrt3 sqrt3() { return QSqrt3(0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// a^2 - 3 b^2, the field norm; zero only for zero.
  Rational norm() const { return Rational(a_ * a_ - 3 * b_ * b_); }
  QSqrt3 conjugate() const { return QSqrt3(a_, -b_); }
  bool isZero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool isRational() const { return sgn(b_) == 0; }

  QSqrt3 operator-() const { return QSqrt3(-a_, -b_); }
  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o);

  friend QSqrt3 operator+(QSqrt3 l, const QSqrt3& r) { return l += r; }
  friend QSqrt3 operator-(QSqrt3 l, const QSqrt3& r) { return l -= r; }
  friend QSqrt3 operator*(QSqrt3 l, const QSqrt3& r) { return l *= r; }
  friend QSqrt3 operator/(QSqrt3 l, const QSqrt3& r) { return l /= r; }

  friend bool operator==(const QSqrt3& l, const QSqrt3& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
  friend bool operator!=(const QSqrt3& l, const QSqrt3& r) { return !(l == r); }
  friend bool operator<(const QSqrt3& l, const QSqrt3& r);
  friend bool operator>(const QSqrt3& l, const QSqrt3& r) { return r < l; }
  friend bool operator<=(const QSqrt3& l, const QSqrt3& r) { return !(r < l); }
  friend bool operator>=(const QSqrt3& l, const QSqrt3& r) { return !(l < r); }

  double toDouble() const;
  Real toReal() const;

  /// "a+b√3" with a, b as reduced fractions, e.g. "1/2-1/6√3" or "0+0√3".
  std::string str() const;
  static QSqrt3 parse(std::string_view text);

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Exact sign of a + b√3.
int sign(const QSqrt3& s);
QSqrt3 abs(const QSqrt3& s);

/// Decimal rendering with `digits` significant digits; deterministic.
std::string toDecimal(const QSqrt3& s, int digits = 40);
std::string toDecimal(const Real& r, int digits = 40);

inline double toDouble(const QSqrt3& s) { return s.toDouble(); }
inline double toDouble(const Real& r) { return r.convert_to<double>(); }
inline Real toReal(const QSqrt3& s) { return s.toReal(); }
inline Real toReal(const Real& r) { return r; }

}  // namespace kb
