#include "kochbilliard/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "kochbilliard/error.hpp"

namespace kb {

const char* name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorCode::LevelAboveBudget: return "LevelAboveBudget";
    case ErrorCode::NoCells: return "NoCells";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::ObtuseVertex: return "ObtuseVertex";
    case ErrorCode::CannotUnfold: return "CannotUnfold";
    case ErrorCode::NonRationalPolygon: return "NonRationalPolygon";
    case ErrorCode::HitNonremovableCone: return "HitNonremovableCone";
    case ErrorCode::LineMissesTable: return "LineMissesTable";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

Rational parseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    }
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

int sign(const Rational& r) { return sgn(r); }

unsigned bitsToDigits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits)
    : bits_(bits), savedDigits10_(Real::default_precision()) {
  if (bits < 16) throw Error(ErrorCode::InvalidArgument, "precision must be at least 16 bits");
  Real::default_precision(bitsToDigits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(savedDigits10_); }

int sign(const Real& r) { return r.sign(); }
int sign(double r) { return (r > 0) - (r < 0); }

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  Rational a = a_ * o.a_ + 3 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(sqrt3)");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

bool operator<(const QSqrt3& l, const QSqrt3& r) { return sign(l - r) < 0; }

int sign(const QSqrt3& s) {
  int sa = sgn(s.a());
  int sb = sgn(s.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: |a| vs sqrt3 |b|
  return sa * sgn(s.norm());
}

QSqrt3 abs(const QSqrt3& s) { return sign(s) < 0 ? -s : s; }

double QSqrt3::toDouble() const { return a_.get_d() + b_.get_d() * std::sqrt(3.0); }

Real QSqrt3::toReal() const {
  Real a;
  Real b;
  mpfr_set_q(a.backend().data(), a_.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(b.backend().data(), b_.get_mpq_t(), MPFR_RNDN);
  return a + b * boost::multiprecision::sqrt(Real(3));
}

std::string QSqrt3::str() const {
  std::string out = a_.get_str();
  if (sgn(b_) < 0) {
    out += "-";
    out += Rational(-b_).get_str();
  } else {
    out += "+";
    out += b_.get_str();
  }
  out += "√3";
  return out;
}

QSqrt3 QSqrt3::parse(std::string_view text) {
  static const std::string_view kRoot = "√3";
  std::string s(text);
  if (s.size() < kRoot.size() || std::string_view(s).substr(s.size() - kRoot.size()) != kRoot) {
    // a plain rational is accepted as b = 0
    return QSqrt3(parseRational(s));
  }
  s.resize(s.size() - kRoot.size());
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return QSqrt3(0, parseRational(s));
  Rational a = parseRational(s.substr(0, split));
  Rational b = parseRational(s.substr(split + 1));
  if (s[split] == '-') b = -b;
  return QSqrt3(a, b);
}

std::string toDecimal(const Real& r, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << r;
  return os.str();
}

std::string toDecimal(const QSqrt3& s, int digits) {
  PrecisionScope scope(static_cast<unsigned>(digits * 3.33) + 64);
  return toDecimal(s.toReal(), digits);
}

}  // namespace kb
