// Exact arithmetic in Q(sqrt 2), usable as an Eigen scalar.
#ifndef DIII_QSQRT2_HPP
#define DIII_QSQRT2_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <stdexcept>
#include <string>

namespace diii {

using Rational = boost::multiprecision::cpp_rational;

/// a + b sqrt(2) with rational a, b.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int a) : a_(a) {}  // NOLINT: integer literals convert implicitly, as Eigen expects
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {0, 1}; }
  /// 1/sqrt(2) = sqrt(2)/2
  static QSqrt2 inv_sqrt2() { return {0, Rational(1, 2)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// a^2 - 2 b^2; zero only for zero, since sqrt(2) is irrational.
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  QSqrt2 conjugate() const { return {a_, -b_}; }
  QSqrt2 inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt 2)");
    Rational d = norm();
    return {a_ / d, -b_ / d};
  }

  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    return *this;
  }
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  /// "0", "-1", "3/2", "sqrt2/2", "1-3sqrt2/4" in plain ASCII.
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

/// "p/q" for any rational, "p/1" for integers.
std::string rational_text(const Rational& r);

inline std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.to_string(); }

using QMatrix = Eigen::Matrix<QSqrt2, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace diii

namespace Eigen {

template <>
struct NumTraits<diii::QSqrt2> : GenericNumTraits<diii::QSqrt2> {
  using Real = diii::QSqrt2;
  using NonInteger = diii::QSqrt2;
  using Nested = diii::QSqrt2;
  using Literal = diii::QSqrt2;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static diii::QSqrt2 epsilon() { return 0; }
  static diii::QSqrt2 dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // DIII_QSQRT2_HPP
