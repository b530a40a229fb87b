#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdepot {

/// Sign/log-magnitude carrier for quantities on the e^{z^2} scale that
/// exceed double range. Zero is encoded as sign 0 with log_mag = -inf.
/// Supported arithmetic: multiply, divide, compare, and guarded add/sub
/// via log-sum-exp.
class ScaledValue {
 public:
  ScaledValue() = default;

  static ScaledValue zero() { return ScaledValue{}; }

  static ScaledValue from_log(int sign, double log_mag) {
    ScaledValue v;
    if (sign == 0 || log_mag == -std::numeric_limits<double>::infinity()) {
      return v;
    }
    v.sign_ = sign > 0 ? 1 : -1;
    v.log_mag_ = log_mag;
    return v;
  }

  static ScaledValue from_double(double x) {
    if (std::isnan(x)) throw std::invalid_argument("ScaledValue: NaN input");
    if (x == 0.0) return zero();
    return from_log(x > 0 ? 1 : -1, std::log(std::fabs(x)));
  }

  int sign() const { return sign_; }
  double log_magnitude() const { return log_mag_; }
  bool is_zero() const { return sign_ == 0; }

  /// Whether the magnitude fits a finite double.
  bool fits_double() const {
    return sign_ == 0 || log_mag_ < kLogMaxDouble;
  }

  /// May return +-inf when the magnitude exceeds double range.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(log_mag_);
  }

  ScaledValue operator-() const { return from_log(-sign_, log_mag_); }

  ScaledValue abs() const { return from_log(sign_ == 0 ? 0 : 1, log_mag_); }

  friend ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return zero();
    return from_log(a.sign_ * b.sign_, a.log_mag_ + b.log_mag_);
  }

  friend ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) {
    if (b.sign_ == 0) throw std::domain_error("ScaledValue: division by zero");
    if (a.sign_ == 0) return zero();
    return from_log(a.sign_ * b.sign_, a.log_mag_ - b.log_mag_);
  }

  friend ScaledValue operator*(const ScaledValue& a, double s) {
    return a * from_double(s);
  }
  friend ScaledValue operator*(double s, const ScaledValue& a) {
    return a * from_double(s);
  }
  friend ScaledValue operator/(const ScaledValue& a, double s) {
    return a / from_double(s);
  }

  // Signed log-sum-exp.
  friend ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) {
      double hi = std::max(a.log_mag_, b.log_mag_);
      double lo = std::min(a.log_mag_, b.log_mag_);
      return from_log(a.sign_, hi + std::log1p(std::exp(lo - hi)));
    }
    if (a.log_mag_ == b.log_mag_) return zero();
    const ScaledValue& big = a.log_mag_ > b.log_mag_ ? a : b;
    const ScaledValue& sml = a.log_mag_ > b.log_mag_ ? b : a;
    return from_log(big.sign_,
                    big.log_mag_ +
                        std::log1p(-std::exp(sml.log_mag_ - big.log_mag_)));
  }

  friend ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) {
    return a + (-b);
  }

  friend bool operator==(const ScaledValue& a, const ScaledValue& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_mag_ == b.log_mag_);
  }

  friend bool operator<(const ScaledValue& a, const ScaledValue& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    return a.sign_ > 0 ? a.log_mag_ < b.log_mag_ : a.log_mag_ > b.log_mag_;
  }
  friend bool operator>(const ScaledValue& a, const ScaledValue& b) {
    return b < a;
  }
  friend bool operator<=(const ScaledValue& a, const ScaledValue& b) {
    return !(b < a);
  }
  friend bool operator>=(const ScaledValue& a, const ScaledValue& b) {
    return !(a < b);
  }

  static constexpr double kLogMaxDouble = 709.782712893384;  // log(DBL_MAX)

 private:
  int sign_ = 0;
  double log_mag_ = -std::numeric_limits<double>::infinity();
};

}  // namespace pdepot
