#pragma once

// log_magnitude.hpp — non-negative magnitudes stored as natural logarithms.
//
// Evolution products of time-varying systems routinely reach magnitudes like
// e^{m+1} at m ~ 2000, far beyond double range. Everything norm-like in this
// library is therefore carried as a LogMagnitude: the represented value is
// exp(log_value), with log_value = -inf representing exactly 0.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace expstab {

class LogMagnitude {
 public:
  // Default is the zero magnitude (log = -inf).
  constexpr LogMagnitude() = default;

  static constexpr LogMagnitude from_log(double log_value) {
    return LogMagnitude(log_value);
  }

  /// Magnitude from a plain non-negative value; v = 0 maps to log -inf.
  static LogMagnitude from_value(double v) {
    if (std::isnan(v) || v < 0.0)
      throw std::invalid_argument("LogMagnitude::from_value: negative or NaN");
    return LogMagnitude(std::log(v));  // log(0) == -inf
  }

  static constexpr LogMagnitude zero() {
    return LogMagnitude(-std::numeric_limits<double>::infinity());
  }
  static constexpr LogMagnitude one() { return LogMagnitude(0.0); }

  constexpr double log() const { return log_; }
  double value() const { return std::exp(log_); }  // may overflow to +inf
  constexpr bool is_zero() const {
    return log_ == -std::numeric_limits<double>::infinity();
  }
  bool finite_log() const { return std::isfinite(log_); }

  // Multiplication of magnitudes = addition of logs; zero is absorbing
  // (also against an infinite magnitude, by convention).
  LogMagnitude operator*(LogMagnitude rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    return LogMagnitude(log_ + rhs.log_);
  }
  LogMagnitude& operator*=(LogMagnitude rhs) { return *this = *this * rhs; }

  /// Scale by e^t without leaving the log domain.
  LogMagnitude scaled_exp(double t) const {
    if (is_zero()) return zero();
    return LogMagnitude(log_ + t);
  }

  // Addition of magnitudes via log-sum-exp. Commutative exactly; associative
  // up to ~1e-15 relative in the log (documented tolerance: 1e-12).
  LogMagnitude operator+(LogMagnitude rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    const double hi = log_ > rhs.log_ ? log_ : rhs.log_;
    const double lo = log_ > rhs.log_ ? rhs.log_ : log_;
    if (hi == std::numeric_limits<double>::infinity()) return LogMagnitude(hi);
    return LogMagnitude(hi + std::log1p(std::exp(lo - hi)));
  }
  LogMagnitude& operator+=(LogMagnitude rhs) { return *this = *this + rhs; }

  /// Ratio of magnitudes (division by zero throws).
  LogMagnitude operator/(LogMagnitude rhs) const {
    if (rhs.is_zero()) throw std::domain_error("LogMagnitude: division by zero");
    if (is_zero()) return zero();
    return LogMagnitude(log_ - rhs.log_);
  }

  friend constexpr bool operator==(LogMagnitude a, LogMagnitude b) {
    return a.log_ == b.log_;
  }
  friend constexpr bool operator!=(LogMagnitude a, LogMagnitude b) {
    return !(a == b);
  }
  friend constexpr bool operator<(LogMagnitude a, LogMagnitude b) {
    return a.log_ < b.log_;
  }
  friend constexpr bool operator<=(LogMagnitude a, LogMagnitude b) {
    return a.log_ <= b.log_;
  }
  friend constexpr bool operator>(LogMagnitude a, LogMagnitude b) { return b < a; }
  friend constexpr bool operator>=(LogMagnitude a, LogMagnitude b) {
    return b <= a;
  }

  std::string str() const {
    if (is_zero()) return "0 (log=-inf)";
    return "exp(" + std::to_string(log_) + ")";
  }

 private:
  explicit constexpr LogMagnitude(double lv) : log_(lv) {}
  double log_ = -std::numeric_limits<double>::infinity();
};

/// Neumaier compensated running sum; keeps prefix sums of coefficient logs
/// near machine precision independently of length.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace expstab
