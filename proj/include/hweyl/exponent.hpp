#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "hweyl/errors.hpp"

namespace hweyl {

/// A Lebesgue/Schatten exponent p in [1, inf]. Infinity is a distinct state,
/// never a large finite number.
class Exponent {
 public:
  /// Throws DomainError unless p >= 1 (p may be +inf).
  explicit Exponent(double p) : infinite_(std::isinf(p) && p > 0), value_(p) {
    if (std::isnan(p) || p < 1.0) {
      throw DomainError("exponent must satisfy p >= 1, got " + std::to_string(p));
    }
    if (infinite_) value_ = 0.0;
  }

  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  bool infinite() const noexcept { return infinite_; }

  /// Finite value; only meaningful when !infinite().
  double value() const noexcept { return value_; }

  /// 1/p, with 1/inf = 0.
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

  /// Hoelder conjugate p' with 1/p + 1/p' = 1.
  Exponent conjugate() const {
    if (infinite_) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    return Exponent(value_ / (value_ - 1.0));
  }

  /// Exponent from its reciprocal r = 1/p in [0, 1].
  static Exponent from_reciprocal(double r) {
    if (r < 0.0 || r > 1.0 + 1e-15) throw DomainError("reciprocal exponent outside [0,1]");
    if (r <= 0.0) return infinity();
    return Exponent(r >= 1.0 ? 1.0 : 1.0 / r);
  }

  std::string str() const { return infinite_ ? std::string("inf") : std::to_string(value_); }

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  bool infinite_;
  double value_;
};

}  // namespace hweyl
