#pragma once

#include <string_view>

namespace airtime {

/// Utility of a player as a function of its broadcast time. Every kind is
/// differentiable, strictly increasing and concave on [0, cap].
///
///   normalized-linear  u(x) = x / cap
///   log-shifted        u(x) = log(1 + x / shift)
///   power              u(x) = (x / cap)^exponent,  0 < exponent <= 1
///
/// The normalized kinds depend on the player's broadcast cap, which is only
/// known once the problem is assembled; `bind` fixes it.
class UtilityEvaluator {
 public:
  enum class Kind { normalized_linear, log_shifted, power };

  static UtilityEvaluator normalized_linear();
  static UtilityEvaluator log_shifted(double shift);
  static UtilityEvaluator power(double exponent);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  double cap() const { return cap_; }

  /// Copy bound to a positive broadcast cap.
  UtilityEvaluator bind(double cap) const;

  double value(double x) const;
  double derivative(double x) const;

  /// (u(x) - u(xd)) / u'(x), evaluated in a numerically stable way per kind.
  double gain_over_slope(double x, double xd) const;

 private:
  UtilityEvaluator(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
  double cap_ = 0.0;
};

std::string_view to_string(UtilityEvaluator::Kind kind);

}  // namespace airtime
