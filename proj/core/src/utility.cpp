#include "airtime/utility.hpp"

#include <cmath>

#include "airtime/errors.hpp"

namespace airtime {

UtilityEvaluator UtilityEvaluator::normalized_linear() {
  return UtilityEvaluator(Kind::normalized_linear, 0.0);
}

UtilityEvaluator UtilityEvaluator::log_shifted(double shift) {
  if (!(shift > 0.0) || !std::isfinite(shift)) {
    throw InvalidInput("log-shifted utility needs a positive shift");
  }
  return UtilityEvaluator(Kind::log_shifted, shift);
}

UtilityEvaluator UtilityEvaluator::power(double exponent) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InvalidInput("power utility exponent must lie in (0, 1]");
  }
  return UtilityEvaluator(Kind::power, exponent);
}

UtilityEvaluator UtilityEvaluator::bind(double cap) const {
  if (!(cap > 0.0) || !std::isfinite(cap)) {
    throw InvalidInput("utility cap must be positive and finite");
  }
  UtilityEvaluator bound = *this;
  bound.cap_ = cap;
  return bound;
}

double UtilityEvaluator::value(double x) const {
  switch (kind_) {
    case Kind::normalized_linear:
      return x / cap_;
    case Kind::log_shifted:
      return std::log1p(x / parameter_);
    case Kind::power:
      return std::pow(x / cap_, parameter_);
  }
  return 0.0;
}

double UtilityEvaluator::derivative(double x) const {
  switch (kind_) {
    case Kind::normalized_linear:
      return 1.0 / cap_;
    case Kind::log_shifted:
      return 1.0 / (parameter_ + x);
    case Kind::power:
      return parameter_ / cap_ * std::pow(x / cap_, parameter_ - 1.0);
  }
  return 0.0;
}

double UtilityEvaluator::gain_over_slope(double x, double xd) const {
  switch (kind_) {
    case Kind::normalized_linear:
      return x - xd;
    case Kind::log_shifted:
      // log((s + x) / (s + xd)) * (s + x)
      return std::log1p((x - xd) / (parameter_ + xd)) * (parameter_ + x);
    case Kind::power: {
      // ((x/c)^p - (xd/c)^p) / (p/c (x/c)^(p-1)) = x (1 - (xd/x)^p) / p
      const double ratio = xd / x;
      return x * (1.0 - std::pow(ratio, parameter_)) / parameter_;
    }
  }
  return 0.0;
}

std::string_view to_string(UtilityEvaluator::Kind kind) {
  switch (kind) {
    case UtilityEvaluator::Kind::normalized_linear:
      return "normalized-linear";
    case UtilityEvaluator::Kind::log_shifted:
      return "log-shifted";
    case UtilityEvaluator::Kind::power:
      return "power";
  }
  return "unknown";
}

}  // namespace airtime
