#ifndef QVSL_CONSTANTS_HPP
#define QVSL_CONSTANTS_HPP

#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qvsl/errors.hpp"

namespace qvsl {

// CODATA 2018 fine structure constant.
inline constexpr double kCodataAlpha = 7.2973525693e-3;
// Non-reduced Planck energy in GeV.
inline constexpr double kDefaultPlanckEnergyGev = 1.22e19;
inline constexpr double kDefaultDarkEnergyFraction = 0.70;

// Safety bound on integer powers of alpha. The cascade never needs more
// than |k| = 14; anything past 64 is a caller bug.
inline constexpr int kMaxAlphaExponent = 64;

struct PhysicalConstants {
  double alpha = kCodataAlpha;
  double c = 1.0;  // natural units
  double h = 1.0;  // natural units
  double planck_energy_gev = kDefaultPlanckEnergyGev;
  double dark_energy_fraction = kDefaultDarkEnergyFraction;

  // Lower bound of the gap principle, h / 4*pi.
  double gap_bound() const { return h / (4.0 * std::acos(-1.0)); }
};

inline void validate_constants(const PhysicalConstants& pc) {
  if (!(pc.alpha > 0.0 && pc.alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1), got " + std::to_string(pc.alpha));
  if (!(pc.c > 0.0)) throw ValidationError("c must be positive");
  if (!(pc.h > 0.0)) throw ValidationError("h must be positive");
  if (!(pc.planck_energy_gev > 0.0))
    throw ValidationError("planck_energy_gev must be positive");
  if (!(pc.dark_energy_fraction >= 0.0 && pc.dark_energy_fraction < 1.0))
    throw ValidationError("dark_energy_fraction must lie in [0, 1)");
}

// An exact integer power of alpha. Exponents combine in integer arithmetic;
// converting to a scalar is the only lossy step.
class AlphaPower {
 public:
  constexpr AlphaPower() = default;
  constexpr explicit AlphaPower(int exponent) : exponent_(exponent) {}

  constexpr int exponent() const { return exponent_; }

  friend constexpr AlphaPower operator*(AlphaPower a, AlphaPower b) {
    return AlphaPower(a.exponent_ + b.exponent_);
  }
  friend constexpr bool operator==(AlphaPower a, AlphaPower b) = default;

  // One exponentiation from the integer exponent.
  double value(double alpha) const {
    return std::pow(alpha, static_cast<double>(exponent_));
  }

 private:
  int exponent_ = 0;
};

// alpha^k evaluated in a single exponentiation. |k| is bounded so chained
// transforms cannot silently leave the representable range.
inline double alpha_power(const PhysicalConstants& pc, int k) {
  if (std::abs(k) > kMaxAlphaExponent)
    throw ValidationError("alpha exponent " + std::to_string(k) + " exceeds bound " +
                          std::to_string(kMaxAlphaExponent));
  return AlphaPower(k).value(pc.alpha);
}

// A magnitude carried as significand * alpha^exponent. Scaling by integer
// powers of alpha touches only the exponent, so chains of alpha^{2n} factors
// accumulate zero floating-point error; the significand changes only when a
// genuinely new scalar factor enters.
class AlphaScaled {
 public:
  constexpr AlphaScaled() = default;
  constexpr explicit AlphaScaled(double significand, int exponent = 0)
      : significand_(significand), exponent_(exponent) {}

  constexpr double significand() const { return significand_; }
  constexpr int exponent() const { return exponent_; }

  constexpr AlphaScaled scaled(int k) const {
    return AlphaScaled(significand_, exponent_ + k);
  }
  constexpr AlphaScaled times(double factor) const {
    return AlphaScaled(significand_ * factor, exponent_);
  }

  friend constexpr AlphaScaled operator*(AlphaScaled a, AlphaScaled b) {
    return AlphaScaled(a.significand_ * b.significand_, a.exponent_ + b.exponent_);
  }
  friend constexpr AlphaScaled operator/(AlphaScaled a, AlphaScaled b) {
    return AlphaScaled(a.significand_ / b.significand_, a.exponent_ - b.exponent_);
  }
  friend constexpr bool operator==(AlphaScaled a, AlphaScaled b) = default;

  double value(double alpha) const {
    if (exponent_ == 0) return significand_;
    return significand_ * std::pow(alpha, static_cast<double>(exponent_));
  }
  double value(const PhysicalConstants& pc) const { return value(pc.alpha); }

  // Base-10 logarithm; usable when value() would overflow or underflow.
  double log10(double alpha) const {
    return std::log10(significand_) + exponent_ * std::log10(alpha);
  }

 private:
  double significand_ = 0.0;
  int exponent_ = 0;
};

namespace detail {

inline double require_number(const nlohmann::json& j, const char* key) {
  if (!j.is_number())
    throw ValidationError(std::string(key) + " must be a number");
  return j.get<double>();
}

}  // namespace detail

// Reads a flat key/value JSON object with keys exactly alpha, c, h,
// planck_energy_gev, dark_energy_fraction; absent keys take defaults.
inline PhysicalConstants load_constants(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw ValidationError("constants document must be a JSON object");
  PhysicalConstants pc;
  for (const auto& [key, value] : doc.items()) {
    if (key == "alpha")
      pc.alpha = detail::require_number(value, "alpha");
    else if (key == "c")
      pc.c = detail::require_number(value, "c");
    else if (key == "h")
      pc.h = detail::require_number(value, "h");
    else if (key == "planck_energy_gev")
      pc.planck_energy_gev = detail::require_number(value, "planck_energy_gev");
    else if (key == "dark_energy_fraction")
      pc.dark_energy_fraction = detail::require_number(value, "dark_energy_fraction");
    else
      throw ValidationError("unknown constants key \"" + key + "\"");
  }
  validate_constants(pc);
  return pc;
}

inline PhysicalConstants load_constants(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed constants document: ") + e.what());
  }
  return load_constants(doc);
}

}  // namespace qvsl

#endif
