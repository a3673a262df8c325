#ifndef QVSL_ENSEMBLE_HPP
#define QVSL_ENSEMBLE_HPP

#include <cmath>
#include <vector>

#include "qvsl/constants.hpp"
#include "qvsl/errors.hpp"
#include "qvsl/particle.hpp"

namespace qvsl {

// One species of an ensemble. The count is a non-negative real: the
// fractionalization rule multiplies it by 1/alpha^2 per step, which is
// irrational, so particle numbers cannot stay integral. Carrying the count
// as significand * alpha^exponent keeps those scalings exact and keeps the
// huge magnitudes (alpha^-12 per unit is already ~4e25) well away from
// overflow; log10 is available for reporting.
struct EnsembleEntry {
  ParticleState state;
  AlphaScaled count{1.0};

  friend bool operator==(const EnsembleEntry&, const EnsembleEntry&) = default;
};

inline void validate_entry(const EnsembleEntry& entry) {
  validate_particle(entry.state);
  if (!(entry.count.significand() >= 0.0))
    throw ValidationError("count must be non-negative");
}

// Mass-energy carried by one entry: count * rest_mass / alpha^{2(D-4)} in
// GeV. For D = 4 this is the plain count * rest_mass; entries still sitting
// in higher space-time dimensions are valued at their superluminal energy,
// which is what the QVSL transformation preserves.
inline AlphaScaled entry_energy(const EnsembleEntry& entry) {
  return (entry.count * entry.state.rest_mass)
      .scaled(-2 * (entry.state.spacetime_dim - kMinDim));
}

inline double entry_energy_gev(const PhysicalConstants& pc, const EnsembleEntry& entry) {
  return entry_energy(entry).value(pc);
}

struct Ensemble {
  std::vector<EnsembleEntry> entries;
  double radiation_energy_gev = 0.0;

  friend bool operator==(const Ensemble&, const Ensemble&) = default;
};

// Conserved ledger quantity: sum of entry energies plus radiation.
inline double total_energy_gev(const PhysicalConstants& pc, const Ensemble& ensemble) {
  double total = ensemble.radiation_energy_gev;
  for (const auto& entry : ensemble.entries) total += entry_energy_gev(pc, entry);
  return total;
}

}  // namespace qvsl

#endif
