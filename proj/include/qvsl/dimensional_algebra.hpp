#ifndef QVSL_DIMENSIONAL_ALGEBRA_HPP
#define QVSL_DIMENSIONAL_ALGEBRA_HPP

#include <cmath>
#include <string>
#include <vector>

#include "qvsl/constants.hpp"
#include "qvsl/errors.hpp"
#include "qvsl/particle.hpp"

namespace qvsl {

// Reference curve only: light speed as a power of the expansion scale factor.
// Nothing downstream consumes it.
inline double vsl_speed(double c0, double scale_factor, double exponent) {
  if (!(c0 > 0.0)) throw ValidationError("c0 must be positive");
  if (!(scale_factor > 0.0)) throw ValidationError("scale_factor must be positive");
  return c0 * std::pow(scale_factor, exponent);
}

// Quantized light speed c / alpha^(D-4); strictly increasing in D.
inline double qvsl_speed(const PhysicalConstants& pc, int spacetime_dim) {
  if (spacetime_dim < kMinDim || spacetime_dim > kMaxDim)
    throw ValidationError("spacetime_dim D must lie in [4, 11], got " +
                          std::to_string(spacetime_dim));
  return pc.c * alpha_power(pc, -(spacetime_dim - kMinDim));
}

// Rest mass a particle of bare mass M0 acquires in 4D space-time when its
// mass dimension number is d: M0 / alpha^{2(d-4)}.
inline double effective_rest_mass(const PhysicalConstants& pc, double m0_gev,
                                  int mass_dim) {
  if (!(m0_gev > 0.0)) throw ValidationError("M0 must be positive");
  if (mass_dim < kMinDim || mass_dim > kMaxDim)
    throw ValidationError("mass_dim d must lie in [4, 11], got " +
                          std::to_string(mass_dim));
  return m0_gev * alpha_power(pc, -2 * (mass_dim - kMinDim));
}

// Energy of a superluminal particle in D-dimensional space-time,
// M0 c^2 / alpha^{2(D-4)}. Shares the exponent path with
// effective_rest_mass so the two expressions agree bit for bit at d = D.
inline double superluminal_energy(const PhysicalConstants& pc, double m0_gev,
                                  int spacetime_dim) {
  return effective_rest_mass(pc, m0_gev, spacetime_dim) * pc.c * pc.c;
}

enum class TransformDirection { raise_d, lower_d };

inline TransformDirection transform_direction_from_string(const std::string& s) {
  if (s == "raise_d") return TransformDirection::raise_d;
  if (s == "lower_d") return TransformDirection::lower_d;
  throw ValidationError("direction must be \"raise_d\" or \"lower_d\", got \"" + s +
                        "\"");
}

// Trades space-time dimensions for mass dimensions. raise_d lowers D by n,
// raises d by n and scales the rest mass by alpha^{-2n}; lower_d is the
// inverse. D + d is invariant, and the mass scaling is carried in the exact
// exponent so a round trip restores the state bit for bit.
inline ParticleState qvsl_transform(const ParticleState& state, int n,
                                    TransformDirection direction) {
  validate_particle(state);
  if (n < 1) throw ValidationError("transform step n must be a positive integer");
  const int sign = direction == TransformDirection::raise_d ? 1 : -1;
  ParticleState out = state;
  out.spacetime_dim -= sign * n;
  out.mass_dim += sign * n;
  if (out.spacetime_dim < kMinDim || out.spacetime_dim > kMaxDim)
    throw ValidationError("transform target D " + std::to_string(out.spacetime_dim) +
                          " outside [4, 11]");
  if (out.mass_dim < kMinDim || out.mass_dim > kMaxDim)
    throw ValidationError("transform target d " + std::to_string(out.mass_dim) +
                          " outside [4, 11]");
  out.rest_mass = state.rest_mass.scaled(-sign * 2 * n);
  return out;
}

enum class SusyDirection { down, up };

// One rung of the varying supersymmetry ladder. Kind always toggles; the
// mass picks up one factor of alpha going down (one inverse factor going
// up). The mass dimension changes only on the fermion->boson step downward
// and the boson->fermion step upward.
inline ParticleState susy_step(const PhysicalConstants& pc, const ParticleState& state,
                               SusyDirection direction) {
  (void)pc;  // alpha enters through the exact exponent only
  validate_particle(state);
  ParticleState out = state;
  if (direction == SusyDirection::down) {
    out.rest_mass = state.rest_mass.scaled(1);
    if (state.kind == ParticleKind::boson) {
      out.kind = ParticleKind::fermion;
    } else {
      out.kind = ParticleKind::boson;
      out.mass_dim -= 1;
    }
  } else {
    out.rest_mass = state.rest_mass.scaled(-1);
    if (state.kind == ParticleKind::fermion) {
      out.kind = ParticleKind::boson;
    } else {
      out.kind = ParticleKind::fermion;
      out.mass_dim += 1;
    }
  }
  if (out.mass_dim < kMinDim || out.mass_dim > kMaxDim)
    throw ValidationError("susy step leaves mass_dim d " +
                          std::to_string(out.mass_dim) + " outside [4, 11]");
  return out;
}

// The F5 B5 F6 B6 ... F11 B11 mass ladder, anchored at B11 = Planck energy
// and computed downward: B_{d-1} = B_d alpha^2, F_d = B_d alpha.
inline std::vector<LadderEntry> boson_ladder(const PhysicalConstants& pc) {
  std::vector<LadderEntry> ladder;
  ladder.reserve(2 * (kMaxDim - kMinDim));
  for (int d = kMinDim + 1; d <= kMaxDim; ++d) {
    const int boson_exp = 2 * (kMaxDim - d);
    ladder.push_back({d, ParticleKind::fermion,
                      pc.planck_energy_gev * alpha_power(pc, boson_exp + 1)});
    ladder.push_back(
        {d, ParticleKind::boson, pc.planck_energy_gev * alpha_power(pc, boson_exp)});
  }
  return ladder;
}

struct FissionResult {
  ParticleState core;
  OrbitalSet orbitals;
};

// Leaping fission d -> d - n: splits a particle into a core of mass
// dimension d - n and 11 - d + n dimensional orbitals. Orbital labels are
// the first 11 - d + n symbols of the tower B_s F_s ... B_11 starting at
// s = d - n + 1. n = 0 is the degenerate fission that merely separates the
// particle's latent orbitals. The core keeps kind and rest mass; orbital
// bookkeeping carries no mass of its own.
inline FissionResult leap_fission(const ParticleState& state, int n) {
  validate_particle(state);
  if (n < 0) throw ValidationError("fission step n must be non-negative");
  const int core_dim = state.mass_dim - n;
  if (core_dim < kMinDim)
    throw ValidationError("fission target d " + std::to_string(core_dim) +
                          " below the 4d floor");

  FissionResult result;
  result.core = state;
  result.core.mass_dim = core_dim;
  result.core.orbital_count = kMaxDim - state.mass_dim + n;

  const int start = core_dim + 1;
  for (int dim = start; dim <= kMaxDim; ++dim) {
    result.orbitals.labels.push_back({dim, ParticleKind::boson});
    if (dim < kMaxDim) result.orbitals.labels.push_back({dim, ParticleKind::fermion});
  }
  result.orbitals.labels.resize(static_cast<std::size_t>(result.core.orbital_count));
  return result;
}

}  // namespace qvsl

#endif
