#ifndef QVSL_PARTICLE_HPP
#define QVSL_PARTICLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qvsl/constants.hpp"
#include "qvsl/errors.hpp"

namespace qvsl {

// Both the space-time dimension number D and the mass dimension number d
// run over [4, 11]; 11 is the fixed top dimension of the model.
inline constexpr int kMinDim = 4;
inline constexpr int kMaxDim = 11;
inline constexpr int kMaxOrbitals = kMaxDim - kMinDim;  // 7

enum class ParticleKind { boson, fermion };

inline const char* to_string(ParticleKind kind) {
  return kind == ParticleKind::boson ? "boson" : "fermion";
}

inline ParticleKind particle_kind_from_string(const std::string& s) {
  if (s == "boson") return ParticleKind::boson;
  if (s == "fermion") return ParticleKind::fermion;
  throw ValidationError("kind must be \"boson\" or \"fermion\", got \"" + s + "\"");
}

struct ParticleState {
  int spacetime_dim = kMinDim;  // D
  int mass_dim = kMinDim;       // d
  ParticleKind kind = ParticleKind::boson;
  AlphaScaled rest_mass{1.0};  // GeV
  int orbital_count = 0;

  friend bool operator==(const ParticleState&, const ParticleState&) = default;
};

inline void validate_particle(const ParticleState& s) {
  if (s.spacetime_dim < kMinDim || s.spacetime_dim > kMaxDim)
    throw ValidationError("spacetime_dim D must lie in [4, 11], got " +
                          std::to_string(s.spacetime_dim));
  if (s.mass_dim < kMinDim || s.mass_dim > kMaxDim)
    throw ValidationError("mass_dim d must lie in [4, 11], got " +
                          std::to_string(s.mass_dim));
  if (!(s.rest_mass.significand() > 0.0))
    throw ValidationError("rest_mass must be positive");
  if (s.orbital_count < 0 || s.orbital_count > kMaxOrbitals)
    throw ValidationError("orbital_count must lie in [0, 7], got " +
                          std::to_string(s.orbital_count));
}

// "10D4d" style code.
inline std::string state_code(const ParticleState& s) {
  return std::to_string(s.spacetime_dim) + "D" + std::to_string(s.mass_dim) + "d";
}

// One symbol of the boson/fermion tower, e.g. B5 or F10.
struct OrbitalLabel {
  int dim = kMinDim;
  ParticleKind kind = ParticleKind::boson;

  friend bool operator==(const OrbitalLabel&, const OrbitalLabel&) = default;
};

inline std::string to_string(const OrbitalLabel& label) {
  return (label.kind == ParticleKind::boson ? "B" : "F") + std::to_string(label.dim);
}

// Dimensional orbitals separated from a core particle. Labels follow the
// tower pattern B_s F_s B_{s+1} F_{s+1} ... B_11 (no F_11) and ascend in
// (dimension, kind) order with the boson first within a dimension.
struct OrbitalSet {
  std::vector<OrbitalLabel> labels;

  std::size_t count() const { return labels.size(); }

  std::string pattern() const {
    std::string out;
    for (const auto& label : labels) out += to_string(label);
    return out;
  }

  friend bool operator==(const OrbitalSet&, const OrbitalSet&) = default;
};

struct LadderEntry {
  int mass_dim = kMinDim;
  ParticleKind kind = ParticleKind::boson;
  double mass_gev = 0.0;

  friend bool operator==(const LadderEntry&, const LadderEntry&) = default;
};

}  // namespace qvsl

#endif
