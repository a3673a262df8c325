#ifndef QVSL_CASCADE_HPP
#define QVSL_CASCADE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qvsl/constants.hpp"
#include "qvsl/dimensional_algebra.hpp"
#include "qvsl/ensemble.hpp"
#include "qvsl/errors.hpp"
#include "qvsl/particle.hpp"

namespace qvsl {

// One fractionalization step d -> d-1: each particle splits into 1/alpha^2
// lighter ones. Mass exponent +2 and count exponent -2 cancel exactly, so
// the entry's total mass is conserved bit for bit.
inline EnsembleEntry fractionalize_step(const PhysicalConstants& pc,
                                        const EnsembleEntry& entry) {
  (void)pc;
  validate_entry(entry);
  if (entry.state.mass_dim <= kMinDim)
    throw ValidationError("cannot fractionalize below the 4d floor");
  EnsembleEntry out = entry;
  out.state.mass_dim -= 1;
  out.state.rest_mass = entry.state.rest_mass.scaled(2);
  out.count = entry.count.scaled(-2);
  return out;
}

// Stepwise fractionalization down to target_d; identity when already there.
inline EnsembleEntry fractionalize_to(const PhysicalConstants& pc,
                                      const EnsembleEntry& entry, int target_d) {
  validate_entry(entry);
  if (target_d < kMinDim || target_d > entry.state.mass_dim)
    throw ValidationError("fractionalization target d " + std::to_string(target_d) +
                          " outside [4, " + std::to_string(entry.state.mass_dim) + "]");
  EnsembleEntry out = entry;
  while (out.state.mass_dim > target_d) out = fractionalize_step(pc, out);
  return out;
}

// Simultaneous fission of one entry into several mass dimensions at once.
// The products share the parent's mass and number equally: every species
// receives count/k particles of per-particle mass (1-r)*M, where r is the
// fraction radiated away. Species below the parent dimension come out of
// leap_fission with n = d - d' and therefore carry 11 - d' orbitals; the
// parent dimension itself undergoes the degenerate n = 0 fission. The
// per-particle rest mass stays the parent's full mass (core plus orbitals).
inline Ensemble simultaneous_fission(const PhysicalConstants& pc,
                                     const EnsembleEntry& entry,
                                     const std::vector<int>& species_d,
                                     double radiation_fraction) {
  validate_entry(entry);
  if (species_d.empty()) throw ValidationError("species_d must not be empty");
  if (!(radiation_fraction >= 0.0 && radiation_fraction < 1.0))
    throw ValidationError("radiation_fraction must lie in [0, 1)");

  const double share = 1.0 / static_cast<double>(species_d.size());
  const AlphaScaled count_share = entry.count.times(share);
  const AlphaScaled particle_mass =
      entry.state.rest_mass.times(1.0 - radiation_fraction);

  Ensemble out;
  out.entries.reserve(species_d.size());
  for (int target : species_d) {
    if (target > entry.state.mass_dim)
      throw ValidationError("fission species d " + std::to_string(target) +
                            " above the parent d " +
                            std::to_string(entry.state.mass_dim));
    FissionResult fission = leap_fission(entry.state, entry.state.mass_dim - target);
    fission.core.rest_mass = particle_mass;
    out.entries.push_back({fission.core, count_share});
  }
  out.radiation_energy_gev = radiation_fraction * entry_energy_gev(pc, entry);
  return out;
}

struct SectorFractions {
  double dark = 0.0;
  double baryonic = 0.0;
  double dark_energy = 0.0;

  friend bool operator==(const SectorFractions&, const SectorFractions&) = default;
};

struct SectorResult {
  double ratio = 0.0;  // dark mass : baryonic mass
  SectorFractions fractions;
};

// Dark/baryonic split of an ensemble: the single 4d species is baryonic,
// everything at higher mass dimension is dark. The ratio is accumulated as
// a sum of per-species mass ratios, so an equal k-way split yields exactly
// k-1 (each ratio term is exactly 1 in exponent arithmetic). Fractions are
// quoted after reserving the configured dark-energy share of the budget.
inline SectorResult dark_sector_ratio(const PhysicalConstants& pc,
                                      const Ensemble& ensemble) {
  const EnsembleEntry* baryonic = nullptr;
  for (const auto& entry : ensemble.entries) {
    if (entry.state.mass_dim == kMinDim) {
      if (baryonic != nullptr)
        throw ValidationError("ensemble must contain exactly one 4d (baryonic) entry");
      baryonic = &entry;
    }
  }
  if (baryonic == nullptr)
    throw ValidationError("ensemble is missing its 4d (baryonic) entry");
  if (ensemble.entries.size() < 2)
    throw ValidationError("ensemble has no dark (d > 4) entries");

  const AlphaScaled baryonic_mass = baryonic->count * baryonic->state.rest_mass;
  double ratio = 0.0;
  for (const auto& entry : ensemble.entries) {
    if (&entry == baryonic) continue;
    ratio += ((entry.count * entry.state.rest_mass) / baryonic_mass).value(pc);
  }

  const double matter = 1.0 - pc.dark_energy_fraction;
  SectorResult result;
  result.ratio = ratio;
  result.fractions.dark = matter * (ratio / (1.0 + ratio));
  result.fractions.baryonic = matter * (1.0 / (1.0 + ratio));
  result.fractions.dark_energy = pc.dark_energy_fraction;
  return result;
}

struct PipelineOptions {
  double radiation_fraction = 0.0;
  std::vector<int> species_d = {9, 8, 7, 6, 5, 4};

  friend bool operator==(const PipelineOptions&, const PipelineOptions&) = default;
};

struct Milestone {
  std::string stage;
  std::string state;
  double energy_gev = 0.0;

  friend bool operator==(const Milestone&, const Milestone&) = default;
};

struct EnergyLedger {
  double initial_gev = 0.0;
  double final_gev = 0.0;

  friend bool operator==(const EnergyLedger&, const EnergyLedger&) = default;
};

struct PipelineReport {
  std::vector<Milestone> milestones;
  std::optional<SectorFractions> sector_fractions;
  std::optional<double> dark_to_baryonic_ratio;
  std::optional<EnergyLedger> ledger;
  std::vector<std::string> notes;
  Ensemble final_ensemble;  // in-memory convenience, not serialized

  // Equality over the serialized fields only.
  friend bool operator==(const PipelineReport& a, const PipelineReport& b) {
    return a.milestones == b.milestones && a.sector_fractions == b.sector_fractions &&
           a.dark_to_baryonic_ratio == b.dark_to_baryonic_ratio &&
           a.ledger == b.ledger && a.notes == b.notes;
  }
};

// Builds the default initial entry: one 10D4d string whose rest mass is the
// Planck energy scaled down by alpha^14, i.e. the state whose 4D10d form
// sits at E_Planck * alpha^2.
inline EnsembleEntry default_initial_entry(const PhysicalConstants& pc) {
  EnsembleEntry entry;
  entry.state.spacetime_dim = 10;
  entry.state.mass_dim = kMinDim;
  entry.state.kind = ParticleKind::boson;
  entry.state.rest_mass = AlphaScaled(pc.planck_energy_gev, 14);
  entry.count = AlphaScaled(1.0);
  return entry;
}

namespace detail {

template <typename Fn>
auto pipeline_stage(const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw StageError(std::string(stage) + ": " + e.what());
  }
}

}  // namespace detail

// The cosmic cascade: QVSL transformation into 4D, stepwise
// fractionalization down to 9d (the inflation segment, bracketed by the two
// energy milestones), simultaneous fission into the configured species, and
// the sector accounting. Every stage conserves the energy ledger.
inline PipelineReport run_pipeline(const PhysicalConstants& pc,
                                   const EnsembleEntry& initial,
                                   const PipelineOptions& options = {}) {
  validate_constants(pc);
  validate_entry(initial);

  PipelineReport report;
  const double initial_energy = entry_energy_gev(pc, initial);

  EnsembleEntry current = initial;
  if (current.state.spacetime_dim > kMinDim) {
    const int steps = current.state.spacetime_dim - kMinDim;
    current.state = detail::pipeline_stage("qvsl_transformation", [&] {
      return qvsl_transform(current.state, steps, TransformDirection::raise_d);
    });
  }
  report.milestones.push_back({"qvsl_transformation", state_code(current.state),
                               current.state.rest_mass.value(pc)});

  current = detail::pipeline_stage("stepwise_fractionalization",
                                   [&] { return fractionalize_to(pc, current, 9); });
  report.milestones.push_back({"stepwise_fractionalization", state_code(current.state),
                               current.state.rest_mass.value(pc)});

  Ensemble ensemble = detail::pipeline_stage("simultaneous_fission", [&] {
    return simultaneous_fission(pc, current, options.species_d,
                                options.radiation_fraction);
  });

  const SectorResult sectors = detail::pipeline_stage(
      "dark_sector_ratio", [&] { return dark_sector_ratio(pc, ensemble); });

  report.sector_fractions = sectors.fractions;
  report.dark_to_baryonic_ratio = sectors.ratio;
  report.ledger = EnergyLedger{initial_energy, total_energy_gev(pc, ensemble)};
  for (const auto& entry : ensemble.entries) {
    if (entry.state.mass_dim == current.state.mass_dim) {
      report.notes.push_back(
          "surviving " + std::to_string(current.state.mass_dim) +
          "d particles undergo the degenerate n = 0 fission and carry " +
          std::to_string(entry.state.orbital_count) + " dimensional orbitals");
      break;
    }
  }
  report.final_ensemble = std::move(ensemble);
  return report;
}

inline nlohmann::json to_json(const PipelineReport& report) {
  nlohmann::json j;
  j["milestones"] = nlohmann::json::array();
  for (const auto& m : report.milestones)
    j["milestones"].push_back(
        {{"stage", m.stage}, {"state", m.state}, {"energy_gev", m.energy_gev}});
  if (report.sector_fractions) {
    j["sector_fractions"] = {{"dark", report.sector_fractions->dark},
                             {"baryonic", report.sector_fractions->baryonic},
                             {"dark_energy", report.sector_fractions->dark_energy}};
  }
  if (report.dark_to_baryonic_ratio)
    j["dark_to_baryonic_ratio"] = *report.dark_to_baryonic_ratio;
  if (report.ledger) {
    j["ledger"] = {{"initial_gev", report.ledger->initial_gev},
                   {"final_gev", report.ledger->final_gev}};
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

inline PipelineReport pipeline_report_from_json(const nlohmann::json& j) {
  PipelineReport report;
  for (const auto& m : j.at("milestones"))
    report.milestones.push_back({m.at("stage").get<std::string>(),
                                 m.at("state").get<std::string>(),
                                 m.at("energy_gev").get<double>()});
  if (j.contains("sector_fractions")) {
    const auto& s = j.at("sector_fractions");
    report.sector_fractions =
        SectorFractions{s.at("dark").get<double>(), s.at("baryonic").get<double>(),
                        s.at("dark_energy").get<double>()};
  }
  if (j.contains("dark_to_baryonic_ratio"))
    report.dark_to_baryonic_ratio = j.at("dark_to_baryonic_ratio").get<double>();
  if (j.contains("ledger")) {
    const auto& l = j.at("ledger");
    report.ledger =
        EnergyLedger{l.at("initial_gev").get<double>(), l.at("final_gev").get<double>()};
  }
  if (j.contains("notes"))
    report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

}  // namespace qvsl

#endif
