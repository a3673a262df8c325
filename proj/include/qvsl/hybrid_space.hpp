#ifndef QVSL_HYBRID_SPACE_HPP
#define QVSL_HYBRID_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qvsl/constants.hpp"
#include "qvsl/errors.hpp"
#include "qvsl/random.hpp"

namespace qvsl {

// The three-value space code. Attachment and detachment are the two
// mutually exclusive pure values; hybrid is their coherent combination.
enum class SpaceValue { attachment, detachment, hybrid };

inline const char* to_string(SpaceValue v) {
  switch (v) {
    case SpaceValue::attachment: return "attachment";
    case SpaceValue::detachment: return "detachment";
    default: return "hybrid";
  }
}

inline SpaceValue space_value_from_string(const std::string& s) {
  if (s == "attachment") return SpaceValue::attachment;
  if (s == "detachment") return SpaceValue::detachment;
  if (s == "hybrid") return SpaceValue::hybrid;
  throw ValidationError("unknown space value \"" + s + "\"");
}

// Commutative, associative, idempotent; hybrid absorbs, and combining the
// two pure values produces hybrid.
inline constexpr SpaceValue combine(SpaceValue a, SpaceValue b) {
  return a == b ? a : SpaceValue::hybrid;
}

// Weight cap keeping detachment strictly positive (t -> 0 is the
// complete-attachment singularity of the density rule).
inline constexpr double kMaxAttachmentWeight = 1.0 - 1e-9;

// One region of hybrid space: attachment weight a in (0, 1), detachment
// weight t = 1 - a. Complete attachment and complete detachment are both
// unrepresentable by construction.
class HybridCell {
 public:
  explicit HybridCell(double attachment_weight) : a_(attachment_weight) {
    if (!(a_ > 0.0) || !(a_ < 1.0))
      throw ValidationError("attachment_weight must lie strictly in (0, 1), got " +
                            std::to_string(attachment_weight));
    if (a_ > kMaxAttachmentWeight)
      throw ValidationError("attachment_weight exceeds the 1 - 1e-9 cap");
  }

  double attachment_weight() const { return a_; }
  double detachment_weight() const { return 1.0 - a_; }

  friend bool operator==(const HybridCell&, const HybridCell&) = default;

 private:
  double a_;
};

// Decomposition of a hybrid cell into its two pure constituents. The
// result is weight-independent; weights only matter for the density.
inline std::pair<SpaceValue, SpaceValue> separate(const HybridCell&) {
  return {SpaceValue::attachment, SpaceValue::detachment};
}

enum class GapStatus { satisfied, boundary, violated };
enum class GapReason { none, complete_attachment, complete_detachment, below_bound };

inline const char* to_string(GapStatus s) {
  switch (s) {
    case GapStatus::satisfied: return "satisfied";
    case GapStatus::boundary: return "boundary";
    default: return "violated";
  }
}

inline const char* to_string(GapReason r) {
  switch (r) {
    case GapReason::none: return "none";
    case GapReason::complete_attachment: return "complete attachment";
    case GapReason::complete_detachment: return "complete detachment";
    default: return "below bound";
  }
}

struct GapCheck {
  GapStatus status = GapStatus::violated;
  GapReason reason = GapReason::none;
  double product = 0.0;
  double bound = 0.0;
};

inline constexpr double kGapBoundaryRelTol = 1e-12;

// The gap principle: dx * dp must exceed h / 4*pi. dx = 0 is complete
// attachment, dp = 0 complete detachment; both are forbidden. When both are
// zero the attachment reason is reported (dx is checked first).
inline GapCheck gap_check(const PhysicalConstants& pc, double dx, double dp) {
  if (!(dx >= 0.0)) throw ValidationError("dx must be non-negative");
  if (!(dp >= 0.0)) throw ValidationError("dp must be non-negative");
  GapCheck result;
  result.bound = pc.gap_bound();
  if (dx == 0.0) {
    result.status = GapStatus::violated;
    result.reason = GapReason::complete_attachment;
    return result;
  }
  if (dp == 0.0) {
    result.status = GapStatus::violated;
    result.reason = GapReason::complete_detachment;
    return result;
  }
  result.product = dx * dp;
  if (std::abs(result.product - result.bound) <= kGapBoundaryRelTol * result.bound) {
    result.status = GapStatus::boundary;
  } else if (result.product > result.bound) {
    result.status = GapStatus::satisfied;
  } else {
    result.status = GapStatus::violated;
    result.reason = GapReason::below_bound;
  }
  return result;
}

// A wavefunction over hybrid cells. The probability density of a cell is
// proportional to its attachment weight and inversely proportional to its
// detachment weight: rho_i = (a_i / t_i) / sum_j (a_j / t_j).
struct Wavefunction {
  std::vector<HybridCell> cells;
  std::vector<double> density;

  friend bool operator==(const Wavefunction&, const Wavefunction&) = default;
};

inline Wavefunction build_wavefunction(std::vector<HybridCell> cells) {
  if (cells.empty()) throw ValidationError("wavefunction needs at least one cell");
  std::vector<double> weights;
  weights.reserve(cells.size());
  double sum = 0.0;
  for (const auto& cell : cells) {
    const double w = cell.attachment_weight() / cell.detachment_weight();
    weights.push_back(w);
    sum += w;
  }
  for (double& w : weights) w /= sum;
  return Wavefunction{std::move(cells), std::move(weights)};
}

inline Wavefunction build_wavefunction(const std::vector<double>& attachment_weights) {
  std::vector<HybridCell> cells;
  cells.reserve(attachment_weights.size());
  for (double a : attachment_weights) cells.emplace_back(a);
  return build_wavefunction(std::move(cells));
}

// Collapse separates the space code: attachment attaches at the chosen
// site, detachment detaches everywhere else, and the density becomes a
// delta distribution there.
struct CollapseOutcome {
  std::size_t chosen_index = 0;
  std::vector<SpaceValue> post_cells;
  std::vector<double> post_density;

  friend bool operator==(const CollapseOutcome&, const CollapseOutcome&) = default;
};

inline CollapseOutcome collapse(const Wavefunction& wf, std::size_t index) {
  if (index >= wf.cells.size())
    throw ValidationError("collapse index " + std::to_string(index) +
                          " out of bounds for " + std::to_string(wf.cells.size()) +
                          " cells");
  CollapseOutcome outcome;
  outcome.chosen_index = index;
  outcome.post_cells.assign(wf.cells.size(), SpaceValue::detachment);
  outcome.post_cells[index] = SpaceValue::attachment;
  outcome.post_density.assign(wf.cells.size(), 0.0);
  outcome.post_density[index] = 1.0;
  return outcome;
}

// Random collapse by inverse CDF over half-open intervals [c_i, c_{i+1});
// the final interval is capped at 1 so every draw lands somewhere. One
// uniform draw per collapse, fully determined by the stream state.
inline CollapseOutcome collapse(const Wavefunction& wf, RandomStream& stream) {
  const double u = stream.uniform01();
  double cumulative = 0.0;
  std::size_t chosen = wf.density.size() - 1;
  for (std::size_t i = 0; i + 1 < wf.density.size(); ++i) {
    cumulative += wf.density[i];
    if (u < cumulative) {
      chosen = i;
      break;
    }
  }
  return collapse(wf, chosen);
}

// Decoherence by entanglement with an environment, named after what it does
// to hybrid space: same contract as a seeded random collapse.
inline CollapseOutcome decohere(const Wavefunction& wf, std::uint64_t environment_seed) {
  RandomStream stream(environment_seed);
  return collapse(wf, stream);
}

// A collapsed state has no hybrid cells left; decohering it again is the
// identity.
inline CollapseOutcome decohere(const CollapseOutcome& outcome, std::uint64_t) {
  return outcome;
}

inline nlohmann::json to_json(const Wavefunction& wf) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& cell : wf.cells)
    cells.push_back({{"a", cell.attachment_weight()}});
  return {{"cells", cells}};
}

inline Wavefunction wavefunction_from_json(const nlohmann::json& j) {
  std::vector<double> weights;
  for (const auto& cell : j.at("cells")) weights.push_back(cell.at("a").get<double>());
  return build_wavefunction(weights);
}

inline nlohmann::json to_json(const CollapseOutcome& outcome) {
  nlohmann::json post = nlohmann::json::array();
  for (SpaceValue v : outcome.post_cells) post.push_back(to_string(v));
  return {{"chosen_index", outcome.chosen_index}, {"post", post}};
}

inline CollapseOutcome collapse_outcome_from_json(const nlohmann::json& j) {
  CollapseOutcome outcome;
  outcome.chosen_index = j.at("chosen_index").get<std::size_t>();
  for (const auto& v : j.at("post"))
    outcome.post_cells.push_back(space_value_from_string(v.get<std::string>()));
  outcome.post_density.assign(outcome.post_cells.size(), 0.0);
  if (outcome.chosen_index < outcome.post_density.size())
    outcome.post_density[outcome.chosen_index] = 1.0;
  return outcome;
}

}  // namespace qvsl

#endif
