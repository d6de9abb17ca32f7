#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gme/bounds.hpp"
#include "gme/ppt.hpp"
#include "gme/states.hpp"

namespace gme {

struct PartitionReport {
  ModePartition partition;
  std::string label;
  EntanglementReport ppt;
  std::optional<BoundEvaluation> bound;  // absent for the square state (PPT only)
};

struct StateReport {
  StateFamily family = StateFamily::tripartite;
  double tol = 1e-10;
  std::vector<PartitionReport> partitions;
  std::optional<bool> genuine;  // all bipartitions entangled; set when all were tested
};

/// Entanglement report across all bipartitions of the family.
StateReport make_report(const StateSpec& spec, double tol = 1e-10);

/// Report restricted to the given partitions (genuine flag only when the
/// selection covers every bipartition).
StateReport make_report(const StateSpec& spec, const std::vector<ModePartition>& partitions,
                        double tol = 1e-10);

}  // namespace gme
