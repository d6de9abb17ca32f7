#pragma once

#include <string>
#include <vector>

#include "gme/partition.hpp"
#include "gme/states.hpp"

namespace gme {

/// Display label of a bipartition in a family's naming scheme:
///   tri  — the lone mode of the 1 vs 2 split: "0", "1", "2"
///   lin4/sq4 — "P1".."P4" for single modes, "P12", "P13", "P14" for pairs
std::string partition_label(StateFamily family, const ModePartition& p);

/// Inverse of partition_label. Also accepts 1-based set notation like
/// "{1,3}" or "1,3" for any family. Throws std::invalid_argument on unknown
/// labels.
ModePartition partition_from_label(StateFamily family, const std::string& label);

/// All bipartitions of the family's mode count, canonical order.
std::vector<ModePartition> family_partitions(StateFamily family);

}  // namespace gme
