#include "gme/report.hpp"

#include <algorithm>

#include "gme/labels.hpp"

namespace gme {

StateReport make_report(const StateSpec& spec, const std::vector<ModePartition>& partitions,
                        double tol) {
  const auto state = build_state(spec);

  // Variance-bound results, where the family defines them.
  std::optional<TripartiteBoundSuite> tri_suite;
  std::vector<FourModeBoundRow> lin_rows;
  if (spec.family == StateFamily::tripartite) {
    tri_suite = tripartite_bound_suite(std::get<TripartiteParams>(spec.params));
  } else if (spec.family == StateFamily::linear4) {
    lin_rows = four_mode_bound_suite(std::get<FourModeLinearParams>(spec.params));
  }

  StateReport report{spec.family, tol, {}, std::nullopt};
  for (const auto& partition : partitions) {
    PartitionReport pr{partition, partition_label(spec.family, partition),
                       ppt_report(state.covariance, partition, tol), std::nullopt};
    if (tri_suite) {
      const int mode = pr.label[0] - '0';
      pr.bound = tri_suite->modes[mode];
    } else if (!lin_rows.empty()) {
      const auto row = std::find_if(lin_rows.begin(), lin_rows.end(),
                                    [&](const auto& r) { return r.partition == partition; });
      if (row != lin_rows.end()) pr.bound = row->best();
    }
    report.partitions.push_back(std::move(pr));
  }

  const auto all = family_partitions(spec.family);
  const bool complete = std::all_of(all.begin(), all.end(), [&](const auto& p) {
    return std::find(partitions.begin(), partitions.end(), p) != partitions.end();
  });
  if (complete) {
    report.genuine = std::all_of(report.partitions.begin(), report.partitions.end(),
                                 [](const auto& pr) { return pr.ppt.entangled(); });
  }
  return report;
}

StateReport make_report(const StateSpec& spec, double tol) {
  return make_report(spec, family_partitions(spec.family), tol);
}

}  // namespace gme
