#include "gme/labels.hpp"

#include <stdexcept>

namespace gme {

namespace {

// Singleton side of a 1 vs (N−1) split, or -1 when both sides are larger.
int lone_mode(const ModePartition& p) {
  if (p.alice().size() == 1) return p.alice().front();
  if (p.alice().size() == static_cast<std::size_t>(p.n_modes()) - 1) return p.bob().front();
  return -1;
}

ModePartition parse_set_notation(int n_modes, std::string label) {
  if (!label.empty() && label.front() == '{' && label.back() == '}') {
    label = label.substr(1, label.size() - 2);
  }
  std::vector<int> modes;
  std::size_t pos = 0;
  while (pos < label.size()) {
    std::size_t used = 0;
    const int one_based = std::stoi(label.substr(pos), &used);
    modes.push_back(one_based - 1);
    pos += used;
    if (pos < label.size()) {
      if (label[pos] != ',') throw std::invalid_argument("bad partition set notation");
      ++pos;
    }
  }
  return ModePartition::of(n_modes, std::move(modes));
}

}  // namespace

std::string partition_label(StateFamily family, const ModePartition& p) {
  if (family == StateFamily::tripartite) {
    const int mode = lone_mode(p);
    if (p.n_modes() == 3 && mode >= 0) return std::to_string(mode);
    throw std::invalid_argument("partition_label: not a 3-mode single-mode partition");
  }
  if (p.n_modes() != 4) {
    throw std::invalid_argument("partition_label: 4-mode partition expected");
  }
  const int mode = lone_mode(p);
  if (mode >= 0) return "P" + std::to_string(mode + 1);
  // 2 vs 2 split; canonical side holds mode 0.
  return "P1" + std::to_string(p.alice()[1] + 1);
}

ModePartition partition_from_label(StateFamily family, const std::string& label) {
  const int n = family == StateFamily::tripartite ? 3 : 4;
  try {
    if (family == StateFamily::tripartite) {
      if (label.size() == 1 && label[0] >= '0' && label[0] <= '2') {
        return ModePartition::of(3, {label[0] - '0'});
      }
    } else if (!label.empty() && (label[0] == 'P' || label[0] == 'p')) {
      const std::string tail = label.substr(1);
      if (tail == "1" || tail == "2" || tail == "3" || tail == "4") {
        return ModePartition::of(4, {tail[0] - '1'});
      }
      if (tail == "12" || tail == "13" || tail == "14") {
        return ModePartition::of(4, {0, tail[1] - '1'});
      }
    }
    return parse_set_notation(n, label);
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown partition label '" + label + "' for family " +
                                to_string(family));
  }
}

std::vector<ModePartition> family_partitions(StateFamily family) {
  // Label order (single modes first, then pairs), matching the tables the
  // labels come from; enumerate_bipartitions keeps the canonical ordering.
  std::vector<ModePartition> out;
  if (family == StateFamily::tripartite) {
    for (int mode : {0, 1, 2}) out.push_back(ModePartition::of(3, {mode}));
    return out;
  }
  for (int mode : {0, 1, 2, 3}) out.push_back(ModePartition::of(4, {mode}));
  for (int partner : {1, 2, 3}) out.push_back(ModePartition::of(4, {0, partner}));
  return out;
}

}  // namespace gme
