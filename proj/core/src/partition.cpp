#include "gme/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gme {

ModePartition ModePartition::of(int n_modes, std::vector<int> alice_modes) {
  if (n_modes < 2) {
    throw std::invalid_argument("ModePartition: need at least 2 modes");
  }
  if (alice_modes.empty()) {
    throw std::invalid_argument("ModePartition: Alice's set is empty (no partition)");
  }
  std::sort(alice_modes.begin(), alice_modes.end());
  if (std::adjacent_find(alice_modes.begin(), alice_modes.end()) != alice_modes.end()) {
    throw std::invalid_argument("ModePartition: duplicate mode index");
  }
  if (alice_modes.front() < 0 || alice_modes.back() >= n_modes) {
    throw std::invalid_argument("ModePartition: mode index out of range");
  }
  if (static_cast<int>(alice_modes.size()) == n_modes) {
    throw std::invalid_argument("ModePartition: Alice's set is the full set (no partition)");
  }
  if (alice_modes.front() != 0) {
    // Canonical side is the one holding mode 0.
    std::vector<int> complement;
    complement.reserve(n_modes - alice_modes.size());
    std::size_t pos = 0;
    for (int j = 0; j < n_modes; ++j) {
      if (pos < alice_modes.size() && alice_modes[pos] == j) {
        ++pos;
      } else {
        complement.push_back(j);
      }
    }
    alice_modes = std::move(complement);
  }
  return ModePartition(n_modes, std::move(alice_modes));
}

std::vector<int> ModePartition::bob() const {
  std::vector<int> out;
  out.reserve(n_modes_ - alice_.size());
  std::size_t pos = 0;
  for (int j = 0; j < n_modes_; ++j) {
    if (pos < alice_.size() && alice_[pos] == j) {
      ++pos;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

bool ModePartition::contains(int mode) const {
  return std::binary_search(alice_.begin(), alice_.end(), mode);
}

std::string ModePartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < alice_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alice_[i] + 1);
  }
  out += '}';
  return out;
}

std::vector<ModePartition> enumerate_bipartitions(int n_modes) {
  if (n_modes < 2) {
    throw std::invalid_argument("enumerate_bipartitions: n_modes must be >= 2");
  }
  if (n_modes > 24) {
    throw std::invalid_argument("enumerate_bipartitions: 2^{N-1}-1 partitions is too many");
  }
  // Canonical representatives are exactly the proper subsets containing mode 0:
  // mode 0 plus any strict subset of the remaining N−1 modes.
  std::vector<std::vector<int>> sets;
  const unsigned rest = n_modes - 1;
  for (unsigned bits = 0; bits + 1 < (1u << rest); ++bits) {
    std::vector<int> alice{0};
    for (unsigned j = 0; j < rest; ++j) {
      if (bits & (1u << j)) alice.push_back(static_cast<int>(j) + 1);
    }
    sets.push_back(std::move(alice));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<ModePartition> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(ModePartition::of(n_modes, std::move(s)));
  return out;
}

}  // namespace gme
