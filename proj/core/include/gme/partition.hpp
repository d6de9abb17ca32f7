#pragma once

#include <string>
#include <vector>

namespace gme {

/// A bipartition of N modes into Alice's set and its complement. A partition
/// and its complement are the same object; the canonical representative is
/// the side containing mode 0. Mode indices are 0-based.
class ModePartition {
 public:
  /// Canonicalizes and validates. Throws std::invalid_argument when the set
  /// is empty, the full set, out of range, or contains duplicates.
  static ModePartition of(int n_modes, std::vector<int> alice_modes);

  int n_modes() const { return n_modes_; }
  const std::vector<int>& alice() const { return alice_; }
  std::vector<int> bob() const;
  bool contains(int mode) const;

  /// Set notation of the canonical side, 1-based: "{1,3}".
  std::string to_string() const;

  friend bool operator==(const ModePartition&, const ModePartition&) = default;

 private:
  ModePartition(int n_modes, std::vector<int> alice)
      : n_modes_(n_modes), alice_(std::move(alice)) {}

  int n_modes_ = 0;
  std::vector<int> alice_;  // sorted, contains 0
};

/// All 2^{N−1} − 1 bipartitions, ordered by Alice-set size then
/// lexicographically. Throws std::invalid_argument for n_modes < 2.
std::vector<ModePartition> enumerate_bipartitions(int n_modes);

}  // namespace gme
