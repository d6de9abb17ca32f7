#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gme/states.hpp"

namespace gme {

struct AxisSpec {
  double min = 0.0;
  double max = 1.0;
  bool log10 = false;
  int points = 101;

  /// Strictly increasing grid; log10 axes are spaced in the exponent.
  std::vector<double> grid() const;
};

/// A 2-D parameter scan. The x axis is the coupling ratio |g2/g1| for the
/// tri/lin4 families and the pump phase offset φ₋ for sq4; the y axis is the
/// total gain ḡz in all cases.
struct SweepSpec {
  StateFamily family = StateFamily::tripartite;
  AxisSpec x;
  AxisSpec y;
  std::vector<std::string> partitions;  // labels; empty means all
};

/// Figure-matching defaults: ratio ∈ [0.1, 10] log-spaced (tri/lin4) or
/// φ₋ ∈ [0, π/2] linear (sq4); ḡz ∈ [0, 3] linear; 101 points per axis.
SweepSpec default_sweep_spec(StateFamily family);

struct SweepRow {
  double x = 0.0;
  double y = 0.0;
  std::string partition;
  double nu_product = 1.0;      // Π of sub-unity PT eigenvalues, 1 when none
  double log_negativity = 0.0;  // −log2 nu_product
  bool bound_violated = false;  // variance-bound verdict; always false for sq4
};

/// State parameters at one grid point: couplings normalized to ḡ = 1 and
/// z = y, so y is the total gain directly.
StateSpec sweep_point(StateFamily family, double x, double y);

/// Runs the scan in deterministic row-major order (y outer, x inner,
/// partitions innermost in canonical order). Pure and single-threaded;
/// output is byte-stable across runs.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with header family,x,y,partition,nu_product,log_negativity,bound_violated
/// and 17-significant-digit numeric fields.
void write_sweep_csv(std::ostream& os, StateFamily family, const std::vector<SweepRow>& rows);

}  // namespace gme
