#include "gme/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "gme/labels.hpp"
#include "gme/report.hpp"

namespace gme {

std::vector<double> AxisSpec::grid() const {
  if (points < 2) {
    throw std::invalid_argument("AxisSpec: need at least 2 grid points");
  }
  if (!(min < max)) {
    throw std::invalid_argument("AxisSpec: grid must be strictly increasing (min < max)");
  }
  if (log10 && !(min > 0.0)) {
    throw std::invalid_argument("AxisSpec: log axis needs positive endpoints");
  }
  std::vector<double> out(points);
  const double lo = log10 ? std::log10(min) : min;
  const double hi = log10 ? std::log10(max) : max;
  for (int i = 0; i < points; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    out[i] = log10 ? std::pow(10.0, t) : t;
  }
  return out;
}

SweepSpec default_sweep_spec(StateFamily family) {
  SweepSpec spec;
  spec.family = family;
  if (family == StateFamily::square4) {
    spec.x = AxisSpec{0.0, std::numbers::pi / 2.0, false, 101};
  } else {
    spec.x = AxisSpec{0.1, 10.0, true, 101};
  }
  spec.y = AxisSpec{0.0, 3.0, false, 101};
  return spec;
}

StateSpec sweep_point(StateFamily family, double x, double y) {
  StateSpec spec;
  spec.family = family;
  if (family == StateFamily::square4) {
    // ḡ = √2 g_mag = 1, so z = y is the total gain.
    spec.params = FourModeSquareParams{(1.0 / std::numbers::sqrt2), x, y};
    return spec;
  }
  const double theta = std::atan(x);
  const Complex g1{std::cos(theta), 0.0};
  const Complex g2{std::sin(theta), 0.0};
  if (family == StateFamily::tripartite) {
    spec.params = TripartiteParams{g1, g2, y};
  } else {
    spec.params = FourModeLinearParams{g1, g2, y};
  }
  return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<ModePartition> partitions;
  if (spec.partitions.empty()) {
    partitions = family_partitions(spec.family);
  } else {
    for (const auto& label : spec.partitions) {
      partitions.push_back(partition_from_label(spec.family, label));
    }
  }

  const auto xs = spec.x.grid();
  const auto ys = spec.y.grid();

  std::vector<SweepRow> rows;
  rows.reserve(xs.size() * ys.size() * partitions.size());
  for (double y : ys) {
    for (double x : xs) {
      const auto report = make_report(sweep_point(spec.family, x, y), partitions);
      for (const auto& pr : report.partitions) {
        SweepRow row;
        row.x = x;
        row.y = y;
        row.partition = pr.label;
        row.nu_product = 1.0;
        for (double nu : pr.ppt.sub_unity) row.nu_product *= nu;
        row.log_negativity = pr.ppt.log_negativity;
        row.bound_violated = pr.bound && pr.bound->violated;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

namespace {

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, StateFamily family, const std::vector<SweepRow>& rows) {
  const std::string fam = to_string(family);
  os << "family,x,y,partition,nu_product,log_negativity,bound_violated\n";
  for (const auto& row : rows) {
    os << fam << ',' << fmt(row.x) << ',' << fmt(row.y) << ',' << row.partition << ','
       << fmt(row.nu_product) << ',' << fmt(row.log_negativity) << ','
       << (row.bound_violated ? "true" : "false") << '\n';
  }
}

}  // namespace gme
