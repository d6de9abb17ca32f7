#include "gme/io.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace gme {

namespace {

using nlohmann::json;

json parse(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON");
  }
  return j;
}

Complex complex_from_json(const json& j, const char* field) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_object()) {
    return Complex(j.value("re", 0.0), j.value("im", 0.0));
  }
  throw std::invalid_argument(std::string("state spec: field '") + field +
                              "' must be a number or {re, im}");
}

double require_number(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw std::invalid_argument(std::string("state spec: missing numeric field '") + field + "'");
  }
  return j[field].get<double>();
}

}  // namespace

std::string covariance_to_json(const CovarianceMatrix& v) {
  json j;
  j["n_modes"] = v.n_modes;
  j["ordering"] = "xxyy";
  std::vector<double> entries;
  entries.reserve(v.dim() * v.dim());
  for (int r = 0; r < v.dim(); ++r) {
    for (int c = 0; c < v.dim(); ++c) entries.push_back(v.entries(r, c));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

CovarianceMatrix covariance_from_json(std::string_view text) {
  const json j = parse(text, "covariance");
  if (!j.contains("n_modes") || !j["n_modes"].is_number_integer()) {
    throw std::invalid_argument("covariance: missing integer field 'n_modes'");
  }
  const int n = j["n_modes"].get<int>();
  if (n < 1) throw std::invalid_argument("covariance: n_modes must be >= 1");
  if (j.value("ordering", "") != "xxyy") {
    throw std::invalid_argument("covariance: ordering must be \"xxyy\"");
  }
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != static_cast<std::size_t>(4 * n * n)) {
    throw std::invalid_argument("covariance: 'entries' must hold 2N x 2N reals");
  }
  Mat m(2 * n, 2 * n);
  std::size_t idx = 0;
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) m(r, c) = j["entries"][idx++].get<double>();
  }
  return CovarianceMatrix::from_matrix(std::move(m));
}

StateSpec state_spec_from_json(std::string_view text) {
  const json j = parse(text, "state spec");
  if (!j.contains("family") || !j["family"].is_string()) {
    throw std::invalid_argument("state spec: missing string field 'family'");
  }
  StateSpec spec;
  spec.family = family_from_string(j["family"].get<std::string>());
  const double z = require_number(j, "z");

  if (spec.family == StateFamily::square4) {
    double g_mag = 0.0;
    double phi = 0.0;
    if (j.contains("g_mag")) {
      g_mag = require_number(j, "g_mag");
      phi = require_number(j, "phi_minus");
    } else if (j.contains("g1") && j.contains("g2")) {
      const Complex g1 = complex_from_json(j["g1"], "g1");
      const Complex g2 = complex_from_json(j["g2"], "g2");
      const double m1 = std::abs(g1);
      const double m2 = std::abs(g2);
      if (std::abs(m1 - m2) > 1e-12 * std::max({m1, m2, 1.0})) {
        throw std::invalid_argument(
            "state spec: square family supports the symmetric case only (|g1| = |g2|); "
            "got unequal magnitudes");
      }
      g_mag = m1;
      phi = 0.5 * (std::arg(g1) - std::arg(g2));
    } else {
      throw std::invalid_argument("state spec: sq4 needs g_mag/phi_minus or g1/g2");
    }
    const auto reduction = reduce_phi_minus(phi);
    spec.params = FourModeSquareParams{g_mag, reduction.value, z};
    spec.phi_was_reduced = reduction.reduced;
    return spec;
  }

  if (!j.contains("g1") || !j.contains("g2")) {
    throw std::invalid_argument("state spec: missing couplings g1, g2");
  }
  const Complex g1 = complex_from_json(j["g1"], "g1");
  const Complex g2 = complex_from_json(j["g2"], "g2");
  if (spec.family == StateFamily::tripartite) {
    spec.params = TripartiteParams{g1, g2, z};
  } else {
    spec.params = FourModeLinearParams{g1, g2, z};
  }
  return spec;
}

std::string report_to_json(const StateReport& report) {
  json j;
  j["family"] = to_string(report.family);
  j["tol"] = report.tol;
  json parts = json::array();
  for (const auto& pr : report.partitions) {
    json p;
    p["label"] = pr.label;
    json alice = json::array();
    for (int m : pr.partition.alice()) alice.push_back(m + 1);
    p["alice"] = std::move(alice);
    p["spectrum_pt"] = pr.ppt.spectrum_pt.values;
    p["nu_sub_unity"] = pr.ppt.sub_unity;
    p["log_negativity"] = pr.ppt.log_negativity;
    p["verdict"] = pr.ppt.entangled() ? "entangled" : "undecided";
    if (pr.bound) {
      p["bound_label"] = pr.bound->label;
      p["bound_lhs"] = pr.bound->lhs;
      p["bound_rhs"] = pr.bound->rhs;
      p["bound_violated"] = pr.bound->violated;
    } else {
      p["bound_label"] = nullptr;
      p["bound_lhs"] = nullptr;
      p["bound_rhs"] = nullptr;
      p["bound_violated"] = nullptr;
    }
    parts.push_back(std::move(p));
  }
  j["partitions"] = std::move(parts);
  if (report.genuine) j["genuine"] = *report.genuine;
  return j.dump(2) + "\n";
}

SweepSpec sweep_spec_from_json(std::string_view text) {
  const json j = parse(text, "sweep spec");
  if (!j.contains("family") || !j["family"].is_string()) {
    throw std::invalid_argument("sweep spec: missing string field 'family'");
  }
  SweepSpec spec = default_sweep_spec(family_from_string(j["family"].get<std::string>()));

  if (j.contains("resolution")) {
    if (!j["resolution"].is_number_integer()) {
      throw std::invalid_argument("sweep spec: 'resolution' must be an integer");
    }
    spec.x.points = spec.y.points = j["resolution"].get<int>();
  }
  for (auto [name, axis] : {std::pair{"x", &spec.x}, std::pair{"y", &spec.y}}) {
    if (!j.contains(name)) continue;
    const json& a = j[name];
    if (!a.is_object()) throw std::invalid_argument("sweep spec: axis must be an object");
    axis->min = a.value("min", axis->min);
    axis->max = a.value("max", axis->max);
    if (a.contains("points")) axis->points = a["points"].get<int>();
    if (a.contains("scale")) {
      const std::string scale = a["scale"].get<std::string>();
      if (scale == "log10") {
        axis->log10 = true;
      } else if (scale == "linear") {
        axis->log10 = false;
      } else {
        throw std::invalid_argument("sweep spec: axis scale must be 'log10' or 'linear'");
      }
    }
  }
  if (j.contains("partitions") && !(j["partitions"].is_string() && j["partitions"] == "all")) {
    if (!j["partitions"].is_array()) {
      throw std::invalid_argument("sweep spec: 'partitions' must be \"all\" or an array of labels");
    }
    for (const auto& label : j["partitions"]) {
      spec.partitions.push_back(label.get<std::string>());
    }
  }
  return spec;
}

}  // namespace gme
