#pragma once

#include <string>
#include <string_view>

#include "gme/covariance.hpp"
#include "gme/report.hpp"
#include "gme/states.hpp"
#include "gme/sweep.hpp"

namespace gme {

/// Covariance wire format: {"n_modes": N, "ordering": "xxyy", "entries":
/// [row-major 2N·2N reals]}. Serialization carries enough digits for an
/// exact round trip. Parsers throw std::invalid_argument on malformed input,
/// wrong sizes, or an ordering other than "xxyy".
std::string covariance_to_json(const CovarianceMatrix& v);
CovarianceMatrix covariance_from_json(std::string_view text);

/// State spec format: {"family": "tri"|"lin4"|"sq4", ...} with complex
/// couplings g1, g2 as {"re": x, "im": y} (or a bare number) plus "z"; the
/// square family takes "g_mag" and "phi_minus" instead (or g1/g2 of equal
/// magnitude, from which they are derived).
StateSpec state_spec_from_json(std::string_view text);

std::string report_to_json(const StateReport& report);

/// Sweep spec format: {"family": ..., "resolution": 101, "partitions":
/// "all"|[labels], "x": {"min","max","scale":"log10"|"linear","points"},
/// "y": {...}}; everything except family has figure-matching defaults.
SweepSpec sweep_spec_from_json(std::string_view text);

}  // namespace gme
