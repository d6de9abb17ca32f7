#pragma once

#include "gme/types.hpp"

namespace gme {

/// Dense matrix exponential by scaling and squaring with diagonal Padé
/// approximants (orders 3/5/7/9/13 chosen from the 1-norm). Accurate to
/// machine roundoff for the well-conditioned generators used here.
Mat expm(const Mat& a);

}  // namespace gme
