#pragma once

#include "bayesmosaic/bayes.hpp"

namespace bayesmosaic::examples {

// Surveillance example: A1/A2 = intruder detected / missed,
// B1/B2/B3 = clear / cloudy / rainy.
BayesModel surveillance();

// 4x4 scenario: four prior events, four outcomes each.
BayesModel four_by_four();

}  // namespace bayesmosaic::examples
