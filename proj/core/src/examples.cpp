#include "bayesmosaic/examples.hpp"

namespace bayesmosaic::examples {

BayesModel surveillance() {
  return make_model({{"A1", 0.90}, {"A2", 0.10}}, {"B1", "B2", "B3"},
                    {{0.70, 0.20, 0.10}, {0.60, 0.20, 0.20}},
                    "Intruder detection (A) and weather (B)");
}

BayesModel four_by_four() {
  return make_model({{"A1", 0.60}, {"A2", 0.25}, {"A3", 0.10}, {"A4", 0.05}}, {"B1", "B2", "B3", "B4"},
                    {{0.05, 0.40, 0.05, 0.50},
                     {0.10, 0.20, 0.10, 0.60},
                     {0.25, 0.35, 0.20, 0.20},
                     {0.35, 0.15, 0.40, 0.10}},
                    "4x4 scenario");
}

}  // namespace bayesmosaic::examples
