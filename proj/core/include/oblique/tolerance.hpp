#pragma once

#include <cstddef>

namespace oblique {

/// Accuracy targets shared by quadrature, root finding and oracle comparisons.
struct ToleranceConfig {
  double abs = 0.0;
  double rel = 1e-13;
  int max_depth = 60;
  std::size_t mc_samples = 1'000'000;
  int grid_theta = 2048;
  int grid_phi = 4096;
};

}  // namespace oblique
