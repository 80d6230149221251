#pragma once

#include <functional>

namespace pilotwave {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  int max_depth = 15;
  double r_max = 0;  // integration cutoff in meters; 0 means derive from the Gaussian tail
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Throws
/// std::runtime_error when the error estimate fails to converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

}  // namespace pilotwave
