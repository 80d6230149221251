#pragma once

#include <vector>

#include "pilotwave/catalog.hpp"
#include "pilotwave/fieldcalc.hpp"
#include "pilotwave/physics.hpp"

namespace pilotwave {

enum class StepMethod { rk4, euler };

struct TrajectoryConfig {
  double t_start = 0;  // s, must be positive (catalog fields are singular at t = 0)
  double t_end = 0;    // s, > t_start
  double dt = 0;       // s, > 0
  StepMethod method = StepMethod::rk4;
};

struct TrajectorySample {
  double t;      // s
  double r;      // m
  double theta;  // rad
  double speed;  // m/s, field magnitude at the sample
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

/// Integrates dr/dt = v_r, dtheta/dt = v_theta / r with a fixed-step
/// rk4 or euler scheme. The step count is rounded so the path lands exactly
/// on t_end.
Trajectory integrate(const VectorFieldDescriptor& v, PolarPoint start,
                     const TrajectoryConfig& cfg);

struct RadiusBracket {
  double lo = 1e-15;  // m
  double hi = 1e-3;   // m
};

/// Radius at which the catalog velocity magnitude reaches light_speed at a
/// fixed time, found by bisection to 1e-15 m. Only dimensionally valid
/// velocities are accepted.
double superluminal_radius(CatalogId velocity, double t, const OscillatorParams& p,
                           double light_speed = constants::light_speed,
                           RadiusBracket bracket = {});

}  // namespace pilotwave
