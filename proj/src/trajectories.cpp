#include "pilotwave/trajectories.hpp"

#include "pilotwave/pipeline.hpp"
#include "pilotwave/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pilotwave {

namespace {

struct State {
  double r;
  double theta;
};

State derivative(const VectorFieldDescriptor& v, const State& s, double t) {
  if (!(s.r > 0.0))
    throw std::domain_error("trajectory stepped to a non-positive radius");
  const PolarVector vel = v.evaluate(s.r, s.theta, t);
  if (!std::isfinite(vel.v_r) || !std::isfinite(vel.v_theta))
    throw std::runtime_error("velocity field '" + v.name +
                             "' produced a non-finite value along the path");
  return {vel.v_r, vel.v_theta / s.r};
}

State rk4_step(const VectorFieldDescriptor& v, const State& s, double t, double h) {
  const State k1 = derivative(v, s, t);
  const State k2 = derivative(v, {s.r + 0.5 * h * k1.r, s.theta + 0.5 * h * k1.theta}, t + 0.5 * h);
  const State k3 = derivative(v, {s.r + 0.5 * h * k2.r, s.theta + 0.5 * h * k2.theta}, t + 0.5 * h);
  const State k4 = derivative(v, {s.r + h * k3.r, s.theta + h * k3.theta}, t + h);
  return {s.r + h / 6.0 * (k1.r + 2 * k2.r + 2 * k3.r + k4.r),
          s.theta + h / 6.0 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta)};
}

State euler_step(const VectorFieldDescriptor& v, const State& s, double t, double h) {
  const State k = derivative(v, s, t);
  return {s.r + h * k.r, s.theta + h * k.theta};
}

}  // namespace

Trajectory integrate(const VectorFieldDescriptor& v, PolarPoint start,
                     const TrajectoryConfig& cfg) {
  if (!(start.r > 0.0)) throw std::invalid_argument("start radius must be positive");
  if (!(cfg.t_start > 0.0)) throw std::invalid_argument("t_start must be positive");
  if (!(cfg.t_end > cfg.t_start)) throw std::invalid_argument("t_end must exceed t_start");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");

  const double span = cfg.t_end - cfg.t_start;
  const long long n_steps = std::max(1LL, std::llround(span / cfg.dt));
  const double h = span / static_cast<double>(n_steps);

  Trajectory out;
  out.samples.reserve(static_cast<std::size_t>(n_steps) + 1);

  State s{start.r, start.theta};
  const auto record = [&](double t) {
    const PolarVector vel = v.evaluate(s.r, s.theta, t);
    out.samples.push_back({t, s.r, s.theta, std::hypot(vel.v_r, vel.v_theta)});
  };
  record(cfg.t_start);
  for (long long i = 0; i < n_steps; ++i) {
    const double t = cfg.t_start + h * static_cast<double>(i);
    s = cfg.method == StepMethod::rk4 ? rk4_step(v, s, t, h)
                                      : euler_step(v, s, t, h);
    if (!(s.r > 0.0))
      throw std::domain_error("trajectory stepped to a non-positive radius");
    record(cfg.t_start + h * static_cast<double>(i + 1));
  }
  return out;
}

double superluminal_radius(CatalogId velocity, double t, const OscillatorParams& p,
                           double light_speed, RadiusBracket bracket) {
  if (!is_velocity_field(velocity))
    throw std::invalid_argument("superluminal radius needs a velocity field");
  if (dim_of_catalog(velocity) != dims::velocity)
    throw std::invalid_argument(
        "field '" + std::string(catalog_name(velocity)) +
        "' is not dimensionally a velocity; comparing it with c is meaningless");
  if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo))
    throw std::invalid_argument("invalid search bracket");

  const auto excess = [&](double r) {
    const PolarVector v = eval_velocity(velocity, r, t, p);
    return std::hypot(v.v_r, v.v_theta) - light_speed;
  };
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(excess(lo) < 0.0) || !(excess(hi) > 0.0))
    throw std::runtime_error("no light-speed crossing within the search bracket");
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace pilotwave
