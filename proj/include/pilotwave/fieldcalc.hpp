#pragma once

#include <functional>
#include <random>
#include <string>

#include "pilotwave/units.hpp"

namespace pilotwave {

// Position on the punctured plane; polar operators are singular at r = 0.
struct PolarPoint {
  double r = 0;      // m
  double theta = 0;  // rad
};

// Vector components along the local r-hat / theta-hat frame.
struct PolarVector {
  double v_r = 0;
  double v_theta = 0;
};

// Steps for the fourth-order central-difference stencils.
struct FdSteps {
  double radial = 1e-12;   // m
  double azimuthal = 1e-6;  // rad
};

using FieldFn = std::function<double(double r, double theta, double t)>;
using VectorFn = std::function<PolarVector(double r, double theta, double t)>;

// A named evaluable scalar field. Analytic derivative callbacks are optional;
// when absent the operators below fall back to central differences.
struct ScalarFieldDescriptor {
  std::string name;
  FieldFn evaluate;
  FieldFn radial_derivative;     // d phi / dr
  FieldFn azimuthal_derivative;  // d phi / dtheta
  FieldFn mixed_derivative;      // d2 phi / (dr dtheta)
  Dimension dimension;
};

struct VectorFieldDescriptor {
  std::string name;
  VectorFn evaluate;
  FieldFn radial_flux_derivative;  // d(r F_r)/dr, used by divergence_polar
  FieldFn azimuthal_derivative;    // d F_theta / dtheta
  Dimension dimension;
};

/// (d phi/dr, (1/r) d phi/dtheta).
PolarVector gradient_polar(const ScalarFieldDescriptor& phi, PolarPoint p,
                           double t, FdSteps h = {});

/// The gradient rotated a quarter turn: (-(1/r) d phi/dtheta, d phi/dr).
/// This is the curl of the out-of-plane potential -phi, hence divergence free.
PolarVector rotated_gradient(const ScalarFieldDescriptor& phi, PolarPoint p,
                             double t, FdSteps h = {});

/// rotated_gradient packaged as a field; carries analytic divergence hooks
/// when phi provides a mixed derivative.
VectorFieldDescriptor rotated_gradient_field(const ScalarFieldDescriptor& phi,
                                             FdSteps h = {});

/// (1/r) d(r F_r)/dr + (1/r) d F_theta/dtheta.
double divergence_polar(const VectorFieldDescriptor& field, PolarPoint p,
                        double t, FdSteps h = {});

/// d(rho)/dt + div J; zero for a stationary density with divergence-free J.
double continuity_residual(const std::function<double(double r, double t)>& rho,
                           const VectorFieldDescriptor& current, PolarPoint p,
                           double t, FdSteps h = {});

/// a*phi1 + b*phi2 with analytic derivatives combined where both sides have them.
ScalarFieldDescriptor linear_combination(double a, const ScalarFieldDescriptor& phi1,
                                         double b, const ScalarFieldDescriptor& phi2);

/// Random test field: four terms of c (r/r_scale)^p trig(m theta + phase)
/// with p in 0..4 and m in 0..3, all analytic derivatives attached.
ScalarFieldDescriptor make_random_smooth_field(std::mt19937_64& rng,
                                               double r_scale = 1e-9);

}  // namespace pilotwave
