#include "pilotwave/fieldcalc.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace pilotwave {

namespace {

// Five-point central difference, O(h^4). Grouped as paired differences so
// that symmetric stencils cancel exactly when the field is constant along x.
template <typename F>
double fd5(const F& f, double x, double h) {
  const double inner = f(x + h) - f(x - h);
  const double outer = f(x + 2 * h) - f(x - 2 * h);
  return (8 * inner - outer) / (12 * h);
}

void require_positive_radius(double r) {
  if (!(r > 0.0)) throw std::domain_error("polar operators require r > 0");
}

void require_fd_radius(double r, double h) {
  if (!(r > 2.0 * h))
    throw std::domain_error("radius too small for the radial difference step");
}

double checked(double value, const std::string& name) {
  if (!std::isfinite(value))
    throw std::runtime_error("field '" + name + "' produced a non-finite value");
  return value;
}

double radial_derivative_of(const ScalarFieldDescriptor& phi, double r,
                            double theta, double t, double h) {
  if (phi.radial_derivative) return phi.radial_derivative(r, theta, t);
  require_fd_radius(r, h);
  return fd5([&](double rr) { return phi.evaluate(rr, theta, t); }, r, h);
}

double azimuthal_derivative_of(const ScalarFieldDescriptor& phi, double r,
                               double theta, double t, double h) {
  if (phi.azimuthal_derivative) return phi.azimuthal_derivative(r, theta, t);
  return fd5([&](double th) { return phi.evaluate(r, th, t); }, theta, h);
}

}  // namespace

PolarVector gradient_polar(const ScalarFieldDescriptor& phi, PolarPoint p,
                           double t, FdSteps h) {
  require_positive_radius(p.r);
  const double dr = radial_derivative_of(phi, p.r, p.theta, t, h.radial);
  const double dth = azimuthal_derivative_of(phi, p.r, p.theta, t, h.azimuthal);
  return {checked(dr, phi.name), checked(dth, phi.name) / p.r};
}

PolarVector rotated_gradient(const ScalarFieldDescriptor& phi, PolarPoint p,
                             double t, FdSteps h) {
  const PolarVector g = gradient_polar(phi, p, t, h);
  return {-g.v_theta, g.v_r};
}

VectorFieldDescriptor rotated_gradient_field(const ScalarFieldDescriptor& phi,
                                             FdSteps h) {
  VectorFieldDescriptor field;
  field.name = "rot-grad(" + phi.name + ")";
  field.evaluate = [phi, h](double r, double theta, double t) {
    return rotated_gradient(phi, {r, theta}, t, h);
  };
  if (phi.mixed_derivative) {
    // J_r = -(1/r) d phi/dtheta, so d(r J_r)/dr is minus the mixed partial;
    // J_theta = d phi/dr, so its theta derivative is the same mixed partial.
    field.radial_flux_derivative = [phi](double r, double theta, double t) {
      return -phi.mixed_derivative(r, theta, t);
    };
    field.azimuthal_derivative = phi.mixed_derivative;
  }
  field.dimension = phi.dimension / dims::length;
  return field;
}

double divergence_polar(const VectorFieldDescriptor& field, PolarPoint p,
                        double t, FdSteps h) {
  require_positive_radius(p.r);
  double radial_term;
  if (field.radial_flux_derivative) {
    radial_term = field.radial_flux_derivative(p.r, p.theta, t);
  } else {
    require_fd_radius(p.r, h.radial);
    radial_term = fd5(
        [&](double rr) { return rr * field.evaluate(rr, p.theta, t).v_r; },
        p.r, h.radial);
  }
  double azimuthal_term;
  if (field.azimuthal_derivative) {
    azimuthal_term = field.azimuthal_derivative(p.r, p.theta, t);
  } else {
    azimuthal_term = fd5(
        [&](double th) { return field.evaluate(p.r, th, t).v_theta; },
        p.theta, h.azimuthal);
  }
  return checked((radial_term + azimuthal_term) / p.r, field.name);
}

double continuity_residual(const std::function<double(double r, double t)>& rho,
                           const VectorFieldDescriptor& current, PolarPoint p,
                           double t, FdSteps h) {
  const double ht = 1e-3 * std::max(std::abs(t), 1e-30);
  const double drho_dt = fd5([&](double tt) { return rho(p.r, tt); }, t, ht);
  return drho_dt + divergence_polar(current, p, t, h);
}

ScalarFieldDescriptor linear_combination(double a, const ScalarFieldDescriptor& phi1,
                                         double b, const ScalarFieldDescriptor& phi2) {
  ScalarFieldDescriptor out;
  out.name = phi1.name + "+" + phi2.name;
  out.evaluate = [a, f1 = phi1.evaluate, b, f2 = phi2.evaluate](
                     double r, double th, double t) {
    return a * f1(r, th, t) + b * f2(r, th, t);
  };
  const auto combine = [a, b](const FieldFn& d1, const FieldFn& d2) -> FieldFn {
    if (!d1 || !d2) return nullptr;
    return [a, b, d1, d2](double r, double th, double t) {
      return a * d1(r, th, t) + b * d2(r, th, t);
    };
  };
  out.radial_derivative = combine(phi1.radial_derivative, phi2.radial_derivative);
  out.azimuthal_derivative =
      combine(phi1.azimuthal_derivative, phi2.azimuthal_derivative);
  out.mixed_derivative = combine(phi1.mixed_derivative, phi2.mixed_derivative);
  out.dimension = phi1.dimension;
  return out;
}

ScalarFieldDescriptor make_random_smooth_field(std::mt19937_64& rng,
                                               double r_scale) {
  struct Term {
    double coeff;
    int power;      // radial exponent, 0..4
    int harmonic;   // azimuthal wavenumber, 0..3
    double phase;
  };
  std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> power_dist(0, 4);
  std::uniform_int_distribution<int> harmonic_dist(0, 3);

  auto terms = std::make_shared<std::vector<Term>>();
  for (int i = 0; i < 4; ++i)
    terms->push_back({coeff_dist(rng), power_dist(rng), harmonic_dist(rng),
                      phase_dist(rng)});

  ScalarFieldDescriptor phi;
  phi.name = "random-smooth";
  phi.dimension = dims::scalar_field;
  phi.evaluate = [terms, r_scale](double r, double th, double) {
    double sum = 0;
    for (const Term& q : *terms)
      sum += q.coeff * std::pow(r / r_scale, q.power) *
             std::cos(q.harmonic * th + q.phase);
    return sum;
  };
  phi.radial_derivative = [terms, r_scale](double r, double th, double) {
    double sum = 0;
    for (const Term& q : *terms) {
      if (q.power == 0) continue;
      sum += q.coeff * q.power * std::pow(r / r_scale, q.power - 1) / r_scale *
             std::cos(q.harmonic * th + q.phase);
    }
    return sum;
  };
  phi.azimuthal_derivative = [terms, r_scale](double r, double th, double) {
    double sum = 0;
    for (const Term& q : *terms)
      sum -= q.coeff * q.harmonic * std::pow(r / r_scale, q.power) *
             std::sin(q.harmonic * th + q.phase);
    return sum;
  };
  phi.mixed_derivative = [terms, r_scale](double r, double th, double) {
    double sum = 0;
    for (const Term& q : *terms) {
      if (q.power == 0) continue;
      sum -= q.coeff * q.power * q.harmonic *
             std::pow(r / r_scale, q.power - 1) / r_scale *
             std::sin(q.harmonic * th + q.phase);
    }
    return sum;
  };
  return phi;
}

}  // namespace pilotwave
