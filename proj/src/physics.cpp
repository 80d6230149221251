#include "pilotwave/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace pilotwave {

OscillatorParams params_from_energy(double energy_joules, double mass_kg) {
  if (!(energy_joules > 0.0)) throw std::invalid_argument("energy must be positive");
  if (!(mass_kg > 0.0)) throw std::invalid_argument("mass must be positive");
  OscillatorParams p;
  p.mass = mass_kg;
  p.energy = energy_joules;
  p.omega = 2.0 * energy_joules / constants::hbar;
  p.period = M_PI * constants::hbar / energy_joules;
  p.beta = mass_kg * p.omega / (2.0 * constants::hbar);
  p.lambda_norm = std::pow(mass_kg * p.omega / (M_PI * constants::hbar), 0.25);
  p.quantum_n = 0;
  return p;
}

OscillatorParams params_from_energy_ev(double energy_ev, double mass_kg) {
  return params_from_energy(energy_ev * constants::electron_volt, mass_kg);
}

double psi_ground(double r, const OscillatorParams& p) {
  return p.lambda_norm * std::exp(-p.beta * r * r);
}

double born_density(double r, const OscillatorParams& p) {
  return p.lambda_norm * p.lambda_norm * std::exp(-2.0 * p.beta * r * r);
}

double phase_action(double t, const OscillatorParams& p) {
  return (p.quantum_n + 0.5) * p.omega * t;
}

double group_velocity(const OscillatorParams&) {
  // grad of the spatially constant phase action vanishes.
  return 0.0;
}

}  // namespace pilotwave
