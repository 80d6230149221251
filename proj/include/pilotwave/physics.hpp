#pragma once

namespace pilotwave {

// CODATA 2018 values, SI units.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double light_speed = 2.99792458e8;        // m/s
inline constexpr double electron_volt = 1.602176634e-19;   // J
}  // namespace constants

/// Ground-state oscillator parameters derived from the energy and mass:
///   omega  = 2 E / hbar
///   period = pi hbar / E
///   beta   = m omega / (2 hbar)
///   lambda = (m omega / (pi hbar))^(1/4)
struct OscillatorParams {
  double mass = 0;         // kg
  double energy = 0;       // J
  double omega = 0;        // rad/s
  double period = 0;       // s
  double lambda_norm = 0;  // normalization amplitude
  double beta = 0;         // 1/m^2
  int quantum_n = 0;       // ground state only
};

OscillatorParams params_from_energy(double energy_joules, double mass_kg);
OscillatorParams params_from_energy_ev(double energy_ev,
                                       double mass_kg = constants::electron_mass);

/// Ground-state wavefunction amplitude lambda exp(-beta r^2).
double psi_ground(double r, const OscillatorParams& p);

/// Squared-modulus density lambda^2 exp(-2 beta r^2).
double born_density(double r, const OscillatorParams& p);

/// Phase action (n + 1/2) omega t; spatially constant.
double phase_action(double t, const OscillatorParams& p);

/// Phase-gradient velocity of the unentangled ground state: identically zero.
double group_velocity(const OscillatorParams& p);

}  // namespace pilotwave
