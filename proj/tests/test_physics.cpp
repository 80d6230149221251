#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pilotwave/physics.hpp"

#include <cmath>
#include <random>

using namespace pilotwave;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("one electron volt electron parameters") {
  const OscillatorParams p = params_from_energy_ev(1.0);
  CHECK(rel(p.omega, 3038534897619021.0) < 1e-12);
  CHECK(rel(p.period, 2.0678338471949278e-15) < 1e-12);
  CHECK(rel(p.beta, 1.3123421196457824e19) < 1e-12);
  CHECK(rel(p.lambda_norm, 53762.78993769708) < 1e-12);
  CHECK(p.quantum_n == 0);
}

TEST_CASE("parameter relations hold for randomized inputs") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> energy(0.1, 10.0);  // eV
  std::uniform_real_distribution<double> mass_scale(0.1, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double m = mass_scale(rng) * constants::electron_mass;
    const OscillatorParams p = params_from_energy_ev(energy(rng), m);
    CHECK(rel(p.omega, 2.0 * p.energy / constants::hbar) < 1e-14);
    CHECK(rel(p.period, M_PI * constants::hbar / p.energy) < 1e-14);
    CHECK(rel(p.beta, p.mass * p.omega / (2.0 * constants::hbar)) < 1e-14);
    const double lam4 = p.lambda_norm * p.lambda_norm * p.lambda_norm * p.lambda_norm;
    CHECK(rel(lam4, p.mass * p.omega / (M_PI * constants::hbar)) < 1e-14);
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(params_from_energy(0.0, constants::electron_mass),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_energy(-1.0, constants::electron_mass),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_energy(constants::electron_volt, 0.0),
                  std::invalid_argument);
}

TEST_CASE("ground-state wavefunction") {
  const OscillatorParams p = params_from_energy_ev(1.0);
  CHECK(psi_ground(0.0, p) == p.lambda_norm);
  CHECK(rel(psi_ground(1e-9, p), 0.10741189740660526) < 1e-12);
  // even in r and decaying monotonically
  for (double r : {1e-11, 5e-11, 2e-10, 8e-10}) {
    CHECK(psi_ground(r, p) == psi_ground(-r, p));
    CHECK(psi_ground(2.0 * r, p) < psi_ground(r, p));
  }
  CHECK(psi_ground(1e-6, p) == 0.0);  // Gaussian tail underflows to zero
}

TEST_CASE("Born density is the squared amplitude") {
  const OscillatorParams p = params_from_energy_ev(1.0);
  CHECK(born_density(0.0, p) == p.lambda_norm * p.lambda_norm);
  CHECK(rel(born_density(1e-9, p), 0.011537315704487093) < 1e-12);
  for (double r : {1e-11, 7e-11, 3e-10, 9.5e-10}) {
    const double psi = psi_ground(r, p);
    CHECK(rel(born_density(r, p), psi * psi) < 1e-14);
    CHECK(born_density(r, p) > 0.0);
    CHECK(born_density(r, p) == born_density(-r, p));
    CHECK(born_density(1.5 * r, p) < born_density(r, p));
  }
}

TEST_CASE("phase action is linear in time and zero at t = 0") {
  const OscillatorParams p = params_from_energy_ev(1.0);
  CHECK(phase_action(0.0, p) == 0.0);
  // half of omega times the period is exactly pi for the ground state
  CHECK(rel(phase_action(p.period, p), M_PI) < 1e-14);
  CHECK(rel(phase_action(2.0 * p.period, p), 2.0 * M_PI) < 1e-14);
}

TEST_CASE("group velocity vanishes identically") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> energy(0.05, 20.0);
  for (int i = 0; i < 100; ++i) {
    const OscillatorParams p = params_from_energy_ev(energy(rng));
    CHECK(group_velocity(p) == 0.0);
  }
}
