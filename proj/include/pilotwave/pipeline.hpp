#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pilotwave/catalog.hpp"
#include "pilotwave/fieldcalc.hpp"
#include "pilotwave/physics.hpp"
#include "pilotwave/quadrature.hpp"
#include "pilotwave/units.hpp"

namespace pilotwave {

/// Closed-form value of a catalog scalar field at (r, t).
double eval_scalar(CatalogId id, double r, double t, const OscillatorParams& p);

/// Closed-form value of a catalog velocity at (r, t); purely azimuthal.
PolarVector eval_velocity(CatalogId id, double r, double t,
                          const OscillatorParams& p);

/// Catalog closed forms packaged as descriptors. Scalar fields carry their
/// analytic radial derivative.
ScalarFieldDescriptor scalar_field(CatalogId id, const OscillatorParams& p);
VectorFieldDescriptor velocity_field(CatalogId id, const OscillatorParams& p);

struct DerivationRecord {
  std::string source;
  VectorFieldDescriptor current;   // rotated gradient of the source field
  VectorFieldDescriptor velocity;  // current divided by the Born density
  Dimension dimension;             // of the velocity
  bool dimension_valid = false;    // dimension == L T^-1
};

/// Forward pipeline: scalar field -> divergence-free current -> velocity.
DerivationRecord forward_derive(const ScalarFieldDescriptor& phi,
                                const OscillatorParams& p, FdSteps h = {});

/// Radius beyond which the Born density underflows below 1e-300.
double gaussian_tail_cutoff(const OscillatorParams& p);

/// Reverse pipeline: azimuthal velocity -> current -> quadrature -> scalar
/// field with phi(inf) = 0, so that d phi/dr recovers the current. Rejects
/// fields with radial components or theta dependence.
ScalarFieldDescriptor reverse_derive(const VectorFieldDescriptor& v,
                                     const OscillatorParams& p,
                                     const QuadratureConfig& quad = {});

struct SampleSet {
  std::vector<double> radii;  // m
  std::vector<double> times;  // s
};

/// Radii spanning [0.05, 1] nm and times at one and two and a half periods.
SampleSet default_sample_set(const OscillatorParams& p, int n_radii = 200);

struct PropertyCheck {
  std::string name;
  double max_rel_error = 0;
  double tolerance = 0;
  bool passed = false;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

/// Pointwise catalog identities: the factor-two pairs, the dual-field split,
/// the recombination to the corrected velocity, and the reverse/forward
/// round trip for every dimensionally valid velocity.
PropertyReport check_identities(const OscillatorParams& p, const SampleSet& samples,
                                const QuadratureConfig& quad = {});

struct VerifyOptions {
  int n_radii = 201;
  int random_fields = 100;
  std::uint64_t seed = 12345;
  bool inject_sign_flip = false;  // corrupts one identity, to exercise the failure path
  QuadratureConfig quadrature;
};

/// Full property suite: divergence-free construction (catalog by finite
/// differences, random smooth fields by analytic derivatives), linearity,
/// continuity, dimension verdicts, group velocity, and check_identities.
PropertyReport run_verification(const OscillatorParams& p,
                                const VerifyOptions& opts = {});

/// |a - b| / max(|a|, |b|), zero when both vanish.
double relative_error(double a, double b);

}  // namespace pilotwave
