#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace pilotwave {

// Closed-form scalar fields and velocity fields for the ground-state
// oscillator. Scalar fields generate divergence-free currents through the
// rotated gradient; each one induces exactly one velocity field and vice
// versa.
enum class CatalogId {
  // scalar fields
  BornScalar,    // lambda^2 exp(-2 beta r^2)
  StandardPhi,   // lambda^2 exp(-2 beta r^2) / (4 beta t)
  DualPhi,       // lambda^2 exp(-2 beta r^2) (r^2 + 1/(2 beta)) / t
  DualLeftPhi,   // lambda^2 exp(-2 beta r^2) r^2 / t
  DualRightPhi,  // lambda^2 exp(-2 beta r^2) / (2 beta t)
  // azimuthal velocities
  InvalidRaw,    // -4 beta r
  Corrected,     // -4 beta r^3 / t
  Standard,      // -r / t
  RightDual,     // -2 r / t
  LeftDual,      // 2 r / t - 4 beta r^3 / t
};

bool is_scalar_field(CatalogId id);
bool is_velocity_field(CatalogId id);
bool depends_on_time(CatalogId id);

// Kebab-case identifier used by the CLI and in export file names.
std::string_view catalog_name(CatalogId id);

// Accepts catalog names plus a few aliases ("born-scalar", "dual-left",
// "dual-right"). Returns nullopt for unknown names.
std::optional<CatalogId> parse_catalog_id(std::string_view name);

// phi -> v under the forward pipeline, and v -> phi with phi(inf) = 0.
CatalogId generated_velocity(CatalogId scalar_field);
CatalogId generating_scalar(CatalogId velocity);

const std::array<CatalogId, 5>& scalar_field_ids();
const std::array<CatalogId, 5>& velocity_field_ids();

}  // namespace pilotwave
