#include "pilotwave/catalog.hpp"

#include <stdexcept>

namespace pilotwave {

namespace {

const std::array<CatalogId, 5> kScalarIds = {
    CatalogId::BornScalar, CatalogId::StandardPhi, CatalogId::DualPhi,
    CatalogId::DualLeftPhi, CatalogId::DualRightPhi};

const std::array<CatalogId, 5> kVelocityIds = {
    CatalogId::InvalidRaw, CatalogId::Corrected, CatalogId::Standard,
    CatalogId::RightDual, CatalogId::LeftDual};

}  // namespace

bool is_scalar_field(CatalogId id) {
  switch (id) {
    case CatalogId::BornScalar:
    case CatalogId::StandardPhi:
    case CatalogId::DualPhi:
    case CatalogId::DualLeftPhi:
    case CatalogId::DualRightPhi:
      return true;
    default:
      return false;
  }
}

bool is_velocity_field(CatalogId id) { return !is_scalar_field(id); }

bool depends_on_time(CatalogId id) {
  // Everything except the Born scalar and the raw velocity carries a 1/t
  // factor and is singular at t = 0.
  return id != CatalogId::BornScalar && id != CatalogId::InvalidRaw;
}

std::string_view catalog_name(CatalogId id) {
  switch (id) {
    case CatalogId::BornScalar: return "born";
    case CatalogId::StandardPhi: return "standard-phi";
    case CatalogId::DualPhi: return "dual-phi";
    case CatalogId::DualLeftPhi: return "dual-left-phi";
    case CatalogId::DualRightPhi: return "dual-right-phi";
    case CatalogId::InvalidRaw: return "invalid-raw";
    case CatalogId::Corrected: return "corrected";
    case CatalogId::Standard: return "standard";
    case CatalogId::RightDual: return "right-dual";
    case CatalogId::LeftDual: return "left-dual";
  }
  throw std::invalid_argument("unknown catalog id");
}

std::optional<CatalogId> parse_catalog_id(std::string_view name) {
  for (CatalogId id : kScalarIds)
    if (name == catalog_name(id)) return id;
  for (CatalogId id : kVelocityIds)
    if (name == catalog_name(id)) return id;
  if (name == "born-scalar") return CatalogId::BornScalar;
  if (name == "dual-left") return CatalogId::DualLeftPhi;
  if (name == "dual-right") return CatalogId::DualRightPhi;
  return std::nullopt;
}

CatalogId generated_velocity(CatalogId scalar_field) {
  switch (scalar_field) {
    case CatalogId::BornScalar: return CatalogId::InvalidRaw;
    case CatalogId::StandardPhi: return CatalogId::Standard;
    case CatalogId::DualPhi: return CatalogId::Corrected;
    case CatalogId::DualLeftPhi: return CatalogId::LeftDual;
    case CatalogId::DualRightPhi: return CatalogId::RightDual;
    default:
      throw std::invalid_argument("not a catalog scalar field");
  }
}

CatalogId generating_scalar(CatalogId velocity) {
  switch (velocity) {
    case CatalogId::InvalidRaw: return CatalogId::BornScalar;
    case CatalogId::Standard: return CatalogId::StandardPhi;
    case CatalogId::Corrected: return CatalogId::DualPhi;
    case CatalogId::LeftDual: return CatalogId::DualLeftPhi;
    case CatalogId::RightDual: return CatalogId::DualRightPhi;
    default:
      throw std::invalid_argument("not a catalog velocity field");
  }
}

const std::array<CatalogId, 5>& scalar_field_ids() { return kScalarIds; }
const std::array<CatalogId, 5>& velocity_field_ids() { return kVelocityIds; }

}  // namespace pilotwave
