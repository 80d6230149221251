#include "pilotwave/units.hpp"

namespace pilotwave {

std::string to_string(Rational q) {
  std::string s = std::to_string(q.num);
  if (q.den != 1) s += "/" + std::to_string(q.den);
  return s;
}

std::string to_string(const Dimension& d) {
  std::string out;
  const auto append = [&out](const char* symbol, Rational exp) {
    if (exp == Rational{0}) return;
    if (!out.empty()) out += ' ';
    out += symbol;
    if (!(exp == Rational{1})) out += "^" + to_string(exp);
  };
  append("M", d.mass);
  append("L", d.length);
  append("T", d.time);
  return out.empty() ? "1" : out;
}

Dimension dim_of_catalog(CatalogId id) {
  using namespace dims;
  // m omega r over hbar, the structure of the raw curl-derived velocity.
  const Dimension momentum_over_action =
      mass * angular_frequency * length / action;
  switch (id) {
    case CatalogId::BornScalar:
      return dimensionless;
    case CatalogId::StandardPhi:
    case CatalogId::DualRightPhi:
      // hbar / (m omega t)
      return action / (mass * angular_frequency * time);
    case CatalogId::DualLeftPhi:
    case CatalogId::DualPhi:
      // r^2 / t
      return length * length / time;
    case CatalogId::InvalidRaw:
      return momentum_over_action;  // L^-1
    case CatalogId::Corrected:
      // m omega r^3 / (hbar t)
      return momentum_over_action * length * length / time;
    case CatalogId::Standard:
    case CatalogId::RightDual:
    case CatalogId::LeftDual:
      return length / time;
  }
  throw std::invalid_argument("unknown catalog id");
}

}  // namespace pilotwave
