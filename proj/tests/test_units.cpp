#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pilotwave/units.hpp"

#include <random>

using namespace pilotwave;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational{2, 4} == Rational{1, 2});
  CHECK(Rational{-2, -4} == Rational{1, 2});
  CHECK(Rational{1, -2} == Rational{-1, 2});
  CHECK(Rational{1, 2} + Rational{1, 3} == Rational{5, 6});
  CHECK(Rational{1, 2} - Rational{1, 2} == Rational{0});
  CHECK(-Rational{3, 4} == Rational{-3, 4});
  CHECK(to_string(Rational{3}) == "3");
  CHECK(to_string(Rational{1, 2}) == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("dimension product sums exponents") {
  const Dimension momentum{1, 1, -1};
  const Dimension inv_action{-1, -2, 1};
  CHECK(momentum * inv_action == Dimension{0, -1, 0});
  CHECK(dims::dimensionless * Dimension{0, 1, -1} == Dimension{0, 1, -1});
  CHECK(Dimension{0, 2, -1} * Dimension{0, -1, 0} == Dimension{0, 1, -1});
}

TEST_CASE("dimension quotient subtracts exponents") {
  // momentum-like numerator over an hbar-like denominator leaves L^-1
  CHECK(Dimension{1, 1, -1} / Dimension{1, 2, -1} == Dimension{0, -1, 0});
  CHECK(dims::scalar_field / dims::length == dims::velocity);
}

TEST_CASE("dimension algebra properties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  const auto random_dim = [&] {
    return Dimension{Rational{num(rng), den(rng)}, Rational{num(rng), den(rng)},
                     Rational{num(rng), den(rng)}};
  };
  for (int i = 0; i < 200; ++i) {
    const Dimension a = random_dim(), b = random_dim(), c = random_dim();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * dims::dimensionless == a);
    CHECK(a / a == dims::dimensionless);
  }
}

TEST_CASE("catalog dimensions") {
  CHECK(dim_of_catalog(CatalogId::InvalidRaw) == Dimension{0, -1, 0});
  CHECK(dim_of_catalog(CatalogId::Corrected) == dims::velocity);
  CHECK(dim_of_catalog(CatalogId::StandardPhi) == dims::scalar_field);

  // every velocity except the raw Born-rule one is a true velocity
  for (CatalogId id : velocity_field_ids()) {
    if (id == CatalogId::InvalidRaw)
      CHECK(dim_of_catalog(id) != dims::velocity);
    else
      CHECK(dim_of_catalog(id) == dims::velocity);
  }
  // every scalar field except the Born rule itself carries L^2 T^-1
  for (CatalogId id : scalar_field_ids()) {
    if (id == CatalogId::BornScalar)
      CHECK(dim_of_catalog(id) == dims::dimensionless);
    else
      CHECK(dim_of_catalog(id) == dims::scalar_field);
  }
}

TEST_CASE("rotated gradient removes one length power in every pair") {
  for (CatalogId phi : scalar_field_ids()) {
    const CatalogId v = generated_velocity(phi);
    CHECK(dim_of_catalog(v) == dim_of_catalog(phi) / dims::length);
    CHECK(generating_scalar(v) == phi);
  }
}

TEST_CASE("dimension formatting") {
  CHECK(to_string(dims::dimensionless) == "1");
  CHECK(to_string(dims::velocity) == "L T^-1");
  CHECK(to_string(dims::scalar_field) == "L^2 T^-1");
  CHECK(to_string(Dimension{0, -1, 0}) == "L^-1");
  CHECK(to_string(dims::action) == "M L^2 T^-1");
  CHECK(to_string(Dimension{0, Rational{1, 2}, 0}) == "L^1/2");
}

TEST_CASE("catalog names round-trip") {
  for (CatalogId id : scalar_field_ids())
    CHECK(parse_catalog_id(catalog_name(id)) == id);
  for (CatalogId id : velocity_field_ids())
    CHECK(parse_catalog_id(catalog_name(id)) == id);
  CHECK(parse_catalog_id("dual-right") == CatalogId::DualRightPhi);
  CHECK(parse_catalog_id("dual-left") == CatalogId::DualLeftPhi);
  CHECK(!parse_catalog_id("no-such-field"));
  CHECK_THROWS_AS(dim_of_catalog(static_cast<CatalogId>(99)),
                  std::invalid_argument);
}
