#include <doctest.h>

#include "testutil.hpp"

#include "sfopt/errors.hpp"
#include "sfopt/materials.hpp"

using namespace sfopt;

TEST_CASE("default cell volume and helium fill mass") {
  const CylinderGeometry geom{};
  const HeliumProperties he{};
  CHECK(geom.volume_m3() == rel(3.9317597546354e-5, 1e-12));
  CHECK(helium_mass_kg(geom, he) == rel(5.7010516442213e-3, 1e-12));
}

TEST_CASE("default material constants are as documented") {
  const HeliumProperties he{};
  CHECK(he.density_kg_m3 == 145.0);
  CHECK(he.sound_speed_m_s == 238.0);
  CHECK(he.compressibility_per_pa == 1.2e-7);
  CHECK(he.epsilon_r == 1.057);
  CHECK(he.grueneisen == 2.84);
  CHECK(he.dielectric_loss_max == 1e-10);
  CHECK(he.he3_fraction == 1e-10);
  const NiobiumProperties nb{};
  CHECK(nb.density_kg_m3 == 8570.0);
  CHECK(nb.q_mech == 4e7);
  const CylinderGeometry geom{};
  CHECK(geom.radius_m == 0.0178);
  CHECK(geom.length_m == 0.0395);
}

TEST_CASE("validation rejects non-physical values and names the field") {
  CylinderGeometry geom{};
  geom.radius_m = -1.0;
  try {
    geom.validate();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "geometry.radius_m");
  }

  HeliumProperties he{};
  he.epsilon_r = 1.0;  // vacuum permittivity is not a dielectric fill
  CHECK_THROWS_AS(he.validate(), ValidationError);
  he = HeliumProperties{};
  he.he3_fraction = 1.5;
  CHECK_THROWS_AS(he.validate(), ValidationError);
  he = HeliumProperties{};
  he.dielectric_loss_max = -1e-12;
  CHECK_THROWS_AS(he.validate(), ValidationError);
  he = HeliumProperties{};
  he.sound_speed_m_s = 0.0;
  CHECK_THROWS_AS(he.validate(), ValidationError);

  NiobiumProperties nb{};
  nb.q_mech = -4e7;
  CHECK_THROWS_AS(nb.validate(), ValidationError);
}

TEST_CASE("mass scales linearly with density and volume") {
  CylinderGeometry geom{};
  HeliumProperties he{};
  const double base = helium_mass_kg(geom, he);
  he.density_kg_m3 *= 2.0;
  CHECK(helium_mass_kg(geom, he) == rel(2.0 * base, 1e-15));
  he = HeliumProperties{};
  geom.length_m *= 3.0;
  CHECK(helium_mass_kg(geom, he) == rel(3.0 * base, 1e-15));
}
