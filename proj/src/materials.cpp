#include "sfopt/materials.hpp"

#include <cmath>

#include "sfopt/errors.hpp"

namespace sfopt {

namespace {

void require_positive_finite(double value, const char* field) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(field, "must be a positive finite number");
  }
}

}  // namespace

void HeliumProperties::validate() const {
  require_positive_finite(density_kg_m3, "helium.density_kg_m3");
  require_positive_finite(sound_speed_m_s, "helium.sound_speed_m_s");
  require_positive_finite(compressibility_per_pa, "helium.compressibility_per_pa");
  if (!std::isfinite(epsilon_r) || epsilon_r <= 1.0) {
    throw ValidationError("helium.epsilon_r",
                          "must exceed 1 (the fluid is denser than vacuum)");
  }
  require_positive_finite(grueneisen, "helium.grueneisen");
  if (!std::isfinite(dielectric_loss_max) || dielectric_loss_max < 0.0) {
    throw ValidationError("helium.dielectric_loss_max", "must be >= 0");
  }
  if (!std::isfinite(he3_fraction) || he3_fraction < 0.0 || he3_fraction > 1.0) {
    throw ValidationError("helium.he3_fraction", "must lie in [0, 1]");
  }
}

void NiobiumProperties::validate() const {
  require_positive_finite(density_kg_m3, "niobium.density_kg_m3");
  require_positive_finite(q_mech, "niobium.q_mech");
}

double CylinderGeometry::volume_m3() const {
  return constants::kPi * radius_m * radius_m * length_m;
}

void CylinderGeometry::validate() const {
  require_positive_finite(radius_m, "geometry.radius_m");
  require_positive_finite(length_m, "geometry.length_m");
}

double helium_mass_kg(const CylinderGeometry& geometry, const HeliumProperties& helium) {
  geometry.validate();
  helium.validate();
  return helium.density_kg_m3 * geometry.volume_m3();
}

}  // namespace sfopt
