#pragma once

#include "sfopt/constants.hpp"

namespace sfopt {

// Bulk properties of superfluid 4He near saturated vapor pressure, in the
// millikelvin regime where the normal-fluid fraction is negligible. These are
// the knobs every acoustic/EM/coupling formula reads; defaults describe
// natural-abundance helium after isotopic purification.
struct HeliumProperties {
  double density_kg_m3 = 145.0;      // rho4
  double sound_speed_m_s = 238.0;    // c4, first sound
  double compressibility_per_pa = 1.2e-7;  // kappa = 1/(rho4 c4^2), quoted value
  double epsilon_r = 1.057;          // relative permittivity
  double grueneisen = 2.84;          // Grueneisen parameter of the phonon gas
  double dielectric_loss_max = 1e-10;  // upper bound on tan(delta)
  double he3_fraction = 1e-10;       // x3, 3He number fraction after purification

  // Throws ValidationError naming the offending field.
  void validate() const;
};

// The niobium shell: only the properties the loss budget needs.
struct NiobiumProperties {
  double density_kg_m3 = 8570.0;
  double q_mech = 4e7;  // intrinsic mechanical Q of the substrate

  void validate() const;
};

// Right circular cylinder, shared by the acoustic and microwave cavities
// (the helium fills the niobium can, so both see the same boundary).
struct CylinderGeometry {
  double radius_m = 0.0178;
  double length_m = 0.0395;

  double volume_m3() const;

  void validate() const;
};

// Mass of helium filling the cylinder [kg].
double helium_mass_kg(const CylinderGeometry& geometry, const HeliumProperties& helium);

}  // namespace sfopt
