#ifndef DQD_UNITS_HPP
#define DQD_UNITS_HPP

namespace dqd {

/// Effective atomic units for a semiconductor with effective mass m*/m0
/// and relative dielectric constant eps/eps0.  One energy unit is
/// E_h* = (m*/m0)/(eps/eps0)^2 * E_h, one length unit is
/// a0* = (eps/eps0)/(m*/m0) * a0, and one time unit is t0* = hbar/E_h*.
struct UnitSystem {
  double energy_meV;     ///< E_h* in meV
  double length_nm;      ///< a0* in nm
  double time_fs;        ///< t0* in fs
  double effective_mass; ///< m*/m0
  double dielectric;     ///< eps/eps0

  /// Derive the effective units from material parameters.
  static UnitSystem effective(double mass_ratio, double dielectric_ratio);

  /// GaAs conduction band: m* = 0.067 m0, eps = 12.7 eps0.
  /// Gives roughly 11 meV, 10 nm, 60 fs.
  static UnitSystem gaas() { return effective(0.067, 12.7); }
};

} // namespace dqd

#endif
