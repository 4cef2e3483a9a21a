#include "dqd/units.hpp"

namespace dqd {

namespace {
// CODATA 2018
constexpr double kHartreeMeV = 27211.386245988;
constexpr double kBohrNm = 0.052917721090380;
constexpr double kHbarMeVfs = 658.2119569509067; // hbar / (1 meV) in fs
} // namespace

UnitSystem UnitSystem::effective(double mass_ratio, double dielectric_ratio) {
  UnitSystem u;
  u.effective_mass = mass_ratio;
  u.dielectric = dielectric_ratio;
  u.energy_meV = mass_ratio / (dielectric_ratio * dielectric_ratio) * kHartreeMeV;
  u.length_nm = dielectric_ratio / mass_ratio * kBohrNm;
  u.time_fs = kHbarMeVfs / u.energy_meV;
  return u;
}

} // namespace dqd
